#pragma once
#include <string>
#include <vector>

#include "quandle/errors.hpp"

namespace qdl {

// Cumulative axiom flags for a finite magma given by its Cayley table.
//   shelf:   (a*b)*c = (a*c)*(b*c)
//   spindle: shelf + a*a = a
//   rack:    shelf + every column b: a -> a*b bijective
//   quandle: rack + spindle
//   kei:     quandle + (a*b)*b = a
struct Classification {
    bool shelf = false;
    bool spindle = false;
    bool rack = false;
    bool quandle = false;
    bool kei = false;
    bool operator==(const Classification&) const = default;
};

using Table = std::vector<std::vector<int>>;

class FiniteQuandle {
public:
    explicit FiniteQuandle(Table table, std::string name = "");

    int size() const { return static_cast<int>(table_.size()); }
    int op(int a, int b) const { return table_[a][b]; }
    // a "inverse-star" b: the unique x with x*b = a.  Requires rack.
    int inv_op(int a, int b) const;
    const Table& table() const { return table_; }
    const Classification& cls() const { return cls_; }
    const std::string& name() const { return name_; }

    void require_shelf(const char* what) const;
    void require_spindle(const char* what) const;
    void require_rack(const char* what) const;
    void require_quandle(const char* what) const;
    void require_kei(const char* what) const;

    static Classification classify(const Table& table);

    std::string to_json() const;
    static FiniteQuandle from_json(const std::string& text);

private:
    Table table_;
    Table inverse_;  // populated iff rack
    Classification cls_;
    std::string name_;
};

FiniteQuandle make_trivial(int k);
FiniteQuandle make_dihedral(int k);
FiniteQuandle make_takasaki(int k);  // same table as dihedral
FiniteQuandle make_alexander(int m, int t);  // a*b = t a + (1-t) b mod m
// conjugation quandle a*b = b^-1 a b of a finite group given by its
// multiplication table
FiniteQuandle make_conjugation(const Table& group, const std::string& name);

Table group_table_s3();
Table group_table_z4();

// A right X-set: carrier {0..m-1} with action[e][x] = e*x over Q.
struct XSet {
    std::vector<std::vector<int>> action;  // m x k
    int carrier_size() const { return static_cast<int>(action.size()); }
    // shelf-set law (e*x1)*x2 = (e*x2)*(x1*x2)
    bool is_shelf_set(const FiniteQuandle& q) const;
    // each e -> e*x a bijection of the carrier
    bool is_rack_set() const;
    void validate(const FiniteQuandle& q) const;  // throws unless shelf-set
};

XSet self_xset(const FiniteQuandle& q);

// Orbit partition of {0..m-1} under all maps e -> action[e][x].
// Blocks and their contents are sorted; the representative of a block is
// its least element.
std::vector<std::vector<int>> right_orbits(const std::vector<std::vector<int>>& action);

// Quandle on X ⊔ E: the given table and action, and a*e = a for all a
// and e in E (Obs: adjoined elements act trivially on the right).
FiniteQuandle union_with_xset(const FiniteQuandle& q, const XSet& e);

// Shipped catalog: trivial(k) k<=6, dihedral(k) k<=9, Alexander on Z_m
// (m<=8, every unit t), conjugation quandles of S3 and Z4.
std::vector<FiniteQuandle> catalog();

// Mini-grammar name[:param]*, e.g. "dihedral:3", "alexander:5:2",
// "conj:s3", "file:path.json".
FiniteQuandle parse_quandle_spec(const std::string& spec);

} // namespace qdl
