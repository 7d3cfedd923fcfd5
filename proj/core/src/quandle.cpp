#include "quandle/quandle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace qdl {

static void check_table_shape(const Table& t) {
    const int k = static_cast<int>(t.size());
    if (k == 0) throw format_error("empty table");
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != k)
            throw format_error("table is not square");
        for (int v : row)
            if (v < 0 || v >= k)
                throw format_error("table entry out of range: " + std::to_string(v));
    }
}

Classification FiniteQuandle::classify(const Table& t) {
    check_table_shape(t);
    const int k = static_cast<int>(t.size());
    bool shelf = true, idem = true, bij = true, invol = true;
    for (int a = 0; a < k && shelf; ++a)
        for (int b = 0; b < k && shelf; ++b)
            for (int c = 0; c < k; ++c)
                if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) { shelf = false; break; }
    for (int a = 0; a < k; ++a)
        if (t[a][a] != a) { idem = false; break; }
    for (int b = 0; b < k && bij; ++b) {
        std::vector<char> seen(k, 0);
        for (int a = 0; a < k; ++a) seen[t[a][b]] = 1;
        bij = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    }
    for (int a = 0; a < k && invol; ++a)
        for (int b = 0; b < k; ++b)
            if (t[t[a][b]][b] != a) { invol = false; break; }
    Classification c;
    c.shelf = shelf;
    c.spindle = shelf && idem;
    c.rack = shelf && bij;
    c.quandle = c.rack && idem;
    c.kei = c.quandle && invol;
    return c;
}

FiniteQuandle::FiniteQuandle(Table table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
    cls_ = classify(table_);
    if (cls_.rack) {
        const int k = size();
        inverse_.assign(k, std::vector<int>(k, 0));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                inverse_[table_[a][b]][b] = a;  // (a*b) ̄*b = a
    }
}

int FiniteQuandle::inv_op(int a, int b) const {
    require_rack("inverse operation");
    return inverse_[a][b];
}

void FiniteQuandle::require_shelf(const char* what) const {
    if (!cls_.shelf)
        throw precondition_error(std::string(what) + " requires a shelf; self-distributivity fails");
}
void FiniteQuandle::require_spindle(const char* what) const {
    if (!cls_.spindle)
        throw precondition_error(std::string(what) + " requires a spindle (shelf + idempotent)");
}
void FiniteQuandle::require_rack(const char* what) const {
    if (!cls_.rack)
        throw precondition_error(std::string(what) + " requires a rack (shelf + invertible columns)");
}
void FiniteQuandle::require_quandle(const char* what) const {
    if (!cls_.quandle)
        throw precondition_error(std::string(what) + " requires a quandle");
}
void FiniteQuandle::require_kei(const char* what) const {
    if (!cls_.kei)
        throw precondition_error(std::string(what) + " requires a kei (involutive quandle)");
}

std::string FiniteQuandle::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["order"] = size();
    j["table"] = table_;
    return j.dump(1);
}

FiniteQuandle FiniteQuandle::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("bad quandle JSON: ") + e.what());
    }
    if (!j.contains("table")) throw format_error("quandle JSON missing \"table\"");
    Table t;
    try {
        t = j["table"].get<Table>();
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("bad quandle table: ") + e.what());
    }
    std::string name = j.value("name", std::string{});
    if (j.contains("order") && j["order"].get<int>() != static_cast<int>(t.size()))
        throw format_error("quandle JSON: order does not match table size");
    return FiniteQuandle(std::move(t), std::move(name));
}

FiniteQuandle make_trivial(int k) {
    if (k < 1) throw parameter_error("trivial(k) needs k >= 1");
    Table t(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a][b] = a;
    return FiniteQuandle(std::move(t), "trivial:" + std::to_string(k));
}

FiniteQuandle make_dihedral(int k) {
    if (k < 1) throw parameter_error("dihedral(k) needs k >= 1");
    Table t(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a][b] = ((2 * b - a) % k + k) % k;
    return FiniteQuandle(std::move(t), "dihedral:" + std::to_string(k));
}

FiniteQuandle make_takasaki(int k) {
    auto t = make_dihedral(k).table();
    return FiniteQuandle(std::move(t), "takasaki:" + std::to_string(k));
}

FiniteQuandle make_alexander(int m, int t) {
    if (m < 1) throw parameter_error("alexander(m,t) needs m >= 1");
    t = ((t % m) + m) % m;
    if (std::gcd(t, m) != 1)
        throw parameter_error("alexander(m,t): t must be invertible mod m");
    Table tab(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            tab[a][b] = ((t * a + (1 - t) * b) % m + m) % m;
    return FiniteQuandle(std::move(tab),
                         "alexander:" + std::to_string(m) + ":" + std::to_string(t));
}

FiniteQuandle make_conjugation(const Table& g, const std::string& name) {
    check_table_shape(g);
    const int k = static_cast<int>(g.size());
    // identity: the unique e with g[e][x] = x for all x
    int e = -1;
    for (int cand = 0; cand < k; ++cand) {
        bool ok = true;
        for (int x = 0; x < k; ++x)
            if (g[cand][x] != x || g[x][cand] != x) { ok = false; break; }
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw parameter_error("conjugation: table has no identity element");
    std::vector<int> inv(k, -1);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (g[a][b] == e) inv[a] = b;
    for (int a = 0; a < k; ++a)
        if (inv[a] < 0) throw parameter_error("conjugation: table has no inverses");
    Table t(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            t[a][b] = g[g[inv[b]][a]][b];  // b^-1 a b
    return FiniteQuandle(std::move(t), name);
}

Table group_table_s3() {
    // permutations of {0,1,2} in lex order: id,(12),(01),(012),(021),(02)
    static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int* p) {
        for (int i = 0; i < 6; ++i)
            if (perm[i][0] == p[0] && perm[i][1] == p[1] && perm[i][2] == p[2]) return i;
        return -1;
    };
    Table g(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perm[a][perm[b][x]];
            g[a][b] = index_of(comp);
        }
    return g;
}

Table group_table_z4() {
    Table g(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) g[a][b] = (a + b) % 4;
    return g;
}

bool XSet::is_shelf_set(const FiniteQuandle& q) const {
    const int k = q.size();
    for (const auto& row : action)
        if (static_cast<int>(row.size()) != k) return false;
    const int m = carrier_size();
    for (const auto& row : action)
        for (int v : row)
            if (v < 0 || v >= m) return false;
    for (int e = 0; e < m; ++e)
        for (int x1 = 0; x1 < k; ++x1)
            for (int x2 = 0; x2 < k; ++x2)
                if (action[action[e][x1]][x2] != action[action[e][x2]][q.op(x1, x2)])
                    return false;
    return true;
}

bool XSet::is_rack_set() const {
    const int m = carrier_size();
    if (m == 0) return true;
    const int k = static_cast<int>(action[0].size());
    for (int x = 0; x < k; ++x) {
        std::vector<char> seen(m, 0);
        for (int e = 0; e < m; ++e) seen[action[e][x]] = 1;
        if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }))
            return false;
    }
    return true;
}

void XSet::validate(const FiniteQuandle& q) const {
    if (!is_shelf_set(q))
        throw parameter_error("action violates the shelf-set law");
}

XSet self_xset(const FiniteQuandle& q) {
    XSet e;
    e.action = q.table();
    return e;
}

std::vector<std::vector<int>> right_orbits(const std::vector<std::vector<int>>& action) {
    const int m = static_cast<int>(action.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < m; ++e)
        for (int v : action[e]) parent[find(e)] = find(v);
    std::vector<std::vector<int>> blocks(m);
    for (int e = 0; e < m; ++e) blocks[find(e)].push_back(e);
    std::vector<std::vector<int>> out;
    for (auto& b : blocks)
        if (!b.empty()) out.push_back(std::move(b));
    std::sort(out.begin(), out.end());
    return out;
}

FiniteQuandle union_with_xset(const FiniteQuandle& q, const XSet& e) {
    e.validate(q);
    const int k = q.size(), m = e.carrier_size();
    const int n = k + m;
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b >= k) t[a][b] = a;                          // a*e = a
            else if (a < k) t[a][b] = q.op(a, b);             // inside X
            else t[a][b] = k + e.action[a - k][b];            // carrier acted by X
        }
    return FiniteQuandle(std::move(t), q.name() + "+xset");
}

std::vector<FiniteQuandle> catalog() {
    std::vector<FiniteQuandle> out;
    for (int k = 1; k <= 6; ++k) out.push_back(make_trivial(k));
    for (int k = 2; k <= 9; ++k) out.push_back(make_dihedral(k));
    for (int m = 2; m <= 8; ++m)
        for (int t = 1; t < m; ++t)
            if (std::gcd(t, m) == 1) out.push_back(make_alexander(m, t));
    out.push_back(make_conjugation(group_table_s3(), "conj:s3"));
    out.push_back(make_conjugation(group_table_z4(), "conj:z4"));
    return out;
}

FiniteQuandle parse_quandle_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw parameter_error("empty quandle spec");
    const std::string& name = parts[0];
    auto want = [&](size_t n) {
        if (parts.size() != n + 1)
            throw parameter_error("quandle spec '" + name + "' takes " +
                                  std::to_string(n) + " parameter(s)");
    };
    auto num = [&](size_t i) {
        try {
            return std::stoi(parts.at(i));
        } catch (const std::exception&) {
            throw parameter_error("bad number in quandle spec: " + spec);
        }
    };
    if (name == "file") {
        if (parts.size() < 2) throw parameter_error("file: needs a path");
        std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw parameter_error("cannot open quandle file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return FiniteQuandle::from_json(buf.str());
    }
    if (name == "trivial") { want(1); return make_trivial(num(1)); }
    if (name == "dihedral") { want(1); return make_dihedral(num(1)); }
    if (name == "takasaki") { want(1); return make_takasaki(num(1)); }
    if (name == "alexander") { want(2); return make_alexander(num(1), num(2)); }
    if (name == "conj") {
        want(1);
        if (parts[1] == "s3") return make_conjugation(group_table_s3(), "conj:s3");
        if (parts[1] == "z4") return make_conjugation(group_table_z4(), "conj:z4");
        throw parameter_error("conj: unknown group '" + parts[1] + "' (s3, z4)");
    }
    throw parameter_error("unknown quandle spec: " + spec);
}

} // namespace qdl
