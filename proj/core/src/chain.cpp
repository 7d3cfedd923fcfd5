#include "quandle/chain.hpp"

#include <algorithm>
#include <cstdlib>

#include <json.hpp>

namespace qdl {

Theory theory_from_string(const std::string& s) {
    if (s == "R" || s == "r") return Theory::R;
    if (s == "D" || s == "d") return Theory::D;
    if (s == "Q" || s == "q") return Theory::Q;
    throw parameter_error("unknown theory '" + s + "' (expected R, D or Q)");
}

std::string theory_name(Theory t) {
    switch (t) {
        case Theory::R: return "R";
        case Theory::D: return "D";
        default: return "Q";
    }
}

std::uint64_t pack_tuple(const std::vector<int>& t, int k) {
    std::uint64_t key = 0;
    for (int x : t) key = key * k + x;
    return key;
}

std::vector<int> unpack_tuple(std::uint64_t key, int n, int k) {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
        t[i] = static_cast<int>(key % k);
        key /= k;
    }
    return t;
}

bool tuple_degenerate(const std::vector<int>& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

std::uint64_t max_basis_guard() {
    if (const char* env = std::getenv("QUANDLE_MAX_BASIS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxBasis;
}

void ComplexSpec::validate() const {
    if (!q) throw precondition_error("complex spec has no quandle");
    if (theory != Theory::R)
        q->require_spindle("degenerate/quandle theory");
    else
        q->require_shelf("rack theory");
    if (twisted && !ring)
        throw parameter_error("twisted complex needs a Laurent ring");
}

void Chain::add_term(const std::vector<int>& t, long long c) {
    if (static_cast<int>(t.size()) != degree_)
        throw precondition_error("tuple length does not match chain degree");
    add_key(pack_tuple(t, k_), c);
}

void Chain::add_key(std::uint64_t key, long long c) {
    if (!c) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (!it->second) terms_.erase(it);
    }
}

long long Chain::coeff(const std::vector<int>& t) const {
    auto it = terms_.find(pack_tuple(t, k_));
    return it == terms_.end() ? 0 : it->second;
}

Chain Chain::operator+(const Chain& o) const {
    Chain r = *this;
    for (const auto& [key, c] : o.terms_) r.add_key(key, c);
    return r;
}

Chain Chain::operator-(const Chain& o) const {
    Chain r = *this;
    for (const auto& [key, c] : o.terms_) r.add_key(key, -c);
    return r;
}

Chain Chain::operator*(long long s) const {
    Chain r(degree_, k_);
    if (s)
        for (const auto& [key, c] : terms_) r.terms_.emplace(key, c * s);
    return r;
}

bool Chain::operator==(const Chain& o) const {
    return degree_ == o.degree_ && k_ == o.k_ && terms_ == o.terms_;
}

Chain Chain::quandle_reduce() const {
    Chain r(degree_, k_);
    for (const auto& [key, c] : terms_)
        if (!tuple_degenerate(unpack_tuple(key, degree_, k_))) r.terms_.emplace(key, c);
    return r;
}

bool Chain::degenerate_only() const {
    for (const auto& [key, c] : terms_)
        if (!tuple_degenerate(unpack_tuple(key, degree_, k_))) return false;
    return true;
}

std::string Chain::to_json() const {
    nlohmann::json j;
    j["degree"] = degree_;
    j["ring"] = "Z";
    j["terms"] = nlohmann::json::array();
    for (const auto& [key, c] : terms_) {
        nlohmann::json term;
        term["tuple"] = unpack_tuple(key, degree_, k_);
        term["coeff"] = std::to_string(c);
        j["terms"].push_back(std::move(term));
    }
    return j.dump(1);
}

Chain Chain::from_json(const std::string& text, int k) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("bad chain JSON: ") + e.what());
    }
    if (!j.contains("degree")) throw format_error("chain JSON missing \"degree\"");
    Chain c(j["degree"].get<int>(), k);
    for (const auto& term : j.value("terms", nlohmann::json::array())) {
        auto t = term.at("tuple").get<std::vector<int>>();
        for (int x : t)
            if (x < 0 || x >= k) throw format_error("chain tuple entry out of range");
        long long coef;
        if (term.at("coeff").is_string())
            coef = std::stoll(term.at("coeff").get<std::string>());
        else
            coef = term.at("coeff").get<long long>();
        c.add_term(t, coef);
    }
    return c;
}

void TwistedChain::add_term(const std::vector<int>& t, const LaurentElement& c) {
    if (static_cast<int>(t.size()) != degree_)
        throw precondition_error("tuple length does not match chain degree");
    add_key(pack_tuple(t, k_), c);
}

void TwistedChain::add_key(std::uint64_t key, const LaurentElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = ring_.add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TwistedChain TwistedChain::operator+(const TwistedChain& o) const {
    TwistedChain r = *this;
    for (const auto& [key, c] : o.terms_) r.add_key(key, c);
    return r;
}

TwistedChain TwistedChain::operator-(const TwistedChain& o) const {
    TwistedChain r = *this;
    for (const auto& [key, c] : o.terms_) r.add_key(key, ring_.neg(c));
    return r;
}

bool TwistedChain::operator==(const TwistedChain& o) const {
    return degree_ == o.degree_ && k_ == o.k_ && ring_ == o.ring_ && terms_ == o.terms_;
}

TwistedChain TwistedChain::scale(const LaurentElement& s) const {
    TwistedChain r(degree_, k_, ring_);
    for (const auto& [key, c] : terms_) r.add_key(key, ring_.mul(s, c));
    return r;
}

TwistedChain TwistedChain::quandle_reduce() const {
    TwistedChain r(degree_, k_, ring_);
    for (const auto& [key, c] : terms_)
        if (!tuple_degenerate(unpack_tuple(key, degree_, k_))) r.terms_.emplace(key, c);
    return r;
}

std::string TwistedChain::to_json() const {
    nlohmann::json j;
    j["degree"] = degree_;
    j["ring"] = ring_.to_string();
    j["terms"] = nlohmann::json::array();
    for (const auto& [key, c] : terms_) {
        nlohmann::json term;
        term["tuple"] = unpack_tuple(key, degree_, k_);
        term["coeff"] = ring_.format(c);
        j["terms"].push_back(std::move(term));
    }
    return j.dump(1);
}

std::vector<int> face_star0_tuple(int i, const std::vector<int>& t) {
    const int n = static_cast<int>(t.size());
    if (i < 1 || i > n) throw precondition_error("face index out of range");
    std::vector<int> r;
    r.reserve(n - 1);
    for (int j = 0; j < n; ++j)
        if (j != i - 1) r.push_back(t[j]);
    return r;
}

std::vector<int> face_star_tuple(const FiniteQuandle& q, int i, const std::vector<int>& t) {
    const int n = static_cast<int>(t.size());
    if (i < 1 || i > n) throw precondition_error("face index out of range");
    std::vector<int> r;
    r.reserve(n - 1);
    for (int j = 0; j < i - 1; ++j) r.push_back(q.op(t[j], t[i - 1]));
    for (int j = i; j < n; ++j) r.push_back(t[j]);
    return r;
}

Chain face_star0(int i, const Chain& c) {
    Chain r(c.degree() - 1, c.order());
    for (const auto& [key, coef] : c.terms())
        r.add_term(face_star0_tuple(i, unpack_tuple(key, c.degree(), c.order())), coef);
    return r;
}

Chain face_star(const FiniteQuandle& q, int i, const Chain& c) {
    Chain r(c.degree() - 1, c.order());
    for (const auto& [key, coef] : c.terms())
        r.add_term(face_star_tuple(q, i, unpack_tuple(key, c.degree(), c.order())), coef);
    return r;
}

std::vector<int> degeneracy_tuple(int i, const std::vector<int>& t) {
    const int n = static_cast<int>(t.size());
    if (i < 1 || i > n) throw precondition_error("degeneracy index out of range");
    std::vector<int> r;
    r.reserve(n + 1);
    for (int j = 0; j < n; ++j) {
        r.push_back(t[j]);
        if (j == i - 1) r.push_back(t[j]);
    }
    return r;
}

Chain degeneracy(int i, const Chain& c) {
    Chain r(c.degree() + 1, c.order());
    for (const auto& [key, coef] : c.terms())
        r.add_term(degeneracy_tuple(i, unpack_tuple(key, c.degree(), c.order())), coef);
    return r;
}

Chain boundary(const ComplexSpec& spec, const Chain& c) {
    spec.validate();
    if (spec.twisted)
        throw precondition_error("twisted boundary needs a twisted chain");
    const int n = c.degree();
    if (n < 1) throw precondition_error("boundary needs degree >= 1");
    const FiniteQuandle& q = *spec.q;
    Chain r(n - 1, c.order());
    for (const auto& [key, coef] : c.terms()) {
        auto t = unpack_tuple(key, n, c.order());
        for (int i = 2; i <= n; ++i) {
            long long s = (i % 2 == 0) ? coef : -coef;
            r.add_term(face_star0_tuple(i, t), s);
            r.add_term(face_star_tuple(q, i, t), -s);
        }
    }
    if (spec.theory == Theory::Q) r = r.quandle_reduce();
    return r;
}

TwistedChain boundary(const ComplexSpec& spec, const TwistedChain& c) {
    spec.validate();
    if (!spec.twisted)
        throw precondition_error("untwisted boundary needs an integer chain");
    if (!(c.ring() == *spec.ring)) throw precondition_error("ring mismatch");
    const int n = c.degree();
    if (n < 1) throw precondition_error("boundary needs degree >= 1");
    const FiniteQuandle& q = *spec.q;
    const LaurentRing& ring = c.ring();
    const LaurentElement t1 = ring.t_pow(1);
    TwistedChain r(n - 1, c.order(), ring);
    for (const auto& [key, coef] : c.terms()) {
        auto t = unpack_tuple(key, n, c.order());
        for (int i = 1; i <= n; ++i) {
            LaurentElement s = (i % 2 == 0) ? coef : ring.neg(coef);
            r.add_term(face_star0_tuple(i, t), ring.mul(t1, s));
            r.add_term(face_star_tuple(q, i, t), ring.neg(s));
        }
    }
    if (spec.theory == Theory::Q) r = r.quandle_reduce();
    return r;
}

Chain alpha_embed(const Chain& c) {
    const int n = c.degree();
    Chain r(n, c.order());
    for (const auto& [key, coef] : c.terms()) {
        auto t = unpack_tuple(key, n, c.order());
        // coordinate j >= 2 chooses x_j (+) or x_{j-1} (-)
        const int choices = n >= 1 ? (1 << (n - 1)) : 1;
        for (int mask = 0; mask < choices; ++mask) {
            std::vector<int> u(n);
            long long sign = 1;
            if (n >= 1) u[0] = t[0];
            for (int j = 1; j < n; ++j) {
                if (mask & (1 << (j - 1))) {
                    u[j] = t[j - 1];
                    sign = -sign;
                } else {
                    u[j] = t[j];
                }
            }
            r.add_term(u, sign * coef);
        }
    }
    return r;
}

Chain gamma_truncate(const Chain& c) {
    const int n = c.degree();
    if (n < 1) throw precondition_error("gamma needs degree >= 1");
    Chain r(n - 1, c.order());
    for (const auto& [key, coef] : c.terms()) {
        auto t = unpack_tuple(key, n, c.order());
        r.add_term(std::vector<int>(t.begin() + 1, t.end()), coef);
    }
    return r;
}

TwistedChain gamma_truncate(const TwistedChain& c) {
    const int n = c.degree();
    if (n < 1) throw precondition_error("gamma needs degree >= 1");
    TwistedChain r(n - 1, c.order(), c.ring());
    for (const auto& [key, coef] : c.terms()) {
        auto t = unpack_tuple(key, n, c.order());
        r.add_term(std::vector<int>(t.begin() + 1, t.end()), coef);
    }
    return r;
}

Chain act_on_chain(const FiniteQuandle& q, const Chain& c, int x) {
    q.require_rack("chain action");
    Chain r(c.degree(), c.order());
    for (const auto& [key, coef] : c.terms()) {
        auto t = unpack_tuple(key, c.degree(), c.order());
        for (int& v : t) v = q.op(v, x);
        r.add_term(t, coef);
    }
    return r;
}

Chain append_element(const Chain& c, int x) {
    Chain r(c.degree() + 1, c.order());
    for (const auto& [key, coef] : c.terms()) {
        auto t = unpack_tuple(key, c.degree(), c.order());
        t.push_back(x);
        r.add_term(t, coef);
    }
    return r;
}

std::vector<std::uint64_t> complex_basis(const ComplexSpec& spec, int n) {
    spec.validate();
    if (n < 0) throw precondition_error("negative degree");
    if (n > kDegreeCap)
        throw resource_error("degree " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kDegreeCap));
    const int k = spec.q->size();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= k;
        if (total > max_basis_guard())
            throw resource_error("basis size exceeds guard (" +
                                 std::to_string(max_basis_guard()) + ")");
    }
    std::vector<std::uint64_t> out;
    std::vector<int> t(n, 0);
    for (std::uint64_t key = 0; key < total; ++key) {
        bool deg = false;
        if (n >= 2) {
            auto tup = unpack_tuple(key, n, k);
            deg = tuple_degenerate(tup);
        }
        bool keep = spec.theory == Theory::R || (spec.theory == Theory::D ? deg : !deg);
        if (keep) out.push_back(key);
    }
    return out;
}

SparseIntMat boundary_matrix(const ComplexSpec& spec, int n) {
    spec.validate();
    if (n < 1) throw precondition_error("boundary matrix needs degree >= 1");
    const FiniteQuandle& q = *spec.q;
    const int k = q.size();
    auto src = complex_basis(spec, n);
    auto dst = complex_basis(spec, n - 1);
    SparseIntMat m;
    m.rows = static_cast<int>(dst.size());
    m.cols = static_cast<int>(src.size());
    m.col.resize(m.cols);
    auto row_of = [&](std::uint64_t key) {
        auto it = std::lower_bound(dst.begin(), dst.end(), key);
        return static_cast<int>(it - dst.begin());
    };
    const bool drop_degenerate = spec.theory == Theory::Q;
    for (int j = 0; j < m.cols; ++j) {
        auto t = unpack_tuple(src[j], n, k);
        std::map<std::uint64_t, long long> entries;
        for (int i = 2; i <= n; ++i) {
            long long s = (i % 2 == 0) ? 1 : -1;
            auto a = face_star0_tuple(i, t);
            auto b = face_star_tuple(q, i, t);
            if (!(drop_degenerate && tuple_degenerate(a))) entries[pack_tuple(a, k)] += s;
            if (!(drop_degenerate && tuple_degenerate(b))) entries[pack_tuple(b, k)] -= s;
        }
        for (const auto& [key, c] : entries)
            if (c) m.col[j].emplace_back(row_of(key), c);
    }
    return m;
}

SparseIntMat twisted_boundary_matrix_modp(const ComplexSpec& spec, int n) {
    spec.validate();
    if (!spec.twisted) throw precondition_error("spec is not twisted");
    if (n < 1) throw precondition_error("boundary matrix needs degree >= 1");
    const LaurentRing& ring = *spec.ring;
    const int p = ring.modulus();
    const int e = ring.deg();
    const FiniteQuandle& q = *spec.q;
    const int k = q.size();
    auto src = complex_basis(spec, n);
    auto dst = complex_basis(spec, n - 1);
    auto row_of = [&](std::uint64_t key) {
        auto it = std::lower_bound(dst.begin(), dst.end(), key);
        return static_cast<int>(it - dst.begin());
    };
    std::vector<LaurentElement> tb(e);
    for (int b = 0; b < e; ++b) tb[b] = ring.t_pow(b);
    const bool drop_degenerate = spec.theory == Theory::Q;
    SparseIntMat m;
    m.rows = static_cast<int>(dst.size()) * e;
    m.cols = static_cast<int>(src.size()) * e;
    m.col.resize(m.cols);
    const LaurentElement t1 = ring.t_pow(1);
    for (size_t j = 0; j < src.size(); ++j) {
        auto t = unpack_tuple(src[j], n, k);
        std::map<std::uint64_t, LaurentElement> entries;
        auto acc = [&](const std::vector<int>& tup, const LaurentElement& v) {
            if (drop_degenerate && tuple_degenerate(tup)) return;
            auto key = pack_tuple(tup, k);
            auto it = entries.find(key);
            if (it == entries.end()) entries.emplace(key, v);
            else it->second = ring.add(it->second, v);
        };
        for (int i = 1; i <= n; ++i) {
            LaurentElement s = ring.from_int(i % 2 == 0 ? 1 : -1);
            acc(face_star0_tuple(i, t), ring.mul(t1, s));
            acc(face_star_tuple(q, i, t), ring.neg(s));
        }
        for (int b = 0; b < e; ++b) {
            auto& column = m.col[j * e + b];
            for (const auto& [key, c] : entries) {
                LaurentElement v = ring.mul(c, tb[b]);
                int base = row_of(key) * e;
                for (int a = 0; a < e; ++a) {
                    int val = ((v.c[a] % p) + p) % p;
                    if (val) column.emplace_back(base + a, val);
                }
            }
            std::sort(column.begin(), column.end());
        }
    }
    return m;
}

} // namespace qdl
