#include "quandle/ring.hpp"

#include <numeric>
#include <sstream>

namespace qdl {

static long long inv_mod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) {
        long long q = g / a1;
        g -= q * a1;
        std::swap(g, a1);
        x -= q * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw parameter_error("element not invertible mod " + std::to_string(m));
    return ((x % m) + m) % m;
}

LaurentRing::LaurentRing(int m, std::vector<int> f) : m_(m), f_(std::move(f)) {
    if (m_ < 2) throw parameter_error("Laurent ring modulus must be >= 2");
    if (f_.size() < 2) throw parameter_error("relation polynomial must have degree >= 1");
    for (int& c : f_) c = norm(c);
    if (f_.back() != 1) throw parameter_error("relation polynomial must be monic");
    if (std::gcd(f_[0], m_) != 1)
        throw parameter_error("f(0) must be a unit mod m (t must be invertible)");
    // t * (f1 + f2 t + ... + t^{d-1}) = -f0  =>  t^-1 = -f0^-1 * (f/t truncated)
    const int d = deg();
    long long c0inv = inv_mod(f_[0], m_);
    tinv_.c.assign(d, 0);
    for (int i = 0; i < d; ++i) tinv_.c[i] = norm(-c0inv * f_[i + 1]);
}

LaurentElement LaurentRing::one() const {
    LaurentElement e = zero();
    e.c[0] = norm(1);
    return e;
}

LaurentElement LaurentRing::from_int(long long v) const {
    LaurentElement e = zero();
    e.c[0] = norm(v);
    return e;
}

LaurentElement LaurentRing::add(const LaurentElement& a, const LaurentElement& b) const {
    LaurentElement r = zero();
    for (int i = 0; i < deg(); ++i) r.c[i] = norm((long long)a.c[i] + b.c[i]);
    return r;
}

LaurentElement LaurentRing::sub(const LaurentElement& a, const LaurentElement& b) const {
    LaurentElement r = zero();
    for (int i = 0; i < deg(); ++i) r.c[i] = norm((long long)a.c[i] - b.c[i]);
    return r;
}

LaurentElement LaurentRing::neg(const LaurentElement& a) const {
    LaurentElement r = zero();
    for (int i = 0; i < deg(); ++i) r.c[i] = norm(-(long long)a.c[i]);
    return r;
}

LaurentElement LaurentRing::scale(long long s, const LaurentElement& a) const {
    LaurentElement r = zero();
    for (int i = 0; i < deg(); ++i) r.c[i] = norm(s * a.c[i]);
    return r;
}

LaurentElement LaurentRing::mul(const LaurentElement& a, const LaurentElement& b) const {
    const int d = deg();
    std::vector<long long> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < d; ++j) prod[i + j] += (long long)a.c[i] * b.c[j];
    }
    // reduce by monic f: t^d = -(f0 + f1 t + ... + f_{d-1} t^{d-1})
    for (int i = 2 * d - 2; i >= d; --i) {
        long long coef = ((prod[i] % m_) + m_) % m_;
        prod[i] = 0;
        if (!coef) continue;
        for (int j = 0; j < d; ++j) prod[i - d + j] -= coef * f_[j];
    }
    LaurentElement r = zero();
    for (int i = 0; i < d; ++i) r.c[i] = norm(prod[i]);
    return r;
}

LaurentElement LaurentRing::t_pow(long long k) const {
    LaurentElement base = zero();
    if (k >= 0) {
        if (deg() > 1) base.c[1] = 1;
        else base = neg(from_int(f_[0]));  // deg 1: t = -f0
    } else {
        base = tinv_;
        k = -k;
    }
    LaurentElement r = one();
    for (long long i = 0; i < k; ++i) r = mul(r, base);
    return r;
}

// polynomial helpers over Z_p for irreducibility testing
static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    // remainder of a by monic-normalized b
    int db = static_cast<int>(b.size()) - 1;
    long long lead_inv = inv_mod(b[db], p);
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        long long coef = (a[da] * lead_inv) % p;
        if (coef)
            for (int j = 0; j <= db; ++j)
                a[da - db + j] = (int)((((long long)a[da - db + j] - coef * b[j]) % p + p) % p);
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

bool LaurentRing::is_field() const {
    // m prime?
    for (int i = 2; (long long)i * i <= m_; ++i)
        if (m_ % i == 0) return false;
    // f irreducible over Z_m: no monic divisor of degree 1..d/2
    const int d = deg();
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::vector<int> g(dd + 1, 0);
        g[dd] = 1;
        // enumerate all monic polynomials of degree dd over Z_m
        std::vector<int> idx(dd, 0);
        while (true) {
            for (int i = 0; i < dd; ++i) g[i] = idx[i];
            if (poly_mod(f_, g, m_).empty()) return false;
            int i = 0;
            for (; i < dd; ++i) {
                if (++idx[i] < m_) break;
                idx[i] = 0;
            }
            if (i == dd) break;
        }
    }
    return true;
}

std::vector<std::vector<int>> LaurentRing::companion() const {
    const int d = deg();
    std::vector<std::vector<int>> c(d, std::vector<int>(d, 0));
    for (int i = 0; i + 1 < d; ++i) c[i + 1][i] = 1;      // t * t^i = t^{i+1}
    for (int i = 0; i < d; ++i) c[i][d - 1] = norm(-f_[i]);  // t * t^{d-1}
    return c;
}

static std::string poly_str(const std::vector<int>& c) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (!c[i]) continue;
        if (!first) os << "+";
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string LaurentRing::to_string() const {
    return "Z_" + std::to_string(m_) + "[t]/(" + poly_str(f_) + ")";
}

std::string LaurentRing::format(const LaurentElement& a) const { return poly_str(a.c); }

LaurentElement LaurentRing::parse(const std::string& text) const {
    // sums of terms  [coef][t[^exp]]  with integer coef and exp (exp may be
    // negative: resolved through t^-1)
    LaurentElement out = zero();
    std::string s;
    for (char ch : text)
        if (!isspace((unsigned char)ch)) s += ch;
    if (s.empty()) throw format_error("empty ring element");
    size_t i = 0;
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+') ++i;
        else if (s[i] == '-') { sign = -1; ++i; }
        long long coef = 1;
        bool have_digits = false;
        size_t j = i;
        while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
        if (j > i) {
            coef = std::stoll(s.substr(i, j - i));
            have_digits = true;
            i = j;
        }
        long long exp = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t k = i;
                if (k < s.size() && s[k] == '-') ++k;
                while (k < s.size() && isdigit((unsigned char)s[k])) ++k;
                if (k == i) throw format_error("bad exponent in: " + text);
                exp = std::stoll(s.substr(i, k - i));
                i = k;
            }
        } else if (!have_digits) {
            throw format_error("bad ring element: " + text);
        }
        out = add(out, scale(sign * coef, t_pow(exp)));
    }
    return out;
}

} // namespace qdl
