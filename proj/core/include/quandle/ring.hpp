#pragma once
#include <string>
#include <vector>

#include "quandle/errors.hpp"

namespace qdl {

// Element of Z_m[t]/(f): representative coefficients c[0..deg(f)-1],
// c[i] the coefficient of t^i, each reduced mod m.
struct LaurentElement {
    std::vector<int> c;
    bool operator==(const LaurentElement&) const = default;
    bool operator<(const LaurentElement& o) const { return c < o.c; }
    bool is_zero() const {
        for (int x : c)
            if (x) return false;
        return true;
    }
};

// The finite quotient Z_m[t]/(f(t)), f monic with f(0) a unit mod m, so
// t is invertible.  This is the coefficient ring for twisted chains.
class LaurentRing {
public:
    LaurentRing(int m, std::vector<int> f);

    int modulus() const { return m_; }
    const std::vector<int>& poly() const { return f_; }
    int deg() const { return static_cast<int>(f_.size()) - 1; }

    LaurentElement zero() const { return {std::vector<int>(deg(), 0)}; }
    LaurentElement one() const;
    LaurentElement from_int(long long v) const;
    LaurentElement t_pow(long long k) const;  // t^k, k may be negative

    LaurentElement add(const LaurentElement& a, const LaurentElement& b) const;
    LaurentElement sub(const LaurentElement& a, const LaurentElement& b) const;
    LaurentElement neg(const LaurentElement& a) const;
    LaurentElement mul(const LaurentElement& a, const LaurentElement& b) const;
    LaurentElement scale(long long s, const LaurentElement& a) const;

    // true iff m is prime and f irreducible over Z_m (the ring is a field)
    bool is_field() const;

    // deg x deg matrix of multiplication by t on the Z_m-module basis
    // 1, t, ..., t^{deg-1} (companion matrix of f)
    std::vector<std::vector<int>> companion() const;

    std::string to_string() const;                    // "Z_3[t]/(t^2+t+1)"
    std::string format(const LaurentElement& a) const;  // "2t+1"
    LaurentElement parse(const std::string& text) const;  // accepts "2t^-1+1"

    bool operator==(const LaurentRing& o) const {
        return m_ == o.m_ && f_ == o.f_;
    }

private:
    int m_;
    std::vector<int> f_;
    LaurentElement tinv_;  // cached t^-1
    int norm(long long v) const { return static_cast<int>(((v % m_) + m_) % m_); }
};

} // namespace qdl
