#pragma once

#include "skewcalc/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewcalc {

/// Dense univariate polynomial over Int or Rat, lowest degree first,
/// normalized (no trailing zero coefficients).
template <typename C>
class UPoly {
public:
    UPoly() = default;
    UPoly(std::initializer_list<C> cs) : c_(cs) { normalize(); }
    explicit UPoly(std::vector<C> cs) : c_(std::move(cs)) { normalize(); }
    static UPoly constant(const C& v) { return UPoly(std::vector<C>{v}); }
    static UPoly x() { return UPoly(std::vector<C>{C(0), C(1)}); }

    const std::vector<C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const C& operator[](size_t i) const {
        static const C zero{0};
        return i < c_.size() ? c_[i] : zero;
    }
    const C& lc() const {
        if (is_zero()) throw std::domain_error("lc of zero polynomial");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const C& v) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const;
    template <typename V>
    V eval(const V& x) const {
        V r{0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + V(*it);
        return r;
    }

    std::string str(const std::string& var = "t") const;

    void set_coeff(size_t i, const C& v) {
        if (i >= c_.size()) c_.resize(i + 1, C(0));
        c_[i] = v;
        normalize();
    }

private:
    std::vector<C> c_;
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

using ZPoly = UPoly<Int>;
using QPoly = UPoly<Rat>;

// Integer polynomial utilities -------------------------------------------

Int content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);
/// Exact division; throws when the division is not exact.
ZPoly div_exact(const ZPoly& a, const ZPoly& b);
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// lc(b)^(deg a - deg b + 1) * a mod b (pseudo-remainder).
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);

// Rational polynomial utilities ------------------------------------------

QPoly to_qpoly(const ZPoly& p);
ZPoly clear_denominators(const QPoly& p);
QPoly monic(const QPoly& p);
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
QPoly gcd_monic(const QPoly& a, const QPoly& b);
/// Yun squarefree decomposition of a monic polynomial: f = prod a_i^i,
/// returned as the list [a_1, a_2, ...] of monic squarefree factors.
std::vector<QPoly> squarefree_decomposition(const QPoly& f);

/// p((a t + b)/(c t + d)) * (c t + d)^D for a fixed homogenization degree D.
ZPoly mobius_substitute(const ZPoly& p, const Int& a, const Int& b, const Int& c, const Int& d,
                        int D);

// Bivariate polynomials over Z -------------------------------------------

/// Polynomial in t and s with Int coefficients, stored as coefficients of
/// powers of s, each a ZPoly in t.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<ZPoly> by_s) : s_(std::move(by_s)) { normalize(); }
    static BiPoly from_t(const ZPoly& p);       // p(t)
    static BiPoly from_s(const ZPoly& p);       // p(s)
    static BiPoly t_minus_s();

    bool is_zero() const { return s_.empty(); }
    int deg_s() const { return static_cast<int>(s_.size()) - 1; }
    int deg_t() const;
    const ZPoly& coeff_s(size_t j) const {
        static const ZPoly zero{};
        return j < s_.size() ? s_[j] : zero;
    }
    const std::vector<ZPoly>& coeffs() const { return s_; }
    bool is_constant() const;
    Int constant() const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return s_ == o.s_; }

    Rat eval(const Rat& t, const Rat& s) const;
    /// Restriction to the diagonal s = t.
    ZPoly diagonal() const;
    /// Swap the two variables.
    BiPoly swapped() const;

    std::string str() const;

private:
    std::vector<ZPoly> s_;
    void normalize() {
        while (!s_.empty() && s_.back().is_zero()) s_.pop_back();
    }
    friend BiPoly div_t_minus_s(const BiPoly& p);
};

/// Exact division by (t - s); throws when not divisible.
BiPoly div_t_minus_s(const BiPoly& p);
/// Divide out the maximal power of (t - s); returns the saturation exponent.
std::pair<BiPoly, int> saturate_t_minus_s(const BiPoly& p);

/// Resultant with respect to s: determinant of the Sylvester matrix over
/// Z[t], computed fraction-free (Bareiss).
ZPoly resultant_s(const BiPoly& a, const BiPoly& b);

/// Primitive polynomial remainder sequence with respect to s.  Returns the
/// chain [a, b, ...] down to the last nonzero element.
std::vector<BiPoly> prs_chain_s(const BiPoly& a, const BiPoly& b);

/// Exact determinant of a square matrix of bivariate polynomials.
BiPoly bipoly_det(const std::vector<std::vector<BiPoly>>& m);

// Exact linear algebra over Q --------------------------------------------

/// Rank by fraction-free Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rat>> m);

} // namespace skewcalc
