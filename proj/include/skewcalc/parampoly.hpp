#pragma once

#include "skewcalc/numeric.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace skewcalc {

/// Exponents of a monomial in the formal parameters (d, g, dv).
struct ParamMono {
    std::array<int, 3> e{0, 0, 0}; // d, g, dv

    int total() const { return e[0] + e[1] + e[2]; }
    bool operator==(const ParamMono& o) const = default;
    // Graded order, highest total degree first when iterating in reverse.
    bool operator<(const ParamMono& o) const {
        if (total() != o.total()) return total() < o.total();
        return e < o.e;
    }
};

/// Integer polynomial in the formal parameters d, g and dv (the dual
/// degree).  dv is kept as an independent symbol; substitute_dv() enforces
/// dv = 2d + 2g - 2 where a computation needs it.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(long v) { if (v != 0) terms_[ParamMono{}] = v; }
    ParamPoly(const Int& v) { if (v != 0) terms_[ParamMono{}] = v; }

    static ParamPoly d()  { return monomial({1, 0, 0}); }
    static ParamPoly g()  { return monomial({0, 1, 0}); }
    static ParamPoly dv() { return monomial({0, 0, 1}); }
    static ParamPoly monomial(std::array<int, 3> e, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Int constant_term() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    /// Exact division; nullopt when the quotient is not a polynomial.
    std::optional<ParamPoly> div_exact(const ParamPoly& divisor) const;

    /// Substitute dv = 2d + 2g - 2.
    ParamPoly substitute_dv() const;
    /// Evaluate at integer parameter values (dv defaults to 2d+2g-2).
    Int eval(const Int& d, const Int& g) const;
    Int eval(const Int& d, const Int& g, const Int& dv) const;

    const std::map<ParamMono, Int>& terms() const { return terms_; }

    /// Canonical rendering, e.g. "dv^2-10*dv-24*g+24".
    std::string str() const;

private:
    std::map<ParamMono, Int> terms_; // no zero coefficients stored
    void add_term(const ParamMono& m, const Int& c);
};

inline ParamPoly operator*(const Int& c, const ParamPoly& p) { return ParamPoly(c) * p; }
inline ParamPoly operator*(long c, const ParamPoly& p) { return ParamPoly(c) * p; }

} // namespace skewcalc
