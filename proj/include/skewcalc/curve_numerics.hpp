#pragma once

#include "skewcalc/parampoly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace skewcalc {

/// Numerical ring of a projectivized rank-r bundle over a curve: elements
/// are spanned by zeta^k and F zeta^k (F the fibre class), with F^2 = 0,
/// F zeta^(r-1) = point and zeta^r = -c1 F zeta^(r-1), c1 the degree of the
/// bundle's first Chern class.
class CurveNum {
public:
    CurveNum() = default;
    CurveNum(int rank, ParamPoly c1_degree) : rank_(rank), c1_(std::move(c1_degree)) {
        if (rank_ < 1) throw std::domain_error("CurveNum: rank must be positive");
    }

    int rank() const { return rank_; }
    const ParamPoly& c1_degree() const { return c1_; }
    bool is_zero() const { return terms_.empty(); }

    CurveNum zeta(int k = 1) const { return term(k, false); }
    CurveNum fibre() const { return term(0, true); }
    CurveNum one() const { return term(0, false); }
    CurveNum term(int zexp, bool F, const ParamPoly& c = ParamPoly(1)) const;

    CurveNum operator-() const;
    CurveNum operator+(const CurveNum& o) const;
    CurveNum operator-(const CurveNum& o) const;
    CurveNum operator*(const CurveNum& o) const;
    CurveNum operator*(const ParamPoly& c) const;
    bool operator==(const CurveNum& o) const;

    /// Coefficient of the point class F zeta^(r-1).
    ParamPoly point_degree() const;
    ParamPoly coeff(int zexp, bool F) const;

    /// Class of the projectivized subbundle of corank q whose quotient has
    /// first Chern degree c1q: zeta^q + c1q F zeta^(q-1).
    CurveNum subbundle_class(int q, const ParamPoly& c1q) const;

    std::string str() const;

private:
    int rank_ = 0;
    ParamPoly c1_;
    std::map<std::pair<int, int>, ParamPoly> terms_; // (zeta exp, F in {0,1}) -> coeff
    void add(int zexp, int F, const ParamPoly& c);
    void check_same(const CurveNum& o) const;
};

} // namespace skewcalc
