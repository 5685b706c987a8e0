#pragma once

#include "skewcalc/polynomial.hpp"

#include <string>
#include <vector>

namespace skewcalc {

/// A parametrized rational curve in P^ambient with exact polynomial
/// coordinates.  Coordinates are stored with cleared denominators and no
/// common polynomial factor; degree is the maximal coordinate degree.
class RationalCurve {
public:
    RationalCurve(int ambient, std::vector<QPoly> coords);
    static RationalCurve from_integer_coords(int ambient, std::vector<ZPoly> coords);
    /// The rational normal curve (1 : t : ... : t^d) in P^d.
    static RationalCurve rational_normal(int d);

    int ambient() const { return ambient_; }
    int degree() const { return degree_; }
    const std::vector<ZPoly>& coords() const { return coords_; }
    std::vector<ZPoly> derivative() const;

    /// Exact point evaluation (as a column of rationals).
    std::vector<Rat> point(const Rat& t) const;

    /// Reparametrize by t -> (a t + b)/(c t + d), clearing denominators at
    /// the homogenization degree.
    RationalCurve mobius(const Int& a, const Int& b, const Int& c, const Int& d) const;
    /// Apply an integer projective-linear transformation of the ambient space.
    RationalCurve linear_transform(const std::vector<std::vector<Int>>& m) const;

    /// True when rank [f, f'] = 2 everywhere, parameter infinity included.
    bool is_immersion() const;
    /// True when rank [f, f', f'', f'''] = 4 everywhere (third osculating
    /// planes nowhere degenerate).  Requires ambient >= 3.
    bool osculating_nondegenerate() const;

private:
    int ambient_;
    int degree_;
    std::vector<ZPoly> coords_;
};

/// A one-parameter family of lines spanned by two moving points.  For
/// tangent families the spanning columns are the homogenized Gauss columns
/// f' and deg*f - t*f', each of degree deg-1; for scrolls they are the two
/// curves themselves.
struct LineFamily {
    int ambient;
    std::vector<ZPoly> col1, col2;
    int deg1, deg2;

    static LineFamily tangent(const RationalCurve& curve);
    static LineFamily scroll(const RationalCurve& c1, const RationalCurve& c2);

    /// 4x4 minors of [col1(t), col2(t), col1(s), col2(s)] as bivariate
    /// polynomials; a single determinant when ambient = 3.
    std::vector<BiPoly> pair_minors() const;

    LineFamily mobius(const Int& a, const Int& b, const Int& c, const Int& d) const;
    /// Degenerate when the two columns are dependent at some parameter.
    bool is_degenerate() const;
};

/// Two embeddings of P^1 defining a scroll.
struct ScrollSpec {
    RationalCurve iota1;
    RationalCurve iota2;
};

} // namespace skewcalc
