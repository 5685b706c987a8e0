#include "skewcalc/curves.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace skewcalc {

namespace {

std::vector<ZPoly> normalize_coords(int ambient, std::vector<ZPoly> coords) {
    if (static_cast<int>(coords.size()) != ambient + 1)
        throw std::domain_error("RationalCurve: expected ambient+1 coordinates");
    bool all_zero = true;
    for (const auto& p : coords) all_zero = all_zero && p.is_zero();
    if (all_zero) throw std::domain_error("RationalCurve: zero coordinate vector");
    ZPoly g;
    for (const auto& p : coords) g = gcd(g, p);
    if (g.deg() > 0)
        throw std::domain_error("RationalCurve: coordinates share the polynomial factor (" +
                                g.str() + ")");
    Int c = 0;
    for (const auto& p : coords) c = boost::multiprecision::gcd(c, content(p));
    if (c > 1)
        for (auto& p : coords) p = p.is_zero() ? p : div_exact(p, ZPoly::constant(c));
    return coords;
}

// gcd of all k x k minors of the column matrix (polynomials in t)
ZPoly minor_gcd(const std::vector<std::vector<ZPoly>>& cols, int k) {
    size_t rows = cols[0].size();
    ZPoly g;
    std::vector<size_t> sel;
    std::function<void(size_t, int)> rec = [&](size_t start, int left) {
        if (left == 0) {
            std::vector<std::vector<BiPoly>> m(static_cast<size_t>(k),
                                               std::vector<BiPoly>(static_cast<size_t>(k)));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        BiPoly::from_t(cols[static_cast<size_t>(j)][sel[static_cast<size_t>(i)]]);
            g = gcd(g, bipoly_det(m).coeff_s(0));
            return;
        }
        for (size_t r = start; r + static_cast<size_t>(left) <= rows; ++r) {
            sel.push_back(r);
            rec(r + 1, left - 1);
            sel.pop_back();
        }
    };
    rec(0, k);
    return g;
}

std::vector<std::vector<ZPoly>> jet_columns(const RationalCurve& c, int order) {
    std::vector<std::vector<ZPoly>> cols{c.coords()};
    for (int k = 1; k <= order; ++k) {
        std::vector<ZPoly> next;
        next.reserve(cols.back().size());
        for (const auto& p : cols.back()) next.push_back(p.derivative());
        cols.push_back(std::move(next));
    }
    return cols;
}

} // namespace

RationalCurve::RationalCurve(int ambient, std::vector<QPoly> coords) : ambient_(ambient) {
    if (ambient < 2) throw std::domain_error("RationalCurve: ambient must be >= 2");
    Int l = 1;
    for (const auto& q : coords)
        for (const Rat& c : q.coeffs()) l = boost::multiprecision::lcm(l, denominator(c));
    std::vector<ZPoly> zc;
    zc.reserve(coords.size());
    for (const auto& q : coords) {
        std::vector<Int> cs;
        cs.reserve(q.coeffs().size());
        for (const Rat& c : q.coeffs()) cs.push_back(numerator(c * Rat(l)));
        zc.emplace_back(std::move(cs));
    }
    coords_ = normalize_coords(ambient, std::move(zc));
    degree_ = 0;
    for (const auto& p : coords_) degree_ = std::max(degree_, p.deg());
    if (degree_ < 1) throw std::domain_error("RationalCurve: constant parametrization");
}

RationalCurve RationalCurve::from_integer_coords(int ambient, std::vector<ZPoly> coords) {
    std::vector<QPoly> qc;
    qc.reserve(coords.size());
    for (const auto& p : coords) qc.push_back(to_qpoly(p));
    return RationalCurve(ambient, std::move(qc));
}

RationalCurve RationalCurve::rational_normal(int d) {
    std::vector<ZPoly> coords;
    std::vector<Int> mono{1};
    for (int i = 0; i <= d; ++i) {
        coords.push_back(ZPoly(std::vector<Int>(mono)));
        mono.insert(mono.begin(), Int(0));
    }
    return from_integer_coords(d, std::move(coords));
}

std::vector<ZPoly> RationalCurve::derivative() const {
    std::vector<ZPoly> out;
    out.reserve(coords_.size());
    for (const auto& p : coords_) out.push_back(p.derivative());
    return out;
}

std::vector<Rat> RationalCurve::point(const Rat& t) const {
    std::vector<Rat> out;
    out.reserve(coords_.size());
    for (const auto& p : coords_) out.push_back(p.eval<Rat>(t));
    return out;
}

RationalCurve RationalCurve::mobius(const Int& a, const Int& b, const Int& c, const Int& d) const {
    if (a * d - b * c == 0) throw std::domain_error("mobius: singular parameter change");
    std::vector<ZPoly> out;
    out.reserve(coords_.size());
    for (const auto& p : coords_) out.push_back(mobius_substitute(p, a, b, c, d, degree_));
    return from_integer_coords(ambient_, std::move(out));
}

RationalCurve RationalCurve::linear_transform(const std::vector<std::vector<Int>>& m) const {
    size_t n = coords_.size();
    if (m.size() != n) throw std::domain_error("linear_transform: wrong matrix size");
    std::vector<ZPoly> out(n);
    for (size_t i = 0; i < n; ++i) {
        ZPoly acc;
        for (size_t j = 0; j < n; ++j) acc = acc + coords_[j] * m[i][j];
        out[i] = std::move(acc);
    }
    return from_integer_coords(ambient_, std::move(out));
}

bool RationalCurve::is_immersion() const {
    // reparametrization moves the point at infinity to 0, so the two gcd
    // tests together cover all of P^1
    if (minor_gcd(jet_columns(*this, 1), 2).deg() != 0) return false;
    RationalCurve moved = mobius(0, 1, 1, 0);
    return minor_gcd(jet_columns(moved, 1), 2).deg() == 0;
}

bool RationalCurve::osculating_nondegenerate() const {
    if (ambient_ < 3) return false;
    ZPoly g = minor_gcd(jet_columns(*this, 3), 4);
    if (g.is_zero() || g.deg() != 0) return false;
    RationalCurve moved = mobius(0, 1, 1, 0);
    ZPoly gm = minor_gcd(jet_columns(moved, 3), 4);
    return !gm.is_zero() && gm.deg() == 0;
}

LineFamily LineFamily::tangent(const RationalCurve& curve) {
    LineFamily fam;
    fam.ambient = curve.ambient();
    int d = curve.degree();
    fam.col1 = curve.derivative(); // the partial d/dt0 of the homogenization
    fam.col2.reserve(curve.coords().size());
    for (size_t i = 0; i < curve.coords().size(); ++i) {
        // d*f - t*f' is the partial d/dt1, degree d-1 as well
        ZPoly tfp = fam.col1[i] * ZPoly::x();
        fam.col2.push_back(curve.coords()[i] * Int(d) - tfp);
    }
    fam.deg1 = d - 1;
    fam.deg2 = d - 1;
    return fam;
}

LineFamily LineFamily::scroll(const RationalCurve& c1, const RationalCurve& c2) {
    if (c1.ambient() != c2.ambient())
        throw std::domain_error("scroll: ambient dimensions disagree");
    LineFamily fam;
    fam.ambient = c1.ambient();
    fam.col1 = c1.coords();
    fam.col2 = c2.coords();
    fam.deg1 = c1.degree();
    fam.deg2 = c2.degree();
    return fam;
}

std::vector<BiPoly> LineFamily::pair_minors() const {
    size_t rows = col1.size();
    std::vector<BiPoly> out;
    std::vector<size_t> sel;
    std::function<void(size_t, int)> rec = [&](size_t start, int left) {
        if (left == 0) {
            std::vector<std::vector<BiPoly>> m(4, std::vector<BiPoly>(4));
            for (int i = 0; i < 4; ++i) {
                size_t r = sel[static_cast<size_t>(i)];
                m[static_cast<size_t>(i)][0] = BiPoly::from_t(col1[r]);
                m[static_cast<size_t>(i)][1] = BiPoly::from_t(col2[r]);
                m[static_cast<size_t>(i)][2] = BiPoly::from_s(col1[r]);
                m[static_cast<size_t>(i)][3] = BiPoly::from_s(col2[r]);
            }
            out.push_back(bipoly_det(m));
            return;
        }
        for (size_t r = start; r + static_cast<size_t>(left) <= rows; ++r) {
            sel.push_back(r);
            rec(r + 1, left - 1);
            sel.pop_back();
        }
    };
    rec(0, 4);
    return out;
}

LineFamily LineFamily::mobius(const Int& a, const Int& b, const Int& c, const Int& d) const {
    if (a * d - b * c == 0) throw std::domain_error("mobius: singular parameter change");
    LineFamily fam;
    fam.ambient = ambient;
    fam.deg1 = deg1;
    fam.deg2 = deg2;
    for (const auto& p : col1) fam.col1.push_back(mobius_substitute(p, a, b, c, d, deg1));
    for (const auto& p : col2) fam.col2.push_back(mobius_substitute(p, a, b, c, d, deg2));
    return fam;
}

bool LineFamily::is_degenerate() const {
    auto check = [](const LineFamily& f) {
        ZPoly g;
        for (size_t i = 0; i < f.col1.size(); ++i)
            for (size_t j = i + 1; j < f.col1.size(); ++j)
                g = gcd(g, f.col1[i] * f.col2[j] - f.col1[j] * f.col2[i]);
        return g.is_zero() || g.deg() > 0;
    };
    if (check(*this)) return true;
    return check(mobius(0, 1, 1, 0));
}

} // namespace skewcalc
