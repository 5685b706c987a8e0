#include "skewcalc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace skewcalc {

// ---------------------------------------------------------------------------
// UPoly

template <typename C>
UPoly<C> UPoly<C>::operator-() const {
    std::vector<C> out(c_);
    for (auto& v : out) v = -v;
    return UPoly(std::move(out));
}

template <typename C>
UPoly<C> UPoly<C>::operator+(const UPoly& o) const {
    std::vector<C> out(std::max(c_.size(), o.c_.size()), C(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] + o[i];
    return UPoly(std::move(out));
}

template <typename C>
UPoly<C> UPoly<C>::operator-(const UPoly& o) const {
    std::vector<C> out(std::max(c_.size(), o.c_.size()), C(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] - o[i];
    return UPoly(std::move(out));
}

template <typename C>
UPoly<C> UPoly<C>::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<C> out(c_.size() + o.c_.size() - 1, C(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(out));
}

template <typename C>
UPoly<C> UPoly<C>::operator*(const C& v) const {
    std::vector<C> out(c_);
    for (auto& x : out) x *= v;
    return UPoly(std::move(out));
}

template <typename C>
UPoly<C> UPoly<C>::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<C> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * C(static_cast<long>(i));
    return UPoly(std::move(out));
}

template <typename C>
std::string UPoly<C>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i];
        if (i > 0) {
            os << "*" << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

template class UPoly<Int>;
template class UPoly<Rat>;

// ---------------------------------------------------------------------------
// Integer polynomial utilities

Int content(const ZPoly& p) {
    Int g = 0;
    for (const Int& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.lc() < 0) g = -g;
    std::vector<Int> out(p.coeffs());
    for (auto& c : out) c /= g;
    return ZPoly(std::move(out));
}

ZPoly div_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("div_exact: zero divisor");
    if (a.is_zero()) return a;
    if (a.deg() < b.deg()) throw std::domain_error("div_exact: not divisible (degree)");
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quo(static_cast<size_t>(a.deg() - b.deg()) + 1, Int(0));
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        Int top = rem[static_cast<size_t>(k + b.deg())];
        if (top == 0) continue;
        if (top % b.lc() != 0) throw std::domain_error("div_exact: not divisible");
        Int q = top / b.lc();
        quo[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= b.deg(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * b[static_cast<size_t>(i)];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::domain_error("div_exact: nonzero remainder");
    return ZPoly(std::move(quo));
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_rem: zero divisor");
    ZPoly r = a;
    int shift = a.deg() - b.deg();
    if (shift < 0) return r;
    for (int k = shift; r.deg() >= b.deg() && !r.is_zero();) {
        k = r.deg() - b.deg();
        if (k < 0) break;
        // r = lc(b)*r - lc(r)*x^k*b
        std::vector<Int> nr(std::max(r.coeffs().size(), b.coeffs().size() + static_cast<size_t>(k)),
                            Int(0));
        for (size_t i = 0; i < r.coeffs().size(); ++i) nr[i] = r[i] * b.lc();
        Int lr = r.lc();
        for (int i = 0; i <= b.deg(); ++i)
            nr[static_cast<size_t>(k + i)] -= lr * b[static_cast<size_t>(i)];
        r = ZPoly(std::move(nr));
    }
    return r;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Int cg = boost::multiprecision::gcd(content(a), content(b));
    ZPoly p = primitive_part(a), q = primitive_part(b);
    if (p.deg() < q.deg()) std::swap(p, q);
    while (!q.is_zero()) {
        ZPoly r = primitive_part(pseudo_rem(p, q));
        p = q;
        q = r;
    }
    return p * cg;
}

// ---------------------------------------------------------------------------
// Rational polynomial utilities

QPoly to_qpoly(const ZPoly& p) {
    std::vector<Rat> out;
    out.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) out.emplace_back(c);
    return QPoly(std::move(out));
}

ZPoly clear_denominators(const QPoly& p) {
    Int l = 1;
    for (const Rat& c : p.coeffs()) l = boost::multiprecision::lcm(l, denominator(c));
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs()) out.push_back(numerator(c * Rat(l)));
    return ZPoly(std::move(out));
}

QPoly monic(const QPoly& p) {
    if (p.is_zero()) return p;
    Rat inv = Rat(1) / p.lc();
    return p * inv;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: zero divisor");
    std::vector<Rat> rem(a.coeffs());
    if (a.deg() < b.deg()) return {QPoly(), a};
    std::vector<Rat> quo(static_cast<size_t>(a.deg() - b.deg()) + 1, Rat(0));
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        Rat top = rem[static_cast<size_t>(k + b.deg())];
        if (top == 0) continue;
        Rat q = top / b.lc();
        quo[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= b.deg(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * b[static_cast<size_t>(i)];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd_monic(const QPoly& a, const QPoly& b) {
    // routed through the integer primitive PRS; rational-coefficient Euclid
    // suffers from fraction blowup
    if (a.is_zero()) return b.is_zero() ? b : monic(b);
    if (b.is_zero()) return monic(a);
    return monic(to_qpoly(gcd(clear_denominators(a), clear_denominators(b))));
}

std::vector<QPoly> squarefree_decomposition(const QPoly& f_in) {
    QPoly f = monic(f_in);
    std::vector<QPoly> out;
    if (f.deg() < 1) return out;
    QPoly fp = f.derivative();
    QPoly a = gcd_monic(f, fp);
    QPoly c = divrem(f, a).first;
    QPoly d = divrem(fp, a).first - c.derivative();
    while (c.deg() > 0) {
        QPoly ai = gcd_monic(c, d);
        out.push_back(ai);
        c = divrem(c, ai).first;
        d = divrem(d, ai).first - c.derivative();
    }
    return out;
}

ZPoly mobius_substitute(const ZPoly& p, const Int& a, const Int& b, const Int& c, const Int& d,
                        int D) {
    if (p.deg() > D) throw std::domain_error("mobius_substitute: degree above homogenization");
    ZPoly num{b, a};   // a t + b
    ZPoly den{d, c};   // c t + d
    // precompute powers
    std::vector<ZPoly> np{ZPoly::constant(Int(1))}, dp{ZPoly::constant(Int(1))};
    for (int i = 1; i <= D; ++i) {
        np.push_back(np.back() * num);
        dp.push_back(dp.back() * den);
    }
    ZPoly out;
    for (int i = 0; i <= p.deg(); ++i) {
        if (p[static_cast<size_t>(i)] == 0) continue;
        out = out + np[static_cast<size_t>(i)] * dp[static_cast<size_t>(D - i)] *
                        p[static_cast<size_t>(i)];
    }
    return out;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::from_t(const ZPoly& p) { return BiPoly(std::vector<ZPoly>{p}); }

BiPoly BiPoly::from_s(const ZPoly& p) {
    std::vector<ZPoly> out;
    for (const Int& c : p.coeffs()) out.push_back(ZPoly::constant(c));
    return BiPoly(std::move(out));
}

BiPoly BiPoly::t_minus_s() {
    return BiPoly(std::vector<ZPoly>{ZPoly::x(), ZPoly::constant(Int(-1))});
}

int BiPoly::deg_t() const {
    int d = -1;
    for (const auto& p : s_) d = std::max(d, p.deg());
    return d;
}

bool BiPoly::is_constant() const { return deg_s() <= 0 && deg_t() <= 0; }

Int BiPoly::constant() const {
    if (is_zero()) return 0;
    return s_[0][0];
}

BiPoly BiPoly::operator-() const {
    std::vector<ZPoly> out(s_);
    for (auto& p : out) p = -p;
    return BiPoly(std::move(out));
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<ZPoly> out(std::max(s_.size(), o.s_.size()));
    for (size_t j = 0; j < out.size(); ++j) out[j] = coeff_s(j) + o.coeff_s(j);
    return BiPoly(std::move(out));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly();
    std::vector<ZPoly> out(s_.size() + o.s_.size() - 1);
    for (size_t i = 0; i < s_.size(); ++i)
        for (size_t j = 0; j < o.s_.size(); ++j) out[i + j] = out[i + j] + s_[i] * o.s_[j];
    return BiPoly(std::move(out));
}

Rat BiPoly::eval(const Rat& t, const Rat& s) const {
    Rat r = 0;
    for (size_t j = s_.size(); j-- > 0;) r = r * s + s_[j].eval<Rat>(t);
    return r;
}

ZPoly BiPoly::diagonal() const {
    ZPoly r, tp = ZPoly::constant(Int(1));
    for (size_t j = 0; j < s_.size(); ++j) {
        r = r + s_[j] * tp;
        tp = tp * ZPoly::x();
    }
    return r;
}

BiPoly BiPoly::swapped() const {
    std::vector<ZPoly> out(static_cast<size_t>(deg_t() + 1));
    for (size_t j = 0; j < s_.size(); ++j)
        for (int i = 0; i <= s_[j].deg(); ++i) {
            auto& tgt = out[static_cast<size_t>(i)];
            std::vector<Int> cs(tgt.coeffs());
            if (cs.size() <= j) cs.resize(j + 1, Int(0));
            cs[j] += s_[j][static_cast<size_t>(i)];
            tgt = ZPoly(std::move(cs));
        }
    return BiPoly(std::move(out));
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < s_.size(); ++j) {
        if (s_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << s_[j].str("t") << ")";
        if (j > 0) {
            os << "*s";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

BiPoly div_t_minus_s(const BiPoly& p) {
    // Treat p as a polynomial in t with coefficients in Z[s] and divide by
    // (t - s): synthetic division, remainder p(s, s) must vanish.
    BiPoly byt = p.swapped(); // coefficients of t^i as polynomials in s... see below
    // swapped() exchanges the roles: byt.coeff_s(i) is the coefficient of
    // t^i as a polynomial in the OTHER variable.  Divide q(x) = p by (x - s)
    // where x is the old t.
    int dt = byt.deg_s();
    if (dt < 1) {
        if (byt.is_zero()) return BiPoly();
        throw std::domain_error("div_t_minus_s: not divisible");
    }
    std::vector<ZPoly> quo(static_cast<size_t>(dt)); // coefficients of t^0..t^(dt-1) in Z[s]
    ZPoly carry; // in Z[s]
    for (int i = dt; i >= 1; --i) {
        carry = carry * ZPoly::x() + byt.coeff_s(static_cast<size_t>(i));
        quo[static_cast<size_t>(i - 1)] = carry;
    }
    ZPoly rem = carry * ZPoly::x() + byt.coeff_s(0);
    if (!rem.is_zero()) throw std::domain_error("div_t_minus_s: nonzero remainder");
    return BiPoly(std::vector<ZPoly>(quo)).swapped();
}

std::pair<BiPoly, int> saturate_t_minus_s(const BiPoly& p) {
    BiPoly cur = p;
    int k = 0;
    while (!cur.is_zero() && cur.diagonal().is_zero()) {
        cur = div_t_minus_s(cur);
        ++k;
    }
    return {cur, k};
}

ZPoly resultant_s(const BiPoly& a, const BiPoly& b) {
    int m = a.deg_s(), n = b.deg_s();
    if (m < 0 || n < 0) return ZPoly();
    if (m == 0 && n == 0) return ZPoly::constant(Int(1));
    int size = m + n;
    std::vector<std::vector<ZPoly>> M(static_cast<size_t>(size),
                                      std::vector<ZPoly>(static_cast<size_t>(size)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[static_cast<size_t>(r)][static_cast<size_t>(r + j)] =
            a.coeff_s(static_cast<size_t>(m - j));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] =
            b.coeff_s(static_cast<size_t>(n - j));

    // Bareiss fraction-free elimination over Z[t]
    int sign = 1;
    ZPoly prev = ZPoly::constant(Int(1));
    for (int k = 0; k < size - 1; ++k) {
        if (M[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int swp = -1;
            for (int i = k + 1; i < size; ++i)
                if (!M[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) { swp = i; break; }
            if (swp < 0) return ZPoly(); // singular: resultant 0
            std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(swp)]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                ZPoly num = M[static_cast<size_t>(k)][static_cast<size_t>(k)] *
                                M[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                            M[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                M[static_cast<size_t>(k)][static_cast<size_t>(j)];
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    num.is_zero() ? num : div_exact(num, prev);
            }
            M[static_cast<size_t>(i)][static_cast<size_t>(k)] = ZPoly();
        }
        prev = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    ZPoly det = M[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
    return sign < 0 ? -det : det;
}

namespace {
BiPoly bipoly_primitive_s(const BiPoly& p) {
    // remove the Z[t]-content (gcd of the s-coefficients)
    if (p.is_zero()) return p;
    ZPoly g;
    for (const auto& q : p.coeffs()) g = gcd(g, q);
    if (g.deg() == 0 && (g[0] == 1 || g[0] == -1)) return p;
    std::vector<ZPoly> out;
    out.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) out.push_back(q.is_zero() ? q : div_exact(q, g));
    return BiPoly(std::move(out));
}

BiPoly pseudo_rem_s(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    int db = b.deg_s();
    ZPoly lb = b.coeff_s(static_cast<size_t>(db));
    while (!r.is_zero() && r.deg_s() >= db) {
        int k = r.deg_s() - db;
        ZPoly lr = r.coeff_s(static_cast<size_t>(r.deg_s()));
        // r = lb * r - lr * s^k * b
        std::vector<ZPoly> shifted(static_cast<size_t>(k), ZPoly());
        for (const auto& q : b.coeffs()) shifted.push_back(q * lr);
        BiPoly sub(std::move(shifted));
        std::vector<ZPoly> scaled;
        scaled.reserve(r.coeffs().size());
        for (const auto& q : r.coeffs()) scaled.push_back(q * lb);
        r = BiPoly(std::move(scaled)) - sub;
    }
    return r;
}
} // namespace

std::vector<BiPoly> prs_chain_s(const BiPoly& a, const BiPoly& b) {
    std::vector<BiPoly> chain;
    BiPoly p = a, q = b;
    if (p.deg_s() < q.deg_s()) std::swap(p, q);
    chain.push_back(p);
    chain.push_back(q);
    while (!chain.back().is_zero() && chain.back().deg_s() > 0) {
        const BiPoly& p0 = chain[chain.size() - 2];
        const BiPoly& p1 = chain.back();
        BiPoly r = bipoly_primitive_s(pseudo_rem_s(p0, p1));
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

BiPoly bipoly_det(const std::vector<std::vector<BiPoly>>& m) {
    size_t n = m.size();
    if (n == 0) return BiPoly::from_t(ZPoly::constant(Int(1)));
    if (n == 1) return m[0][0];
    BiPoly acc;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<BiPoly>> sub(n - 1, std::vector<BiPoly>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub[i - 1][jj++] = m[i][j];
            }
        }
        BiPoly term = m[0][c] * bipoly_det(sub);
        acc = (sign > 0) ? acc + term : acc - term;
        sign = -sign;
    }
    return acc;
}

int matrix_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[rank][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace skewcalc
