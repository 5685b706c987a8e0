#pragma once

#include "skewcalc/numeric.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace skewcalc {

/// A formal vector bundle over a graded ring R: a rank plus the total Chern
/// class c_0..c_trunc truncated at the ambient dimension.  chern[i] is
/// homogeneous of degree i and chern[0] is the ring unit.  R needs +, -,
/// * and a default-constructed additive zero.
template <typename R>
struct FormalBundle {
    int rank = 0;
    std::vector<R> chern;

    int trunc() const { return static_cast<int>(chern.size()) - 1; }
    const R& c(int i) const {
        static const R zero{};
        if (i < 0 || i > trunc()) return zero;
        return chern[static_cast<size_t>(i)];
    }
};

template <typename R>
FormalBundle<R> trivial_bundle(int rank, const R& one, int trunc) {
    FormalBundle<R> b{rank, std::vector<R>(static_cast<size_t>(trunc) + 1)};
    b.chern[0] = one;
    return b;
}

/// Segre classes: the multiplicative inverse of the total Chern series.
template <typename R>
std::vector<R> segre(const FormalBundle<R>& b) {
    std::vector<R> s(b.chern.size());
    s[0] = b.chern[0];
    for (int k = 1; k <= b.trunc(); ++k) {
        R acc{};
        for (int i = 1; i <= k; ++i) acc = acc - b.c(i) * s[static_cast<size_t>(k - i)];
        s[static_cast<size_t>(k)] = acc;
    }
    return s;
}

template <typename R>
FormalBundle<R> dual(const FormalBundle<R>& b) {
    FormalBundle<R> r = b;
    for (int i = 1; i <= r.trunc(); i += 2) r.chern[static_cast<size_t>(i)] = -r.chern[static_cast<size_t>(i)];
    return r;
}

/// Chern classes of b (x) L for a line bundle L with first Chern class c1L:
/// c_k(b(x)L) = sum_i binom(rank-k+i, i) c_{k-i}(b) c1L^i.
template <typename R>
FormalBundle<R> twist_by_line(const FormalBundle<R>& b, const R& c1L) {
    FormalBundle<R> out{b.rank, std::vector<R>(b.chern.size())};
    out.chern[0] = b.chern[0];
    std::vector<R> c1pow{b.chern[0]};
    for (int i = 1; i <= b.trunc(); ++i) c1pow.push_back(c1pow.back() * c1L);
    for (int k = 1; k <= b.trunc(); ++k) {
        R acc{};
        for (int i = 0; i <= k; ++i) {
            Int bc = binomial(b.rank - k + i, i);
            if (bc == 0) continue;
            acc = acc + scale(b.c(k - i) * c1pow[static_cast<size_t>(i)], bc);
        }
        out.chern[static_cast<size_t>(k)] = acc;
    }
    return out;
}

/// Whitney sum: c(a (+) b) = c(a) c(b).
template <typename R>
FormalBundle<R> direct_sum(const FormalBundle<R>& a, const FormalBundle<R>& b) {
    FormalBundle<R> out{a.rank + b.rank, std::vector<R>(a.chern.size())};
    int tr = a.trunc();
    for (int k = 0; k <= tr; ++k) {
        R acc{};
        for (int i = 0; i <= k; ++i) acc = acc + a.c(i) * b.c(k - i);
        out.chern[static_cast<size_t>(k)] = acc;
    }
    return out;
}

namespace detail {

// Integer polynomials in the formal Chern roots, exponent-vector keyed,
// truncated by total degree.
using RootMono = std::vector<int>;
using RootPoly = std::map<RootMono, Int>;

inline int mono_deg(const RootMono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

inline void add_to(RootPoly& p, const RootMono& m, const Int& c) {
    if (c == 0) return;
    auto it = p.find(m);
    if (it == p.end()) p.emplace(m, c);
    else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline RootPoly mul(const RootPoly& a, const RootPoly& b, int cap) {
    RootPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (mono_deg(ma) + mono_deg(mb) > cap) continue;
            RootMono m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            add_to(out, m, ca * cb);
        }
    return out;
}

// e_k of the variables in [lo, lo+cnt), as a RootPoly over nvars variables.
inline RootPoly elementary(int nvars, int lo, int cnt, int k) {
    RootPoly out;
    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            RootMono m(static_cast<size_t>(nvars), 0);
            for (int i : idx) m[static_cast<size_t>(i)] = 1;
            add_to(out, m, 1);
            return;
        }
        for (int v = start; v < lo + cnt; ++v) {
            idx[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    if (k == 0) {
        out[RootMono(static_cast<size_t>(nvars), 0)] = 1;
        return out;
    }
    rec(0, lo);
    return out;
}

// Rewrite a polynomial symmetric in the two root blocks as a polynomial in
// the elementary symmetric functions of each block (Gauss descent on the
// lex-leading monomial).
struct ESymTerm {
    std::vector<int> ea; // exponents of e_1..e_p of block A
    std::vector<int> eb; // exponents of e_1..e_q of block B
    Int coeff;
};

inline std::vector<ESymTerm> to_elementary(RootPoly p, int pa, int pb, int cap) {
    std::vector<ESymTerm> out;
    int nvars = pa + pb;
    while (!p.empty()) {
        auto it = std::prev(p.end()); // lex-largest monomial
        RootMono lead = it->first;
        Int c = it->second;
        ESymTerm term;
        term.ea.assign(static_cast<size_t>(pa), 0);
        term.eb.assign(static_cast<size_t>(pb), 0);
        term.coeff = c;
        for (int k = 0; k < pa; ++k) {
            int next = (k + 1 < pa) ? lead[static_cast<size_t>(k + 1)] : 0;
            int e = lead[static_cast<size_t>(k)] - next;
            if (e < 0) throw std::logic_error("to_elementary: nonsymmetric input");
            term.ea[static_cast<size_t>(k)] = e;
        }
        for (int k = 0; k < pb; ++k) {
            int next = (k + 1 < pb) ? lead[static_cast<size_t>(pa + k + 1)] : 0;
            int e = lead[static_cast<size_t>(pa + k)] - next;
            if (e < 0) throw std::logic_error("to_elementary: nonsymmetric input");
            term.eb[static_cast<size_t>(k)] = e;
        }
        // subtract coeff * expansion of the e-monomial
        RootPoly expand;
        expand[RootMono(static_cast<size_t>(nvars), 0)] = 1;
        for (int k = 0; k < pa; ++k)
            for (int rep = 0; rep < term.ea[static_cast<size_t>(k)]; ++rep)
                expand = mul(expand, elementary(nvars, 0, pa, k + 1), cap);
        for (int k = 0; k < pb; ++k)
            for (int rep = 0; rep < term.eb[static_cast<size_t>(k)]; ++rep)
                expand = mul(expand, elementary(nvars, pa, pb, k + 1), cap);
        for (const auto& [m, cc] : expand) add_to(p, m, -c * cc);
        out.push_back(std::move(term));
    }
    return out;
}

} // namespace detail

/// Chern classes of a (x) b by formal Chern root expansion, capped at input
/// rank 4 (all bundles in scope have rank <= 3).
template <typename R>
FormalBundle<R> tensor(const FormalBundle<R>& a, const FormalBundle<R>& b) {
    if (a.rank > 4 || b.rank > 4)
        throw std::invalid_argument("tensor: input rank above the supported cap of 4");
    if (a.rank == 0 || b.rank == 0) return trivial_bundle(0, a.chern.at(0), a.trunc());
    const int cap = a.trunc();
    const int pa = a.rank, pb = b.rank;
    using namespace detail;
    // prod_{i,j} (1 + alpha_i + beta_j), truncated
    RootPoly prod;
    prod[RootMono(static_cast<size_t>(pa + pb), 0)] = 1;
    for (int i = 0; i < pa; ++i)
        for (int j = 0; j < pb; ++j) {
            RootPoly fac;
            fac[RootMono(static_cast<size_t>(pa + pb), 0)] = 1;
            RootMono mi(static_cast<size_t>(pa + pb), 0);
            mi[static_cast<size_t>(i)] = 1;
            fac[mi] = 1;
            RootMono mj(static_cast<size_t>(pa + pb), 0);
            mj[static_cast<size_t>(pa + j)] = 1;
            fac[mj] = 1;
            prod = mul(prod, fac, cap);
        }
    FormalBundle<R> out{pa * pb, std::vector<R>(a.chern.size())};
    out.chern[0] = a.chern[0];
    for (const auto& term : to_elementary(std::move(prod), pa, pb, cap)) {
        int deg = 0;
        for (int k = 0; k < pa; ++k) deg += (k + 1) * term.ea[static_cast<size_t>(k)];
        for (int k = 0; k < pb; ++k) deg += (k + 1) * term.eb[static_cast<size_t>(k)];
        if (deg > cap) continue;
        if (deg == 0) continue; // the constant term is chern[0]
        R val = a.chern[0];
        for (int k = 0; k < pa; ++k)
            for (int rep = 0; rep < term.ea[static_cast<size_t>(k)]; ++rep) val = val * a.c(k + 1);
        for (int k = 0; k < pb; ++k)
            for (int rep = 0; rep < term.eb[static_cast<size_t>(k)]; ++rep) val = val * b.c(k + 1);
        out.chern[static_cast<size_t>(deg)] =
            out.chern[static_cast<size_t>(deg)] + scale(val, term.coeff);
    }
    return out;
}

/// Chern series of the virtual difference b - a: c(b) * s(a).
template <typename R>
std::vector<R> difference_chern(const FormalBundle<R>& a, const FormalBundle<R>& b) {
    std::vector<R> s = segre(a);
    std::vector<R> out(a.chern.size());
    int tr = a.trunc();
    for (int k = 0; k <= tr; ++k) {
        R acc{};
        for (int i = 0; i <= k; ++i) acc = acc + b.c(i) * s[static_cast<size_t>(k - i)];
        out[static_cast<size_t>(k)] = acc;
    }
    return out;
}

/// Porteous formula for the locus where a map a -> b drops to rank <= k:
/// det[ c_{f-k+j-i}(b-a) ] of size (rank a - k), f = rank b.
template <typename R>
R porteous(const FormalBundle<R>& a, const FormalBundle<R>& b, int k) {
    if (k < 0) throw std::domain_error("porteous: negative rank bound");
    int m = a.rank - k;
    if (m <= 0) return a.chern.at(0); // whole space, class 1
    std::vector<R> cdiff = difference_chern(a, b);
    auto entry = [&](int i, int j) -> R {
        int idx = (b.rank - k) + j - i;
        if (idx < 0 || idx > a.trunc()) return R{};
        return cdiff[static_cast<size_t>(idx)];
    };
    // cofactor determinant; m is tiny in every use
    std::function<R(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> R {
        if (rows.empty()) return a.chern.at(0);
        R acc{};
        int sign = 1;
        for (size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> r2(rows.begin() + 1, rows.end());
            std::vector<int> c2 = cols;
            c2.erase(c2.begin() + static_cast<long>(c));
            R sub = det(r2, c2);
            R term = entry(rows[0], cols[c]) * sub;
            acc = (sign > 0) ? acc + term : acc - term;
            sign = -sign;
        }
        return acc;
    };
    std::vector<int> idx(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
    return det(idx, idx);
}

} // namespace skewcalc
