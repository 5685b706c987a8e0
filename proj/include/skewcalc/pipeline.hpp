#pragma once

#include "skewcalc/blowup.hpp"
#include "skewcalc/curve_numerics.hpp"
#include "skewcalc/qring.hpp"

#include <utility>
#include <vector>

namespace skewcalc {

/// Degree and genus of an embedded smooth curve, with the derived dual
/// degree dv = 2d + 2g - 2 and canonical degree 2g - 2.
struct CurveInvariants {
    int ambient;
    ParamPoly d;
    ParamPoly g;

    CurveInvariants(int ambient_, ParamPoly d_, ParamPoly g_)
        : ambient(ambient_), d(std::move(d_)), g(std::move(g_)) {}
    static CurveInvariants numeric(int ambient, long d, long g);
    static CurveInvariants symbolic(int ambient);

    ParamPoly dv() const { return 2 * d + 2 * g - ParamPoly(2); }
    ParamPoly K_deg() const { return 2 * g - ParamPoly(2); }
};

/// dim D_r = r(N-r) + 2(n-r)(N-n).
long dim_Dr(int r, int n, int N);

/// (3n, 4n+1): lower and upper bounds for the minimal skew embedding dimension.
std::pair<long, long> msdim_bounds(int n);

long scroll_degree(long d1, long d2);

/// Coefficients of j_*(sbar_21 z^3) and j_*(sbar_22 z^2) in
/// [D1tilde][Gammatilde] over Gr(2,4), symbolic in (dv, g).
std::pair<ParamPoly, ParamPoly> p3_intersection();

/// Derived conclusions of the Gr(2,4) product: the diagonal multiplicity
/// m = dv - 2 and the residual pair m*[E cap Gammatilde] - product,
/// which is (0, 2 dv g).
struct P3Conclusion {
    ParamPoly multiplicity;
    std::pair<ParamPoly, ParamPoly> residual;
};
P3Conclusion p3_conclusion();

/// Point degree of [[D1tilde]][[Gammatilde]] over Gr(2,5), symbolic in
/// (dv, g): dv^2 - 5dv - 6g + 6.
ParamPoly p4_scroll_count();

/// The three quotient rings of the second-blowup computation.
/// With truncated_zetaH the zH^3 rule keeps only its first Chern term
/// (used to verify the higher terms are invisible in the degrees in play).
struct P4Rings {
    QRingPtr delta_hat;   // Z[e, zQ]
    QRingPtr d1_hat;      // Z[e, z1, z2]
    QRingPtr delta_tilde; // Z[e, zQ, zH]
};
P4Rings build_p4_rings(bool truncated_zetaH = false);

/// Chern classes of Hom(S2/S1, V/S2) in A(delta_hat), computed from
/// c(S1) = 1 - e and c(S2/S1) = 1 - zQ.
std::vector<QElem> hom_bundle_chern(const P4Rings& R);

/// [gammahat(X)] = d e^3 zQ^3 + dv e^4 zQ^2 in A(delta_hat).
QElem hat_gamma_class(const P4Rings& R, const CurveInvariants& X);

/// [Delta_Gamma~] in A(delta_tilde).
QElem tilde_delta_gamma_class(const P4Rings& R, const CurveInvariants& X);

/// First Chern class data of T_{D1tilde}: the pullback part 4z1+4z2+7e in
/// A(d1_hat), the exceptional correction j_*(2), and the multiplier
/// 8zQ + 7e + 2zH it induces on exceptional classes of A(delta_tilde).
struct C1TD1Tilde {
    QElem base_delta_hat; // c1 of the first bundle stage: 4zQ + 6e in delta_hat
    QElem base;           // in d1_hat
    int exc_correction;   // codim - 1 of the blowup center
    QElem multiplier;     // in delta_tilde
};
C1TD1Tilde c1_T_D1_tilde(const P4Rings& R);

/// The six point degrees of the second-blowup ledger plus the normal
/// bundle degrees they imply, all computed by ring arithmetic.
struct DegreeLedger {
    ParamPoly c1_TD1tilde_restricted;  // 15d + 20g - 20
    ParamPoly c1_TB_restricted;        // 10dv + 10g - 10
    ParamPoly c1_T_delta;              // 2 - 2g
    ParamPoly c1_T_gamma_restricted;   // 4 - 4g
    ParamPoly c1_TBdagger_restricted;  // 10dv + 30g - 30
    ParamPoly c1_TD1dagger_restricted; // 15d + 36g - 36
    ParamPoly n_delta_B;               // c1 deg of N_{Delta~,B}: 10dv + 12g - 12
    ParamPoly n_delta_D1;              // c1 deg of N_{Delta~,D1~}: 15d + 22g - 22
};
DegreeLedger p4_degree_ledger(const CurveInvariants& X);

/// [[D1+]][[Gamma+]] = dv^2 - 15dv + 15d + 2g - 2.
ParamPoly dagger_intersection(const CurveInvariants& X);

/// Excess class degree on the diagonal: 10dv - 15d - 4g + 4.
ParamPoly excess_term(const CurveInvariants& X);

/// Number of nonskew ordered pairs of tangent lines:
/// dagger_intersection - excess_term = (2d+2g-2)^2 - 20d - 44g + 44.
ParamPoly nonskew_count(const CurveInvariants& X);
Int nonskew_count(long d, long g);

/// Castelnuovo bound for the genus of a nondegenerate smooth degree-d curve
/// in P^N.
long castelnuovo_bound(long d, int N);

/// Candidate (g, d) pairs with nonskew count zero in P^4, before and after
/// the Castelnuovo filter.
struct Classification {
    std::vector<std::pair<long, long>> candidates; // (g, d), count-zero solutions
    std::vector<std::pair<long, long>> excluded;   // failed the genus bound
    std::vector<std::pair<long, long>> final_list; // [(0,4), (1,5)]
};
Classification classify_p4();

} // namespace skewcalc
