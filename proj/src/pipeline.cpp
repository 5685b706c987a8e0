#include "skewcalc/pipeline.hpp"

#include <stdexcept>

namespace skewcalc {

CurveInvariants CurveInvariants::numeric(int ambient, long d, long g) {
    if (d < 1 || g < 0) throw std::domain_error("CurveInvariants: need d >= 1, g >= 0");
    return CurveInvariants(ambient, ParamPoly(d), ParamPoly(g));
}

CurveInvariants CurveInvariants::symbolic(int ambient) {
    return CurveInvariants(ambient, ParamPoly::d(), ParamPoly::g());
}

long dim_Dr(int r, int n, int N) {
    int m = std::max(2 * n - N, 0);
    if (r < m || r > n) throw std::domain_error("dim_Dr: r outside the filtration range");
    return static_cast<long>(r) * (N - r) + 2L * (n - r) * (N - n);
}

std::pair<long, long> msdim_bounds(int n) {
    if (n < 1) throw std::domain_error("msdim_bounds: dimension must be >= 1");
    return {3L * n, 4L * n + 1};
}

long scroll_degree(long d1, long d2) {
    if (d1 < 1 || d2 < 1) throw std::domain_error("scroll_degree: degrees must be >= 1");
    return d1 + d2;
}

std::pair<ParamPoly, ParamPoly> p3_intersection() {
    GrassContext ctx(2, 4);
    BlowupClass prod = mult_B(class_D1_tilde(ctx).cls, class_Gamma_tilde(ctx));
    auto w = as_exceptional(prod);
    if (!w) throw std::logic_error("p3_intersection: product is not supported on E");
    return {w->coeff(Partition{2, 1}, 3), w->coeff(Partition{2, 2}, 2)};
}

P3Conclusion p3_conclusion() {
    auto [A, B] = p3_intersection();
    ParamPoly dv = ParamPoly::dv(), g = ParamPoly::g();
    auto m = A.div_exact(dv);
    if (!m) throw std::logic_error("p3_conclusion: multiplicity is not polynomial");
    EClass geo = class_Gamma_tilde_cap_E(GrassContext(2, 4), dv, g);
    ParamPoly geoA = geo.coeff(Partition{2, 1}, 3);
    ParamPoly geoB = geo.coeff(Partition{2, 2}, 2);
    return {*m, {*m * geoA - A, *m * geoB - B}};
}

ParamPoly p4_scroll_count() {
    GrassContext ctx(2, 5);
    return point_degree(mult_B(class_D1_tilde(ctx).cls, class_Gamma_tilde(ctx)));
}

namespace {

std::map<std::vector<int>, ParamPoly> projective_bundle_rule(int nvars, int evar, int zvar,
                                                             int rank) {
    // sum_{i=0}^{rank} c_i zeta^(rank-i) = 0 with c_i = e^i (trivial V over P^4)
    std::map<std::vector<int>, ParamPoly> rhs;
    for (int i = 1; i <= rank; ++i) {
        std::vector<int> m(static_cast<size_t>(nvars), 0);
        m[static_cast<size_t>(evar)] = i;
        m[static_cast<size_t>(zvar)] = rank - i;
        rhs[m] = ParamPoly(-1);
    }
    return rhs;
}

std::vector<QElem> compute_hom_chern(const QRingPtr& ring1) {
    // Hom(S2/S1, V/S2) = (S2/S1)^* (x) V/S2 over the flag variety, with
    // c(S1) = 1 - e, c(S2/S1) = 1 - zQ, c(V/S2) = s(S2).
    const int trunc = 7; // dim of the flag variety
    QElem e = QElem::generator(ring1, "e");
    QElem zQ = QElem::generator(ring1, "zQ");
    FormalBundle<QElem> S2{2, std::vector<QElem>(trunc + 1)};
    S2.chern[0] = QElem::one(ring1);
    S2.chern[1] = -(e + zQ);
    S2.chern[2] = e * zQ;
    FormalBundle<QElem> VS2{3, segre(S2)};
    FormalBundle<QElem> H = twist_by_line(VS2, zQ);
    return {H.chern[0], H.chern[1], H.chern[2], H.chern[3]};
}

} // namespace

P4Rings build_p4_rings(bool truncated_zetaH) {
    P4Rings R;
    {
        auto spec = std::make_shared<QRingSpec>(
            "A(DeltaHat)", std::vector<QRingSpec::Generator>{{"e", 1}, {"zQ", 1}});
        spec->add_rule(0, 5, {});
        spec->add_rule(1, 4, projective_bundle_rule(2, 0, 1, 4));
        spec->set_point_monomial({4, 3});
        R.delta_hat = spec;
    }
    {
        auto spec = std::make_shared<QRingSpec>(
            "A(D1Hat)", std::vector<QRingSpec::Generator>{{"e", 1}, {"z1", 1}, {"z2", 1}});
        spec->add_rule(0, 5, {});
        spec->add_rule(1, 4, projective_bundle_rule(3, 0, 1, 4));
        spec->add_rule(2, 4, projective_bundle_rule(3, 0, 2, 4));
        spec->set_point_monomial({4, 3, 3});
        R.d1_hat = spec;
    }
    {
        std::vector<QElem> cH = compute_hom_chern(R.delta_hat);
        auto spec = std::make_shared<QRingSpec>(
            "A(DeltaTilde)", std::vector<QRingSpec::Generator>{{"e", 1}, {"zQ", 1}, {"zH", 1}});
        spec->add_rule(0, 5, {});
        spec->add_rule(1, 4, projective_bundle_rule(3, 0, 1, 4));
        std::map<std::vector<int>, ParamPoly> rhs;
        int top = truncated_zetaH ? 1 : 3;
        for (int j = 1; j <= top; ++j) {
            for (const auto& [m, c] : cH[static_cast<size_t>(j)].terms()) {
                std::vector<int> nm{m[0], m[1], 3 - j};
                auto it = rhs.find(nm);
                if (it == rhs.end()) rhs[nm] = -c;
                else it->second -= c;
            }
        }
        spec->add_rule(2, 3, std::move(rhs));
        spec->set_point_monomial({4, 3, 2});
        R.delta_tilde = spec;
    }
    return R;
}

std::vector<QElem> hom_bundle_chern(const P4Rings& R) { return compute_hom_chern(R.delta_hat); }

namespace {

QElem embed_flag_to_tilde(const P4Rings& R, const QElem& x) {
    return x.map_to(R.delta_tilde, {QElem::generator(R.delta_tilde, "e"),
                                    QElem::generator(R.delta_tilde, "zQ")});
}

// c1(T_{P^4}) = 5e via S^* (x) Q.
QElem c1_TP4(const QRingPtr& ring1) {
    const int trunc = 7;
    QElem e = QElem::generator(ring1, "e");
    FormalBundle<QElem> S{1, std::vector<QElem>(trunc + 1)};
    S.chern[0] = QElem::one(ring1);
    S.chern[1] = -e;
    FormalBundle<QElem> Q{4, segre(S)};
    return tensor(dual(S), Q).chern[1];
}

// c1(Q) = e for the universal quotient of P^4.
QElem c1_Q_P4(const QRingPtr& ring1) {
    const int trunc = 7;
    QElem e = QElem::generator(ring1, "e");
    FormalBundle<QElem> S{1, std::vector<QElem>(trunc + 1)};
    S.chern[0] = QElem::one(ring1);
    S.chern[1] = -e;
    return segre(S)[1];
}

} // namespace

QElem hat_gamma_class(const P4Rings& R, const CurveInvariants& X) {
    const QRingPtr& ring1 = R.delta_hat;
    QElem e = QElem::generator(ring1, "e");
    QElem zQ = QElem::generator(ring1, "zQ");
    QElem curve = e.pow(3) * X.d;                 // pullback of [X] in P^4
    QElem Kpush = e.pow(4) * X.K_deg();           // pullback of the canonical divisor
    auto [hi, lo] = projcur_terms(curve, c1_TP4(ring1), Kpush, 4);
    QElem zT = zQ - e; // O(-1) of P(T_{P^4}) twists by the line S^*
    return hi.second * zT.pow(hi.first) + lo.second * zT.pow(lo.first);
}

QElem tilde_delta_gamma_class(const P4Rings& R, const CurveInvariants& X) {
    QElem gammahat = embed_flag_to_tilde(R, hat_gamma_class(R, X));
    QElem c1H = embed_flag_to_tilde(R, hom_bundle_chern(R)[1]);
    QElem point1 = embed_flag_to_tilde(R, QElem::monomial(R.delta_hat, {4, 3}));
    QElem zH = QElem::generator(R.delta_tilde, "zH");
    auto [hi, lo] = projcur_terms(gammahat, c1H, point1 * X.K_deg(), 3);
    return hi.second * zH.pow(hi.first) + lo.second * zH.pow(lo.first);
}

C1TD1Tilde c1_T_D1_tilde(const P4Rings& R) {
    // c1(T_{P(F)}) = r zeta_F + pi^*(c1(F) + c1(T_Y)), applied twice:
    // over P^4 for DeltaHat = P(Q), then over DeltaHat for D1Hat = P(p^*Q).
    QElem c1q1 = c1_Q_P4(R.delta_hat);
    QElem zQ1 = QElem::generator(R.delta_hat, "zQ");
    QElem c1_delta_hat = zQ1 * ParamPoly(4) + c1q1 + c1_TP4(R.delta_hat); // 4zQ + 6e

    QElem e2 = QElem::generator(R.d1_hat, "e");
    QElem z1 = QElem::generator(R.d1_hat, "z1");
    QElem z2 = QElem::generator(R.d1_hat, "z2");
    QElem lift = c1_delta_hat.map_to(R.d1_hat, {e2, z1});
    QElem c1q_lift = c1q1.map_to(R.d1_hat, {e2, z1});
    QElem base = z2 * ParamPoly(4) + c1q_lift + lift; // 4z1 + 4z2 + 7e

    // blowup correction: j_*(1 - codim), codim of DeltaHat in D1Hat is 3
    int exc = 2;

    QElem zQ3 = QElem::generator(R.delta_tilde, "zQ");
    QElem e3 = QElem::generator(R.delta_tilde, "e");
    QElem zH3 = QElem::generator(R.delta_tilde, "zH");
    QElem restricted = base.map_to(R.delta_tilde, {e3, zQ3, zQ3}); // i_D^*: z1, z2 -> zQ
    QElem multiplier = restricted + zH3 * ParamPoly(exc);
    return {c1_delta_hat, base, exc, multiplier};
}

DegreeLedger p4_degree_ledger(const CurveInvariants& X) {
    DegreeLedger L;
    P4Rings R = build_p4_rings();

    // (15d + 20g - 20): [DeltaGamma~] * c1(T_{D1~}) in A(DeltaTilde)
    QElem dg = tilde_delta_gamma_class(R, X);
    L.c1_TD1tilde_restricted = (dg * c1_T_D1_tilde(R).multiplier).point_degree();

    // (10dv + 10g - 10): [DeltaGamma~] * c1(T_B) in A(B), Gr(2,5)
    GrassContext ctx(2, 5);
    BlowupClass deltaB = BlowupClass::j_star(class_Gamma_tilde_cap_E(ctx, X.dv(), X.g));
    L.c1_TB_restricted = point_degree(mult_B(deltaB, c1_TB(ctx)));

    L.c1_T_delta = ParamPoly(2) - 2 * X.g;
    L.c1_T_gamma_restricted = 2 * L.c1_T_delta;

    L.n_delta_B = L.c1_TB_restricted - L.c1_T_delta;
    L.n_delta_D1 = L.c1_TD1tilde_restricted - L.c1_T_delta;

    // (10dv + 30g - 30): in the numerics of Edagger = P(N_{Delta~,B}), rank 11
    {
        CurveNum ring(11, L.n_delta_B);
        CurveNum delta = ring.subbundle_class(10, L.c1_TB_restricted - L.c1_T_gamma_restricted);
        CurveNum mult = ring.fibre() * L.c1_TB_restricted + ring.zeta() * ParamPoly(10);
        L.c1_TBdagger_restricted = (delta * mult).point_degree();
    }

    // (15d + 36g - 36): in the numerics of E_Ddagger = P(N_{Delta~,D1~}), rank 9
    {
        CurveNum ring(9, L.n_delta_D1);
        CurveNum delta = ring.subbundle_class(8, L.c1_TD1tilde_restricted - L.c1_T_gamma_restricted);
        CurveNum mult = ring.fibre() * L.c1_TD1tilde_restricted + ring.zeta() * ParamPoly(8);
        L.c1_TD1dagger_restricted = (delta * mult).point_degree();
    }
    return L;
}

ParamPoly dagger_intersection(const CurveInvariants& X) {
    GrassContext ctx(2, 5);
    ParamPoly base = point_degree(mult_B(class_D1_tilde(ctx).cls,
                                         class_Gamma_tilde(ctx, X.dv(), X.g)));
    DegreeLedger L = p4_degree_ledger(X);
    CurveNum ring(11, L.n_delta_B);
    CurveNum mu = ring.zeta() + ring.fibre() * (L.c1_TB_restricted - L.c1_TD1tilde_restricted);
    CurveNum nu = ring.zeta(9) +
                  (ring.fibre() * (L.c1_TB_restricted - L.c1_T_gamma_restricted)) * ring.zeta(8);
    ParamPoly correction = (mu * nu * ring.zeta()).point_degree();
    return base - correction;
}

ParamPoly excess_term(const CurveInvariants& X) {
    DegreeLedger L = p4_degree_ledger(X);
    return L.c1_TBdagger_restricted - L.c1_T_gamma_restricted - L.c1_TD1dagger_restricted +
           L.c1_T_delta;
}

ParamPoly nonskew_count(const CurveInvariants& X) {
    return dagger_intersection(X) - excess_term(X);
}

Int nonskew_count(long d, long g) {
    return nonskew_count(CurveInvariants::numeric(4, d, g)).constant_term();
}

long castelnuovo_bound(long d, int N) {
    if (N < 3 || d < N) throw std::domain_error("castelnuovo_bound: need a nondegenerate curve");
    long m = (d - 1) / (N - 1);
    long eps = (d - 1) - m * (N - 1);
    return m * (m - 1) * (N - 1) / 2 + m * eps;
}

Classification classify_p4() {
    Classification out;
    // Count-zero curves satisfy 24g = dv^2 - 10dv + 24 with dv = 2d + 2g - 2;
    // nondegeneracy needs d >= 4, and the proof bounds give dv <= 16.
    for (long dv = 2; dv <= 16; ++dv) {
        long num = dv * dv - 10 * dv;
        if (num % 24 != 0) continue;
        long g = num / 24 + 1;
        if (g < 0) continue;
        if (dv % 2 != 0) continue;
        long d = dv / 2 + 1 - g;
        if (d < 4) continue;
        if (nonskew_count(d, g) != 0) continue;
        out.candidates.emplace_back(g, d);
    }
    for (const auto& [g, d] : out.candidates) {
        if (g <= castelnuovo_bound(d, 4)) out.final_list.emplace_back(g, d);
        else out.excluded.emplace_back(g, d);
    }
    return out;
}

} // namespace skewcalc
