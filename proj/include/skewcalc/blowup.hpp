#pragma once

#include "skewcalc/bundles.hpp"
#include "skewcalc/grass.hpp"

#include <memory>
#include <optional>
#include <utility>

namespace skewcalc {

/// An element of A(G x G) in the basis sigma_a (x) sigma_b.
class TensorClass {
public:
    using Key = std::pair<Partition, Partition>;

    TensorClass() = default;
    explicit TensorClass(const GrassContext& ctx) : ctx_(ctx) {}
    static TensorClass term(const GrassContext& ctx, const Partition& a, const Partition& b,
                            const ParamPoly& c = ParamPoly(1));
    static TensorClass one(const GrassContext& ctx) { return term(ctx, {}, {}); }

    const GrassContext& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, ParamPoly>& terms() const { return terms_; }
    ParamPoly coeff(const Partition& a, const Partition& b) const;
    void add(const Partition& a, const Partition& b, const ParamPoly& c);

    TensorClass operator-() const;
    TensorClass operator+(const TensorClass& o) const;
    TensorClass operator-(const TensorClass& o) const;
    TensorClass operator*(const TensorClass& o) const;
    TensorClass operator*(const ParamPoly& c) const;
    TensorClass& operator+=(const TensorClass& o);
    bool operator==(const TensorClass& o) const;

    int codim() const; // -1 for zero; throws if inhomogeneous
    std::string str() const;

private:
    GrassContext ctx_;
    std::map<Key, ParamPoly> terms_;
};

inline TensorClass scale(const TensorClass& x, const Int& c) { return x * ParamPoly(c); }

/// Shared per-context data for A(E) and A(B): the Chern classes of
/// T_G = Hom(S, Q), which is the normal bundle of the diagonal.
struct ERingData {
    GrassContext ctx;
    std::vector<ChowClass> cTG; // c_0..c_dimG of the tangent bundle of G
};

std::shared_ptr<const ERingData> e_ring(const GrassContext& ctx);

/// An element of A(E), E = P(T_G) the exceptional divisor: polynomials in
/// the hyperplane class zeta over A(G), zeta-exponent reduced below dim G.
class EClass {
public:
    using Key = std::pair<Partition, int>;

    EClass() = default;
    explicit EClass(std::shared_ptr<const ERingData> ring) : ring_(std::move(ring)) {}
    static EClass term(const std::shared_ptr<const ERingData>& ring, const Partition& p,
                       int zexp, const ParamPoly& c = ParamPoly(1));
    static EClass one(const std::shared_ptr<const ERingData>& ring) { return term(ring, {}, 0); }

    const std::shared_ptr<const ERingData>& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, ParamPoly>& terms() const { return terms_; }
    ParamPoly coeff(const Partition& p, int zexp) const;
    void add(const Partition& p, int zexp, const ParamPoly& c); // reduces

    EClass operator-() const;
    EClass operator+(const EClass& o) const;
    EClass operator-(const EClass& o) const;
    EClass operator*(const EClass& o) const; // mult_E
    EClass operator*(const ParamPoly& c) const;
    EClass& operator+=(const EClass& o);
    EClass& operator-=(const EClass& o) { return *this += -o; }
    bool operator==(const EClass& o) const;

    /// Multiply base coefficients by a class of A(G).
    EClass base_mul(const ChowClass& c) const;
    /// Multiply by zeta^k.
    EClass zeta_mul(int k) const;

    int codim() const; // codim in E; -1 for zero
    std::string str() const;

private:
    std::shared_ptr<const ERingData> ring_;
    std::map<Key, ParamPoly> terms_;
};

inline EClass scale(const EClass& x, const Int& c) { return x * ParamPoly(c); }

EClass mult_E(const EClass& a, const EClass& b);

/// i^*(sigma_a (x) sigma_b) = sigma_a sigma_b, extended bilinearly.
ChowClass i_pullback(const TensorClass& t);

/// i_*(sigma_p): coefficients are the triple intersection numbers
/// deg(sigma_abar sigma_bbar sigma_p).
TensorClass i_pushforward(const ChowClass& c);

/// An element of A(B), B = Bl_Delta(G x G), in normal form:
/// pi^*(pullback) + j_*(exceptional) with the zeta^(dimG-1) stratum of the
/// exceptional part rewritten into the pullback part.
class BlowupClass {
public:
    BlowupClass() = default;
    BlowupClass(TensorClass pullback, EClass exceptional);
    static BlowupClass pi_star(const TensorClass& t) { return {t, EClass{}}; }
    static BlowupClass j_star(const EClass& e) { return {TensorClass{}, e}; }
    /// The exceptional divisor [E] = j_*(1).
    static BlowupClass E(const GrassContext& ctx);

    const TensorClass& pullback() const { return pullback_; }
    const EClass& exceptional() const { return exceptional_; }
    bool is_zero() const { return pullback_.is_zero() && exceptional_.is_zero(); }

    BlowupClass operator-() const;
    BlowupClass operator+(const BlowupClass& o) const;
    BlowupClass operator-(const BlowupClass& o) const;
    BlowupClass operator*(const BlowupClass& o) const; // mult_B
    BlowupClass operator*(const ParamPoly& c) const;
    bool operator==(const BlowupClass& o) const;

    int codim() const; // codim in B; -1 for zero
    std::string str() const;

private:
    TensorClass pullback_;
    EClass exceptional_;
    void normalize();
};

BlowupClass mult_B(const BlowupClass& x, const BlowupClass& y);

/// Idempotent normal form: the top zeta stratum of the exceptional part is
/// rewritten into the pullback chart.
BlowupClass normal_form(const BlowupClass& x);

/// Degree of the point component pi^*(top (x) top); classes of top codim
/// are pure pullback after normal form.
ParamPoly point_degree(const BlowupClass& x);

/// Re-express a class supported on E as j_*(w): inverts the normal form
/// when the pullback part lies in the image of pi^* i_*.
std::optional<EClass> as_exceptional(const BlowupClass& x);

/// First Chern class of T_B.
BlowupClass c1_TB(const GrassContext& ctx);

/// Solve the proper-transform correction: [Ytilde] = pi^*(T) + j_*(mu) with
/// [E][Ytilde] = m j_*(geo).  When multiplicity is not fixed it is solved
/// from the zeta^0 stratum.  Throws on an inconsistent system.
struct ProperTransform {
    BlowupClass cls;
    ParamPoly multiplicity;
};
ProperTransform solve_proper_transform(const TensorClass& pullback, const EClass& geo,
                                       std::optional<ParamPoly> multiplicity = std::nullopt);

/// [D1(n,N)] in A(G x G) by the Porteous formula.
TensorClass class_D1(const GrassContext& ctx);

/// Porteous class of D1tilde cap E in A(E).
EClass class_D1_tilde_cap_E(const GrassContext& ctx);

/// Proper transform [D1tilde] with its solved multiplicity.
ProperTransform class_D1_tilde(const GrassContext& ctx);

/// [E cap Gammatilde] for the family of lines with class dv sigma_(c,c-1),
/// genus term 2g-2 (projective-bundle curve class of P(T_C) in E).
EClass class_Gamma_tilde_cap_E(const GrassContext& ctx, const ParamPoly& dv,
                               const ParamPoly& g);

/// Proper transform [Gammatilde] of C x C, C a one-parameter family of
/// lines of class dv sigma_(N-1,N-2) and genus g.
BlowupClass class_Gamma_tilde(const GrassContext& ctx,
                              const ParamPoly& dv = ParamPoly::dv(),
                              const ParamPoly& g = ParamPoly::g());

/// The two class strata of a projectivized tangent-bundle inclusion
/// P(T_X) -> P(F|_X) over a curve X:
/// (zeta^(r-1), curve) and (zeta^(r-2), c1F*curve + Kpush).
template <typename R>
std::pair<std::pair<int, R>, std::pair<int, R>>
projcur_terms(const R& curve_class, const R& c1F, const R& K_push, int rank) {
    if (rank < 2) throw std::domain_error("projcur: bundle rank must be >= 2");
    return {{rank - 1, curve_class}, {rank - 2, c1F * curve_class + K_push}};
}

} // namespace skewcalc
