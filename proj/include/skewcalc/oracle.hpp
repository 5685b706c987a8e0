#pragma once

#include "skewcalc/curves.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace skewcalc {

/// Violated mathematical precondition (degenerate input); CLI exit code 3.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Failed internal consistency check (seed disagreement etc.); CLI exit 4.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned long long kDefaultSeed = 20240613ULL;

/// Exact test: do the embedded tangent lines at t and s intersect?
bool tangent_meet(const RationalCurve& curve, const Rat& t, const Rat& s);

/// Saturation data of the 4x4 pair determinant of a family of lines in P^3.
struct FamilyDeterminant {
    bool identically_zero = false;
    int exponent = 0;          // (t-s)-adic valuation
    int expected_exponent = 0; // full bidegree deg1 + deg2
    bool is_constant = false;
    Int constant = 0;
    BiPoly saturated;
    /// No intersecting pairs anywhere on P^1 x P^1 off the diagonal.
    bool skew() const { return is_constant && constant != 0 && exponent == expected_exponent; }
};

FamilyDeterminant family_determinant_p3(const LineFamily& fam);

/// The tangent determinant det[f(t), f'(t), f(s), f'(s)] of the twisted
/// cubic, saturated: c (t-s)^k with c != 0 and k = 4.
FamilyDeterminant twisted_cubic_identity();
/// Same determinant for an arbitrary curve in P^3 (raw tangent columns).
FamilyDeterminant tangent_determinant_p3(const RationalCurve& curve);

/// One certified batch of solutions: the parameter values t are the roots
/// of t_factor (multiplicity-many each) and s = s_num(t)/s_den(t).
struct SolutionCluster {
    QPoly t_factor;
    QPoly s_num, s_den;
    int multiplicity = 1;
    long count = 0;
};

struct PairCount {
    long ordered_count = 0;
    std::vector<SolutionCluster> clusters;
    std::vector<int> saturation_exponents; // per minor, diagnostics
    long resultant_degree = 0;
    unsigned long long seed = 0;
    unsigned long long seed_b = 0;
    bool seeds_agree = true;
    bool positive_dimensional = false; // the minors share a curve component
    long uncertified_degree = 0;       // diagnostics: degree lost to bad leading forms
};

/// Count ordered parameter pairs (t, s), t != s, where the family's lines
/// meet, with multiplicity, parameter infinity included (seeded Moebius
/// frames, two-seed agreement enforced).
PairCount count_intersecting_pairs_p4(const LineFamily& fam,
                                      unsigned long long seed = kDefaultSeed);

/// Tangent-line specialization with immersion and osculating preconditions.
PairCount count_nonskew_pairs_p4(const RationalCurve& curve,
                                 unsigned long long seed = kDefaultSeed);

/// Certified count restricted to pairs with both parameters finite, without
/// reparametrization; usable for families that degenerate at infinity.
PairCount count_affine_chart_pairs(const LineFamily& fam,
                                   unsigned long long seed = kDefaultSeed);

struct ScrollTest {
    int ambient = 3;
    bool skew = false;
    std::optional<FamilyDeterminant> det;            // P^3 route
    std::optional<std::pair<Rat, QPoly>> witness;    // non-skew: t0 and factor of D(t0, s)
    std::optional<PairCount> counts;                 // P^4 route
};

ScrollTest scroll_skew_test(const ScrollSpec& spec, unsigned long long seed = kDefaultSeed);

/// Sampled exact skewness of the projected cubic Veronese P^2 -> P^8: the
/// six tangent-spanning vectors at two random rational points always have
/// rank 6.
bool veronese_sample_test(int samples, unsigned long long seed = kDefaultSeed,
                          std::vector<Rat>* failure_witness = nullptr);

/// Local contact computation at a point of a curve in P^4: the tangent
/// curve alpha and the rank-drop curve beta agree to order 2 and the
/// third-order matching is obstructed by osculating nondegeneracy.
struct ContactOrderReport {
    std::vector<int> matched_orders; // 0, 1, 2
    bool third_order_obstructed = false;
};

ContactOrderReport contact_order_test(const RationalCurve& curve, const Rat& t0);

} // namespace skewcalc
