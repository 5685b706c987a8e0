#include "doctest.h"
#include "skewcalc/oracle.hpp"
#include "skewcalc/polynomial.hpp"

#include <random>

using namespace skewcalc;

namespace {

RationalCurve seeded_curve(int ambient, int degree, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<ZPoly> coords;
        for (int i = 0; i <= ambient; ++i) {
            std::vector<Int> cs;
            for (int k = 0; k <= degree; ++k)
                cs.push_back(Int(static_cast<long>(rng() % 19) - 9));
            coords.emplace_back(std::move(cs));
        }
        try {
            RationalCurve c = RationalCurve::from_integer_coords(ambient, std::move(coords));
            if (c.degree() != degree) continue;
            if (!c.is_immersion() || !c.osculating_nondegenerate()) continue;
            return c;
        } catch (const std::exception&) {
            continue;
        }
    }
}

RationalCurve seeded_plane_curve(int ambient, int degree, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<ZPoly> coords;
        for (int i = 0; i <= ambient; ++i) {
            std::vector<Int> cs;
            for (int k = 0; k <= degree; ++k) cs.push_back(Int(static_cast<long>(rng() % 15) - 7));
            coords.emplace_back(std::move(cs));
        }
        try {
            RationalCurve c = RationalCurve::from_integer_coords(ambient, std::move(coords));
            if (c.degree() == degree) return c;
        } catch (const std::exception&) {
        }
    }
}

} // namespace

TEST_CASE("polynomial layer basics") {
    ZPoly a{6, 0, 2};  // 2t^2 + 6
    ZPoly b{3, 3};     // 3t + 3
    CHECK(content(a) == 2);
    CHECK(gcd(a * b, b * b) == b); // 3(t+1): the content gcd times the primitive gcd
    CHECK(div_exact(a * b, b) == a);
    CHECK_THROWS_AS(div_exact(ZPoly{1, 1}, ZPoly{0, 1}), std::domain_error);
    QPoly m = monic(to_qpoly(b));
    CHECK(m.lc() == Rat(1));
    BiPoly d = BiPoly::t_minus_s();
    auto [sat, k] = saturate_t_minus_s(d * d * BiPoly::from_t(ZPoly{1, 1}));
    CHECK(k == 2);
    CHECK(sat == BiPoly::from_t(ZPoly{1, 1}));
    // resultant of t-s and t+s in s is 2t up to sign
    BiPoly tps = BiPoly::from_t(ZPoly{0, 1}) + BiPoly::from_s(ZPoly{0, 1});
    ZPoly r = resultant_s(BiPoly::t_minus_s(), tps);
    CHECK((r == ZPoly{0, 2} || r == ZPoly{0, -2}));
}

TEST_CASE("squarefree decomposition") {
    // (t-1)^2 (t+2) -> level 1: t+2, level 2: t-1
    QPoly f = to_qpoly(ZPoly{-1, 1} * ZPoly{-1, 1} * ZPoly{2, 1});
    auto levels = squarefree_decomposition(f);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0] == monic(to_qpoly(ZPoly{2, 1})));
    CHECK(levels[1] == monic(to_qpoly(ZPoly{-1, 1})));
}

TEST_CASE("tangent determinant identities in P^3") {
    FamilyDeterminant cubic = twisted_cubic_identity();
    CHECK(!cubic.identically_zero);
    CHECK(cubic.exponent == 4);
    CHECK(cubic.is_constant);
    CHECK(cubic.constant == 1);
    CHECK(cubic.expected_exponent == 4);
    CHECK(cubic.skew());

    // a plane conic in P^3: every pair of tangent lines meets
    RationalCurve conic = RationalCurve::from_integer_coords(
        3, {ZPoly{1}, ZPoly{0, 1}, ZPoly{0, 0, 1}, ZPoly{}});
    CHECK(tangent_determinant_p3(conic).identically_zero);
}

TEST_CASE("tangent_meet") {
    RationalCurve quartic = RationalCurve::rational_normal(4);
    CHECK(!tangent_meet(quartic, Rat(0), Rat(1)));
    CHECK(!tangent_meet(quartic, Rat(1, 2), Rat(-3)));
    CHECK(tangent_meet(quartic, Rat(0), Rat(1)) == tangent_meet(quartic, Rat(1), Rat(0)));
    RationalCurve cubic = RationalCurve::rational_normal(3);
    CHECK(!tangent_meet(cubic, Rat(0), Rat(1)));
    CHECK_THROWS_AS(tangent_meet(quartic, Rat(2), Rat(2)), std::domain_error);

    // a nodal curve: f(1) = f(-1), so the tangents there share a point
    RationalCurve nodal = RationalCurve::from_integer_coords(
        4, {ZPoly{1}, ZPoly{0, 0, 1}, ZPoly{0, -1, 0, 1}, ZPoly{0, 0, 0, 0, 1},
            ZPoly{0, -1, 0, 0, 0, 1}});
    CHECK(tangent_meet(nodal, Rat(1), Rat(-1)));
}

TEST_CASE("pair counts match the intersection-theory formula") {
    RationalCurve quartic = RationalCurve::rational_normal(4);
    PairCount pc4 = count_nonskew_pairs_p4(quartic);
    CHECK(pc4.ordered_count == 0);
    CHECK(pc4.seeds_agree);

    RationalCurve q5 = seeded_curve(4, 5, 101);
    PairCount pc5 = count_nonskew_pairs_p4(q5);
    CHECK(pc5.ordered_count == 8);
    CHECK(pc5.ordered_count % 2 == 0);
    long total = 0;
    for (const auto& cl : pc5.clusters) total += cl.count;
    CHECK(total == pc5.ordered_count);
    CHECK(pc5.uncertified_degree == 0);
}

TEST_CASE("every smooth rational quartic in P^4 counts zero") {
    // degree-4 nondegenerate rational curves are projectively normal, so
    // random ones must agree with the rational normal curve
    RationalCurve q4 = seeded_curve(4, 4, 55);
    CHECK(count_nonskew_pairs_p4(q4).ordered_count == 0);
}

TEST_CASE("count is invariant under reparametrization and linear maps") {
    RationalCurve q5 = seeded_curve(4, 5, 101);
    long base = count_nonskew_pairs_p4(q5).ordered_count;
    CHECK(count_nonskew_pairs_p4(q5, 987654321ULL).ordered_count == base);
    CHECK(count_nonskew_pairs_p4(q5.mobius(1, 2, 1, 3)).ordered_count == base);
    std::vector<std::vector<Int>> m(5, std::vector<Int>(5, Int(0)));
    for (int i = 0; i < 5; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    m[0][4] = 3;
    m[2][1] = -2;
    CHECK(count_nonskew_pairs_p4(q5.linear_transform(m)).ordered_count == base);
}

TEST_CASE("the curve (1,t,t^2,t^3,t^5) ramifies at infinity") {
    RationalCurve special = RationalCurve::from_integer_coords(
        4, {ZPoly{1}, ZPoly{0, 1}, ZPoly{0, 0, 1}, ZPoly{0, 0, 0, 1}, ZPoly{0, 0, 0, 0, 0, 1}});
    CHECK(!special.is_immersion());
    CHECK_THROWS_AS(count_nonskew_pairs_p4(special), precondition_error);
    // away from the bad point its tangent lines are pairwise disjoint
    CHECK(count_affine_chart_pairs(LineFamily::tangent(special)).ordered_count == 0);
}

TEST_CASE("scroll tests in P^3") {
    ScrollSpec rn{RationalCurve::from_integer_coords(3, {ZPoly{0, 1}, ZPoly{1}, ZPoly{}, ZPoly{}}),
                  RationalCurve::from_integer_coords(3, {ZPoly{}, ZPoly{}, ZPoly{0, 1}, ZPoly{1}})};
    ScrollTest st = scroll_skew_test(rn);
    CHECK(st.skew);
    CHECK(st.det->exponent == 2);

    ScrollSpec deg22{
        RationalCurve::from_integer_coords(3, {ZPoly{0, 0, 1}, ZPoly{0, 2}, ZPoly{1}, ZPoly{}}),
        RationalCurve::from_integer_coords(3, {ZPoly{0, 2}, ZPoly{1}, ZPoly{}, ZPoly{0, 0, 1}})};
    ScrollTest st22 = scroll_skew_test(deg22);
    CHECK(st22.skew);
    CHECK(st22.det->exponent == 4);
    CHECK(st22.det->constant != 0);

    // a generic bidegree (2,2) scroll is not skew, with an exact witness
    ScrollSpec generic{seeded_plane_curve(3, 2, 5), seeded_plane_curve(3, 2, 6)};
    ScrollTest stg = scroll_skew_test(generic);
    CHECK(!stg.skew);
    REQUIRE(stg.witness.has_value());
    auto [t0, q] = *stg.witness;
    CHECK(q.deg() >= 1);
    CHECK(q.eval<Rat>(t0) != 0); // the partner parameters are off the diagonal
    // the witness polynomial divides the determinant sliced at t0
    std::vector<Rat> slice;
    for (size_t j = 0; j < stg.det->saturated.coeffs().size(); ++j)
        slice.push_back(stg.det->saturated.coeff_s(j).eval<Rat>(t0));
    CHECK(monic(QPoly(std::move(slice))) == q);

    // degenerate scroll: both factors equal
    ScrollSpec degen{seeded_plane_curve(3, 2, 5), seeded_plane_curve(3, 2, 5)};
    CHECK_THROWS_AS(scroll_skew_test(degen), precondition_error);
}

TEST_CASE("scroll tests in P^4 cross-check the count formula") {
    // rational normal scroll: dv = 2, count formula 4 - 10 + 6 = 0
    ScrollSpec rn{RationalCurve::from_integer_coords(
                      4, {ZPoly{0, 1}, ZPoly{1}, ZPoly{}, ZPoly{}, ZPoly{}}),
                  RationalCurve::from_integer_coords(
                      4, {ZPoly{}, ZPoly{}, ZPoly{0, 1}, ZPoly{1}, ZPoly{}})};
    ScrollTest st = scroll_skew_test(rn);
    CHECK(st.skew);
    REQUIRE(st.counts.has_value());
    CHECK(st.counts->ordered_count == 0);

    // a generic bidegree (2,2) scroll: dv = 4, count formula 16 - 20 + 6 = 2
    ScrollSpec g22{seeded_plane_curve(4, 2, 21), seeded_plane_curve(4, 2, 22)};
    ScrollTest stg = scroll_skew_test(g22);
    CHECK(!stg.skew);
    REQUIRE(stg.counts.has_value());
    CHECK(stg.counts->ordered_count == 2);
}

TEST_CASE("veronese samples") {
    CHECK(veronese_sample_test(100));
    CHECK_THROWS_AS(veronese_sample_test(0), std::domain_error);
    // equal points give coinciding tangent planes: rank 3, not 6
    std::vector<std::vector<Rat>> m;
    auto rows_at = [&](long x0, long x1, long x2) {
        const int exps[9][3] = {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {1, 2, 0},
                                {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}};
        long x[3] = {x0, x1, x2};
        for (int var = 0; var < 3; ++var) {
            std::vector<Rat> row(9, Rat(0));
            for (int c = 0; c < 9; ++c) {
                if (exps[c][var] == 0) continue;
                long v = exps[c][var];
                int e[3] = {exps[c][0], exps[c][1], exps[c][2]};
                e[var] -= 1;
                Rat val(v);
                for (int k = 0; k < 3; ++k)
                    for (int r = 0; r < e[k]; ++r) val *= x[k];
                row[static_cast<size_t>(c)] = val;
            }
            m.push_back(std::move(row));
        }
    };
    rows_at(1, 2, 3);
    rows_at(1, 2, 3);
    CHECK(matrix_rank(m) == 3);
}

TEST_CASE("contact orders at a point") {
    RationalCurve quartic = RationalCurve::rational_normal(4);
    ContactOrderReport rep = contact_order_test(quartic, Rat(0));
    CHECK(rep.matched_orders == std::vector<int>{0, 1, 2});
    CHECK(rep.third_order_obstructed);

    RationalCurve q5 = seeded_curve(4, 5, 101);
    ContactOrderReport rep5 = contact_order_test(q5, Rat(1, 3));
    CHECK(rep5.matched_orders == std::vector<int>{0, 1, 2});
    CHECK(rep5.third_order_obstructed);

    // f''' in the span of f'' at t = 0: precondition violation
    RationalCurve degen = RationalCurve::from_integer_coords(
        4, {ZPoly{1}, ZPoly{0, 1}, ZPoly{0, 0, 1}, ZPoly{0, 0, 1, 0, 1}, ZPoly{0, 0, 0, 0, 0, 1}});
    CHECK_THROWS_AS(contact_order_test(degen, Rat(0)), precondition_error);
    CHECK_THROWS_AS(contact_order_test(RationalCurve::rational_normal(3), Rat(0)),
                    std::domain_error);
}

TEST_CASE("curve input validation") {
    CHECK_THROWS_AS(RationalCurve::from_integer_coords(
                        3, {ZPoly{0, 1}, ZPoly{0, 2}, ZPoly{0, 0, 3}, ZPoly{0, 0, 0, 1}}),
                    std::domain_error); // common factor t
    CHECK_THROWS_AS(RationalCurve::from_integer_coords(2, {ZPoly{1}, ZPoly{2}, ZPoly{3}}),
                    std::domain_error); // constant parametrization
}
