#include "doctest.h"
#include "skewcalc/blowup.hpp"
#include "skewcalc/bundles.hpp"
#include "skewcalc/grass.hpp"

#include <random>

using namespace skewcalc;

namespace {

FormalBundle<ChowClass> universal_Q(const GrassContext& ctx, int trunc) {
    FormalBundle<ChowClass> Q{ctx.N - ctx.n, std::vector<ChowClass>(static_cast<size_t>(trunc) + 1)};
    Q.chern[0] = ChowClass::one(ctx);
    for (int i = 1; i <= ctx.cols() && i <= trunc; ++i)
        Q.chern[static_cast<size_t>(i)] = ChowClass::sigma(ctx, Partition{i});
    return Q;
}

FormalBundle<ChowClass> universal_S(const GrassContext& ctx, int trunc) {
    return {ctx.n, segre(universal_Q(ctx, trunc))};
}

FormalBundle<ChowClass> random_bundle(const GrassContext& ctx, std::mt19937_64& rng, int rank) {
    std::vector<Partition> basis = box_partitions(ctx);
    FormalBundle<ChowClass> b{rank, std::vector<ChowClass>(static_cast<size_t>(ctx.dim()) + 1)};
    b.chern[0] = ChowClass::one(ctx);
    for (int i = 1; i <= rank && i <= ctx.dim(); ++i) {
        ChowClass c(ctx);
        for (const Partition& p : basis)
            if (p.weight() == i && rng() % 2)
                c.add(p, ParamPoly(static_cast<long>(rng() % 5) - 2));
        b.chern[static_cast<size_t>(i)] = c;
    }
    return b;
}

} // namespace

TEST_CASE("segre of the trivial bundle") {
    GrassContext ctx(2, 4);
    auto t = trivial_bundle(3, ChowClass::one(ctx), ctx.dim());
    std::vector<ChowClass> s = segre(t);
    CHECK(s[0] == ChowClass::one(ctx));
    for (size_t i = 1; i < s.size(); ++i) CHECK(s[i].is_zero());
}

TEST_CASE("chern times segre is one for random bundles") {
    GrassContext ctx(2, 4);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto b = random_bundle(ctx, rng, 2 + static_cast<int>(rng() % 2));
        std::vector<ChowClass> s = segre(b);
        for (int k = 0; k <= b.trunc(); ++k) {
            ChowClass acc;
            for (int i = 0; i <= k; ++i) acc += b.c(i) * s[static_cast<size_t>(k - i)];
            if (k == 0) CHECK(acc == ChowClass::one(ctx));
            else CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("dual") {
    GrassContext g25(2, 5);
    auto S = universal_S(g25, g25.dim());
    CHECK(S.chern[1] == -ChowClass::sigma(g25, Partition{1}));
    CHECK(dual(S).chern[1] == ChowClass::sigma(g25, Partition{1}));
    std::mt19937_64 rng(3);
    auto b = random_bundle(g25, rng, 3);
    CHECK(dual(dual(b)).chern == b.chern);
    auto t = trivial_bundle(2, ChowClass::one(g25), g25.dim());
    CHECK(dual(t).chern == t.chern);
}

TEST_CASE("twist by a line bundle") {
    GrassContext ctx(2, 4);
    auto S = universal_S(ctx, ctx.dim());
    SUBCASE("twist by zero is the identity") {
        auto tw = twist_by_line(S, ChowClass{});
        CHECK(tw.chern == S.chern);
    }
    SUBCASE("line twisted by line adds first Chern classes") {
        FormalBundle<ChowClass> L{1, std::vector<ChowClass>(static_cast<size_t>(ctx.dim()) + 1)};
        L.chern[0] = ChowClass::one(ctx);
        L.chern[1] = ChowClass::sigma(ctx, Partition{1});
        auto tw = twist_by_line(L, ChowClass::sigma(ctx, Partition{1}, ParamPoly(2)));
        CHECK(tw.chern[1] == ChowClass::sigma(ctx, Partition{1}, ParamPoly(3)));
    }
    SUBCASE("agrees with tensor against a line bundle") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 5; ++trial) {
            auto b = random_bundle(ctx, rng, 2);
            ChowClass c1L = ChowClass::sigma(ctx, Partition{1}, ParamPoly(static_cast<long>(rng() % 5) - 2));
            FormalBundle<ChowClass> L{1, std::vector<ChowClass>(static_cast<size_t>(ctx.dim()) + 1)};
            L.chern[0] = ChowClass::one(ctx);
            L.chern[1] = c1L;
            CHECK(twist_by_line(b, c1L).chern == tensor(b, L).chern);
        }
    }
}

TEST_CASE("tangent bundle of the Grassmannian via Hom(S, Q)") {
    GrassContext g24(2, 4), g25(2, 5);
    auto TG24 = tensor(dual(universal_S(g24, g24.dim())), universal_Q(g24, g24.dim()));
    CHECK(TG24.rank == 4);
    CHECK(TG24.chern[1] == ChowClass::sigma(g24, Partition{1}, ParamPoly(4)));
    auto TG25 = tensor(dual(universal_S(g25, g25.dim())), universal_Q(g25, g25.dim()));
    CHECK(TG25.rank == 6);
    CHECK(TG25.chern[1] == ChowClass::sigma(g25, Partition{1}, ParamPoly(5)));
}

TEST_CASE("tensor algebra") {
    GrassContext ctx(2, 4);
    std::mt19937_64 rng(17);
    SUBCASE("line times line adds c1") {
        FormalBundle<ChowClass> L1{1, std::vector<ChowClass>(static_cast<size_t>(ctx.dim()) + 1)};
        L1.chern[0] = ChowClass::one(ctx);
        L1.chern[1] = ChowClass::sigma(ctx, Partition{1});
        FormalBundle<ChowClass> L2 = L1;
        L2.chern[1] = ChowClass::sigma(ctx, Partition{1}, ParamPoly(3));
        CHECK(tensor(L1, L2).chern[1] == ChowClass::sigma(ctx, Partition{1}, ParamPoly(4)));
    }
    SUBCASE("commutative; trivial line is neutral; c1 formula") {
        auto a = random_bundle(ctx, rng, 2);
        auto b = random_bundle(ctx, rng, 3);
        CHECK(tensor(a, b).chern == tensor(b, a).chern);
        auto triv = trivial_bundle(1, ChowClass::one(ctx), ctx.dim());
        CHECK(tensor(a, triv).chern == a.chern);
        ChowClass c1 = tensor(a, b).chern[1];
        CHECK(c1 == a.chern[1] * ParamPoly(b.rank) + b.chern[1] * ParamPoly(a.rank));
    }
    SUBCASE("rank cap") {
        auto big = trivial_bundle(5, ChowClass::one(ctx), ctx.dim());
        auto line = trivial_bundle(1, ChowClass::one(ctx), ctx.dim());
        CHECK_THROWS_AS(tensor(big, line), std::invalid_argument);
    }
}

TEST_CASE("whitney sum") {
    GrassContext ctx(2, 4);
    std::mt19937_64 rng(23);
    auto a = random_bundle(ctx, rng, 2);
    auto b = random_bundle(ctx, rng, 2);
    auto sum = direct_sum(a, b);
    CHECK(sum.rank == 4);
    for (int k = 0; k <= ctx.dim(); ++k) {
        ChowClass acc;
        for (int i = 0; i <= k; ++i) acc += a.c(i) * b.c(k - i);
        CHECK(sum.c(k) == acc);
    }
}

TEST_CASE("porteous rejects a negative rank bound") {
    GrassContext ctx(2, 4);
    auto a = trivial_bundle(2, ChowClass::one(ctx), ctx.dim());
    auto b = trivial_bundle(3, ChowClass::one(ctx), ctx.dim());
    CHECK_THROWS_AS(porteous(a, b, -1), std::domain_error);
}

TEST_CASE("segre classes of the twisted subbundle on the exceptional divisor") {
    // s_1 = sbar_1 + 2 zeta and s_2 = sbar_2 + 3 sbar_1 zeta + 3 zeta^2
    GrassContext ctx(2, 4);
    auto ring = e_ring(ctx);
    int trunc = 2 * ctx.dim() - 1;
    FormalBundle<EClass> piS{2, std::vector<EClass>(static_cast<size_t>(trunc) + 1)};
    piS.chern[0] = EClass::one(ring);
    piS.chern[1] = EClass::term(ring, Partition{1}, 0, ParamPoly(-1));
    piS.chern[2] = EClass::term(ring, Partition{1, 1}, 0);
    auto tw = twist_by_line(piS, EClass::term(ring, Partition{}, 1, ParamPoly(-1)));
    CHECK(tw.chern[1] == EClass::term(ring, Partition{1}, 0, ParamPoly(-1)) +
                             EClass::term(ring, Partition{}, 1, ParamPoly(-2)));
    std::vector<EClass> sg = segre(tw);
    CHECK(sg[1] == EClass::term(ring, Partition{1}, 0) + EClass::term(ring, Partition{}, 1, ParamPoly(2)));
    CHECK(sg[2] == EClass::term(ring, Partition{2}, 0) +
                       EClass::term(ring, Partition{1}, 1, ParamPoly(3)) +
                       EClass::term(ring, Partition{}, 2, ParamPoly(3)));
}
