#pragma once

// Test-only Littlewood-Richardson rule by brute-force tableau enumeration:
// c^nu_{lambda,mu} counts semistandard skew tableaux of shape nu/lambda and
// content mu whose reverse reading word is a lattice word.  Used as an
// independent check of the Giambelli-Pieri product route.

#include "skewcalc/grass.hpp"

#include <functional>
#include <map>
#include <vector>

namespace skewtest {

inline long lr_coefficient(const skewcalc::Partition& lambda, const skewcalc::Partition& mu,
                           const skewcalc::Partition& nu) {
    using skewcalc::Partition;
    int rows = nu.length();
    for (int i = 0; i < rows; ++i)
        if (lambda.part(i) > nu.part(i)) return 0;
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;

    // cells of nu/lambda in reading order: top row first, right to left
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) cells.push_back({r, c});

    int maxval = mu.length();
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) fill[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);
    std::vector<int> used(static_cast<size_t>(maxval) + 1, 0);
    std::vector<int> seen(static_cast<size_t>(maxval) + 2, 0); // lattice-word prefix counts

    long count = 0;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= maxval; ++v) {
            if (used[static_cast<size_t>(v)] >= mu.part(v - 1)) continue;
            // semistandard: weakly increasing along rows, strictly down columns
            if (c + 1 < nu.part(r) && fill[static_cast<size_t>(r)][static_cast<size_t>(c + 1)] < v)
                continue;
            if (r > 0 && c < nu.part(r - 1) && c >= lambda.part(r - 1) &&
                fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] >= v)
                continue;
            if (r > 0 && c < lambda.part(r - 1)) {
                // the cell above is inside lambda; no constraint from it
            }
            // lattice word: after placing v, #v's seen >= #(v+1)'s seen
            if (v > 1 && seen[static_cast<size_t>(v)] + 1 > seen[static_cast<size_t>(v - 1)])
                continue;
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++used[static_cast<size_t>(v)];
            ++seen[static_cast<size_t>(v)];
            rec(k + 1);
            --seen[static_cast<size_t>(v)];
            --used[static_cast<size_t>(v)];
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    };
    rec(0);
    return count;
}

/// sigma_lambda * sigma_mu expanded through the LR rule, box-truncated.
inline skewcalc::ChowClass lr_product(const skewcalc::Partition& lambda,
                                      const skewcalc::Partition& mu,
                                      const skewcalc::GrassContext& ctx) {
    skewcalc::ChowClass out(ctx);
    int target = lambda.weight() + mu.weight();
    for (const skewcalc::Partition& nu : skewcalc::box_partitions(ctx, target)) {
        long c = lr_coefficient(lambda, mu, nu);
        if (c != 0) out.add(nu, skewcalc::ParamPoly(c));
    }
    return out;
}

} // namespace skewtest
