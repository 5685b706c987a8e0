#pragma once

#include "skewcalc/parampoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace skewcalc {

/// A Grassmannian Gr(n, N) of n-dimensional subspaces of C^N
/// (vector-space convention; projectively this is Gr(n-1, N-1)).
struct GrassContext {
    int n = 0;
    int N = 0;

    GrassContext() = default;
    GrassContext(int n_, int N_);

    int dim() const { return n * (N - n); }
    int rows() const { return n; }      // partition length bound
    int cols() const { return N - n; }  // partition part bound
    bool operator==(const GrassContext& o) const = default;
    bool operator<(const GrassContext& o) const {
        return std::pair(n, N) < std::pair(o.n, o.N);
    }
    std::string str() const;
};

/// A partition indexing a Schubert cycle: weakly decreasing nonnegative
/// parts, trailing zeros normalized away.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}
    explicit Partition(std::vector<int> p);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }
    int weight() const;

    bool fits(const GrassContext& ctx) const;
    /// Complement in the ctx box, reversed: the dual partition.
    Partition dual(const GrassContext& ctx) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }
    std::string str() const; // e.g. "(2,1)"

private:
    std::vector<int> parts_;
};

/// All partitions fitting the ctx box; if codim >= 0, only those of that weight.
std::vector<Partition> box_partitions(const GrassContext& ctx, int codim = -1);

/// An element of the Chow ring A(Gr(n,N)) in the Schubert basis, with
/// coefficients in Z[d, g, dv].
class ChowClass {
public:
    ChowClass() = default;
    explicit ChowClass(const GrassContext& ctx) : ctx_(ctx) {}
    static ChowClass sigma(const GrassContext& ctx, const Partition& p,
                           const ParamPoly& coeff = ParamPoly(1));
    static ChowClass one(const GrassContext& ctx) { return sigma(ctx, Partition{}); }

    const GrassContext& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, ParamPoly>& terms() const { return terms_; }
    ParamPoly coeff(const Partition& p) const;

    void add(const Partition& p, const ParamPoly& c);

    ChowClass operator-() const;
    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const ChowClass& o) const;
    ChowClass operator*(const ParamPoly& c) const;
    ChowClass& operator+=(const ChowClass& o);
    bool operator==(const ChowClass& o) const;

    /// Codimension when homogeneous; -1 for zero; throws if mixed.
    int codim() const;

    std::string str() const;

private:
    GrassContext ctx_;
    std::map<Partition, ParamPoly> terms_;
};

/// Pieri rule: sigma_lambda * sigma_i, the sum over admissible additions of
/// i boxes, no two in a column, inside the ctx box.
ChowClass pieri(const Partition& lambda, int i, const GrassContext& ctx);

/// General product via the Giambelli determinant expansion of one factor
/// into iterated Pieri multiplications.
ChowClass product(const ChowClass& a, const ChowClass& b);

/// Dual partition: sigma_a * sigma_dual(a) is the class of a point.
Partition dual(const Partition& lambda, const GrassContext& ctx);

/// Coefficient of the top Schubert class (the full box).
ParamPoly point_degree(const ChowClass& a);

/// Integer scaling, for the generic bundle algebra.
inline ChowClass scale(const ChowClass& x, const Int& c) { return x * ParamPoly(c); }

} // namespace skewcalc
