#include "skewcalc/grass.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace skewcalc {

GrassContext::GrassContext(int n_, int N_) : n(n_), N(N_) {
    if (n < 1 || n > N) throw std::domain_error("GrassContext: need 1 <= n <= N");
}

std::string GrassContext::str() const {
    return "Gr(" + std::to_string(n) + "," + std::to_string(N) + ")";
}

Partition::Partition(std::vector<int> p) : parts_(std::move(p)) {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw std::domain_error("Partition: parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::domain_error("Partition: parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

bool Partition::fits(const GrassContext& ctx) const {
    return length() <= ctx.rows() && part(0) <= ctx.cols();
}

Partition Partition::dual(const GrassContext& ctx) const {
    if (!fits(ctx)) throw std::domain_error("dual: partition outside the box");
    std::vector<int> out(ctx.rows());
    for (int i = 0; i < ctx.rows(); ++i)
        out[i] = ctx.cols() - part(ctx.rows() - 1 - i);
    return Partition(std::move(out));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> box_partitions(const GrassContext& ctx, int codim) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxpart) {
        if (codim < 0 || [&] {
                int w = 0;
                for (int p : cur) w += p;
                return w;
            }() <= codim) {
            if (row == ctx.rows()) {
                Partition p(cur);
                if (codim < 0 || p.weight() == codim) out.push_back(p);
                return;
            }
            for (int v = maxpart; v >= 0; --v) {
                cur.push_back(v);
                rec(row + 1, v);
                cur.pop_back();
            }
        }
    };
    rec(0, ctx.cols());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ChowClass ChowClass::sigma(const GrassContext& ctx, const Partition& p, const ParamPoly& coeff) {
    if (!p.fits(ctx)) throw std::domain_error("sigma: partition outside the box of " + ctx.str());
    ChowClass c(ctx);
    c.add(p, coeff);
    return c;
}

ParamPoly ChowClass::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? ParamPoly() : it->second;
}

void ChowClass::add(const Partition& p, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {
const GrassContext& merge_ctx(const GrassContext& a, bool a_zero,
                              const GrassContext& b, bool b_zero) {
    if (a_zero && a.N == 0) return b;
    if (b_zero && b.N == 0) return a;
    if (!(a == b)) throw std::domain_error("mismatched Grassmannian contexts");
    return a;
}
} // namespace

ChowClass ChowClass::operator-() const {
    ChowClass r(ctx_);
    for (const auto& [p, c] : terms_) r.terms_[p] = -c;
    return r;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    ChowClass r(merge_ctx(ctx_, is_zero(), o.ctx_, o.is_zero()));
    r.terms_ = terms_;
    for (const auto& [p, c] : o.terms_) r.add(p, c);
    return r;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    *this = *this + o;
    return *this;
}

ChowClass ChowClass::operator-(const ChowClass& o) const { return *this + (-o); }

ChowClass ChowClass::operator*(const ParamPoly& c) const {
    ChowClass r(ctx_);
    for (const auto& [p, v] : terms_) r.add(p, v * c);
    return r;
}

ChowClass ChowClass::operator*(const ChowClass& o) const { return product(*this, o); }

bool ChowClass::operator==(const ChowClass& o) const {
    if (is_zero() || o.is_zero()) return terms_ == o.terms_;
    return ctx_ == o.ctx_ && terms_ == o.terms_;
}

int ChowClass::codim() const {
    int c = -1;
    for (const auto& [p, v] : terms_) {
        if (c < 0) c = p.weight();
        else if (c != p.weight()) throw std::logic_error("codim: inhomogeneous class");
    }
    return c;
}

std::string ChowClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*s" << p.str();
    }
    return os.str();
}

ChowClass pieri(const Partition& lambda, int i, const GrassContext& ctx) {
    if (i < 0 || i > ctx.cols()) throw std::domain_error("pieri: index out of range");
    if (!lambda.fits(ctx)) throw std::domain_error("pieri: partition outside the box");
    ChowClass out(ctx);
    // mu ranges over partitions obtained by adding i boxes, no two in a
    // column: lambda_{k-1} >= mu_k >= lambda_k, staying in the box.
    std::vector<int> mu(ctx.rows());
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (row == ctx.rows()) {
            if (left == 0) out.add(Partition(std::vector<int>(mu.begin(), mu.end())), ParamPoly(1));
            return;
        }
        int lo = lambda.part(row);
        int hi = row == 0 ? ctx.cols() : std::min(lambda.part(row - 1), mu[row - 1]);
        hi = std::min(hi, lo + left);
        for (int v = lo; v <= hi; ++v) {
            mu[row] = v;
            rec(row + 1, left - (v - lo));
        }
        mu[row] = 0;
    };
    rec(0, i);
    return out;
}

namespace {

// Giambelli: sigma_lambda = det(sigma_{lambda_i + j - i}).  Expand the
// determinant over permutations into signed sequences of row degrees.
struct RowTerm {
    std::vector<int> rows;
    int sign;
};

std::vector<RowTerm> giambelli_rows(const Partition& lambda) {
    int k = lambda.length();
    std::vector<RowTerm> out;
    if (k == 0) return {{{}, 1}};
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
        int sign = 1;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        std::vector<int> rows(k);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            rows[i] = lambda.part(i) + perm[i] - i;
            if (rows[i] < 0) ok = false;
        }
        if (ok) out.push_back({std::move(rows), sign});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

ChowClass product(const ChowClass& a, const ChowClass& b) {
    if (a.is_zero() || b.is_zero()) return ChowClass();
    const GrassContext ctx = a.ctx();
    if (!(ctx == b.ctx())) throw std::domain_error("product: mismatched contexts");
    ChowClass out(ctx);
    for (const auto& [la, ca] : a.terms()) {
        for (const auto& rt : giambelli_rows(la)) {
            // rows beyond the box width vanish in the quotient presentation
            bool dead = false;
            for (int r : rt.rows)
                if (r > ctx.cols()) { dead = true; break; }
            if (dead) continue;
            for (const auto& [mu, cb] : b.terms()) {
                ChowClass acc = ChowClass::sigma(ctx, mu);
                for (int r : rt.rows) {
                    if (acc.is_zero()) break;
                    ChowClass next(ctx);
                    for (const auto& [p, c] : acc.terms())
                        next += pieri(p, r, ctx) * c;
                    acc = next;
                }
                out += acc * (ca * cb * ParamPoly(rt.sign));
            }
        }
    }
    return out;
}

Partition dual(const Partition& lambda, const GrassContext& ctx) {
    return lambda.dual(ctx);
}

ParamPoly point_degree(const ChowClass& a) {
    if (a.is_zero()) return ParamPoly();
    std::vector<int> box(a.ctx().rows(), a.ctx().cols());
    return a.coeff(Partition(box));
}

} // namespace skewcalc
