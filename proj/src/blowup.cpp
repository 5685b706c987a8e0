#include "skewcalc/blowup.hpp"

#include <iostream>
#include <mutex>
#include <sstream>

namespace skewcalc {

// ---------------------------------------------------------------------------
// TensorClass

TensorClass TensorClass::term(const GrassContext& ctx, const Partition& a, const Partition& b,
                              const ParamPoly& c) {
    if (!a.fits(ctx) || !b.fits(ctx))
        throw std::domain_error("TensorClass: partition outside the box");
    TensorClass t(ctx);
    t.add(a, b, c);
    return t;
}

ParamPoly TensorClass::coeff(const Partition& a, const Partition& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? ParamPoly() : it->second;
}

void TensorClass::add(const Partition& a, const Partition& b, const ParamPoly& c) {
    if (c.is_zero()) return;
    Key k{a, b};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {
const GrassContext& merge_tc(const GrassContext& a, bool az, const GrassContext& b, bool bz) {
    if (az && a.N == 0) return b;
    if (bz && b.N == 0) return a;
    if (!(a == b)) throw std::domain_error("mismatched contexts");
    return a;
}
} // namespace

TensorClass TensorClass::operator-() const {
    TensorClass r(ctx_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

TensorClass TensorClass::operator+(const TensorClass& o) const {
    TensorClass r(merge_tc(ctx_, is_zero(), o.ctx_, o.is_zero()));
    r.terms_ = terms_;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
    return r;
}

TensorClass& TensorClass::operator+=(const TensorClass& o) {
    *this = *this + o;
    return *this;
}

TensorClass TensorClass::operator-(const TensorClass& o) const { return *this + (-o); }

TensorClass TensorClass::operator*(const ParamPoly& c) const {
    TensorClass r(ctx_);
    for (const auto& [k, v] : terms_) r.add(k.first, k.second, v * c);
    return r;
}

TensorClass TensorClass::operator*(const TensorClass& o) const {
    if (is_zero() || o.is_zero()) return TensorClass();
    if (!(ctx_ == o.ctx_)) throw std::domain_error("mismatched contexts");
    TensorClass r(ctx_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            ChowClass left = product(ChowClass::sigma(ctx_, k1.first),
                                     ChowClass::sigma(ctx_, k2.first));
            ChowClass right = product(ChowClass::sigma(ctx_, k1.second),
                                      ChowClass::sigma(ctx_, k2.second));
            for (const auto& [pa, ca] : left.terms())
                for (const auto& [pb, cb] : right.terms())
                    r.add(pa, pb, c1 * c2 * ca * cb);
        }
    return r;
}

bool TensorClass::operator==(const TensorClass& o) const {
    if (is_zero() || o.is_zero()) return terms_ == o.terms_;
    return ctx_ == o.ctx_ && terms_ == o.terms_;
}

int TensorClass::codim() const {
    int c = -1;
    for (const auto& [k, v] : terms_) {
        int w = k.first.weight() + k.second.weight();
        if (c < 0) c = w;
        else if (c != w) throw std::logic_error("TensorClass: inhomogeneous");
    }
    return c;
}

std::string TensorClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*s" << k.first.str() << "(x)s" << k.second.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// E ring data

std::shared_ptr<const ERingData> e_ring(const GrassContext& ctx) {
    static std::map<GrassContext, std::shared_ptr<const ERingData>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ctx);
    if (it != cache.end()) return it->second;

    int dimG = ctx.dim();
    // c(Q) = 1 + sigma_1 + ... + sigma_(N-n); c(S) is its inverse series.
    FormalBundle<ChowClass> Q{ctx.N - ctx.n, std::vector<ChowClass>(static_cast<size_t>(dimG) + 1)};
    Q.chern[0] = ChowClass::one(ctx);
    for (int i = 1; i <= dimG; ++i) {
        if (i <= ctx.cols()) Q.chern[static_cast<size_t>(i)] = ChowClass::sigma(ctx, Partition{i});
    }
    FormalBundle<ChowClass> S{ctx.n, segre(Q)};
    FormalBundle<ChowClass> TG = tensor(dual(S), Q);

    auto data = std::make_shared<ERingData>();
    data->ctx = ctx;
    data->cTG = TG.chern;
    cache.emplace(ctx, data);
    return data;
}

// ---------------------------------------------------------------------------
// EClass

EClass EClass::term(const std::shared_ptr<const ERingData>& ring, const Partition& p, int zexp,
                    const ParamPoly& c) {
    if (!p.fits(ring->ctx)) throw std::domain_error("EClass: partition outside the box");
    if (zexp < 0) throw std::domain_error("EClass: negative zeta exponent");
    EClass e(ring);
    e.add(p, zexp, c);
    return e;
}

ParamPoly EClass::coeff(const Partition& p, int zexp) const {
    auto it = terms_.find({p, zexp});
    return it == terms_.end() ? ParamPoly() : it->second;
}

void EClass::add(const Partition& p, int zexp, const ParamPoly& c) {
    if (c.is_zero()) return;
    int dimG = ring_->ctx.dim();
    if (zexp < dimG) {
        Key k{p, zexp};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return;
    }
    // zeta^dimG = -sum_{i>=1} c_i(T_G) zeta^(dimG - i)
    ChowClass base = ChowClass::sigma(ring_->ctx, p, c);
    for (int i = 1; i <= dimG; ++i) {
        ChowClass prod = product(base, ring_->cTG[static_cast<size_t>(i)]);
        for (const auto& [q, cc] : prod.terms()) add(q, zexp - i, -cc);
    }
}

EClass EClass::operator-() const {
    EClass r(ring_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

namespace {
std::shared_ptr<const ERingData> merge_ring(const std::shared_ptr<const ERingData>& a, bool az,
                                            const std::shared_ptr<const ERingData>& b, bool bz) {
    if (az) return bz ? (a ? a : b) : b;
    if (bz) return a;
    if (!a || !b) throw std::domain_error("EClass: nonzero class without a ring");
    if (!(a->ctx == b->ctx)) throw std::domain_error("mismatched E rings");
    return a;
}
} // namespace

EClass EClass::operator+(const EClass& o) const {
    EClass r(merge_ring(ring_, is_zero(), o.ring_, o.is_zero()));
    r.terms_ = terms_;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
    return r;
}

EClass& EClass::operator+=(const EClass& o) {
    *this = *this + o;
    return *this;
}

EClass EClass::operator-(const EClass& o) const { return *this + (-o); }

EClass EClass::operator*(const ParamPoly& c) const {
    EClass r(ring_);
    for (const auto& [k, v] : terms_) r.add(k.first, k.second, v * c);
    return r;
}

EClass EClass::operator*(const EClass& o) const {
    if (is_zero() || o.is_zero()) return EClass();
    if (!(ring_->ctx == o.ring_->ctx)) throw std::domain_error("mismatched E rings");
    EClass r(ring_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            ChowClass prod = product(ChowClass::sigma(ring_->ctx, k1.first),
                                     ChowClass::sigma(ring_->ctx, k2.first));
            for (const auto& [p, c] : prod.terms())
                r.add(p, k1.second + k2.second, c1 * c2 * c);
        }
    return r;
}

bool EClass::operator==(const EClass& o) const {
    if (is_zero() || o.is_zero()) return terms_ == o.terms_;
    return ring_->ctx == o.ring_->ctx && terms_ == o.terms_;
}

EClass EClass::base_mul(const ChowClass& c) const {
    if (is_zero() || c.is_zero()) return EClass();
    EClass r(ring_);
    for (const auto& [k, v] : terms_) {
        ChowClass prod = product(ChowClass::sigma(ring_->ctx, k.first), c);
        for (const auto& [p, cc] : prod.terms()) r.add(p, k.second, v * cc);
    }
    return r;
}

EClass EClass::zeta_mul(int k) const {
    EClass r(ring_);
    for (const auto& [key, v] : terms_) r.add(key.first, key.second + k, v);
    return r;
}

int EClass::codim() const {
    int c = -1;
    for (const auto& [k, v] : terms_) {
        int w = k.first.weight() + k.second;
        if (c < 0) c = w;
        else if (c != w) throw std::logic_error("EClass: inhomogeneous");
    }
    return c;
}

std::string EClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*sbar" << k.first.str();
        if (k.second > 0) os << "*z^" << k.second;
    }
    return os.str();
}

EClass mult_E(const EClass& a, const EClass& b) { return a * b; }

// ---------------------------------------------------------------------------
// Diagonal push/pull

ChowClass i_pullback(const TensorClass& t) {
    if (t.is_zero()) return ChowClass();
    ChowClass out(t.ctx());
    for (const auto& [k, c] : t.terms())
        out += product(ChowClass::sigma(t.ctx(), k.first),
                       ChowClass::sigma(t.ctx(), k.second)) * c;
    return out;
}

TensorClass i_pushforward(const ChowClass& c) {
    if (c.is_zero()) return TensorClass();
    const GrassContext& ctx = c.ctx();
    int dimG = ctx.dim();
    TensorClass out(ctx);
    for (const auto& [p, coeff] : c.terms()) {
        int target = p.weight() + dimG;
        if (target > 2 * dimG) continue;
        for (int wa = std::max(0, target - dimG); wa <= std::min(dimG, target); ++wa) {
            for (const Partition& a : box_partitions(ctx, wa)) {
                for (const Partition& b : box_partitions(ctx, target - wa)) {
                    ChowClass triple = product(
                        product(ChowClass::sigma(ctx, a.dual(ctx)), ChowClass::sigma(ctx, b.dual(ctx))),
                        ChowClass::sigma(ctx, p));
                    ParamPoly n = point_degree(triple);
                    if (n.is_zero()) continue;
                    if (!(n == ParamPoly(1)))
                        std::cerr << "note: diagonal pushforward coefficient " << n.str()
                                  << " > 1 at sigma" << p.str() << " -> sigma" << a.str()
                                  << "(x)sigma" << b.str() << " in " << ctx.str() << "\n";
                    out.add(a, b, n * coeff);
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// BlowupClass

BlowupClass::BlowupClass(TensorClass pullback, EClass exceptional)
    : pullback_(std::move(pullback)), exceptional_(std::move(exceptional)) {
    normalize();
}

BlowupClass BlowupClass::E(const GrassContext& ctx) {
    return BlowupClass(TensorClass{}, EClass::one(e_ring(ctx)));
}

void BlowupClass::normalize() {
    if (exceptional_.is_zero()) return;
    const auto ring = exceptional_.ring();
    int dimG = ring->ctx.dim();
    bool again = true;
    while (again) {
        again = false;
        for (const auto& [k, c] : exceptional_.terms()) {
            if (k.second != dimG - 1) continue;
            Partition p = k.first;
            ParamPoly coeff = c;
            // j_*(sbar_p z^(dimG-1)) = pi^*(i_*(sigma_p))
            //   - j_*(sbar_p sum_{i>=1} c_i(T_G) z^(dimG-1-i))
            exceptional_.add(p, dimG - 1, -coeff);
            pullback_ += i_pushforward(ChowClass::sigma(ring->ctx, p, coeff));
            for (int i = 1; i <= dimG - 1; ++i) {
                ChowClass prod = product(ChowClass::sigma(ring->ctx, p, coeff),
                                         ring->cTG[static_cast<size_t>(i)]);
                for (const auto& [q, cc] : prod.terms())
                    exceptional_.add(q, dimG - 1 - i, -cc);
            }
            again = true;
            break;
        }
    }
}

BlowupClass BlowupClass::operator-() const {
    BlowupClass r;
    r.pullback_ = -pullback_;
    r.exceptional_ = -exceptional_;
    return r;
}

BlowupClass BlowupClass::operator+(const BlowupClass& o) const {
    BlowupClass r;
    r.pullback_ = pullback_ + o.pullback_;
    r.exceptional_ = exceptional_ + o.exceptional_;
    return r;
}

BlowupClass BlowupClass::operator-(const BlowupClass& o) const { return *this + (-o); }

BlowupClass BlowupClass::operator*(const ParamPoly& c) const {
    BlowupClass r;
    r.pullback_ = pullback_ * c;
    r.exceptional_ = exceptional_ * c;
    return r;
}

BlowupClass BlowupClass::operator*(const BlowupClass& o) const { return mult_B(*this, o); }

bool BlowupClass::operator==(const BlowupClass& o) const {
    return pullback_ == o.pullback_ && exceptional_ == o.exceptional_;
}

int BlowupClass::codim() const {
    int c = -1;
    if (!pullback_.is_zero()) c = pullback_.codim();
    if (!exceptional_.is_zero()) {
        int ce = exceptional_.codim() + 1;
        if (c >= 0 && c != ce) throw std::logic_error("BlowupClass: inhomogeneous");
        c = ce;
    }
    return c;
}

std::string BlowupClass::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool have = false;
    if (!pullback_.is_zero()) {
        os << "pi*( " << pullback_.str() << " )";
        have = true;
    }
    if (!exceptional_.is_zero()) {
        if (have) os << " + ";
        os << "j*( " << exceptional_.str() << " )";
    }
    return os.str();
}

BlowupClass mult_B(const BlowupClass& x, const BlowupClass& y) {
    // (pi^*A + j_*u)(pi^*B + j_*v) =
    //   pi^*(AB) + j_*( u i^*B + v i^*A - u v zeta )
    TensorClass pull = x.pullback() * y.pullback();
    EClass exc;
    if (!x.exceptional().is_zero() && !y.pullback().is_zero())
        exc += x.exceptional().base_mul(i_pullback(y.pullback()));
    if (!y.exceptional().is_zero() && !x.pullback().is_zero())
        exc += y.exceptional().base_mul(i_pullback(x.pullback()));
    if (!x.exceptional().is_zero() && !y.exceptional().is_zero())
        exc -= (x.exceptional() * y.exceptional()).zeta_mul(1);
    return BlowupClass(std::move(pull), std::move(exc));
}

BlowupClass normal_form(const BlowupClass& x) {
    return BlowupClass(x.pullback(), x.exceptional());
}

ParamPoly point_degree(const BlowupClass& x) {
    if (x.pullback().is_zero()) return ParamPoly();
    const GrassContext& ctx = x.pullback().ctx();
    std::vector<int> box(static_cast<size_t>(ctx.rows()), ctx.cols());
    Partition top{box};
    return x.pullback().coeff(top, top);
}

std::optional<EClass> as_exceptional(const BlowupClass& x) {
    EClass w = x.exceptional();
    if (x.pullback().is_zero()) return w;
    const GrassContext& ctx = x.pullback().ctx();
    auto ring = e_ring(ctx);
    int dimG = ctx.dim();
    int c = x.pullback().codim();
    if (c < dimG) return std::nullopt;
    TensorClass rebuilt(ctx);
    for (const Partition& p : box_partitions(ctx, c - dimG)) {
        // c_p = deg_{GxG}( T * (sigma_pbar (x) 1) )
        TensorClass probe = x.pullback() * TensorClass::term(ctx, p.dual(ctx), Partition{});
        Partition topp{std::vector<int>(static_cast<size_t>(ctx.rows()), ctx.cols())};
        ParamPoly cp = probe.coeff(topp, topp);
        if (cp.is_zero()) continue;
        rebuilt += i_pushforward(ChowClass::sigma(ctx, p, cp));
        // rule (iv) expansion of pi^*(i_*(sigma_p))
        w += EClass::term(ring, p, dimG - 1, cp);
        for (int i = 1; i <= dimG - 1; ++i) {
            ChowClass prod = product(ChowClass::sigma(ctx, p, cp), ring->cTG[static_cast<size_t>(i)]);
            for (const auto& [q, cc] : prod.terms()) w += EClass::term(ring, q, dimG - 1 - i, cc);
        }
    }
    if (!(rebuilt == x.pullback())) return std::nullopt;
    return w;
}

BlowupClass c1_TB(const GrassContext& ctx) {
    auto ring = e_ring(ctx);
    const ChowClass& c1 = ring->cTG[1];
    TensorClass pull(ctx);
    for (const auto& [p, c] : c1.terms()) {
        pull.add(p, Partition{}, c);
        pull.add(Partition{}, p, c);
    }
    EClass exc = EClass::one(ring) * ParamPoly(-(ctx.dim() - 1));
    return BlowupClass(std::move(pull), std::move(exc));
}

// ---------------------------------------------------------------------------
// Proper transforms

ProperTransform solve_proper_transform(const TensorClass& pullback, const EClass& geo,
                                       std::optional<ParamPoly> multiplicity) {
    if (geo.is_zero()) throw std::invalid_argument("solve_proper_transform: zero geometric class");
    auto ring = geo.ring();
    ChowClass restricted = i_pullback(pullback);

    ParamPoly m;
    if (multiplicity) {
        m = *multiplicity;
    } else {
        bool found = false;
        for (const auto& [k, c] : geo.terms()) {
            if (k.second != 0) continue;
            ParamPoly lhs = restricted.coeff(k.first);
            auto q = lhs.div_exact(c);
            if (!q) throw std::logic_error("solve_proper_transform: non-polynomial multiplicity");
            if (found && !(m == *q))
                throw std::logic_error("solve_proper_transform: inconsistent multiplicity");
            m = *q;
            found = true;
        }
        if (!found)
            throw std::logic_error("solve_proper_transform: multiplicity undetermined, fix it explicitly");
    }

    // zeta^0 stratum consistency: i^*(pullback) must equal m * geo|_{z^0}
    for (const auto& [p, c] : restricted.terms()) {
        if (!(c == m * geo.coeff(p, 0)))
            throw std::logic_error("solve_proper_transform: inconsistent zeta^0 stratum");
    }

    EClass mu(ring);
    for (const auto& [k, c] : geo.terms()) {
        if (k.second == 0) continue;
        mu.add(k.first, k.second - 1, -(m * c));
    }

    ProperTransform out{BlowupClass(pullback, mu), m};

    // [E] * result must reproduce j_*(m * geo) exactly
    BlowupClass check = mult_B(BlowupClass::E(ring->ctx), out.cls);
    BlowupClass expect = BlowupClass::j_star(geo * m);
    if (!(check == expect))
        throw std::logic_error("solve_proper_transform: verification failed (rule implementation bug)");
    return out;
}

TensorClass class_D1(const GrassContext& ctx) {
    int trunc = 2 * ctx.dim();
    // c(S) as the inverse of c(Q) in A(G)
    FormalBundle<ChowClass> Q{ctx.N - ctx.n,
                              std::vector<ChowClass>(static_cast<size_t>(ctx.dim()) + 1)};
    Q.chern[0] = ChowClass::one(ctx);
    for (int i = 1; i <= ctx.dim() && i <= ctx.cols(); ++i)
        Q.chern[static_cast<size_t>(i)] = ChowClass::sigma(ctx, Partition{i});
    std::vector<ChowClass> cS = segre(Q);

    auto embed = [&](bool left) {
        FormalBundle<TensorClass> b{ctx.n, std::vector<TensorClass>(static_cast<size_t>(trunc) + 1)};
        for (int i = 0; i <= ctx.n && i <= trunc; ++i) {
            TensorClass t(ctx);
            if (i < static_cast<int>(cS.size()))
                for (const auto& [p, c] : cS[static_cast<size_t>(i)].terms())
                    left ? t.add(p, Partition{}, c) : t.add(Partition{}, p, c);
            b.chern[static_cast<size_t>(i)] = std::move(t);
        }
        b.chern[0] = TensorClass::one(ctx);
        return b;
    };
    FormalBundle<TensorClass> S12 = direct_sum(embed(true), embed(false));
    FormalBundle<TensorClass> V = trivial_bundle(ctx.N, TensorClass::one(ctx), trunc);
    return porteous(S12, V, 2 * ctx.n - 1);
}

EClass class_D1_tilde_cap_E(const GrassContext& ctx) {
    auto ring = e_ring(ctx);
    int trunc = 2 * ctx.dim() - 1;
    FormalBundle<EClass> piS{ctx.n, std::vector<EClass>(static_cast<size_t>(trunc) + 1)};
    piS.chern[0] = EClass::one(ring);
    for (int i = 1; i <= ctx.n; ++i) {
        std::vector<int> col(static_cast<size_t>(i), 1);
        piS.chern[static_cast<size_t>(i)] =
            EClass::term(ring, Partition{col}, 0, ParamPoly(i % 2 ? -1 : 1));
    }
    EClass minus_zeta = EClass::term(ring, Partition{}, 1, ParamPoly(-1));
    FormalBundle<EClass> twisted = twist_by_line(piS, minus_zeta);

    FormalBundle<EClass> piQ{ctx.N - ctx.n, std::vector<EClass>(static_cast<size_t>(trunc) + 1)};
    piQ.chern[0] = EClass::one(ring);
    for (int i = 1; i <= ctx.cols(); ++i)
        piQ.chern[static_cast<size_t>(i)] = EClass::term(ring, Partition{i}, 0);

    return porteous(twisted, piQ, ctx.n - 1);
}

ProperTransform class_D1_tilde(const GrassContext& ctx) {
    return solve_proper_transform(class_D1(ctx), class_D1_tilde_cap_E(ctx));
}

EClass class_Gamma_tilde_cap_E(const GrassContext& ctx, const ParamPoly& dv, const ParamPoly& g) {
    auto ring = e_ring(ctx);
    std::vector<int> cc{ctx.cols(), ctx.cols() - 1};
    ChowClass curve = ChowClass::sigma(ctx, Partition{cc}, dv);
    ChowClass c1TG = ring->cTG[1];
    std::vector<int> box(static_cast<size_t>(ctx.rows()), ctx.cols());
    ChowClass Kpush = ChowClass::sigma(ctx, Partition{box}, 2 * g - ParamPoly(2));
    auto [hi, lo] = projcur_terms(curve, c1TG, Kpush, ctx.dim());

    EClass out(ring);
    for (const auto& [p, c] : hi.second.terms()) out.add(p, hi.first, c);
    for (const auto& [p, c] : lo.second.terms()) out.add(p, lo.first, c);
    return out;
}

BlowupClass class_Gamma_tilde(const GrassContext& ctx, const ParamPoly& dv, const ParamPoly& g) {
    std::vector<int> cc{ctx.cols(), ctx.cols() - 1};
    Partition p{cc};
    TensorClass pull = TensorClass::term(ctx, p, p, dv * dv);
    EClass geo = class_Gamma_tilde_cap_E(ctx, dv, g);
    return solve_proper_transform(pull, geo, ParamPoly(1)).cls;
}

} // namespace skewcalc
