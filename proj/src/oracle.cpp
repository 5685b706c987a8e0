#include "skewcalc/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>

namespace skewcalc {

namespace {

unsigned long long splitmix64(unsigned long long x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

long rand_in(std::mt19937_64& rng, long lo, long hi) {
    return static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
}

std::array<Int, 4> draw_mobius(std::mt19937_64& rng) {
    for (;;) {
        Int a = rand_in(rng, -9, 9), b = rand_in(rng, -9, 9);
        Int c = rand_in(rng, -9, 9), d = rand_in(rng, -9, 9);
        if (a * d - b * c != 0) return {a, b, c, d};
    }
}

std::vector<std::vector<Rat>> tangent_pair_matrix(const RationalCurve& curve, const Rat& t,
                                                  const Rat& s) {
    std::vector<ZPoly> d = curve.derivative();
    size_t rows = curve.coords().size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(4));
    for (size_t r = 0; r < rows; ++r) {
        m[r][0] = curve.coords()[r].eval<Rat>(t);
        m[r][1] = d[r].eval<Rat>(t);
        m[r][2] = curve.coords()[r].eval<Rat>(s);
        m[r][3] = d[r].eval<Rat>(s);
    }
    return m;
}

FamilyDeterminant analyze_determinant(const BiPoly& det, int expected) {
    FamilyDeterminant out;
    out.expected_exponent = expected;
    if (det.is_zero()) {
        out.identically_zero = true;
        return out;
    }
    auto [sat, k] = saturate_t_minus_s(det);
    out.exponent = k;
    out.saturated = sat;
    out.is_constant = sat.is_constant();
    if (out.is_constant) out.constant = sat.constant();
    return out;
}

} // namespace

bool tangent_meet(const RationalCurve& curve, const Rat& t, const Rat& s) {
    if (t == s) throw std::domain_error("tangent_meet: equal parameters");
    auto m = tangent_pair_matrix(curve, t, s);
    // each tangent line must be defined
    std::vector<std::vector<Rat>> left(m.size(), std::vector<Rat>(2)), right = left;
    for (size_t r = 0; r < m.size(); ++r) {
        left[r][0] = m[r][0];
        left[r][1] = m[r][1];
        right[r][0] = m[r][2];
        right[r][1] = m[r][3];
    }
    if (matrix_rank(left) < 2 || matrix_rank(right) < 2)
        throw precondition_error("tangent_meet: curve is not immersed at a sample point");
    return matrix_rank(m) <= 3;
}

FamilyDeterminant family_determinant_p3(const LineFamily& fam) {
    if (fam.ambient != 3) throw std::domain_error("family_determinant_p3: ambient must be 3");
    std::vector<BiPoly> minors = fam.pair_minors();
    return analyze_determinant(minors.at(0), fam.deg1 + fam.deg2);
}

FamilyDeterminant tangent_determinant_p3(const RationalCurve& curve) {
    if (curve.ambient() != 3) throw std::domain_error("tangent_determinant_p3: ambient must be 3");
    std::vector<ZPoly> d = curve.derivative();
    std::vector<std::vector<BiPoly>> m(4, std::vector<BiPoly>(4));
    for (size_t r = 0; r < 4; ++r) {
        m[r][0] = BiPoly::from_t(curve.coords()[r]);
        m[r][1] = BiPoly::from_t(d[r]);
        m[r][2] = BiPoly::from_s(curve.coords()[r]);
        m[r][3] = BiPoly::from_s(d[r]);
    }
    // raw tangent columns have bidegree 2*deg - 1 in general, but the
    // saturated exponent is what matters here
    return analyze_determinant(bipoly_det(m), 2 * curve.degree() - 2);
}

FamilyDeterminant twisted_cubic_identity() {
    return tangent_determinant_p3(RationalCurve::rational_normal(3));
}

namespace {

// ---------------------------------------------------------------------------
// Modular candidate arithmetic.  Certification gcds over Q[t] blow up on the
// coefficients of the remainder-sequence data, so gcd candidates are found
// modulo machine-word primes and then verified exactly.  Primality of the
// moduli is deterministic (fixed Miller-Rabin base set, valid below 3.3e24).

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod_u64(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 invmod_u64(u64 a, u64 p) { return powmod_u64(a, p - 2, p); }

// dense polynomial over F_p, lowest degree first, normalized
using PPoly = std::vector<u64>;

void ppoly_norm(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 int_mod(const Int& v, u64 p) {
    Int r = v % Int(p);
    if (r < 0) r += p;
    return r.convert_to<u64>();
}

PPoly zpoly_mod(const ZPoly& z, u64 p) {
    PPoly out;
    out.reserve(z.coeffs().size());
    for (const Int& c : z.coeffs()) out.push_back(int_mod(c, p));
    ppoly_norm(out);
    return out;
}

PPoly ppoly_mul(const PPoly& a, const PPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + (u128)a[i] * b[j]) % p;
    }
    ppoly_norm(out);
    return out;
}

// remainder of a by b (b nonzero)
PPoly ppoly_rem(PPoly a, const PPoly& b, u64 p) {
    u64 inv = invmod_u64(b.back(), p);
    while (a.size() >= b.size()) {
        u64 q = mulmod_u64(a.back(), inv, p);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            u64 sub = mulmod_u64(q, b[i], p);
            a[off + i] = (a[off + i] + p - sub) % p;
        }
        ppoly_norm(a);
        if (a.size() > off + b.size()) throw std::logic_error("ppoly_rem"); // unreachable
        if (a.empty()) break;
        if (a.size() >= b.size() && a.back() == 0) ppoly_norm(a);
    }
    return a;
}

PPoly ppoly_gcd(PPoly a, PPoly b, u64 p) {
    while (!b.empty()) {
        PPoly r = ppoly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod_u64(a.back(), p);
        for (u64& c : a) c = mulmod_u64(c, inv, p);
    }
    return a;
}

// deterministic 62-bit prime stream
struct PrimeStream {
    u64 next = (1ULL << 62) + 1;
    u64 operator()() {
        while (!is_prime_u64(next)) next += 2;
        u64 p = next;
        next += 2;
        return p;
    }
};

// ---------------------------------------------------------------------------
// Level certification.
//
// For a squarefree factor M of the eliminant R = Res_s(h1, h2), the wanted
// factor is gcd(M, C_1, ..., C_k) where C_i is the i-th saturated minor
// with s substituted by the recovered partner root -v(t)/u(t) and cleared
// by u-powers; u s + v is the linear element of the remainder sequence of
// (h1, h2), so at every common zero with u(t0) != 0 the substitution picks
// the actual partner.  Candidates are assembled by CRT from the gcd images
// modulo word-size primes (a sound upper bound: reduction mod p can only
// grow a gcd when p preserves lc(M)), and are then verified exactly:
// divisibility into M by rational division, and divisibility into each C_i
// by checking the remainder against a rigorous height bound over enough
// certified primes.  A verified candidate of the observed modular degree
// is the exact gcd, so the count is certified from both sides.

// data reduced mod p: M monic, u, v and the minor coefficients reduced
struct ModSystem {
    u64 p = 0;
    PPoly M;
    PPoly u, v;
    std::vector<std::vector<PPoly>> sat_coeffs;
    bool usable = false;
};

ModSystem reduce_system(const ZPoly& Mz, const ZPoly& u, const ZPoly& v,
                        const std::vector<BiPoly>& sats, u64 p) {
    ModSystem out;
    out.p = p;
    if (int_mod(Mz.lc(), p) == 0) return out;
    out.M = zpoly_mod(Mz, p);
    {
        u64 inv = invmod_u64(out.M.back(), p);
        for (u64& c : out.M) c = mulmod_u64(c, inv, p);
    }
    out.u = ppoly_rem(zpoly_mod(u, p), out.M, p);
    out.v = ppoly_rem(zpoly_mod(v, p), out.M, p);
    for (const BiPoly& sat : sats) {
        std::vector<PPoly> cs;
        for (size_t j = 0; j < sat.coeffs().size(); ++j)
            cs.push_back(ppoly_rem(zpoly_mod(sat.coeff_s(j), p), out.M, p));
        out.sat_coeffs.push_back(std::move(cs));
    }
    out.usable = true;
    return out;
}

// gcd(M, C_1, ..., C_k) mod p, everything reduced mod M along the way
PPoly modular_substituted_gcd(const ModSystem& sys) {
    u64 p = sys.p;
    PPoly g = sys.M;
    int maxD = 0;
    for (const auto& cs : sys.sat_coeffs) maxD = std::max(maxD, static_cast<int>(cs.size()) - 1);
    PPoly negv = sys.v;
    for (u64& c : negv) c = (p - c) % p;
    std::vector<PPoly> pu{{1}}, pv{{1}};
    for (int j = 1; j <= maxD; ++j) {
        pu.push_back(ppoly_rem(ppoly_mul(pu.back(), sys.u, p), sys.M, p));
        pv.push_back(ppoly_rem(ppoly_mul(pv.back(), negv, p), sys.M, p));
    }
    for (const auto& cs : sys.sat_coeffs) {
        if (g.size() <= 1) break;
        int D = static_cast<int>(cs.size()) - 1;
        PPoly C;
        for (int j = 0; j <= D && j < static_cast<int>(cs.size()); ++j) {
            PPoly term = ppoly_mul(cs[static_cast<size_t>(j)], pv[static_cast<size_t>(j)], p);
            term = ppoly_rem(term, sys.M, p);
            term = ppoly_rem(ppoly_mul(term, pu[static_cast<size_t>(D - j)], p), sys.M, p);
            if (term.size() > C.size()) C.resize(term.size(), 0);
            for (size_t i = 0; i < term.size(); ++i) C[i] = (C[i] + term[i]) % p;
            ppoly_norm(C);
        }
        g = ppoly_gcd(g, ppoly_rem(C, g, p), p);
    }
    return g;
}

// CRT accumulation of an integer vector with symmetric lift
struct CrtState {
    Int modulus = 1;
    std::vector<Int> coeffs;

    void add(const std::vector<u64>& rem, u64 p) {
        if (coeffs.empty()) {
            modulus = p;
            for (u64 r : rem) {
                Int v(r);
                if (v * 2 > Int(p)) v -= p;
                coeffs.push_back(v);
            }
            return;
        }
        Int M = modulus, P(p);
        Int Minv = Int(invmod_u64(int_mod(M, p), p));
        Int newmod = M * P;
        Int half = newmod / 2;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            Int a = coeffs[i];
            Int r = i < rem.size() ? Int(rem[i]) : Int(0);
            Int diff = (r - a) % P;
            if (diff < 0) diff += P;
            Int x = a + ((diff * Minv) % P) * M;
            if (x > half) x -= newmod;
            if (x < -half) x += newmod;
            coeffs[i] = x;
        }
        modulus = newmod;
    }
};

Int inf_norm(const ZPoly& p) {
    Int n = 0;
    for (const Int& c : p.coeffs()) {
        Int a = boost::multiprecision::abs(c);
        if (a > n) n = a;
    }
    return n;
}

// cand | C for every substituted minor C, certified: the remainder of C mod
// cand has a computable height bound, and vanishing modulo a prime product
// exceeding twice that bound forces exact vanishing.
bool membership_certified(const ZPoly& cand, const ZPoly& u, const ZPoly& v,
                          const std::vector<BiPoly>& sats) {
    const int n = cand.deg();
    const Int candN = inf_norm(cand);
    const Int uN = std::max(inf_norm(u), Int(1)), vN = std::max(inf_norm(v), Int(1));
    const long ulen = u.deg() + 1, vlen = v.deg() + 1;

    Int need = 1; // required prime product: max over minors of 2*bound + 1
    for (const BiPoly& sat : sats) {
        int D = std::max(sat.deg_s(), 0);
        Int nC = 0;
        long dC = 0;
        for (int j = 0; j <= D; ++j) {
            const ZPoly& B = sat.coeff_s(static_cast<size_t>(j));
            if (B.is_zero()) continue;
            Int term = inf_norm(B) * (Int(B.deg()) + 1);
            for (int r = 0; r < j; ++r) term *= vN * vlen;
            for (int r = 0; r < D - j; ++r) term *= uN * ulen;
            nC += term;
            dC = std::max<long>(dC, B.deg() + static_cast<long>(j) * std::max(v.deg(), 0) +
                                         static_cast<long>(D - j) * std::max(u.deg(), 0));
        }
        Int bound = nC;
        if (dC >= n) {
            Int growth = 2 * candN;
            for (long k = 0; k <= dC - n; ++k) bound *= growth;
        }
        Int req = 2 * bound + 1;
        if (req > need) need = req;
    }

    PrimeStream primes;
    Int prod = 1;
    while (prod <= need) {
        u64 p = primes();
        if (int_mod(cand.lc(), p) == 0) continue;
        PPoly cp = zpoly_mod(cand, p);
        u64 inv = invmod_u64(cp.back(), p);
        for (u64& c : cp) c = mulmod_u64(c, inv, p);
        PPoly up = ppoly_rem(zpoly_mod(u, p), cp, p);
        PPoly vp = ppoly_rem(zpoly_mod(v, p), cp, p);
        PPoly negv = vp;
        for (u64& c : negv) c = (p - c) % p;
        int maxD = 0;
        for (const BiPoly& sat : sats) maxD = std::max(maxD, sat.deg_s());
        std::vector<PPoly> pu{{1}}, pv{{1}};
        for (int j = 1; j <= maxD; ++j) {
            pu.push_back(ppoly_rem(ppoly_mul(pu.back(), up, p), cp, p));
            pv.push_back(ppoly_rem(ppoly_mul(pv.back(), negv, p), cp, p));
        }
        for (const BiPoly& sat : sats) {
            int D = std::max(sat.deg_s(), 0);
            PPoly C;
            for (int j = 0; j <= D; ++j) {
                PPoly term = ppoly_rem(zpoly_mod(sat.coeff_s(static_cast<size_t>(j)), p), cp, p);
                term = ppoly_rem(ppoly_mul(term, pv[static_cast<size_t>(j)], p), cp, p);
                term = ppoly_rem(ppoly_mul(term, pu[static_cast<size_t>(D - j)], p), cp, p);
                if (term.size() > C.size()) C.resize(term.size(), 0);
                for (size_t i = 0; i < term.size(); ++i) C[i] = (C[i] + term[i]) % p;
                ppoly_norm(C);
            }
            if (!C.empty()) return false;
        }
        prod *= p;
    }
    return true;
}

// L^k a mod m over Z together with the scaling exponent k
std::pair<ZPoly, int> prem_pow(const ZPoly& a, const ZPoly& m) {
    ZPoly r = a;
    const Int L = m.lc();
    int k = 0;
    while (r.deg() >= m.deg()) {
        int sh = r.deg() - m.deg();
        Int top = r.lc();
        std::vector<Int> nr(r.coeffs().size(), Int(0));
        for (size_t i = 0; i < r.coeffs().size(); ++i) nr[i] = r[i] * L;
        for (int i = 0; i <= m.deg(); ++i)
            nr[static_cast<size_t>(sh + i)] -= top * m[static_cast<size_t>(i)];
        r = ZPoly(std::move(nr));
        ++k;
    }
    return {r, k};
}

// exact monic gcd(cand, X mod cand), with a certified modular fast path for
// the common coprime case
QPoly quotient_gcd(const ZPoly& cand, const ZPoly& X) {
    PrimeStream primes;
    for (int tries = 0; tries < 64; ++tries) {
        u64 p = primes();
        if (int_mod(cand.lc(), p) == 0) continue;
        PPoly cp = zpoly_mod(cand, p);
        u64 inv = invmod_u64(cp.back(), p);
        for (u64& c : cp) c = mulmod_u64(c, inv, p);
        PPoly g = ppoly_gcd(cp, ppoly_rem(zpoly_mod(X, p), cp, p), p);
        if (g.size() <= 1) return QPoly::constant(Rat(1));
        break;
    }
    ZPoly Xr = prem_pow(X, cand).first; // constant scaling is irrelevant for the gcd
    ZPoly g = gcd(cand, Xr);
    return monic(to_qpoly(g));
}

// certified gcd of the level with the substituted minors; constant 1 when
// the level carries no solutions
QPoly certify_level_gcd(const ZPoly& Mz, const ZPoly& u, const ZPoly& v,
                        const std::vector<BiPoly>& sats) {
    PrimeStream primes;
    int best_deg = -1;
    CrtState crt;
    std::vector<Int> last;

    for (int iter = 0; iter < 512; ++iter) {
        u64 p = primes();
        ModSystem sys = reduce_system(Mz, u, v, sats, p);
        if (!sys.usable) continue;
        PPoly g = modular_substituted_gcd(sys);
        int d = static_cast<int>(g.size()) - 1;
        if (d == 0) return QPoly::constant(Rat(1)); // sound: mod p only grows gcds
        if (best_deg < 0 || d < best_deg) {
            best_deg = d;
            crt = CrtState{};
            last.clear();
        } else if (d > best_deg) {
            continue; // unlucky prime
        }

        u64 lcm = int_mod(Mz.lc(), p);
        std::vector<u64> lifted(g.size());
        for (size_t i = 0; i < g.size(); ++i) lifted[i] = mulmod_u64(g[i], lcm, p);
        crt.add(lifted, p);
        bool stable = (crt.coeffs == last);
        last = crt.coeffs;
        if (!stable) continue;

        ZPoly cand = primitive_part(ZPoly(std::vector<Int>(crt.coeffs)));
        if (cand.deg() != best_deg) continue;
        QPoly mg = monic(to_qpoly(cand));
        if (!divrem(to_qpoly(Mz), mg).second.is_zero()) continue;
        if (!membership_certified(cand, u, v, sats)) continue;
        // the verified candidate divides the exact gcd, whose degree the
        // modular images bound by best_deg: both sides meet, so this is it
        return mg;
    }
    throw consistency_error("certify: candidate did not stabilize");
}

// gcd-like common factor detection across the saturated minors, used only
// on the degenerate path where the resultant vanishes identically
bool minors_share_factor(const std::vector<BiPoly>& sats) {
    std::vector<BiPoly> nz;
    for (const auto& m : sats)
        if (!m.is_zero()) nz.push_back(m);
    if (nz.size() < 2) return true;
    BiPoly g = nz[0];
    for (size_t i = 1; i < nz.size() && g.deg_s() > 0; ++i) {
        auto chain = prs_chain_s(g, nz[i]);
        BiPoly cand;
        for (const auto& e : chain)
            if (!e.is_zero()) cand = e;
        if (cand.is_zero() || cand.deg_s() == 0) {
            g = cand;
            break;
        }
        g = cand;
    }
    if (!g.is_zero() && g.deg_s() > 0) return true;
    // pure t-factor: gcd of the Z[t]-contents
    ZPoly ct;
    bool first = true;
    for (const auto& m : nz) {
        ZPoly c;
        for (const auto& q : m.coeffs()) c = gcd(c, q);
        ct = first ? c : gcd(ct, c);
        first = false;
    }
    return !ct.is_zero() && ct.deg() > 0;
}

PairCount run_count(const LineFamily& fam, unsigned long long seed, bool reparametrize = true) {
    std::mt19937_64 rng(seed);
    LineFamily f = fam;
    if (reparametrize) {
        auto mob = draw_mobius(rng);
        f = fam.mobius(mob[0], mob[1], mob[2], mob[3]);
    }

    PairCount out;
    out.seed = seed;

    std::vector<BiPoly> sats;
    bool unsatisfiable = false;
    for (const BiPoly& m : f.pair_minors()) {
        if (m.is_zero()) {
            out.saturation_exponents.push_back(-1); // vacuous minor
            continue;
        }
        auto [sat, k] = saturate_t_minus_s(m);
        out.saturation_exponents.push_back(k);
        if (sat.is_constant()) unsatisfiable = true; // a nonzero constant condition
        sats.push_back(sat);
    }
    if (unsatisfiable) return out; // some minor never vanishes off the diagonal
    if (sats.empty()) throw precondition_error("count: every pair of lines meets (planar family)");

    std::vector<BiPoly> system; // the minors of positive s-degree drive the elimination
    for (const BiPoly& s : sats)
        if (s.deg_s() >= 1) system.push_back(s);
    if (system.size() < 2)
        throw consistency_error("count: too few independent minor conditions");

    for (int attempt = 0; attempt < 5; ++attempt) {
        BiPoly h1, h2;
        for (const auto& m : system) {
            h1 = h1 + m * BiPoly::from_t(ZPoly::constant(rand_in(rng, 1, 40)));
            h2 = h2 + m * BiPoly::from_t(ZPoly::constant(rand_in(rng, 1, 40)));
        }
        if (h1.deg_s() < 1 || h2.deg_s() < 1) continue;

        ZPoly R = resultant_s(h1, h2);
        if (R.is_zero()) {
            if (minors_share_factor(sats)) {
                out.positive_dimensional = true;
                return out;
            }
            continue; // unlucky combination
        }

        // partner-root recovery: the linear element of the remainder
        // sequence of (h1, h2) encodes s = -v(t)/u(t)
        ZPoly u, v;
        {
            bool found = false;
            for (const BiPoly& e : prs_chain_s(h1, h2)) {
                if (e.deg_s() == 1) {
                    u = e.coeff_s(1);
                    v = e.coeff_s(0);
                    found = true;
                }
            }
            if (!found) continue;
        }
        ZPoly w_global = v + ZPoly::x() * u; // vanishes where s(t) = t

        out.resultant_degree = R.deg();
        out.clusters.clear();
        out.ordered_count = 0;
        out.uncertified_degree = 0;

        std::vector<QPoly> levels = squarefree_decomposition(monic(to_qpoly(R)));
        for (size_t lev = 0; lev < levels.size(); ++lev) {
            const QPoly& Mk = levels[lev];
            if (Mk.deg() < 1) continue;
            int mult = static_cast<int>(lev) + 1;
            QPoly g = certify_level_gcd(clear_denominators(Mk), u, v, sats);
            if (g.deg() < 1) continue;
            ZPoly gz = clear_denominators(g);

            // roots where the recovered linear form degenerates have no
            // certified partner; they are reported, not counted
            QPoly W = quotient_gcd(gz, u);
            if (W.deg() > 0) {
                out.uncertified_degree += static_cast<long>(mult) * W.deg();
                g = divrem(g, W).first;
                gz = clear_denominators(g);
            }
            if (g.deg() < 1) continue;
            // exclude diagonal-supported roots: s(t) = t
            QPoly wg = quotient_gcd(gz, w_global);
            if (wg.deg() > 0) {
                g = divrem(g, wg).first;
                gz = clear_denominators(g);
            }
            if (g.deg() < 1) continue;

            SolutionCluster cl;
            cl.t_factor = g;
            // reduce the pair (u, v) mod g with one common scaling so the
            // ratio -v/u is preserved
            {
                auto [ru, ku] = prem_pow(u, gz);
                auto [rv, kv] = prem_pow(v, gz);
                const Int L = gz.lc();
                Int scale_u = 1, scale_v = 1;
                for (int i = ku; i < std::max(ku, kv); ++i) scale_u *= L;
                for (int i = kv; i < std::max(ku, kv); ++i) scale_v *= L;
                ZPoly su = ru * scale_u, sv = rv * scale_v;
                Int c = boost::multiprecision::gcd(content(su), content(sv));
                if (c > 1) {
                    su = div_exact(su, ZPoly::constant(c));
                    sv = div_exact(sv, ZPoly::constant(c));
                }
                cl.s_num = to_qpoly(-sv);
                cl.s_den = to_qpoly(su);
            }
            cl.multiplicity = mult;
            cl.count = static_cast<long>(mult) * g.deg();
            out.ordered_count += cl.count;
            out.clusters.push_back(std::move(cl));
        }
        return out;
    }
    throw consistency_error("count: no usable elimination combination found");
}

} // namespace

PairCount count_intersecting_pairs_p4(const LineFamily& fam, unsigned long long seed) {
    if (fam.ambient != 4) throw std::domain_error("count: ambient must be 4");
    if (fam.is_degenerate())
        throw precondition_error("count: family degenerates (dependent spanning points)");
    unsigned long long seed_b = splitmix64(seed);
    PairCount a = run_count(fam, seed);
    PairCount b = run_count(fam, seed_b);
    a.seed_b = seed_b;
    a.seeds_agree = (a.ordered_count == b.ordered_count) &&
                    (a.positive_dimensional == b.positive_dimensional) &&
                    (a.uncertified_degree == 0) && (b.uncertified_degree == 0);
    if (!a.seeds_agree) {
        std::ostringstream os;
        os << "count: seed disagreement (" << a.ordered_count << " vs " << b.ordered_count
           << ", uncertified " << a.uncertified_degree << "/" << b.uncertified_degree << ")";
        throw consistency_error(os.str());
    }
    return a;
}

PairCount count_affine_chart_pairs(const LineFamily& fam, unsigned long long seed) {
    if (fam.ambient != 4) throw std::domain_error("count: ambient must be 4");
    unsigned long long seed_b = splitmix64(seed);
    PairCount a = run_count(fam, seed, false);
    PairCount b = run_count(fam, seed_b, false);
    a.seed_b = seed_b;
    a.seeds_agree = (a.ordered_count == b.ordered_count) &&
                    (a.positive_dimensional == b.positive_dimensional);
    if (!a.seeds_agree) throw consistency_error("count: seed disagreement in the affine chart");
    return a;
}

PairCount count_nonskew_pairs_p4(const RationalCurve& curve, unsigned long long seed) {
    if (curve.ambient() != 4)
        throw std::domain_error("count_nonskew_pairs_p4: ambient must be 4");
    if (!curve.is_immersion())
        throw precondition_error("count_nonskew_pairs_p4: curve is not an immersion");
    if (!curve.osculating_nondegenerate())
        throw precondition_error(
            "count_nonskew_pairs_p4: degenerate third osculating plane detected");
    PairCount out = count_intersecting_pairs_p4(LineFamily::tangent(curve), seed);
    if (out.positive_dimensional)
        throw consistency_error("count_nonskew_pairs_p4: intersection locus is not finite");
    return out;
}

ScrollTest scroll_skew_test(const ScrollSpec& spec, unsigned long long seed) {
    int ambient = spec.iota1.ambient();
    if (ambient != 3 && ambient != 4)
        throw std::domain_error("scroll_skew_test: ambient must be 3 or 4");
    LineFamily fam = LineFamily::scroll(spec.iota1, spec.iota2);
    if (fam.is_degenerate())
        throw precondition_error("scroll_skew_test: iota1(t) = iota2(t) for some t");

    ScrollTest out;
    out.ambient = ambient;
    if (ambient == 3) {
        FamilyDeterminant det = family_determinant_p3(fam);
        out.skew = det.skew();
        if (!out.skew && !det.identically_zero) {
            // exact witness: a rational t0 and the polynomial whose roots
            // are the parameters s of lines meeting line(t0)
            for (long cand = 0; cand < 64 && !out.witness; ++cand) {
                Rat t0(cand % 2 == 0 ? cand / 2 : -(cand + 1) / 2);
                ZPoly diag = det.saturated.diagonal();
                if (diag.eval<Rat>(t0) == 0) continue;
                std::vector<Rat> sc;
                for (size_t j = 0; j < det.saturated.coeffs().size(); ++j)
                    sc.push_back(det.saturated.coeff_s(j).eval<Rat>(t0));
                QPoly ps{std::vector<Rat>(sc)};
                if (ps.deg() < 1) continue;
                out.witness = {t0, monic(ps)};
            }
        }
        out.det = std::move(det);
    } else {
        PairCount counts = count_intersecting_pairs_p4(fam, seed);
        out.skew = !counts.positive_dimensional && counts.ordered_count == 0;
        out.counts = std::move(counts);
    }
    return out;
}

namespace {

// the nine cubic monomials x_i^k x_j^(3-k), i < j, without repeats
const std::array<std::array<int, 3>, 9> kVeroneseExps = {{{3, 0, 0},
                                                          {0, 3, 0},
                                                          {0, 0, 3},
                                                          {2, 1, 0},
                                                          {1, 2, 0},
                                                          {2, 0, 1},
                                                          {1, 0, 2},
                                                          {0, 2, 1},
                                                          {0, 1, 2}}};

void veronese_jacobian_rows(const std::array<Int, 3>& x, std::vector<std::vector<Rat>>& rows) {
    for (int var = 0; var < 3; ++var) {
        std::vector<Rat> row(9);
        for (size_t c = 0; c < 9; ++c) {
            std::array<int, 3> e = kVeroneseExps[c];
            if (e[static_cast<size_t>(var)] == 0) continue;
            Int val = e[static_cast<size_t>(var)];
            e[static_cast<size_t>(var)] -= 1;
            for (int k = 0; k < 3; ++k)
                for (int rep = 0; rep < e[static_cast<size_t>(k)]; ++rep) val *= x[static_cast<size_t>(k)];
            row[c] = Rat(val);
        }
        rows.push_back(std::move(row));
    }
}

} // namespace

bool veronese_sample_test(int samples, unsigned long long seed, std::vector<Rat>* failure_witness) {
    if (samples < 1) throw std::domain_error("veronese_sample_test: need samples >= 1");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        std::array<Int, 3> x{}, y{};
        for (;;) {
            for (auto& c : x) c = rand_in(rng, -20, 20);
            for (auto& c : y) c = rand_in(rng, -20, 20);
            bool xz = x[0] == 0 && x[1] == 0 && x[2] == 0;
            bool yz = y[0] == 0 && y[1] == 0 && y[2] == 0;
            if (xz || yz) continue;
            // projectively distinct: some 2x2 minor of [x; y] nonzero
            bool prop = true;
            for (int a = 0; a < 3 && prop; ++a)
                for (int b = a + 1; b < 3 && prop; ++b)
                    if (x[static_cast<size_t>(a)] * y[static_cast<size_t>(b)] !=
                        x[static_cast<size_t>(b)] * y[static_cast<size_t>(a)])
                        prop = false;
            if (!prop) break;
        }
        std::vector<std::vector<Rat>> m;
        veronese_jacobian_rows(x, m);
        veronese_jacobian_rows(y, m);
        if (matrix_rank(m) != 6) {
            if (failure_witness) {
                failure_witness->clear();
                for (const auto& c : x) failure_witness->push_back(Rat(c));
                for (const auto& c : y) failure_witness->push_back(Rat(c));
            }
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Contact orders via exact jets

namespace {

constexpr int kJetOrder = 6; // coefficients of tau^0 .. tau^5

struct Jet {
    std::array<Rat, kJetOrder> c{};

    static Jet constant(const Rat& v) {
        Jet j;
        j.c[0] = v;
        return j;
    }
    static Jet variable() {
        Jet j;
        j.c[1] = 1;
        return j;
    }
    Jet operator+(const Jet& o) const {
        Jet r;
        for (int i = 0; i < kJetOrder; ++i) r.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] + o.c[static_cast<size_t>(i)];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r;
        for (int i = 0; i < kJetOrder; ++i) r.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] - o.c[static_cast<size_t>(i)];
        return r;
    }
    Jet operator*(const Jet& o) const {
        Jet r;
        for (int i = 0; i < kJetOrder; ++i)
            for (int j = 0; i + j < kJetOrder; ++j)
                r.c[static_cast<size_t>(i + j)] += c[static_cast<size_t>(i)] * o.c[static_cast<size_t>(j)];
        return r;
    }
    Jet operator*(const Rat& v) const {
        Jet r;
        for (int i = 0; i < kJetOrder; ++i) r.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] * v;
        return r;
    }
    /// Multiplicative inverse; requires a unit (nonzero constant term).
    Jet inverse() const {
        if (c[0] == 0) throw std::domain_error("Jet::inverse of a non-unit");
        Jet r;
        r.c[0] = Rat(1) / c[0];
        for (int k = 1; k < kJetOrder; ++k) {
            Rat acc = 0;
            for (int i = 1; i <= k; ++i) acc += c[static_cast<size_t>(i)] * r.c[static_cast<size_t>(k - i)];
            r.c[static_cast<size_t>(k)] = -acc / c[0];
        }
        return r;
    }
    Jet derivative() const {
        Jet r;
        for (int i = 1; i < kJetOrder; ++i)
            r.c[static_cast<size_t>(i - 1)] = c[static_cast<size_t>(i)] * Rat(i);
        return r;
    }
    /// k-th derivative at 0.
    Rat deriv_at0(int k) const {
        Rat f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return c[static_cast<size_t>(k)] * f;
    }
    bool vanishes_to_order(int k) const { // zero mod tau^k
        for (int i = 0; i < k; ++i)
            if (c[static_cast<size_t>(i)] != 0) return false;
        return true;
    }
};

/// p(q) for q with q(0) = 0.
Jet compose(const Jet& p, const Jet& q) {
    if (q.c[0] != 0) throw std::domain_error("Jet compose: inner jet must vanish at 0");
    Jet r = Jet::constant(p.c[kJetOrder - 1]);
    for (int i = kJetOrder - 2; i >= 0; --i) r = r * q + Jet::constant(p.c[static_cast<size_t>(i)]);
    return r;
}

/// Compositional inverse of a jet with z(0) = 0, z'(0) = 1.
Jet revert(const Jet& z) {
    if (z.c[0] != 0 || z.c[1] != 1) throw std::domain_error("Jet revert: need z = tau + ...");
    Jet u = Jet::variable();
    for (int j = 2; j < kJetOrder; ++j) {
        Jet e = compose(z, u);
        u.c[static_cast<size_t>(j)] -= e.c[static_cast<size_t>(j)];
    }
    return u;
}

Jet poly_jet_at(const ZPoly& p, const Rat& t0) {
    // Taylor coefficients of p(t0 + u)
    Jet out;
    QPoly cur = to_qpoly(p);
    Rat fact = 1;
    for (int k = 0; k < kJetOrder && !cur.is_zero(); ++k) {
        if (k > 0) fact *= k;
        out.c[static_cast<size_t>(k)] = cur.eval<Rat>(t0) / fact;
        cur = cur.derivative();
    }
    return out;
}

} // namespace

ContactOrderReport contact_order_test(const RationalCurve& curve, const Rat& t0) {
    if (curve.ambient() != 4)
        throw std::domain_error("contact_order_test: ambient must be 4");
    // precondition: third osculating plane at t0 nondegenerate
    {
        std::vector<ZPoly> f = curve.coords();
        std::vector<std::vector<Rat>> m(f.size(), std::vector<Rat>(4));
        for (size_t r = 0; r < f.size(); ++r) {
            ZPoly p = f[r];
            for (int k = 0; k < 4; ++k) {
                m[r][static_cast<size_t>(k)] = p.eval<Rat>(t0);
                p = p.derivative();
            }
        }
        if (matrix_rank(m) != 4)
            throw precondition_error("contact_order_test: degenerate third osculating plane at t0");
    }

    // adapted coordinates: first basis vector f(t0), second f'(t0)
    size_t n = curve.coords().size();
    std::vector<std::vector<Rat>> basis(n, std::vector<Rat>(n, Rat(0)));
    std::vector<ZPoly> fd = curve.derivative();
    for (size_t r = 0; r < n; ++r) {
        basis[r][0] = curve.coords()[r].eval<Rat>(t0);
        basis[r][1] = fd[r].eval<Rat>(t0);
    }
    // greedily complete with standard vectors
    size_t next = 2;
    for (size_t e = 0; e < n && next < n; ++e) {
        basis[e][next] = 1;
        std::vector<std::vector<Rat>> probe(n, std::vector<Rat>(next + 1));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c <= next; ++c) probe[r][c] = basis[r][c];
        if (matrix_rank(probe) == static_cast<int>(next + 1)) ++next;
        else basis[e][next] = 0;
    }

    // y(u) solves basis * y = f(t0 + u), jet-wise Gaussian elimination
    std::vector<Jet> rhs(n);
    for (size_t r = 0; r < n; ++r) rhs[r] = poly_jet_at(curve.coords()[r], t0);
    std::vector<std::vector<Rat>> A(basis);
    std::vector<Jet> y(rhs);
    // forward elimination with exact pivots
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("contact_order_test: singular adapted basis");
        std::swap(A[col], A[piv]);
        std::swap(y[col], y[piv]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat fac = A[r][col] / A[col][col];
            for (size_t c2 = col; c2 < n; ++c2) A[r][c2] -= fac * A[col][c2];
            y[r] = y[r] - y[col] * fac;
        }
    }
    for (size_t r = 0; r < n; ++r) y[r] = y[r] * (Rat(1) / A[r][r]);

    // affine chart and unit-speed second coordinate
    Jet y0inv = y[0].inverse();
    std::vector<Jet> z(n);
    for (size_t r = 0; r < n; ++r) z[r] = y[r] * y0inv;
    Jet tau_of_u = z[1]; // = u + O(u^2)
    if (tau_of_u.c[0] != 0 || tau_of_u.c[1] == 0)
        throw std::logic_error("contact_order_test: chart normalization failed");
    // normalize derivative to 1, then revert
    Jet scaled = tau_of_u * (Rat(1) / tau_of_u.c[1]);
    Jet u_of_tau = revert(scaled);
    u_of_tau = u_of_tau * (Rat(1) / tau_of_u.c[1]);
    // F_i(tau) = z_i(u(tau)) for the last three coordinates
    std::array<Jet, 3> F;
    for (size_t i = 0; i < 3; ++i) F[i] = compose(z[i + 2], u_of_tau);
    for (const Jet& Fi : F)
        if (!Fi.vanishes_to_order(2))
            throw std::logic_error("contact_order_test: normalization failed (F_i'(0) != 0)");

    // alpha = (F - tau F' | F'), beta = (-(tau/2) F' | F')
    Jet tau = Jet::variable();
    ContactOrderReport rep;
    bool match2 = true;
    for (size_t i = 0; i < 3; ++i) {
        Jet Fp = F[i].derivative();
        Jet alpha1 = F[i] - tau * Fp;
        Jet beta1 = tau * Fp * Rat(-1, 2);
        // second block components coincide by construction (both are F')
        if (!(alpha1 - beta1).vanishes_to_order(3)) match2 = false;
    }
    if (match2) rep.matched_orders = {0, 1, 2};

    // third order: matching would force F'''(0) parallel to F''(0)
    std::vector<std::vector<Rat>> m2(3, std::vector<Rat>(2));
    for (size_t i = 0; i < 3; ++i) {
        m2[i][0] = F[i].deriv_at0(2);
        m2[i][1] = F[i].deriv_at0(3);
    }
    rep.third_order_obstructed = (matrix_rank(m2) == 2);
    return rep;
}

} // namespace skewcalc
