#include "skewcalc/curve_numerics.hpp"

#include <sstream>

namespace skewcalc {

void CurveNum::add(int zexp, int F, const ParamPoly& c) {
    if (c.is_zero()) return;
    if (zexp >= rank_) {
        if (F) return;                      // F zeta^(>=r) = 0
        if (zexp > rank_) return;           // zeta^(r+j) = 0 for j >= 1
        add(rank_ - 1, 1, -(c1_ * c));      // zeta^r = -c1 F zeta^(r-1)
        return;
    }
    auto key = std::make_pair(zexp, F);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CurveNum CurveNum::term(int zexp, bool F, const ParamPoly& c) const {
    CurveNum r(rank_, c1_);
    r.add(zexp, F ? 1 : 0, c);
    return r;
}

void CurveNum::check_same(const CurveNum& o) const {
    if (is_zero() || o.is_zero()) return;
    if (rank_ != o.rank_ || !(c1_ == o.c1_))
        throw std::domain_error("CurveNum: mismatched rings");
}

CurveNum CurveNum::operator-() const {
    CurveNum r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

CurveNum CurveNum::operator+(const CurveNum& o) const {
    check_same(o);
    if (rank_ == 0) return o;
    CurveNum r = *this;
    for (const auto& [k, c] : o.terms_) {
        // terms are already reduced, plain accumulate
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

CurveNum CurveNum::operator-(const CurveNum& o) const { return *this + (-o); }

CurveNum CurveNum::operator*(const CurveNum& o) const {
    check_same(o);
    if (rank_ == 0) return *this;
    if (o.rank_ == 0) return o;
    CurveNum r(rank_, c1_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            if (k1.second && k2.second) continue; // F^2 = 0
            r.add(k1.first + k2.first, k1.second | k2.second, c1 * c2);
        }
    return r;
}

CurveNum CurveNum::operator*(const ParamPoly& c) const {
    if (rank_ == 0) return *this;
    CurveNum r(rank_, c1_);
    for (const auto& [k, v] : terms_) r.add(k.first, k.second, v * c);
    return r;
}

bool CurveNum::operator==(const CurveNum& o) const {
    if (is_zero() || o.is_zero()) return terms_ == o.terms_;
    return rank_ == o.rank_ && c1_ == o.c1_ && terms_ == o.terms_;
}

ParamPoly CurveNum::point_degree() const { return coeff(rank_ - 1, true); }

ParamPoly CurveNum::coeff(int zexp, bool F) const {
    auto it = terms_.find({zexp, F ? 1 : 0});
    return it == terms_.end() ? ParamPoly() : it->second;
}

CurveNum CurveNum::subbundle_class(int q, const ParamPoly& c1q) const {
    if (q < 1) throw std::domain_error("subbundle_class: corank must be >= 1");
    CurveNum r = term(q, false);
    return r + term(q - 1, true, c1q);
}

std::string CurveNum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.second) os << "*F";
        if (k.first > 0) os << "*z^" << k.first;
    }
    return os.str();
}

} // namespace skewcalc
