#include "skewcalc/parampoly.hpp"

#include <sstream>
#include <stdexcept>

namespace skewcalc {

ParamPoly ParamPoly::monomial(std::array<int, 3> e, Int c) {
    ParamPoly p;
    if (c != 0) p.terms_[ParamMono{e}] = std::move(c);
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamMono{});
}

Int ParamPoly::constant_term() const {
    auto it = terms_.find(ParamMono{});
    return it == terms_.end() ? Int(0) : it->second;
}

void ParamPoly::add_term(const ParamMono& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    r += o;
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    r -= o;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            ParamMono m{{m1.e[0] + m2.e[0], m1.e[1] + m2.e[1], m1.e[2] + m2.e[2]}};
            r.add_term(m, c1 * c2);
        }
    return r;
}

std::optional<ParamPoly> ParamPoly::div_exact(const ParamPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    ParamPoly rem = *this;
    ParamPoly quot;
    const auto& [dm, dc] = *divisor.terms_.rbegin(); // leading term
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        ParamMono qm;
        for (int i = 0; i < 3; ++i) {
            qm.e[i] = rm.e[i] - dm.e[i];
            if (qm.e[i] < 0) return std::nullopt;
        }
        if (rc % dc != 0) return std::nullopt;
        ParamPoly t = monomial(qm.e, rc / dc);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

ParamPoly ParamPoly::substitute_dv() const {
    ParamPoly dv_expr = 2 * d() + 2 * g() - ParamPoly(2);
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        ParamPoly t = monomial({m.e[0], m.e[1], 0}, c);
        for (int i = 0; i < m.e[2]; ++i) t *= dv_expr;
        r += t;
    }
    return r;
}

Int ParamPoly::eval(const Int& d, const Int& g) const {
    return eval(d, g, 2 * d + 2 * g - 2);
}

Int ParamPoly::eval(const Int& d, const Int& g, const Int& dv) const {
    Int r = 0;
    for (const auto& [m, c] : terms_) {
        Int t = c;
        for (int i = 0; i < m.e[0]; ++i) t *= d;
        for (int i = 0; i < m.e[1]; ++i) t *= g;
        for (int i = 0; i < m.e[2]; ++i) t *= dv;
        r += t;
    }
    return r;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"d", "g", "dv"};
    std::ostringstream os;
    bool first = true;
    // Highest graded term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && m.total() > 0;
        if (!unit) os << a;
        bool printed_var = false;
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] == 0) continue;
            if (!unit || printed_var) os << "*";
            os << names[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
            unit = false;
            printed_var = true;
        }
    }
    return os.str();
}

} // namespace skewcalc
