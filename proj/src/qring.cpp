#include "skewcalc/qring.hpp"

#include <sstream>
#include <stdexcept>

namespace skewcalc {

void QRingSpec::add_rule(int gen, int power, std::map<std::vector<int>, ParamPoly> rhs) {
    if (gen < 0 || gen >= ngens()) throw std::domain_error("add_rule: bad generator");
    for (const auto& [m, c] : rhs)
        if (m[static_cast<size_t>(gen)] >= power)
            throw std::domain_error("add_rule: rhs does not lower the distinguished exponent");
    rules_.push_back(Rule{gen, power, std::move(rhs)});
}

int QRingSpec::gen_index(const std::string& name) const {
    for (int i = 0; i < ngens(); ++i)
        if (gens_[static_cast<size_t>(i)].name == name) return i;
    throw std::domain_error("unknown generator '" + name + "' in ring " + name_);
}

int QRingSpec::degree_of(const std::vector<int>& mono) const {
    int d = 0;
    for (int i = 0; i < ngens(); ++i) d += mono[static_cast<size_t>(i)] * gens_[static_cast<size_t>(i)].degree;
    return d;
}

QElem QElem::monomial(const QRingPtr& ring, const std::vector<int>& exps, const ParamPoly& c) {
    if (static_cast<int>(exps.size()) != ring->ngens())
        throw std::domain_error("QElem: wrong exponent count");
    QElem e(ring);
    e.add(exps, c);
    return e;
}

QElem QElem::one(const QRingPtr& ring) {
    return monomial(ring, std::vector<int>(static_cast<size_t>(ring->ngens()), 0));
}

QElem QElem::generator(const QRingPtr& ring, const std::string& name) {
    std::vector<int> m(static_cast<size_t>(ring->ngens()), 0);
    m[static_cast<size_t>(ring->gen_index(name))] = 1;
    return monomial(ring, m);
}

ParamPoly QElem::coeff(const std::vector<int>& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamPoly() : it->second;
}

ParamPoly QElem::point_degree() const {
    if (!ring_ || ring_->point_monomial().empty()) throw std::logic_error("no point monomial set");
    return coeff(ring_->point_monomial());
}

void QElem::add(const std::vector<int>& m, const ParamPoly& c) {
    if (c.is_zero()) return;
    for (const auto& rule : ring_->rules()) {
        int e = m[static_cast<size_t>(rule.gen)];
        if (e < rule.power) continue;
        // rewrite gen^power inside m and recurse
        std::vector<int> rest = m;
        rest[static_cast<size_t>(rule.gen)] = e - rule.power;
        for (const auto& [rm, rc] : rule.rhs) {
            std::vector<int> nm(m.size());
            for (size_t i = 0; i < m.size(); ++i) nm[i] = rest[i] + rm[i];
            add(nm, c * rc);
        }
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QElem QElem::operator-() const {
    QElem r(ring_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

namespace {
QRingPtr merge_qring(const QRingPtr& a, bool az, const QRingPtr& b, bool bz) {
    if (az) return bz ? (a ? a : b) : b;
    if (bz) return a;
    if (!a || !b) throw std::domain_error("QElem: nonzero element without a ring");
    if (a.get() != b.get()) throw std::domain_error("QElem: mismatched rings");
    return a;
}
} // namespace

QElem QElem::operator+(const QElem& o) const {
    QElem r(merge_qring(ring_, is_zero(), o.ring_, o.is_zero()));
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

QElem& QElem::operator+=(const QElem& o) {
    *this = *this + o;
    return *this;
}

QElem QElem::operator-(const QElem& o) const { return *this + (-o); }

QElem QElem::operator*(const ParamPoly& c) const {
    QElem r(ring_);
    for (const auto& [m, v] : terms_) r.add(m, v * c);
    return r;
}

QElem QElem::operator*(const QElem& o) const {
    if (is_zero() || o.is_zero()) return QElem();
    QRingPtr ring = merge_qring(ring_, false, o.ring_, false);
    QElem r(ring);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            std::vector<int> m(m1.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
            r.add(m, c1 * c2);
        }
    return r;
}

QElem QElem::pow(int k) const {
    if (k < 0) throw std::domain_error("QElem::pow: negative exponent");
    QElem r = one(ring_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool QElem::operator==(const QElem& o) const {
    if (is_zero() || o.is_zero()) return terms_ == o.terms_;
    return ring_.get() == o.ring_.get() && terms_ == o.terms_;
}

QElem QElem::map_to(const QRingPtr& target, const std::vector<QElem>& images) const {
    if (static_cast<int>(images.size()) != (ring_ ? ring_->ngens() : 0))
        throw std::domain_error("map_to: one image per generator required");
    QElem out(target);
    for (const auto& [m, c] : terms_) {
        QElem t = QElem::one(target) * c;
        for (size_t i = 0; i < m.size(); ++i)
            for (int rep = 0; rep < m[i]; ++rep) t = t * images[i];
        out += t;
    }
    return out;
}

std::string QElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*" << ring_->gen(static_cast<int>(i)).name;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace skewcalc
