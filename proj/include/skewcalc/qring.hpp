#pragma once

#include "skewcalc/parampoly.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace skewcalc {

/// A monomial-rewriting quotient ring Z[d,g,dv][gens]/(rules).  Each rule is
/// monic in a pure power of one generator and rewrites it to lower order,
/// so normal forms exist and are unique.
class QRingSpec {
public:
    struct Generator {
        std::string name;
        int degree;
    };
    struct Rule {
        int gen;
        int power;
        std::map<std::vector<int>, ParamPoly> rhs; // gen^power -> rhs (already normal)
    };

    QRingSpec(std::string name, std::vector<Generator> gens)
        : name_(std::move(name)), gens_(std::move(gens)) {}

    void add_rule(int gen, int power, std::map<std::vector<int>, ParamPoly> rhs);
    void set_point_monomial(std::vector<int> m) { point_ = std::move(m); }

    const std::string& name() const { return name_; }
    int ngens() const { return static_cast<int>(gens_.size()); }
    const Generator& gen(int i) const { return gens_[static_cast<size_t>(i)]; }
    int gen_index(const std::string& name) const;
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<int>& point_monomial() const { return point_; }
    int degree_of(const std::vector<int>& mono) const;

private:
    std::string name_;
    std::vector<Generator> gens_;
    std::vector<Rule> rules_;
    std::vector<int> point_;
};

using QRingPtr = std::shared_ptr<const QRingSpec>;

/// Element of a QRingSpec in normal form.
class QElem {
public:
    QElem() = default;
    explicit QElem(QRingPtr ring) : ring_(std::move(ring)) {}
    static QElem monomial(const QRingPtr& ring, const std::vector<int>& exps,
                          const ParamPoly& c = ParamPoly(1));
    static QElem one(const QRingPtr& ring);
    static QElem generator(const QRingPtr& ring, const std::string& name);

    const QRingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, ParamPoly>& terms() const { return terms_; }
    ParamPoly coeff(const std::vector<int>& m) const;
    /// Coefficient of the ring's designated point monomial.
    ParamPoly point_degree() const;

    void add(const std::vector<int>& m, const ParamPoly& c); // rewrites to normal form

    QElem operator-() const;
    QElem operator+(const QElem& o) const;
    QElem operator-(const QElem& o) const;
    QElem operator*(const QElem& o) const;
    QElem operator*(const ParamPoly& c) const;
    QElem& operator+=(const QElem& o);
    QElem pow(int k) const;
    bool operator==(const QElem& o) const;

    /// Image under the generator substitution ring hom: gen i of this ring
    /// maps to images[i] in the target ring.
    QElem map_to(const QRingPtr& target, const std::vector<QElem>& images) const;

    std::string str() const;

private:
    QRingPtr ring_;
    std::map<std::vector<int>, ParamPoly> terms_;
};

inline QElem scale(const QElem& x, const Int& c) { return x * ParamPoly(c); }

} // namespace skewcalc
