#include "skewcalc/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace skewcalc {

Rat parse_rational(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
    std::string s = text;
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) bad();
        Rat q(num, den);
        // mpq_rational does not canonicalize the (num, den) constructor input
        mpq_canonicalize(q.backend().data());
        return q;
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat(0);
}

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

} // namespace skewcalc
