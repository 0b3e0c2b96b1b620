#include "nlg/rational.hpp"

#include <cctype>
#include <cstdio>

namespace nlg {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' && ch != '+')
            throw std::invalid_argument("bad rational literal: " + s);
    }
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string rat_decimal(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", r.get_d());
    return buf;
}

}  // namespace nlg
