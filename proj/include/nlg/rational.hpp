#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nlg {

// Exact rational scalar used throughout the library (quantum module excepted).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on junk.
Rat parse_rational(const std::string& s);

// Canonical serialization: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rat& r);

// Decimal rendering at 10 significant digits, for human-readable columns.
std::string rat_decimal(const Rat& r);

}  // namespace nlg
