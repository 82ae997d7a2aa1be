// Exact rational coefficient type and small helpers shared across the library.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chazy {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::domain_error("unparsable rational: " + s);
    r.canonicalize();
    return r;
}

// Canonical "p/q" rendering; integers render without the "/1".
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace chazy
