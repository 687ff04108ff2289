/*
 * Exact rational scalar type used throughout the geometric layer.
 * All sign decisions (orientations, affine ranks) are made on these;
 * no floating point appears anywhere in the library.
 */

#ifndef POLYTOPAL_RATIONAL_HPP
#define POLYTOPAL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace polytopal {

using Rational = boost::multiprecision::mpq_rational;
using Coords = std::vector<Rational>;

/// Parse "p/q" or "p"; throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& s);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

inline int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

}  // namespace polytopal

#endif
