#ifndef REFLEXKIT_NUMBERS_HPP
#define REFLEXKIT_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace reflexkit {

// Arbitrary-precision integers and exact rationals (always reduced,
// positive denominator). No floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// floor(q) as an exact integer.
Int floor_int(const Rat& q);
/// ceil(q) as an exact integer.
Int ceil_int(const Rat& q);

Int factorial(unsigned n);

std::string to_string(const Int& v);
/// "p/q", or just "p" when q == 1.
std::string to_string(const Rat& q);

/// gcd of absolute values of all entries (0 for the zero vector).
Int content(const std::vector<Int>& v);

/// Divides by the content so the first nonzero entry is positive.
/// Zero vector stays zero.
std::vector<Int> primitive(const std::vector<Int>& v);

/// Clears denominators: the unique primitive integer vector on the ray
/// spanned by `v` that keeps v's orientation (v must be nonzero).
std::vector<Int> primitive_direction(const std::vector<Rat>& v);

} // namespace reflexkit

#endif
