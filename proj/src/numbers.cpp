#include "reflexkit/numbers.hpp"

#include <stdexcept>

namespace reflexkit {

Int floor_int(const Rat& q) {
  Int n = num(q), d = den(q);
  Int r = n / d;
  if (n < 0 && r * d != n) --r;
  return r;
}

Int ceil_int(const Rat& q) { return -floor_int(-q); }

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

std::vector<Int> primitive(const std::vector<Int>& v) {
  Int g = content(v);
  if (g == 0) return v;
  std::vector<Int> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

std::vector<Int> primitive_direction(const std::vector<Rat>& v) {
  Int l = 1;
  bool nonzero = false;
  for (const Rat& q : v) {
    if (q != 0) nonzero = true;
    l = lcm(l, den(q));
  }
  if (!nonzero) throw std::invalid_argument("primitive_direction: zero vector");
  std::vector<Int> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (l / den(v[i]));
  return primitive(w);
}

} // namespace reflexkit
