#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace gammaseq {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// gcd with gcd(0, 0) = 0 and gcd(0, a) = |a|.
inline Integer gcd(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// lcm with lcm(0, a) = 0.
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a / gcd(a, b) * b);
}

/// Least non-negative residue of a modulo m; m == 0 leaves a unchanged.
inline Integer reduce(const Integer& a, const Integer& m) {
  if (m == 0) return a;
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// True when m == 0 ? a == 0 : m | a.
inline bool divides_or_zero(const Integer& m, const Integer& a) {
  if (m == 0) return a == 0;
  return a % m == 0;
}

inline std::optional<std::int64_t> to_int64(const Integer& a) {
  if (a > std::numeric_limits<std::int64_t>::max() || a < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(a);
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Prime factorisation of n > 0 as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
  std::vector<std::pair<Integer, unsigned>> out;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

}  // namespace gammaseq
