#pragma once

// Elementary integer arithmetic shared by every other header: trial-division
// factorization, the Kronecker symbol, Hall divisors and the multiplicative
// functions phi, psi, omega.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "shimura/error.hpp"

namespace shimura {

using Int = std::int64_t;

struct PrimePower {
  Int prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by increasing prime. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

inline Factorization factorize(Int n) {
  detail::require(n >= 1, "factorize: n must be positive, got " + std::to_string(n));
  Factorization out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline Int reconstruct(const Factorization& f) {
  Int n = 1;
  for (const auto& [p, e] : f)
    for (int i = 0; i < e; ++i) n *= p;
  return n;
}

inline std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline bool is_squarefree(Int n) {
  for (const auto& pp : factorize(n))
    if (pp.exponent > 1) return false;
  return true;
}

/// Exponent of p in n (n != 0).
inline int valuation(Int n, Int p) {
  n = n < 0 ? -n : n;
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline Int isqrt(Int n) {
  if (n <= 0) return 0;
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_square(Int n) {
  if (n < 0) return false;
  const Int r = isqrt(n);
  return r * r == n;
}

/// Number of distinct prime divisors.
inline int omega(Int n) { return static_cast<int>(factorize(n).size()); }

/// Kronecker symbol (a/n), extended to all integers n.
inline int kronecker(Int a, Int n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    const Int a8 = ((a % 8) + 8) % 8;
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a/n), n odd and positive.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const Int n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

/// All m | n with gcd(m, n/m) = 1, ascending. There are 2^omega(n) of them.
inline std::vector<Int> hall_divisors(Int n) {
  std::vector<Int> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const Int q = ipow(p, e);
    const std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_hall_divisor(Int m, Int n) {
  return m >= 1 && n % m == 0 && std::gcd(m, n / m) == 1;
}

struct MultValues {
  Int phi;
  Int psi;
  int omega;

  friend bool operator==(const MultValues&, const MultValues&) = default;
};

/// phi(p^k) = p^k - p^(k-1), psi(p^k) = p^k + p^(k-1), extended multiplicatively.
inline MultValues mult_values(Int n) {
  detail::require(n >= 1, "mult_values: n must be positive");
  MultValues v{1, 1, 0};
  for (const auto& [p, e] : factorize(n)) {
    const Int pk = ipow(p, e);
    v.phi *= pk - pk / p;
    v.psi *= pk + pk / p;
    ++v.omega;
  }
  return v;
}

/// Local factor of psi at p: p^k + p^(k-1) for k = ord_p(n) >= 1, else 1.
inline Int psi_p(Int p, Int n) {
  detail::require(is_prime(p), "psi_p: p must be prime");
  detail::require(n >= 1, "psi_p: n must be positive");
  const int k = valuation(n, p);
  if (k == 0) return 1;
  const Int pk = ipow(p, k);
  return pk + pk / p;
}

}  // namespace shimura
