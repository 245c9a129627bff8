#pragma once

// Optimal embedding numbers of quadratic orders into Eichler orders.
//
// The local numbers nu_p follow the classical case split by p | D, p || N and
// p^2 | N; in the last case the sub-case is chosen from n = ord_p(N) and
// k = ord_p(f) (f the conductor of R):
//   (a) n >= 2k + 2   (b) n = 2k + 1   (c) n = 2k   (d) n <= 2k - 1.
// The global count is h(R) times the product of the local ones.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shimura/genus.hpp"
#include "shimura/quadorders.hpp"

namespace shimura {

/// Target of an embedding question: Eichler orders of level N in the
/// quaternion algebra ramified exactly at the primes of `ramified` (and at
/// infinity when `definite`).
struct EichlerTarget {
  Int ramified;  // product of the finite ramified primes
  Int level;
  bool definite = false;

  static EichlerTarget indefinite(const CurveLabel& label) { return {label.D(), label.N(), false}; }

  /// Definite algebra of discriminant D/p, level N.
  static EichlerTarget definite_at(const CurveLabel& label, Int p) {
    detail::require(is_prime(p) && label.D() % p == 0,
                    "excluded prime " + std::to_string(p) + " must divide D = " +
                        std::to_string(label.D()));
    return {label.D() / p, label.N(), true};
  }
};

namespace detail {

inline Int local_embedding_number(const QuadOrder& r, Int p, Int ramified, Int level) {
  require(is_prime(p), "local_embedding_number: p must be prime");
  const bool at_ramified = ramified % p == 0;
  const bool at_level = level % p == 0;
  require(at_ramified || at_level,
          "local_embedding_number: p = " + std::to_string(p) + " divides neither D nor N");
  require(!(at_ramified && at_level), "local_embedding_number: p divides both D and N");

  if (at_ramified) return 1 - eichler_symbol(r, p);
  const int n = valuation(level, p);
  if (n == 1) return 1 + eichler_symbol(r, p);

  const int k = valuation(r.conductor(), p);
  const int split = field_symbol(r, p);
  const Int two_psi = 2 * psi_p(p, r.conductor());
  if (n >= 2 * k + 2) return split == 1 ? two_psi : 0;
  if (n == 2 * k + 1) {
    if (split == 1) return two_psi;
    return split == 0 ? ipow(p, k) : 0;
  }
  if (n == 2 * k) return ipow(p, k - 1) * (p + 1 + split);
  const int kappa = n / 2;
  if (n % 2 == 0) return ipow(p, kappa) + ipow(p, kappa - 1);
  return 2 * ipow(p, kappa);
}

}  // namespace detail

/// nu_p(R, O_N) for p | DN.
inline Int local_embedding_number(const QuadOrder& r, Int p, const CurveLabel& label) {
  return detail::local_embedding_number(r, p, label.D(), label.N());
}

inline Int local_embedding_number(const QuadOrder& r, Int p, const EichlerTarget& t) {
  return detail::local_embedding_number(r, p, t.ramified, t.level);
}

/// h(R) * prod_{p in primes} nu_p(R, O_N).
inline Int partial_embedding_product(const QuadOrder& r, const CurveLabel& label,
                                     const std::set<Int>& primes) {
  for (Int p : primes)
    detail::require(label.DN() % p == 0 && is_prime(p),
                    "partial_embedding_product: " + std::to_string(p) + " is not a prime of DN");
  Int total = class_number(r);
  for (Int p : primes) {
    if (total == 0) break;
    total *= local_embedding_number(r, p, label);
  }
  return total;
}

/// nu(R, O_N) = h(R) * prod_{p | DN} nu_p(R, O_N).
inline Int global_embedding_number(const QuadOrder& r, const CurveLabel& label) {
  const auto ps = prime_divisors(label.DN());
  return partial_embedding_product(r, label, std::set<Int>(ps.begin(), ps.end()));
}

/// Whether some Eichler order of the target contains an order R' with R ⊆ R'
/// and all local embedding numbers positive (hence, by Eichler's theorem,
/// optimally embeds R' and so contains R).
inline bool order_embeds(const QuadOrder& r, const EichlerTarget& target) {
  if (target.definite && !r.is_imaginary()) return false;
  const auto ps = prime_divisors(target.ramified * target.level);
  for (const auto& candidate : r.super_orders()) {
    bool ok = true;
    for (Int p : ps) {
      if (detail::local_embedding_number(candidate, p, target.ramified, target.level) <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Whether sqrt(d) lies in some Eichler order of the target.
inline bool element_embeds(Int d, const EichlerTarget& target) {
  detail::require(d != 0 && !is_square(d), "element_embeds: d must be a nonzero nonsquare");
  return order_embeds(order_from_radicand(d, false), target);
}

/// Convenience form mirroring the CLI: indefinite when excluded_prime is empty,
/// otherwise the definite algebra of discriminant D / excluded_prime.
inline bool element_embeds(Int d, const CurveLabel& label, std::optional<Int> excluded_prime) {
  if (!excluded_prime) return element_embeds(d, EichlerTarget::indefinite(label));
  return element_embeds(d, EichlerTarget::definite_at(label, *excluded_prime));
}

}  // namespace shimura
