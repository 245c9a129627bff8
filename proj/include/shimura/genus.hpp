#pragma once

#include <cmath>
#include <compare>
#include <numeric>
#include <string>

#include "shimura/arith.hpp"

namespace shimura {

/// A pair (D, N) naming the curve X_0^D(N): D squarefree with an even number
/// of prime factors, gcd(D, N) = 1. D = 1 is allowed for cross-checks only.
class CurveLabel {
 public:
  CurveLabel(Int d, Int n) : d_(d), n_(n) {
    detail::require(d >= 1, "D must be positive, got " + std::to_string(d));
    detail::require(n >= 1, "N must be positive, got " + std::to_string(n));
    detail::require(is_squarefree(d), "D = " + std::to_string(d) + " is not squarefree");
    detail::require(omega(d) % 2 == 0,
                    "D = " + std::to_string(d) + " has an odd number of prime factors");
    detail::require(std::gcd(d, n) == 1, "gcd(D, N) must be 1 for (" + std::to_string(d) +
                                             "," + std::to_string(n) + ")");
  }

  [[nodiscard]] Int D() const { return d_; }
  [[nodiscard]] Int N() const { return n_; }
  [[nodiscard]] Int DN() const { return d_ * n_; }

  [[nodiscard]] std::string to_string() const {
    return "(" + std::to_string(d_) + "," + std::to_string(n_) + ")";
  }

  friend auto operator<=>(const CurveLabel&, const CurveLabel&) = default;

 private:
  Int d_;
  Int n_;
};

/// Whether d is the discriminant of an indefinite rational quaternion algebra.
inline bool is_quaternion_discriminant(Int d) {
  return d > 1 && is_squarefree(d) && omega(d) % 2 == 0;
}

/// e_k(D, N) for k in {3, 4}: the number of elliptic points of order k / 2.
inline Int elliptic_count(const CurveLabel& label, int k) {
  detail::require(k == 3 || k == 4, "elliptic_count: k must be 3 or 4");
  Int e = 1;
  for (const auto& pp : factorize(label.D())) e *= 1 - kronecker(-k, pp.prime);
  for (const auto& [q, exp] : factorize(label.N())) {
    const int sym = kronecker(-k, q);
    if (exp == 1)
      e *= 1 + sym;
    else
      e *= sym == 1 ? 2 : 0;
  }
  return e;
}

/// g = 1 + phi(D) psi(N) / 12 - e_4 / 4 - e_3 / 3, computed over the common
/// denominator 12 and required to be a nonnegative integer.
inline Int genus(const CurveLabel& label) {
  detail::require(label.D() > 1, "genus: D must be > 1 (got D = 1)");
  const Int twelve_g = 12 + mult_values(label.D()).phi * mult_values(label.N()).psi -
                       3 * elliptic_count(label, 4) - 4 * elliptic_count(label, 3);
  if (twelve_g % 12 != 0 || twelve_g < 0)
    throw IntegralityError("genus of " + label.to_string() + " is " +
                           std::to_string(twelve_g) + "/12");
  return twelve_g / 12;
}

inline constexpr double kEulerGamma = 0.5772156649;

/// Lower bound for g(X_0^D(N)) in terms of DN alone.
inline double genus_lower_bound(Int dn) {
  detail::require(dn >= 6, "genus_lower_bound: DN must be >= 6");
  const double x = static_cast<double>(dn);
  const double denom =
      std::exp(kEulerGamma) * std::log(std::log(x)) + 3.0 / std::log(std::log(6.0));
  return 1.0 + x / 12.0 / denom - 7.0 * std::sqrt(x) / 3.0;
}

/// Smallest M >= 6 with genus_lower_bound(M) > g, so every DN >= M has genus > g.
/// The bound is increasing past its minimum, so this is the start of a tail.
inline Int genus_cutoff(Int g) {
  Int m = 6;
  // Walk past the initial dip, then scan.
  while (!(genus_lower_bound(m) > static_cast<double>(g)) ||
         !(genus_lower_bound(m + 1) >= genus_lower_bound(m)))
    ++m;
  return m;
}

/// Largest genus compatible with geometric gonality gon, floor(200 gon / 21 + 1).
inline Int gonality_genus_cap(Int gon) {
  detail::require(gon >= 1, "gonality_genus_cap: gonality must be positive");
  return (200 * gon) / 21 + 1;
}

}  // namespace shimura
