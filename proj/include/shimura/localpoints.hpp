#pragma once

// Local points on X_0^D(N) and its Atkin-Lehner quotients: the number of real
// components of X / <w_m>, and Q_p-points at primes p | D.

#include <string>
#include <vector>

#include "shimura/atkinlehner.hpp"

namespace shimura {

enum class LocalStatus { empty, nonempty, not_applicable };

inline const char* to_string(LocalStatus s) {
  switch (s) {
    case LocalStatus::empty: return "empty";
    case LocalStatus::nonempty: return "nonempty";
    case LocalStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

struct LocalVerdict {
  Int place = 0;  // 0 for the real place, otherwise a prime dividing D
  LocalStatus status = LocalStatus::not_applicable;
  std::string source;  // which criterion produced the verdict

  [[nodiscard]] bool is_real() const { return place == 0; }
  [[nodiscard]] std::string place_name() const {
    return is_real() ? std::string("real") : std::to_string(place);
  }
};

inline LocalStatus status_of(bool nonempty) {
  return nonempty ? LocalStatus::nonempty : LocalStatus::empty;
}

/// Number of connected components of (X_0^D(N) / <w_m>)(R).
inline Int real_components(const CurveLabel& label, Int m) {
  detail::require(label.D() > 1, "real_components: D must be > 1");
  detail::require(is_hall_divisor(m, label.DN()),
                  std::to_string(m) + " is not a Hall divisor of DN");
  if (is_square(m)) return 0;

  const Int dn = label.DN();
  const auto primes = detail::primes_of(dn / m);
  std::vector<QuadOrder> orders{order_from_radicand(m, false)};
  if (m % 4 == 1) orders.push_back(order_from_radicand(m, true));
  Int nu = 0;
  for (const auto& r : orders) nu += partial_embedding_product(r, label, primes);

  Int twice = nu;
  if (nu > 0 && dn % 2 == 0 && (dn / 2) % 2 == 1 && (m == dn / 2 || m == dn) &&
      element_embeds(-1, EichlerTarget::indefinite(label)) && pell_pm2_solvable(m)) {
    twice += ipow(2, omega(dn) - 2);
  }
  if (twice % 2 != 0)
    throw IntegralityError("real component count of " + label.to_string() + "/w_" +
                           std::to_string(m) + " is " + std::to_string(twice) + "/2");
  return twice / 2;
}

namespace detail {

inline void require_ramified_prime(const CurveLabel& label, Int p) {
  require(is_prime(p) && label.D() % p == 0,
          "p = " + std::to_string(p) + " must be a prime dividing D = " + std::to_string(label.D()));
}

inline bool contains_sqrt(Int d, const EichlerTarget& t) { return element_embeds(d, t); }

// Z[zeta_3] = Z[(1 + sqrt(-3)) / 2].
inline bool contains_zeta3(const EichlerTarget& t) {
  return order_embeds(order_from_radicand(-3, true), t);
}

}  // namespace detail

/// Whether X_0^D(N)(Q_p) is non-empty, p | D.
inline LocalVerdict qp_curve_points(const CurveLabel& label, Int p) {
  detail::require_ramified_prime(label, p);
  const bool nonempty =
      (p == 2 && detail::contains_sqrt(-1, EichlerTarget::indefinite(label))) ||
      (p % 4 == 1 && label.N() == 1 && label.D() == 2 * p);
  return {p, status_of(nonempty), "Ogg85(i)"};
}

/// Quotient by w_m with p not dividing m; only valid when X_0^D(N)(Q_p) is empty.
inline LocalVerdict ogg85_unramified_quotient(const CurveLabel& label, Int m, Int p) {
  detail::require_ramified_prime(label, p);
  detail::require(m > 1 && m % p != 0 && is_hall_divisor(m, label.DN() / p),
                  "Ogg85(ii): need m > 1, m || DN/p");
  detail::require(qp_curve_points(label, p).status == LocalStatus::empty,
                  "Ogg85(ii): applies only when X_0^D(N)(Q_p) is empty");
  const auto here = EichlerTarget::indefinite(label);
  const auto definite = EichlerTarget::definite_at(label, p);
  const Int rest = label.DN() / p;
  const bool m_or_2m = rest == m || rest == 2 * m;

  const bool a = p == 2 && m == rest && detail::contains_sqrt(-2, here);
  const bool parity_ok = !(rest == 2 * m && label.N() % 2 == 0) || ((p + 1) * (m + 1)) % 8 == 0;
  const bool b = p > 2 && detail::contains_sqrt(-p, here) && kronecker(-m, p) == 1 && m_or_2m &&
                 parity_ok;
  const bool c = p % 4 == 1 && detail::contains_sqrt(-1, definite) && m_or_2m &&
                 detail::contains_sqrt(-p * m, here);
  return {p, status_of(a || b || c), "Ogg85(ii)"};
}

/// Quotient by w_p itself.
inline LocalVerdict ogg85_ramified_quotient(const CurveLabel& label, Int p) {
  detail::require_ramified_prime(label, p);
  const auto definite = EichlerTarget::definite_at(label, p);
  const bool nonempty = detail::contains_sqrt(-p, definite) ||
                        detail::contains_sqrt(-1, definite) || detail::contains_zeta3(definite);
  return {p, status_of(nonempty), "Ogg85(iii)"};
}

/// Quotient by w_{p m'} with m' > 1; only valid when X_0^D(N)(Q_p) is empty.
inline LocalVerdict ogg85_mixed_quotient(const CurveLabel& label, Int m_prime, Int p) {
  detail::require_ramified_prime(label, p);
  detail::require(m_prime > 1 && is_hall_divisor(m_prime, label.DN() / p),
                  "Ogg85(iv): need m' > 1, m' || DN/p");
  detail::require(qp_curve_points(label, p).status == LocalStatus::empty,
                  "Ogg85(iv): applies only when X_0^D(N)(Q_p) is empty");
  const auto definite = EichlerTarget::definite_at(label, p);
  const bool nonempty = detail::contains_sqrt(-m_prime, definite) ||
                        (m_prime == 2 && detail::contains_sqrt(-1, definite));
  return {p, status_of(nonempty), "Ogg85(iv)"};
}

/// Whether (X_0^D(N) / <w_m>)(Q_p) is non-empty, p | D, m || DN, m > 1.
inline LocalVerdict qp_quotient_points(const CurveLabel& label, Int m, Int p) {
  detail::require_ramified_prime(label, p);
  detail::require(m > 1 && is_hall_divisor(m, label.DN()),
                  "qp_quotient_points: m must be a Hall divisor of DN greater than 1");
  if (m == p) return ogg85_ramified_quotient(label, p);
  if (qp_curve_points(label, p).status == LocalStatus::nonempty)
    return {p, LocalStatus::nonempty, "Ogg85(i)"};
  if (m % p != 0) return ogg85_unramified_quotient(label, m, p);
  return ogg85_mixed_quotient(label, m / p, p);
}

/// For D = p q and N prime: is (X_0^{pq}(N) / <w_pq>)(Q_p) non-empty?
/// Yes iff N is not inert in Q(sqrt(-q)).
inline LocalVerdict clark_criterion(Int d, Int n, Int p) {
  detail::require(is_quaternion_discriminant(d) && omega(d) == 2,
                  "clark_criterion: D must be a product of two primes");
  detail::require(is_prime(n) && std::gcd(d, n) == 1,
                  "clark_criterion: N must be a prime coprime to D");
  detail::require(is_prime(p) && d % p == 0, "clark_criterion: p must divide D");
  const Int q = d / p;
  const Int field_disc = QuadOrder::from_discriminant(-4 * q).fundamental_discriminant();
  return {p, status_of(kronecker(field_disc, n) != -1), "Clark03"};
}

inline bool clark_applies(const CurveLabel& label, Int m) {
  return omega(label.D()) == 2 && is_prime(label.N()) && m == label.D();
}

/// Every verdict the local criteria give for X_0^D(N) / <w_m>: the real place
/// first, then each p | D (Ogg85, then Clark03 where it applies).
inline std::vector<LocalVerdict> local_verdicts(const CurveLabel& label, Int m) {
  std::vector<LocalVerdict> out;
  out.push_back({0, status_of(real_components(label, m) > 0), "Ogg83"});
  for (Int p : prime_divisors(label.D())) {
    out.push_back(qp_quotient_points(label, m, p));
    if (clark_applies(label, m)) out.push_back(clark_criterion(label.D(), label.N(), p));
  }
  return out;
}

inline bool has_empty_verdict(const std::vector<LocalVerdict>& vs) {
  for (const auto& v : vs)
    if (v.status == LocalStatus::empty) return true;
  return false;
}

}  // namespace shimura
