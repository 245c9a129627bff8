#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "shimura/embeddings.hpp"
#include "shimura/genus.hpp"

namespace shimura {

/// w_a w_b = w_{ab / gcd(a,b)^2}.
inline Int al_product(Int a, Int b) {
  const Int g = std::gcd(a, b);
  return (a / g) * (b / g);
}

/// A subgroup of W_0(D, N), stored as its sorted set of Hall divisors.
class ALSubgroup {
 public:
  ALSubgroup(const CurveLabel& base, std::vector<Int> elements)
      : base_(base), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    detail::require(!elements_.empty() && elements_.front() == 1,
                    "ALSubgroup: must contain the identity w_1");
    for (Int m : elements_)
      detail::require(is_hall_divisor(m, base_.DN()),
                      "ALSubgroup: " + std::to_string(m) + " is not a Hall divisor of DN");
    for (Int a : elements_)
      for (Int b : elements_)
        detail::require(contains(al_product(a, b)), "ALSubgroup: set is not closed");
  }

  /// Subgroup generated by the given Hall divisors.
  static ALSubgroup generated_by(const CurveLabel& base, const std::vector<Int>& gens) {
    std::vector<Int> elems{1};
    for (Int g : gens) {
      detail::require(is_hall_divisor(g, base.DN()),
                      "ALSubgroup: generator " + std::to_string(g) + " is not a Hall divisor of DN");
      if (std::find(elems.begin(), elems.end(), g) != elems.end()) continue;
      const std::size_t sz = elems.size();
      for (std::size_t i = 0; i < sz; ++i) elems.push_back(al_product(elems[i], g));
    }
    return ALSubgroup(base, std::move(elems));
  }

  /// The full group W_0(D, N).
  static ALSubgroup full(const CurveLabel& base) {
    return ALSubgroup(base, hall_divisors(base.DN()));
  }

  [[nodiscard]] const CurveLabel& base() const { return base_; }
  [[nodiscard]] const std::vector<Int>& elements() const { return elements_; }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] bool contains(Int m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m);
  }
  [[nodiscard]] bool is_subgroup_of(const ALSubgroup& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
  }

  friend bool operator==(const ALSubgroup& a, const ALSubgroup& b) {
    return a.base_ == b.base_ && a.elements_ == b.elements_;
  }

 private:
  CurveLabel base_;
  std::vector<Int> elements_;
};

/// Every subgroup of W_0(D, N) (subspaces of F_2^omega(DN)), ordered by size
/// then by element list.
inline std::vector<ALSubgroup> all_subgroups(const CurveLabel& base) {
  const auto hall = hall_divisors(base.DN());
  std::set<std::vector<Int>> seen{{1}};
  std::vector<std::vector<Int>> frontier{{1}};
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& h : frontier) {
      for (Int x : hall) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<Int> g = h;
        for (Int y : h) g.push_back(al_product(x, y));
        std::sort(g.begin(), g.end());
        if (seen.insert(g).second) next.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Int>> sorted(seen.begin(), seen.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<ALSubgroup> out;
  out.reserve(sorted.size());
  for (auto& elems : sorted) out.emplace_back(base, std::move(elems));
  return out;
}

/// CM orders whose points are fixed by w_m.
inline std::vector<QuadOrder> fixed_point_orders(Int m) {
  detail::require(m >= 2, "fixed_point_orders: m must be >= 2 (w_1 is the identity)");
  if (m == 2) return {order_from_radicand(-1, false), order_from_radicand(-2, false)};
  if (m % 4 == 3) return {order_from_radicand(-m, true), order_from_radicand(-m, false)};
  return {order_from_radicand(-m, false)};
}

namespace detail {

inline void require_nontrivial_hall(const CurveLabel& label, Int m) {
  require(m > 1, "Atkin-Lehner index m must be > 1");
  require(is_hall_divisor(m, label.DN()),
          std::to_string(m) + " is not a Hall divisor of DN = " + std::to_string(label.DN()));
}

inline std::set<Int> primes_of(Int n) {
  const auto ps = prime_divisors(n);
  return {ps.begin(), ps.end()};
}

}  // namespace detail

/// Number of fixed points of w_m on X_0^D(N).
inline Int fixed_point_count(const CurveLabel& label, Int m) {
  detail::require_nontrivial_hall(label, m);
  const auto primes = detail::primes_of(label.DN() / m);
  Int total = 0;
  for (const auto& r : fixed_point_orders(m)) total += partial_embedding_product(r, label, primes);
  return total;
}

/// Fixed points of the Fricke involution w_DN.
inline Int fricke_count(const CurveLabel& label) {
  detail::require(label.D() > 1, "fricke_count: D must be > 1");
  const Int dn = label.DN();
  Int total = class_number(order_from_radicand(-dn, false));
  if (dn % 4 == 3) total += class_number(order_from_radicand(-dn, true));
  return total;
}

/// g(X / <w_m>) = (2g + 2 - #fix) / 4.
inline Int quotient_genus(const CurveLabel& label, Int m) {
  detail::require_nontrivial_hall(label, m);
  const Int numer = 2 * genus(label) + 2 - fixed_point_count(label, m);
  if (numer % 4 != 0 || numer < 0)
    throw IntegralityError("quotient genus of " + label.to_string() + " by w_" +
                           std::to_string(m) + " is " + std::to_string(numer) + "/4");
  return numer / 4;
}

/// Riemann-Hurwitz for an elementary abelian 2-group H:
///   2 g_X - 2 = |H| (2 g_Y - 2) + sum_{1 != s in H} #X^s.
inline Int subgroup_quotient_genus(const ALSubgroup& h) {
  const Int gx = genus(h.base());
  Int ramification = 0;
  for (Int m : h.elements())
    if (m != 1) ramification += fixed_point_count(h.base(), m);
  const Int order = static_cast<Int>(h.order());
  const Int lhs = 2 * gx - 2 - ramification;  // = |H| (2 g_Y - 2)
  if (lhs % (2 * order) != 0)
    throw IntegralityError("subgroup quotient genus of " + h.base().to_string() +
                           " is non-integral");
  const Int gy = lhs / (2 * order) + 1;
  if (gy < 0)
    throw IntegralityError("subgroup quotient genus of " + h.base().to_string() +
                           " is negative");
  return gy;
}

}  // namespace shimura
