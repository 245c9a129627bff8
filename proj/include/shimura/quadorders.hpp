#pragma once

// Orders in quadratic fields. An order is stored as (fundamental
// discriminant d_K, conductor f); its discriminant is f^2 d_K.

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "shimura/arith.hpp"

namespace shimura {

inline bool is_discriminant(Int d) {
  const Int r = ((d % 4) + 4) % 4;
  return d != 0 && (r == 0 || r == 1) && !is_square(d);
}

inline bool is_fundamental_discriminant(Int d) {
  if (!is_discriminant(d)) return false;
  if (((d % 4) + 4) % 4 == 1) return is_squarefree(d < 0 ? -d : d);
  const Int k = d / 4;
  const Int k4 = ((k % 4) + 4) % 4;
  return (k4 == 2 || k4 == 3) && is_squarefree(k < 0 ? -k : k);
}

class QuadOrder {
 public:
  QuadOrder(Int fundamental_discriminant, Int conductor)
      : dk_(fundamental_discriminant), f_(conductor) {
    detail::require(is_fundamental_discriminant(dk_),
                    "QuadOrder: " + std::to_string(dk_) + " is not a fundamental discriminant");
    detail::require(f_ >= 1, "QuadOrder: conductor must be positive");
  }

  /// The order of discriminant d (d = 0, 1 mod 4, not a square).
  static QuadOrder from_discriminant(Int d) {
    detail::require(is_discriminant(d), "not a quadratic discriminant: " + std::to_string(d));
    // d = s t^2 with s squarefree (sign kept).
    Int s = d < 0 ? -1 : 1;
    Int t = 1;
    for (const auto& [p, e] : factorize(d < 0 ? -d : d)) {
      if (e % 2) s *= p;
      t *= ipow(p, e / 2);
    }
    const Int s4 = ((s % 4) + 4) % 4;
    if (s4 == 1) return QuadOrder(s, t);
    return QuadOrder(4 * s, t / 2);
  }

  [[nodiscard]] Int fundamental_discriminant() const { return dk_; }
  [[nodiscard]] Int conductor() const { return f_; }
  [[nodiscard]] Int discriminant() const { return f_ * f_ * dk_; }
  [[nodiscard]] bool is_maximal() const { return f_ == 1; }
  [[nodiscard]] bool is_imaginary() const { return dk_ < 0; }

  /// Orders containing this one, i.e. conductors dividing f, ascending by conductor.
  [[nodiscard]] std::vector<QuadOrder> super_orders() const {
    std::vector<QuadOrder> out;
    for (Int g = 1; g <= f_; ++g)
      if (f_ % g == 0) out.emplace_back(dk_, g);
    return out;
  }

  friend bool operator==(const QuadOrder&, const QuadOrder&) = default;

 private:
  Int dk_;
  Int f_;
};

/// Z[sqrt(m)] (discriminant 4m), or Z[(1+sqrt(m))/2] (discriminant m) when half is set.
inline QuadOrder order_from_radicand(Int m, bool half) {
  detail::require(m != 0 && !is_square(m),
                  "order_from_radicand: radicand " + std::to_string(m) + " is zero or a square");
  if (half) {
    detail::require(((m % 4) + 4) % 4 == 1,
                    "order_from_radicand: (1+sqrt(m))/2 is integral only for m = 1 mod 4");
    return QuadOrder::from_discriminant(m);
  }
  return QuadOrder::from_discriminant(4 * m);
}

namespace detail {

// Reduced positive definite forms: |b| <= a <= c, b >= 0 when |b| = a or a = c.
inline Int imaginary_class_number(Int d) {
  const Int n = -d;
  Int count = 0;
  for (Int b = n % 2; 3 * b * b <= n; b += 2) {
    const Int t = (b * b + n) / 4;
    for (Int a = std::max<Int>(b, 1); a * a <= t; ++a) {
      if (t % a != 0) continue;
      const Int c = t / a;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      count += (b == 0 || b == a || a == c) ? 1 : 2;
    }
  }
  return count;
}

struct IndefiniteForm {
  Int a, b, c;
  friend auto operator<=>(const IndefiniteForm&, const IndefiniteForm&) = default;
};

// Cycles of reduced indefinite forms: 0 < b < sqrt(d), sqrt(d) - b < 2|a| < sqrt(d) + b.
struct FormCycles {
  Int narrow_classes = 0;
  int unit_norm = 1;
};

inline FormCycles indefinite_form_cycles(Int d) {
  const Int s = isqrt(d);
  auto reduced = [&](Int a, Int b) {
    const Int a2 = 2 * (a < 0 ? -a : a);
    const Int lo = a2 + b;
    const Int hi = a2 - b;
    return b > 0 && b <= s && d < lo * lo && (hi <= 0 || hi * hi < d);
  };
  std::vector<IndefiniteForm> forms;
  for (Int b = (d % 2 == 0 ? 2 : 1); b <= s; b += 2) {
    const Int ac = (b * b - d) / 4;  // negative
    const Int mag = -ac;
    for (Int a = 1; a * a <= mag; ++a) {
      if (mag % a != 0) continue;
      for (Int x : {a, mag / a}) {
        for (Int sign : {1, -1}) {
          const Int aa = sign * x;
          const Int cc = ac / aa;
          if (!reduced(aa, b)) continue;
          if (std::gcd(std::gcd(x, b), cc < 0 ? -cc : cc) != 1) continue;
          forms.push_back({aa, b, cc});
        }
        if (a == mag / a) break;
      }
    }
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());

  auto rho = [&](const IndefiniteForm& f) {
    const Int c2 = 2 * (f.c < 0 ? -f.c : f.c);
    const Int r = (((s + f.b) % c2) + c2) % c2;
    const Int nb = s - r;
    return IndefiniteForm{f.c, nb, (nb * nb - d) / (4 * f.c)};
  };

  FormCycles out;
  std::map<IndefiniteForm, bool> seen;
  for (const auto& f : forms) seen[f] = false;
  for (const auto& start : forms) {
    if (seen[start]) continue;
    ++out.narrow_classes;
    bool has_plus_one = false;
    bool has_minus_one = false;
    IndefiniteForm g = start;
    while (!seen[g]) {
      seen[g] = true;
      has_plus_one |= g.a == 1;
      has_minus_one |= g.a == -1;
      g = rho(g);
      if (seen.find(g) == seen.end())
        throw IntegralityError("form cycle left the reduced set at discriminant " +
                               std::to_string(d));
    }
    if (has_plus_one && has_minus_one) out.unit_norm = -1;
  }
  return out;
}

class ClassNumberCache {
 public:
  template <typename F>
  Int get_or_compute(Int d, F&& compute) {
    {
      std::lock_guard lock(mu_);
      if (auto it = table_.find(d); it != table_.end()) return it->second;
    }
    const Int h = compute(d);
    std::lock_guard lock(mu_);
    table_.emplace(d, h);
    return h;
  }

 private:
  std::mutex mu_;
  std::unordered_map<Int, Int> table_;
};

inline ClassNumberCache& class_number_cache() {
  static ClassNumberCache cache;
  return cache;
}

}  // namespace detail

/// Norm of the fundamental unit of a real quadratic order.
inline int unit_norm(const QuadOrder& r) {
  detail::require(r.discriminant() > 0, "unit_norm: order must be real (positive discriminant)");
  return detail::indefinite_form_cycles(r.discriminant()).unit_norm;
}

/// Number of proper equivalence classes of primitive forms of discriminant d > 0.
inline Int narrow_class_number(Int d) {
  detail::require(is_discriminant(d) && d > 0, "narrow_class_number: need a real discriminant");
  return detail::indefinite_form_cycles(d).narrow_classes;
}

/// Cardinality of the (wide) ideal class group of the order.
inline Int class_number(const QuadOrder& r) {
  return detail::class_number_cache().get_or_compute(r.discriminant(), [](Int d) -> Int {
    if (d < 0) return detail::imaginary_class_number(d);
    const auto cyc = detail::indefinite_form_cycles(d);
    return cyc.unit_norm == -1 ? cyc.narrow_classes : cyc.narrow_classes / 2;
  });
}

/// Whether x^2 - m y^2 = 2 or -2 has an integer solution.
inline bool pell_pm2_solvable(Int m) {
  detail::require(m >= 2 && !is_square(m), "pell_pm2_solvable: m must be a nonsquare >= 2");
  if (m < 5) return m == 2 || m == 3;  // 2^2 - 2 = 2, 1 - 3 = -2
  // Since 2 < sqrt(m), every solution is a convergent of sqrt(m), and
  // p_{k-1}^2 - m q_{k-1}^2 = (-1)^k Q_k over one period.
  const Int a0 = isqrt(m);
  Int p = 0, q = 1, a = a0;
  do {
    p = a * q - p;
    q = (m - p * p) / q;
    if (q == 2) return true;
    a = (a0 + p) / q;
  } while (q != 1);
  return false;
}

/// Kronecker symbol of the field, (L/p).
inline int field_symbol(const QuadOrder& r, Int p) {
  return kronecker(r.fundamental_discriminant(), p);
}

/// Eichler symbol (R/p): (L/p) when p does not divide the conductor, 1 otherwise.
inline int eichler_symbol(const QuadOrder& r, Int p) {
  if (r.conductor() % p == 0) return 1;
  return field_symbol(r, p);
}

}  // namespace shimura
