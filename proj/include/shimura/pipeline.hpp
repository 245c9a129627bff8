#pragma once

// Classification pipelines: geometrically bielliptic X_0^D(N) (gcd(D,N) = 1,
// N > 1), trigonal X_0^D(N), and the pairs with arithmetic degree of
// irrationality 2.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shimura/atkinlehner.hpp"
#include "shimura/fixtures.hpp"
#include "shimura/localpoints.hpp"

namespace shimura {

// ---------------------------------------------------------------------------
// Candidate enumeration

namespace detail {

/// Every pair with D > 1 (from `ds`), gcd(D,N) = 1, n_min <= N, DN < bound and
/// genus <= max_genus, sorted by (D, N).
inline std::vector<CurveLabel> enumerate_pairs(const std::vector<Int>& ds, Int n_min, Int bound,
                                               Int max_genus) {
  std::vector<CurveLabel> out;
  for (Int d : ds)
    for (Int n = n_min; d * n < bound; ++n)
      if (std::gcd(d, n) == 1) {
        CurveLabel l(d, n);
        if (genus(l) <= max_genus) out.push_back(l);
      }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Int> quaternion_discriminants_below(Int bound) {
  std::vector<Int> out;
  for (Int d = 6; d < bound; ++d)
    if (is_quaternion_discriminant(d)) out.push_back(d);
  return out;
}

}  // namespace detail

inline constexpr Int kBiellipticGenusCap = 39;
inline constexpr Int kTrigonalGenusCap = 29;

/// Pairs (D, N), D in allowed_D, N > 1, gcd(D, N) = 1, genus <= 39.
inline std::vector<CurveLabel> bielliptic_candidates(const FixtureSet& fx) {
  std::vector<Int> ds;
  for (const auto& [d, cite] : fx.allowed_d) ds.push_back(d);
  return detail::enumerate_pairs(ds, 2, genus_cutoff(kBiellipticGenusCap), kBiellipticGenusCap);
}

/// Pairs (D, N), D > 1 any quaternion discriminant, N >= 1, gcd(D, N) = 1, genus <= 29.
inline std::vector<CurveLabel> trigonal_candidates() {
  const Int bound = genus_cutoff(kTrigonalGenusCap);
  return detail::enumerate_pairs(detail::quaternion_discriminants_below(bound), 1, bound,
                                 kTrigonalGenusCap);
}

/// Every pair of genus <= 1 (D > 1, gcd(D, N) = 1), sorted.
inline std::vector<CurveLabel> low_genus_pairs(Int max_genus = 1) {
  const Int bound = genus_cutoff(max_genus);
  return detail::enumerate_pairs(detail::quaternion_discriminants_below(bound), 1, bound,
                                 max_genus);
}

// ---------------------------------------------------------------------------
// Automorphism group criteria

enum class AutStatus { all_AL, unknown };

struct AutVerdict {
  AutStatus status;
  std::string reason;  // which criterion fired, or "fixture:<citation>"
};

namespace detail {

inline bool small_symbol_condition(const CurveLabel& l, int k, Int prime) {
  if (l.DN() % prime != 0) return false;
  for (Int p : prime_divisors(l.N()))
    if (kronecker(-k, p) == -1) return false;
  int split = 0;
  for (Int p : prime_divisors(l.D()))
    if (kronecker(-k, p) == 1) ++split;
  return split <= 1;
}

}  // namespace detail

/// Whether Aut(X_0^D(N)) = W_0(D, N) follows from the elliptic-point and
/// genus/omega criteria, before fixture overrides. Conditions "even_omega3" and
/// "odd_omega4" assume X is geometrically bielliptic.
inline AutVerdict automorphism_status_computed(const CurveLabel& l) {
  detail::require(is_squarefree(l.N()),
                  "automorphism_status: N = " + std::to_string(l.N()) + " is not squarefree");
  const Int g = genus(l);
  detail::require(g >= 2, "automorphism_status: genus must be >= 2");
  const Int w = omega(l.DN());
  if (elliptic_count(l, 3) == 0 && elliptic_count(l, 4) == 0) return {AutStatus::all_AL, "e3_e4_zero"};
  if (detail::small_symbol_condition(l, 4, 2)) return {AutStatus::all_AL, "symbol_minus4"};
  if (detail::small_symbol_condition(l, 3, 3)) return {AutStatus::all_AL, "symbol_minus3"};
  if (w == valuation(g - 1, 2) + 2) return {AutStatus::all_AL, "omega_ord2"};
  if (g % 2 == 0 && w == 3) return {AutStatus::all_AL, "even_omega3_if_bielliptic"};
  if (g % 2 == 1 && w == 4) return {AutStatus::all_AL, "odd_omega4_if_bielliptic"};
  return {AutStatus::unknown, "no_criterion"};
}

inline AutVerdict automorphism_status(const CurveLabel& l, const FixtureSet& fx) {
  auto v = automorphism_status_computed(l);
  if (v.status == AutStatus::unknown)
    if (auto it = fx.automorphism_overrides.find(l); it != fx.automorphism_overrides.end())
      return {AutStatus::all_AL, "fixture:" + it->second};
  return v;
}

// ---------------------------------------------------------------------------
// Screens

/// Eliminated iff some w_m has #fix != 2g - 2 and #fix > 8.
inline bool fixed_point_screen(const CurveLabel& l) {
  const Int g = genus(l);
  for (Int m : hall_divisors(l.DN())) {
    if (m == 1) continue;
    const Int fix = fixed_point_count(l, m);
    if (fix != 2 * g - 2 && fix > 8) return true;
  }
  return false;
}

inline std::vector<Int> genus1_al_quotients(const CurveLabel& l) {
  std::vector<Int> out;
  for (Int m : hall_divisors(l.DN()))
    if (m > 1 && quotient_genus(l, m) == 1) out.push_back(m);
  return out;
}

struct BkxWitness {
  std::vector<Int> subgroup;
  Int degree;
  Int quotient_genus;
};

/// A subgroup H with g(X/H) >= 2 and 2g - 2 > |H| (2 g(X/H) + 2), if any;
/// never for genus < 6.
inline std::optional<BkxWitness> bkx_witness(const CurveLabel& l) {
  const Int g = genus(l);
  if (g < 6) return std::nullopt;
  for (const auto& h : all_subgroups(l)) {
    if (h.order() == 1) continue;
    const Int d = static_cast<Int>(h.order());
    const Int gy = subgroup_quotient_genus(h);
    if (gy >= 2 && 2 * g - 2 > d * (2 * gy + 2)) return BkxWitness{h.elements(), d, gy};
  }
  return std::nullopt;
}

inline bool bkx_degree_screen(const CurveLabel& l) { return bkx_witness(l).has_value(); }

/// Castelnuovo-Severi: largest genus of a curve with independent covers of
/// degrees d1, d2 onto curves of genera g1, g2.
inline Int cs_bound(Int d1, Int g1, Int d2, Int g2) {
  detail::require(d1 >= 2 && d2 >= 2, "cs_bound: degrees must be >= 2");
  detail::require(g1 >= 0 && g2 >= 0, "cs_bound: genera must be >= 0");
  return d1 * g1 + d2 * g2 + (d1 - 1) * (d2 - 1);
}

/// For g >= 6 with g != 1 mod 2^(omega(DN) - 1), a bielliptic involution must
/// lie in W_0(D, N).
inline bool bielliptic_involution_forced_al(const CurveLabel& l) {
  const Int g = genus(l);
  const Int modulus = ipow(2, omega(l.DN()) - 1);
  return g >= 6 && (g - 1) % modulus != 0;
}

struct CsWitness {
  std::vector<Int> subgroup;
  Int quotient_genus;
  Int bound;
};

/// A bielliptic map is independent of X -> X/H when no w_m is bielliptic, so
/// g > cs_bound(|H|, g(X/H), 2, 1) rules it out.
inline std::optional<CsWitness> cs_witness(const CurveLabel& l) {
  const Int g = genus(l);
  for (const auto& h : all_subgroups(l)) {
    if (h.order() < 2) continue;
    const Int gy = subgroup_quotient_genus(h);
    const Int bound = cs_bound(static_cast<Int>(h.order()), gy, 2, 1);
    if (g > bound) return CsWitness{h.elements(), gy, bound};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bielliptic classification

enum class BiellipticStatus { genus_le_1, bielliptic_AL, not_bielliptic, needs_manual };

inline const char* to_string(BiellipticStatus s) {
  switch (s) {
    case BiellipticStatus::genus_le_1: return "genus_le_1";
    case BiellipticStatus::bielliptic_AL: return "bielliptic_AL";
    case BiellipticStatus::not_bielliptic: return "not_bielliptic";
    case BiellipticStatus::needs_manual: return "needs_manual";
  }
  return "?";
}

struct BiellipticVerdict {
  CurveLabel label;
  Int genus;
  BiellipticStatus status;
  std::vector<Int> bielliptic_m_list;
  std::string reason;
};

struct TableRow {
  Int D;
  Int N;
  Int m;
  Int curve_genus;
  Int quotient_genus;
  Rationality rational_points;
  std::optional<Int> rank;
  std::string reason;

  [[nodiscard]] Triple triple() const { return {D, N, m}; }
};

struct BiellipticReport {
  std::vector<BiellipticVerdict> verdicts;
  std::vector<TableRow> rows;
};

/// Pairs whose bielliptic status is settled by arguments outside the screens.
inline const std::set<CurveLabel>& manual_pairs() {
  static const std::set<CurveLabel> pairs{CurveLabel(6, 25), CurveLabel(10, 9)};
  return pairs;
}

inline BiellipticVerdict classify_bielliptic_pair(const CurveLabel& l, const FixtureSet& fx) {
  const Int g = genus(l);
  BiellipticVerdict v{l, g, BiellipticStatus::not_bielliptic, genus1_al_quotients(l), ""};
  if (g <= 1) {
    v.status = BiellipticStatus::genus_le_1;
    v.reason = "genus_le_1";
    return v;
  }
  if (manual_pairs().count(l)) {
    v.status = BiellipticStatus::needs_manual;
    v.reason = "paper_exception";
    return v;
  }
  if (!v.bielliptic_m_list.empty()) {
    v.status = BiellipticStatus::bielliptic_AL;
    v.reason = "genus1_al_quotient";
    return v;
  }
  if (fixed_point_screen(l)) {
    v.reason = "fixed_point_screen";
  } else if (bkx_degree_screen(l)) {
    v.reason = "bkx_degree_screen";
  } else if (is_squarefree(l.N()) && automorphism_status(l, fx).status == AutStatus::all_AL) {
    v.reason = "aut_all_AL";
  } else if (bielliptic_involution_forced_al(l)) {
    v.reason = "not_div_corollary";
  } else if (cs_witness(l)) {
    v.reason = "cs_argument";
  } else {
    v.status = BiellipticStatus::needs_manual;
    v.reason = "unresolved";
  }
  return v;
}

inline BiellipticReport classify_bielliptic(const FixtureSet& fx) {
  BiellipticReport rep;
  for (const auto& l : bielliptic_candidates(fx)) {
    auto v = classify_bielliptic_pair(l, fx);
    for (Int m : v.bielliptic_m_list) {
      const Triple t{l.D(), l.N(), m};
      rep.rows.push_back({l.D(), l.N(), m, v.genus, quotient_genus(l, m), fx.rationality_of(t),
                          fx.rank_of(t), fx.reason_of(t)});
    }
    rep.verdicts.push_back(std::move(v));
  }
  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const TableRow& a, const TableRow& b) { return a.triple() < b.triple(); });
  return rep;
}

// ---------------------------------------------------------------------------
// Trigonal classification

enum class TrigonalStatus { genus_le_1, trigonal, schweizer_fixed_points, schweizer_klein,
                            hyperelliptic_genus4, cs_excluded, unresolved };

inline const char* to_string(TrigonalStatus s) {
  switch (s) {
    case TrigonalStatus::genus_le_1: return "genus_le_1";
    case TrigonalStatus::trigonal: return "trigonal";
    case TrigonalStatus::schweizer_fixed_points: return "schweizer_fixed_points";
    case TrigonalStatus::schweizer_klein: return "schweizer_klein";
    case TrigonalStatus::hyperelliptic_genus4: return "hyperelliptic_genus4";
    case TrigonalStatus::cs_excluded: return "cs_excluded";
    case TrigonalStatus::unresolved: return "unresolved";
  }
  return "?";
}

struct TrigonalVerdict {
  CurveLabel label;
  Int genus;
  TrigonalStatus status;
  std::string detail;
};

/// Fixed-point counts allowed for an involution of a trigonal curve of genus g.
inline bool schweizer_fixed_points_ok(const CurveLabel& l) {
  const Int g = genus(l);
  for (Int m : hall_divisors(l.DN())) {
    if (m == 1) continue;
    const Int fix = fixed_point_count(l, m);
    if (g % 2 == 1 ? fix != 4 : (fix != 2 && fix != 6)) return false;
  }
  return true;
}

/// A trigonal curve with a Klein four-group of automorphisms has g != 1 mod 4.
inline bool schweizer_klein_ok(const CurveLabel& l) {
  return !(omega(l.DN()) >= 2 && genus(l) % 4 == 1);
}

/// H1 of index 2 in H2 with g(X/H2) = 1 and g(X/H1) > cs_bound(3, 0, 2, 1).
/// A trigonal map on X gives X/H1 gonality <= 3, which cannot coexist with the
/// bielliptic map X/H1 -> X/H2.
struct TrigonalCsWitness {
  std::vector<Int> h1;
  std::vector<Int> h2;
  Int genus_h1;
  Int genus_h2;
};

inline std::optional<TrigonalCsWitness> trigonal_cs_witness(const CurveLabel& l) {
  const auto subs = all_subgroups(l);
  const Int bound = cs_bound(3, 0, 2, 1);
  for (const auto& h2 : subs) {
    if (h2.order() < 2 || subgroup_quotient_genus(h2) != 1) continue;
    for (const auto& h1 : subs) {
      if (2 * h1.order() != h2.order() || !h1.is_subgroup_of(h2)) continue;
      const Int g1 = h1.order() == 1 ? genus(l) : subgroup_quotient_genus(h1);
      if (g1 > bound) return TrigonalCsWitness{h1.elements(), h2.elements(), g1, 1};
    }
  }
  return std::nullopt;
}

inline TrigonalVerdict classify_trigonal_pair(const CurveLabel& l, const FixtureSet& fx) {
  const Int g = genus(l);
  TrigonalVerdict v{l, g, TrigonalStatus::trigonal, ""};
  if (g <= 1) {
    v.status = TrigonalStatus::genus_le_1;
    return v;
  }
  if (!schweizer_fixed_points_ok(l)) {
    v.status = TrigonalStatus::schweizer_fixed_points;
    return v;
  }
  if (!schweizer_klein_ok(l)) {
    v.status = TrigonalStatus::schweizer_klein;
    return v;
  }
  if (g == 2) {
    v.detail = "genus 2";
    return v;
  }
  if (g == 4) {
    if (fx.is_hyperelliptic(l)) v.status = TrigonalStatus::hyperelliptic_genus4;
    else v.detail = "non-hyperelliptic genus 4";
    return v;
  }
  if (auto w = trigonal_cs_witness(l)) {
    v.status = TrigonalStatus::cs_excluded;
    v.detail = "g(X/H1) = " + std::to_string(w->genus_h1) + ", g(X/H2) = 1";
    return v;
  }
  v.status = TrigonalStatus::unresolved;
  std::string genera;
  for (Int m : hall_divisors(l.DN()))
    if (m > 1) genera += " w" + std::to_string(m) + ":" + std::to_string(quotient_genus(l, m));
  v.detail = "involution quotient genera" + genera + "; full W_0 quotient genus " +
             std::to_string(subgroup_quotient_genus(ALSubgroup::full(l)));
  return v;
}

inline std::vector<TrigonalVerdict> classify_trigonal_verdicts(const FixtureSet& fx) {
  std::vector<TrigonalVerdict> out;
  for (const auto& l : trigonal_candidates()) out.push_back(classify_trigonal_pair(l, fx));
  return out;
}

/// Pairs proven trigonal over an algebraically closed field.
inline std::vector<CurveLabel> classify_trigonal(const FixtureSet& fx) {
  std::vector<CurveLabel> out;
  for (const auto& v : classify_trigonal_verdicts(fx))
    if (v.status == TrigonalStatus::trigonal) out.push_back(v.label);
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic degree of irrationality 2

struct Airr2Report {
  std::set<CurveLabel> genus_le_1;
  std::set<CurveLabel> hyperelliptic;
  std::set<CurveLabel> level_one_positive_rank;
  std::set<CurveLabel> positive_rank_quotient;  // N > 1
  std::set<CurveLabel> all;
};

/// Union of the genus <= 1 pairs, the hyperelliptic pairs, the level-one pairs
/// with a positive-rank bielliptic quotient, and the N > 1 pairs with a
/// rational genus-one AL quotient of positive rank. Throws if the union
/// differs from the fixture list.
inline Airr2Report airr2_report(const FixtureSet& fx, const BiellipticReport& bielliptic) {
  Airr2Report r;
  for (const auto& l : low_genus_pairs(1)) r.genus_le_1.insert(l);
  for (const auto& [l, cite] : fx.hyperelliptic) r.hyperelliptic.insert(l);
  for (const auto& [d, cite] : fx.airr2_level_one) r.level_one_positive_rank.insert(CurveLabel(d, 1));
  for (const auto& row : bielliptic.rows)
    if (row.N > 1 && row.rank.value_or(0) >= 1 && row.rational_points == Rationality::yes)
      r.positive_rank_quotient.insert(CurveLabel(row.D, row.N));
  for (const auto* s : {&r.genus_le_1, &r.hyperelliptic, &r.level_one_positive_rank,
                        &r.positive_rank_quotient})
    r.all.insert(s->begin(), s->end());

  std::set<CurveLabel> expected;
  for (const auto& [l, cite] : fx.airr2_list) expected.insert(l);
  if (r.all != expected) {
    std::string msg = "airr2 report mismatch:";
    for (const auto& l : r.all)
      if (!expected.count(l)) msg += " extra " + l.to_string();
    for (const auto& l : expected)
      if (!r.all.count(l)) msg += " missing " + l.to_string();
    throw FixtureError(msg);
  }
  return r;
}

inline Airr2Report airr2_report(const FixtureSet& fx) {
  return airr2_report(fx, classify_bielliptic(fx));
}

// ---------------------------------------------------------------------------
// Local-point confirmation of "no" rows

struct LocalCheck {
  TableRow row;
  std::vector<LocalVerdict> verdicts;
  bool confirmed;
};

inline bool cites_local_theorem(const std::string& reason) {
  return reason.find("Ogg85") != std::string::npos || reason.find("Ogg83") != std::string::npos ||
         reason.find("Clark03") != std::string::npos;
}

/// Local verdicts for every row whose fixture says "no" on local grounds.
inline std::vector<LocalCheck> local_point_checks(const std::vector<TableRow>& rows) {
  std::vector<LocalCheck> out;
  for (const auto& row : rows) {
    if (row.rational_points != Rationality::no || !cites_local_theorem(row.reason)) continue;
    auto vs = local_verdicts(CurveLabel(row.D, row.N), row.m);
    const bool ok = has_empty_verdict(vs);
    out.push_back({row, std::move(vs), ok});
  }
  return out;
}

}  // namespace shimura
