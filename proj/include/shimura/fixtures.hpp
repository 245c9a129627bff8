#pragma once

// Prior-work data the pipelines consume but cannot recompute: lists of
// hyperelliptic and bielliptic curves, and the rank/rationality columns of the
// genus-one quotient tables. Stored as a line-oriented text file:
//
//   TAG,field,...,citation
//
// Blank lines and lines starting with '#' are skipped; anything else that does
// not parse is fatal.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shimura/genus.hpp"

#ifndef SHIMURA_DEFAULT_FIXTURE_DIR
#define SHIMURA_DEFAULT_FIXTURE_DIR "data"
#endif

namespace shimura {

struct Triple {
  Int D;
  Int N;
  Int m;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

enum class Rationality { yes, no, unknown };

inline const char* to_string(Rationality r) {
  switch (r) {
    case Rationality::yes: return "yes";
    case Rationality::no: return "no";
    case Rationality::unknown: return "unknown";
  }
  return "?";
}

struct RationalityEntry {
  Rationality value;
  std::string citation;
};

struct RankEntry {
  Int rank;
  std::string citation;
};

struct FixtureSet {
  std::map<Int, std::string> allowed_d;
  std::map<CurveLabel, std::string> hyperelliptic;
  std::map<Int, std::string> bielliptic_level_one;
  std::map<CurveLabel, std::string> automorphism_overrides;
  std::map<Triple, RankEntry> rank;
  std::map<Triple, RationalityEntry> rationality;
  std::map<Int, std::string> airr2_level_one;
  std::map<CurveLabel, std::string> airr2_list;

  [[nodiscard]] bool is_hyperelliptic(const CurveLabel& l) const {
    return hyperelliptic.count(l) != 0;
  }
  [[nodiscard]] std::optional<Int> rank_of(const Triple& t) const {
    if (auto it = rank.find(t); it != rank.end()) return it->second.rank;
    return std::nullopt;
  }
  [[nodiscard]] Rationality rationality_of(const Triple& t) const {
    if (auto it = rationality.find(t); it != rationality.end()) return it->second.value;
    return Rationality::unknown;
  }
  [[nodiscard]] std::string reason_of(const Triple& t) const {
    if (auto it = rationality.find(t); it != rationality.end()) return it->second.citation;
    return "";
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline Int parse_int(const std::string& s, int line_no) {
  std::size_t pos = 0;
  Int v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size())
    throw FixtureError("fixtures line " + std::to_string(line_no) + ": '" + s +
                       "' is not an integer");
  return v;
}

inline Rationality parse_rationality(const std::string& s, int line_no) {
  if (s == "yes") return Rationality::yes;
  if (s == "no") return Rationality::no;
  if (s == "unknown") return Rationality::unknown;
  throw FixtureError("fixtures line " + std::to_string(line_no) + ": rationality '" + s +
                     "' is not yes/no/unknown");
}

}  // namespace detail

/// Parse fixture records; validates each line but not cross-record consistency.
inline FixtureSet parse_fixtures(std::istream& in) {
  FixtureSet fx;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto f = detail::split_fields(line);
    const std::string& tag = f.front();
    const std::string where = "fixtures line " + std::to_string(line_no);

    auto expect = [&](std::size_t n) {
      if (f.size() != n)
        throw FixtureError(where + ": " + tag + " needs " + std::to_string(n) + " fields, got " +
                           std::to_string(f.size()));
      if (f.back().empty()) throw FixtureError(where + ": missing citation");
    };
    auto num = [&](std::size_t i) { return detail::parse_int(f[i], line_no); };
    auto label = [&](std::size_t i) {
      try {
        return CurveLabel(num(i), num(i + 1));
      } catch (const DomainError& e) {
        throw FixtureError(where + ": " + e.what());
      }
    };
    auto discriminant = [&](std::size_t i) {
      const Int d = num(i);
      if (!is_quaternion_discriminant(d))
        throw FixtureError(where + ": " + std::to_string(d) + " is not a quaternion discriminant");
      return d;
    };
    auto triple = [&]() {
      const auto l = label(1);
      const Int m = num(3);
      if (m <= 1 || !is_hall_divisor(m, l.DN()))
        throw FixtureError(where + ": m = " + std::to_string(m) + " is not a Hall divisor > 1");
      return Triple{l.D(), l.N(), m};
    };

    if (tag == "ALLOWED_D") {
      expect(3);
      fx.allowed_d.emplace(discriminant(1), f[2]);
    } else if (tag == "HYPERELLIPTIC") {
      expect(4);
      fx.hyperelliptic.emplace(label(1), f[3]);
    } else if (tag == "BIELLIPTIC_L1") {
      expect(3);
      fx.bielliptic_level_one.emplace(discriminant(1), f[2]);
    } else if (tag == "AUT_OVERRIDE") {
      expect(4);
      fx.automorphism_overrides.emplace(label(1), f[3]);
    } else if (tag == "AIRR2_L1") {
      expect(3);
      fx.airr2_level_one.emplace(discriminant(1), f[2]);
    } else if (tag == "AIRR2_LIST") {
      expect(4);
      fx.airr2_list.emplace(label(1), f[3]);
    } else if (tag == "RANK") {
      expect(6);
      const Int r = num(4);
      if (r < 0) throw FixtureError(where + ": negative rank");
      fx.rank.emplace(triple(), RankEntry{r, f[5]});
    } else if (tag == "RATIONALITY") {
      expect(6);
      fx.rationality.emplace(triple(), RationalityEntry{detail::parse_rationality(f[4], line_no), f[5]});
    } else {
      throw FixtureError(where + ": unknown record tag '" + tag + "'");
    }
  }
  return fx;
}

/// Cross-record checks: ALLOWED_D must be exactly the discriminants whose level
/// one curve has genus <= 1, is hyperelliptic, or is listed as bielliptic.
inline void validate_fixtures(const FixtureSet& fx) {
  std::set<Int> derived;
  for (const auto& [d, cite] : fx.bielliptic_level_one) derived.insert(d);
  for (const auto& [l, cite] : fx.hyperelliptic)
    if (l.N() == 1) derived.insert(l.D());
  const Int cutoff = genus_cutoff(1);
  for (Int d = 6; d < cutoff; ++d)
    if (is_quaternion_discriminant(d) && genus(CurveLabel(d, 1)) <= 1) derived.insert(d);
  std::set<Int> allowed;
  for (const auto& [d, cite] : fx.allowed_d) allowed.insert(d);
  if (allowed != derived)
    throw FixtureError("ALLOWED_D does not match the genus<=1 / hyperelliptic / bielliptic "
                       "level-one discriminants");
  for (const auto& [t, e] : fx.rank)
    if (fx.rationality.count(t) == 0)
      throw FixtureError("RANK record without RATIONALITY record");
}

/// Directory holding fixtures.txt: explicit flag, then $SHIMURA_FIXTURE_DIR,
/// then the compiled-in default.
inline std::filesystem::path fixture_path(const std::optional<std::string>& dir_flag = {}) {
  std::filesystem::path dir = SHIMURA_DEFAULT_FIXTURE_DIR;
  if (const char* env = std::getenv("SHIMURA_FIXTURE_DIR"); env && *env) dir = env;
  if (dir_flag && !dir_flag->empty()) dir = *dir_flag;
  return dir / "fixtures.txt";
}

inline FixtureSet load_fixtures(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw FixtureError("cannot open fixture file " + file.string());
  auto fx = parse_fixtures(in);
  validate_fixtures(fx);
  return fx;
}

inline FixtureSet load_fixtures(const std::optional<std::string>& dir_flag = {}) {
  return load_fixtures(fixture_path(dir_flag));
}

}  // namespace shimura
