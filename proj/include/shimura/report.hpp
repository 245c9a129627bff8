#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "shimura/pipeline.hpp"

namespace shimura {

enum class OutputFormat { csv, json, markdown };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "markdown" || s == "md") return OutputFormat::markdown;
  throw DomainError("unknown output format '" + s + "' (expected csv, json or markdown)");
}

inline constexpr const char* kTableHeader = "D,N,m,genus,quotient_genus,rational_points,rank,reason";

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string rank_text(const std::optional<Int>& r) {
  return r ? std::to_string(*r) : std::string("unknown");
}

}  // namespace detail

inline void write_rows_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << kTableHeader << '\n';
  for (const auto& r : rows)
    os << r.D << ',' << r.N << ',' << r.m << ',' << r.curve_genus << ',' << r.quotient_genus << ','
       << to_string(r.rational_points) << ',' << detail::rank_text(r.rank) << ','
       << detail::csv_field(r.reason.empty() ? "unknown" : r.reason) << '\n';
}

inline nlohmann::ordered_json rows_to_json(const std::vector<TableRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["D"] = r.D;
    o["N"] = r.N;
    o["m"] = r.m;
    o["genus"] = r.curve_genus;
    o["quotient_genus"] = r.quotient_genus;
    if (r.rational_points == Rationality::unknown) o["rational_points"] = nullptr;
    else o["rational_points"] = to_string(r.rational_points);
    if (r.rank) o["rank"] = *r.rank;
    else o["rank"] = nullptr;
    if (r.reason.empty()) o["reason"] = nullptr;
    else o["reason"] = r.reason;
    arr.push_back(std::move(o));
  }
  return arr;
}

inline void write_rows_json(std::ostream& os, const std::vector<TableRow>& rows) {
  os << rows_to_json(rows).dump(2) << '\n';
}

/// Same column order as the printed tables.
inline void write_rows_markdown(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "| (D,N) | g | m | g(X/w_m) | X/w_m(Q) != empty | rank | reason |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    os << "| (" << r.D << ',' << r.N << ") | " << r.curve_genus << " | " << r.m << " | "
       << r.quotient_genus << " | " << to_string(r.rational_points) << " | "
       << detail::rank_text(r.rank) << " | " << (r.reason.empty() ? "unknown" : r.reason) << " |\n";
}

inline void write_rows(std::ostream& os, const std::vector<TableRow>& rows, OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: write_rows_csv(os, rows); break;
    case OutputFormat::json: write_rows_json(os, rows); break;
    case OutputFormat::markdown: write_rows_markdown(os, rows); break;
  }
}

inline void write_labels(std::ostream& os, const std::vector<CurveLabel>& labels, OutputFormat f) {
  switch (f) {
    case OutputFormat::csv:
      os << "D,N,genus\n";
      for (const auto& l : labels) os << l.D() << ',' << l.N() << ',' << genus(l) << '\n';
      break;
    case OutputFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& l : labels) {
        nlohmann::ordered_json o;
        o["D"] = l.D();
        o["N"] = l.N();
        o["genus"] = genus(l);
        arr.push_back(std::move(o));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::markdown:
      os << "| D | N | genus |\n|---|---|---|\n";
      for (const auto& l : labels) os << "| " << l.D() << " | " << l.N() << " | " << genus(l) << " |\n";
      break;
  }
}

}  // namespace shimura
