#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mddkit/histogram.hpp"
#include "mddkit/scorer.hpp"

namespace mddkit {

// table: aligned human-readable columns. kv: one `key = value` per line,
// stable key order, ratios with four decimals, undefined values as `null`.
enum class ReportFormat { table, kv };

inline std::string format_ratio(std::optional<double> v) {
  if (!v) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

namespace report_detail {

using Field = std::pair<std::string, std::string>;

inline std::string render(const std::vector<Field>& fields, ReportFormat format, const char* title) {
  std::ostringstream os;
  if (format == ReportFormat::kv) {
    for (const auto& [k, v] : fields) os << k << " = " << v << '\n';
    return os.str();
  }
  std::size_t width = 0;
  for (const auto& [k, v] : fields) width = std::max(width, k.size());
  os << title << '\n';
  for (const auto& [k, v] : fields) {
    os << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return os.str();
}

inline std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace report_detail

inline std::string emit_report(const ScoreReport& r, ReportFormat format) {
  const auto& c = r.counts;
  auto n = [](std::uint64_t v) { return std::to_string(v); };
  const std::vector<report_detail::Field> fields = {
      {"n_utterances", n(c.n_utterances)},
      {"n_canonical_positions", n(c.n_canonical_positions)},
      {"ta", n(c.ta)},
      {"fr", n(c.fr)},
      {"tr", n(c.tr)},
      {"fa", n(c.fa)},
      {"cd", n(c.cd)},
      {"annotated_insertions", n(c.annotated_insertions)},
      {"hypothesis_insertions", n(c.hypothesis_insertions)},
      {"per_errors", n(c.per_errors)},
      {"per_ref_length", n(c.per_ref_length)},
      {"per", format_ratio(r.per)},
      {"correct_rate", format_ratio(r.correct_rate)},
      {"accuracy", format_ratio(r.accuracy)},
      {"ta_rate", format_ratio(r.ta_rate)},
      {"fr_rate", format_ratio(r.fr_rate)},
      {"tr_rate", format_ratio(r.tr_rate)},
      {"fa_rate", format_ratio(r.fa_rate)},
      {"cd_rate", format_ratio(r.cd_rate)},
      {"precision", format_ratio(r.precision)},
      {"recall", format_ratio(r.recall)},
      {"f1", format_ratio(r.f1)},
  };
  return report_detail::render(fields, format, "Mispronunciation detection report");
}

inline std::string emit_report(const PhonemeHistogram& h, ReportFormat format, std::size_t top = 0) {
  auto rows = h.rows();
  if (top > 0 && rows.size() > top) rows.resize(top);
  std::ostringstream os;
  if (format == ReportFormat::kv) {
    os << "total = " << h.total() << '\n';
    os << "symbols = " << h.counts().size() << '\n';
    for (const auto& row : rows) {
      os << "count." << row.symbol << " = " << row.count << '\n';
      os << "frequency." << row.symbol << " = " << format_ratio(row.frequency) << '\n';
    }
    return os.str();
  }
  os << report_detail::pad("symbol", 8) << report_detail::pad("count", 12) << "frequency\n";
  for (const auto& row : rows) {
    os << report_detail::pad(row.symbol, 8) << report_detail::pad(std::to_string(row.count), 12)
       << format_ratio(row.frequency) << '\n';
  }
  os << report_detail::pad("total", 8) << h.total() << '\n';
  return os.str();
}

inline std::string emit_report(const DivergenceReport& d, ReportFormat format, std::size_t top = 0) {
  auto rows = d.rows;
  if (top > 0 && rows.size() > top) rows.resize(top);
  std::ostringstream os;
  if (format == ReportFormat::kv) {
    os << "total_variation = " << format_ratio(d.total_variation) << '\n';
    for (const auto& row : rows) {
      os << "delta." << row.symbol << " = " << format_ratio(row.delta) << '\n';
    }
    return os.str();
  }
  os << report_detail::pad("symbol", 8) << report_detail::pad("freq_a", 10) << report_detail::pad("freq_b", 10)
     << "delta\n";
  for (const auto& row : rows) {
    os << report_detail::pad(row.symbol, 8) << report_detail::pad(format_ratio(row.frequency_a), 10)
       << report_detail::pad(format_ratio(row.frequency_b), 10) << format_ratio(row.delta) << '\n';
  }
  os << "total variation distance: " << format_ratio(d.total_variation) << '\n';
  return os.str();
}

}  // namespace mddkit
