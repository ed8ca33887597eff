#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mddkit/error.hpp"
#include "mddkit/inventory.hpp"
#include "mddkit/manifest.hpp"

namespace mddkit {

struct HistogramRow {
  std::string symbol;
  std::uint64_t count;
  double frequency;
};

/// Exact symbol counts over a corpus.
class PhonemeHistogram {
 public:
  void add(const PhonemeSymbol& sym, std::uint64_t n = 1) {
    counts_[sym.str()] += n;
    total_ += n;
  }
  void add(const PhonemeSequence& seq) {
    for (const auto& s : seq) add(s);
  }

  PhonemeHistogram& operator+=(const PhonemeHistogram& o) {
    for (const auto& [sym, n] : o.counts_) counts_[sym] += n;
    total_ += o.total_;
    return *this;
  }

  std::uint64_t total() const noexcept { return total_; }
  const std::map<std::string, std::uint64_t>& counts() const noexcept { return counts_; }

  std::uint64_t count(const std::string& sym) const {
    auto it = counts_.find(sym);
    return it == counts_.end() ? 0 : it->second;
  }

  double frequency(const std::string& sym) const {
    return total_ == 0 ? 0.0 : static_cast<double>(count(sym)) / static_cast<double>(total_);
  }

  /// Descending count, ties broken by byte order of the symbol.
  std::vector<HistogramRow> rows() const {
    std::vector<HistogramRow> out;
    out.reserve(counts_.size());
    for (const auto& [sym, n] : counts_) out.push_back({sym, n, frequency(sym)});
    std::stable_sort(out.begin(), out.end(),
                     [](const HistogramRow& a, const HistogramRow& b) { return a.count > b.count; });
    return out;
  }

  friend bool operator==(const PhonemeHistogram&, const PhonemeHistogram&) = default;

 private:
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Histogram of one sequence field. Throws ManifestError (line 0) naming the
/// first record missing the field.
inline PhonemeHistogram phoneme_histogram(std::span<const UtteranceRecord> records, SequenceField field) {
  PhonemeHistogram h;
  for (const auto& r : records) {
    const PhonemeSequence* seq = field_of(r, field);
    if (!seq) throw ManifestError("record '" + r.id + "' has no " + to_string(field) + " field", 0);
    h.add(*seq);
  }
  return h;
}

inline PhonemeHistogram phoneme_histogram(const std::vector<UtteranceRecord>& records, SequenceField field) {
  return phoneme_histogram(std::span<const UtteranceRecord>(records), field);
}

struct DivergenceRow {
  std::string symbol;
  double frequency_a;
  double frequency_b;
  double delta;  // frequency_a - frequency_b
};

struct DivergenceReport {
  std::vector<DivergenceRow> rows;  // by |delta| descending, then symbol
  double total_variation = 0;       // half the L1 distance, in [0, 1]
};

inline DivergenceReport compare_distributions(const PhonemeHistogram& a, const PhonemeHistogram& b) {
  if (a.total() == 0 || b.total() == 0) throw UndefinedMetric("cannot compare an empty histogram");
  std::map<std::string, DivergenceRow> rows;
  for (const auto& [sym, n] : a.counts()) rows[sym] = {sym, a.frequency(sym), 0.0, 0.0};
  for (const auto& [sym, n] : b.counts()) {
    auto& row = rows[sym];
    row.symbol = sym;
    row.frequency_b = b.frequency(sym);
  }
  DivergenceReport out;
  double l1 = 0;
  for (auto& [sym, row] : rows) {
    row.delta = row.frequency_a - row.frequency_b;
    l1 += std::abs(row.delta);
    out.rows.push_back(row);
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const DivergenceRow& x, const DivergenceRow& y) {
    return std::abs(x.delta) > std::abs(y.delta);
  });
  out.total_variation = std::clamp(0.5 * l1, 0.0, 1.0);
  return out;
}

}  // namespace mddkit
