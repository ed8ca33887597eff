#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mddkit/alignment.hpp"
#include "mddkit/error.hpp"
#include "mddkit/inventory.hpp"

namespace mddkit {

// Per canonical phoneme: was it pronounced correctly (annotation) and did the
// system agree (hypothesis)?
enum class PositionLabel {
  true_accept,              // TA: correct, accepted
  false_reject,             // FR: correct, flagged
  true_reject_diagnosed,    // TR with the system's phoneme equal to the one produced (CD)
  true_reject_misdiagnosed, // TR with a different phoneme
  false_accept,             // FA: mispronounced, missed
};

inline const char* to_string(PositionLabel l) {
  switch (l) {
    case PositionLabel::true_accept: return "TA";
    case PositionLabel::false_reject: return "FR";
    case PositionLabel::true_reject_diagnosed: return "TR_CD";
    case PositionLabel::true_reject_misdiagnosed: return "TR_DE";
    case PositionLabel::false_accept: return "FA";
  }
  return "?";
}

namespace scorer_detail {

// For each canonical position, the aligned symbol of the other sequence, or
// nullptr when the alignment deletes it. Also counts insertions.
inline std::vector<const PhonemeSymbol*> project(const AlignmentPath& path, const PhonemeSequence& other,
                                                 std::size_t canonical_size, std::size_t* insertions) {
  std::vector<const PhonemeSymbol*> out(canonical_size, nullptr);
  for (const auto& step : path.steps) {
    switch (step.kind) {
      case EditKind::match:
      case EditKind::substitute:
        out[step.ref_index] = &other[step.hyp_index];
        break;
      case EditKind::deletion:
        break;
      case EditKind::insertion:
        if (insertions) ++*insertions;
        break;
    }
  }
  return out;
}

inline bool same(const PhonemeSymbol* a, const PhonemeSymbol* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return *a == *b;
}

}  // namespace scorer_detail

struct PositionClassification {
  std::vector<PositionLabel> labels;
  std::size_t annotated_insertions = 0;  // extra phonemes with no canonical position
  std::size_t hypothesis_insertions = 0;
};

/// Labels every canonical position using two pairwise alignments pivoted on
/// the canonical sequence. Deleted positions compare as a gap symbol, so a
/// deletion the system also reports is a diagnosed true rejection.
inline PositionClassification classify_positions_detailed(const PhonemeSequence& canonical,
                                                          const PhonemeSequence& annotated,
                                                          const PhonemeSequence& hypothesis) {
  using scorer_detail::project;
  using scorer_detail::same;
  PositionClassification out;
  const auto ann = project(align(canonical, annotated), annotated, canonical.size(), &out.annotated_insertions);
  const auto hyp = project(align(canonical, hypothesis), hypothesis, canonical.size(), &out.hypothesis_insertions);
  out.labels.reserve(canonical.size());
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    const PhonemeSymbol* c = &canonical[i];
    const bool pronounced_ok = same(ann[i], c);
    const bool accepted = same(hyp[i], c);
    if (pronounced_ok) {
      out.labels.push_back(accepted ? PositionLabel::true_accept : PositionLabel::false_reject);
    } else if (accepted) {
      out.labels.push_back(PositionLabel::false_accept);
    } else {
      out.labels.push_back(same(hyp[i], ann[i]) ? PositionLabel::true_reject_diagnosed
                                                : PositionLabel::true_reject_misdiagnosed);
    }
  }
  return out;
}

inline std::vector<PositionLabel> classify_positions(const PhonemeSequence& canonical,
                                                     const PhonemeSequence& annotated,
                                                     const PhonemeSequence& hypothesis) {
  return classify_positions_detailed(canonical, annotated, hypothesis).labels;
}

/// PER = edit distance / |ref|. Exceeds 1 when insertions dominate.
inline double compute_per(const PhonemeSequence& ref, const PhonemeSequence& hyp) {
  if (ref.empty()) throw UndefinedMetric("phoneme error rate is undefined for an empty reference");
  return static_cast<double>(edit_distance(ref, hyp)) / static_cast<double>(ref.size());
}

/// Harmonic mean; nullopt when both inputs are zero.
inline std::optional<double> compute_f1(double precision, double recall) {
  if (!(precision >= 0.0 && precision <= 1.0) || !(recall >= 0.0 && recall <= 1.0)) {
    throw UndefinedMetric("precision and recall must lie in [0, 1]");
  }
  if (precision + recall == 0.0) return std::nullopt;
  return 2.0 * precision * recall / (precision + recall);
}

// Which sequence the system output is compared to for the Correct Rate.
enum class PerReference { annotated, canonical };

struct ScoreOptions {
  PerReference per_reference = PerReference::annotated;
};

/// Integer tallies; merging is plain addition so totals do not depend on
/// utterance order or on how work was split.
struct ScoreCounts {
  std::uint64_t n_utterances = 0;
  std::uint64_t n_canonical_positions = 0;
  std::uint64_t ta = 0;
  std::uint64_t fr = 0;
  std::uint64_t tr = 0;
  std::uint64_t fa = 0;
  std::uint64_t cd = 0;
  std::uint64_t annotated_insertions = 0;
  std::uint64_t hypothesis_insertions = 0;
  std::uint64_t per_errors = 0;     // summed edit distance
  std::uint64_t per_ref_length = 0; // summed reference length

  ScoreCounts& operator+=(const ScoreCounts& o) {
    n_utterances += o.n_utterances;
    n_canonical_positions += o.n_canonical_positions;
    ta += o.ta;
    fr += o.fr;
    tr += o.tr;
    fa += o.fa;
    cd += o.cd;
    annotated_insertions += o.annotated_insertions;
    hypothesis_insertions += o.hypothesis_insertions;
    per_errors += o.per_errors;
    per_ref_length += o.per_ref_length;
    return *this;
  }
  friend bool operator==(const ScoreCounts&, const ScoreCounts&) = default;
};

/// Counts plus every derived rate. A rate whose denominator is zero is
/// nullopt ("undefined"), never 0.
struct ScoreReport {
  ScoreCounts counts;
  std::optional<double> per;
  std::optional<double> correct_rate;
  std::optional<double> accuracy;
  std::optional<double> ta_rate;
  std::optional<double> fr_rate;
  std::optional<double> tr_rate;
  std::optional<double> fa_rate;
  std::optional<double> cd_rate;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

struct LabeledUtterance {
  PhonemeSequence canonical;
  PhonemeSequence annotated;
  PhonemeSequence hypothesis;
};

inline ScoreCounts score_utterance(const LabeledUtterance& u, const ScoreOptions& opts = {}) {
  if (u.canonical.empty()) throw UndefinedMetric("utterance with an empty canonical sequence");
  ScoreCounts c;
  const auto cls = classify_positions_detailed(u.canonical, u.annotated, u.hypothesis);
  c.n_utterances = 1;
  c.n_canonical_positions = u.canonical.size();
  for (PositionLabel l : cls.labels) {
    switch (l) {
      case PositionLabel::true_accept: ++c.ta; break;
      case PositionLabel::false_reject: ++c.fr; break;
      case PositionLabel::true_reject_diagnosed: ++c.tr; ++c.cd; break;
      case PositionLabel::true_reject_misdiagnosed: ++c.tr; break;
      case PositionLabel::false_accept: ++c.fa; break;
    }
  }
  c.annotated_insertions = cls.annotated_insertions;
  c.hypothesis_insertions = cls.hypothesis_insertions;
  const PhonemeSequence& ref = opts.per_reference == PerReference::annotated ? u.annotated : u.canonical;
  c.per_errors = edit_distance(ref, u.hypothesis);
  c.per_ref_length = ref.size();
  return c;
}

inline ScoreReport finalize_report(const ScoreCounts& c) {
  auto ratio = [](std::uint64_t num, std::uint64_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  ScoreReport r;
  r.counts = c;
  r.per = ratio(c.per_errors, c.per_ref_length);
  if (r.per) r.correct_rate = 1.0 - *r.per;
  r.accuracy = ratio(c.ta + c.tr, c.n_canonical_positions);
  r.ta_rate = ratio(c.ta, c.ta + c.fr);
  r.fr_rate = ratio(c.fr, c.ta + c.fr);
  r.tr_rate = ratio(c.tr, c.tr + c.fa);
  r.fa_rate = ratio(c.fa, c.tr + c.fa);
  r.cd_rate = ratio(c.cd, c.tr);
  r.precision = ratio(c.tr, c.tr + c.fr);
  r.recall = r.tr_rate;
  if (r.precision && r.recall) r.f1 = compute_f1(*r.precision, *r.recall);
  return r;
}

/// Pools counts over all utterances (micro-averaging) and derives the rates.
inline ScoreReport compute_report(std::span<const LabeledUtterance> utterances, const ScoreOptions& opts = {}) {
  if (utterances.empty()) throw UndefinedMetric("cannot score an empty set of utterances");
  ScoreCounts total;
  for (const auto& u : utterances) total += score_utterance(u, opts);
  return finalize_report(total);
}

inline ScoreReport compute_report(const std::vector<LabeledUtterance>& utterances, const ScoreOptions& opts = {}) {
  return compute_report(std::span<const LabeledUtterance>(utterances), opts);
}

}  // namespace mddkit
