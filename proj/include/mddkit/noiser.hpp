#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mddkit/arabic.hpp"
#include "mddkit/detail/text.hpp"
#include "mddkit/error.hpp"
#include "mddkit/inventory.hpp"
#include "mddkit/orthography.hpp"
#include "mddkit/phonetiser.hpp"
#include "mddkit/rng.hpp"
#include "mddkit/utf8.hpp"

namespace mddkit {

enum class NoiseType { deletion = 0, substitution = 1, insertion = 2 };

inline const char* to_string(NoiseType t) {
  switch (t) {
    case NoiseType::deletion: return "delete";
    case NoiseType::substitution: return "substitute";
    case NoiseType::insertion: return "insert";
  }
  return "?";
}

// What to do when a substitution is drawn for a character the map lacks.
enum class MissingSubstitute {
  redraw,  // re-draw the type among delete/insert with their weights
  skip,    // copy the character, no event counted
};

namespace detail {

inline bool is_noise_char(char32_t c) {
  return arabic::is_letter_or_wasla(c) || (c >= 0x064B && c <= 0x0652) || c == arabic::kSuperscriptAlef;
}

}  // namespace detail

/// Character confusion table: character -> candidate substitutes.
class NoiseMap {
 public:
  NoiseMap() = default;
  explicit NoiseMap(std::map<char32_t, std::u32string> entries) : entries_(std::move(entries)) {
    for (const auto& [ch, subs] : entries_) {
      if (!detail::is_noise_char(ch)) throw ConfigError("noise map key outside the Arabic set");
      if (subs.empty()) throw ConfigError("noise map entry with no substitutes");
      for (char32_t s : subs) {
        if (s == ch) throw ConfigError("noise map entry substitutes a character by itself");
        if (!detail::is_noise_char(s)) throw ConfigError("noise map substitute outside the Arabic set");
      }
    }
  }

  const std::u32string* substitutes(char32_t ch) const {
    auto it = entries_.find(ch);
    return it == entries_.end() ? nullptr : &it->second;
  }
  const std::map<char32_t, std::u32string>& entries() const noexcept { return entries_; }

 private:
  std::map<char32_t, std::u32string> entries_;
};

/// Parses `char<TAB>sub1,sub2,...` lines; `#` starts a comment line.
inline NoiseMap load_noise_map(std::string_view document) {
  std::map<char32_t, std::u32string> entries;
  const auto doc_lines = detail::lines(document);
  for (std::size_t n = 0; n < doc_lines.size(); ++n) {
    const std::string where = "noise map line " + std::to_string(n + 1) + ": ";
    const std::string_view line = doc_lines[n];
    if (detail::trim(line).empty() || detail::trim(line).front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ConfigError(where + "expected char<TAB>substitutes");
    try {
      const auto key = utf8::decode(line.substr(0, tab));
      if (key.size() != 1) throw ConfigError(where + "key must be a single character");
      std::u32string subs;
      for (auto field : detail::split(line.substr(tab + 1), ',')) {
        const auto cps = utf8::decode(field);
        if (cps.size() != 1) throw ConfigError(where + "substitute must be a single character");
        subs.push_back(cps[0]);
      }
      if (!entries.emplace(key[0], subs).second) throw ConfigError(where + "duplicate key");
    } catch (const MalformedInput& e) {
      throw ConfigError(where + e.what());
    }
  }
  return NoiseMap(std::move(entries));
}

inline NoiseMap load_noise_map_file(const std::string& path) { return load_noise_map(detail::read_file(path)); }

/// Confusions grounded in Arabic phonology: emphatic/plain pairs, the
/// pharyngeal-laryngeal-velar fricatives, kaf/qaf, hamza seats and the
/// short vowels.
inline NoiseMap build_default_noise_map() {
  return NoiseMap({
      {U'س', U"ص"},   {U'ص', U"س"},   {U'ت', U"ط"},  {U'ط', U"ت"},  {U'د', U"ض"},
      {U'ض', U"د"},   {U'ذ', U"ظز"},  {U'ظ', U"ذ"},  {U'ز', U"ذ"},  {U'ح', U"هخ"},
      {U'ه', U"حخ"},  {U'خ', U"حهغ"}, {U'غ', U"خ"},  {U'ك', U"ق"},  {U'ق', U"ك"},
      {U'ث', U"سذ"},  {U'ع', U"ء"},   {U'أ', U"إء"}, {U'إ', U"أء"}, {U'ء', U"أإ"},
      {U'ؤ', U"ءئ"},  {U'ئ', U"ءؤ"},
      {arabic::kFatha, {arabic::kDamma, arabic::kKasra}},
      {arabic::kDamma, {arabic::kFatha, arabic::kKasra}},
      {arabic::kKasra, {arabic::kFatha, arabic::kDamma}},
  });
}

inline std::u32string default_noise_alphabet() {
  std::u32string out;
  for (char32_t c = 0x0621; c <= 0x064A; ++c) {
    if (arabic::is_letter(c)) out.push_back(c);
  }
  return out;
}

/// Parameters of the noising procedure. The defaults are guesses; tune them
/// to the error rate of the data at hand.
struct NoiseConfig {
  double p_noise = 0.05;
  int max_noise = 3;
  std::u32string alphabet = default_noise_alphabet();
  std::array<double, 3> type_weights{1.0, 1.0, 1.0};  // delete, substitute, insert
  std::uint64_t seed = 0;
  MissingSubstitute missing_substitute = MissingSubstitute::redraw;
  bool letters_only = false;

  void validate() const {
    if (!(p_noise >= 0.0 && p_noise <= 1.0)) throw ConfigError("p_noise must lie in [0, 1]");
    if (max_noise < 1) throw ConfigError("max_noise must be at least 1");
    double total = 0;
    for (double w : type_weights) {
      if (!(w >= 0)) throw ConfigError("noise type weights must be non-negative");
      total += w;
    }
    if (!(total > 0)) throw ConfigError("noise type weights are all zero");
    if (type_weights[2] > 0 && alphabet.empty()) throw ConfigError("insert weight set but alphabet is empty");
  }
};

struct NoiseEvent {
  NoiseType type;
  std::size_t input_index;
};

struct NoisyText {
  std::u32string text;
  std::size_t count = 0;
  std::vector<NoiseEvent> events;
};

/// One pass of the noising procedure over `text`.
///
/// Draw order, fixed for reproducibility: the target event count
/// uniform_int(1, max_noise) first; then per eligible character while the
/// count is below target, one uniform01 against p_noise, and on a hit one
/// weighted type draw followed by one uniform_index for the substitute or the
/// inserted character. Once the target is reached the rest is copied.
inline NoisyText generate_noisy_text(std::u32string_view text, const NoiseMap& map, const NoiseConfig& cfg,
                                     Rng& rng) {
  if (text.empty()) throw MalformedInput("cannot noise an empty text", 0);
  cfg.validate();
  NoisyText out;
  out.text.reserve(text.size() + static_cast<std::size_t>(cfg.max_noise));
  const auto target = static_cast<std::size_t>(rng.uniform_int(1, cfg.max_noise));
  const std::array<double, 3> no_substitute{cfg.type_weights[0], 0.0, cfg.type_weights[2]};
  const bool can_redraw = no_substitute[0] > 0 || no_substitute[2] > 0;

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t ch = text[i];
    const bool eligible = !cfg.letters_only || arabic::is_letter_or_wasla(ch);
    if (out.count >= target || !eligible || !(rng.uniform01() < cfg.p_noise)) {
      out.text.push_back(ch);
      continue;
    }
    auto type = static_cast<NoiseType>(rng.weighted_index(cfg.type_weights));
    const std::u32string* subs = map.substitutes(ch);
    if (type == NoiseType::substitution && subs == nullptr) {
      if (cfg.missing_substitute == MissingSubstitute::skip || !can_redraw) {
        out.text.push_back(ch);
        continue;
      }
      type = static_cast<NoiseType>(rng.weighted_index(no_substitute));
    }
    switch (type) {
      case NoiseType::deletion:
        break;
      case NoiseType::substitution:
        out.text.push_back((*subs)[rng.uniform_index(subs->size())]);
        break;
      case NoiseType::insertion:
        out.text.push_back(cfg.alphabet[rng.uniform_index(cfg.alphabet.size())]);
        out.text.push_back(ch);
        break;
    }
    ++out.count;
    out.events.push_back({type, i});
  }
  return out;
}

struct SyntheticRecord {
  std::string id;
  std::string original_text;  // after orthography normalization
  std::string noisy_text;
  PhonemeSequence canonical_phonemes;
  PhonemeSequence annotated_phonemes;
  std::size_t applied_noise_count = 0;
};

struct SynthOptions {
  std::string id_prefix = "syn";
  // Noise often leaves a consonant without its mark (an inserted letter, a
  // deleted vowel), so noisy text is phonetised leniently by default.
  Strictness noisy_mode = Strictness::lenient;
};

struct SynthOutcome {
  std::optional<SyntheticRecord> record;
  std::string skip_reason;
};

inline std::string synthetic_id(const SynthOptions& opts, std::size_t index) {
  std::string n = std::to_string(index + 1);
  if (n.size() < 6) n.insert(0, 6 - n.size(), '0');
  return opts.id_prefix + "-" + n;
}

/// Builds the record for input line `index`. The random stream depends only
/// on (cfg.seed, index), so records do not depend on processing order.
inline SynthOutcome make_synthetic_record(std::size_t index, std::string_view line, const NoiseMap& map,
                                          const NoiseConfig& cfg, const RuleSet& rules,
                                          const SynthOptions& opts = {}) {
  SynthOutcome result;
  std::u32string text;
  try {
    text = normalize_orthography(std::u32string_view(utf8::decode(line)), rules);
  } catch (const MalformedInput& e) {
    result.skip_reason = std::string("invalid UTF-8: ") + e.what();
    return result;
  }
  if (text.empty()) {
    result.skip_reason = "empty line";
    return result;
  }
  if (const auto missing = validate_diacritization(text, rules); !missing.empty()) {
    result.skip_reason = "missing diacritics on " + std::to_string(missing.size()) + " letter(s), first at cluster " +
                         std::to_string(missing.front());
    return result;
  }
  SyntheticRecord rec;
  rec.id = synthetic_id(opts, index);
  try {
    rec.canonical_phonemes = phonetise(text, rules, Strictness::strict);
  } catch (const Error& e) {
    result.skip_reason = std::string("original not phonetisable: ") + e.what();
    return result;
  }
  Rng rng(derive_seed(cfg.seed, index));
  const NoisyText noisy = generate_noisy_text(text, map, cfg, rng);
  try {
    rec.annotated_phonemes = phonetise(noisy.text, rules, opts.noisy_mode);
  } catch (const Error& e) {
    result.skip_reason = std::string("noisy text not phonetisable: ") + e.what();
    return result;
  }
  rec.original_text = utf8::encode(text);
  rec.noisy_text = utf8::encode(noisy.text);
  rec.applied_noise_count = noisy.count;
  result.record = std::move(rec);
  return result;
}

struct SkippedLine {
  std::size_t index;
  std::string reason;
};

struct SyntheticCorpus {
  std::vector<SyntheticRecord> records;
  std::vector<SkippedLine> skipped;
};

inline SyntheticCorpus make_synthetic_corpus(std::span<const std::string> lines, const NoiseMap& map,
                                             const NoiseConfig& cfg, const RuleSet& rules,
                                             const SynthOptions& opts = {}) {
  cfg.validate();
  SyntheticCorpus corpus;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto outcome = make_synthetic_record(i, lines[i], map, cfg, rules, opts);
    if (outcome.record) corpus.records.push_back(std::move(*outcome.record));
    else corpus.skipped.push_back({i, std::move(outcome.skip_reason)});
  }
  return corpus;
}

}  // namespace mddkit
