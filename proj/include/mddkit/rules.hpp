#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mddkit/arabic.hpp"
#include "mddkit/detail/text.hpp"
#include "mddkit/error.hpp"
#include "mddkit/inventory.hpp"
#include "mddkit/utf8.hpp"

namespace mddkit {

struct RuleFlags {
  bool emphatic_qaf = false;          // ق colors the following vowel
  bool emphatic_ra = false;           // ر colors the following vowel
  bool assimilate_article = false;    // drop the bare article lam before a shadda'd letter
  bool wasl_initial_glottal = false;  // utterance-initial hamzat wasl -> "<" + liaison vowel
  bool wasl_as_alef = false;          // orthography: rewrite U+0671 as plain alef
};

/// Grapheme-to-phoneme configuration. Letters absent from consonants are the
/// vowel carriers (alef, alef madda, alef maksura) handled by fixed rules.
struct RuleSet {
  std::map<char32_t, std::string> consonants;
  std::set<char32_t> emphatics;
  std::set<char32_t> punctuation;
  RuleFlags flags;

  bool is_emphatic(char32_t letter) const {
    if (emphatics.contains(letter)) return true;
    if (flags.emphatic_qaf && letter == arabic::kQaf) return true;
    if (flags.emphatic_ra && letter == arabic::kReh) return true;
    return false;
  }

  const std::string& consonant(char32_t letter) const { return consonants.at(letter); }
  const std::string& hamza_symbol() const { return consonant(arabic::kHamza); }

  /// Every letter that must carry a consonant symbol.
  static std::vector<char32_t> required_letters() {
    std::vector<char32_t> out;
    for (char32_t c = 0x0621; c <= 0x064A; ++c) {
      if (!arabic::is_letter(c)) continue;
      if (c == arabic::kAlef || c == arabic::kAlefMadda || c == arabic::kAlefMaksura) continue;
      out.push_back(c);
    }
    return out;
  }

  void validate() const {
    for (char32_t c : required_letters()) {
      auto it = consonants.find(c);
      if (it == consonants.end()) {
        throw ConfigError("rule set has no consonant symbol for " + utf8::encode(std::u32string(1, c)));
      }
      try {
        PhonemeSymbol{it->second};
      } catch (const MalformedInput&) {
        throw ConfigError("invalid consonant symbol '" + it->second + "'");
      }
    }
    for (const auto& [letter, sym] : consonants) {
      if (!arabic::is_letter(letter) || letter == arabic::kAlef || letter == arabic::kAlefMadda ||
          letter == arabic::kAlefMaksura) {
        throw ConfigError("consonant rule for a non-consonant character U+" + std::to_string(letter));
      }
    }
    for (char32_t c : emphatics) {
      if (!consonants.contains(c)) throw ConfigError("emphatic character is not a mapped consonant");
    }
  }

  /// Every symbol the phonetiser can emit under these rules.
  std::set<std::string> output_symbols() const {
    std::set<std::string> out = {"a", "aa", "A", "AA", "i", "ii", "I", "II", "u", "uu", "U", "UU"};
    for (const auto& [letter, sym] : consonants) {
      out.insert(sym);
      out.insert(sym + sym);
    }
    return out;
  }

  /// Throws ConfigError naming the first emitted symbol outside the inventory.
  void check_inventory(const InventoryMap& inventory) const {
    for (const auto& sym : output_symbols()) {
      if (!inventory.is_canonical(sym)) {
        throw ConfigError("rule output symbol '" + sym + "' is not in the inventory");
      }
    }
  }
};

// Kept in sync with data/default_rules.txt.
inline constexpr std::string_view kDefaultRulesText = R"(# Arabic letter<TAB>phoneme symbol (Buckwalter-style)
[consonants]
ء	<
أ	<
ؤ	<
إ	<
ئ	<
ب	b
ة	t
ت	t
ث	v
ج	j
ح	H
خ	x
د	d
ذ	*
ر	r
ز	z
س	s
ش	$
ص	S
ض	D
ط	T
ظ	Z
ع	E
غ	g
ف	f
ق	q
ك	k
ل	l
م	m
ن	n
ه	h
و	w
ي	y

# letters whose vowels take the uppercase (pharyngealized) variant
[emphatics]
ص
ض
ط
ظ

[punctuation]
،
؛
؟
۔
.
,
!
?
:
;
«
»
(
)
-
"

[flags]
emphatic_qaf = false
emphatic_ra = false
assimilate_article = false
wasl_initial_glottal = false
wasl_as_alef = false
)";

namespace detail {

inline char32_t single_char(std::string_view field, const std::string& where) {
  const auto cps = utf8::decode(field);
  if (cps.size() != 1) throw ConfigError(where + "expected a single character, got '" + std::string(field) + "'");
  return cps[0];
}

inline bool parse_bool(std::string_view v, const std::string& where) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(where + "expected true or false, got '" + std::string(v) + "'");
}

}  // namespace detail

/// Parses a rules document on top of `base`. A [consonants] section overrides
/// individual letters; [emphatics] and [punctuation] replace the whole set.
inline RuleSet load_rules(std::string_view document, RuleSet base) {
  enum class Section { none, consonants, emphatics, punctuation, flags } section = Section::none;
  bool saw_emphatics = false;
  bool saw_punctuation = false;
  const auto doc_lines = detail::lines(document);
  for (std::size_t n = 0; n < doc_lines.size(); ++n) {
    const std::string where = "rules line " + std::to_string(n + 1) + ": ";
    const std::string_view raw = doc_lines[n];
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      if (line == "[consonants]") {
        section = Section::consonants;
      } else if (line == "[emphatics]") {
        section = Section::emphatics;
        if (!saw_emphatics) base.emphatics.clear();
        saw_emphatics = true;
      } else if (line == "[punctuation]") {
        section = Section::punctuation;
        if (!saw_punctuation) base.punctuation.clear();
        saw_punctuation = true;
      } else if (line == "[flags]") {
        section = Section::flags;
      } else {
        throw ConfigError(where + "unknown section " + std::string(line));
      }
      continue;
    }
    try {
      switch (section) {
        case Section::none:
          throw ConfigError(where + "entry outside of a section");
        case Section::consonants: {
          const auto tab = line.find('\t');
          if (tab == std::string_view::npos) throw ConfigError(where + "expected letter<TAB>symbol");
          const char32_t letter = detail::single_char(detail::trim(line.substr(0, tab)), where);
          base.consonants[letter] = std::string(detail::trim(line.substr(tab + 1)));
          break;
        }
        case Section::emphatics:
          base.emphatics.insert(detail::single_char(line, where));
          break;
        case Section::punctuation:
          base.punctuation.insert(detail::single_char(line, where));
          break;
        case Section::flags: {
          const auto eq = line.find('=');
          if (eq == std::string_view::npos) throw ConfigError(where + "expected name = value");
          const auto name = detail::trim(line.substr(0, eq));
          const bool value = detail::parse_bool(detail::trim(line.substr(eq + 1)), where);
          if (name == "emphatic_qaf") base.flags.emphatic_qaf = value;
          else if (name == "emphatic_ra") base.flags.emphatic_ra = value;
          else if (name == "assimilate_article") base.flags.assimilate_article = value;
          else if (name == "wasl_initial_glottal") base.flags.wasl_initial_glottal = value;
          else if (name == "wasl_as_alef") base.flags.wasl_as_alef = value;
          else throw ConfigError(where + "unknown flag '" + std::string(name) + "'");
          break;
        }
      }
    } catch (const MalformedInput& e) {
      throw ConfigError(where + e.what());
    }
  }
  base.validate();
  return base;
}

inline const RuleSet& default_rules() {
  static const RuleSet rules = load_rules(kDefaultRulesText, RuleSet{});
  return rules;
}

inline RuleSet load_rules(std::string_view document) { return load_rules(document, default_rules()); }

inline RuleSet load_rules_file(const std::string& path) { return load_rules(detail::read_file(path)); }

}  // namespace mddkit
