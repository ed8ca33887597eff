#pragma once

#include <cstddef>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mddkit/arabic.hpp"
#include "mddkit/error.hpp"
#include "mddkit/inventory.hpp"
#include "mddkit/rules.hpp"
#include "mddkit/utf8.hpp"

namespace mddkit {

// Rule-based grapheme-to-phoneme conversion for fully diacritized Arabic.
//
// The text is cut into clusters (a base character plus its combining marks)
// and each cluster gets a role. Words are processed independently, so the
// output of "w1 w2" is the concatenation of the outputs of w1 and w2 unless
// wasl_initial_glottal is set.
namespace phonetiser_detail {

enum Mark : std::uint32_t {
  kMarkFatha = 1u << 0,
  kMarkDamma = 1u << 1,
  kMarkKasra = 1u << 2,
  kMarkSukun = 1u << 3,
  kMarkShadda = 1u << 4,
  kMarkFathatan = 1u << 5,
  kMarkDammatan = 1u << 6,
  kMarkKasratan = 1u << 7,
  kMarkDaggerAlef = 1u << 8,
  kMarkOther = 1u << 9,
};

inline constexpr std::uint32_t kVowelMarks = kMarkFatha | kMarkDamma | kMarkKasra;
inline constexpr std::uint32_t kTanwinMarks = kMarkFathatan | kMarkDammatan | kMarkKasratan;
// Any of these makes a consonant count as diacritized.
inline constexpr std::uint32_t kDiacritizingMarks =
    kVowelMarks | kTanwinMarks | kMarkSukun | kMarkShadda | kMarkDaggerAlef;

inline std::uint32_t mark_bit(char32_t c) {
  using namespace arabic;
  switch (c) {
    case kFatha: return kMarkFatha;
    case kDamma: return kMarkDamma;
    case kKasra: return kMarkKasra;
    case kSukun:
    case kSmallHighDotlessHeadOfKhah: return kMarkSukun;
    case kShadda: return kMarkShadda;
    case kFathatan: return kMarkFathatan;
    case kDammatan: return kMarkDammatan;
    case kKasratan: return kMarkKasratan;
    case kSuperscriptAlef: return kMarkDaggerAlef;
    default: return kMarkOther;
  }
}

struct Cluster {
  char32_t base = 0;  // 0: marks with no base character
  std::size_t offset = 0;
  std::uint32_t marks = 0;

  bool has(std::uint32_t m) const { return (marks & m) != 0; }
};

enum class Role {
  consonant,
  long_vowel,    // alef/waw/yeh/maksura lengthening the previous short vowel
  silent,        // alef or maksura with no sound of its own
  wasl,          // hamzat wasl, or a bare word-initial alef
  madda,         // alef madda not preceded by fatha
  dagger_alef,   // alef maksura carrying only a superscript alef
  article_lam,   // bare lam of the definite article
  small_letter,  // spacing small waw/yeh lengthening the previous vowel
  boundary,
  orphan,
  unsupported,
};

inline bool is_boundary(char32_t c, const RuleSet& rules) {
  using namespace arabic;
  if (c == U' ' || rules.punctuation.contains(c)) return true;
  return is_quranic_sign(c) && c != kSmallWaw && c != kSmallYeh;
}

inline std::vector<Cluster> segment(std::u32string_view text, const RuleSet& rules) {
  std::vector<Cluster> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t c = text[i];
    if (arabic::is_combining_mark(c) || c == arabic::kSmallHighDotlessHeadOfKhah) {
      const bool attach = !out.empty() && (out.back().base == 0 || !is_boundary(out.back().base, rules));
      if (!attach) out.push_back(Cluster{0, i, 0});
      out.back().marks |= mark_bit(c);
      continue;
    }
    out.push_back(Cluster{c, i, 0});
  }
  return out;
}

inline bool is_prefix_letter(char32_t c) {
  using namespace arabic;
  return c == kBeh || c == kWaw || c == kFeh || c == kKaf || c == kLam;
}

struct Analysis {
  std::vector<Cluster> clusters;
  std::vector<Role> roles;
  std::vector<std::size_t> word_start;  // index of the first cluster of each cluster's word
};

inline Analysis analyse(std::u32string_view text, const RuleSet& rules) {
  using namespace arabic;
  Analysis a;
  a.clusters = segment(text, rules);
  const auto& cl = a.clusters;
  a.roles.resize(cl.size(), Role::boundary);
  a.word_start.resize(cl.size(), 0);

  std::size_t start = 0;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const Cluster& c = cl[i];
    if (c.base != 0 && is_boundary(c.base, rules)) {
      a.roles[i] = Role::boundary;
      start = i + 1;
      continue;
    }
    a.word_start[i] = start;
    const std::size_t pos = i - start;
    const Cluster* prev = pos > 0 ? &cl[i - 1] : nullptr;
    const bool prev_consonant = prev && a.roles[i - 1] == Role::consonant;
    const bool prev_fatha = prev_consonant && prev->has(kMarkFatha) && !prev->has(kMarkDaggerAlef);

    Role role = Role::unsupported;
    if (c.base == 0) {
      // a stand-alone pause mark between words is an annotation, not a stray vowel
      role = (c.marks & ~kMarkOther) == 0 ? Role::boundary : Role::orphan;
    } else if (c.base == kAlefWasla) {
      role = Role::wasl;
    } else if (c.base == kAlef) {
      if (c.has(kVowelMarks | kMarkDammatan | kMarkKasratan)) role = Role::consonant;  // implied hamza
      else if (pos == 0) role = Role::wasl;
      else if (prev_fatha) role = Role::long_vowel;
      else role = Role::silent;
    } else if (c.base == kAlefMadda) {
      role = prev_fatha ? Role::long_vowel : Role::madda;
    } else if (c.base == kAlefMaksura) {
      if (prev_fatha) role = Role::long_vowel;
      else if (c.has(kMarkDaggerAlef)) role = Role::dagger_alef;
      else role = Role::silent;
    } else if ((c.base == kWaw || c.base == kYeh) && !c.has(kVowelMarks | kTanwinMarks | kMarkShadda) &&
               prev_consonant && prev->has(c.base == kWaw ? kMarkDamma : kMarkKasra)) {
      role = Role::long_vowel;
    } else if (c.base == kLam && c.marks == 0 && prev &&
               (prev->base == kAlef || prev->base == kAlefWasla) && !prev->has(kDiacritizingMarks) &&
               (pos == 1 || (pos == 2 && is_prefix_letter(cl[start].base) && cl[start].has(kVowelMarks)))) {
      role = Role::article_lam;
    } else if (c.base == kSmallWaw || c.base == kSmallYeh) {
      role = Role::small_letter;
    } else if (is_letter(c.base) && rules.consonants.contains(c.base)) {
      role = Role::consonant;
    }
    a.roles[i] = role;
  }
  return a;
}

/// Uthmani spelling leaves a letter bare when it merges into a following
/// geminate, as in "مِن رَّبِّهِمْ". Such a letter is read as unvowelled.
inline bool assimilated(const Analysis& a, std::size_t i) {
  std::size_t j = i + 1;
  while (j < a.clusters.size() && a.roles[j] == Role::boundary) {
    const char32_t b = a.clusters[j].base;
    if (b != 0 && b != U' ') return false;
    ++j;
  }
  return j < a.clusters.size() && a.roles[j] == Role::consonant && a.clusters[j].has(kMarkShadda);
}

inline bool missing_diacritic(const Analysis& a, std::size_t i) {
  return a.roles[i] == Role::consonant && !a.clusters[i].has(kDiacritizingMarks) && !assimilated(a, i);
}

inline std::string colour(std::string vowel, bool emphatic) {
  if (emphatic) {
    for (char& ch : vowel) ch = static_cast<char>(ch - 'a' + 'A');
  }
  return vowel;
}

inline std::string lengthen(const std::string& short_vowel) { return short_vowel + short_vowel; }

}  // namespace phonetiser_detail

/// Cluster indices of consonants carrying no vowel, sukun, shadda, tanwin or
/// superscript alef. Vowel-carrier letters, the bare article lam and a bare
/// letter before a geminate are never reported. An empty result means the text is fully diacritized.
inline std::vector<std::size_t> validate_diacritization(std::u32string_view text,
                                                        const RuleSet& rules = default_rules()) {
  using namespace phonetiser_detail;
  const Analysis a = analyse(text, rules);
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    if (missing_diacritic(a, i)) missing.push_back(i);
  }
  return missing;
}

inline std::vector<std::size_t> validate_diacritization(std::string_view utf8_text,
                                                        const RuleSet& rules = default_rules()) {
  return validate_diacritization(std::u32string_view(utf8::decode(utf8_text)), rules);
}

/// Converts diacritized text to phonemes. Strict mode throws MissingDiacritic
/// for a bare consonant and MalformedInput for stray marks or characters the
/// rules do not cover; lenient mode assumes sukun and skips the rest.
inline PhonemeSequence phonetise(std::u32string_view text, const RuleSet& rules = default_rules(),
                                 Strictness mode = Strictness::strict) {
  using namespace phonetiser_detail;
  using namespace arabic;
  const Analysis a = analyse(text, rules);
  const auto& cl = a.clusters;
  PhonemeSequence out;
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t prev_vowel = npos;  // output index of the short vowel emitted by the previous cluster

  auto emit = [&](const std::string& sym) { out.emplace_back(sym); };
  auto lengthen_prev = [&](const char* quality) {
    if (prev_vowel == npos) return;
    const std::string& v = out[prev_vowel].str();
    if (v.size() != 1) return;
    if (quality && std::tolower(static_cast<unsigned char>(v[0])) != quality[0]) return;
    out[prev_vowel] = PhonemeSymbol(lengthen(v));
  };

  for (std::size_t i = 0; i < cl.size(); ++i) {
    const Cluster& c = cl[i];
    std::size_t vowel_here = npos;
    switch (a.roles[i]) {
      case Role::boundary:
        break;
      case Role::orphan:
        if (mode == Strictness::strict) throw MalformedInput("diacritic without a base letter", c.offset);
        break;
      case Role::unsupported:
        if (mode == Strictness::strict) {
          throw MalformedInput("character U+" + std::to_string(static_cast<std::uint32_t>(c.base)) +
                                   " has no phonetisation rule",
                               c.offset);
        }
        break;
      case Role::silent:
        break;
      case Role::long_vowel:
        lengthen_prev(nullptr);
        break;
      case Role::small_letter:
        lengthen_prev(c.base == kSmallWaw ? "u" : "i");
        break;
      case Role::madda:
        emit(rules.hamza_symbol());
        emit("aa");
        break;
      case Role::dagger_alef:
        emit("aa");
        break;
      case Role::article_lam: {
        const bool next_geminate = i + 1 < cl.size() && cl[i + 1].has(kMarkShadda);
        if (!(rules.flags.assimilate_article && next_geminate)) emit(rules.consonant(kLam));
        break;
      }
      case Role::wasl: {
        if (!rules.flags.wasl_initial_glottal || i != 0) break;
        emit(rules.hamza_symbol());
        // article (bare or sukun lam) takes a; otherwise the third letter's vowel decides
        std::string liaison = "i";
        if (i + 1 < cl.size() && cl[i + 1].base == kLam && !cl[i + 1].has(kVowelMarks | kMarkShadda)) {
          liaison = "a";
        } else if (i + 2 < cl.size() && cl[i + 2].has(kMarkDamma)) {
          liaison = "u";
        }
        emit(liaison);
        break;
      }
      case Role::consonant: {
        if (mode == Strictness::strict && missing_diacritic(a, i)) {
          throw MissingDiacritic(i, c.offset);
        }
        const bool voweled = c.has(kVowelMarks | kTanwinMarks | kMarkDaggerAlef);
        std::string sym;
        if (c.base == kAlef) sym = rules.hamza_symbol();
        else if (c.base == kTehMarbuta && !voweled) sym = rules.consonant(kHeh);
        else sym = rules.consonant(c.base);
        emit(c.has(kMarkShadda) ? sym + sym : sym);

        const bool emphatic = rules.is_emphatic(c.base);
        if (c.has(kMarkDaggerAlef)) {
          emit(colour("aa", emphatic));
        } else if (c.has(kMarkFatha)) {
          vowel_here = out.size();
          emit(colour("a", emphatic));
        } else if (c.has(kMarkDamma)) {
          vowel_here = out.size();
          emit(colour("u", emphatic));
        } else if (c.has(kMarkKasra)) {
          vowel_here = out.size();
          emit(colour("i", emphatic));
        } else if (c.has(kTanwinMarks)) {
          emit(colour(c.has(kMarkFathatan) ? "a" : c.has(kMarkDammatan) ? "u" : "i", emphatic));
          emit(rules.consonant(kNoon));
        }
        break;
      }
    }
    prev_vowel = vowel_here;
  }
  return out;
}

inline PhonemeSequence phonetise(std::string_view utf8_text, const RuleSet& rules = default_rules(),
                                 Strictness mode = Strictness::strict) {
  return phonetise(std::u32string_view(utf8::decode(utf8_text)), rules, mode);
}

}  // namespace mddkit
