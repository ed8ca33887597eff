#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mddkit/arabic.hpp"
#include "mddkit/rules.hpp"
#include "mddkit/utf8.hpp"

namespace mddkit {

struct StrippedChar {
  std::size_t offset;  // code point offset in the input
  char32_t code_point;
};

/// What normalize_orthography changed. Nothing here is fatal.
struct OrthographyReport {
  std::vector<StrippedChar> stripped;
  std::size_t presentation_forms = 0;  // contextual forms / ligatures decomposed
  std::size_t hamza_composed = 0;      // alef/waw/yeh + combining hamza or madda
  std::size_t small_marks = 0;         // Quranic sukun rewritten as U+0652
  std::size_t tanwin_moved = 0;        // fathatan moved from a trailing alef to its consonant
  std::size_t wasla_rewritten = 0;

  bool lossless() const { return stripped.empty(); }
};

namespace detail {

inline bool is_text_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == 0x00A0 || c == 0x200F || c == 0x200E ||
         c == 0x2009 || c == 0x202F;
}

inline char32_t compose_hamza(char32_t base, char32_t mark) {
  using namespace arabic;
  if (base == kAlef && mark == kMaddaAbove) return kAlefMadda;
  if (base == kAlef && mark == kHamzaAbove) return kAlefHamzaAbove;
  if (base == kAlef && mark == kHamzaBelow) return kAlefHamzaBelow;
  if (base == kWaw && mark == kHamzaAbove) return kWawHamza;
  if ((base == kYeh || base == kAlefMaksura) && mark == kHamzaAbove) return kYehHamza;
  return 0;
}

}  // namespace detail

/// Brings text into the form the phonetiser expects: presentation forms
/// decomposed, combining hamza/madda composed onto their carriers, Quranic
/// sukun unified, whitespace runs collapsed to one space, and every
/// character outside the allowed set removed (and listed in the report).
inline std::u32string normalize_orthography(std::u32string_view text, const RuleSet& rules = default_rules(),
                                            OrthographyReport* report = nullptr) {
  using namespace arabic;
  OrthographyReport local;
  OrthographyReport& rep = report ? *report : local;

  std::u32string out;
  out.reserve(text.size());
  auto push = [&](char32_t c) {
    if (c == U' ') {
      if (!out.empty() && out.back() != U' ') out.push_back(U' ');
      return;
    }
    if (!out.empty()) {
      if (const char32_t composed = detail::compose_hamza(out.back(), c)) {
        out.back() = composed;
        ++rep.hamza_composed;
        return;
      }
    }
    if (c == kFathatan && out.size() >= 2 && (out.back() == kAlef || out.back() == kAlefMaksura)) {
      // consonant [marks without a vowel] + alef + fathatan
      std::size_t k = out.size() - 1;
      bool has_vowel = false;
      while (k > 0 && is_combining_mark(out[k - 1])) {
        const char32_t m = out[k - 1];
        if (is_short_vowel(m) || is_tanwin(m) || m == kSukun) has_vowel = true;
        --k;
      }
      if (k > 0 && is_letter(out[k - 1]) && !has_vowel) {
        out.insert(out.end() - 1, kFathatan);
        ++rep.tanwin_moved;
        return;
      }
    }
    out.push_back(c);
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char32_t c = text[i];
    if (const auto* form = find_presentation_form(c)) {
      ++rep.presentation_forms;
      for (char32_t d : form->decomposition) {
        if (d != 0) push(d);
      }
      continue;
    }
    if (detail::is_text_space(c)) {
      push(U' ');
      continue;
    }
    if (c == kSmallHighDotlessHeadOfKhah) {
      ++rep.small_marks;
      push(kSukun);
      continue;
    }
    if (c == kAlefWasla && rules.flags.wasl_as_alef) {
      ++rep.wasla_rewritten;
      push(kAlef);
      continue;
    }
    const bool allowed = is_letter_or_wasla(c) || is_haraka(c) || c == kSuperscriptAlef || is_quranic_mark(c) ||
                         is_quranic_sign(c) || rules.punctuation.contains(c);
    if (!allowed) {
      rep.stripped.push_back({i, c});
      continue;
    }
    push(c);
  }
  while (!out.empty() && out.back() == U' ') out.pop_back();
  if (!out.empty() && out.front() == U' ') out.erase(out.begin());
  return out;
}

inline std::string normalize_orthography(std::string_view utf8_text, const RuleSet& rules = default_rules(),
                                         OrthographyReport* report = nullptr) {
  return utf8::encode(normalize_orthography(std::u32string_view(utf8::decode(utf8_text)), rules, report));
}

}  // namespace mddkit
