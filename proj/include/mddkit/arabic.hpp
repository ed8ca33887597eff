#pragma once

#include <algorithm>
#include <array>
#include <cstdint>

// Code points and character classes of the Arabic block used by the
// orthography normalizer, the phonetiser and the noiser.
namespace mddkit::arabic {

inline constexpr char32_t kHamza = 0x0621;
inline constexpr char32_t kAlefMadda = 0x0622;
inline constexpr char32_t kAlefHamzaAbove = 0x0623;
inline constexpr char32_t kWawHamza = 0x0624;
inline constexpr char32_t kAlefHamzaBelow = 0x0625;
inline constexpr char32_t kYehHamza = 0x0626;
inline constexpr char32_t kAlef = 0x0627;
inline constexpr char32_t kBeh = 0x0628;
inline constexpr char32_t kTehMarbuta = 0x0629;
inline constexpr char32_t kTeh = 0x062A;
inline constexpr char32_t kKhah = 0x062E;
inline constexpr char32_t kHah = 0x062D;
inline constexpr char32_t kDal = 0x062F;
inline constexpr char32_t kThal = 0x0630;
inline constexpr char32_t kReh = 0x0631;
inline constexpr char32_t kZain = 0x0632;
inline constexpr char32_t kSeen = 0x0633;
inline constexpr char32_t kSad = 0x0635;
inline constexpr char32_t kDad = 0x0636;
inline constexpr char32_t kTah = 0x0637;
inline constexpr char32_t kZah = 0x0638;
inline constexpr char32_t kGhain = 0x063A;
inline constexpr char32_t kTatweel = 0x0640;
inline constexpr char32_t kFeh = 0x0641;
inline constexpr char32_t kQaf = 0x0642;
inline constexpr char32_t kKaf = 0x0643;
inline constexpr char32_t kLam = 0x0644;
inline constexpr char32_t kNoon = 0x0646;
inline constexpr char32_t kHeh = 0x0647;
inline constexpr char32_t kWaw = 0x0648;
inline constexpr char32_t kAlefMaksura = 0x0649;
inline constexpr char32_t kYeh = 0x064A;

inline constexpr char32_t kFathatan = 0x064B;
inline constexpr char32_t kDammatan = 0x064C;
inline constexpr char32_t kKasratan = 0x064D;
inline constexpr char32_t kFatha = 0x064E;
inline constexpr char32_t kDamma = 0x064F;
inline constexpr char32_t kKasra = 0x0650;
inline constexpr char32_t kShadda = 0x0651;
inline constexpr char32_t kSukun = 0x0652;
inline constexpr char32_t kMaddaAbove = 0x0653;
inline constexpr char32_t kHamzaAbove = 0x0654;
inline constexpr char32_t kHamzaBelow = 0x0655;
inline constexpr char32_t kSuperscriptAlef = 0x0670;
inline constexpr char32_t kAlefWasla = 0x0671;

inline constexpr char32_t kSmallHighDotlessHeadOfKhah = 0x06E1;  // Quranic sukun
inline constexpr char32_t kSmallWaw = 0x06E5;
inline constexpr char32_t kSmallYeh = 0x06E6;

// The 36 standard letters (hamza through ghain, feh through yeh).
constexpr bool is_letter(char32_t c) {
  return (c >= 0x0621 && c <= 0x063A) || (c >= 0x0641 && c <= 0x064A);
}

constexpr bool is_letter_or_wasla(char32_t c) { return is_letter(c) || c == kAlefWasla; }

// Harakat, tanwin, shadda, sukun and the combining hamza/madda.
constexpr bool is_haraka(char32_t c) { return c >= 0x064B && c <= 0x0655; }

// Quranic annotation marks that combine with the preceding letter. The
// spacing small waw/yeh (U+06E5, U+06E6) are excluded: they stand alone.
constexpr bool is_quranic_mark(char32_t c) {
  return (c >= 0x06D6 && c <= 0x06DC) || (c >= 0x06DF && c <= 0x06E4) || c == 0x06E7 || c == 0x06E8 ||
         (c >= 0x06EA && c <= 0x06ED);
}

constexpr bool is_combining_mark(char32_t c) {
  return is_haraka(c) || c == kSuperscriptAlef || is_quranic_mark(c);
}

// Standalone Quranic signs kept by normalization: pause marks written between
// words, the end-of-ayah sign and the spacing small waw/yeh.
constexpr bool is_quranic_sign(char32_t c) {
  return c == 0x06DD || c == 0x06DE || c == 0x06E9 || c == kSmallWaw || c == kSmallYeh;
}

constexpr bool is_short_vowel(char32_t c) { return c == kFatha || c == kDamma || c == kKasra; }
constexpr bool is_tanwin(char32_t c) { return c == kFathatan || c == kDammatan || c == kKasratan; }

constexpr bool is_hamza_letter(char32_t c) {
  return c == kHamza || c == kAlefHamzaAbove || c == kWawHamza || c == kAlefHamzaBelow || c == kYehHamza;
}

struct PresentationForm {
  char32_t form;
  std::array<char32_t, 2> decomposition;  // second slot 0 when unused
};

// Compatibility (NFKC) decompositions of U+FE80..U+FEFC: contextual letter
// forms and the lam-alef ligatures. Generated from the Unicode 13 database.
inline constexpr PresentationForm kPresentationForms[] = {
    {0xFE80, {0x0621, 0x0000}},
    {0xFE81, {0x0622, 0x0000}},
    {0xFE82, {0x0622, 0x0000}},
    {0xFE83, {0x0623, 0x0000}},
    {0xFE84, {0x0623, 0x0000}},
    {0xFE85, {0x0624, 0x0000}},
    {0xFE86, {0x0624, 0x0000}},
    {0xFE87, {0x0625, 0x0000}},
    {0xFE88, {0x0625, 0x0000}},
    {0xFE89, {0x0626, 0x0000}},
    {0xFE8A, {0x0626, 0x0000}},
    {0xFE8B, {0x0626, 0x0000}},
    {0xFE8C, {0x0626, 0x0000}},
    {0xFE8D, {0x0627, 0x0000}},
    {0xFE8E, {0x0627, 0x0000}},
    {0xFE8F, {0x0628, 0x0000}},
    {0xFE90, {0x0628, 0x0000}},
    {0xFE91, {0x0628, 0x0000}},
    {0xFE92, {0x0628, 0x0000}},
    {0xFE93, {0x0629, 0x0000}},
    {0xFE94, {0x0629, 0x0000}},
    {0xFE95, {0x062A, 0x0000}},
    {0xFE96, {0x062A, 0x0000}},
    {0xFE97, {0x062A, 0x0000}},
    {0xFE98, {0x062A, 0x0000}},
    {0xFE99, {0x062B, 0x0000}},
    {0xFE9A, {0x062B, 0x0000}},
    {0xFE9B, {0x062B, 0x0000}},
    {0xFE9C, {0x062B, 0x0000}},
    {0xFE9D, {0x062C, 0x0000}},
    {0xFE9E, {0x062C, 0x0000}},
    {0xFE9F, {0x062C, 0x0000}},
    {0xFEA0, {0x062C, 0x0000}},
    {0xFEA1, {0x062D, 0x0000}},
    {0xFEA2, {0x062D, 0x0000}},
    {0xFEA3, {0x062D, 0x0000}},
    {0xFEA4, {0x062D, 0x0000}},
    {0xFEA5, {0x062E, 0x0000}},
    {0xFEA6, {0x062E, 0x0000}},
    {0xFEA7, {0x062E, 0x0000}},
    {0xFEA8, {0x062E, 0x0000}},
    {0xFEA9, {0x062F, 0x0000}},
    {0xFEAA, {0x062F, 0x0000}},
    {0xFEAB, {0x0630, 0x0000}},
    {0xFEAC, {0x0630, 0x0000}},
    {0xFEAD, {0x0631, 0x0000}},
    {0xFEAE, {0x0631, 0x0000}},
    {0xFEAF, {0x0632, 0x0000}},
    {0xFEB0, {0x0632, 0x0000}},
    {0xFEB1, {0x0633, 0x0000}},
    {0xFEB2, {0x0633, 0x0000}},
    {0xFEB3, {0x0633, 0x0000}},
    {0xFEB4, {0x0633, 0x0000}},
    {0xFEB5, {0x0634, 0x0000}},
    {0xFEB6, {0x0634, 0x0000}},
    {0xFEB7, {0x0634, 0x0000}},
    {0xFEB8, {0x0634, 0x0000}},
    {0xFEB9, {0x0635, 0x0000}},
    {0xFEBA, {0x0635, 0x0000}},
    {0xFEBB, {0x0635, 0x0000}},
    {0xFEBC, {0x0635, 0x0000}},
    {0xFEBD, {0x0636, 0x0000}},
    {0xFEBE, {0x0636, 0x0000}},
    {0xFEBF, {0x0636, 0x0000}},
    {0xFEC0, {0x0636, 0x0000}},
    {0xFEC1, {0x0637, 0x0000}},
    {0xFEC2, {0x0637, 0x0000}},
    {0xFEC3, {0x0637, 0x0000}},
    {0xFEC4, {0x0637, 0x0000}},
    {0xFEC5, {0x0638, 0x0000}},
    {0xFEC6, {0x0638, 0x0000}},
    {0xFEC7, {0x0638, 0x0000}},
    {0xFEC8, {0x0638, 0x0000}},
    {0xFEC9, {0x0639, 0x0000}},
    {0xFECA, {0x0639, 0x0000}},
    {0xFECB, {0x0639, 0x0000}},
    {0xFECC, {0x0639, 0x0000}},
    {0xFECD, {0x063A, 0x0000}},
    {0xFECE, {0x063A, 0x0000}},
    {0xFECF, {0x063A, 0x0000}},
    {0xFED0, {0x063A, 0x0000}},
    {0xFED1, {0x0641, 0x0000}},
    {0xFED2, {0x0641, 0x0000}},
    {0xFED3, {0x0641, 0x0000}},
    {0xFED4, {0x0641, 0x0000}},
    {0xFED5, {0x0642, 0x0000}},
    {0xFED6, {0x0642, 0x0000}},
    {0xFED7, {0x0642, 0x0000}},
    {0xFED8, {0x0642, 0x0000}},
    {0xFED9, {0x0643, 0x0000}},
    {0xFEDA, {0x0643, 0x0000}},
    {0xFEDB, {0x0643, 0x0000}},
    {0xFEDC, {0x0643, 0x0000}},
    {0xFEDD, {0x0644, 0x0000}},
    {0xFEDE, {0x0644, 0x0000}},
    {0xFEDF, {0x0644, 0x0000}},
    {0xFEE0, {0x0644, 0x0000}},
    {0xFEE1, {0x0645, 0x0000}},
    {0xFEE2, {0x0645, 0x0000}},
    {0xFEE3, {0x0645, 0x0000}},
    {0xFEE4, {0x0645, 0x0000}},
    {0xFEE5, {0x0646, 0x0000}},
    {0xFEE6, {0x0646, 0x0000}},
    {0xFEE7, {0x0646, 0x0000}},
    {0xFEE8, {0x0646, 0x0000}},
    {0xFEE9, {0x0647, 0x0000}},
    {0xFEEA, {0x0647, 0x0000}},
    {0xFEEB, {0x0647, 0x0000}},
    {0xFEEC, {0x0647, 0x0000}},
    {0xFEED, {0x0648, 0x0000}},
    {0xFEEE, {0x0648, 0x0000}},
    {0xFEEF, {0x0649, 0x0000}},
    {0xFEF0, {0x0649, 0x0000}},
    {0xFEF1, {0x064A, 0x0000}},
    {0xFEF2, {0x064A, 0x0000}},
    {0xFEF3, {0x064A, 0x0000}},
    {0xFEF4, {0x064A, 0x0000}},
    {0xFEF5, {0x0644, 0x0622}},
    {0xFEF6, {0x0644, 0x0622}},
    {0xFEF7, {0x0644, 0x0623}},
    {0xFEF8, {0x0644, 0x0623}},
    {0xFEF9, {0x0644, 0x0625}},
    {0xFEFA, {0x0644, 0x0625}},
    {0xFEFB, {0x0644, 0x0627}},
    {0xFEFC, {0x0644, 0x0627}},
};

inline const PresentationForm* find_presentation_form(char32_t c) {
  const auto* first = std::begin(kPresentationForms);
  const auto* last = std::end(kPresentationForms);
  const auto* it = std::lower_bound(first, last, c,
                                    [](const PresentationForm& p, char32_t v) { return p.form < v; });
  return (it != last && it->form == c) ? it : nullptr;
}

}  // namespace mddkit::arabic
