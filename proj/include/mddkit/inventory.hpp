#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mddkit/default_inventory.hpp"
#include "mddkit/detail/text.hpp"
#include "mddkit/error.hpp"

namespace mddkit {

/// One phoneme token: non-empty printable ASCII without whitespace.
class PhonemeSymbol {
 public:
  explicit PhonemeSymbol(std::string text) : text_(std::move(text)) {
    if (text_.empty()) throw MalformedInput("empty phoneme symbol", 0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
      const auto c = static_cast<unsigned char>(text_[i]);
      if (c <= 0x20 || c >= 0x7F) {
        throw MalformedInput("non-printable character in phoneme symbol '" + text_ + "'", i);
      }
    }
  }

  const std::string& str() const noexcept { return text_; }

  friend auto operator<=>(const PhonemeSymbol&, const PhonemeSymbol&) = default;
  friend bool operator==(const PhonemeSymbol&, const PhonemeSymbol&) = default;
  friend bool operator==(const PhonemeSymbol& s, std::string_view v) { return s.text_ == v; }

 private:
  std::string text_;
};

using PhonemeSequence = std::vector<PhonemeSymbol>;

/// Splits on runs of whitespace. A token with non-printable bytes raises
/// MalformedInput whose position is the token index.
inline PhonemeSequence parse_sequence(std::string_view raw) {
  PhonemeSequence out;
  std::size_t i = 0;
  std::size_t token_index = 0;
  while (i < raw.size()) {
    while (i < raw.size() && detail::is_space(raw[i])) ++i;
    if (i == raw.size()) break;
    const std::size_t start = i;
    while (i < raw.size() && !detail::is_space(raw[i])) ++i;
    const std::string_view token = raw.substr(start, i - start);
    for (char ch : token) {
      const auto c = static_cast<unsigned char>(ch);
      if (c < 0x21 || c > 0x7E) {
        throw MalformedInput("token " + std::to_string(token_index) + " ('" + std::string(token) +
                                 "') contains a non-printable character",
                             token_index);
      }
    }
    out.emplace_back(std::string(token));
    ++token_index;
  }
  return out;
}

inline std::string serialize(const PhonemeSequence& seq) {
  std::string out;
  for (const auto& sym : seq) {
    if (!out.empty()) out.push_back(' ');
    out += sym.str();
  }
  return out;
}

// Strict mode fails on the first bad item; lenient mode passes it through or
// applies a documented fallback.
enum class Strictness { strict, lenient };

// Counts symbols passed through unchanged by lenient normalization.
struct NormalizeStats {
  std::size_t unknown = 0;
};

/// Raw-symbol to canonical-symbol table plus the canonical symbol set.
/// Immutable once built; construction validates every entry.
class InventoryMap {
 public:
  InventoryMap(std::map<std::string, std::string> entries, std::set<std::string> canonical)
      : entries_(std::move(entries)), canonical_(std::move(canonical)) {
    if (canonical_.empty()) {
      throw InventoryError(InventoryError::Kind::empty_document, "inventory has no canonical symbols");
    }
    for (const auto& sym : canonical_) PhonemeSymbol{sym};
    for (const auto& [raw, target] : entries_) {
      if (!canonical_.contains(target)) {
        throw InventoryError(InventoryError::Kind::invalid_target,
                             "mapping '" + raw + "' -> '" + target + "' targets a non-canonical symbol");
      }
      if (canonical_.contains(raw)) {
        throw InventoryError(InventoryError::Kind::invalid_target,
                             "raw symbol '" + raw + "' is itself canonical");
      }
    }
  }

  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }
  const std::set<std::string>& canonical_set() const noexcept { return canonical_; }
  bool is_canonical(std::string_view sym) const { return canonical_.contains(std::string(sym)); }

  // nullptr when sym is neither a raw key nor canonical.
  const std::string* lookup(std::string_view sym) const {
    const std::string key(sym);
    if (auto it = entries_.find(key); it != entries_.end()) return &it->second;
    if (auto it = canonical_.find(key); it != canonical_.end()) return &*it;
    return nullptr;
  }

 private:
  std::map<std::string, std::string> entries_;
  std::set<std::string> canonical_;
};

inline PhonemeSymbol normalize_symbol(std::string_view sym, const InventoryMap& map,
                                      Strictness policy = Strictness::strict,
                                      NormalizeStats* stats = nullptr, std::size_t index = 0) {
  if (sym.empty()) throw MalformedInput("empty phoneme symbol", index);
  if (const std::string* target = map.lookup(sym)) return PhonemeSymbol(*target);
  if (policy == Strictness::strict) throw UnknownSymbol(std::string(sym), index);
  if (stats) ++stats->unknown;
  return PhonemeSymbol(std::string(sym));
}

inline PhonemeSequence normalize_sequence(const PhonemeSequence& seq, const InventoryMap& map,
                                          Strictness policy = Strictness::strict,
                                          NormalizeStats* stats = nullptr) {
  PhonemeSequence out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out.push_back(normalize_symbol(seq[i].str(), map, policy, stats, i));
  }
  return out;
}

/// Parses an inventory document: `raw<TAB>canonical` lines, `#` comments and
/// a `[canonical]` section with one symbol per line.
inline InventoryMap load_inventory(std::string_view document) {
  std::map<std::string, std::string> entries;
  std::set<std::string> canonical;
  bool in_canonical = false;
  bool any_content = false;
  const auto doc_lines = detail::lines(document);
  for (std::size_t n = 0; n < doc_lines.size(); ++n) {
    const std::string_view line = detail::trim(doc_lines[n]);
    const std::string where = "inventory line " + std::to_string(n + 1) + ": ";
    if (line.empty() || line.front() == '#') continue;
    any_content = true;
    if (line.front() == '[') {
      if (line == "[canonical]") {
        in_canonical = true;
      } else if (line == "[map]") {
        in_canonical = false;
      } else {
        throw InventoryError(InventoryError::Kind::syntax, where + "unknown section " + std::string(line));
      }
      continue;
    }
    if (in_canonical) {
      canonical.insert(std::string(line));
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw InventoryError(InventoryError::Kind::syntax, where + "expected raw<TAB>canonical");
    }
    const std::string raw(detail::trim(line.substr(0, tab)));
    const std::string target(detail::trim(line.substr(tab + 1)));
    if (raw.empty() || target.empty()) {
      throw InventoryError(InventoryError::Kind::syntax, where + "empty column");
    }
    if (!entries.emplace(raw, target).second) {
      throw InventoryError(InventoryError::Kind::duplicate_key, where + "duplicate raw symbol '" + raw + "'");
    }
  }
  if (!any_content) throw InventoryError(InventoryError::Kind::empty_document, "inventory document is empty");
  try {
    return InventoryMap(std::move(entries), std::move(canonical));
  } catch (const MalformedInput& e) {
    throw InventoryError(InventoryError::Kind::syntax, std::string("inventory: ") + e.what());
  }
}

inline InventoryMap load_inventory_file(const std::string& path) {
  return load_inventory(detail::read_file(path));
}

inline const InventoryMap& default_inventory() {
  static const InventoryMap map = load_inventory(kDefaultInventoryText);
  return map;
}

}  // namespace mddkit
