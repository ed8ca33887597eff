#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mddkit/detail/text.hpp"
#include "mddkit/error.hpp"
#include "mddkit/inventory.hpp"

namespace mddkit {

/// One row of a manifest. Absent optional fields are std::nullopt; in TSV an
/// empty cell means absent, so an empty phoneme sequence cannot be stored.
struct UtteranceRecord {
  std::string id;
  std::optional<std::string> text;
  PhonemeSequence canonical;
  std::optional<PhonemeSequence> annotated;
  std::optional<PhonemeSequence> hypothesis;

  friend bool operator==(const UtteranceRecord&, const UtteranceRecord&) = default;
};

enum class ManifestFormat { tsv, jsonl };

enum class SequenceField { canonical, annotated, hypothesis };

inline const char* to_string(SequenceField f) {
  switch (f) {
    case SequenceField::canonical: return "canonical";
    case SequenceField::annotated: return "annotated";
    case SequenceField::hypothesis: return "hypothesis";
  }
  return "?";
}

inline const PhonemeSequence* field_of(const UtteranceRecord& r, SequenceField f) {
  switch (f) {
    case SequenceField::canonical: return &r.canonical;
    case SequenceField::annotated: return r.annotated ? &*r.annotated : nullptr;
    case SequenceField::hypothesis: return r.hypothesis ? &*r.hypothesis : nullptr;
  }
  return nullptr;
}

inline constexpr const char* kManifestColumns[] = {"id", "text", "canonical", "annotated", "hypothesis"};

/// Streams records from a TSV or JSONL manifest one line at a time.
/// Phoneme fields are normalized through the inventory; ids must be unique.
/// Every error is a ManifestError carrying the 1-based line number.
class ManifestReader {
 public:
  ManifestReader(std::istream& in, ManifestFormat format, const InventoryMap& inventory,
                 Strictness mode = Strictness::strict)
      : in_(in), format_(format), inventory_(inventory), mode_(mode) {
    if (format_ == ManifestFormat::tsv) read_header();
  }

  /// Next record, or nullopt at end of input.
  std::optional<UtteranceRecord> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (detail::trim(line).empty()) continue;
      UtteranceRecord rec = format_ == ManifestFormat::tsv ? parse_tsv(line) : parse_jsonl(line);
      if (rec.id.empty()) throw ManifestError("empty id", line_no_);
      if (!ids_.insert(rec.id).second) throw ManifestError("duplicate id '" + rec.id + "'", line_no_);
      return rec;
    }
    return std::nullopt;
  }

  const NormalizeStats& normalize_stats() const noexcept { return stats_; }
  std::size_t line() const noexcept { return line_no_; }

 private:
  void read_header() {
    std::string header;
    if (!std::getline(in_, header)) throw ManifestError("missing header", 1);
    ++line_no_;
    if (header.starts_with("\xEF\xBB\xBF")) header.erase(0, 3);
    if (!header.empty() && header.back() == '\r') header.pop_back();
    const auto names = detail::split(header, '\t');
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto name = detail::trim(names[i]);
      for (std::size_t k = 0; k < 5; ++k) {
        if (name == kManifestColumns[k]) {
          if (column_[k] >= 0) throw ManifestError("duplicate column '" + std::string(name) + "'", 1);
          column_[k] = static_cast<int>(i);
        }
      }
    }
    if (column_[0] < 0) throw ManifestError("missing required column 'id'", 1);
    if (column_[2] < 0) throw ManifestError("missing required column 'canonical'", 1);
    n_columns_ = names.size();
  }

  PhonemeSequence parse_phonemes(std::string_view raw, const char* field) {
    try {
      return normalize_sequence(parse_sequence(raw), inventory_, mode_, &stats_);
    } catch (const Error& e) {
      throw ManifestError(std::string(field) + ": " + e.what(), line_no_);
    }
  }

  std::optional<PhonemeSequence> optional_phonemes(std::string_view raw, const char* field) {
    if (detail::trim(raw).empty()) return std::nullopt;
    return parse_phonemes(raw, field);
  }

  UtteranceRecord parse_tsv(const std::string& line) {
    const auto cells = detail::split(line, '\t');
    if (cells.size() != n_columns_) {
      throw ManifestError("expected " + std::to_string(n_columns_) + " columns, found " +
                              std::to_string(cells.size()),
                          line_no_);
    }
    auto cell = [&](std::size_t k) -> std::string_view {
      return column_[k] < 0 ? std::string_view{} : cells[static_cast<std::size_t>(column_[k])];
    };
    UtteranceRecord rec;
    rec.id = std::string(detail::trim(cell(0)));
    if (!cell(1).empty()) rec.text = std::string(cell(1));
    if (detail::trim(cell(2)).empty()) throw ManifestError("empty canonical sequence", line_no_);
    rec.canonical = parse_phonemes(cell(2), "canonical");
    rec.annotated = optional_phonemes(cell(3), "annotated");
    rec.hypothesis = optional_phonemes(cell(4), "hypothesis");
    return rec;
  }

  UtteranceRecord parse_jsonl(const std::string& line) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ManifestError(std::string("invalid JSON: ") + e.what(), line_no_);
    }
    if (!j.is_object()) throw ManifestError("expected a JSON object", line_no_);
    auto str = [&](const char* key, bool required) -> std::optional<std::string> {
      auto it = j.find(key);
      if (it == j.end() || it->is_null()) {
        if (required) throw ManifestError(std::string("missing required field '") + key + "'", line_no_);
        return std::nullopt;
      }
      if (!it->is_string()) throw ManifestError(std::string("field '") + key + "' must be a string", line_no_);
      return it->get<std::string>();
    };
    UtteranceRecord rec;
    rec.id = *str("id", true);
    rec.text = str("text", false);
    const std::string canonical = *str("canonical", true);
    if (detail::trim(canonical).empty()) throw ManifestError("empty canonical sequence", line_no_);
    rec.canonical = parse_phonemes(canonical, "canonical");
    if (auto a = str("annotated", false)) rec.annotated = parse_phonemes(*a, "annotated");
    if (auto h = str("hypothesis", false)) rec.hypothesis = parse_phonemes(*h, "hypothesis");
    return rec;
  }

  std::istream& in_;
  ManifestFormat format_;
  const InventoryMap& inventory_;
  Strictness mode_;
  int column_[5] = {-1, -1, -1, -1, -1};
  std::size_t n_columns_ = 0;
  std::size_t line_no_ = 0;
  std::set<std::string> ids_;
  NormalizeStats stats_;
};

inline std::vector<UtteranceRecord> load_manifest(std::istream& in, ManifestFormat format,
                                                  const InventoryMap& inventory = default_inventory(),
                                                  Strictness mode = Strictness::strict) {
  ManifestReader reader(in, format, inventory, mode);
  std::vector<UtteranceRecord> out;
  while (auto rec = reader.next()) out.push_back(std::move(*rec));
  return out;
}

inline std::vector<UtteranceRecord> load_manifest(const std::string& path, ManifestFormat format,
                                                  const InventoryMap& inventory = default_inventory(),
                                                  Strictness mode = Strictness::strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open manifest '" + path + "'");
  return load_manifest(in, format, inventory, mode);
}

/// Writes records one at a time; the TSV header goes out on construction.
class ManifestWriter {
 public:
  ManifestWriter(std::ostream& out, ManifestFormat format) : out_(out), format_(format) {
    if (format_ == ManifestFormat::tsv) out_ << "id\ttext\tcanonical\tannotated\thypothesis\n";
  }

  void write(const UtteranceRecord& r) {
    if (format_ == ManifestFormat::tsv) {
      if (r.id.find_first_of("\t\n") != std::string::npos ||
          (r.text && r.text->find_first_of("\t\n") != std::string::npos)) {
        throw MalformedInput("tab or newline inside a TSV field of record '" + r.id + "'", 0);
      }
      out_ << r.id << '\t' << r.text.value_or("") << '\t' << serialize(r.canonical) << '\t'
           << (r.annotated ? serialize(*r.annotated) : "") << '\t'
           << (r.hypothesis ? serialize(*r.hypothesis) : "") << '\n';
      return;
    }
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["text"] = r.text ? nlohmann::ordered_json(*r.text) : nlohmann::ordered_json(nullptr);
    j["canonical"] = serialize(r.canonical);
    j["annotated"] = r.annotated ? nlohmann::ordered_json(serialize(*r.annotated)) : nlohmann::ordered_json(nullptr);
    j["hypothesis"] =
        r.hypothesis ? nlohmann::ordered_json(serialize(*r.hypothesis)) : nlohmann::ordered_json(nullptr);
    out_ << j.dump() << '\n';
  }

 private:
  std::ostream& out_;
  ManifestFormat format_;
};

inline void write_manifest(std::ostream& out, const std::vector<UtteranceRecord>& records, ManifestFormat format) {
  ManifestWriter writer(out, format);
  for (const auto& r : records) writer.write(r);
}

}  // namespace mddkit
