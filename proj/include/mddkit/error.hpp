#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mddkit {

// Base of every error thrown by the toolkit. Validation problems derive from
// Error directly; IoError marks failures of the environment (missing files).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Bad bytes or tokens in an input. position is a token or code point index,
// depending on where the error was raised.
class MalformedInput : public Error {
 public:
  MalformedInput(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public Error {
 public:
  UnknownSymbol(std::string symbol, std::size_t index)
      : Error("unknown phoneme symbol '" + symbol + "' at index " + std::to_string(index)),
        symbol_(std::move(symbol)),
        index_(index) {}
  const std::string& symbol() const noexcept { return symbol_; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::string symbol_;
  std::size_t index_;
};

class InventoryError : public Error {
 public:
  enum class Kind { empty_document, duplicate_key, invalid_target, syntax };

  InventoryError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// A consonant with no vowel, sukun or shadda. cluster is the index of the
// letter among the text's character clusters, offset its code point index.
class MissingDiacritic : public Error {
 public:
  MissingDiacritic(std::size_t cluster, std::size_t offset)
      : Error("missing diacritic on letter " + std::to_string(cluster) + " (code point offset " +
              std::to_string(offset) + ")"),
        cluster_(cluster),
        offset_(offset) {}
  std::size_t cluster() const noexcept { return cluster_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t cluster_;
  std::size_t offset_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ManifestError : public Error {
 public:
  ManifestError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UndefinedMetric : public Error {
 public:
  using Error::Error;
};

}  // namespace mddkit
