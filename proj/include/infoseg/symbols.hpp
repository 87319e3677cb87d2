#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace infoseg {

using Symbol = std::uint8_t;

constexpr int kMinAlphabet = 2;
constexpr int kMaxAlphabet = 26;
constexpr char kSeparatorChar = '|';

/// Raised for malformed input data (bad files, bad symbol text, empty sets).
/// The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A string over the alphabet {0, ..., sigma-1}. The value sigma itself is
/// reserved as a record separator and never produced by quantization.
class SymbolString {
 public:
  SymbolString() = default;
  SymbolString(std::vector<Symbol> symbols, int alphabet_size);

  /// Parses the text rendering: 'a' + i for symbol i, '|' for the separator.
  static SymbolString from_text(std::string_view text, int alphabet_size);

  std::string to_text() const;

  int alphabet_size() const { return alphabet_size_; }
  Symbol separator() const { return static_cast<Symbol>(alphabet_size_); }
  bool is_separator(Symbol s) const { return s == separator(); }

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::span<const Symbol> view() const { return symbols_; }
  operator std::span<const Symbol>() const { return symbols_; }

  std::size_t separator_count() const;
  bool has_separator() const { return separator_count() != 0; }

  SymbolString substr(std::size_t start, std::size_t length) const;

  friend bool operator==(const SymbolString&, const SymbolString&) = default;

 private:
  std::vector<Symbol> symbols_;
  int alphabet_size_ = kMinAlphabet;
};

inline char symbol_char(Symbol s, int alphabet_size) {
  return s == alphabet_size ? kSeparatorChar : static_cast<char>('a' + s);
}

void check_alphabet_size(int alphabet_size);

}  // namespace infoseg
