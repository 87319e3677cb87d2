#include "infoseg/symbols.hpp"

#include <algorithm>

namespace infoseg {

void check_alphabet_size(int alphabet_size) {
  if (alphabet_size < kMinAlphabet || alphabet_size > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in [2, 26], got " +
                                std::to_string(alphabet_size));
  }
}

SymbolString::SymbolString(std::vector<Symbol> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  check_alphabet_size(alphabet_size);
  for (Symbol s : symbols_) {
    if (s > alphabet_size_) {
      throw std::invalid_argument("symbol index " + std::to_string(s) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_size_));
    }
  }
}

SymbolString SymbolString::from_text(std::string_view text, int alphabet_size) {
  check_alphabet_size(alphabet_size);
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == kSeparatorChar) {
      out.push_back(static_cast<Symbol>(alphabet_size));
    } else if (ch >= 'a' && ch < 'a' + alphabet_size) {
      out.push_back(static_cast<Symbol>(ch - 'a'));
    } else {
      throw DataError(std::string("character '") + ch +
                      "' is not in the alphabet of size " +
                      std::to_string(alphabet_size));
    }
  }
  return SymbolString(std::move(out), alphabet_size);
}

std::string SymbolString::to_text() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(symbol_char(s, alphabet_size_));
  return out;
}

std::size_t SymbolString::separator_count() const {
  return static_cast<std::size_t>(
      std::count(symbols_.begin(), symbols_.end(), separator()));
}

SymbolString SymbolString::substr(std::size_t start, std::size_t length) const {
  start = std::min(start, symbols_.size());
  length = std::min(length, symbols_.size() - start);
  return SymbolString(
      std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(start),
                          symbols_.begin() + static_cast<std::ptrdiff_t>(start + length)),
      alphabet_size_);
}

}  // namespace infoseg
