#pragma once

#include <span>
#include <string>
#include <vector>

#include "infoseg/symbols.hpp"

namespace infoseg {

struct SaxConfig {
  int alphabet_size = 16;
  /// 0 selects w = n (one symbol per sample).
  std::size_t word_length = 0;
};

/// Ascending thresholds; a value maps to the number of bounds strictly below it.
struct Breakpoints {
  std::vector<double> bounds;

  int alphabet_size() const { return static_cast<int>(bounds.size()) + 1; }

  std::string to_json() const;
  static Breakpoints from_json(const std::string& text);
};

/// Piecewise aggregate approximation. Frame i covers [i*n/w, (i+1)*n/w) of
/// the sample axis; a sample straddling a frame edge contributes to both
/// frames in proportion to its overlap.
std::vector<double> paa(std::span<const double> values, std::size_t w);

/// Equal-frequency thresholds: bounds[k] is the (k+1)/sigma quantile of the
/// pool, interpolated between order statistics at position q*N - 0.5.
Breakpoints fit_breakpoints(std::span<const double> pool, int sigma);

SymbolString quantize(std::span<const double> values, const Breakpoints& bp);

/// paa (w from config, or n) followed by quantize.
SymbolString sax_encode(std::span<const double> values, const SaxConfig& config,
                        const Breakpoints& bp);

}  // namespace infoseg
