#include "infoseg/sax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace infoseg {

std::vector<double> paa(std::span<const double> values, std::size_t w) {
  const std::size_t n = values.size();
  if (w < 1 || w > n) {
    throw std::invalid_argument("paa: word length " + std::to_string(w) +
                                " outside [1, " + std::to_string(n) + "]");
  }
  if (w == n) return {values.begin(), values.end()};

  // Work in units of 1/(n*w): sample j spans [j*w, (j+1)*w), frame i spans
  // [i*n, (i+1)*n). All edges are integers, so the weights are exact.
  std::vector<double> out(w, 0.0);
  for (std::size_t i = 0; i < w; ++i) {
    const std::size_t lo = i * n, hi = (i + 1) * n;
    double sum = 0.0;
    for (std::size_t j = lo / w; j < n && j * w < hi; ++j) {
      const std::size_t s = std::max(lo, j * w);
      const std::size_t e = std::min(hi, (j + 1) * w);
      if (e > s) sum += values[j] * static_cast<double>(e - s);
    }
    out[i] = sum / static_cast<double>(n);
  }
  return out;
}

Breakpoints fit_breakpoints(std::span<const double> pool, int sigma) {
  if (pool.empty()) throw DataError("fit_breakpoints: empty value pool");
  check_alphabet_size(sigma);
  std::vector<double> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  const double last = n - 1.0;

  Breakpoints bp;
  bp.bounds.reserve(static_cast<std::size_t>(sigma - 1));
  for (int k = 1; k < sigma; ++k) {
    const double q = static_cast<double>(k) / sigma;
    const double pos = std::clamp(q * n - 0.5, 0.0, last);
    const auto below = static_cast<std::size_t>(std::floor(pos));
    const std::size_t above = std::min(below + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(below);
    const double lo = sorted[below], hi = sorted[above];
    bp.bounds.push_back(frac == 0.0 ? lo : lo + frac * (hi - lo));
  }
  // Interpolation cannot reorder, but keep the invariant explicit under rounding.
  for (std::size_t k = 1; k < bp.bounds.size(); ++k)
    bp.bounds[k] = std::max(bp.bounds[k], bp.bounds[k - 1]);
  return bp;
}

SymbolString quantize(std::span<const double> values, const Breakpoints& bp) {
  const int sigma = bp.alphabet_size();
  check_alphabet_size(sigma);
  std::vector<Symbol> out;
  out.reserve(values.size());
  for (double v : values) {
    const auto it = std::lower_bound(bp.bounds.begin(), bp.bounds.end(), v);
    out.push_back(static_cast<Symbol>(it - bp.bounds.begin()));
  }
  return SymbolString(std::move(out), sigma);
}

SymbolString sax_encode(std::span<const double> values, const SaxConfig& config,
                        const Breakpoints& bp) {
  const std::size_t w = config.word_length == 0 ? values.size() : config.word_length;
  const auto reduced = paa(values, w);
  return quantize(reduced, bp);
}

std::string Breakpoints::to_json() const {
  return nlohmann::json(bounds).dump();
}

Breakpoints Breakpoints::from_json(const std::string& text) {
  Breakpoints bp;
  try {
    bp.bounds = nlohmann::json::parse(text).get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("breakpoints: ") + e.what());
  }
  if (!std::is_sorted(bp.bounds.begin(), bp.bounds.end()))
    throw DataError("breakpoints: bounds are not ascending");
  check_alphabet_size(bp.alphabet_size());
  return bp;
}

}  // namespace infoseg
