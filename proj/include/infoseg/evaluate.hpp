#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "infoseg/symbols.hpp"

namespace infoseg {

/// Paired outcome counts for two classifiers run on the same test strings.
///   case1: both correct            case2: only overlapping correct
///   case3: only non-overlapping    case4: neither
/// McNemar's discordant pair is (b, c) = (case2, case3).
struct FourCaseTally {
  std::uint64_t case1 = 0;
  std::uint64_t case2 = 0;
  std::uint64_t case3 = 0;
  std::uint64_t case4 = 0;

  std::uint64_t total() const { return case1 + case2 + case3 + case4; }
  std::uint64_t overlap_correct() const { return case1 + case2; }
  std::uint64_t overlap_incorrect() const { return case3 + case4; }
  std::uint64_t nonoverlap_correct() const { return case1 + case3; }
  std::uint64_t nonoverlap_incorrect() const { return case2 + case4; }

  FourCaseTally& operator+=(const FourCaseTally& other);
  friend bool operator==(const FourCaseTally&, const FourCaseTally&) = default;
};

struct PairedOutcome {
  std::string truth;
  std::string predicted_overlap;
  std::string predicted_nonoverlap;
};

FourCaseTally tally_cases(const std::vector<PairedOutcome>& results);

/// One-sided exact binomial tail on the discordant counts:
///   p = 2^-(b+c) * sum_{k=0}^{min(b,c)} C(b+c, k)
/// evaluated in log space; 1 when b + c = 0.
double mcnemar_exact(std::uint64_t b, std::uint64_t c);

using SizeFunction = std::function<double(const SymbolString&)>;

/// size(xy) / (size(x) + size(y)).
double cdm(const SymbolString& x, const SymbolString& y, const SizeFunction& size_fn);

/// Reference size functions, for exercising cdm without a compressor.
double length_size(const SymbolString& s);
double distinct_symbol_size(const SymbolString& s);

struct DatasetReport {
  std::string name;
  std::size_t n_classes = 0;
  std::size_t n_test = 0;
  std::size_t series_length = 0;
  bool has_overlap = false;
  bool has_nonoverlap = false;
  std::uint64_t correct_overlap = 0;
  std::uint64_t correct_nonoverlap = 0;
  FourCaseTally tally;

  static std::string csv_header();
  /// name,classes,test size,length,overlap correct,nonoverlap correct
  std::string to_csv_row() const;
  std::string to_json() const;
  static DatasetReport from_json(const std::string& text);
};

struct DatasetInfo {
  std::string name;
  std::size_t n_classes = 0;
  std::size_t series_length = 0;
};

/// Builds a report from per-test predictions. Either prediction list may be
/// empty when that method was not run; a non-empty list must match truth.
DatasetReport dataset_report(const DatasetInfo& info, const std::vector<std::string>& truth,
                             const std::vector<std::string>& predicted_overlap,
                             const std::vector<std::string>& predicted_nonoverlap);

struct McNemarSummary {
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  double p = 1.0;
  double alpha = 0.05;
  bool significant = false;

  std::string to_json() const;
};

McNemarSummary summarize(const FourCaseTally& tally, double alpha = 0.05);

}  // namespace infoseg
