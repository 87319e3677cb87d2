#pragma once

#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "infoseg/counting.hpp"
#include "infoseg/ingest.hpp"

namespace infoseg {

constexpr double kImpossible = std::numeric_limits<double>::infinity();

/// Tolerance used when two segmentation costs are treated as equal.
constexpr double kBitsTolerance = 1e-9;

/// -log2 of the maximum-likelihood probability freq / effective_length.
/// Unseen single symbols back off to 1 / (effective_length + sigma); unseen
/// longer spans are impossible (infinite cost).
double substring_cost(std::size_t freq, std::size_t span_length,
                      std::size_t effective_length, int sigma);

/// A class corpus with its suffix array. Immutable once built and shared by
/// both counting methods.
class CorpusIndex {
 public:
  explicit CorpusIndex(ClassCorpus corpus);

  const ClassCorpus& corpus() const { return corpus_; }
  const std::string& label() const { return corpus_.label; }
  const SuffixArray& suffix_array() const { return index_; }
  std::size_t effective_length() const { return corpus_.effective_length; }
  int alphabet_size() const { return corpus_.corpus.alphabet_size(); }

  SpanCounts count_spans(const SymbolString& test, std::size_t max_span = 0) const;

 private:
  ClassCorpus corpus_;
  SuffixArray index_;
};

class ProbabilityModel {
 public:
  ProbabilityModel(std::shared_ptr<const CorpusIndex> index, CountingMethod method);
  ProbabilityModel(ClassCorpus corpus, CountingMethod method);

  const CorpusIndex& index() const { return *index_; }
  CountingMethod method() const { return method_; }

  /// Cost in bits of a span given its frequency in the corpus.
  double cost(std::size_t freq, std::size_t span_length) const {
    return infoseg::substring_cost(freq, span_length, index_->effective_length(),
                                   index_->alphabet_size());
  }
  double substring_cost(std::span<const Symbol> t) const;
  double probability(std::span<const Symbol> t) const;

 private:
  std::shared_ptr<const CorpusIndex> index_;
  CountingMethod method_;
};

struct Segment {
  std::size_t start = 0;
  std::size_t end = 0;
  double bits = 0.0;
};

struct SegmentationResult {
  /// Segment end positions, ascending; the last equals the test length.
  std::vector<std::size_t> cuts;
  double bits = 0.0;
  std::vector<Segment> per_segment;

  /// {"bits": ..., "segments": [{"text", "start", "end", "bits"}]}
  std::string to_json(const SymbolString& test) const;
};

/// Minimum over all segmentations of the summed span costs, by dynamic
/// programming over suffixes. Among optimal segmentations the one with the
/// fewest segments wins, then the earliest cut sequence.
SegmentationResult min_information(const SymbolString& test, const ProbabilityModel& model,
                                   std::size_t max_span = 0);

/// Same optimisation on a precomputed count table. `cost` is evaluated for
/// each tabulated span; spans outside the table are impossible.
SegmentationResult min_information(const SpanTable& counts, const ProbabilityModel& model);

struct Classification {
  std::string predicted;
  std::vector<std::string> classes;
  std::vector<double> per_class_bits;

  double bits_for(const std::string& label) const;
};

/// Argmin of per-class information; exact ties go to the earlier class.
Classification classify(const SymbolString& test, const std::vector<ClassCorpus>& corpora,
                        CountingMethod method);
Classification classify(const SymbolString& test, std::span<const ProbabilityModel> models,
                        std::size_t max_span = 0);

struct PairedClassification {
  Classification overlapping;
  Classification nonoverlapping;
};

/// Classifies under both counting methods from one enumeration of substrings
/// per class, so the two predictions are made on identical inputs.
PairedClassification classify_both(const SymbolString& test,
                                   std::span<const std::shared_ptr<const CorpusIndex>> classes,
                                   std::size_t max_span = 0);

}  // namespace infoseg
