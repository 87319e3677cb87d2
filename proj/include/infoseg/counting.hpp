#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "infoseg/symbols.hpp"

namespace infoseg {

enum class CountingMethod { Overlapping, NonOverlapping };

/// "overlap" / "nonoverlap"; these are also the CLI spellings.
std::string_view method_name(CountingMethod method);
CountingMethod parse_method(std::string_view name);

// Both scanners follow the same loop: compare the query against the data at
// the current position, count a hit, then advance by one (overlapping) or by
// the query length (non-overlapping). A miss always advances by one.
std::size_t count_overlapping(std::span<const Symbol> query,
                              std::span<const Symbol> data);
std::size_t count_nonoverlapping(std::span<const Symbol> query,
                                 std::span<const Symbol> data);
std::size_t count_occurrences(std::span<const Symbol> query,
                              std::span<const Symbol> data,
                              CountingMethod method);

/// Suffix array over an immutable symbol text. Suffixes are ordered with the
/// usual convention that a proper prefix sorts first.
class SuffixArray {
 public:
  using Range = std::pair<std::size_t, std::size_t>;  // [first, last) into positions()

  SuffixArray() = default;
  explicit SuffixArray(std::vector<Symbol> text);

  std::span<const Symbol> text() const { return text_; }
  const std::vector<std::size_t>& positions() const { return sa_; }
  std::size_t size() const { return sa_.size(); }

  Range full_range() const { return {0, sa_.size()}; }

  /// Restricts a range whose suffixes all share a prefix of length `depth`
  /// to those whose next symbol is `next`.
  Range narrow(Range range, std::size_t depth, Symbol next) const;

  /// Range of suffixes that have `query` as a prefix.
  Range find(std::span<const Symbol> query) const;

 private:
  std::vector<Symbol> text_;
  std::vector<std::size_t> sa_;
};

SuffixArray build_suffix_array(std::span<const Symbol> text);

std::size_t sa_count_overlapping(std::span<const Symbol> query,
                                 const SuffixArray& index);

/// Non-overlapping count recovered from the suffix array: the occurrence
/// starts in `range` are sorted and packed greedily left to right, which is
/// the same sequence of hits the direct scan produces.
std::size_t sa_count_nonoverlapping(SuffixArray::Range range,
                                    std::size_t query_length,
                                    const SuffixArray& index);

/// Counts for every span [start, end) of a test string, stored as a ragged
/// triangle indexed by start and span length.
class SpanTable {
 public:
  SpanTable() = default;
  SpanTable(std::size_t test_length, std::size_t max_span);

  std::size_t test_length() const { return rows_.size(); }
  /// Longest span stored; spans longer than this are not tabulated.
  std::size_t max_span() const { return max_span_; }
  bool contains(std::size_t start, std::size_t end) const;

  std::size_t at(std::size_t start, std::size_t end) const;
  void set(std::size_t start, std::size_t end, std::size_t count);

 private:
  std::vector<std::vector<std::size_t>> rows_;
  std::size_t max_span_ = 0;
};

struct SpanCounts {
  SpanTable overlapping;
  SpanTable nonoverlapping;

  const SpanTable& get(CountingMethod method) const {
    return method == CountingMethod::Overlapping ? overlapping : nonoverlapping;
  }
};

/// Tabulates both counting semantics for every span of `test` against the
/// indexed corpus in one pass. Overlapping counts come from successive
/// suffix-array range narrowing; non-overlapping counts are memoized by
/// substring content. `max_span` of 0 means unbounded.
SpanCounts count_all_spans(std::span<const Symbol> test,
                           const SuffixArray& index, std::size_t max_span = 0);

SpanTable all_substring_counts(std::span<const Symbol> test,
                               std::span<const Symbol> corpus,
                               CountingMethod method, std::size_t max_span = 0);

}  // namespace infoseg
