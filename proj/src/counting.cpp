#include "infoseg/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace infoseg {

std::string_view method_name(CountingMethod method) {
  return method == CountingMethod::Overlapping ? "overlap" : "nonoverlap";
}

CountingMethod parse_method(std::string_view name) {
  if (name == "overlap" || name == "overlapping") return CountingMethod::Overlapping;
  if (name == "nonoverlap" || name == "nonoverlapping" || name == "non-overlapping")
    return CountingMethod::NonOverlapping;
  throw std::invalid_argument("unknown counting method: " + std::string(name));
}

namespace {

void require_query(std::span<const Symbol> query) {
  if (query.empty()) throw std::invalid_argument("query must be non-empty");
}

std::size_t scan_count(std::span<const Symbol> query, std::span<const Symbol> data,
                       std::size_t hit_stride) {
  require_query(query);
  std::size_t count = 0;
  std::size_t pos = 0;
  while (data.size() - pos >= query.size()) {
    if (std::equal(query.begin(), query.end(), data.begin() + static_cast<std::ptrdiff_t>(pos))) {
      ++count;
      pos += hit_stride;
    } else {
      ++pos;
    }
  }
  return count;
}

}  // namespace

std::size_t count_overlapping(std::span<const Symbol> query,
                              std::span<const Symbol> data) {
  return scan_count(query, data, 1);
}

std::size_t count_nonoverlapping(std::span<const Symbol> query,
                                 std::span<const Symbol> data) {
  return scan_count(query, data, query.size());
}

std::size_t count_occurrences(std::span<const Symbol> query,
                              std::span<const Symbol> data, CountingMethod method) {
  return method == CountingMethod::Overlapping ? count_overlapping(query, data)
                                               : count_nonoverlapping(query, data);
}

// Prefix doubling with stable counting sorts: O(n log n).
SuffixArray::SuffixArray(std::vector<Symbol> text) : text_(std::move(text)) {
  const std::size_t n = text_.size();
  sa_.resize(n);
  if (n == 0) return;

  std::vector<std::size_t> rank(n), tmp(n), bucket(std::max<std::size_t>(n, 256) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    rank[i] = text_[i];
    ++bucket[rank[i] + 1];
  }
  std::partial_sum(bucket.begin(), bucket.end(), bucket.begin());
  for (std::size_t i = 0; i < n; ++i) sa_[bucket[rank[i]]++] = i;

  // Dense ranks for the first round.
  tmp[sa_[0]] = 0;
  for (std::size_t i = 1; i < n; ++i)
    tmp[sa_[i]] = tmp[sa_[i - 1]] + (text_[sa_[i]] != text_[sa_[i - 1]] ? 1 : 0);
  rank.swap(tmp);

  std::vector<std::size_t> order(n);
  for (std::size_t k = 1; rank[sa_[n - 1]] + 1 < n; k <<= 1) {
    // Order by second key: suffixes without a k-offset partner come first.
    std::size_t m = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) order[m++] = i;
    for (std::size_t i = 0; i < n; ++i)
      if (sa_[i] >= k) order[m++] = sa_[i] - k;

    // Stable sort by first key.
    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++bucket[rank[i] + 1];
    std::partial_sum(bucket.begin(), bucket.end(), bucket.begin());
    for (std::size_t i = 0; i < n; ++i) sa_[bucket[rank[order[i]]]++] = order[i];

    auto second = [&](std::size_t i) -> std::size_t {
      return i + k < n ? rank[i + k] + 1 : 0;
    };
    tmp[sa_[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t a = sa_[i - 1], b = sa_[i];
      const bool same = rank[a] == rank[b] && second(a) == second(b);
      tmp[b] = tmp[a] + (same ? 0 : 1);
    }
    rank.swap(tmp);
  }
}

SuffixArray::Range SuffixArray::narrow(Range range, std::size_t depth, Symbol next) const {
  // Within the range every suffix shares `depth` symbols, so the symbol at
  // offset `depth` is non-decreasing; exhausted suffixes sort first.
  auto key = [&](std::size_t idx) -> int {
    const std::size_t p = sa_[idx] + depth;
    return p < text_.size() ? static_cast<int>(text_[p]) + 1 : 0;
  };
  const int target = static_cast<int>(next) + 1;
  std::size_t lo = range.first, hi = range.second;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (key(mid) < target) lo = mid + 1; else hi = mid;
  }
  const std::size_t first = lo;
  hi = range.second;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (key(mid) <= target) lo = mid + 1; else hi = mid;
  }
  return {first, lo};
}

SuffixArray::Range SuffixArray::find(std::span<const Symbol> query) const {
  Range range = full_range();
  for (std::size_t d = 0; d < query.size() && range.first < range.second; ++d)
    range = narrow(range, d, query[d]);
  return range;
}

SuffixArray build_suffix_array(std::span<const Symbol> text) {
  return SuffixArray(std::vector<Symbol>(text.begin(), text.end()));
}

std::size_t sa_count_overlapping(std::span<const Symbol> query, const SuffixArray& index) {
  require_query(query);
  const auto range = index.find(query);
  return range.second - range.first;
}

std::size_t sa_count_nonoverlapping(SuffixArray::Range range, std::size_t query_length,
                                    const SuffixArray& index) {
  if (query_length == 0) throw std::invalid_argument("query must be non-empty");
  const auto& sa = index.positions();
  std::vector<std::size_t> starts(sa.begin() + static_cast<std::ptrdiff_t>(range.first),
                                  sa.begin() + static_cast<std::ptrdiff_t>(range.second));
  std::sort(starts.begin(), starts.end());
  std::size_t count = 0;
  std::size_t free_from = 0;
  for (std::size_t p : starts) {
    if (p >= free_from) {
      ++count;
      free_from = p + query_length;
    }
  }
  return count;
}

SpanTable::SpanTable(std::size_t test_length, std::size_t max_span)
    : rows_(test_length), max_span_(max_span == 0 ? test_length : max_span) {
  for (std::size_t i = 0; i < test_length; ++i)
    rows_[i].assign(std::min(max_span_, test_length - i), 0);
}

bool SpanTable::contains(std::size_t start, std::size_t end) const {
  return start < end && start < rows_.size() && end - start <= rows_[start].size();
}

std::size_t SpanTable::at(std::size_t start, std::size_t end) const {
  if (!contains(start, end)) throw std::out_of_range("span not tabulated");
  return rows_[start][end - start - 1];
}

void SpanTable::set(std::size_t start, std::size_t end, std::size_t count) {
  if (!contains(start, end)) throw std::out_of_range("span not tabulated");
  rows_[start][end - start - 1] = count;
}

SpanCounts count_all_spans(std::span<const Symbol> test, const SuffixArray& index,
                           std::size_t max_span) {
  const std::size_t n = test.size();
  SpanCounts out{SpanTable(n, max_span), SpanTable(n, max_span)};
  const std::size_t limit = out.overlapping.max_span();

  // A non-empty suffix-array range at a given depth identifies the substring,
  // so (range start, length) is a content key for the memo.
  std::unordered_map<std::size_t, std::size_t> memo;
  const std::size_t key_stride = limit + 1;

  for (std::size_t start = 0; start < n; ++start) {
    SuffixArray::Range range = index.full_range();
    const std::size_t longest = std::min(limit, n - start);
    for (std::size_t len = 1; len <= longest; ++len) {
      range = index.narrow(range, len - 1, test[start + len - 1]);
      const std::size_t overlapping = range.second - range.first;
      if (overlapping == 0) break;  // every extension is absent too
      out.overlapping.set(start, start + len, overlapping);
      std::size_t nonoverlapping = overlapping;
      if (len > 1 && overlapping > 1) {
        const std::size_t key = range.first * key_stride + len;
        auto it = memo.find(key);
        if (it == memo.end())
          it = memo.emplace(key, sa_count_nonoverlapping(range, len, index)).first;
        nonoverlapping = it->second;
      }
      out.nonoverlapping.set(start, start + len, nonoverlapping);
    }
  }
  return out;
}

SpanTable all_substring_counts(std::span<const Symbol> test, std::span<const Symbol> corpus,
                               CountingMethod method, std::size_t max_span) {
  const SuffixArray index = build_suffix_array(corpus);
  SpanCounts counts = count_all_spans(test, index, max_span);
  return method == CountingMethod::Overlapping ? std::move(counts.overlapping)
                                               : std::move(counts.nonoverlapping);
}

}  // namespace infoseg
