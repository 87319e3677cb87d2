#include "doctest.h"

#include <map>
#include <string>

#include "infoseg/counting.hpp"
#include "infoseg/sax.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace infoseg;

namespace {

std::vector<Symbol> str(const std::string& s) { return {s.begin(), s.end()}; }

std::size_t over(const std::string& q, const std::string& d) {
  return count_overlapping(str(q), str(d));
}
std::size_t non(const std::string& q, const std::string& d) {
  return count_nonoverlapping(str(q), str(d));
}

}  // namespace

TEST_CASE("scan counters on the worked examples") {
  CHECK(over("abca", "abcabcabca") == 3);
  CHECK(non("abca", "abcabcabca") == 2);
  CHECK(over("aa", std::string(10, 'a')) == 9);
  CHECK(non("aa", std::string(10, 'a')) == 5);
  CHECK(over("abc", "ab") == 0);
  CHECK(non("abc", "ab") == 0);
  CHECK(over("ab", "ab") == 1);
  CHECK(non("ab", "") == 0);
}

TEST_CASE("empty query is rejected") {
  CHECK_THROWS_AS(over("", "abc"), std::invalid_argument);
  CHECK_THROWS_AS(non("", "abc"), std::invalid_argument);
  const auto sa = build_suffix_array(str("abc"));
  CHECK_THROWS_AS(sa_count_overlapping(std::vector<Symbol>{}, sa), std::invalid_argument);
}

TEST_CASE("method names round-trip") {
  for (auto m : {CountingMethod::Overlapping, CountingMethod::NonOverlapping})
    CHECK(parse_method(method_name(m)) == m);
  CHECK_THROWS(parse_method("sometimes"));
}

TEST_CASE("two waves in eight waves: 7 overlapping, 4 non-overlapping") {
  // One sine period per 16 samples, sixteen symbols fitted on the signal.
  const auto signal = synth::sine_waves(8, 16);
  const auto bp = fit_breakpoints(signal, 16);
  const auto text = quantize(signal, bp);
  const auto query = text.substr(0, 32);
  REQUIRE(text.substr(32, 32) == query);
  CHECK(count_overlapping(query, text) == 7);
  CHECK(count_nonoverlapping(query, text) == 4);
}

TEST_CASE("suffix array matches brute-force suffix sorting") {
  SUBCASE("frozen examples") {
    CHECK(build_suffix_array(str("banana")).positions() ==
          std::vector<std::size_t>{5, 3, 1, 0, 4, 2});
    CHECK(build_suffix_array(str("aaa")).positions() == std::vector<std::size_t>{2, 1, 0});
    CHECK(build_suffix_array(str("")).positions().empty());
    CHECK(oracle::suffix_sort(str("banana")) == std::vector<std::size_t>{5, 3, 1, 0, 4, 2});
  }
  SUBCASE("random texts") {
    synth::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const auto text = synth::random_symbols(rng, rng.below(80), 1 + static_cast<int>(rng.below(4)));
      CHECK(build_suffix_array(text).positions() == oracle::suffix_sort(text));
    }
  }
}

TEST_CASE("suffix-array counts") {
  const auto banana = build_suffix_array(str("banana"));
  CHECK(sa_count_overlapping(str("ana"), banana) == 2);
  CHECK(sa_count_overlapping(str("z"), banana) == 0);
  CHECK(sa_count_overlapping(str("bananas"), banana) == 0);
  CHECK(sa_count_overlapping(str("abca"), build_suffix_array(str("abcabcabca"))) == 3);
}

TEST_CASE("counting invariants on random inputs") {
  synth::Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int sigma = 1 + static_cast<int>(rng.below(3));
    const auto data = synth::random_symbols(rng, rng.below(60), sigma);
    const auto query = synth::random_symbols(rng, 1 + rng.below(5), sigma);
    const std::size_t o = count_overlapping(query, data);
    const std::size_t n = count_nonoverlapping(query, data);
    const std::size_t cap = data.size() >= query.size() ? data.size() - query.size() + 1 : 0;
    CHECK(n <= o);
    CHECK(o <= cap);
    CHECK(n * query.size() <= data.size());
    if (query.size() == 1) CHECK(n == o);
    CHECK(o == oracle::overlapping(query, data));
    CHECK(n == oracle::greedy_scan(query, data));
    const auto sa = build_suffix_array(data);
    CHECK(sa_count_overlapping(query, sa) == o);
    CHECK(sa_count_nonoverlapping(sa.find(query), query.size(), sa) == n);
  }
}

TEST_CASE("greedy scan reaches the maximum disjoint packing") {
  // Exhaustive over binary data up to length 10 here; the acceptance suite
  // covers length 12.
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::vector<Symbol> data(len);
      for (std::size_t i = 0; i < len; ++i) data[i] = (bits >> i) & 1u;
      for (std::size_t ql = 1; ql <= 3; ++ql) {
        for (std::uint32_t qb = 0; qb < (1u << ql); ++qb) {
          std::vector<Symbol> q(ql);
          for (std::size_t i = 0; i < ql; ++i) q[i] = (qb >> i) & 1u;
          REQUIRE(count_nonoverlapping(q, data) == oracle::max_disjoint(q, data));
        }
      }
    }
  }
}

TEST_CASE("separators block cross-record matches") {
  // "ab|ab" with separator 2 over a 2-symbol alphabet.
  const SymbolString corpus = SymbolString::from_text("ab|ab", 2);
  const SymbolString q = SymbolString::from_text("ba", 2);
  CHECK(count_overlapping(q, corpus) == 0);
  CHECK(count_nonoverlapping(q, corpus) == 0);
  CHECK(sa_count_overlapping(q, build_suffix_array(corpus)) == 0);
  CHECK(count_overlapping(SymbolString::from_text("ab", 2), corpus) == 2);
}

TEST_CASE("all_substring_counts") {
  auto table_of = [](const std::string& test, const std::string& corpus, CountingMethod m) {
    const auto t = all_substring_counts(str(test), str(corpus), m);
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 0; i < test.size(); ++i)
      for (std::size_t j = i + 1; j <= test.size(); ++j) out[test.substr(i, j - i)] = t.at(i, j);
    return out;
  };
  using M = std::map<std::string, std::size_t>;
  CHECK(table_of("ab", "abab", CountingMethod::Overlapping) == M{{"a", 2}, {"b", 2}, {"ab", 2}});
  CHECK(table_of("ab", "abab", CountingMethod::NonOverlapping) == M{{"a", 2}, {"b", 2}, {"ab", 2}});
  CHECK(table_of("aa", "aaa", CountingMethod::Overlapping) == M{{"a", 3}, {"aa", 2}});
  CHECK(table_of("aa", "aaa", CountingMethod::NonOverlapping) == M{{"a", 3}, {"aa", 1}});
}

TEST_CASE("span tables agree with single-query counters") {
  synth::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int sigma = 2 + static_cast<int>(rng.below(2));
    const auto corpus = synth::random_symbols(rng, 1 + rng.below(120), sigma);
    const auto test = synth::random_symbols(rng, 1 + rng.below(15), sigma);
    const std::size_t max_span = rng.below(3) == 0 ? 1 + rng.below(5) : 0;
    const auto sa = build_suffix_array(corpus);
    const auto counts = count_all_spans(test, sa, max_span);
    for (std::size_t i = 0; i < test.size(); ++i) {
      for (std::size_t j = i + 1; j <= test.size(); ++j) {
        if (max_span != 0 && j - i > max_span) {
          CHECK_FALSE(counts.overlapping.contains(i, j));
          continue;
        }
        const std::vector<Symbol> q(test.begin() + static_cast<long>(i), test.begin() + static_cast<long>(j));
        CHECK(counts.overlapping.at(i, j) == oracle::overlapping(q, corpus));
        CHECK(counts.nonoverlapping.at(i, j) == oracle::greedy_scan(q, corpus));
      }
    }
  }
}
