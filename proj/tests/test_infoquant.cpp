#include "doctest.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "infoseg/infoquant.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace infoseg;

namespace {

ClassCorpus corpus_of(const std::string& label, const std::string& text, int sigma) {
  return build_class_corpus({{label, SymbolString::from_text(text, sigma)}}, label);
}

double bits(const std::string& test, const std::string& corpus, CountingMethod m, int sigma = 4) {
  return min_information(SymbolString::from_text(test, sigma),
                         ProbabilityModel(corpus_of("c", corpus, sigma), m))
      .bits;
}

}  // namespace

TEST_CASE("substring_cost") {
  CHECK(substring_cost(2, 1, 10, 16) == doctest::Approx(2.321928094887362).epsilon(1e-12));
  CHECK(substring_cost(2, 4, 10, 16) == doctest::Approx(2.321928094887362).epsilon(1e-12));
  CHECK(std::isinf(substring_cost(0, 3, 10, 16)));
  CHECK(substring_cost(0, 1, 10, 16) == doctest::Approx(4.700439718141092).epsilon(1e-12));
  CHECK(substring_cost(10, 1, 10, 16) == 0.0);
  CHECK_THROWS(substring_cost(1, 0, 10, 16));
}

TEST_CASE("min_information worked examples") {
  const auto model = ProbabilityModel(corpus_of("c", "abab", 2), CountingMethod::NonOverlapping);
  const auto r = min_information(SymbolString::from_text("abab", 2), model);
  CHECK(r.bits == doctest::Approx(2.0).epsilon(1e-12));
  // ["abab"] and ["ab","ab"] both cost 2 bits; fewer segments wins.
  CHECK(r.cuts == std::vector<std::size_t>{4});
  REQUIRE(r.per_segment.size() == 1);
  CHECK(r.per_segment[0].start == 0);
  CHECK(r.per_segment[0].end == 4);

  const oracle::Str t{0, 1, 0, 1};
  CHECK(oracle::exhaustive_min_information(t, t, 4, 2, oracle::Method::NonOverlap) ==
        doctest::Approx(2.0).epsilon(1e-12));

  for (auto m : {CountingMethod::Overlapping, CountingMethod::NonOverlapping})
    CHECK(bits("a", "aa", m) == 0.0);
}

TEST_CASE("segmentation result is a consistent partition") {
  synth::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int sigma = 2 + static_cast<int>(rng.below(3));
    const SymbolString corpus(synth::random_symbols(rng, 1 + rng.below(60), sigma), sigma);
    const SymbolString test(synth::random_symbols(rng, 1 + rng.below(20), sigma), sigma);
    for (auto m : {CountingMethod::Overlapping, CountingMethod::NonOverlapping}) {
      const ProbabilityModel model({"c", corpus, corpus.size()}, m);
      const auto r = min_information(test, model);
      REQUIRE(std::isfinite(r.bits));
      REQUIRE(r.cuts.size() == r.per_segment.size());
      CHECK(r.cuts.back() == test.size());
      double sum = 0.0, singles = 0.0;
      std::size_t expect_start = 0;
      for (std::size_t k = 0; k < r.per_segment.size(); ++k) {
        const auto& s = r.per_segment[k];
        CHECK(s.start == expect_start);
        CHECK(s.end == r.cuts[k]);
        CHECK(s.end > s.start);
        CHECK(s.bits >= 0.0);
        CHECK(s.bits == doctest::Approx(model.substring_cost(
                                            test.view().subspan(s.start, s.end - s.start)))
                            .epsilon(1e-12));
        sum += s.bits;
        expect_start = s.end;
      }
      CHECK(std::abs(sum - r.bits) <= 1e-9);
      for (std::size_t i = 0; i < test.size(); ++i) singles += model.substring_cost(test.view().subspan(i, 1));
      CHECK(r.bits <= singles + 1e-9);
      // Determinism.
      const auto again = min_information(test, model);
      CHECK(again.cuts == r.cuts);
      CHECK(again.bits == r.bits);
    }
  }
}

TEST_CASE("dynamic programme equals exhaustive enumeration (small)") {
  synth::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int sigma = 2 + static_cast<int>(rng.below(3));
    const auto corpus = synth::random_symbols(rng, 1 + rng.below(40), sigma);
    const auto test = synth::random_symbols(rng, 1 + rng.below(9), sigma);
    for (auto m : {CountingMethod::Overlapping, CountingMethod::NonOverlapping}) {
      const ProbabilityModel model({"c", SymbolString(corpus, sigma), corpus.size()}, m);
      const double dp = min_information(SymbolString(test, sigma), model).bits;
      const double ex = oracle::exhaustive_min_information(
          test, corpus, corpus.size(), sigma,
          m == CountingMethod::Overlapping ? oracle::Method::Overlap : oracle::Method::NonOverlap);
      CHECK(std::abs(dp - ex) <= 1e-9);
    }
  }
}

TEST_CASE("max span restricts segment length") {
  const auto model = ProbabilityModel(corpus_of("c", "abab", 2), CountingMethod::NonOverlapping);
  const auto r = min_information(SymbolString::from_text("abab", 2), model, 2);
  CHECK(r.bits == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.cuts == std::vector<std::size_t>{2, 4});
}

TEST_CASE("counting method changes the information quantity") {
  // P("a") = 1/2; "aa" occurs 3 times overlapping, twice non-overlapping.
  const double over = bits("aa", "aaaabbbb", CountingMethod::Overlapping, 2);
  const double non = bits("aa", "aaaabbbb", CountingMethod::NonOverlapping, 2);
  CHECK(over == doctest::Approx(std::log2(8.0 / 3.0)).epsilon(1e-12));
  CHECK(non == doctest::Approx(2.0).epsilon(1e-12));

  // With corpus "aaa" the unit cost of "a" is zero, so the optimum is the
  // same under both methods even though the "aa" segment costs differ.
  const auto t = SymbolString::from_text("aa", 2);
  const ProbabilityModel o(corpus_of("c", "aaa", 2), CountingMethod::Overlapping);
  const ProbabilityModel n(corpus_of("c", "aaa", 2), CountingMethod::NonOverlapping);
  CHECK(o.substring_cost(t) == doctest::Approx(std::log2(1.5)).epsilon(1e-12));
  CHECK(n.substring_cost(t) == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  CHECK(min_information(t, o).bits == 0.0);
  CHECK(min_information(t, n).bits == 0.0);
}

TEST_CASE("separators in the test string are rejected") {
  const ProbabilityModel m(corpus_of("c", "abab", 2), CountingMethod::Overlapping);
  CHECK_THROWS_AS(min_information(SymbolString::from_text("a|b", 2), m), std::invalid_argument);
  CHECK_THROWS_AS(min_information(SymbolString::from_text("ab", 3), m), std::invalid_argument);
  CHECK_THROWS(min_information(SymbolString(), m));
}

TEST_CASE("classify picks the class string with minimum information") {
  const int sigma = 26;
  const std::vector<ClassCorpus> corpora{corpus_of("A", "zyxzyxzyx", sigma),
                                         corpus_of("B", "xyzxyzxyz", sigma),
                                         corpus_of("C", "aaaaaaaaa", sigma)};
  const auto test = SymbolString::from_text("xyz", sigma);
  for (auto m : {CountingMethod::Overlapping, CountingMethod::NonOverlapping}) {
    const auto c = classify(test, corpora, m);
    CHECK(c.predicted == "B");
    CHECK(c.bits_for("B") == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
    CHECK(c.bits_for("B") < c.bits_for("A"));
    CHECK(c.bits_for("A") < c.bits_for("C"));
  }

  const auto single = classify(test, {corpora[2]}, CountingMethod::Overlapping);
  CHECK(single.predicted == "C");

  const std::vector<ClassCorpus> twins{corpus_of("first", "xyz", sigma),
                                       corpus_of("second", "xyz", sigma)};
  const auto tie = classify(test, twins, CountingMethod::NonOverlapping);
  CHECK(tie.per_class_bits[0] == tie.per_class_bits[1]);
  CHECK(tie.predicted == "first");
}

TEST_CASE("classify_both matches per-method classify") {
  const auto ds = synth::two_class_periodic(8, 5, 16, 0.3);
  std::vector<std::shared_ptr<const CorpusIndex>> idx;
  std::vector<ClassCorpus> corpora;
  for (const auto& label : ds.classes) {
    corpora.push_back(build_class_corpus(ds.train, label));
    idx.push_back(std::make_shared<const CorpusIndex>(corpora.back()));
  }
  for (const auto& row : ds.test) {
    const auto both = classify_both(row.symbols, idx);
    const auto o = classify(row.symbols, corpora, CountingMethod::Overlapping);
    const auto n = classify(row.symbols, corpora, CountingMethod::NonOverlapping);
    CHECK(both.overlapping.predicted == o.predicted);
    CHECK(both.nonoverlapping.predicted == n.predicted);
    CHECK(both.overlapping.per_class_bits == o.per_class_bits);
    CHECK(both.nonoverlapping.per_class_bits == n.per_class_bits);
  }
}

TEST_CASE("segmentation json") {
  const auto test = SymbolString::from_text("abab", 2);
  const ProbabilityModel m(corpus_of("c", "abab", 2), CountingMethod::NonOverlapping);
  const auto j = nlohmann::json::parse(min_information(test, m, 2).to_json(test));
  CHECK(j["bits"].get<double>() == doctest::Approx(2.0));
  REQUIRE(j["segments"].size() == 2);
  CHECK(j["segments"][1]["text"] == "ab");
  CHECK(j["segments"][1]["start"] == 2);
  CHECK(j["segments"][1]["end"] == 4);
  CHECK(j["segments"][1]["bits"].get<double>() == doctest::Approx(1.0));
}
