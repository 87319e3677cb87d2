#include "infoseg/infoquant.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace infoseg {

double substring_cost(std::size_t freq, std::size_t span_length,
                      std::size_t effective_length, int sigma) {
  if (span_length == 0) throw std::invalid_argument("substring_cost: empty span");
  if (freq > 0) {
    return -std::log2(static_cast<double>(freq) / static_cast<double>(effective_length));
  }
  if (span_length == 1) {
    return std::log2(static_cast<double>(effective_length) + static_cast<double>(sigma));
  }
  return kImpossible;
}

CorpusIndex::CorpusIndex(ClassCorpus corpus)
    : corpus_(std::move(corpus)), index_(corpus_.corpus.symbols()) {
  if (corpus_.effective_length == 0)
    throw DataError("class '" + corpus_.label + "' has an empty corpus");
}

SpanCounts CorpusIndex::count_spans(const SymbolString& test, std::size_t max_span) const {
  if (test.alphabet_size() != alphabet_size())
    throw std::invalid_argument("test and corpus alphabets differ");
  if (test.has_separator())
    throw std::invalid_argument("test string must not contain separators");
  return count_all_spans(test.view(), index_, max_span);
}

ProbabilityModel::ProbabilityModel(std::shared_ptr<const CorpusIndex> index,
                                   CountingMethod method)
    : index_(std::move(index)), method_(method) {}

ProbabilityModel::ProbabilityModel(ClassCorpus corpus, CountingMethod method)
    : ProbabilityModel(std::make_shared<const CorpusIndex>(std::move(corpus)), method) {}

double ProbabilityModel::substring_cost(std::span<const Symbol> t) const {
  const std::size_t freq = method_ == CountingMethod::Overlapping
                               ? sa_count_overlapping(t, index_->suffix_array())
                               : count_nonoverlapping(t, index_->corpus().corpus.view());
  return cost(freq, t.size());
}

double ProbabilityModel::probability(std::span<const Symbol> t) const {
  return std::exp2(-substring_cost(t));
}

namespace {

struct Best {
  double bits = kImpossible;
  std::size_t segments = 0;
  std::size_t next = 0;
};

}  // namespace

SegmentationResult min_information(const SpanTable& counts, const ProbabilityModel& model) {
  const std::size_t n = counts.test_length();
  if (n == 0) throw std::invalid_argument("min_information: empty test string");

  // best[i] is the optimum for the suffix [i, n).
  std::vector<Best> best(n + 1);
  best[n] = {0.0, 0, n};
  for (std::size_t i = n; i-- > 0;) {
    Best& here = best[i];
    const std::size_t last = std::min(n, i + counts.max_span());
    for (std::size_t j = i + 1; j <= last; ++j) {
      if (!std::isfinite(best[j].bits)) continue;
      const double c = model.cost(counts.at(i, j), j - i);
      if (!std::isfinite(c)) continue;
      const double total = c + best[j].bits;
      const std::size_t segs = best[j].segments + 1;
      const bool better = total < here.bits - kBitsTolerance ||
                          (std::abs(total - here.bits) <= kBitsTolerance && segs < here.segments);
      if (better) here = {total, segs, j};
    }
  }

  SegmentationResult result;
  for (std::size_t i = 0; i < n; i = best[i].next) {
    const std::size_t j = best[i].next;
    const double c = model.cost(counts.at(i, j), j - i);
    result.per_segment.push_back({i, j, c});
    result.cuts.push_back(j);
    result.bits += c;
  }
  return result;
}

SegmentationResult min_information(const SymbolString& test, const ProbabilityModel& model,
                                   std::size_t max_span) {
  if (test.empty()) throw std::invalid_argument("min_information: empty test string");
  const auto counts = model.index().count_spans(test, max_span);
  return min_information(counts.get(model.method()), model);
}

std::string SegmentationResult::to_json(const SymbolString& test) const {
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& s : per_segment) {
    segs.push_back({{"text", test.substr(s.start, s.end - s.start).to_text()},
                    {"start", s.start},
                    {"end", s.end},
                    {"bits", s.bits}});
  }
  return nlohmann::json{{"bits", bits}, {"segments", segs}}.dump();
}

double Classification::bits_for(const std::string& label) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == label) return per_class_bits[i];
  throw std::out_of_range("unknown class: " + label);
}

namespace {

void pick_argmin(Classification& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.per_class_bits.size(); ++i)
    if (c.per_class_bits[i] < c.per_class_bits[best]) best = i;
  c.predicted = c.classes[best];
}

}  // namespace

Classification classify(const SymbolString& test, std::span<const ProbabilityModel> models,
                        std::size_t max_span) {
  if (models.empty()) throw std::invalid_argument("classify: no classes");
  Classification out;
  for (const auto& m : models) {
    out.classes.push_back(m.index().label());
    out.per_class_bits.push_back(min_information(test, m, max_span).bits);
  }
  pick_argmin(out);
  return out;
}

Classification classify(const SymbolString& test, const std::vector<ClassCorpus>& corpora,
                        CountingMethod method) {
  std::vector<ProbabilityModel> models;
  models.reserve(corpora.size());
  for (const auto& c : corpora) models.emplace_back(c, method);
  return classify(test, models);
}

PairedClassification classify_both(const SymbolString& test,
                                   std::span<const std::shared_ptr<const CorpusIndex>> classes,
                                   std::size_t max_span) {
  if (classes.empty()) throw std::invalid_argument("classify: no classes");
  PairedClassification out;
  for (const auto& idx : classes) {
    const SpanCounts counts = idx->count_spans(test, max_span);
    const ProbabilityModel over(idx, CountingMethod::Overlapping);
    const ProbabilityModel non(idx, CountingMethod::NonOverlapping);
    out.overlapping.classes.push_back(idx->label());
    out.overlapping.per_class_bits.push_back(min_information(counts.overlapping, over).bits);
    out.nonoverlapping.classes.push_back(idx->label());
    out.nonoverlapping.per_class_bits.push_back(
        min_information(counts.nonoverlapping, non).bits);
  }
  pick_argmin(out.overlapping);
  pick_argmin(out.nonoverlapping);
  return out;
}

}  // namespace infoseg
