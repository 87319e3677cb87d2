#include "infoseg/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace infoseg {

FourCaseTally& FourCaseTally::operator+=(const FourCaseTally& other) {
  case1 += other.case1;
  case2 += other.case2;
  case3 += other.case3;
  case4 += other.case4;
  return *this;
}

FourCaseTally tally_cases(const std::vector<PairedOutcome>& results) {
  FourCaseTally t;
  for (const auto& r : results) {
    const bool over = r.predicted_overlap == r.truth;
    const bool non = r.predicted_nonoverlap == r.truth;
    if (over && non) ++t.case1;
    else if (over) ++t.case2;
    else if (non) ++t.case3;
    else ++t.case4;
  }
  return t;
}

double mcnemar_exact(std::uint64_t b, std::uint64_t c) {
  const std::uint64_t n = b + c;
  if (n == 0) return 1.0;
  const std::uint64_t m = std::min(b, c);
  const double nd = static_cast<double>(n);
  auto log_choose = [&](std::uint64_t k) {
    const double kd = static_cast<double>(k);
    return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
  };
  // Terms grow with k up to n/2, so the last one is the largest; accumulate
  // from the smallest.
  const double peak = log_choose(m);
  double sum = 0.0;
  for (std::uint64_t k = 0; k <= m; ++k) sum += std::exp(log_choose(k) - peak);
  const double log_p = peak + std::log(sum) - nd * std::log(2.0);
  return std::min(1.0, std::exp(log_p));
}

double cdm(const SymbolString& x, const SymbolString& y, const SizeFunction& size_fn) {
  if (x.empty() || y.empty()) throw std::invalid_argument("cdm: empty input string");
  if (x.alphabet_size() != y.alphabet_size())
    throw std::invalid_argument("cdm: alphabet sizes differ");
  std::vector<Symbol> joined = x.symbols();
  joined.insert(joined.end(), y.symbols().begin(), y.symbols().end());
  const SymbolString xy(std::move(joined), x.alphabet_size());
  const double cx = size_fn(x), cy = size_fn(y), cxy = size_fn(xy);
  if (!(cx > 0.0) || !(cy > 0.0) || !(cxy > 0.0))
    throw std::domain_error("cdm: size function returned a non-positive value");
  return cxy / (cx + cy);
}

double length_size(const SymbolString& s) { return static_cast<double>(s.size()); }

double distinct_symbol_size(const SymbolString& s) {
  return static_cast<double>(std::set<Symbol>(s.symbols().begin(), s.symbols().end()).size());
}

std::string DatasetReport::csv_header() {
  return "name,classes,test_size,length,overlap_correct,nonoverlap_correct";
}

std::string DatasetReport::to_csv_row() const {
  if (has_overlap && has_nonoverlap) {
    if (correct_overlap != tally.overlap_correct() ||
        correct_nonoverlap != tally.nonoverlap_correct())
      throw std::logic_error("report totals disagree with the four-case tally");
  }
  std::ostringstream os;
  os << name << ',' << n_classes << ',' << n_test << ',' << series_length << ',';
  if (has_overlap) os << correct_overlap;
  os << ',';
  if (has_nonoverlap) os << correct_nonoverlap;
  return os.str();
}

std::string DatasetReport::to_json() const {
  nlohmann::json j{{"name", name},
                   {"classes", n_classes},
                   {"test_size", n_test},
                   {"length", series_length}};
  nlohmann::json methods = nlohmann::json::array();
  if (has_overlap) {
    methods.push_back("overlap");
    j["overlap_correct"] = correct_overlap;
  }
  if (has_nonoverlap) {
    methods.push_back("nonoverlap");
    j["nonoverlap_correct"] = correct_nonoverlap;
  }
  j["methods"] = methods;
  if (has_overlap && has_nonoverlap) {
    if (correct_overlap != tally.overlap_correct() ||
        correct_nonoverlap != tally.nonoverlap_correct())
      throw std::logic_error("report totals disagree with the four-case tally");
    j["tally"] = {{"case1", tally.case1},
                  {"case2", tally.case2},
                  {"case3", tally.case3},
                  {"case4", tally.case4}};
  }
  return j.dump(2);
}

DatasetReport DatasetReport::from_json(const std::string& text) {
  DatasetReport r;
  try {
    const auto j = nlohmann::json::parse(text);
    r.name = j.at("name").get<std::string>();
    r.n_classes = j.at("classes").get<std::size_t>();
    r.n_test = j.at("test_size").get<std::size_t>();
    r.series_length = j.at("length").get<std::size_t>();
    for (const auto& m : j.at("methods")) {
      if (m == "overlap") r.has_overlap = true;
      if (m == "nonoverlap") r.has_nonoverlap = true;
    }
    if (r.has_overlap) r.correct_overlap = j.at("overlap_correct").get<std::uint64_t>();
    if (r.has_nonoverlap) r.correct_nonoverlap = j.at("nonoverlap_correct").get<std::uint64_t>();
    if (j.contains("tally")) {
      const auto& t = j.at("tally");
      r.tally = {t.at("case1").get<std::uint64_t>(), t.at("case2").get<std::uint64_t>(),
                 t.at("case3").get<std::uint64_t>(), t.at("case4").get<std::uint64_t>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("report: ") + e.what());
  }
  return r;
}

DatasetReport dataset_report(const DatasetInfo& info, const std::vector<std::string>& truth,
                             const std::vector<std::string>& predicted_overlap,
                             const std::vector<std::string>& predicted_nonoverlap) {
  auto check = [&](const std::vector<std::string>& pred, const char* method) {
    if (!pred.empty() && pred.size() != truth.size()) {
      throw std::invalid_argument(std::string(method) + " predictions: expected " +
                                  std::to_string(truth.size()) + ", got " +
                                  std::to_string(pred.size()));
    }
  };
  check(predicted_overlap, "overlap");
  check(predicted_nonoverlap, "nonoverlap");

  DatasetReport r;
  r.name = info.name;
  r.n_classes = info.n_classes;
  r.series_length = info.series_length;
  r.n_test = truth.size();
  r.has_overlap = !predicted_overlap.empty() || truth.empty();
  r.has_nonoverlap = !predicted_nonoverlap.empty() || truth.empty();
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (r.has_overlap && predicted_overlap[i] == truth[i]) ++r.correct_overlap;
    if (r.has_nonoverlap && predicted_nonoverlap[i] == truth[i]) ++r.correct_nonoverlap;
  }
  if (r.has_overlap && r.has_nonoverlap) {
    std::vector<PairedOutcome> paired;
    paired.reserve(truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i)
      paired.push_back({truth[i], predicted_overlap[i], predicted_nonoverlap[i]});
    r.tally = tally_cases(paired);
  }
  return r;
}

std::string McNemarSummary::to_json() const {
  std::ostringstream os;
  os << "{\"b\":" << b << ",\"c\":" << c << ",\"p\":" << std::scientific
     << std::setprecision(6) << p << std::defaultfloat << ",\"alpha\":" << alpha
     << ",\"significant\":" << (significant ? "true" : "false") << '}';
  return os.str();
}

McNemarSummary summarize(const FourCaseTally& tally, double alpha) {
  McNemarSummary s;
  s.b = tally.case2;
  s.c = tally.case3;
  s.p = mcnemar_exact(s.b, s.c);
  s.alpha = alpha;
  s.significant = s.p < alpha;
  return s;
}

}  // namespace infoseg
