#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "infoseg/counting.hpp"
#include "infoseg/evaluate.hpp"
#include "infoseg/infoquant.hpp"
#include "infoseg/ingest.hpp"
#include "infoseg/sax.hpp"

namespace infoseg {

struct RunConfig {
  std::vector<std::filesystem::path> datasets;
  int alphabet_size = 16;
  std::size_t word_length = 0;  // 0: one symbol per sample
  std::vector<CountingMethod> methods{CountingMethod::Overlapping,
                                      CountingMethod::NonOverlapping};
  bool use_separator = true;
  std::filesystem::path out_dir = "out";
  unsigned workers = 1;
  std::size_t max_span = 0;  // 0: unbounded
  double alpha = 0.05;
  Delimiter delimiter = Delimiter::Auto;

  bool runs(CountingMethod m) const;
  void validate() const;
};

struct EncodedDataset {
  std::string name;
  std::size_t series_length = 0;
  std::size_t word_length = 0;
  Breakpoints breakpoints;
  std::vector<LabeledString> train;
  std::vector<LabeledString> test;
  std::vector<std::string> classes;

  int alphabet_size() const { return breakpoints.alphabet_size(); }
};

/// Fits breakpoints on the pooled (PAA-reduced) training values and encodes
/// both splits with them.
EncodedDataset encode_dataset(const Dataset& dataset, const SaxConfig& config);

/// Layout: train.txt, test.txt ("label<TAB>symbols"), breakpoints.json,
/// corpora.txt, meta.json.
void write_encoded(const EncodedDataset& data, const std::filesystem::path& dir,
                   bool use_separator);
EncodedDataset read_encoded(const std::filesystem::path& dir);
bool is_encoded_dir(const std::filesystem::path& dir);

std::vector<ClassCorpus> build_corpora(const EncodedDataset& data, bool use_separator);

struct TestPrediction {
  std::string truth;
  std::string overlap;     // empty when the method was not run
  std::string nonoverlap;
  double overlap_bits = 0.0;
  double nonoverlap_bits = 0.0;
};

struct ClassificationRun {
  DatasetReport report;
  std::vector<TestPrediction> predictions;
};

/// Classifies every test string; results are in test-file order regardless
/// of the worker count.
ClassificationRun classify_dataset(const EncodedDataset& data, const RunConfig& config);

// Command implementations behind the CLI. Each returns what it wrote or
// computed so tests can drive them without a process boundary.
std::vector<std::filesystem::path> cmd_encode(const RunConfig& config);
std::vector<DatasetReport> cmd_classify(const RunConfig& config);
McNemarSummary cmd_compare(const std::vector<std::filesystem::path>& report_paths,
                           double alpha = 0.05);
/// Header plus one CSV row per report found.
std::string cmd_report(const std::vector<std::filesystem::path>& report_paths);

/// Expands directories into the report.json files below them, sorted.
std::vector<std::filesystem::path> find_reports(
    const std::vector<std::filesystem::path>& paths);

}  // namespace infoseg
