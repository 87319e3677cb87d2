#include "infoseg/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace infoseg {

namespace fs = std::filesystem;

bool RunConfig::runs(CountingMethod m) const {
  return std::find(methods.begin(), methods.end(), m) != methods.end();
}

void RunConfig::validate() const {
  if (datasets.empty()) throw std::invalid_argument("at least one dataset path is required");
  check_alphabet_size(alphabet_size);
  if (methods.empty()) throw std::invalid_argument("no counting method selected");
  if (workers == 0) throw std::invalid_argument("worker count must be positive");
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << content;
}

std::vector<LabeledString> encode_split(const std::vector<TimeSeries>& rows,
                                        const SaxConfig& config, const Breakpoints& bp) {
  std::vector<LabeledString> out;
  out.reserve(rows.size());
  for (const auto& ts : rows) out.push_back({ts.label, sax_encode(ts.values, config, bp)});
  return out;
}

std::vector<std::string> sorted_labels(const std::vector<LabeledString>& rows) {
  std::set<std::string> labels;
  for (const auto& r : rows) labels.insert(r.label);
  return {labels.begin(), labels.end()};
}

EncodedDataset load_for_classification(const fs::path& path, const RunConfig& config) {
  if (is_encoded_dir(path)) return read_encoded(path);
  const Dataset ds = load_dataset_dir(path, config.delimiter);
  return encode_dataset(ds, {config.alphabet_size, config.word_length});
}

}  // namespace

EncodedDataset encode_dataset(const Dataset& dataset, const SaxConfig& config) {
  check_alphabet_size(config.alphabet_size);
  const std::size_t n = dataset.series_length();
  const std::size_t w = config.word_length == 0 ? n : config.word_length;
  if (w > n) {
    throw std::invalid_argument("word length " + std::to_string(w) +
                                " exceeds series length " + std::to_string(n));
  }
  std::vector<double> pool;
  pool.reserve(dataset.train.size() * w);
  for (const auto& ts : dataset.train) {
    const auto reduced = paa(ts.values, w);
    pool.insert(pool.end(), reduced.begin(), reduced.end());
  }
  EncodedDataset out;
  out.name = dataset.name;
  out.series_length = n;
  out.word_length = w;
  out.breakpoints = fit_breakpoints(pool, config.alphabet_size);
  out.train = encode_split(dataset.train, config, out.breakpoints);
  out.test = encode_split(dataset.test, config, out.breakpoints);
  out.classes = dataset.classes;
  return out;
}

void write_encoded(const EncodedDataset& data, const fs::path& dir, bool use_separator) {
  fs::create_directories(dir);
  std::ostringstream train, test, corpora;
  write_labeled_strings(train, data.train);
  write_labeled_strings(test, data.test);
  write_corpora(corpora, build_corpora(data, use_separator));
  write_file(dir / "train.txt", train.str());
  write_file(dir / "test.txt", test.str());
  write_file(dir / "corpora.txt", corpora.str());
  write_file(dir / "breakpoints.json", data.breakpoints.to_json() + "\n");
  const nlohmann::json meta{{"name", data.name},
                            {"alphabet_size", data.alphabet_size()},
                            {"series_length", data.series_length},
                            {"word_length", data.word_length}};
  write_file(dir / "meta.json", meta.dump(2) + "\n");
}

bool is_encoded_dir(const fs::path& dir) {
  return fs::is_regular_file(dir / "train.txt") && fs::is_regular_file(dir / "test.txt") &&
         fs::is_regular_file(dir / "breakpoints.json");
}

EncodedDataset read_encoded(const fs::path& dir) {
  EncodedDataset out;
  out.breakpoints = Breakpoints::from_json(read_file(dir / "breakpoints.json"));
  out.name = fs::absolute(dir).lexically_normal().filename().string();
  if (fs::is_regular_file(dir / "meta.json")) {
    try {
      const auto meta = nlohmann::json::parse(read_file(dir / "meta.json"));
      out.name = meta.value("name", out.name);
      out.series_length = meta.value("series_length", std::size_t{0});
      out.word_length = meta.value("word_length", std::size_t{0});
    } catch (const nlohmann::json::exception& e) {
      throw DataError((dir / "meta.json").string() + ": " + e.what());
    }
  }
  out.train = read_labeled_strings(dir / "train.txt", out.alphabet_size());
  out.test = read_labeled_strings(dir / "test.txt", out.alphabet_size());
  if (out.train.empty()) throw DataError(dir.string() + ": empty training set");
  if (out.word_length == 0) out.word_length = out.train.front().symbols.size();
  if (out.series_length == 0) out.series_length = out.word_length;
  out.classes = sorted_labels(out.train);
  return out;
}

std::vector<ClassCorpus> build_corpora(const EncodedDataset& data, bool use_separator) {
  std::vector<ClassCorpus> out;
  out.reserve(data.classes.size());
  for (const auto& label : data.classes)
    out.push_back(build_class_corpus(data.train, label, use_separator));
  return out;
}

ClassificationRun classify_dataset(const EncodedDataset& data, const RunConfig& config) {
  if (data.test.empty()) throw DataError(data.name + ": empty test set");
  if (data.classes.empty()) throw DataError(data.name + ": no classes in training data");

  std::vector<std::shared_ptr<const CorpusIndex>> indexes;
  for (auto& corpus : build_corpora(data, config.use_separator))
    indexes.push_back(std::make_shared<const CorpusIndex>(std::move(corpus)));

  const bool over = config.runs(CountingMethod::Overlapping);
  const bool non = config.runs(CountingMethod::NonOverlapping);
  std::vector<TestPrediction> predictions(data.test.size());

  auto classify_one = [&](std::size_t i) {
    const auto& row = data.test[i];
    const auto paired = classify_both(row.symbols, indexes, config.max_span);
    TestPrediction& p = predictions[i];
    p.truth = row.label;
    if (over) {
      p.overlap = paired.overlapping.predicted;
      p.overlap_bits = paired.overlapping.bits_for(p.overlap);
    }
    if (non) {
      p.nonoverlap = paired.nonoverlapping.predicted;
      p.nonoverlap_bits = paired.nonoverlapping.bits_for(p.nonoverlap);
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(
      config.workers, static_cast<unsigned>(data.test.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < data.test.size(); ++i) classify_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < data.test.size(); i = next++) {
          try {
            classify_one(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<std::string> truth, pred_over, pred_non;
  for (const auto& p : predictions) {
    truth.push_back(p.truth);
    if (over) pred_over.push_back(p.overlap);
    if (non) pred_non.push_back(p.nonoverlap);
  }
  ClassificationRun run;
  run.report = dataset_report({data.name, data.classes.size(), data.series_length}, truth,
                              pred_over, pred_non);
  run.predictions = std::move(predictions);
  return run;
}

std::vector<fs::path> cmd_encode(const RunConfig& config) {
  config.validate();
  std::vector<fs::path> written;
  for (const auto& path : config.datasets) {
    const Dataset ds = load_dataset_dir(path, config.delimiter);
    const EncodedDataset enc = encode_dataset(ds, {config.alphabet_size, config.word_length});
    const fs::path dir = config.out_dir / enc.name;
    write_encoded(enc, dir, config.use_separator);
    written.push_back(dir);
  }
  return written;
}

std::vector<DatasetReport> cmd_classify(const RunConfig& config) {
  config.validate();
  std::vector<DatasetReport> reports;
  nlohmann::json rows = nlohmann::json::array();
  FourCaseTally total;
  for (const auto& path : config.datasets) {
    const EncodedDataset data = load_for_classification(path, config);
    const ClassificationRun run = classify_dataset(data, config);
    const fs::path dir = config.out_dir / data.name;
    fs::create_directories(dir);
    write_file(dir / "report.csv",
               DatasetReport::csv_header() + "\n" + run.report.to_csv_row() + "\n");
    write_file(dir / "report.json", run.report.to_json() + "\n");

    std::ostringstream preds;
    preds.precision(17);
    preds << "index\ttruth\toverlap\tnonoverlap\toverlap_bits\tnonoverlap_bits\n";
    for (std::size_t i = 0; i < run.predictions.size(); ++i) {
      const auto& p = run.predictions[i];
      preds << i << '\t' << p.truth << '\t' << p.overlap << '\t' << p.nonoverlap << '\t'
            << p.overlap_bits << '\t' << p.nonoverlap_bits << '\n';
    }
    write_file(dir / "predictions.tsv", preds.str());

    rows.push_back(nlohmann::json::parse(run.report.to_json()));
    total += run.report.tally;
    reports.push_back(run.report);
  }

  nlohmann::json summary{{"datasets", rows}};
  if (config.runs(CountingMethod::Overlapping) && config.runs(CountingMethod::NonOverlapping))
    summary["mcnemar"] = nlohmann::json::parse(summarize(total, config.alpha).to_json());
  fs::create_directories(config.out_dir);
  write_file(config.out_dir / "summary.json", summary.dump(2) + "\n");
  return reports;
}

std::vector<fs::path> find_reports(const std::vector<fs::path>& paths) {
  std::vector<fs::path> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::recursive_directory_iterator(p))
        if (entry.is_regular_file() && entry.path().filename() == "report.json")
          out.push_back(entry.path());
    } else if (fs::is_regular_file(p)) {
      out.push_back(p);
    } else {
      throw DataError("no such report path: " + p.string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

McNemarSummary cmd_compare(const std::vector<fs::path>& report_paths, double alpha) {
  const auto files = find_reports(report_paths);
  if (files.empty()) throw DataError("no reports found");
  FourCaseTally total;
  for (const auto& f : files) {
    const DatasetReport r = DatasetReport::from_json(read_file(f));
    if (!(r.has_overlap && r.has_nonoverlap))
      throw DataError(f.string() + ": report does not cover both counting methods");
    total += r.tally;
  }
  return summarize(total, alpha);
}

std::string cmd_report(const std::vector<fs::path>& report_paths) {
  const auto files = find_reports(report_paths);
  if (files.empty()) throw DataError("no reports found");
  std::string out = DatasetReport::csv_header() + "\n";
  for (const auto& f : files) out += DatasetReport::from_json(read_file(f)).to_csv_row() + "\n";
  return out;
}

}  // namespace infoseg
