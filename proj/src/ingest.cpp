#include "infoseg/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace infoseg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delim, start);
    fields.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

double parse_value(std::string_view field, const std::string& source, std::size_t line_no) {
  double value = 0.0;
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw DataError(source + ":" + std::to_string(line_no) + ": non-numeric value '" +
                    std::string(field) + "'");
  }
  return value;
}

}  // namespace

Delimiter parse_delimiter(std::string_view name) {
  if (name == "auto") return Delimiter::Auto;
  if (name == "comma" || name == ",") return Delimiter::Comma;
  if (name == "tab" || name == "\t") return Delimiter::Tab;
  throw std::invalid_argument("unknown delimiter: " + std::string(name));
}

std::vector<TimeSeries> parse_ucr_stream(std::istream& in, const std::string& source,
                                         Delimiter delimiter) {
  std::vector<TimeSeries> out;
  char delim = delimiter == Delimiter::Tab ? '\t' : ',';
  bool decided = delimiter != Delimiter::Auto;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (!decided) {
      delim = body.find('\t') != std::string_view::npos ? '\t' : ',';
      decided = true;
    }
    const auto fields = split(body, delim);
    if (fields.size() < 2) {
      throw DataError(source + ":" + std::to_string(line_no) +
                      ": expected a label followed by at least one value");
    }
    TimeSeries ts;
    ts.label = std::string(fields.front());
    ts.values.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i)
      ts.values.push_back(parse_value(fields[i], source, line_no));
    out.push_back(std::move(ts));
  }
  if (out.empty()) throw DataError(source + ": no records");
  return out;
}

std::vector<TimeSeries> parse_ucr_file(const std::filesystem::path& path, Delimiter delimiter) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  return parse_ucr_stream(in, path.string(), delimiter);
}

std::string format_ucr_line(const TimeSeries& series, char delimiter) {
  std::ostringstream os;
  os.precision(17);
  os << series.label;
  for (double v : series.values) os << delimiter << v;
  return os.str();
}

std::size_t Dataset::series_length() const {
  if (!train.empty()) return train.front().values.size();
  return test.empty() ? 0 : test.front().values.size();
}

Dataset make_dataset(std::string name, std::vector<TimeSeries> train,
                     std::vector<TimeSeries> test) {
  Dataset ds{std::move(name), std::move(train), std::move(test), {}};
  if (ds.train.empty()) throw DataError(ds.name + ": empty training set");
  const std::size_t n = ds.train.front().values.size();
  auto check = [&](const std::vector<TimeSeries>& rows, const char* part) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].values.size() != n) {
        throw DataError(ds.name + ": " + part + " record " + std::to_string(i + 1) +
                        " has length " + std::to_string(rows[i].values.size()) +
                        ", expected " + std::to_string(n));
      }
    }
  };
  check(ds.train, "train");
  check(ds.test, "test");

  std::set<std::string> labels;
  for (const auto& ts : ds.train) labels.insert(ts.label);
  ds.classes.assign(labels.begin(), labels.end());
  for (const auto& ts : ds.test) {
    if (!labels.count(ts.label)) {
      std::cerr << "warning: " << ds.name << ": test label '" << ts.label
                << "' does not occur in training data\n";
      labels.insert(ts.label);  // warn once per label
    }
  }
  return ds;
}

Dataset load_dataset_dir(const std::filesystem::path& dir, Delimiter delimiter) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DataError("not a dataset directory: " + dir.string());
  fs::path train_path, test_path;
  std::vector<fs::path> entries;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) entries.push_back(entry.path());
  std::sort(entries.begin(), entries.end());
  for (const auto& p : entries) {
    const auto fname = p.filename().string();
    if (train_path.empty() && fname.find("_TRAIN") != std::string::npos) train_path = p;
    if (test_path.empty() && fname.find("_TEST") != std::string::npos) test_path = p;
  }
  if (train_path.empty() || test_path.empty())
    throw DataError(dir.string() + ": expected *_TRAIN and *_TEST files");
  auto name = fs::absolute(dir).lexically_normal().filename().string();
  if (name.empty()) name = fs::absolute(dir).lexically_normal().parent_path().filename().string();
  return make_dataset(name, parse_ucr_file(train_path, delimiter),
                      parse_ucr_file(test_path, delimiter));
}

ClassCorpus build_class_corpus(const std::vector<LabeledString>& encoded_train,
                               const std::string& class_label, bool use_separator) {
  std::vector<Symbol> symbols;
  std::size_t effective = 0;
  int sigma = 0;
  for (const auto& row : encoded_train) {
    if (row.label != class_label) continue;
    if (sigma == 0) {
      sigma = row.symbols.alphabet_size();
    } else if (sigma != row.symbols.alphabet_size()) {
      throw DataError("class '" + class_label + "': mixed alphabet sizes");
    }
    if (row.symbols.has_separator())
      throw DataError("class '" + class_label + "': training string contains a separator");
    if (use_separator && !symbols.empty()) symbols.push_back(static_cast<Symbol>(sigma));
    symbols.insert(symbols.end(), row.symbols.symbols().begin(), row.symbols.symbols().end());
    effective += row.symbols.size();
  }
  if (sigma == 0) throw DataError("class '" + class_label + "' has no training strings");
  return ClassCorpus{class_label, SymbolString(std::move(symbols), sigma), effective};
}

void write_corpora(std::ostream& out, const std::vector<ClassCorpus>& corpora) {
  for (const auto& c : corpora) out << c.label << '\t' << c.corpus.to_text() << '\n';
}

void write_labeled_strings(std::ostream& out, const std::vector<LabeledString>& rows) {
  for (const auto& r : rows) out << r.label << '\t' << r.symbols.to_text() << '\n';
}

std::vector<LabeledString> read_labeled_strings(const std::filesystem::path& path,
                                                int alphabet_size) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  std::vector<LabeledString> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": missing tab");
    try {
      rows.push_back({line.substr(0, tab),
                      SymbolString::from_text(trim(std::string_view(line).substr(tab + 1)),
                                              alphabet_size)});
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace infoseg
