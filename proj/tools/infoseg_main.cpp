// infoseg: encode UCR datasets, count substrings, classify by minimum
// information quantity and compare the two counting methods.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "infoseg/pipeline.hpp"

namespace fs = std::filesystem;
using namespace infoseg;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

std::vector<CountingMethod> methods_from(const std::string& name) {
  if (name == "both") return {CountingMethod::Overlapping, CountingMethod::NonOverlapping};
  return {parse_method(name)};
}

std::string text_or_file(const std::string& arg) {
  std::error_code ec;
  if (!fs::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  std::string s = os.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::span<const Symbol> bytes(const std::string& s) {
  return {reinterpret_cast<const Symbol*>(s.data()), s.size()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-information string classification with overlapping and "
               "non-overlapping substring counts"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> datasets;
  std::string method = "both";
  std::string separator = "on";
  std::string delimiter = "auto";
  std::string out_dir = "out";

  auto add_encoding_flags = [&](CLI::App* cmd) {
    cmd->add_option("datasets", datasets, "dataset directories (*_TRAIN / *_TEST)")->required();
    cmd->add_option("--alphabet-size", config.alphabet_size, "symbols per series (2-26)")
        ->check(CLI::Range(kMinAlphabet, kMaxAlphabet));
    cmd->add_option("--word-length", config.word_length, "PAA word length; 0 keeps w = n");
    cmd->add_option("--separator", separator, "separator between training records")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--delimiter", delimiter, "input field delimiter")
        ->check(CLI::IsMember({"auto", "comma", "tab"}));
    cmd->add_option("--out", out_dir, "output directory");
  };

  auto* encode = app.add_subcommand("encode", "SAX-encode datasets and write class corpora");
  add_encoding_flags(encode);

  auto* classify = app.add_subcommand("classify", "classify test sets and write reports");
  add_encoding_flags(classify);
  classify->add_option("--method", method, "counting method")
      ->check(CLI::IsMember({"overlap", "nonoverlap", "both"}));
  classify->add_option("--workers", config.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  classify->add_option("--max-span", config.max_span, "longest substring considered; 0 = all");
  classify->add_option("--alpha", config.alpha, "significance level for the summary");

  std::string query, data;
  auto* count = app.add_subcommand("count", "count occurrences of a query in a data string");
  count->add_option("--method", method, "counting method")
      ->required()
      ->check(CLI::IsMember({"overlap", "nonoverlap", "both"}));
  count->add_option("--query", query, "query string")->required();
  count->add_option("--data", data, "data string, or a file holding it")->required();

  std::vector<std::string> reports;
  double alpha = 0.05;
  auto* compare = app.add_subcommand("compare", "McNemar exact test over summed report tallies");
  compare->add_option("reports", reports, "report.json files or directories")->required();
  compare->add_option("--alpha", alpha, "significance level");

  std::string report_out;
  auto* report = app.add_subcommand("report", "collect reports into one table (CSV)");
  report->add_option("reports", reports, "report.json files or directories")->required();
  report->add_option("--out", report_out, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    config.datasets.assign(datasets.begin(), datasets.end());
    config.use_separator = separator == "on";
    config.delimiter = parse_delimiter(delimiter);
    config.out_dir = out_dir;
    config.methods = methods_from(method);

    if (*encode) {
      for (const auto& dir : cmd_encode(config)) std::cout << dir.string() << '\n';
    } else if (*classify) {
      for (const auto& r : cmd_classify(config)) std::cout << r.to_csv_row() << '\n';
      std::cout << "wrote " << (config.out_dir / "summary.json").string() << '\n';
    } else if (*count) {
      if (query.empty()) throw std::invalid_argument("query must be non-empty");
      const std::string text = text_or_file(data);
      if (method == "both") {
        std::cout << "overlap " << count_overlapping(bytes(query), bytes(text)) << '\n'
                  << "nonoverlap " << count_nonoverlapping(bytes(query), bytes(text)) << '\n';
      } else {
        std::cout << count_occurrences(bytes(query), bytes(text), parse_method(method)) << '\n';
      }
    } else if (*compare) {
      std::vector<fs::path> paths(reports.begin(), reports.end());
      const auto s = cmd_compare(paths, alpha);
      std::cout << s.to_json() << '\n';
    } else if (*report) {
      std::vector<fs::path> paths(reports.begin(), reports.end());
      const std::string table = cmd_report(paths);
      if (report_out.empty()) {
        std::cout << table;
      } else {
        std::ofstream out(report_out);
        if (!out) throw DataError("cannot write " + report_out);
        out << table;
      }
    }
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
