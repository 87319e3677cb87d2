#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "infoseg/symbols.hpp"

namespace infoseg {

struct TimeSeries {
  std::string label;
  std::vector<double> values;
};

struct Dataset {
  std::string name;
  std::vector<TimeSeries> train;
  std::vector<TimeSeries> test;
  /// Sorted distinct training labels.
  std::vector<std::string> classes;

  std::size_t series_length() const;
};

enum class Delimiter { Auto, Comma, Tab };

Delimiter parse_delimiter(std::string_view name);

/// Reads a UCR-style text file: one record per line, label first, samples
/// after. Auto mode picks tab if the first record contains one, else comma.
/// Blank lines are skipped. Errors carry the file name and line number.
std::vector<TimeSeries> parse_ucr_file(const std::filesystem::path& path,
                                       Delimiter delimiter = Delimiter::Auto);
std::vector<TimeSeries> parse_ucr_stream(std::istream& in, const std::string& source,
                                         Delimiter delimiter = Delimiter::Auto);

std::string format_ucr_line(const TimeSeries& series, char delimiter = ',');

/// Assembles a dataset, derives the class list and checks that every series
/// has the same length. Test labels unknown to training produce a warning on
/// stderr, not an error.
Dataset make_dataset(std::string name, std::vector<TimeSeries> train,
                     std::vector<TimeSeries> test);

/// Loads `<dir>/*_TRAIN*` and `<dir>/*_TEST*`; the dataset name is the
/// directory name.
Dataset load_dataset_dir(const std::filesystem::path& dir,
                         Delimiter delimiter = Delimiter::Auto);

struct LabeledString {
  std::string label;
  SymbolString symbols;
};

struct ClassCorpus {
  std::string label;
  SymbolString corpus;
  std::size_t effective_length = 0;
};

/// Concatenates, in input order, every training string carrying
/// `class_label`, optionally with a separator between consecutive records.
ClassCorpus build_class_corpus(const std::vector<LabeledString>& encoded_train,
                               const std::string& class_label, bool use_separator = true);

/// One corpus per line, "label<TAB>text".
void write_corpora(std::ostream& out, const std::vector<ClassCorpus>& corpora);

/// Same line format as write_corpora, used for encoded train/test files.
void write_labeled_strings(std::ostream& out, const std::vector<LabeledString>& rows);
std::vector<LabeledString> read_labeled_strings(const std::filesystem::path& path,
                                                int alphabet_size);

}  // namespace infoseg
