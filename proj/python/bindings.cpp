#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "infoseg/counting.hpp"
#include "infoseg/evaluate.hpp"
#include "infoseg/infoquant.hpp"
#include "infoseg/ingest.hpp"
#include "infoseg/sax.hpp"

namespace py = pybind11;
using namespace infoseg;

namespace {

std::span<const Symbol> bytes(const std::string& s) {
  return {reinterpret_cast<const Symbol*>(s.data()), s.size()};
}

py::dict segmentation_dict(const SegmentationResult& r, const SymbolString& test) {
  py::list segments;
  for (const auto& s : r.per_segment) {
    py::dict d;
    d["text"] = test.substr(s.start, s.end - s.start).to_text();
    d["start"] = s.start;
    d["end"] = s.end;
    d["bits"] = s.bits;
    segments.append(d);
  }
  py::dict out;
  out["bits"] = r.bits;
  out["cuts"] = r.cuts;
  out["segments"] = segments;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Substring counting, SAX encoding and minimum-information classification";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  py::enum_<CountingMethod>(m, "CountingMethod")
      .value("Overlapping", CountingMethod::Overlapping)
      .value("NonOverlapping", CountingMethod::NonOverlapping);

  py::class_<SymbolString>(m, "SymbolString")
      .def(py::init([](const std::string& text, int alphabet_size) {
             return SymbolString::from_text(text, alphabet_size);
           }),
           py::arg("text"), py::arg("alphabet_size"))
      .def_property_readonly("text", &SymbolString::to_text)
      .def_property_readonly("alphabet_size", &SymbolString::alphabet_size)
      .def_property_readonly("symbols", &SymbolString::symbols)
      .def("__len__", &SymbolString::size)
      .def("__str__", &SymbolString::to_text)
      .def("__eq__", [](const SymbolString& a, const SymbolString& b) { return a == b; })
      .def("__repr__", [](const SymbolString& s) {
        return "SymbolString('" + s.to_text() + "', " + std::to_string(s.alphabet_size()) + ")";
      });

  // Raw string counting works on bytes, like the `count` CLI command.
  m.def("count_overlapping",
        [](const std::string& q, const std::string& d) { return count_overlapping(bytes(q), bytes(d)); },
        py::arg("query"), py::arg("data"));
  m.def("count_nonoverlapping",
        [](const std::string& q, const std::string& d) {
          return count_nonoverlapping(bytes(q), bytes(d));
        },
        py::arg("query"), py::arg("data"));

  py::class_<SuffixArray>(m, "SuffixArray")
      .def(py::init([](const std::string& text) { return build_suffix_array(bytes(text)); }),
           py::arg("text"))
      .def_property_readonly("positions", &SuffixArray::positions)
      .def("count_overlapping",
           [](const SuffixArray& sa, const std::string& q) {
             return sa_count_overlapping(bytes(q), sa);
           },
           py::arg("query"));

  m.def("paa", [](const std::vector<double>& values, std::size_t w) { return paa(values, w); },
        py::arg("values"), py::arg("w"));
  m.def("fit_breakpoints",
        [](const std::vector<double>& pool, int sigma) { return fit_breakpoints(pool, sigma).bounds; },
        py::arg("pool"), py::arg("sigma"));
  m.def("quantize",
        [](const std::vector<double>& values, const std::vector<double>& bounds) {
          return quantize(values, Breakpoints{bounds});
        },
        py::arg("values"), py::arg("bounds"));

  py::class_<ClassCorpus>(m, "ClassCorpus")
      .def_readonly("label", &ClassCorpus::label)
      .def_readonly("corpus", &ClassCorpus::corpus)
      .def_readonly("effective_length", &ClassCorpus::effective_length);

  m.def("build_class_corpus",
        [](const std::vector<std::pair<std::string, SymbolString>>& rows,
           const std::string& label, bool use_separator) {
          std::vector<LabeledString> encoded;
          for (const auto& [l, s] : rows) encoded.push_back({l, s});
          return build_class_corpus(encoded, label, use_separator);
        },
        py::arg("encoded_train"), py::arg("class_label"), py::arg("use_separator") = true);

  m.def("substring_cost",
        [](std::size_t freq, std::size_t length, std::size_t effective_length, int sigma) {
          return substring_cost(freq, length, effective_length, sigma);
        },
        py::arg("freq"), py::arg("length"), py::arg("effective_length"), py::arg("sigma"));

  m.def("min_information",
        [](const SymbolString& test, const ClassCorpus& corpus, CountingMethod method,
           std::size_t max_span) {
          const ProbabilityModel model(corpus, method);
          return segmentation_dict(min_information(test, model, max_span), test);
        },
        py::arg("test"), py::arg("corpus"), py::arg("method"), py::arg("max_span") = 0);

  m.def("classify",
        [](const SymbolString& test, const std::vector<ClassCorpus>& corpora,
           CountingMethod method) {
          const auto c = classify(test, corpora, method);
          py::dict bits;
          for (std::size_t i = 0; i < c.classes.size(); ++i) bits[py::str(c.classes[i])] = c.per_class_bits[i];
          return py::make_tuple(c.predicted, bits);
        },
        py::arg("test"), py::arg("corpora"), py::arg("method"));

  m.def("tally_cases",
        [](const std::vector<std::tuple<std::string, std::string, std::string>>& rows) {
          std::vector<PairedOutcome> outcomes;
          for (const auto& [t, o, n] : rows) outcomes.push_back({t, o, n});
          const auto t = tally_cases(outcomes);
          return py::make_tuple(t.case1, t.case2, t.case3, t.case4);
        },
        py::arg("results"));
  m.def("mcnemar_exact", &mcnemar_exact, py::arg("b"), py::arg("c"));
  m.def("cdm", &cdm, py::arg("x"), py::arg("y"), py::arg("size_fn"));
}
