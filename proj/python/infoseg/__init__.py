"""Minimum-information string classification with overlapping and
non-overlapping substring counts."""

from ._core import (
    ClassCorpus,
    CountingMethod,
    DataError,
    SuffixArray,
    SymbolString,
    build_class_corpus,
    cdm,
    classify,
    count_nonoverlapping,
    count_overlapping,
    fit_breakpoints,
    mcnemar_exact,
    min_information,
    paa,
    quantize,
    substring_cost,
    tally_cases,
)

__all__ = [
    "ClassCorpus",
    "CountingMethod",
    "DataError",
    "SuffixArray",
    "SymbolString",
    "build_class_corpus",
    "cdm",
    "classify",
    "count_nonoverlapping",
    "count_overlapping",
    "fit_breakpoints",
    "mcnemar_exact",
    "min_information",
    "paa",
    "quantize",
    "substring_cost",
    "tally_cases",
]
