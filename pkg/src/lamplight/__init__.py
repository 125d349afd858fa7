"""Programs over the lamplighter group: group algebra, generating
functions, enumeration with equivalence pruning, and program search."""

__version__ = "0.1.0"

from .group import GroupElement, canonical_word, classify, compose, elements_of_norm, evaluate, inverse, norm, word_distance
from .lang import Loop, Program, Tape, parse, run
from .series import Series, ps_parry, series_L, solve_E_canonical, solve_E_naive
from .analysis import normalize, semantic_table, shift_class, tables_equal
from .enumeration import PruneLevel, count_programs, enumerate_programs
from .search import SearchSpec, search_shortest

__all__ = [
    "GroupElement", "canonical_word", "classify", "compose", "elements_of_norm", "evaluate",
    "inverse", "norm", "word_distance",
    "Loop", "Program", "Tape", "parse", "run",
    "Series", "ps_parry", "series_L", "solve_E_canonical", "solve_E_naive",
    "normalize", "semantic_table", "shift_class", "tables_equal",
    "PruneLevel", "count_programs", "enumerate_programs",
    "SearchSpec", "search_shortest",
]
