"""Shortest-program search against a semantic table, and redundancy census."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .analysis import SemanticTable, canonical_key, semantic_table, shift_class, table_equal
from .enumeration import PruneLevel, enumerate_programs
from .lang import Program

WINDOW_CAP = 16


class SearchError(ValueError):
    pass


@dataclass
class SearchSpec:
    target: SemanticTable
    max_length: int
    level: PruneLevel = PruneLevel.FULL

    @classmethod
    def from_json(cls, data: dict, max_length: int, level="full") -> "SearchSpec":
        return cls(SemanticTable.from_json(data), max_length, PruneLevel.parse(level))


@dataclass
class SearchResult:
    program: Optional[Program]
    examined: dict = field(default_factory=dict)  # length -> candidates tabulated

    @property
    def found(self) -> bool:
        return self.program is not None

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "program": None if self.program is None else str(self.program),
            "length": None if self.program is None else str(self.program.length),
            "examined": {str(k): str(v) for k, v in self.examined.items()},
        }


def search_shortest(spec: SearchSpec, window_cap: int = WINDOW_CAP) -> SearchResult:
    """First program in (length, shortlex) order whose table matches.

    Only fixed-shift candidates are tabulated, so the answer is the shortest
    fixed-shift realization of the target.
    """
    target = spec.target
    if len(target.window) > window_cap:
        raise SearchError(f"target window has {len(target.window)} bits, cap is {window_cap}")
    if spec.max_length < 0:
        raise SearchError("max_length must be nonnegative")
    any_shift = target.all_bottom
    examined = {}
    for n in range(spec.max_length + 1):
        count = 0
        for p in enumerate_programs(n, spec.level):
            s = shift_class(p)
            if s is None or (not any_shift and s != target.shift):
                continue
            count += 1
            if table_equal(semantic_table(p), target):
                examined[n] = count
                return SearchResult(p, examined)
        examined[n] = count
    return SearchResult(None, examined)


@dataclass
class CensusRow:
    length: int
    programs: int  # fixed-shift programs of exactly this length
    cumulative_programs: int
    buckets: int  # distinct behaviours among programs of length <= this
    duplicate_mass: int
    duplicate_ratio: float

    def to_json(self) -> dict:
        # decimal strings, like every other count in JSON output
        return {k: (repr(v) if isinstance(v, float) else str(v)) for k, v in self.__dict__.items()}


def equivalence_census(n: int, level="full") -> list[CensusRow]:
    """Bucket fixed-shift programs of length <= n by behaviour."""
    level = PruneLevel.parse(level)
    buckets: Counter = Counter()
    rows = []
    total = 0
    for m in range(n + 1):
        here = 0
        for p in enumerate_programs(m, level):
            if shift_class(p) is None:
                continue
            here += 1
            buckets[canonical_key(semantic_table(p))] += 1
        total += here
        dup = total - len(buckets)
        rows.append(CensusRow(m, here, total, len(buckets), dup, dup / total if total else 0.0))
    return rows
