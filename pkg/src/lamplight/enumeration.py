"""Enumeration and counting of programs at increasing levels of pruning.

Levels, each a subset of the previous one:

* ``naive``       every bracket-balanced string over ``t r l [ ]``
* ``canonical``   every maximal loop-free run is the canonical minimal word
                  of its group element
* ``dead-after``  no run between two consecutive loops fixes the head cell
                  (shift 0, head bit untouched); such a second loop is dead
* ``dead-inside`` additionally, a loop body that contains a loop does not
                  start with a run that flips its head cell at shift 0
* ``full``        additionally drops doubly nested loops, transient loops
                  that can be unrolled, and infinite loops other than ``[]``
"""
from __future__ import annotations

import csv
import enum
import io
from functools import lru_cache
from typing import Iterator, Sequence

from .group import canonical_word, classify, elements_of_norm, evaluate
from .lang import Loop, Program, parse
from .series import series_L, series_Lk0, series_Lk1


class PruneLevel(enum.IntEnum):
    NAIVE = 0
    CANONICAL = 1
    DEAD_AFTER = 2
    DEAD_INSIDE = 3
    FULL = 4

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def parse(cls, value) -> "PruneLevel":
        if isinstance(value, cls):
            return value
        key = str(value).strip().upper().replace("-", "_")
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown prune level {value!r}") from None


LEVELS = tuple(PruneLevel)


# -- loop-free segments --------------------------------------------------------


@lru_cache(maxsize=None)
def segments(n: int) -> tuple[tuple[str, int, bool], ...]:
    """Canonical words of norm ``n`` with (shift, toggles head cell)."""
    out = []
    for x in elements_of_norm(n):
        shift, toggles = classify(x)
        out.append((canonical_word(x), shift, toggles))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _seg_words(n: int, exclude: str) -> tuple[str, ...]:
    # exclude: "" (none), "00" or "01" -- drop that shift-0 class
    words = []
    for w, shift, toggles in segments(n):
        if exclude and shift == 0 and toggles == (exclude == "01"):
            continue
        words.append(w)
    return tuple(words)


def _run_class(run: str) -> tuple[int, bool]:
    return classify(evaluate(run))


# -- naive strings -----------------------------------------------------------


@lru_cache(maxsize=None)
def _naive(n: int) -> tuple[str, ...]:
    if n == 0:
        return ("",)
    out = [c + rest for c in "trl" for rest in _naive(n - 1)]
    for a in range(0, n - 1):
        for inner in _naive(a):
            loop = "[" + inner + "]"
            out.extend(loop + rest for rest in _naive(n - 2 - a))
    return tuple(out)


# -- grammar-driven strings -----------------------------------------------------


@lru_cache(maxsize=None)
def _body(n: int, level: PruneLevel, in_body: bool) -> tuple[str, ...]:
    """L + First Chain, with the first run restricted inside loop bodies."""
    out = list(_seg_words(n, ""))
    first_excl = "01" if in_body and level >= PruneLevel.DEAD_INSIDE else ""
    for a in range(0, n - 1):
        for first in _seg_words(a, first_excl):
            out.extend(first + rest for rest in _chain(n - a, level))
    return tuple(out)


@lru_cache(maxsize=None)
def _loops(n: int, level: PruneLevel) -> tuple[str, ...]:
    if n < 2:
        return ()
    return tuple("[" + b + "]" for b in _body(n - 2, level, True))


@lru_cache(maxsize=None)
def _chain(n: int, level: PruneLevel) -> tuple[str, ...]:
    """Y L | Y Mid Chain, where Y is a loop."""
    mid_excl = "00" if level >= PruneLevel.DEAD_AFTER else ""
    out = []
    for a in range(2, n + 1):
        for y in _loops(a, level):
            out.extend(y + s for s in _seg_words(n - a, ""))
            for b in range(0, n - a - 1):
                for m in _seg_words(b, mid_excl):
                    out.extend(y + m + rest for rest in _chain(n - a - b, level))
    return tuple(out)


def enumerate_texts(n: int, level="canonical") -> list[str]:
    """Program texts of length ``n`` at ``level``, in shortlex order."""
    level = PruneLevel.parse(level)
    if n < 0:
        raise ValueError("length must be nonnegative")
    if level == PruneLevel.NAIVE:
        texts = _naive(n)
    elif level == PruneLevel.FULL:
        texts = [t for t in _body(n, PruneLevel.DEAD_INSIDE, False) if not full_excluded(parse(t))]
    else:
        texts = _body(n, level, False)
    return sorted(texts)


def enumerate_programs(n: int, level="canonical") -> Iterator[Program]:
    for text in enumerate_texts(n, level):
        yield parse(text)


# -- counting ----------------------------------------------------------------


def count_programs(n: int, level="canonical") -> int:
    """Number of programs of length ``n``; dynamic programming where a
    grammar exists, enumeration at the full level."""
    level = PruneLevel.parse(level)
    if level == PruneLevel.FULL:
        return len(enumerate_texts(n, level))
    return _count_table(n, level)[n]


@lru_cache(maxsize=None)
def _count_table(n: int, level: PruneLevel) -> tuple[int, ...]:
    if level == PruneLevel.NAIVE:
        e = [1] + [0] * n
        for m in range(1, n + 1):
            e[m] = 3 * e[m - 1] + sum(e[a] * e[m - 2 - a] for a in range(0, m - 1))
        return tuple(e)
    seg = series_L(n).coeffs
    l00 = series_Lk0(0, n).coeffs
    l01 = series_Lk1(0, n).coeffs
    mid = [s - z for s, z in zip(seg, l00)] if level >= PruneLevel.DEAD_AFTER else seg
    first = [s - o for s, o in zip(seg, l01)] if level >= PruneLevel.DEAD_INSIDE else seg
    top = [0] * (n + 1)
    body = [0] * (n + 1)
    chain = [0] * (n + 1)
    loops = [0] * (n + 1)
    for m in range(n + 1):
        if m >= 2:
            loops[m] = body[m - 2]
        chain[m] = sum(
            loops[a] * (seg[m - a] + sum(mid[b] * chain[m - a - b] for b in range(0, m - a - 1)))
            for a in range(2, m + 1)
        )
        top[m] = seg[m] + sum(seg[a] * chain[m - a] for a in range(0, m - 1))
        body[m] = seg[m] + sum(first[a] * chain[m - a] for a in range(0, m - 1))
    return tuple(top)


# -- full-level pattern matching ------------------------------------------------


def _runs_and_loops(seq: Sequence) -> list:
    """Split into maximal runs (as strings) and Loop nodes, keeping empty runs
    between loops so that items alternate run, loop, run, ..., run."""
    out, run = [], []
    for node in seq:
        if isinstance(node, str):
            run.append(node)
        else:
            out.append("".join(run))
            out.append(node)
            run = []
    out.append("".join(run))
    return out


def _is(run: str, toggles: bool) -> bool:
    return _run_class(run) == (0, toggles)


def _transient_body(body: Program) -> bool:
    parts = _runs_and_loops(body)
    if len(parts) == 1:
        return _is(parts[0], True)
    return _is(parts[-1], False)


def full_exclusion_reason(p: Program) -> str | None:
    """Name of the first full-level exclusion pattern found in ``p``."""

    def visit(seq: Program, in_body: bool) -> str | None:
        parts = _runs_and_loops(seq)
        for k in range(1, len(parts), 2):
            loop = parts[k]
            body = loop.body
            inner = _runs_and_loops(body)
            if len(body) == 1 and isinstance(body[0], Loop):
                return "nested"
            if len(inner) == 1 and body and _is(inner[0], False):
                return "infinite"
            if len(inner) > 1 and _is(inner[-1], True):
                return "infinite"
            if k >= 3 and _is(parts[k - 1], True) and _transient_body(body):
                return "transient-after"
            if k == 1 and in_body and _is(parts[0], False) and _transient_body(body):
                return "transient-inside"
            found = visit(body, True)
            if found:
                return found
        return None

    return visit(p, False)


def full_excluded(p: Program) -> bool:
    return full_exclusion_reason(p) is not None


# -- growth table ------------------------------------------------------------


def growth_table(max_n: int, levels: Sequence = LEVELS) -> list[dict]:
    levels = [PruneLevel.parse(v) for v in levels]
    rows = []
    for n in range(max_n + 1):
        row = {"n": n}
        for lv in levels:
            row[lv.label] = count_programs(n, lv)
        rows.append(row)
    return rows


def growth_table_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
