"""The lamplighter group (Z/2Z) wr Z.

An element is a pair ``(lamps, shift)``: a finite set of lit lamp positions
and the final lamplighter position.  Composition follows the usual
semidirect-product rule, with the second factor's lamps translated by the
first factor's shift.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

GENERATORS = "trl"


@dataclass(frozen=True)
class GroupElement:
    lamps: frozenset = frozenset()
    shift: int = 0

    def __post_init__(self):
        if not isinstance(self.lamps, frozenset):
            object.__setattr__(self, "lamps", frozenset(self.lamps))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)

    def __repr__(self):
        return f"GroupElement({sorted(self.lamps)}, {self.shift})"

    @property
    def low(self) -> int:
        """Leftmost lit lamp, 0 when nothing is lit."""
        return min(self.lamps) if self.lamps else 0

    @property
    def high(self) -> int:
        """Rightmost lit lamp, 0 when nothing is lit."""
        return max(self.lamps) if self.lamps else 0

    def to_json(self) -> dict:
        return {"lamps": sorted(self.lamps), "shift": self.shift}

    @classmethod
    def from_json(cls, data) -> "GroupElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(frozenset(int(p) for p in data.get("lamps", [])), int(data.get("shift", 0)))


IDENTITY = GroupElement()
T = GroupElement(frozenset({0}), 0)
R = GroupElement(frozenset(), 1)
L = GroupElement(frozenset(), -1)

LETTERS = {"t": T, "r": R, "l": L}


def compose(x: GroupElement, y: GroupElement) -> GroupElement:
    moved = frozenset(p + x.shift for p in y.lamps)
    return GroupElement(x.lamps ^ moved, x.shift + y.shift)


def inverse(x: GroupElement) -> GroupElement:
    return GroupElement(frozenset(p - x.shift for p in x.lamps), -x.shift)


def norm(x: GroupElement) -> int:
    """Word length of ``x`` with respect to the generators t, r, l."""
    a, lo, hi, b = x.lamps, x.low, x.high, x.shift
    if b >= 0:
        travel = abs(lo) + abs(hi - b)
    else:
        travel = abs(hi) + abs(lo - b)
    return len(a) + hi - lo + travel


def word_distance(g: GroupElement, h: GroupElement) -> int:
    return norm(compose(inverse(g), h))


def evaluate(word: Iterable[str]) -> GroupElement:
    lamps = set()
    pos = 0
    for c in word:
        if c == "t":
            lamps ^= {pos}
        elif c == "r":
            pos += 1
        elif c == "l":
            pos -= 1
        else:
            raise ValueError(f"not a generator: {c!r}")
    return GroupElement(frozenset(lamps), pos)


def mirror(x: GroupElement) -> GroupElement:
    """Image under the automorphism exchanging r and l."""
    return GroupElement(frozenset(-p for p in x.lamps), -x.shift)


def _swap_rl(word: str) -> str:
    return word.translate(str.maketrans("rl", "lr"))


def _route_word(x: GroupElement) -> str:
    # Route for shift >= 0: dip left to the leftmost lamp, sweep right to the
    # shift, overshoot to the rightmost lamp and come back.
    lit, b = x.lamps, x.shift
    i = max(0, -x.low)
    k = max(0, x.high - b)
    out = []
    if i:
        out.append("l" * i)
        for p in range(-i, 0):
            if p in lit:
                out.append("t")
            out.append("r")
    for p in range(0, b + 1):
        if p in lit:
            out.append("t")
        if p < b:
            out.append("r")
    if k:
        out.append("r" * k)
        for p in range(b + k, b, -1):
            if p in lit:
                out.append("t")
            out.append("l")
    return "".join(out)


def canonical_word(x: GroupElement) -> str:
    """The minimal word for ``x`` along the left-first (or mirrored) route."""
    if x.shift >= 0:
        return _route_word(x)
    return _swap_rl(_route_word(mirror(x)))


def _nonneg_elements_of_norm(n: int, positive: bool) -> Iterator[GroupElement]:
    # Stage lengths: 2i moves left-and-back, j moves to the shift, 2k moves
    # right-and-back; the remaining letters are toggles.
    for i in range(0, n // 2 + 1):
        for k in range(0, (n - 2 * i) // 2 + 1):
            for j in range(1 if positive else 0, n - 2 * i - 2 * k + 1):
                toggles = n - 2 * i - 2 * k - j
                forced = []
                optional = list(range(0, j + 1))
                if i:
                    forced.append(-i)
                    optional.extend(range(-i + 1, 0))
                if k:
                    forced.append(j + k)
                    optional.extend(range(j + 1, j + k))
                free = toggles - len(forced)
                if free < 0 or free > len(optional):
                    continue
                for chosen in combinations(optional, free):
                    yield GroupElement(frozenset(forced).union(chosen), j)


def elements_of_norm(n: int) -> set[GroupElement]:
    """All elements of word norm ``n``, built from the three-stage route."""
    if n < 0:
        raise ValueError("norm must be nonnegative")
    out = set(_nonneg_elements_of_norm(n, positive=False))
    out.update(mirror(x) for x in _nonneg_elements_of_norm(n, positive=True))
    return out


def classify(x: GroupElement) -> tuple[int, bool]:
    """(shift, whether the lamp under the final lamplighter position is lit)."""
    return x.shift, x.shift in x.lamps

