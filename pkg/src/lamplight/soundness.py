"""Exhaustive extensional check of :func:`lamplight.analysis.normalize`."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .analysis import normalize, shift_class, tables_equal
from .enumeration import enumerate_programs
from .fastrun import Compiled
from .lang import Halted, Tape


@dataclass
class SoundnessReport:
    programs: int = 0
    rewritten: int = 0
    fixed_checked: int = 0
    unbounded_checked: int = 0
    runs: int = 0
    violations: list = field(default_factory=list)
    length_increases: list = field(default_factory=list)
    not_idempotent: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.violations or self.length_increases or self.not_idempotent)

    def to_json(self) -> dict:
        out = {k: (str(v) if isinstance(v, int) else v) for k, v in self.__dict__.items()}
        out["ok"] = self.ok
        return out


def random_tapes(count: int, seed: int = 0, span: int = 6) -> list[Tape]:
    rng = random.Random(seed)
    return [
        Tape(frozenset(i for i in range(-span, span + 1) if rng.random() < 0.5), 0)
        for _ in range(count)
    ]


def _agree(a, b) -> bool:
    if isinstance(a, Halted) != isinstance(b, Halted):
        return False
    return not isinstance(a, Halted) or a.tape == b.tape


def check_normalize(max_length: int = 8, tapes: int = 100, fuel: int = 10**5,
                    seed: int = 0, level: str = "naive") -> SoundnessReport:
    """Compare every program of length <= max_length with its normal form.

    Fixed-shift programs are compared by semantic table; the others by
    running both on random tapes with a fuel bound.  Programs left
    unchanged by normalization are trivially sound and skipped.
    """
    report = SoundnessReport()
    sample = random_tapes(tapes, seed)
    normal_runs: dict[str, list] = {}
    for n in range(max_length + 1):
        for p in enumerate_programs(n, level):
            report.programs += 1
            q = normalize(p)
            if q.length > p.length:
                report.length_increases.append((str(p), str(q)))
            if normalize(q) != q:
                report.not_idempotent.append((str(p), str(q)))
            if q == p:
                continue
            report.rewritten += 1
            if shift_class(p) is not None:
                report.fixed_checked += 1
                if not tables_equal(p, q):
                    report.violations.append((str(p), str(q), "table"))
                continue
            report.unbounded_checked += 1
            key = str(q)
            if key not in normal_runs:
                cq = Compiled(q)
                normal_runs[key] = [cq.run(t, fuel) for t in sample]
            cp = Compiled(p)
            for t, b in zip(sample, normal_runs[key]):
                report.runs += 1
                a = cp.run(t, fuel)
                if not _agree(a, b):
                    report.violations.append((str(p), str(q), t.to_json()))
                    break
    return report
