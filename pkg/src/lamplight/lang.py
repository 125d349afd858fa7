"""Parser, printer and interpreter for programs over ``t r l [ ]``.

``t`` toggles the bit under the head, ``r``/``l`` move the head, and
``[E]`` repeats ``E`` while the bit under the head is 1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Union

from .group import GroupElement, evaluate

PRIMITIVES = frozenset("trl")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at index {position}")
        self.position = position


class Program(tuple):
    """A sequence of nodes; each node is ``'t'``, ``'r'``, ``'l'`` or a Loop."""

    __slots__ = ()

    def __new__(cls, items: Iterable = ()):
        return super().__new__(cls, items)

    def __str__(self):
        return "".join(node if isinstance(node, str) else str(node) for node in self)

    def __repr__(self):
        return f"Program({str(self)!r})"

    def __add__(self, other):
        return Program(tuple(self) + tuple(other))

    def __getitem__(self, key):
        out = super().__getitem__(key)
        return Program(out) if isinstance(key, slice) else out

    @property
    def length(self) -> int:
        """Primitives count 1, each bracket pair counts 2."""
        return sum(1 if isinstance(n, str) else n.length for n in self)

    def is_loop_free(self) -> bool:
        return all(isinstance(n, str) for n in self)


@dataclass(frozen=True)
class Loop:
    body: Program = field(default_factory=Program)

    def __str__(self):
        return f"[{self.body}]"

    @property
    def length(self) -> int:
        return self.body.length + 2


Node = Union[str, Loop]


def parse(text: str) -> Program:
    stack: list[tuple[int, list]] = []
    current: list = []
    for i, c in enumerate(text):
        if c in PRIMITIVES:
            current.append(c)
        elif c == "[":
            stack.append((i, current))
            current = []
        elif c == "]":
            if not stack:
                raise ParseError("unmatched ']'", i)
            _, outer = stack.pop()
            outer.append(Loop(Program(current)))
            current = outer
        elif c.isspace():
            continue
        else:
            raise ParseError(f"illegal character {c!r}", i)
    if stack:
        raise ParseError("unclosed bracket", stack[-1][0])
    return Program(current)


def to_text(p: Program) -> str:
    return str(p)


def as_program(p) -> Program:
    return p if isinstance(p, Program) else parse(p)


def loop_free_segment_to_group(p) -> GroupElement:
    p = as_program(p)
    if not p.is_loop_free():
        raise ValueError(f"segment contains a loop: {p}")
    return evaluate(p)


# -- interpreter -------------------------------------------------------------


@dataclass(frozen=True)
class Tape:
    ones: frozenset = frozenset()
    head: int = 0

    def __post_init__(self):
        if not isinstance(self.ones, frozenset):
            object.__setattr__(self, "ones", frozenset(self.ones))

    def to_json(self) -> dict:
        return {"ones": sorted(self.ones), "head": self.head}

    @classmethod
    def from_json(cls, data) -> "Tape":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(frozenset(int(x) for x in data.get("ones", [])), int(data.get("head", 0)))

    def apply(self, g: GroupElement) -> "Tape":
        """Act by a group element relative to the head."""
        moved = frozenset(self.head + p for p in g.lamps)
        return Tape(self.ones ^ moved, self.head + g.shift)


@dataclass(frozen=True)
class Halted:
    tape: Tape
    steps: int

    def to_json(self):
        return {"outcome": "halted", "tape": self.tape.to_json(), "steps": str(self.steps)}


@dataclass(frozen=True)
class FuelExhausted:
    tape: Tape
    steps: int

    def to_json(self):
        return {"outcome": "fuel-exhausted", "tape": self.tape.to_json(), "steps": str(self.steps)}


@dataclass(frozen=True)
class NonTerminating:
    witness: str

    def to_json(self):
        return {"outcome": "non-terminating", "witness": self.witness}


Outcome = Union[Halted, FuelExhausted, NonTerminating]

# opcodes of the flat form
OP_T, OP_R, OP_L, OP_OPEN, OP_CLOSE = range(5)


def compile_program(p) -> list[tuple[int, int]]:
    """Flatten to (opcode, jump) pairs; brackets jump past their partner."""
    code: list[tuple[int, int]] = []

    def emit(prog):
        for node in prog:
            if node == "t":
                code.append((OP_T, 0))
            elif node == "r":
                code.append((OP_R, 0))
            elif node == "l":
                code.append((OP_L, 0))
            else:
                start = len(code)
                code.append((OP_OPEN, 0))
                emit(node.body)
                end = len(code)
                code.append((OP_CLOSE, start + 1))
                code[start] = (OP_OPEN, end + 1)

    emit(as_program(p))
    return code


def run(p, tape: Tape = Tape(), fuel: int = 10**6, detect_cycles: bool = False) -> Outcome:
    """Execute ``p`` on ``tape``.

    Every primitive and every loop-condition check costs one unit of fuel.
    With ``detect_cycles`` the full machine configuration is recorded at
    each backward jump; a repeat proves non-termination.
    """
    return execute(compile_program(p), tape, fuel, detect_cycles)


_MASK = (1 << 64) - 1


def _mix(pos: int) -> int:
    return ((pos * 0x9E3779B97F4A7C15) ^ (pos >> 7)) & _MASK


def execute(code: list, tape: Tape, fuel: int, detect_cycles: bool = False) -> Outcome:
    """Run already-compiled code; see :func:`run`.

    Cycle detection is Brent's algorithm over back-edge configurations,
    keyed by an incremental hash of the tape and confirmed by an exact
    comparison, so memory stays constant for runaway programs.
    """
    ones = set(tape.ones)
    head = tape.head
    pc = 0
    steps = 0
    n = len(code)
    zh = 0
    if detect_cycles:
        for p in ones:
            zh ^= _mix(p)
    saved_key = None
    saved_ones = None
    power = lam = 1
    while pc < n:
        if steps >= fuel:
            return FuelExhausted(Tape(frozenset(ones), head), steps)
        steps += 1
        op, jump = code[pc]
        if op == OP_T:
            if head in ones:
                ones.remove(head)
            else:
                ones.add(head)
            if detect_cycles:
                zh ^= _mix(head)
            pc += 1
        elif op == OP_R:
            head += 1
            pc += 1
        elif op == OP_L:
            head -= 1
            pc += 1
        elif op == OP_OPEN:
            pc = pc + 1 if head in ones else jump
        else:
            if head in ones:
                if detect_cycles:
                    key = (pc, head, zh, len(ones))
                    if key == saved_key and ones == saved_ones:
                        return NonTerminating(f"configuration repeated at instruction {pc}")
                    if lam == power:
                        saved_key, saved_ones = key, frozenset(ones)
                        power *= 2
                        lam = 0
                    lam += 1
                pc = jump
            else:
                pc += 1
    return Halted(Tape(frozenset(ones), head), steps)
