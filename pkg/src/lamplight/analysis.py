"""Static analysis, semantic tables and the equivalence-preserving rewrites.

A program is *fixed-shift* when every loop body has net shift 0; its head
then moves by the same amount on every run, it touches only a finite,
statically known window of bits, and non-termination is decidable by
watching for a repeated configuration.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .group import canonical_word, classify, evaluate
from .lang import Loop, Program, as_program, parse


class NotFixedShift(ValueError):
    pass


# -- shift and window ----------------------------------------------------------


def shift_class(p) -> Optional[int]:
    """Net shift ``i`` of a fixed-shift program, or None when unbounded."""
    shift = 0
    for node in as_program(p):
        if isinstance(node, str):
            shift += {"t": 0, "r": 1, "l": -1}[node]
        elif isinstance(node, Loop):
            if shift_class(node.body) != 0:
                return None
        else:
            return None
    return shift


def _walk(p: Program, offset: int = 0, depth: int = 0) -> Iterator[tuple[str, int, int]]:
    # events ("t" | "check", head offset, loop depth) for a fixed-shift program
    for node in p:
        if node == "t":
            yield "t", offset, depth
        elif node == "r":
            offset += 1
        elif node == "l":
            offset -= 1
        else:
            yield "check", offset, depth
            yield from _walk(node.body, offset, depth + 1)


def bit_window(p) -> frozenset:
    """Head-relative offsets that may be read or toggled."""
    p = as_program(p)
    if shift_class(p) is None:
        raise NotFixedShift(f"not fixed-shift: {p}")
    return frozenset(off for _, off, _ in _walk(p))


def is_L00(p) -> bool:
    p = as_program(p)
    if not p.is_loop_free():
        raise ValueError("is_L00 needs a loop-free program")
    return classify(evaluate(p)) == (0, False)


def is_L01(p) -> bool:
    p = as_program(p)
    if not p.is_loop_free():
        raise ValueError("is_L01 needs a loop-free program")
    return classify(evaluate(p)) == (0, True)


def head_effect(p) -> Optional[int]:
    """0 or 1 if ``p`` provably returns to its start cell and flips it that
    many times (mod 2); None when unknown.

    Sound but incomplete for programs with loops: any toggle of the start
    cell inside a loop gives up.
    """
    p = as_program(p)
    if p.is_loop_free():
        shift, toggles = classify(evaluate(p))
        return int(toggles) if shift == 0 else None
    if shift_class(p) != 0:
        return None
    parity = 0
    for kind, off, depth in _walk(p):
        if kind == "t" and off == 0:
            if depth:
                return None
            parity ^= 1
    return parity


def is_E00(p) -> bool:
    """Returns to the start cell and leaves it as it was (if it halts)."""
    return head_effect(p) == 0


def is_E01(p) -> bool:
    return head_effect(p) == 1


# -- semantic tables ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SemanticTable:
    """Partial function on the bits of ``window`` (offsets from the start head).

    ``mapping`` sends each input assignment (a tuple of bits ordered like
    ``window``) to the output assignment, or to None for divergence.
    """

    window: tuple
    shift: int
    mapping: dict

    def __eq__(self, other):
        if not isinstance(other, SemanticTable):
            return NotImplemented
        return table_equal(self, other)

    def __hash__(self):
        return hash(canonical_key(self))

    @property
    def all_bottom(self) -> bool:
        return all(v is None for v in self.mapping.values())

    def lookup(self, assignment: dict) -> Optional[dict]:
        """Apply to an assignment over a superset of the window."""
        key = tuple(assignment.get(b, 0) for b in self.window)
        out = self.mapping[key]
        if out is None:
            return None
        res = dict(assignment)
        res.update(zip(self.window, out))
        return res

    def to_json(self) -> dict:
        def s(bits):
            return "".join(map(str, bits))

        return {
            "window": list(self.window),
            "shift": self.shift,
            "map": {s(k): ("⊥" if v is None else s(v)) for k, v in sorted(self.mapping.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "SemanticTable":
        window = tuple(sorted(int(b) for b in data["window"]))
        if list(window) != [int(b) for b in data["window"]]:
            raise ValueError("window must be listed in ascending order")
        mapping = {}
        for k, v in data["map"].items():
            if len(k) != len(window) or set(k) - {"0", "1"}:
                raise ValueError(f"bad assignment {k!r}")
            if v in ("⊥", None, "bottom"):
                out = None
            else:
                if len(v) != len(window) or set(v) - {"0", "1"}:
                    raise ValueError(f"bad assignment {v!r}")
                out = tuple(int(c) for c in v)
            mapping[tuple(int(c) for c in k)] = out
        if len(mapping) != 2 ** len(window):
            raise ValueError("map must list every assignment of the window")
        return cls(window, int(data.get("shift", 0)), mapping)


def _static_code(p: Program, index: dict) -> list[tuple[int, int, int]]:
    # (op, window index, jump); moves vanish because every instruction of a
    # fixed-shift program runs at a statically known head offset
    code: list[tuple[int, int, int]] = []

    def emit(prog, offset):
        for node in prog:
            if node == "t":
                code.append((0, index[offset], 0))
            elif node == "r":
                offset += 1
            elif node == "l":
                offset -= 1
            else:
                start = len(code)
                code.append((1, index[offset], 0))
                emit(node.body, offset)
                code.append((2, index[offset], start + 1))
                code[start] = (1, index[offset], len(code))
        return offset

    emit(p, 0)
    return code


def _tabulate(code: list, state: int) -> Optional[int]:
    """Final window state, or None once a back-edge configuration repeats."""
    seen = set()
    pc, n = 0, len(code)
    while pc < n:
        op, k, jump = code[pc]
        if op == 0:
            state ^= 1 << k
            pc += 1
        elif op == 1:
            pc = pc + 1 if state >> k & 1 else jump
        elif state >> k & 1:
            key = (pc, state)
            if key in seen:
                return None
            seen.add(key)
            pc = jump
        else:
            pc += 1
    return state


def semantic_table(p) -> SemanticTable:
    """Tabulate a fixed-shift program over every assignment of its window.

    Bits outside the window are never read, so they are held at 0.
    Divergence is detected exactly: the configuration space (program point,
    window contents) is finite, so a run diverges iff a configuration at a
    backward jump repeats.
    """
    p = as_program(p)
    shift = shift_class(p)
    if shift is None:
        raise NotFixedShift(f"not fixed-shift: {p}")
    window = tuple(sorted(bit_window(p)))
    code = _static_code(p, {b: k for k, b in enumerate(window)})
    w = len(window)
    mapping = {}
    for bits in product((0, 1), repeat=w):
        state = sum(v << k for k, v in enumerate(bits))
        out = _tabulate(code, state)
        mapping[bits] = None if out is None else tuple(out >> k & 1 for k in range(w))
    return SemanticTable(window, shift, mapping)


def _as_table(x) -> SemanticTable:
    return x if isinstance(x, SemanticTable) else semantic_table(x)


def table_equal(a: SemanticTable, b: SemanticTable) -> bool:
    """Compare on the union window, extending each table by the identity."""
    if a.all_bottom and b.all_bottom:
        return True
    if a.shift != b.shift:
        return False
    union = sorted(set(a.window) | set(b.window))
    for bits in product((0, 1), repeat=len(union)):
        assignment = dict(zip(union, bits))
        if a.lookup(assignment) != b.lookup(assignment):
            return False
    return True


def tables_equal(p, q) -> bool:
    """Extensional equality of two fixed-shift programs (or their tables)."""
    return table_equal(_as_table(p), _as_table(q))


def canonical_key(t: SemanticTable) -> tuple:
    """A hashable key with ``canonical_key(a) == canonical_key(b)`` iff
    ``table_equal(a, b)``: bits on which the table acts as the identity are
    dropped from the window."""
    if t.all_bottom:
        return ("bottom",)
    window = list(t.window)
    mapping = dict(t.mapping)
    k = 0
    while k < len(window):
        if _irrelevant(mapping, k):
            window.pop(k)
            mapping = {
                key[:k] + key[k + 1:]: (None if v is None else v[:k] + v[k + 1:])
                for key, v in mapping.items()
                if key[k] == 0
            }
            k = 0
        else:
            k += 1
    return (t.shift, tuple(window), tuple(sorted(mapping.items(), key=lambda kv: kv[0])))


def _irrelevant(mapping: dict, k: int) -> bool:
    for key, out0 in mapping.items():
        if key[k]:
            continue
        out1 = mapping[key[:k] + (1,) + key[k + 1:]]
        if (out0 is None) != (out1 is None):
            return False
        if out0 is None:
            continue
        if out0[k] != 0 or out1[k] != 1:
            return False
        if out0[:k] + out0[k + 1:] != out1[:k] + out1[k + 1:]:
            return False
    return True


# -- rewriting ---------------------------------------------------------------


class _Bottom:
    """Marks a point whose reachability guarantees non-termination."""

    length = 1

    def __repr__(self):
        return "BOTTOM"

    def __str__(self):
        return "⊥"


BOTTOM = _Bottom()
EMPTY_LOOP = Loop(Program())
# rendering of a program that diverges on every input
DIVERGENT = parse("[]t[]")


def _seg_effect(items) -> Optional[int]:
    if any(n is BOTTOM for n in items):
        return None
    return head_effect(Program(items))


def _transient(body) -> bool:
    # entered with the head bit set; leaves it clear after one pass
    if _seg_effect(body) == 1:
        return True
    return any(isinstance(n, Loop) and _seg_effect(body[k + 1:]) == 0 for k, n in enumerate(body))


def _diverges_when_entered(body) -> bool:
    if body and _seg_effect(body) == 0:
        return True
    return any(isinstance(n, Loop) and _seg_effect(body[k + 1:]) == 1 for k, n in enumerate(body))


def _canonical_runs(seq: tuple) -> Optional[tuple]:
    out, run, changed = [], [], False

    def flush():
        nonlocal changed
        if run:
            word = canonical_word(evaluate(run))
            if word != "".join(run):
                changed = True
            out.extend(word)
            run.clear()

    for node in seq:
        if isinstance(node, str):
            run.append(node)
        else:
            flush()
            out.append(node)
    flush()
    return tuple(out) if changed else None


def _rewrite_loop(node: Loop) -> Optional[Loop]:
    body = node.body
    if len(body) == 1 and body[0] is BOTTOM:
        return EMPTY_LOOP
    if len(body) == 1 and isinstance(body[0], Loop):
        return body[0]  # [[a]] -> [a]
    if body and _diverges_when_entered(body):
        return EMPTY_LOOP
    return None


def _rewrite_context(seq: tuple, in_body: bool) -> Optional[tuple]:
    """Rules driven by a known value of the head bit in front of a loop."""
    loops = [k for k, n in enumerate(seq) if isinstance(n, Loop)]
    for j in loops:
        known = set()
        if in_body:
            # head bit is 1 on entry to a body
            e = _seg_effect(seq[:j])
            if e is not None:
                known.add(1 ^ e)
        for i in loops:
            if i >= j:
                break
            # head bit is 0 right after any loop
            e = _seg_effect(seq[i + 1:j])
            if e is not None:
                known.add(e)
        if not known:
            continue
        bit = known.pop()
        node = seq[j]
        if bit == 0:
            return seq[:j] + seq[j + 1:]  # dead loop
        if node == EMPTY_LOOP:
            return (BOTTOM,)  # entered infinite loop
        if _transient(node.body):
            return seq[:j] + tuple(node.body) + seq[j + 1:]  # unroll once
    return None


def _step(seq: tuple, in_body: bool) -> Optional[tuple]:
    for k, node in enumerate(seq):
        if isinstance(node, Loop):
            inner = _step(tuple(node.body), True)
            if inner is not None:
                return seq[:k] + (Loop(Program(inner)),) + seq[k + 1:]
    if BOTTOM in seq and seq != (BOTTOM,):
        return (BOTTOM,)
    new = _canonical_runs(seq)
    if new is not None:
        return new
    for k, node in enumerate(seq):
        if isinstance(node, Loop):
            new_node = _rewrite_loop(node)
            if new_node is not None:
                return seq[:k] + (new_node,) + seq[k + 1:]
    return _rewrite_context(seq, in_body)


def normalize_steps(p) -> list[Program]:
    """Every intermediate form, ending with ``normalize(p)``.

    Intermediate forms may contain the internal marker, printed as ``⊥``.
    """
    seq = tuple(as_program(p))
    trail = [Program(seq)]
    while True:
        nxt = _step(seq, False)
        if nxt is None:
            return trail
        seq = nxt
        trail.append(DIVERGENT if seq == (BOTTOM,) else Program(seq))


def normalize(p) -> Program:
    """Rewrite to a fixed point, innermost-leftmost.

    A program that diverges on every input renders as ``[]t[]``; a loop that
    diverges whenever it is entered renders as ``[]``.
    """
    seq = tuple(as_program(p))
    while True:
        nxt = _step(seq, False)
        if nxt is None:
            break
        seq = nxt
    if seq == (BOTTOM,):
        return DIVERGENT
    return Program(seq)


def is_divergent_form(p) -> bool:
    return as_program(p) == DIVERGENT
