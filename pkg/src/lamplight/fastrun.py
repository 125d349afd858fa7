"""Compiled interpreter for long fuel-bounded runs.

Same semantics and fuel accounting as :func:`lamplight.lang.run` (without
cycle detection).  Uses numba when it is installed and falls back to the
reference interpreter otherwise.
"""
from __future__ import annotations

from .lang import FuelExhausted, Halted, Tape, compile_program, execute

try:
    import numpy as np
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    np = None
    njit = None

MARGIN = 64


def _kernel(ops, jumps, init, fuel, buf, origin):
    # opcodes as in lang: t r l [ ]  ->  0 1 2 3 4
    lo = origin
    hi = origin
    for p in init:
        buf[origin + p] ^= 1
        if origin + p < lo:
            lo = origin + p
        if origin + p > hi:
            hi = origin + p
    head = origin
    pc = 0
    steps = 0
    n = ops.shape[0]
    status = 0
    while pc < n:
        if steps >= fuel:
            status = 1
            break
        steps += 1
        op = ops[pc]
        if op == 0:
            buf[head] ^= 1
            pc += 1
        elif op == 1:
            head += 1
            if head > hi:
                hi = head
            pc += 1
        elif op == 2:
            head -= 1
            if head < lo:
                lo = head
            pc += 1
        elif op == 3:
            if buf[head]:
                pc += 1
            else:
                pc = jumps[pc]
        else:
            if buf[head]:
                pc = jumps[pc]
            else:
                pc += 1
    count = 0
    for i in range(lo, hi + 1):
        if buf[i]:
            count += 1
    ones = np.empty(count, dtype=np.int64)
    j = 0
    for i in range(lo, hi + 1):
        if buf[i]:
            ones[j] = i - origin
            j += 1
            buf[i] = 0
    return status, head - origin, steps, ones


_jitted = njit(cache=False)(_kernel) if njit is not None else None
_buffers: dict[int, object] = {}


class Compiled:
    """A program flattened once for repeated fast runs."""

    def __init__(self, p):
        self.code = compile_program(p)
        if _jitted is not None:
            self.ops = np.array([op for op, _ in self.code], dtype=np.int8)
            self.jumps = np.array([j for _, j in self.code], dtype=np.int64)

    def run(self, tape: Tape, fuel: int):
        if _jitted is None:
            return execute(self.code, tape, fuel)
        span = max((abs(p - tape.head) for p in tape.ones), default=0)
        size = 2 * (fuel + span + MARGIN) + 1
        buf = _buffers.get(size)
        if buf is None:
            buf = _buffers[size] = np.zeros(size, dtype=np.int8)
        origin = fuel + span + MARGIN
        init = np.array(sorted(p - tape.head for p in tape.ones), dtype=np.int64)
        status, head, steps, ones = _jitted(self.ops, self.jumps, init, fuel, buf, origin)
        final = Tape(frozenset(int(p) + tape.head for p in ones), int(head) + tape.head)
        return Halted(final, int(steps)) if status == 0 else FuelExhausted(final, int(steps))


def run_fast(p, tape: Tape = Tape(), fuel: int = 10**6):
    return Compiled(p).run(tape, fuel)
