"""Rewriting programs to shorter equivalent ones.

    python demos/04_normalization.py
"""
from lamplight.analysis import normalize_steps, semantic_table, shift_class, tables_equal
from lamplight.lang import Tape, run

programs = [
    "[t][rtl]",      # the bit is 0 after a loop, so the second loop is dead
    "[[t]]",         # nested loop with nothing around it
    "[rtl]",         # body never touches the condition bit
    "[r]t[t[r]]",    # transient loops get inlined
    "[t]t[]",        # reaching [] with the bit set means divergence
    "[tr[r]r[r]trt[l]l[l]r]",
]

for text in programs:
    steps = normalize_steps(text)
    print("  ->  ".join(str(p) for p in steps))
    if shift_class(text) is not None:
        assert tables_equal(text, steps[-1])

print()
t = semantic_table("[rtl]r[ltr]l[rtl]")
print("xor-swap (n=1) table:", t.to_json()["map"])

# the bracket is a while loop: with bit 0 set the first loop never exits
out = run("[rrtll]rr[lltrr]ll[rrtll]", Tape({0}), 10**5, detect_cycles=True)
print("xor-swap (n=2) on x0=1:", out.to_json()["outcome"])

doubled = run("[tr[r]r[r]trt[l]l[l]r]", Tape(frozenset(range(5))))
print("doubling 5 ones:", sorted(doubled.tape.ones))
