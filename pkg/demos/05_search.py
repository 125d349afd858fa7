"""Shortest programs for small behaviours, plus how much redundancy is left.

    python demos/05_search.py
"""
from lamplight.analysis import SemanticTable, semantic_table
from lamplight.enumeration import LEVELS
from lamplight.search import SearchSpec, equivalence_census, search_shortest

targets = {
    "set bit": SemanticTable((0,), 0, {(0,): (1,), (1,): (1,)}),
    "clear bit to the right": semantic_table("r[t]l"),
    "same as [rtl]t": semantic_table("[rtl]t"),
}
for name, target in targets.items():
    res = search_shortest(SearchSpec(target, 8))
    tried = sum(res.examined.values())
    print(f"{name:24} -> {str(res.program):10} (tabulated {tried} candidates)")

print("\nlength 6 census: share of fixed-shift programs that duplicate a shorter behaviour")
for level in LEVELS:
    row = equivalence_census(6, level)[-1]
    print(f"  {level.label:12} {row.cumulative_programs:6} programs  {row.buckets:5} behaviours  ratio {row.duplicate_ratio:.3f}")
