"""Lamplighter elements, their norms and shortest words.

    python demos/01_group_norms.py
"""
from collections import Counter

from lamplight.group import GroupElement, canonical_word, elements_of_norm, evaluate, norm
from lamplight.series import series_L

# a few elements: lamps lit at the listed positions, lamplighter at `shift`
for lamps, shift in [((), 0), ((0,), 0), ((5,), 0), ((-2, 1), 3), ((1, 2), -1)]:
    x = GroupElement(lamps, shift)
    w = canonical_word(x)
    assert evaluate(w) == x
    print(f"lamps={sorted(lamps)!s:10} shift={shift:3}  norm={norm(x):2}  word={w}")

# spheres of the Cayley graph against the growth series
print()
sizes = [len(elements_of_norm(n)) for n in range(11)]
print("sphere sizes   ", sizes)
print("series L(z)    ", series_L(10).coeffs)

# how the sphere of radius 6 splits by final position
counts = Counter(x.shift for x in elements_of_norm(6))
print("\nnorm 6 by shift:", dict(sorted(counts.items())))
