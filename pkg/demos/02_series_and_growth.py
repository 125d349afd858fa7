"""Counting programs with generating functions.

Each pruning level has a series whose n-th coefficient counts programs of
length n; the growth rate says how fast the search space explodes.

    python demos/02_series_and_growth.py
"""
from lamplight.series import (
    CANONICAL_RADIUS_POLY,
    growth_rate,
    series_L,
    series_Lk0,
    smallest_positive_root,
    solve_E_canonical,
    solve_E_dead_after,
    solve_E_dead_inside,
    solve_E_naive,
)

ORDER = 200
named = {
    "naive": solve_E_naive(ORDER),
    "canonical": solve_E_canonical(ORDER),
    "dead-after": solve_E_dead_after(ORDER),
    "dead-inside": solve_E_dead_inside(ORDER)[0],
}

for name, s in named.items():
    est, _ = growth_rate(s)
    print(f"{name:12} {s.coeffs[:9]}  growth ~ {est:.4f}")

x = smallest_positive_root(CANONICAL_RADIUS_POLY)
print(f"\ncanonical radius from its polynomial: {x:.6f} (1/x = {1 / x:.4f})")

print(f"group growth      {growth_rate(series_L(ORDER))[0]:.6f}")
print(f"shift-0 subgroup  {growth_rate(series_Lk0(0, ORDER))[0]:.6f}")

# the exact integers are not truncated
print(f"\nnaive programs of length 200 has {len(str(named['naive'][200]))} digits")
