"""Program counts per length at each pruning level, as CSV.

    python demos/03_enumeration_table.py > growth.csv
"""
import sys

from lamplight.enumeration import enumerate_texts, growth_table, growth_table_csv

sys.stdout.write(growth_table_csv(growth_table(10)))

# what the levels throw away at length 4
canon = set(enumerate_texts(4, "canonical"))
after = set(enumerate_texts(4, "dead-after"))
inside = set(enumerate_texts(4, "dead-inside"))
full = set(enumerate_texts(4, "full"))
print("\nremoved by dead-after at n=4: ", sorted(canon - after), file=sys.stderr)
print("removed by full at n=4:       ", sorted(inside - full), file=sys.stderr)
