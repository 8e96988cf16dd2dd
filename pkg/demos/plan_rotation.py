"""
Planning a rotation lineup
==========================

A team of 10 players, 3 of them wearing A-shirts, rotates around a circle
with 6 players on court at a time. Can we order the players so that every
rotation keeps at least 2 A-shirts on court? The exact answer is the
inequality n*t <= k*s, and when it holds the mechanical word of slope k/n
is a working arrangement.
"""

from mechwords import (
    AdmissibilityQuery,
    brute_force_exists,
    construct_admissible,
    criterion,
    is_admissible,
    pigeonhole_witness,
    window_weight_profile,
)

# The instance that started it all: n=10 players, k=3 A-shirts, s=6 on court,
# and the house rules ask for t=2 A-shirts on court after every rotation.
query = AdmissibilityQuery(10, 3, 6, 2)
print(f"instance: n={query.n}, k={query.k}, s={query.s}, t={query.t}")
print(f"criterion n*t <= k*s: {query.n * query.t} <= {query.k * query.s}?",
      criterion(query))

# No ordering works. Brute force over all C(10,3) = 120 arrangements agrees,
# and the pigeonhole certificate shows where any given lineup breaks.
result = brute_force_exists(query)
print(f"exhaustive search: exists={result.exists} "
      f"after {result.instances_checked} arrangements")

lineup = "AAABBBBBBB"  # the naive lineup: all A-shirts bunched together
witness = pigeonhole_witness(lineup, query.s)
print(f"naive lineup {lineup}: the court starting at spot {witness.start} "
      f"has only {witness.weight} A-shirts")

# Relax the house rules to one A-shirt per court and planning succeeds.
relaxed = AdmissibilityQuery(10, 3, 6, 1)
word = construct_admissible(relaxed)
print(f"\nrelaxed to t=1: arrangement {word}")
print("court loads by rotation:", window_weight_profile(word, relaxed.s))
print("admissible:", bool(is_admissible(word, relaxed.s, relaxed.t)))

# A smaller tournament where the original quota is fine: 7 players, 3 A-shirts,
# 5 on court, at least 2 A-shirts required.
small = AdmissibilityQuery(7, 3, 5, 2)
word = construct_admissible(small)
print(f"\n(7, 3, 5, 2): criterion {small.n * small.t} <= {small.k * small.s}, "
      f"arrangement {word}, court loads {window_weight_profile(word, small.s)}")
