"""
Exhaustive blocking-set searches in small planes
================================================

Three brute-force oracles, each small enough to run exhaustively and
each classifying what it finds.  These back the cover-number arguments:
a vertex cover of a truncated-plane family is a blocking set upstairs.
"""

from collections import Counter

from ryserplanes import (
    classify_conic_blockers,
    min_blocking_sets,
    min_nontrivial_blocking,
)

# smallest sets meeting every line of PG(2,q): exactly the lines
for q in (2, 3, 4):
    rep = min_blocking_sets(q)
    print(f"q={q}: minimum {rep.minimum}, {rep.count} blockers,",
          "all of class", set(rep.classes))

# smallest sets meeting every tangent and secant of a conic; the three
# expected shapes are line, the conic itself, and a subgroup swap, but
# single-point tangent trades show up as well
rep = classify_conic_blockers(3)
print("\nconic blockers, q=3:", dict(Counter(rep.classes)))
for b, c in zip(rep.blockers, rep.classes):
    if c == "other":
        print("  unclassified example:", sorted(b),
              "(one conic point traded for a point on its tangent)")
        break

# smallest blocking sets containing no full line; at square order these
# are the Baer subplanes
rep = min_nontrivial_blocking(4)
print("\nnontrivial blockers, q=4: minimum", rep.minimum,
      "count", rep.count, "classes", set(rep.classes))
