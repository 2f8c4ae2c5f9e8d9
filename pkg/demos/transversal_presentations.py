"""
Transversal matroids and expanded presentations
===============================================

Bases of a transversal matroid are the largest matchable sets. Expanding
each set of the presentation keeps things consistent only when the copied
element sits in a single set.
"""

from matroid_functors import (
    SetSystem,
    circuits,
    expand_family,
    expand_presentation,
    has_transversal,
    transversal_matroid,
)

S = SetSystem.of([[1, 2], [1, 3]], ground=[1, 2, 3])
M = transversal_matroid(S)
print("has transversal:", has_transversal(S))
print("bases:", [" ".join(map(str, sorted(B))) for B in M.sets()])

# copying x2 (in one set only) commutes with building the matroid
a = (1, 2, 1)
print("\nalpha", a, "agrees:", transversal_matroid(expand_presentation(S, a)) == expand_family(M, a))

# copying x1 (in both sets) does not: both copies can be matched at once
a = (2, 1, 1)
left = transversal_matroid(expand_presentation(S, a))
right = expand_family(M, a)
print("alpha", a, "agrees:", left == right)
print("  from the expanded sets:", len(left), "bases")
print("  expanded matroid:      ", len(right), "bases")
pair = [c for c in circuits(right).sets() if len(c) == 2]
print("  parallel pair in the expanded matroid:", [" ".join(map(str, sorted(c))) for c in pair])
