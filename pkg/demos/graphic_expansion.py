"""
Expanding a graphic matroid
===========================

Spanning trees of a small multigraph, then the same matroid with two edges
doubled. Doubling an edge in the graph and expanding the matroid give the
same thing up to relabeling.
"""

from matroid_functors import expand_family, expand_graph, graphic_matroid, matroids_isomorphic
from matroid_functors.corpus import load_fixture
from matroid_functors.labels import format_labels

# a 4-cycle with one chord and a loop hanging off vertex 4
G = load_fixture("graph_g.txt")
M = graphic_matroid(G)
print(f"{len(M)} spanning trees, rank {M.rank}")
for B in M.sets():
    print("  ", format_labels(B))

# two copies of the chord x5 and of the loop x6
alpha = (1, 1, 1, 1, 2, 2)
E = expand_family(M, alpha)
print(f"\nexpanded: {E.size} elements, {len(E)} bases")

# the graph with parallel edges added gives the same matroid
G2 = expand_graph(G, alpha)
found = matroids_isomorphic(E, graphic_matroid(G2))
print("matches the doubled graph:", found is not None)
for x, y in sorted(found.items()):
    if x != y:
        print(f"   {x} -> {y}")
