"""Constructors for uniform, partition, graphic and transversal matroids.

Also the circuit-based binary test and Hall/transversal helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional

from .core import Matroid, MatroidError
from .functors import copy_labels, expand_set
from .labels import Label, as_label


# -- set systems -------------------------------------------------------------


@dataclass(frozen=True)
class SetSystem:
    """An indexed family ``(A_j : j in J)`` of subsets of ``ground``.

    Members are ``(name, set)`` pairs and may repeat. Doubles as the block
    list of a partition.
    """

    ground: tuple[Label, ...]
    members: tuple[tuple[str, frozenset[Label]], ...]

    def __post_init__(self):
        ground = tuple(sorted(set(as_label(x) for x in self.ground)))
        members = tuple((str(name), frozenset(as_label(x) for x in s)) for name, s in self.members)
        known = set(ground)
        for name, s in members:
            extra = s - known
            if extra:
                raise MatroidError(f"set {name} has elements outside ground set: {sorted(extra)}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, sets: Iterable[Iterable], ground: Optional[Iterable] = None, names=None) -> "SetSystem":
        sets = [frozenset(as_label(x) for x in s) for s in sets]
        if ground is None:
            ground = frozenset().union(*sets) if sets else ()
        if names is None:
            names = [f"A{j}" for j in range(1, len(sets) + 1)]
        return cls(tuple(ground), tuple(zip(names, sets)))

    @property
    def sets(self) -> list[frozenset[Label]]:
        return [s for _, s in self.members]

    def __len__(self):
        return len(self.members)

    def _adjacency(self) -> list[list[int]]:
        index = {x: p for p, x in enumerate(self.ground)}
        return [sorted(index[x] for x in s) for s in self.sets]


def copy_partition(ground: Iterable, alpha) -> SetSystem:
    """Blocks made of the copies of each ground element under ``alpha``."""
    ground = sorted(as_label(x) for x in ground)
    blocks = copy_labels(ground, alpha)
    flat = [c for b in blocks for c in b]
    return SetSystem.of(blocks, ground=flat, names=[f"P{i}" for i in range(1, len(blocks) + 1)])


# -- uniform and partition ---------------------------------------------------


def uniform(t: int, n: int, ground: Optional[Iterable] = None) -> Matroid:
    """``U_{t,n}``: every ``t``-subset is a basis.

    ``ground`` defaults to ``x1 .. xn``; any ``n`` labels may be supplied.
    """
    if n < 0 or t < 0:
        raise MatroidError("rank and size must be non-negative")
    if t > n:
        raise MatroidError(f"rank {t} exceeds ground size {n}")
    labels = [Label(i) for i in range(1, n + 1)] if ground is None else sorted(as_label(x) for x in ground)
    if len(labels) != n or len(set(labels)) != n:
        raise MatroidError("ground must contain exactly n distinct labels")
    masks = (sum(1 << p for p in c) for c in combinations(range(n), t))
    return Matroid(labels, masks)


def partition_matroid(P: SetSystem, t: int) -> Matroid:
    """Rank-``t`` sets meeting every block at most once."""
    blocks = P.sets
    seen: set[Label] = set()
    for b in blocks:
        if not b or seen & b:
            raise MatroidError("blocks overlap or do not cover")
        seen |= b
    if seen != set(P.ground):
        raise MatroidError("blocks overlap or do not cover")
    if t < 0 or t > len(blocks):
        raise MatroidError(f"rank {t} exceeds the number of blocks ({len(blocks)})")
    index = {x: p for p, x in enumerate(P.ground)}
    block_bits = [[1 << index[x] for x in sorted(b)] for b in blocks]
    bases = set()
    for chosen in combinations(block_bits, t):
        for pick in product(*chosen):
            bases.add(sum(pick))
    return Matroid(P.ground, bases)


def partition_basis_count(block_sizes: Iterable[int], t: int) -> int:
    """Sum over ``t``-subsets of blocks of the product of their sizes."""
    total = 0
    for chosen in combinations(list(block_sizes), t):
        prod = 1
        for k in chosen:
            prod *= k
        total += prod
    return total


# -- graphic -----------------------------------------------------------------


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph with labelled edges; loops and parallel edges allowed.

    Vertices are ``1 .. vertex_count``; edges are ``(label, u, v)``.
    """

    vertex_count: int
    edges: tuple[tuple[Label, int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise MatroidError("a graph needs at least one vertex")
        edges = tuple((as_label(e), int(u), int(v)) for e, u, v in self.edges)
        labels = [e for e, _, _ in edges]
        if len(set(labels)) != len(labels):
            raise MatroidError("edge labels must be distinct")
        for e, u, v in edges:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise MatroidError(f"edge {e} has an endpoint outside 1..{self.vertex_count}")
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @property
    def edge_labels(self) -> list[Label]:
        return [e for e, _, _ in self.edges]

    def is_connected(self) -> bool:
        parent = list(range(self.vertex_count + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for _, u, v in self.edges:
            parent[find(u)] = find(v)
        roots = {find(v) for v in range(1, self.vertex_count + 1)}
        return len(roots) == 1


def expand_graph(G: MultiGraph, alpha) -> MultiGraph:
    """Replace edge ``x_i`` by ``k_i`` parallel copies (loops stay loops).

    ``alpha`` is aligned with the edges in canonical label order, so the edge
    labels match those of ``expand_family(graphic_matroid(G), alpha)``.
    """
    copies = copy_labels(G.edge_labels, alpha)
    edges = []
    for (_, u, v), group in zip(G.edges, copies):
        edges.extend((c, u, v) for c in group)
    return MultiGraph(G.vertex_count, tuple(edges))


def spanning_tree_masks(G: MultiGraph) -> list[int]:
    """Bitmasks (over the sorted edge list) of all spanning trees."""
    need = G.vertex_count - 1
    edges = [(1 << p, u, v) for p, (_, u, v) in enumerate(G.edges) if u != v]
    out: list[int] = []

    def find(parent, a):
        while parent[a] != a:
            a = parent[a]
        return a

    def grow(k, parent, chosen, mask):
        if chosen == need:
            out.append(mask)
            return
        if len(edges) - k < need - chosen:
            return
        bit, u, v = edges[k]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            joined = parent.copy()
            joined[ru] = rv
            grow(k + 1, joined, chosen + 1, mask | bit)
        grow(k + 1, parent, chosen, mask)

    grow(0, list(range(G.vertex_count + 1)), 0, 0)
    return out


def graphic_matroid(G: MultiGraph) -> Matroid:
    """Cycle matroid of ``G``: bases are the edge sets of spanning trees."""
    if not G.edges:
        raise MatroidError("graph has no edges")
    if not G.is_connected():
        raise MatroidError("graph not connected")
    return Matroid(G.edge_labels, spanning_tree_masks(G))


# -- transversal -------------------------------------------------------------


def max_matching(S: SetSystem) -> dict[int, Label]:
    """A maximum matching of ``G[A]`` as ``{set index: element}`` (augmenting paths)."""
    adj = S._adjacency()
    owner: dict[int, int] = {}

    def augment(j, seen):
        for e in adj[j]:
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or augment(owner[e], seen):
                owner[e] = j
                return True
        return False

    for j in range(len(adj)):
        augment(j, set())
    return {j: S.ground[e] for e, j in owner.items()}


def has_transversal(S: SetSystem) -> bool:
    """True iff the sets admit a system of distinct representatives."""
    return len(max_matching(S)) == len(S)


def transversal_matroid(S: SetSystem) -> Matroid:
    """``M[A]`` on ``S.ground``: bases are the maximum partial transversals.

    Ground elements outside every set are loops.
    """
    adj = S._adjacency()
    m = len(adj)
    r = len(max_matching(S))

    @lru_cache(maxsize=None)
    def pick(j: int, used: int, need: int) -> frozenset[int]:
        # ground-side sets of size `need` matchable into sets j..m-1 avoiding `used`
        if need == 0:
            return frozenset((0,))
        if m - j < need:
            return frozenset()
        out = set(pick(j + 1, used, need))
        for e in adj[j]:
            bit = 1 << e
            if not used & bit:
                out.update(x | bit for x in pick(j + 1, used | bit, need - 1))
        return frozenset(out)

    return Matroid(S.ground, pick(0, 0, r))


def expand_presentation(S: SetSystem, alpha) -> SetSystem:
    """Replace each ``A_j`` by its expansion ``A_j^alpha``."""
    copies = copy_labels(S.ground, alpha)
    ground = [c for group in copies for c in group]
    members = tuple((name, expand_set(S.ground, s, alpha)) for name, s in S.members)
    return SetSystem(tuple(ground), members)


# -- binary ------------------------------------------------------------------


def is_binary(M: Matroid) -> bool:
    """Every symmetric difference of two distinct circuits contains a circuit."""
    circ = sorted(M.circuit_masks)
    for c1, c2 in combinations(circ, 2):
        d = c1 ^ c2
        if not any(c & d == c for c in circ):
            return False
    return True

