"""A fixed collection of small matroids used by the property suites and demos."""

from __future__ import annotations

from importlib import resources

from .core import Matroid, add_coloop, direct_sum, relabel
from .families import MultiGraph, SetSystem, graphic_matroid, partition_matroid, transversal_matroid, uniform
from .formats import load
from .labels import Label


def shifted(M: Matroid, offset: int) -> Matroid:
    """Rename ``x_i`` to ``x_{i+offset}`` (unexpanded grounds only)."""
    return relabel(M, {x: Label(x.base + offset, x.copy) for x in M.ground})


def fixture_path(name: str):
    return resources.files("matroid_functors") / "fixtures" / name


def load_fixture(name: str):
    with resources.as_file(fixture_path(name)) as p:
        return load(p).payload


def _graph(n, *edges):
    return MultiGraph(n, tuple((i, u, v) for i, (u, v) in enumerate(edges, start=1)))


GRAPHS = {
    "triangle": _graph(3, (1, 2), (2, 3), (1, 3)),
    "triangle+parallel": _graph(3, (1, 2), (1, 2), (2, 3), (1, 3)),
    "square": _graph(4, (1, 2), (2, 3), (3, 4), (1, 4)),
    "square+chord": _graph(4, (1, 2), (2, 3), (3, 4), (1, 4), (1, 3)),
    "path+loop": _graph(3, (1, 2), (2, 3), (3, 3)),
    "digon+loop": _graph(2, (1, 2), (1, 2), (2, 2)),
    "paw": _graph(4, (1, 2), (2, 3), (1, 3), (3, 4)),
    "bundle": _graph(2, (1, 2), (1, 2), (1, 2)),
}

SYSTEMS = {
    "two-sets": SetSystem.of([[1, 2], [1, 3]], ground=[1, 2, 3]),
    "three-sets-loop": SetSystem.of([[1, 2], [1, 3], [3]], ground=[1, 2, 3, 4]),
    "overlap": SetSystem.of([[1, 2, 3], [3, 4]]),
    "chain": SetSystem.of([[1, 2], [2, 3], [3, 4]]),
    "nested": SetSystem.of([[1], [1, 2], [1, 2, 3]]),
}

PARTITIONS = [
    ([[1, 2], [3]], 1),
    ([[1, 2], [3]], 2),
    ([[1, 2], [3, 4]], 1),
    ([[1, 2], [3, 4]], 2),
    ([[1, 2, 3], [4]], 2),
    ([[1, 2], [3, 4], [5, 6]], 2),
    ([[1, 2], [3, 4], [5, 6]], 3),
    ([[1, 2, 3], [4, 5], [6]], 2),
    ([[1, 2], [3], [4], [5]], 3),
]


def uniform_corpus() -> list[tuple[str, Matroid]]:
    return [(f"U{t},{n}", uniform(t, n)) for n in range(1, 6) for t in range(0, min(3, n) + 1)]


def partition_corpus() -> list[tuple[str, Matroid, SetSystem, int]]:
    out = []
    for blocks, t in PARTITIONS:
        P = SetSystem.of(blocks, names=[f"P{i}" for i in range(1, len(blocks) + 1)])
        sizes = "".join(str(len(b)) for b in blocks)
        out.append((f"part[{sizes}]t{t}", partition_matroid(P, t), P, t))
    return out


def graphic_corpus() -> list[tuple[str, Matroid, MultiGraph]]:
    return [(f"graph:{name}", graphic_matroid(G), G) for name, G in GRAPHS.items()]


def transversal_corpus() -> list[tuple[str, Matroid, SetSystem]]:
    return [(f"trans:{name}", transversal_matroid(S), S) for name, S in SYSTEMS.items()]


def combined_corpus() -> list[tuple[str, Matroid]]:
    u12, u23 = uniform(1, 2), uniform(2, 3)
    tri = graphic_matroid(GRAPHS["triangle"])
    two = transversal_matroid(SYSTEMS["two-sets"])
    return [
        ("U1,2+U1,2", direct_sum(u12, shifted(u12, 2))),
        ("U2,3+U1,2", direct_sum(u23, shifted(u12, 3))),
        ("triangle+U1,2", direct_sum(tri, shifted(u12, 3))),
        ("coloop(U2,3)", add_coloop(u23, 4)),
        ("coloop(two-sets)", add_coloop(two, 4)),
        ("coloop(U1,2+U1,2)", add_coloop(direct_sum(u12, shifted(u12, 2)), 5)),
    ]


def standard_corpus() -> list[tuple[str, Matroid]]:
    """Every corpus matroid as ``(name, matroid)`` in a fixed order."""
    out = list(uniform_corpus())
    out += [(name, M) for name, M, _, _ in partition_corpus()]
    out += [(name, M) for name, M, _ in graphic_corpus()]
    out += [(name, M) for name, M, _ in transversal_corpus()]
    out += combined_corpus()
    return out
