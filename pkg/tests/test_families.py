import random
from itertools import product

import pytest

import oracles
from matroid_functors import (
    Label,
    MatroidError,
    MultiGraph,
    SetSystem,
    circuits,
    contract,
    expand_family,
    expand_graph,
    expand_presentation,
    graphic_matroid,
    has_transversal,
    is_binary,
    is_matroid,
    matroids_isomorphic,
    max_matching,
    partition_matroid,
    restriction,
    transversal_matroid,
    uniform,
)
from matroid_functors.corpus import GRAPHS, graphic_corpus, partition_corpus, standard_corpus, transversal_corpus
from matroid_functors.families import copy_partition, partition_basis_count

L = Label


def labels(*xs):
    return frozenset(L(x) for x in xs)


# -- uniform / partition -----------------------------------------------------


def test_uniform_examples():
    assert set(uniform(2, 3).sets()) == {labels(1, 2), labels(1, 3), labels(2, 3)}
    assert uniform(0, 2).sets() == [frozenset()]
    U = uniform(3, 4, ground=[1, 3, 5, 7])
    assert [str(x) for x in U.ground] == ["x1", "x3", "x5", "x7"] and len(U) == 4
    with pytest.raises(MatroidError):
        uniform(3, 2)


def test_partition_examples():
    P = SetSystem.of([[1, 2], [3]])
    assert set(partition_matroid(P, 2).sets()) == {labels(1, 3), labels(2, 3)}
    assert partition_matroid(SetSystem.of([[1], [2], [3]]), 2) == uniform(2, 3)
    with pytest.raises(MatroidError, match="blocks overlap or do not cover"):
        partition_matroid(SetSystem.of([[1, 2], [2, 3]]), 1)
    with pytest.raises(MatroidError, match="blocks overlap or do not cover"):
        partition_matroid(SetSystem.of([[1]], ground=[1, 2]), 1)
    with pytest.raises(MatroidError):
        partition_matroid(P, 3)


def test_partition_counts_and_uniform_expansion():
    for name, M, P, t in partition_corpus():
        assert is_matroid(M), name
        assert len(M) == partition_basis_count([len(b) for b in P.sets], t), name
        sizes = [len(b) for b in P.sets]
        U = uniform(t, len(sizes))
        assert matroids_isomorphic(expand_family(U, sizes), M) is not None, name


def test_copy_partition_matches_expansion():
    for alpha in product((1, 2, 3), repeat=3):
        P = copy_partition([1, 2, 3], alpha)
        assert expand_family(uniform(2, 3), alpha) == partition_matroid(P, 2)


# -- graphic -----------------------------------------------------------------


def test_graphic_example(graph_g, graphic6):
    M = graphic_matroid(graph_g)
    assert M == graphic6
    want = {
        labels(1, 2, 3), labels(1, 2, 4), labels(1, 3, 4), labels(1, 3, 5),
        labels(1, 4, 5), labels(2, 3, 4), labels(2, 3, 5), labels(2, 4, 5),
    }
    assert set(M.sets()) == want
    assert L(6) in M.ground and all(L(6) not in B for B in M.sets())


def test_graphic_small_examples():
    tri = graphic_matroid(GRAPHS["triangle"])
    assert matroids_isomorphic(tri, uniform(2, 3)) is not None
    single = graphic_matroid(MultiGraph(2, ((1, 1, 2),)))
    assert single == uniform(1, 1)
    with pytest.raises(MatroidError, match="graph not connected"):
        graphic_matroid(MultiGraph(4, ((1, 1, 2), (2, 3, 4))))


def test_spanning_trees_match_oracle():
    for name, M, G in graphic_corpus():
        edges = [(e, u, v) for e, u, v in G.edges]
        assert set(M.sets()) == oracles.spanning_trees(G.vertex_count, edges), name
        assert is_matroid(M)


def test_graphic_expansion_is_graphic(graph_g, graphic6):
    alpha = (1, 1, 1, 1, 2, 2)
    E = expand_family(graphic6, alpha)
    assert len(E) == 12
    G2 = expand_graph(graph_g, alpha)
    assert matroids_isomorphic(E, graphic_matroid(G2)) is not None
    rng = random.Random(4)
    for name, M, G in graphic_corpus():
        for _ in range(3):
            a = [rng.randint(1, 2) for _ in M.ground]
            got = graphic_matroid(expand_graph(G, a))
            assert matroids_isomorphic(expand_family(M, a), got) is not None, (name, a)


def test_restriction_to_first_copies_recovers_matroid(graphic6):
    alpha = (2, 1, 2, 1, 2, 2)
    E = expand_family(graphic6, alpha)
    firsts = [x for x in E.ground if x.copy == 1]
    assert matroids_isomorphic(restriction(E, firsts), graphic6) is not None


# -- transversal -------------------------------------------------------------


def test_hall_examples():
    assert not has_transversal(SetSystem.of([[1], [1]]))
    S = SetSystem.of([[1, 2], [1, 3]])
    assert has_transversal(S)
    assert len(max_matching(S)) == 2
    assert not has_transversal(SetSystem.of([[1, 2], []], ground=[1, 2]))


def _random_system(rng, n, k):
    return [[x for x in range(1, n + 1) if rng.random() < 0.4] for _ in range(k)]


def test_hall_matches_brute_force():
    rng = random.Random(13)
    for _ in range(300):
        n, k = rng.randint(1, 6), rng.randint(1, 4)
        sets = _random_system(rng, n, k)
        S = SetSystem.of(sets, ground=range(1, n + 1))
        assert has_transversal(S) == oracles.hall([frozenset(s) for s in sets])


def test_transversal_example():
    S = SetSystem.of([[1, 2], [1, 3]], ground=[1, 2, 3])
    assert set(transversal_matroid(S).sets()) == {labels(1, 2), labels(1, 3), labels(2, 3)}
    # the three-set reading has a full transversal
    S3 = SetSystem.of([[1, 2], [1, 3], [3]], ground=[1, 2, 3, 4])
    assert transversal_matroid(S3).sets() == [labels(1, 2, 3)]
    one = transversal_matroid(SetSystem.of([[1]], ground=[1, 2]))
    assert one.sets() == [labels(1)] and one.size == 2


def test_transversal_matches_partial_transversal_oracle():
    rng = random.Random(17)
    for _ in range(120):
        n, k = rng.randint(1, 5), rng.randint(1, 3)
        sets = _random_system(rng, n, k)
        S = SetSystem.of(sets, ground=range(1, n + 1))
        M = transversal_matroid(S)
        pt = oracles.partial_transversals([frozenset(L(x) for x in s) for s in sets], M.ground)
        top = max(len(x) for x in pt)
        assert set(M.sets()) == {x for x in pt if len(x) == top}
        assert is_matroid(M)


def test_transversal_restriction_consistency():
    rng = random.Random(19)
    for name, M, S in transversal_corpus():
        for _ in range(4):
            X = [x for x in M.ground if rng.random() < 0.6]
            cut = SetSystem.of([s & frozenset(X) for s in S.sets], ground=X)
            assert restriction(M, X) == transversal_matroid(cut), (name, X)


def test_expand_presentation_examples():
    S = SetSystem.of([[1, 2], [1, 3]], ground=[1, 2, 3])
    E = expand_presentation(S, (2, 1, 1))
    assert E.sets == [
        frozenset({L(1, 1), L(1, 2), L(2, 1)}),
        frozenset({L(1, 1), L(1, 2), L(3, 1)}),
    ]
    with pytest.raises(MatroidError):
        expand_presentation(S, (1, 1))


def _shared(S):
    # elements lying in two or more members
    counts = {}
    for s in S.sets:
        for x in s:
            counts[x] = counts.get(x, 0) + 1
    return {x for x, c in counts.items() if c >= 2}


def test_transversal_expansion_commutes_off_shared_elements():
    # copying an element that lies in a single member keeps the copies parallel
    checked = 0
    for name, M, S in transversal_corpus():
        shared = _shared(S)
        for alpha in product((1, 2), repeat=M.size):
            if any(k > 1 and x in shared for x, k in zip(M.ground, alpha)):
                continue
            left = transversal_matroid(expand_presentation(S, alpha))
            assert left == expand_family(M, alpha), (name, alpha)
            checked += 1
    assert checked > 20


def test_expanded_presentation_can_match_two_copies():
    # x1 lies in both sets, so both copies of x1 are matched at once and the
    # expanded presentation does not present the expanded matroid
    S = SetSystem.of([[1, 2], [1, 3]], ground=[1, 2, 3])
    alpha = (2, 1, 1)
    left = transversal_matroid(expand_presentation(S, alpha))
    right = expand_family(transversal_matroid(S), alpha)
    pair = frozenset({L(1, 1), L(1, 2)})
    assert pair in set(left.sets())
    assert pair in set(circuits(right).sets())
    assert (len(left), len(right)) == (6, 5)
    assert matroids_isomorphic(left, right) is None


# -- binary ------------------------------------------------------------------


def test_binary_examples(binary7):
    assert is_binary(binary7)
    assert not is_binary(uniform(2, 4))
    assert is_binary(uniform(3, 3))


def test_expansion_adds_parallel_circuits():
    E = expand_family(uniform(2, 3), (2, 1, 1))
    C = set(circuits(E).sets())
    assert frozenset({L(1, 1), L(1, 2)}) in C


def test_binary_preserved_by_expansion_and_contraction(binary7):
    for name, M in standard_corpus() + [("binary7", binary7)]:
        b = is_binary(M)
        for alpha in [(2,) + (1,) * (M.size - 1), (1,) * (M.size - 1) + (2,)]:
            assert is_binary(expand_family(M, alpha)) == b, (name, alpha)
        assert is_binary(contract(M).contracted) == b, name
