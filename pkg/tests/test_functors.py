import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from matroid_functors import (
    ExpansionVector,
    Family,
    Label,
    Matroid,
    MatroidError,
    add_coloop,
    contract,
    copy_labels,
    expand_family,
    expand_set,
    is_contracted,
    is_matroid,
    matroids_isomorphic,
    partition_matroid,
    project,
    projection_map,
    relabel,
    uniform,
)
from matroid_functors.corpus import standard_corpus
from matroid_functors.families import SetSystem

CORPUS = standard_corpus()
L = Label


def labels(*pairs):
    return frozenset(L(*p) if isinstance(p, tuple) else L(p) for p in pairs)


# -- expansion vectors -------------------------------------------------------


def test_expansion_vector_validation():
    assert list(ExpansionVector.ones(3)) == [1, 1, 1]
    assert list(ExpansionVector((1, 2)).bumped(0)) == [2, 2]
    for bad in [(0,), (1, -1), (1.5,), (True,)]:
        with pytest.raises(MatroidError):
            ExpansionVector(bad)


# -- expand_set / expand_family / project ------------------------------------


def test_expand_set_examples(u23):
    assert expand_set(u23, [1, 3], (2, 1, 2)) == labels((1, 1), (1, 2), (3, 1), (3, 2))
    assert expand_set(u23, [1, 2], (1, 1, 1)) == labels((1, 1), (2, 1))
    with pytest.raises(MatroidError):
        expand_set(u23, [1], (1, 1))


def test_expand_family_examples(graphic6):
    F = Family.from_sets([[1, 2]])
    assert set(expand_family(F, (2, 1)).sets()) == {labels((1, 1), (2, 1)), labels((1, 2), (2, 1))}
    assert len(expand_family(graphic6, (1, 1, 1, 1, 2, 2))) == 12
    with pytest.raises(MatroidError):
        expand_family(F, (1, 1, 1))


def test_expand_matches_definition_oracle():
    rng = random.Random(5)
    for name, M in CORPUS:
        if M.size > 6:
            continue
        alpha = [rng.randint(1, 3) for _ in M.ground]
        want = oracles.expand(M.sets(), M.ground, alpha)
        got = {frozenset((L(x.base), x.copy) for x in s) for s in expand_family(M, alpha).sets()}
        assert got == want, name


def test_project_examples():
    assert project(labels((1, 2), (3, 1))) == labels(1, 3)
    with pytest.raises(MatroidError, match="label has no copy index"):
        project([L(1)])


def test_project_undoes_any_copy_choice(graphic6):
    alpha = (1, 2, 1, 3, 2, 2)
    copies = dict(zip(graphic6.ground, copy_labels(graphic6.ground, alpha)))
    for B in graphic6.sets():
        for pick in product(*(copies[x] for x in sorted(B))):
            assert project(pick) == B
    E = expand_family(graphic6, alpha)
    bases = set(graphic6.sets())
    assert all(project(B) in bases for B in E.sets())


def test_copy_labels_flatten_expanded_grounds():
    E = expand_family(uniform(1, 2), (2, 1))
    assert [str(x) for x in E.ground] == ["x1.1", "x1.2", "x2.1"]
    twice = expand_family(E, (1, 2, 1))
    assert [str(x) for x in twice.ground] == ["x1.1", "x2.1", "x2.2", "x3.1"]
    assert len(twice) == 4


def test_uniform_expands_to_partition_exactly():
    for n in range(1, 5):
        for t in range(0, n + 1):
            for alpha in product((1, 2), repeat=n):
                U = uniform(t, n)
                copies = copy_labels(U.ground, alpha)
                P = SetSystem.of([list(c) for c in copies])
                if t == 0:
                    continue
                assert expand_family(U, alpha) == partition_matroid(P, t)


# -- matroid iff its expansion is a matroid ---------------------------------


family_strategy = st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.frozensets(st.integers(1, n)), min_size=1, max_size=6, unique=True),
        st.lists(st.integers(1, 3), min_size=n, max_size=n),
    )
)


@settings(max_examples=150, deadline=None)
@given(family_strategy)
def test_matroid_iff_expansion_is(data):
    n, sets, alpha = data
    F = Family.from_sets(sets, ground=range(1, n + 1))
    E = expand_family(F, alpha)
    assert is_matroid(F) == is_matroid(E) == oracles.is_matroid(F.sets())


def test_cardinality_formula_exhaustive():
    # every antichain of equicardinal sets on grounds <= 4, every alpha in {1,2}^n
    for n in range(1, 5):
        for r in range(0, n + 1):
            subsets = list(combinations(range(1, n + 1), r))
            for k in range(1, min(len(subsets), 4) + 1):
                for fam in combinations(subsets, k):
                    F = Family.from_sets(fam, ground=range(1, n + 1))
                    for alpha in product((1, 2), repeat=n):
                        want = sum(_prod(alpha[x - 1] for x in A) for A in fam)
                        assert len(expand_family(F, alpha)) == want


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


# -- incremental expansion ---------------------------------------------------


def _phi(ground, beta, i):
    """Bijection from the copies of ``(M^beta)^(1 + e_{i, last})`` onto those of ``M^(beta + e_i)``.

    Built directly from positions: the copies of ``M^beta`` are flattened to
    fresh elements, and the extra copy of the last copy of ``x_i`` becomes
    copy ``k_i + 1`` of ``x_i``.
    """
    flat = []
    for p, k in enumerate(beta):
        for j in range(1, k + 1):
            flat.append((p, j))
    last = sum(beta[: i + 1]) - 1
    target = {}
    for q, (p, j) in enumerate(flat):
        target[L(q + 1, 1)] = L(ground[p].base, j)
        if q == last:
            target[L(q + 1, 2)] = L(ground[p].base, j + 1)
    return target


def test_incremental_expansion_lemma():
    rng = random.Random(2)
    for name, M in CORPUS:
        if M.size > 6:
            continue
        for _ in range(3):
            beta = ExpansionVector(tuple(rng.randint(1, 2) for _ in M.ground))
            i = rng.randrange(M.size)
            once = expand_family(M, beta)
            bump = [1] * once.size
            bump[sum(beta[: i + 1]) - 1] = 2
            twice = expand_family(once, bump)
            direct = expand_family(M, beta.bumped(i))
            assert relabel(twice, _phi(M.ground, beta, i)) == direct, (name, beta, i)
            assert matroids_isomorphic(twice, direct) is not None


# -- contraction -------------------------------------------------------------


def test_contract_binary_example(binary7):
    res = contract(binary7)
    C = res.contracted
    assert [str(x) for x in C.ground] == ["x1", "x2", "x3", "x5", "x7"]
    assert set(C.sets()) == {labels(1, 2, 3, 5), labels(1, 2, 3, 7), labels(1, 2, 5, 7), labels(2, 3, 5, 7)}
    assert list(res.alpha) == [1, 2, 2, 1, 1]
    assert res.classes[1] == (L(2), L(4)) and res.classes[2] == (L(3), L(6))
    assert C == add_coloop(uniform(3, 4, ground=[1, 3, 5, 7]), 2)


def test_contract_uniform_examples():
    for t, n in [(2, 3), (3, 4), (2, 5)]:
        res = contract(uniform(t, n))
        assert res.is_trivial and res.contracted == uniform(t, n)
        assert is_contracted(uniform(t, n))
    res = contract(uniform(1, 2))
    assert res.contracted == uniform(1, 1)
    assert list(res.alpha) == [2]
    assert not is_contracted(uniform(1, 2))
    with pytest.raises(MatroidError, match="empty family"):
        contract(Family.from_sets([], ground=[1]))


def test_loops_form_one_class():
    M = Matroid.from_sets([[1], [3]], ground=[1, 2, 3, 4])
    res = contract(M)
    assert res.classes == ((L(1), L(3)), (L(2), L(4)))
    assert list(res.alpha) == [2, 2]
    assert res.contracted.sets() == [labels(1)]


def test_contract_round_trip_and_idempotence():
    rng = random.Random(9)
    for name, M in CORPUS:
        res = contract(M)
        back = expand_family(res.contracted, res.alpha)
        assert relabel(back, res.expansion_relabeling()) == M, name
        assert is_contracted(res.contracted), name
        assert contract(res.contracted).is_trivial
        if M.size <= 6:
            gamma = [rng.randint(1, 3) for _ in M.ground]
            again = contract(expand_family(M, gamma)).contracted
            assert matroids_isomorphic(again, res.contracted) is not None, (name, gamma)


def test_partition_contracts_to_uniform():
    from matroid_functors.corpus import partition_corpus

    for name, M, P, t in partition_corpus():
        # rank 1 collapses every element into one class
        want = uniform(t, len(P)) if t > 1 else uniform(1, 1)
        assert matroids_isomorphic(contract(M).contracted, want) is not None, name
        singletons = all(len(b) == 1 for b in P.sets)
        assert is_contracted(M) == (singletons and (t > 1 or len(P) == 1)), name


def test_expansion_relabeling_is_projection_compatible():
    M = uniform(1, 3)
    res = contract(M)
    rel = res.expansion_relabeling()
    pm = projection_map(res.contracted.ground, res.alpha)
    for c, x in rel.items():
        assert res.class_map[x] == pm[c]
