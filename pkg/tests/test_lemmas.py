import lemmas
import pytest

from matroid_functors import BasisSequence, Label, lift_sequence, project, uniform
from matroid_functors.exchange import project_sequence
from matroid_functors.functors import projection_map


@pytest.fixture(scope="module")
def up_to_four():
    return lemmas.small_matroids(4)


def test_isomorphism_class_counts():
    # non-isomorphic matroids on n = 1..4 elements
    counts = [0] * 5
    for M in lemmas.small_matroids(4):
        counts[M.size] += 1
    assert counts[1:] == [2, 4, 8, 17]


def test_lemmas_exhaustive_up_to_four(up_to_four):
    cases, failures = lemmas.run_suite(up_to_four)
    assert cases == sum(2**M.size for M in up_to_four)
    assert failures == []


def test_lemmas_on_five_element_samples():
    for M in [uniform(2, 5), uniform(3, 5)]:
        for alpha in [(2, 1, 1, 1, 1), (1, 2, 1, 2, 1), (2, 2, 2, 2, 2)]:
            assert lemmas.check_lemmas(M, alpha) == []


def test_lift_examples():
    M = uniform(1, 2)
    alpha = (2, 1)
    s = BasisSequence.of([Label(1)], [Label(1)], [Label(2)])
    lifted = lift_sequence(M, alpha, s)
    assert [sorted(map(str, b)) for b in lifted.bases] == [["x1.1"], ["x1.2"], ["x2.1"]]
    pm = projection_map(M.ground, alpha)
    assert project_sequence(lifted, pm) == s
    assert all(project(b) == a for a, b in zip(s.bases, lifted.bases))


def test_checker_catches_bad_lifts(monkeypatch):
    # a lift that ignores earlier occurrences breaks compatibility of lifts
    def skewed(M, alpha, seq):
        copies = dict(zip(M.ground, (tuple(Label(x.base, j) for j in range(1, k + 1)) for x, k in zip(M.ground, alpha))))
        return BasisSequence(tuple(
            frozenset(copies[x][min(pos, len(copies[x]) - 1)] for x in b) for pos, b in enumerate(seq.bases)
        ))

    monkeypatch.setattr(lemmas, "lift_sequence", skewed)
    found = lemmas.check_lemmas(uniform(1, 2), (2, 1), lengths=(2,))
    assert ("lifts incompatible" in {f[0] for f in found})


def test_exchange_detector():
    bases = {0b011, 0b101, 0b110}
    assert lemmas._exchange_between(bases, (0b011, 0b110), (0b110, 0b011))
    assert lemmas._exchange_between(bases, (0b011, 0b101), (0b101, 0b011))
    assert not lemmas._exchange_between(bases, (0b011, 0b110), (0b011, 0b101))
