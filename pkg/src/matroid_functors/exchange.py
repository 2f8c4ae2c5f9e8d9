"""Symmetric exchanges between bases and a bounded test bench for White's conjecture.

A basis sequence ``(A_1, ..., A_m)`` may be rewritten by

* a symmetric exchange: ``x in A_r`` and ``y in A_s`` trade places,
* a permutation of the positions,
* a symmetric subset exchange: ``U <= A_r`` and ``V <= A_s`` trade places,

provided every rewritten entry is again a basis. ``te_check(M, i, m)`` decides
whether every pair of compatible length-``m`` sequences (equal multiset
unions) is connected by moves of kind ``i``:

* ``i = 1``: symmetric exchanges only
* ``i = 2``: symmetric exchanges and adjacent transpositions
* ``i = 3``: symmetric subset exchanges

All sequences are enumerated explicitly, so the answer is exact for the
given ``m`` and says nothing about longer sequences.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import Matroid, MatroidError
from .functors import contract, copy_labels
from .labels import Label, as_label, as_labels, iter_bits, submasks

HOLDS = "holds_at_m"
FAILS = "fails_at_m"
BUDGET = "budget_exceeded"

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class BasisSequence:
    """An ordered tuple of bases; compatibility compares multiset unions."""

    bases: tuple[frozenset[Label], ...]

    def __post_init__(self):
        object.__setattr__(self, "bases", tuple(as_labels(b) for b in self.bases))

    @classmethod
    def of(cls, *bases: Iterable) -> "BasisSequence":
        return cls(tuple(bases))

    @cached_property
    def union_multiset(self) -> Counter:
        c: Counter = Counter()
        for b in self.bases:
            c.update(b)
        return c

    def __len__(self):
        return len(self.bases)

    def __getitem__(self, k):
        return self.bases[k]

    def __str__(self):
        return "(" + ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.bases) + ")"


# -- moves -------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetricExchange:
    r: int
    s: int
    x: Label
    y: Label

    def __post_init__(self):
        object.__setattr__(self, "x", as_label(self.x))
        object.__setattr__(self, "y", as_label(self.y))


@dataclass(frozen=True)
class Permutation:
    """Reorder positions: entry ``k`` of the result is entry ``order[k]`` of the input."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class SubsetExchange:
    r: int
    s: int
    U: frozenset[Label]
    V: frozenset[Label]

    def __post_init__(self):
        object.__setattr__(self, "U", as_labels(self.U))
        object.__setattr__(self, "V", as_labels(self.V))


Move = Union[SymmetricExchange, Permutation, SubsetExchange]


def _is_basis(M: Matroid, labels: frozenset[Label]) -> bool:
    try:
        return M.mask(labels) in M.members
    except MatroidError:
        return False


def compatible(s1: BasisSequence, s2: BasisSequence) -> bool:
    """Equal length and equal multiset union of entries."""
    if len(s1) != len(s2):
        raise MatroidError(f"sequence lengths differ ({len(s1)} vs {len(s2)})")
    return s1.union_multiset == s2.union_multiset


def exchange_candidates(M: Matroid, A_r, A_s, x) -> frozenset[Label]:
    """``{y in A_s : A_r - x + y and A_s - y + x are both bases}``."""
    A_r, A_s, x = as_labels(A_r), as_labels(A_s), as_label(x)
    if x not in A_r:
        raise MatroidError(f"{x} is not in A_r")
    out = set()
    for y in A_s:
        if _is_basis(M, (A_r - {x}) | {y}) and _is_basis(M, (A_s - {y}) | {x}):
            out.add(y)
    return frozenset(out)


def subset_exchange_candidates(M: Matroid, A_r, A_s, U) -> frozenset[frozenset[Label]]:
    """``{V <= A_s : A_r - U + V and A_s - V + U are both bases}``."""
    A_r, A_s, U = as_labels(A_r), as_labels(A_s), as_labels(U)
    if not U <= A_r:
        raise MatroidError("U is not a subset of A_r")
    pool = sorted(A_s)
    out = set()
    for k in range(len(pool) + 1):
        for V in combinations(pool, k):
            V = frozenset(V)
            if _is_basis(M, (A_r - U) | V) and _is_basis(M, (A_s - V) | U):
                out.add(V)
    return frozenset(out)


def _check_positions(seq: BasisSequence, r: int, s: int):
    m = len(seq)
    if not (0 <= r < m and 0 <= s < m) or r == s:
        raise MatroidError(f"positions ({r}, {s}) must be distinct indices below {m}")


def apply_move(M: Matroid, seq: BasisSequence, move: Move) -> BasisSequence:
    """Rewrite ``seq`` by ``move`` (positions are 0-based).

    Raises :class:`MatroidError` naming the violated condition if the move
    is not legal for ``seq`` in ``M``.
    """
    bases = list(seq.bases)
    for b in bases:
        if not _is_basis(M, b):
            raise MatroidError(f"sequence entry {sorted(b)} is not a basis")
    if isinstance(move, Permutation):
        if sorted(move.order) != list(range(len(bases))):
            raise MatroidError(f"{move.order} is not a permutation of the positions")
        return BasisSequence(tuple(bases[k] for k in move.order))
    _check_positions(seq, move.r, move.s)
    A_r, A_s = bases[move.r], bases[move.s]
    if isinstance(move, SymmetricExchange):
        if move.x not in A_r:
            raise MatroidError(f"{move.x} is not in A_r")
        if move.y not in exchange_candidates(M, A_r, A_s, move.x):
            raise MatroidError(f"{move.y} is not in E({move.x}; A_r, A_s)")
        U, V = frozenset({move.x}), frozenset({move.y})
    elif isinstance(move, SubsetExchange):
        U, V = move.U, move.V
        if not U <= A_r:
            raise MatroidError("U is not a subset of A_r")
        if not V <= A_s:
            raise MatroidError("V is not a subset of A_s")
        if not (_is_basis(M, (A_r - U) | V) and _is_basis(M, (A_s - V) | U)):
            raise MatroidError("V is not in E(U; A_r, A_s)")
    else:
        raise TypeError(f"unknown move {move!r}")
    bases[move.r] = (A_r - U) | V
    bases[move.s] = (A_s - V) | U
    return BasisSequence(tuple(bases))


def uniform_swap_chain(M: Matroid, A1, A2) -> list[SymmetricExchange]:
    """Symmetric exchanges taking ``(A1, A2)`` to ``(A2, A1)`` in a uniform matroid.

    The ``p``-th move swaps the ``p``-th element of ``A1 - A2`` with the
    ``p``-th element of ``A2 - A1`` (both in label order). Each step is
    checked against :func:`exchange_candidates`.
    """
    A1, A2 = as_labels(A1), as_labels(A2)
    if len(A1) != len(A2):
        raise MatroidError("bases have different sizes")
    outgoing = sorted(A1 - A2)
    incoming = sorted(A2 - A1)
    chain = []
    cur = BasisSequence((A1, A2))
    for x, y in zip(outgoing, incoming):
        move = SymmetricExchange(0, 1, x, y)
        if y not in exchange_candidates(M, cur[0], cur[1], x):
            raise MatroidError(f"swap {x} <-> {y} is not a symmetric exchange")
        cur = apply_move(M, cur, move)
        chain.append(move)
    return chain


# -- pair transition tables --------------------------------------------------


class _Transitions:
    """Per ordered pair of basis indices, the pairs reachable by one move."""

    def __init__(self, M: Matroid):
        self.M = M
        self.masks = M.sorted_members()
        self.index = {b: k for k, b in enumerate(self.masks)}
        self._tables: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}

    @property
    def count(self) -> int:
        return len(self.masks)

    def pairs(self, a: int, b: int, subset: bool) -> list[tuple[int, int]]:
        A, B = self.masks[a], self.masks[b]
        index = self.index
        found = set()
        if subset:
            swaps = ((U, V) for U in submasks(A) for V in submasks(B) if U.bit_count() == V.bit_count())
        else:
            swaps = ((1 << x, 1 << y) for x in iter_bits(A) for y in iter_bits(B))
        for U, V in swaps:
            na = (A & ~U) | V
            nb = (B & ~V) | U
            if na in index and nb in index:
                found.add((index[na], index[nb]))
        found.discard((a, b))
        return sorted(found)

    def table(self, subset: bool):
        """CSR layout: targets of pair code ``a*n+b`` are ``ta[ptr[c]:ptr[c+1]]`` etc."""
        key = int(subset)
        if key not in self._tables:
            n = self.count
            ptr = np.zeros(n * n + 1, dtype=np.int64)
            ta: list[int] = []
            tb: list[int] = []
            for a in range(n):
                for b in range(n):
                    for x, y in self.pairs(a, b, subset):
                        ta.append(x)
                        tb.append(y)
                    ptr[a * n + b + 1] = len(ta)
            self._tables[key] = (ptr, np.asarray(ta, dtype=np.int64), np.asarray(tb, dtype=np.int64))
        return self._tables[key]


def _sequence_digits(n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """All ``n**m`` sequences as rows of basis indices, lexicographically ordered."""
    weights = n ** np.arange(m - 1, -1, -1, dtype=np.int64)
    codes = np.arange(n**m, dtype=np.int64)
    digits = (codes[:, None] // weights[None, :]) % n
    return digits, weights


def _move_edges(trans: _Transitions, digits, weights, subset: bool):
    n = trans.count
    m = digits.shape[1]
    ptr, ta, tb = trans.table(subset)
    codes = np.arange(digits.shape[0], dtype=np.int64)
    srcs, dsts = [], []
    for r, s in combinations(range(m), 2):
        pc = digits[:, r] * n + digits[:, s]
        start = ptr[pc]
        cnt = ptr[pc + 1] - start
        total = int(cnt.sum())
        if total == 0:
            continue
        src = np.repeat(codes, cnt)
        first = np.repeat(np.cumsum(cnt) - cnt, cnt)
        idx = np.repeat(start, cnt) + (np.arange(total, dtype=np.int64) - first)
        dst = src + (ta[idx] - digits[src, r]) * weights[r] + (tb[idx] - digits[src, s]) * weights[s]
        srcs.append(src)
        dsts.append(dst)
    return srcs, dsts


def _swap_edges(digits, weights):
    codes = np.arange(digits.shape[0], dtype=np.int64)
    srcs, dsts = [], []
    for k in range(digits.shape[1] - 1):
        diff = digits[:, k + 1] - digits[:, k]
        dst = codes + diff * weights[k] - diff * weights[k + 1]
        keep = diff != 0
        srcs.append(codes[keep])
        dsts.append(dst[keep])
    return srcs, dsts


def _components(N: int, srcs, dsts) -> np.ndarray:
    if srcs:
        src = np.concatenate(srcs)
        dst = np.concatenate(dsts)
    else:
        src = dst = np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N)).tocsr()
    _, labels = connected_components(graph, directed=True, connection="weak")
    return labels


@dataclass(frozen=True)
class TEVerdict:
    """Outcome of a bounded connectivity check.

    ``witness`` (when failing) is the lexicographically least pair of
    compatible sequences lying in different components.
    """

    status: str
    exchange_class: int
    m: int
    nodes: int = 0
    classes: int = 0
    nontrivial_classes: int = 0
    witness: Optional[tuple[BasisSequence, BasisSequence]] = field(default=None, compare=False)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def __str__(self):
        return self.status


def _decode(trans: _Transitions, digits_row) -> BasisSequence:
    return BasisSequence(tuple(trans.M.labels(trans.masks[int(k)]) for k in digits_row))


def _connectivity(M: Matroid, i: int, m: int, budget: int, trans: Optional[_Transitions] = None):
    if i not in (1, 2, 3):
        raise MatroidError(f"exchange class must be 1, 2 or 3, got {i}")
    if m < 2:
        raise MatroidError("sequence length m must be at least 2")
    trans = trans or _Transitions(M)
    n = trans.count
    N = n**m
    if N > budget:
        return trans, None
    digits, weights = _sequence_digits(n, m)
    srcs, dsts = _move_edges(trans, digits, weights, subset=(i == 3))
    if i == 2:
        s2, d2 = _swap_edges(digits, weights)
        srcs += s2
        dsts += d2
    comp = _components(N, srcs, dsts)
    return trans, (digits, comp)


def te_check(M: Matroid, i: int, m: int, budget: int = DEFAULT_BUDGET, _trans=None) -> TEVerdict:
    """Decide whether all compatible length-``m`` sequences are connected under moves of kind ``i``."""
    trans, result = _connectivity(M, i, m, budget, _trans)
    if result is None:
        return TEVerdict(BUDGET, i, m)
    digits, comp = result
    N = len(comp)
    incidence = np.zeros((trans.count, M.size), dtype=np.int16)
    for k, b in enumerate(trans.masks):
        for p in iter_bits(b):
            incidence[k, p] = 1
    keys = incidence[digits].sum(axis=1)
    _, cls, sizes = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
    cls = cls.reshape(-1)
    n_cls = len(sizes)
    # classes whose members span more than one component
    pair = np.unique(cls.astype(np.int64) * N + comp)
    spread = np.bincount(pair // N, minlength=n_cls)
    failing = np.flatnonzero(spread > 1)
    common = dict(nodes=N, classes=n_cls, nontrivial_classes=int((sizes > 1).sum()))
    if len(failing) == 0:
        return TEVerdict(HOLDS, i, m, **common)
    codes = np.arange(N, dtype=np.int64)
    first = np.full(n_cls, N, dtype=np.int64)
    np.minimum.at(first, cls, codes)
    c = failing[np.argmin(first[failing])]
    s1 = int(first[c])
    others = codes[(cls == c) & (comp != comp[s1])]
    s2 = int(others.min())
    witness = (_decode(trans, digits[s1]), _decode(trans, digits[s2]))
    return TEVerdict(FAILS, i, m, witness=witness, **common)


def te1_via_lemma(M: Matroid, m: int, budget: int = DEFAULT_BUDGET) -> TEVerdict:
    """Class-1 verdict obtained as class 2 plus reversibility of every basis pair.

    Holds iff ``te_check(M, 2, m)`` holds and each ``(A1, A2)`` reaches
    ``(A2, A1)`` through symmetric exchanges alone.
    """
    trans = _Transitions(M)
    second = te_check(M, 2, m, budget, _trans=trans)
    if not second.holds:
        return TEVerdict(second.status, 1, m, second.nodes, second.classes,
                         second.nontrivial_classes, second.witness)
    _, result = _connectivity(M, 1, 2, budget, trans)
    if result is None:
        return TEVerdict(BUDGET, 1, m)
    _, comp = result
    n = trans.count
    for a in range(n):
        for b in range(a + 1, n):
            if comp[a * n + b] != comp[b * n + a]:
                A, B = (M.labels(trans.masks[k]) for k in (a, b))
                witness = (BasisSequence((A, B)), BasisSequence((B, A)))
                return TEVerdict(FAILS, 1, m, second.nodes, second.classes,
                                 second.nontrivial_classes, witness)
    return TEVerdict(HOLDS, 1, m, second.nodes, second.classes, second.nontrivial_classes)


# -- lifts and projections between M and an expansion ------------------------


def lift_sequence(M: Matroid, alpha, seq: BasisSequence) -> BasisSequence:
    """Lift a sequence of bases of ``M`` to bases of ``M^alpha``.

    The ``q``-th occurrence (0-based, scanning the sequence in order) of an
    element with ``k`` copies receives copy ``q mod k``. Compatible inputs
    therefore receive compatible lifts.
    """
    copies = dict(zip(M.ground, copy_labels(M.ground, alpha)))
    seen: Counter = Counter()
    out = []
    for b in seq.bases:
        lifted = set()
        for x in sorted(b):
            group = copies[x]
            lifted.add(group[seen[x] % len(group)])
            seen[x] += 1
        out.append(frozenset(lifted))
    return BasisSequence(tuple(out))


def project_sequence(seq: BasisSequence, mapping: dict[Label, Label]) -> BasisSequence:
    """Apply a copy-to-element map (see ``functors.projection_map``) entrywise."""
    return BasisSequence(tuple(frozenset(mapping[x] for x in b) for b in seq.bases))


# -- report ------------------------------------------------------------------


@dataclass(frozen=True)
class WhiteReport:
    """Bounded verdicts for ``i = 1, 2, 3`` and ``m = 2 .. m_max`` on the contraction."""

    ground_size: int
    bases: int
    contracted_ground_size: int
    contracted_bases: int
    alpha: tuple[int, ...]
    m_max: int
    verdicts: dict[tuple[int, int], TEVerdict]

    @property
    def sequences_explored(self) -> int:
        return sum(v.nodes for v in self.verdicts.values())

    @property
    def nontrivial_classes(self) -> int:
        return sum(v.nontrivial_classes for v in self.verdicts.values())

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts.values())

    @property
    def summary(self) -> str:
        if self.holds:
            return "yes"
        if any(v.status == FAILS for v in self.verdicts.values()):
            return "no"
        return "unknown"

    def to_kv(self) -> str:
        lines = [
            f"ground_size={self.ground_size}",
            f"bases={self.bases}",
            f"contracted_ground_size={self.contracted_ground_size}",
            f"contracted_bases={self.contracted_bases}",
            "alpha=" + ",".join(map(str, self.alpha)),
            f"m_max={self.m_max}",
        ]
        for (i, m), v in sorted(self.verdicts.items()):
            lines.append(f"te{i}_m{m}={v.status}")
        lines.append(f"sequences_explored={self.sequences_explored}")
        lines.append(f"nontrivial_classes={self.nontrivial_classes}")
        lines.append(f"verdict={self.summary}")
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        lines = [
            f"contraction: {self.ground_size} -> {self.contracted_ground_size} elements, "
            f"{self.bases} -> {self.contracted_bases} bases",
            f"{'class':>5}  {'m':>3}  {'verdict':<16}{'sequences':>10}{'nontrivial':>11}",
        ]
        for (i, m), v in sorted(self.verdicts.items()):
            lines.append(f"{'TE' + str(i):>5}  {m:>3}  {v.status:<16}{v.nodes:>10}{v.nontrivial_classes:>11}")
        return "\n".join(lines) + "\n"


def white_report(M: Matroid, m_max: int = 3, budget: int = DEFAULT_BUDGET) -> WhiteReport:
    """Contract ``M``, then run the bounded checks on the contraction."""
    if m_max < 2:
        raise MatroidError("m_max must be at least 2")
    res = contract(M)
    C = res.contracted
    trans = _Transitions(C)
    verdicts = {}
    for i in (1, 2, 3):
        for m in range(2, m_max + 1):
            verdicts[(i, m)] = te_check(C, i, m, budget, _trans=trans)
    return WhiteReport(
        ground_size=M.size,
        bases=len(M),
        contracted_ground_size=C.size,
        contracted_bases=len(C),
        alpha=tuple(res.alpha),
        m_max=m_max,
        verdicts=verdicts,
    )
