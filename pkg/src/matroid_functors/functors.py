"""Expansion (parallelization) and contraction of set families.

Expanding by ``alpha = (k_1, ..., k_n)`` replaces ground element ``x_i`` by
copies ``x_i.1 ... x_i.k_i``; a member expands to every way of picking one
copy per element. Contraction goes the other way: it merges elements whose
bases leave identical traces and records the class sizes as ``alpha``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .core import Family, Matroid, MatroidError, _maximal
from .labels import Label, as_label, iter_bits


@dataclass(frozen=True)
class ExpansionVector(Sequence):
    """Positive multiplicities aligned with a ground set's canonical order."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        ks = tuple(self.multiplicities)
        for k in ks:
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise MatroidError(f"multiplicities must be positive integers, got {k!r}")
        object.__setattr__(self, "multiplicities", ks)

    @classmethod
    def ones(cls, n: int) -> "ExpansionVector":
        return cls((1,) * n)

    def bumped(self, i: int) -> "ExpansionVector":
        """Add one more copy at (0-based) position ``i``."""
        ks = list(self.multiplicities)
        ks[i] += 1
        return ExpansionVector(tuple(ks))

    def __getitem__(self, i):
        return self.multiplicities[i]

    def __len__(self):
        return len(self.multiplicities)

    def __str__(self):
        return " ".join(map(str, self.multiplicities))


def as_alpha(alpha) -> ExpansionVector:
    if isinstance(alpha, ExpansionVector):
        return alpha
    return ExpansionVector(tuple(alpha))


def copy_labels(ground: Sequence[Label], alpha) -> list[tuple[Label, ...]]:
    """Labels of the copies of each ground element, in ground order.

    Unexpanded grounds keep their base indices (``x3`` -> ``x3.1, x3.2``).
    A ground that already holds copy labels is first flattened: the element
    at position ``p`` is renamed ``x{p+1}`` before copying.
    """
    alpha = as_alpha(alpha)
    if len(alpha) != len(ground):
        raise MatroidError(
            f"expansion vector has {len(alpha)} entries for a ground set of {len(ground)}"
        )
    flatten = any(x.is_copy for x in ground)
    out = []
    for p, (x, k) in enumerate(zip(ground, alpha)):
        base = p + 1 if flatten else x.base
        out.append(tuple(Label(base, j) for j in range(1, k + 1)))
    return out


def projection_map(ground: Sequence[Label], alpha) -> dict[Label, Label]:
    """Send every copy label produced by :func:`copy_labels` to its source element."""
    return {c: x for x, group in zip(ground, copy_labels(ground, alpha)) for c in group}


def _copy_bits(family: Family, alpha) -> tuple[list[Label], list[list[int]]]:
    copies = copy_labels(family.ground, alpha)
    new_ground: list[Label] = []
    bits: list[list[int]] = []
    for group in copies:
        start = len(new_ground)
        new_ground.extend(group)
        bits.append([1 << (start + j) for j in range(len(group))])
    return new_ground, bits


def expand_set(ground: Sequence[Label] | Family, subset: Iterable, alpha) -> frozenset[Label]:
    """All copies of every member of ``subset``."""
    if isinstance(ground, Family):
        ground = ground.ground
    copies = copy_labels(ground, alpha)
    index = {x: p for p, x in enumerate(ground)}
    out = set()
    for x in subset:
        x = as_label(x)
        if x not in index:
            raise MatroidError(f"element outside ground set: {x}")
        out.update(copies[index[x]])
    return frozenset(out)


def expand_family(family: Family, alpha):
    """Expand every member by choosing one copy of each of its elements.

    A :class:`Matroid` expands to a :class:`Matroid`; any other family to a
    plain :class:`Family`.
    """
    new_ground, bits = _copy_bits(family, alpha)
    out = set()
    for member in family.members:
        choices = [bits[p] for p in iter_bits(member)]
        for pick in product(*choices):
            m = 0
            for b in pick:
                m |= b
            out.add(m)
    cls = Matroid if isinstance(family, Matroid) else Family
    return cls(new_ground, out)


def project(labels: Iterable) -> frozenset[Label]:
    """Send each copy ``x_i.j`` to its base element ``x_i``."""
    out = set()
    for x in labels:
        x = as_label(x)
        if x.copy is None:
            raise MatroidError(f"label has no copy index: {x}")
        out.add(Label(x.base))
    return frozenset(out)


# -- contraction -------------------------------------------------------------


@dataclass(frozen=True)
class ContractionResult:
    """Outcome of :func:`contract`.

    ``contracted`` lives on one representative per class (the least member),
    ``alpha`` holds the class sizes in that order and ``class_map`` sends
    every original element to its representative.
    """

    contracted: Family
    alpha: ExpansionVector
    class_map: dict[Label, Label]
    classes: tuple[tuple[Label, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def expansion_relabeling(self) -> dict[Label, Label]:
        """Map the labels of ``expand_family(contracted, alpha)`` back onto the original ground."""
        copies = copy_labels(self.contracted.ground, self.alpha)
        return {c: x for group, cls in zip(copies, self.classes) for c, x in zip(group, cls)}


def equivalence_classes(family: Family) -> list[list[int]]:
    """Positions grouped by equal traces ``{A - x : A maximal, x in A}``.

    Classes are ordered by their least position. Elements lying in no
    member share the empty trace and form one class.
    """
    if not family.members:
        raise MatroidError("empty family")
    tops = _maximal(family.members)
    groups: dict[frozenset[int], list[int]] = {}
    for p in range(family.size):
        bit = 1 << p
        trace = frozenset(b & ~bit for b in tops if b & bit)
        groups.setdefault(trace, []).append(p)
    return sorted(groups.values(), key=lambda c: c[0])


def contract(family: Family) -> ContractionResult:
    classes = equivalence_classes(family)
    which = [0] * family.size
    for k, cls in enumerate(classes):
        for p in cls:
            which[p] = k
    reps = [family.ground[c[0]] for c in classes]
    images = set()
    for b in _maximal(family.members):
        m = 0
        for p in iter_bits(b):
            m |= 1 << which[p]
        images.add(m)
    out_cls = Matroid if isinstance(family, Matroid) else Family
    contracted = out_cls(reps, _maximal(images))
    labelled = tuple(tuple(family.ground[p] for p in c) for c in classes)
    class_map = {x: cls[0] for cls in labelled for x in cls}
    alpha = ExpansionVector(tuple(len(c) for c in classes))
    return ContractionResult(contracted, alpha, class_map, labelled)


def is_contracted(family: Family) -> bool:
    """True iff every equivalence class is a singleton."""
    return all(len(c) == 1 for c in equivalence_classes(family))
