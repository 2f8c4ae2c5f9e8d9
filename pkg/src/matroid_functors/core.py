"""Explicit set families and matroids over a labelled ground set.

Subsets of the ground set are stored as integer bitmasks: bit ``p`` stands
for ``ground[p]``, and the ground tuple is always in canonical label order.
"""

from __future__ import annotations

from collections import Counter
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .labels import Label, as_label, iter_bits, submasks


class MatroidError(ValueError):
    """Raised for malformed families or violated preconditions."""


class NotAMatroidError(MatroidError):
    pass


class Family:
    """A finite family of subsets of an ordered ground set.

    Members are kept as a frozenset of bitmasks, so duplicates collapse.
    Use :meth:`from_sets` to build one from label collections.
    """

    def __init__(self, ground: Iterable[Label], members: Iterable[int]):
        ground = tuple(as_label(x) for x in ground)
        for a, b in zip(ground, ground[1:]):
            if not a < b:
                raise MatroidError("ground set must be duplicate-free and in canonical order")
        members = frozenset(members)
        full = (1 << len(ground)) - 1
        for mask in members:
            if mask & ~full:
                raise MatroidError("element outside ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "members", members)
        self._validate()

    def _validate(self):
        pass

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable], ground: Optional[Iterable] = None):
        """Build from an iterable of label collections.

        Labels may be given as :class:`Label`, ints or strings like ``"x3.2"``.
        When ``ground`` is omitted it is the union of the sets.
        """
        sets = [frozenset(as_label(x) for x in s) for s in sets]
        if ground is None:
            ground_labels = sorted(frozenset().union(*sets)) if sets else []
        else:
            ground_labels = sorted(set(as_label(x) for x in ground))
        index = {x: p for p, x in enumerate(ground_labels)}
        masks = []
        for s in sets:
            mask = 0
            for x in s:
                if x not in index:
                    raise MatroidError(f"element outside ground set: {x}")
                mask |= 1 << index[x]
            masks.append(mask)
        return cls(ground_labels, masks)

    # -- views ---------------------------------------------------------------

    @cached_property
    def index(self) -> dict[Label, int]:
        return {x: p for p, x in enumerate(self.ground)}

    @property
    def size(self) -> int:
        """Number of ground elements."""
        return len(self.ground)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.ground)) - 1

    def mask(self, labels: Iterable) -> int:
        mask = 0
        index = self.index
        for x in labels:
            x = as_label(x)
            if x not in index:
                raise MatroidError(f"element outside ground set: {x}")
            mask |= 1 << index[x]
        return mask

    def labels(self, mask: int) -> frozenset[Label]:
        return frozenset(self.ground[p] for p in iter_bits(mask))

    def sorted_members(self) -> list[int]:
        """Members in canonical order: lexicographic on their sorted labels."""
        return sorted(self.members, key=lambda m: list(iter_bits(m)))

    def sets(self) -> list[frozenset[Label]]:
        return [self.labels(m) for m in self.sorted_members()]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.sets())

    def __contains__(self, item) -> bool:
        if isinstance(item, int):
            return item in self.members
        try:
            return self.mask(item) in self.members
        except MatroidError:
            return False

    def __eq__(self, other):
        if not isinstance(other, Family):
            return NotImplemented
        return self.ground == other.ground and self.members == other.members

    def __hash__(self):
        return hash((self.ground, self.members))

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.sets())
        return f"{type(self).__name__}(ground={list(self.ground)}, members=[{body}])"


class Matroid(Family):
    """A matroid given by its ground set and basis family.

    The constructor enforces the cheap invariants (non-empty, equicardinal,
    hence an antichain). The exchange axiom is only verified by
    :func:`is_matroid`, or by ``from_sets(..., check=True)``.
    """

    def _validate(self):
        if not self.members:
            raise MatroidError("empty family")
        sizes = {m.bit_count() for m in self.members}
        if len(sizes) != 1:
            raise NotAMatroidError("bases have different cardinalities")

    @classmethod
    def from_sets(cls, sets, ground=None, check: bool = True):
        fam = Family.from_sets(sets, ground)
        return cls.from_family(fam, check=check)

    @classmethod
    def from_family(cls, family: Family, check: bool = True) -> "Matroid":
        if isinstance(family, Matroid) and not check:
            return family
        if check and not is_matroid(family):
            raise NotAMatroidError("family violates the basis exchange axiom")
        return cls(family.ground, family.members)

    @property
    def bases(self) -> list[frozenset[Label]]:
        return self.sets()

    @cached_property
    def rank(self) -> int:
        return next(iter(self.members)).bit_count()

    @cached_property
    def independent_masks(self) -> frozenset[int]:
        out = set()
        for b in self.members:
            out.update(submasks(b))
        return frozenset(out)

    @cached_property
    def circuit_masks(self) -> frozenset[int]:
        indep = self.independent_masks
        found = set()
        for i in indep:
            for p in range(self.size):
                bit = 1 << p
                if i & bit:
                    continue
                c = i | bit
                if c in indep or c in found:
                    continue
                if all((c & ~(1 << q)) in indep for q in iter_bits(c)):
                    found.add(c)
        return frozenset(found)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Number of bases through each ground element."""
        deg = [0] * self.size
        for b in self.members:
            for p in iter_bits(b):
                deg[p] += 1
        return tuple(deg)


# -- predicates --------------------------------------------------------------


def _masks_of(family) -> list[int]:
    if isinstance(family, Family):
        return list(family.members)
    return list(family)


def is_antichain(family) -> bool:
    """True iff no member properly contains another."""
    masks = _masks_of(family)
    if not masks:
        raise MatroidError("empty family")
    masks = sorted(set(masks), key=int.bit_count)
    for i, small in enumerate(masks):
        for big in masks[i + 1:]:
            if small != big and small & big == small:
                return False
    return True


def is_matroid(family: Family) -> bool:
    """Check the basis axioms: non-empty antichain with the exchange property.

    For every ``B1, B2`` and ``x`` in ``B1 - B2`` some ``y`` in ``B2 - B1``
    must make ``B1 - x + y`` a member. Antichain violations give ``False``.
    """
    masks = list(family.members)
    if not masks:
        raise MatroidError("empty family")
    if not is_antichain(masks):
        return False
    members = family.members
    n = family.size
    # swaps[(b, x)] = mask of y with b - x + y in the family
    swaps: dict[tuple[int, int], int] = {}
    for b in masks:
        for x in iter_bits(b):
            base = b & ~(1 << x)
            ok = 0
            for y in range(n):
                bit = 1 << y
                if not base & bit and (base | bit) in members:
                    ok |= bit
            swaps[(b, x)] = ok
    for b1 in masks:
        for b2 in masks:
            if b1 == b2:
                continue
            only2 = b2 & ~b1
            for x in iter_bits(b1 & ~b2):
                if not swaps[(b1, x)] & only2:
                    return False
    return True


# -- derived matroids --------------------------------------------------------


def rank(M: Matroid) -> int:
    return M.rank


def circuits(M: Matroid) -> Family:
    """Inclusion-minimal subsets of the ground set lying in no basis."""
    return Family(M.ground, M.circuit_masks)


def _maximal(masks: Iterable[int]) -> list[int]:
    masks = sorted(set(masks), key=int.bit_count, reverse=True)
    kept: list[int] = []
    for m in masks:
        if not any(m != k and m & k == m for k in kept):
            kept.append(m)
    return kept


def maximal_members(family: Family) -> Family:
    return type(family)(family.ground, _maximal(family.members))


def _remap_mask(mask: int, positions: list[int]) -> int:
    out = 0
    for p in iter_bits(mask):
        q = positions[p]
        if q >= 0:
            out |= 1 << q
    return out


def restriction(M: Matroid, keep: Iterable) -> Matroid:
    """Restrict ``M`` to ``keep``: maximal traces ``B & keep`` become the bases."""
    keep_mask = M.mask(keep)
    new_ground = [x for p, x in enumerate(M.ground) if keep_mask >> p & 1]
    positions, q = [], 0
    for p in range(M.size):
        if keep_mask >> p & 1:
            positions.append(q)
            q += 1
        else:
            positions.append(-1)
    traces = {_remap_mask(b & keep_mask, positions) for b in M.members}
    return Matroid(new_ground, _maximal(traces))


def _merge_grounds(*grounds: tuple[Label, ...]):
    union = sorted(set().union(*grounds))
    index = {x: p for p, x in enumerate(union)}
    return union, [[index[x] for x in g] for g in grounds]


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    if set(M1.ground) & set(M2.ground):
        raise MatroidError("ground sets not disjoint")
    ground, (pos1, pos2) = _merge_grounds(M1.ground, M2.ground)
    b1 = [_remap_mask(b, pos1) for b in M1.members]
    b2 = [_remap_mask(b, pos2) for b in M2.members]
    return Matroid(ground, (a | b for a in b1 for b in b2))


def add_coloop(M: Matroid, z) -> Matroid:
    """Append ``z`` to every basis."""
    z = as_label(z)
    if z in M.index:
        raise MatroidError(f"element {z} already in ground set")
    ground, (pos, (zpos,)) = _merge_grounds(M.ground, (z,))
    return Matroid(ground, (_remap_mask(b, pos) | 1 << zpos for b in M.members))


def relabel(family: Family, mapping: Mapping) -> Family:
    """Rename ground elements through an injective ``mapping``.

    Returns an object of the same type as ``family``.
    """
    new = [as_label(mapping[x]) for x in family.ground]
    if len(set(new)) != len(new):
        raise MatroidError("relabeling is not injective")
    ground, (pos,) = _merge_grounds(new)
    return type(family)(ground, (_remap_mask(m, pos) for m in family.members))


# -- isomorphism ------------------------------------------------------------


def _element_degrees(family: Family) -> list[int]:
    deg = [0] * family.size
    for b in family.members:
        for p in iter_bits(b):
            deg[p] += 1
    return deg


def matroids_isomorphic(M1: Family, M2: Family) -> Optional[dict[Label, Label]]:
    """Find a bijection of ground sets carrying the members of ``M1`` onto ``M2``.

    Backtracking over elements of ``M1``; candidates must share the basis
    degree, and every partial map must preserve the multiset of traces of
    members on the already-mapped elements. Works for any two families,
    not only matroids. Returns ``None`` when no such map exists.
    """
    n = M1.size
    if n != M2.size or len(M1.members) != len(M2.members):
        return None
    if sorted(m.bit_count() for m in M1.members) != sorted(m.bit_count() for m in M2.members):
        return None
    deg1, deg2 = _element_degrees(M1), _element_degrees(M2)
    if sorted(deg1) != sorted(deg2):
        return None

    degree_class = Counter(deg1)
    order = sorted(range(n), key=lambda p: (degree_class[deg1[p]], p))
    masks1 = list(M1.members)
    masks2 = list(M2.members)
    image = [-1] * n

    def consistent(dom1: int, dom2: int) -> bool:
        traces1 = Counter()
        for b in masks1:
            t = 0
            for p in iter_bits(b & dom1):
                t |= 1 << image[p]
            traces1[t] += 1
        traces2 = Counter(b & dom2 for b in masks2)
        return traces1 == traces2

    def search(k: int, dom1: int, dom2: int) -> bool:
        if k == n:
            return True
        p = order[k]
        for q in range(n):
            if dom2 >> q & 1 or deg2[q] != deg1[p]:
                continue
            image[p] = q
            if consistent(dom1 | 1 << p, dom2 | 1 << q) and search(k + 1, dom1 | 1 << p, dom2 | 1 << q):
                return True
            image[p] = -1
        return False

    if not search(0, 0, 0):
        return None
    return {M1.ground[p]: M2.ground[image[p]] for p in range(n)}


def is_isomorphic(M1: Family, M2: Family) -> bool:
    return matroids_isomorphic(M1, M2) is not None
