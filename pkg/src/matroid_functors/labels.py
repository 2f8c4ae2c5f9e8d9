"""Element labels ``x_i`` and ``x_{i,j}`` and small bitmask helpers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Optional

_LABEL_RE = re.compile(r"^x([1-9][0-9]*)(?:\.([1-9][0-9]*))?$")


@total_ordering
@dataclass(frozen=True)
class Label:
    """A ground element: ``x<base>`` or its copy ``x<base>.<copy>``.

    Labels sort by ``(base, copy)`` where a missing copy index sorts as
    copy 1 (ties go to the unexpanded label).
    """

    base: int
    copy: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.base, int) or self.base < 1:
            raise ValueError(f"base index must be a positive integer, got {self.base!r}")
        if self.copy is not None and (not isinstance(self.copy, int) or self.copy < 1):
            raise ValueError(f"copy index must be a positive integer, got {self.copy!r}")

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (self.base, 1 if self.copy is None else self.copy, self.copy is not None)

    def __lt__(self, other):
        if not isinstance(other, Label):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if self.copy is None:
            return f"x{self.base}"
        return f"x{self.base}.{self.copy}"

    def __repr__(self) -> str:
        return str(self)

    @property
    def is_copy(self) -> bool:
        return self.copy is not None

    @classmethod
    def parse(cls, text: str) -> "Label":
        m = _LABEL_RE.match(text.strip())
        if m is None:
            raise ValueError(f"malformed element label {text!r}")
        base, copy = m.groups()
        return cls(int(base), None if copy is None else int(copy))


def as_label(obj) -> Label:
    """Coerce a ``Label``, a positive int, an ``(i, j)`` pair or ``"x3.2"``."""
    if isinstance(obj, Label):
        return obj
    if isinstance(obj, bool):
        raise TypeError("booleans are not element labels")
    if isinstance(obj, int):
        return Label(obj)
    if isinstance(obj, str):
        return Label.parse(obj)
    if isinstance(obj, tuple) and len(obj) == 2:
        return Label(obj[0], obj[1])
    raise TypeError(f"cannot interpret {obj!r} as an element label")


def as_labels(items: Iterable) -> frozenset[Label]:
    return frozenset(as_label(x) for x in items)


def format_labels(labels: Iterable[Label]) -> str:
    return " ".join(str(x) for x in sorted(labels))


# -- bitmask helpers ---------------------------------------------------------


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
