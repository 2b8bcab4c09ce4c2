"""Immutable strictly increasing sets of exact rationals."""

from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union


class SortedRationalSet:
    """
    Deduplicated increasing tuple of ``Fraction``.

    Used for V_i, R_i, E, Psi(v) and psi(R). Set operations return new
    instances and keep the ordering invariant.
    """

    __slots__ = ("_elems",)

    def __init__(self, values: Iterable[Union[int, Fraction]] = ()):
        self._elems = tuple(sorted({Fraction(v) for v in values}))

    @classmethod
    def from_sorted(cls, values: Sequence[Fraction]) -> "SortedRationalSet":
        """Wrap values already strictly increasing (no copy of the check)."""
        instance = cls.__new__(cls)
        instance._elems = tuple(values)
        return instance

    # ==================== container protocol ====================

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._elems)

    def __len__(self) -> int:
        return len(self._elems)

    def __getitem__(self, index):
        return self._elems[index]

    def __contains__(self, value) -> bool:
        value = Fraction(value)
        i = bisect_left(self._elems, value)
        return i < len(self._elems) and self._elems[i] == value

    def __eq__(self, other):
        if isinstance(other, SortedRationalSet):
            return self._elems == other._elems
        if isinstance(other, (set, frozenset, list, tuple)):
            return set(self._elems) == {Fraction(v) for v in other}
        return NotImplemented

    def __hash__(self):
        return hash(self._elems)

    def __repr__(self):
        inner = ", ".join(str(v) for v in self._elems)
        return f"SortedRationalSet({{{inner}}})"

    @property
    def elems(self) -> tuple:
        return self._elems

    def min(self) -> Optional[Fraction]:
        return self._elems[0] if self._elems else None

    def max(self) -> Optional[Fraction]:
        return self._elems[-1] if self._elems else None

    # ==================== set algebra ====================

    def union(self, other: Iterable) -> "SortedRationalSet":
        return SortedRationalSet(self._elems + tuple(Fraction(v) for v in other))

    def intersection(self, other: Iterable) -> "SortedRationalSet":
        if not isinstance(other, SortedRationalSet):
            other = SortedRationalSet(other)
        return SortedRationalSet.from_sorted([v for v in self._elems if v in other])

    def difference(self, other: Iterable) -> "SortedRationalSet":
        if not isinstance(other, SortedRationalSet):
            other = SortedRationalSet(other)
        return SortedRationalSet.from_sorted([v for v in self._elems if v not in other])

    def issubset(self, other: "SortedRationalSet") -> bool:
        return all(v in other for v in self._elems)

    def shift(self, c) -> "SortedRationalSet":
        c = Fraction(c)
        return SortedRationalSet.from_sorted([v + c for v in self._elems])

    def scale(self, c) -> "SortedRationalSet":
        c = Fraction(c)
        if c == 0:
            return SortedRationalSet([0]) if self._elems else SortedRationalSet()
        scaled = [v * c for v in self._elems]
        if c < 0:
            scaled.reverse()
        return SortedRationalSet.from_sorted(scaled)

    def up_to(self, bound) -> "SortedRationalSet":
        """Elements <= bound."""
        return SortedRationalSet.from_sorted(self._elems[:bisect_right(self._elems, Fraction(bound))])

    def above(self, value) -> Optional[Fraction]:
        """Least element strictly greater than value, or None."""
        i = bisect_right(self._elems, Fraction(value))
        return self._elems[i] if i < len(self._elems) else None
