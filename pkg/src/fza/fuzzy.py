"""Exact sparse fuzzy sets under max-min algebra.

Membership degrees are :class:`fractions.Fraction` values in ``[0, 1]``.
A :class:`FuzzySet` stores only its support, so the empty fuzzy set has a
single canonical representation, :data:`EMPTY`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import ValidationError

__all__ = [
    "Value",
    "ZERO",
    "ONE",
    "FuzzySet",
    "EMPTY",
    "parse_value",
    "format_value",
    "as_value",
    "check_name",
    "make_fuzzy_set",
    "singleton",
    "height",
    "union",
    "intersect",
    "scale",
    "contains",
]

Value = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

ValueLike = Union[Fraction, int, str]

_LITERAL = re.compile(r"(\d+)(?:\.(\d+))?|(\d+)/(\d+)")
_NAME = re.compile(r"\S+")


def parse_value(text: str) -> Fraction:
    """Parse a decimal (``0.7``) or fraction (``7/10``) literal into a degree."""
    m = _LITERAL.fullmatch(text)
    if m is None:
        raise ValidationError(f"bad value literal {text!r}")
    if m.group(3) is not None:
        den = int(m.group(4))
        if den == 0:
            raise ValidationError(f"zero denominator in {text!r}")
        v = Fraction(int(m.group(3)), den)
    else:
        v = Fraction(text)
    if v > 1:
        raise ValidationError(f"value {text!r} outside [0, 1]")
    return v


def format_value(v: Fraction) -> str:
    """Canonical literal: shortest exact decimal if one exists, else ``num/den``."""
    num, den = v.numerator, v.denominator
    if den == 1:
        return str(num)
    d, twos, fives = den, 0, 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{num}/{den}"
    places = max(twos, fives)
    digits = str(num * 10**places // den).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


def as_value(x: ValueLike) -> Fraction:
    """Coerce a Fraction, int or literal string to a degree in ``[0, 1]``.

    Floats are refused; their binary expansion would leak into exact
    comparisons.
    """
    if isinstance(x, str):
        return parse_value(x)
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise ValidationError(f"membership degree must be exact, got {x!r}")
    v = Fraction(x)
    if not 0 <= v <= 1:
        raise ValidationError(f"value {x} outside [0, 1]")
    return v


def check_name(name) -> str:
    if not isinstance(name, str) or _NAME.fullmatch(name) is None:
        raise ValidationError(f"bad element name {name!r}")
    return name


class FuzzySet:
    """Immutable finite fuzzy set with exact rational memberships.

    Built from a mapping or from ``(element, degree)`` pairs; zero degrees
    are dropped and duplicate elements in a pair list are rejected. Reading
    an element outside the support yields 0::

        >>> A = FuzzySet({"q2": "0.5", "q4": "0.9"})
        >>> A["q4"], A["q0"]
        (Fraction(9, 10), Fraction(0, 1))
    """

    __slots__ = ("_map", "_items", "_hash")

    def __init__(self, entries: Mapping[str, ValueLike] | Iterable[Tuple[str, ValueLike]] = ()):
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        m = {}
        for pair in pairs:
            try:
                name, value = pair
            except (TypeError, ValueError):
                raise ValidationError(f"expected (element, degree) pair, got {pair!r}") from None
            check_name(name)
            if name in m:
                raise ValidationError(f"duplicate element {name!r}")
            m[name] = as_value(value)
        self._set({k: v for k, v in m.items() if v})

    @classmethod
    def _trusted(cls, m: dict) -> FuzzySet:
        # m must already be validated and free of zeros
        fs = cls.__new__(cls)
        fs._set(m)
        return fs

    def _set(self, m: dict) -> None:
        self._map = m
        self._items = tuple(sorted(m.items()))
        self._hash = hash(self._items)

    def __getitem__(self, name: str) -> Fraction:
        return self._map.get(name, ZERO)

    def __contains__(self, name) -> bool:
        return name in self._map

    def __iter__(self) -> Iterator[str]:
        return (k for k, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def items(self) -> Tuple[Tuple[str, Fraction], ...]:
        """Support entries sorted by element name."""
        return self._items

    def support(self) -> frozenset:
        return frozenset(self._map)

    def height(self) -> Fraction:
        return max(self._map.values(), default=ZERO)

    def union(self, other: FuzzySet) -> FuzzySet:
        m = dict(self._map)
        for k, v in other._map.items():
            if v > m.get(k, ZERO):
                m[k] = v
        return FuzzySet._trusted(m)

    def intersect(self, other: FuzzySet) -> FuzzySet:
        small, big = (self, other) if len(self) <= len(other) else (other, self)
        m = {}
        for k, v in small._map.items():
            w = big._map.get(k)
            if w:
                m[k] = min(v, w)
        return FuzzySet._trusted(m)

    def scale(self, lam: Fraction) -> FuzzySet:
        """``lam · A``: every membership capped at ``lam``."""
        if lam >= 1:
            return self
        if lam <= 0:
            return EMPTY
        return FuzzySet._trusted({k: min(lam, v) for k, v in self._map.items()})

    def issubset(self, other: FuzzySet) -> bool:
        return all(v <= other._map.get(k, ZERO) for k, v in self._map.items())

    __or__ = union
    __and__ = intersect
    __le__ = issubset

    def __ge__(self, other: FuzzySet) -> bool:
        return other.issubset(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return self._items

    def __repr__(self) -> str:
        if not self._items:
            return "Φ"
        return " + ".join(f"{format_value(v)}/{k}" for k, v in self._items)


EMPTY = FuzzySet()


def make_fuzzy_set(pairs: Iterable[Tuple[str, ValueLike]]) -> FuzzySet:
    return FuzzySet(list(pairs))


def singleton(name: str, degree: ValueLike = 1) -> FuzzySet:
    """``degree/name``, e.g. the crisp point ``1/q``."""
    return FuzzySet({name: degree})


def height(a: FuzzySet) -> Fraction:
    return a.height()


def union(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return a.union(b)


def intersect(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return a.intersect(b)


def scale(lam: ValueLike, a: FuzzySet) -> FuzzySet:
    return a.scale(as_value(lam))


def contains(a: FuzzySet, b: FuzzySet) -> bool:
    """True when ``a ⊆ b`` pointwise."""
    return a.issubset(b)
