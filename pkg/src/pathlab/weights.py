"""Exact edge weights with an absorbing INFINITY sentinel.

Finite weights are stored as :class:`fractions.Fraction` so label values,
distances, and rendered traces compare bit-exactly regardless of how many
additions produced them. INFINITY is a distinct sentinel (not a big number):
it absorbs addition and sorts above every finite value.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class Weight:
    """A non-negative exact distance, or the INFINITY sentinel."""

    __slots__ = ("_value",)

    _value: Fraction | None

    def __init__(self, value: Fraction | None):
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, val):  # pragma: no cover - guard only
        raise AttributeError("Weight is immutable")

    @classmethod
    def finite(cls, value: int | str | Fraction) -> "Weight":
        return cls(Fraction(value))

    @classmethod
    def zero(cls) -> "Weight":
        return _ZERO

    @classmethod
    def from_token(cls, token: str) -> "Weight":
        """Parse a matrix/edge-list token: a decimal literal or ``INF``.

        Raises ValueError for anything else.
        """
        if token.upper() == "INF":
            return INFINITY
        return cls(Fraction(token))

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def fraction(self) -> Fraction:
        if self._value is None:
            raise ValueError("INFINITY has no finite value")
        return self._value

    def __add__(self, other) -> "Weight":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value is None or other._value is None:
            return INFINITY
        return Weight(self._value + other._value)

    __radd__ = __add__

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        if self._value is None:
            return hash(("pathlab.Weight", "INF"))
        return hash(self._value)

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value is None:
            return False
        if other._value is None:
            return True
        return self._value < other._value

    def __le__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self == other or self < other

    def __gt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other < self

    def __ge__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other <= self

    def __str__(self) -> str:
        if self._value is None:
            return "INF"
        return _decimal_str(self._value)

    def __repr__(self) -> str:
        if self._value is None:
            return "INFINITY"
        return f"Weight({self._value})"


INFINITY = Weight(None)
_ZERO = Weight(Fraction(0))


def _coerce(value) -> Weight:
    if isinstance(value, Weight):
        return value
    if isinstance(value, Rational):
        return Weight(Fraction(value))
    return NotImplemented


def saturating_add(a: Weight, b: Weight) -> Weight:
    """Sum of two weights; INFINITY absorbs. Exact for finite operands."""
    return _coerce(a) + _coerce(b)


def _decimal_str(q: Fraction) -> str:
    # Exact decimal expansion when the denominator divides a power of ten,
    # fraction notation otherwise (cannot occur for parsed decimal input).
    num, den = q.numerator, q.denominator
    if den == 1:
        return str(num)
    twos = fives = 0
    d = den
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{num}/{den}"
    k = max(twos, fives)
    scaled = num * 10**k // den
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(k + 1, "0")
    return f"{sign}{digits[:-k]}.{digits[-k:]}"
