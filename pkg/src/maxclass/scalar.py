"""Exact scalars over GF(p) and Q, plus binomial coefficients modulo p.

A :class:`Scalar` carries its characteristic.  Residues are kept in
``[0, p)``; rationals are :class:`fractions.Fraction` values, which are
always in lowest terms with a positive denominator.  Combining scalars of
different characteristic raises :class:`CharacteristicMismatch`.

The heavy kernels elsewhere in the package work on *raw* values (plain
``int`` residues or ``Fraction``) and only wrap results in :class:`Scalar`
at their boundaries; :func:`reduce_raw` is the single normalisation point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

__all__ = [
    "CharacteristicMismatch",
    "PrimePowerWitness",
    "Scalar",
    "binom_lucas",
    "binom_mod",
    "check_prime",
    "is_power_of_p",
    "is_prime",
    "reduce_raw",
]

Raw = Union[int, Fraction]


class CharacteristicMismatch(ValueError):
    """Two scalars of different characteristic were combined."""


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    return all(k % d for d in range(3, math.isqrt(k) + 1, 2))


def check_prime(p: int) -> int:
    """Return ``p`` if it is prime, otherwise raise ``ValueError``."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic must be a prime, got {p!r}")
    return p


def _check_characteristic(characteristic: int) -> None:
    if characteristic != 0:
        check_prime(characteristic)


def reduce_raw(value, characteristic: int) -> Raw:
    """Normalise ``value`` into the canonical raw form for ``characteristic``.

    Fractions are reduced modulo ``p`` through the inverse of their
    denominator; a denominator divisible by ``p`` raises
    ``ZeroDivisionError``.
    """
    if characteristic == 0:
        return Fraction(value)
    if isinstance(value, Fraction):
        den = value.denominator % characteristic
        if den == 0:
            raise ZeroDivisionError(
                f"denominator of {value} is not invertible modulo {characteristic}"
            )
        return value.numerator * pow(den, -1, characteristic) % characteristic
    return int(value) % characteristic


@dataclass(frozen=True)
class Scalar:
    """An exact element of GF(p) (``characteristic == p``) or of Q (``0``)."""

    characteristic: int
    value: Raw = 0

    def __post_init__(self):
        _check_characteristic(self.characteristic)
        object.__setattr__(self, "value", reduce_raw(self.value, self.characteristic))

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, characteristic: int) -> "Scalar":
        return cls(characteristic, 0)

    @classmethod
    def one(cls, characteristic: int) -> "Scalar":
        return cls(characteristic, 1)

    @classmethod
    def parse(cls, text: str, characteristic: int) -> "Scalar":
        """Parse the decimal serialisation (``"2"``, ``"-3"``, ``"9/10"``)."""
        return cls(characteristic, Fraction(text.strip()))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        field = "Q" if self.characteristic == 0 else f"GF({self.characteristic})"
        return f"Scalar({self.value} in {field})"

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.characteristic != self.characteristic:
                raise CharacteristicMismatch(
                    f"cannot combine characteristic {self.characteristic} "
                    f"with characteristic {other.characteristic}"
                )
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return reduce_raw(other, self.characteristic)
        return NotImplemented

    def _wrap(self, value) -> "Scalar":
        return Scalar(self.characteristic, value)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        return self._wrap(-self.value)

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        if self.characteristic == 0:
            return self._wrap(1 / self.value)
        return self._wrap(pow(self.value, -1, self.characteristic))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self._wrap(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(o) * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.characteristic == 0:
            return self._wrap(self.value**exponent)
        return self._wrap(pow(self.value, exponent, self.characteristic))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.characteristic == other.characteristic and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.value == reduce_raw(other, self.characteristic)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.characteristic, self.value))


@dataclass(frozen=True)
class PrimePowerWitness:
    """Certificate that ``value == base ** exponent``."""

    base: int
    exponent: int

    @property
    def value(self) -> int:
        return self.base**self.exponent

    def __int__(self) -> int:
        return self.value


def is_power_of_p(k: int, p: int) -> Optional[PrimePowerWitness]:
    """Return a witness ``p**c == k`` or ``None`` when ``k`` is no power of ``p``."""
    check_prime(p)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    c = 0
    while k % p == 0:
        k //= p
        c += 1
    return PrimePowerWitness(p, c) if k == 1 else None


def binom_mod(a: int, b: int, p: int) -> int:
    """``C(a, b) mod p`` as a plain residue, digit by digit in base ``p``."""
    if b < 0 or a < 0 or b > a:
        return 0
    result = 1
    while b:
        a, ai = divmod(a, p)
        b, bi = divmod(b, p)
        if bi > ai:
            return 0
        result = result * math.comb(ai, bi) % p
    return result


def binom_lucas(a: int, b: int, p: int) -> Scalar:
    """Binomial coefficient ``C(a, b)`` in GF(p), via Lucas' theorem."""
    check_prime(p)
    if a < 0 or b < 0:
        raise ValueError("binom_lucas takes non-negative arguments")
    return Scalar(p, binom_mod(a, b, p))
