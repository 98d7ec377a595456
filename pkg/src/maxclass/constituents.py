"""Constituents of a centralizer sequence.

The first nonzero entry ``beta_(i0)`` fixes the first constituent length
``ell = i0 + n - 1``: the block ``beta_(n+1) .. beta_ell`` is credited with
length ``ell`` although it has only ``ell - n`` entries.  Every later
constituent ends ``n - 1`` places after the first nonzero entry following
the previous one, so all nonzero entries of a constituent sit among its
last ``n`` positions.  ``j_r`` denotes the index of the last entry of
constituent ``r`` and ``ell_r = j_r - j_(r-1)`` its length (``j_0 = 0``).

A constituent whose end lies past the known prefix is *incomplete*; it is
reported but never used for ordinariness or bound checks.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

from .algebra import CentralizerSequence, InsufficientPrefix
from .polyclass import PolyModP
from .scalar import Scalar, binom_mod

__all__ = [
    "BoundsReport",
    "Constituent",
    "ConstituentProfile",
    "beta_identity_holds",
    "bridge_property",
    "check_constituent_bounds",
    "first_constituent_poly",
    "is_ordinary",
    "max_zero_run",
    "split_constituents",
]


@dataclass(frozen=True)
class Constituent:
    r: int
    start: int
    end: int
    length: int
    entries: tuple
    ordinary: Optional[bool]
    end_value: Optional[Scalar]
    complete: bool = True

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "end": self.end,
            "length": self.length,
            "ordinary": self.ordinary,
            "end_value": None if self.end_value is None else str(self.end_value),
        }


@dataclass(frozen=True)
class ConstituentProfile:
    """Partition of a known prefix into constituents.

    ``constituents`` lists the complete ones; ``tail`` holds the entries
    after the last complete constituent.  ``ell`` is ``None`` when every
    known entry vanishes (a metabelian-looking prefix).
    """

    n: int
    characteristic: int
    last_index: int
    ell: Optional[int]
    constituents: tuple = ()
    tail: tuple = ()
    tail_start: int = 0
    isolated_violations: tuple = field(default=())

    @property
    def metabelian(self) -> bool:
        return self.ell is None

    @property
    def lengths(self) -> list:
        return [c.length for c in self.constituents]

    @property
    def ends(self) -> list:
        return [c.end for c in self.constituents]

    @property
    def incomplete_tail(self) -> int:
        return len(self.tail)

    def all_ordinary(self) -> bool:
        return all(c.ordinary for c in self.constituents)

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "constituents": [c.to_dict() for c in self.constituents],
            "incomplete_tail": self.incomplete_tail,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _ordinary_values(values, n: int, p: int) -> bool:
    """The binomial pattern on the last ``min(n, len)`` positions of a block."""
    last = values[-1]
    for i in range(min(n, len(values))):
        coef = binom_mod(n - 1, i, p) if p else math.comb(n - 1, i)
        if i % 2:
            coef = -coef
        if values[-1 - i] != coef * last:
            return False
    return True


def is_ordinary(entries, n: int, characteristic: Optional[int] = None,
                complete: bool = True) -> Optional[bool]:
    """Whether a constituent follows ``beta_(j-i) = (-1)^i C(n-1, i) beta_j``.

    ``entries`` are the constituent's entries in order (Scalars or raw
    values).  For an incomplete constituent the answer is ``None``, which
    is distinct from ``False``.
    """
    if not complete:
        return None
    if not entries:
        raise ValueError("empty constituent")
    if characteristic is None:
        first = entries[0]
        characteristic = first.characteristic if isinstance(first, Scalar) else 0
    values = [Scalar(characteristic, e.value if isinstance(e, Scalar) else e) for e in entries]
    return _ordinary_values(values, n, characteristic)


def split_constituents(seq: CentralizerSequence) -> ConstituentProfile:
    p, n = seq.characteristic, seq.n
    items = list(seq.items())
    beta = dict(items)
    last = seq.last_index
    isolated = ()
    if n == 1 and items and not items[0][1]:
        # with alpha_2 = 0 (so e_1 spans the first centralizer) the nonzero
        # entries of a consistent type-1 sequence are isolated
        isolated = tuple(i for i, b in items if b and i + 1 <= last and beta[i + 1])
    i0 = seq.first_nonzero_index()
    if i0 is None:
        return ConstituentProfile(n, p, last, None, (), tuple(seq.entries), seq.first_index,
                                  isolated)
    ell = i0 + n - 1
    out = []
    prev_end, start, nonzero = 0, seq.first_index, i0
    r = 1
    while True:
        end = nonzero + n - 1
        if end > last:
            break
        values = tuple(beta[i] for i in range(start, end + 1))
        length = ell if r == 1 else end - prev_end
        out.append(Constituent(r, start, end, length, values,
                               _ordinary_values(values, n, p), beta[end]))
        prev_end, start, r = end, end + 1, r + 1
        nonzero = next((i for i in range(start, last + 1) if beta[i]), None)
        if nonzero is None:
            break
    tail = tuple(beta[i] for i in range(start, last + 1))
    return ConstituentProfile(n, p, last, ell, tuple(out), tail, start, isolated)


def first_constituent_poly(seq: CentralizerSequence) -> PolyModP:
    """``g(x) = beta_(ell-p+1) x^(p-1) + ... + beta_ell`` for a type-``p`` sequence."""
    p = seq.characteristic
    if seq.n != p or p == 0:
        raise ValueError("first_constituent_poly needs type n equal to the characteristic")
    i0 = seq.first_nonzero_index()
    if i0 is None:
        if seq.last_index < seq.first_index:
            raise InsufficientPrefix(seq.first_index, seq.last_index)
        raise InsufficientPrefix(seq.last_index + 1, seq.last_index)
    ell = i0 + p - 1
    if ell > seq.last_index:
        raise InsufficientPrefix(ell, seq.last_index)
    # coefficient of x^(p-1-i) is beta_(ell-p+1+i)
    return PolyModP(p, [seq.beta(ell - k).value for k in range(p)])


def max_zero_run(seq: CentralizerSequence) -> int:
    """Longest run of zeros following a nonzero entry, trailing run included."""
    best = run = 0
    started = False
    for _, b in seq.items():
        if b:
            started, run = True, 0
        elif started:
            run += 1
            best = max(best, run)
    return best


def beta_identity_holds(seq: CentralizerSequence) -> Optional[bool]:
    """``beta_(ell-n+2) == (ell/2 - n + 1) beta_(ell-n+1)``, ``None`` if not visible."""
    i0 = seq.first_nonzero_index()
    if i0 is None or i0 + 1 > seq.last_index:
        return None
    ell = i0 + seq.n - 1
    if ell % 2:
        return False
    return seq.beta(i0 + 1) == seq.beta(i0) * (ell // 2 - seq.n + 1)


def bridge_property(seq: CentralizerSequence) -> Optional[bool]:
    """``[x^j](x-1)^(ell-p+1) g(x) = 0`` for ``ell - ell_2 < j <= ell - p``.

    Needs type ``p`` and a complete second constituent; ``None`` otherwise.
    """
    p = seq.characteristic
    if p == 0 or seq.n != p:
        return None
    prof = split_constituents(seq)
    if prof.ell is None or len(prof.constituents) < 2:
        return None
    ell, ell2 = prof.ell, prof.constituents[1].length
    f = PolyModP.x_minus(p, 1, ell - p + 1) * first_constituent_poly(seq)
    return all(f.coeff(j) == 0 for j in range(ell - ell2 + 1, ell - p + 1))


@dataclass
class BoundsReport:
    ell: Optional[int]
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"ell": self.ell, "ok": self.ok, "violations": self.violations}


def check_constituent_bounds(profile: ConstituentProfile) -> BoundsReport:
    """``ell`` even and ``ell/2 <= ell_r <= ell`` for each complete constituent."""
    report = BoundsReport(profile.ell)
    ell = profile.ell
    if ell is None:
        return report
    if ell % 2:
        report.violations.append(f"first length {ell} is odd")
    for c in profile.constituents[1:]:
        if 2 * c.length < ell:
            report.violations.append(f"constituent {c.r} has length {c.length} < {ell}/2")
        if c.length > ell:
            report.violations.append(f"constituent {c.r} has length {c.length} > {ell}")
    if profile.constituents and len(profile.tail) > ell - profile.n:
        if not any(profile.tail):
            report.violations.append(
                f"trailing run of {len(profile.tail)} zeros exceeds {ell - profile.n}")
    for i in profile.isolated_violations:
        report.violations.append(f"consecutive nonzero entries at {i}, {i + 1}")
    return report
