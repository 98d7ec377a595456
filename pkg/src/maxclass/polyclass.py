"""Dense polynomials over GF(p) and the coefficient-vanishing classifications.

Two questions are answered by exhaustive enumeration:

* for which ``(k, a)`` does ``(x-1)^k (x-a)`` have vanishing coefficients
  in the upper half of its support (the *lemma* condition), and
* for which ``k`` and monic ``g`` of degree ``p-1`` does ``(x-1)^k g(x)``
  vanish at ``x^j`` for ``ceil((k+p)/2) <= j < k`` (the *theorem* condition).

Cost model for :func:`classify_theorem` in exhaustive mode: ``p^(p-1)``
polynomials times ``kmax`` values of ``k``; each step multiplies by
``(x-1)`` in ``O(kmax)``.  That is about 10^4 operations at ``p = 3``,
10^7 at ``p = 5`` and 10^10 at ``p = 7``; the last is only offered by
random sampling.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .scalar import Scalar, check_prime

__all__ = [
    "MINUS_INFINITY",
    "PolyModP",
    "TheoremReport",
    "allowed_lemma_pairs",
    "classify_lemma",
    "classify_theorem",
    "coeff_range_zero",
    "in_theorem_k_set",
    "lemma_condition",
    "powers_of",
    "s_component",
    "theorem_side_conditions",
]

MINUS_INFINITY = float("-inf")


class PolyModP:
    """Polynomial over GF(p), coefficients stored constant term first, trimmed."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable = ()):
        self.p = p
        cs = [int(c.value if isinstance(c, Scalar) else c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x_minus(cls, p: int, a: int, power: int = 1) -> "PolyModP":
        """``(x - a)^power``."""
        return cls(p, [(-a) % p, 1]) ** power

    @classmethod
    def monomial(cls, p: int, k: int, c: int = 1) -> "PolyModP":
        return cls(p, [0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def scalar_coeff(self, j: int) -> Scalar:
        return Scalar(self.p, self.coeff(j))

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PolyModP):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def _check(self, other):
        if isinstance(other, int):
            return PolyModP(self.p, [other])
        if other.p != self.p:
            raise ValueError("polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyModP(self.p, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyModP(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if not self.coeffs or not other.coeffs:
            return PolyModP(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyModP(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = PolyModP(self.p, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        inv = pow(other.coeffs[-1], -1, p)
        quot = [0] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv % p
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return PolyModP(p, quot), PolyModP(p, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other) -> bool:
        """True when ``self`` divides ``other``."""
        return not (other % self)

    def mul_x_minus_1(self) -> "PolyModP":
        """``(x - 1) * self`` in linear time."""
        cs = self.coeffs
        out = [0] * (len(cs) + 1)
        for i, c in enumerate(cs):
            out[i + 1] += c
            out[i] -= c
        return PolyModP(self.p, out)

    def __repr__(self):
        return f"PolyModP({self.p}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def powers_of(p: int, limit: int) -> list:
    """Powers ``p, p^2, ...`` not exceeding ``limit``."""
    out, q = [], p
    while q <= limit:
        out.append(q)
        q *= p
    return out


def _vanishes(f: PolyModP, lo: int, hi: int) -> bool:
    return all(f.coeff(j) == 0 for j in range(max(lo, 0), hi + 1))


def coeff_range_zero(k: int, g: PolyModP) -> bool:
    """Whether ``[x^j](x-1)^k g(x) = 0`` for every ``ceil((k+p)/2) <= j < k``."""
    p = g.p
    if k <= p + 1:
        raise ValueError(f"k must exceed p + 1 = {p + 1}, got {k}")
    if not g.is_monic() or g.degree != p - 1:
        raise ValueError("g must be monic of degree p - 1")
    f = PolyModP.x_minus(p, 1, k) * g
    return _vanishes(f, -(-(k + p) // 2), k - 1)


def lemma_condition(k: int, a, variant: str = "standard", p: Optional[int] = None) -> bool:
    """Whether ``[x^j](x-1)^k (x-a) = 0`` on the upper half-range.

    ``standard`` uses ``k/2 + 1 <= j <= k`` and ``strict`` uses
    ``(k+1)/2 <= j <= k``, the bounds compared as real numbers.
    """
    if isinstance(a, Scalar):
        p = a.characteristic
        a = a.value
    if p is None:
        raise ValueError("characteristic required when a is a plain integer")
    f = PolyModP.x_minus(p, 1, k) * PolyModP.x_minus(p, a)
    return _vanishes(f, *_lemma_bounds(k, variant))


def _lemma_bounds(k: int, variant: str):
    if variant == "standard":
        return -(-k // 2) + 1, k
    if variant == "strict":
        return -(-(k + 1) // 2), k
    raise ValueError(f"unknown variant {variant!r}")


def allowed_lemma_pairs(p: int, kmax: int, variant: str = "standard") -> set:
    """Closed-form allowed ``(k, a mod p)`` pairs with ``1 < k <= kmax``."""
    pairs = {(2, -2 % p)}
    if variant == "standard":
        pairs.add((3, -3 % p))
    for q in powers_of(p, 2 * kmax + 1):
        pairs.add((q, 0))
        pairs.add((q - 1, 1))
        if variant == "standard":
            pairs.add((2 * q - 1, 1))
    return {(k, a) for k, a in pairs if 1 < k <= kmax}


def classify_lemma(p: int, kmax: int, variant: str = "standard") -> list:
    """Every ``(k, a)`` with ``1 < k <= kmax`` satisfying the lemma condition, sorted."""
    check_prime(p)
    if kmax < 4:
        raise ValueError("kmax must be at least 4")
    out = []
    for a in range(p):
        f = PolyModP.x_minus(p, a)
        for k in range(1, kmax + 1):
            f = f.mul_x_minus_1()
            if k > 1 and _vanishes(f, *_lemma_bounds(k, variant)):
                out.append((k, a))
    return sorted(out)


def in_theorem_k_set(p: int, k: int) -> bool:
    """Membership in the allowed set of exponents for the theorem condition."""
    if p + 1 < k < 2 * p or 2 * p < k < 3 * p or k == 3 * p + 1:
        return True
    for q in powers_of(p, 2 * k + 2 * p):
        if q > p and (k == 2 * q - p + 1 or q - p < k < q + p):
            return True
    return False


def theorem_side_conditions(p: int, k: int, g: PolyModP) -> list:
    """Divisibility side-conditions that fail for a surviving pair ``(k, g)``."""
    failures = []
    x_minus_1 = PolyModP.x_minus(p, 1)
    target = x_minus_1 ** (p - 1)
    for q in powers_of(p, 2 * k + 2 * p):
        if q <= p:
            continue
        if k in (2 * q - p + 1, q - p + 1) and g != target:
            failures.append(f"k={k}: g must be (x-1)^{p - 1}")
        k0 = k - (q - p)
        if 0 < k0 < p and not (x_minus_1 ** (p - k0)).divides(g):
            failures.append(f"k={k}=q-p+{k0}: (x-1)^{p - k0} must divide g")
        k0 = k - q
        if 0 < k0 < p and not PolyModP.monomial(p, k0).divides(g):
            failures.append(f"k={k}=q+{k0}: x^{k0} must divide g")
    return failures


@dataclass
class TheoremReport:
    p: int
    kmax: int
    mode: str
    survivors: list = field(default_factory=list)
    k_violations: list = field(default_factory=list)
    side_violations: list = field(default_factory=list)
    polynomials_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.k_violations and not self.side_violations

    def surviving_k(self) -> list:
        return sorted({k for k, _ in self.survivors})

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "kmax": self.kmax,
            "mode": self.mode,
            "polynomials_checked": self.polynomials_checked,
            "ok": self.ok,
            "survivors": [{"k": k, "g": list(g.coeffs)} for k, g in self.survivors],
            "k_violations": [{"k": k, "g": list(g.coeffs)} for k, g in self.k_violations],
            "side_violations": [{"k": k, "g": list(g.coeffs), "failed": f}
                                for k, g, f in self.side_violations],
        }


def _monic_polys(p: int):
    for tail in itertools.product(range(p), repeat=p - 1):
        yield PolyModP(p, list(tail) + [1])


def classify_theorem(p: int, kmax: int, samples: Optional[int] = None, seed: int = 0) -> TheoremReport:
    """Every ``(k, g)`` with ``p+1 < k <= kmax`` meeting the theorem condition.

    Exhaustive over all ``p^(p-1)`` monic ``g`` for ``p <= 5``; for larger
    ``p`` pass ``samples`` to test that many random monic ``g``.
    """
    check_prime(p)
    if samples is None:
        if p > 5:
            raise ValueError("exhaustive mode is limited to p <= 5; pass samples= for sampling")
        polys, mode = list(_monic_polys(p)), "exhaustive"
    else:
        rng = random.Random(seed)
        polys = [PolyModP(p, [rng.randrange(p) for _ in range(p - 1)] + [1])
                 for _ in range(samples)]
        mode = "sampling"
    report = TheoremReport(p, kmax, mode, polynomials_checked=len(polys))
    for g in polys:
        f = g
        for k in range(1, kmax + 1):
            f = f.mul_x_minus_1()
            if k <= p + 1:
                continue
            if _vanishes(f, -(-(k + p) // 2), k - 1):
                report.survivors.append((k, g))
                if not in_theorem_k_set(p, k):
                    report.k_violations.append((k, g))
                for failure in theorem_side_conditions(p, k, g):
                    report.side_violations.append((k, g, failure))
    report.survivors.sort(key=lambda kg: (kg[0], kg[1].coeffs))
    return report


def s_component(f: PolyModP, i: int) -> PolyModP:
    """Terms of ``f`` whose exponent is congruent to ``i`` modulo ``p``."""
    p = f.p
    if not 0 <= i < p:
        raise ValueError(f"residue must lie in [0, {p})")
    return PolyModP(p, [c if j % p == i else 0 for j, c in enumerate(f.coeffs)])
