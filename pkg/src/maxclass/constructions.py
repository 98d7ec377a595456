"""Explicit sequences: the exceptional family, the metabelian algebras and
the positive Witt algebra over Q.

The exceptional algebra ``E(p, q, m)`` is available in two independent
ways: the closed-form sequence, and a direct simulation inside the
semidirect product of the truncated divided-power algebra
``F[t][x; c]`` (``q = p^c``) with the operators ``a*d + M_h``, where ``d``
is the divided-power derivative and ``M_h`` multiplication by ``h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import CentralizerSequence
from .scalar import PrimePowerWitness, Scalar, binom_mod, check_prime, is_power_of_p

__all__ = [
    "DividedPowerElement",
    "InternalContradiction",
    "Operator",
    "SemidirectElement",
    "exceptional_sequence",
    "exceptional_simulate",
    "metabelian_sequence",
    "reduce_mod",
    "witt_sequence",
]


class InternalContradiction(RuntimeError):
    """The simulation produced a bracket that is not of the expected shape."""


def _check_params(p: int, q, m: int) -> int:
    check_prime(p)
    if p == 2:
        raise ValueError("the exceptional family needs an odd prime")
    qv = int(q.value if isinstance(q, PrimePowerWitness) else q)
    if is_power_of_p(qv, p) is None:
        raise ValueError(f"q = {qv} is not a power of {p}")
    if qv <= p:
        raise ValueError("q must exceed p")
    if not 0 < m < p:
        raise ValueError(f"m must satisfy 0 < m < p, got {m}")
    return qv


# ---------------------------------------------------------------------------
# closed form


def exceptional_value(p: int, q: int, m: int, i: int) -> int:
    """``beta_i`` of ``E(p, q, m)`` as a residue, for ``i > p``."""
    if i <= q - p + m:
        return 0
    if i <= q + m:
        return (binom_mod(q + m - i, m, p) - 1) % p
    j = (i - m) % q
    if j == 0:
        j = q
    return 0 if j <= q - p else p - 1


def exceptional_sequence(p: int, q, m: int, degree: int) -> CentralizerSequence:
    """Closed-form sequence of ``E(p, q, m)`` known to ``degree``."""
    qv = _check_params(p, q, m)
    return CentralizerSequence.from_function(
        p, p, degree - p, lambda i: exceptional_value(p, qv, m, i))


# ---------------------------------------------------------------------------
# divided powers


@dataclass(frozen=True)
class DividedPowerElement:
    """Sparse ``sum c * t^r x^(i)`` with ``0 <= i < q`` over GF(p)."""

    p: int
    q: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, i), c in self.terms.items():
            c %= self.p
            if c and 0 <= i < self.q:
                clean[(r, i)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, p: int, q: int, r: int, i: int, c: int = 1):
        return cls(p, q, {(r, i): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, DividedPowerElement)
                and (self.p, self.q, self.terms) == (other.p, other.q, other.terms))

    def __hash__(self):
        return hash((self.p, self.q, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return DividedPowerElement(self.p, self.q, out)

    def __neg__(self):
        return DividedPowerElement(self.p, self.q, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return DividedPowerElement(self.p, self.q, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        p, q = self.p, self.q
        out = {}
        for (r1, i1), c1 in self.terms.items():
            for (r2, i2), c2 in other.terms.items():
                i = i1 + i2
                if i >= q:
                    continue
                b = binom_mod(i, i1, p)
                if b:
                    key = (r1 + r2, i)
                    out[key] = out.get(key, 0) + b * c1 * c2
        return DividedPowerElement(p, q, out)

    def derivative(self):
        """``d x^(i) = x^(i-1)``, ``d 1 = 0``."""
        return DividedPowerElement(self.p, self.q,
                                   {(r, i - 1): c for (r, i), c in self.terms.items() if i > 0})

    def bidegrees(self) -> set:
        return set(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{c}*t^{r}x^({i})" for (r, i), c in sorted(self.terms.items())]
        return " + ".join(parts)


@dataclass(frozen=True)
class Operator:
    """``a*d + M_h`` acting on the divided-power algebra."""

    a: int
    h: DividedPowerElement

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.h.p)

    def apply(self, f: DividedPowerElement) -> DividedPowerElement:
        out = self.h * f
        if self.a:
            out = out + f.derivative().scale(self.a)
        return out

    def bracket(self, other: "Operator") -> "Operator":
        # [a d + M_h, a' d + M_h'] = M_(a dh' - a' dh)
        h = other.h.derivative().scale(self.a) - self.h.derivative().scale(other.a)
        return Operator(0, h)

    def __bool__(self):
        return bool(self.a) or bool(self.h)

    def scale(self, c: int) -> "Operator":
        return Operator(self.a * c, self.h.scale(c))

    def __add__(self, other):
        return Operator(self.a + other.a, self.h + other.h)


@dataclass(frozen=True)
class SemidirectElement:
    """A pair ``(f, A)`` with bracket ``[(f,A), (f',A')] = (A f' - A' f, [A, A'])``."""

    f: DividedPowerElement
    op: Operator

    def bracket(self, other: "SemidirectElement") -> "SemidirectElement":
        return SemidirectElement(self.op.apply(other.f) - other.op.apply(self.f),
                                 self.op.bracket(other.op))

    def __bool__(self):
        return bool(self.f) or bool(self.op)

    def scale(self, c: int) -> "SemidirectElement":
        return SemidirectElement(self.f.scale(c), self.op.scale(c))

    def __eq__(self, other):
        return isinstance(other, SemidirectElement) and self.f == other.f and self.op == other.op

    __hash__ = object.__hash__


def _ratio(u: SemidirectElement, v: SemidirectElement, p: int) -> Optional[int]:
    """The scalar ``c`` with ``u == c * v`` (``v`` nonzero), or ``None``."""
    pivot = None
    for k, c in v.f.terms.items():
        pivot = (u.f.terms.get(k, 0), c)
        break
    if pivot is None:
        if v.op.a:
            pivot = (u.op.a, v.op.a)
        else:
            k, c = next(iter(v.op.h.terms.items()))
            pivot = (u.op.h.terms.get(k, 0), c)
    ratio = pivot[0] * pow(pivot[1], -1, p) % p
    return ratio if u == v.scale(ratio) else None


def exceptional_generators(p: int, q: int, m: int):
    """``z = (0, -d - M_(t x^(q-1)))`` and ``e_p = (x^(q+m-p), M_(t x^(q-p)))``."""
    zero = DividedPowerElement(p, q)
    z = SemidirectElement(zero, Operator(-1, DividedPowerElement.monomial(p, q, 1, q - 1, -1)))
    ep = SemidirectElement(DividedPowerElement.monomial(p, q, 0, q + m - p),
                           Operator(0, DividedPowerElement.monomial(p, q, 1, q - p)))
    return z, ep


def exceptional_basis(p: int, q, m: int, top: int) -> dict:
    """``e_i = [e_p, z^(i-p)]`` for ``p <= i <= top``."""
    qv = _check_params(p, q, m)
    z, e = exceptional_generators(p, qv, m)
    basis = {p: e}
    for i in range(p + 1, top + 1):
        e = e.bracket(z)
        basis[i] = e
    return basis


def exceptional_simulate(p: int, q, m: int, degree: int) -> CentralizerSequence:
    """Sequence of ``E(p, q, m)`` read off the divided-power realization."""
    qv = _check_params(p, q, m)
    basis = exceptional_basis(p, qv, m, degree)
    ep = basis[p]
    values = []
    for i in range(p + 1, degree - p + 1):
        target = basis[i + p]
        if not target:
            raise InternalContradiction(f"e_{i + p} vanished in the simulation")
        prod = basis[i].bracket(ep)
        beta = _ratio(prod, target, p)
        if beta is None:
            raise InternalContradiction(f"[e_{i}, e_{p}] is not a multiple of e_{i + p}")
        values.append(beta)
    return CentralizerSequence.from_values(p, p, values)


# ---------------------------------------------------------------------------
# metabelian and Witt


ABELIAN_MAXIMAL_IDEAL = "abelian-maximal-ideal"
CODIM2_ABELIAN = "codim-2-abelian"


def metabelian_sequence(n: int, variant: str, degree: int, characteristic: int = 0) -> CentralizerSequence:
    """The all-zero or all-one sequence of type ``n`` known to ``degree``."""
    if variant == ABELIAN_MAXIMAL_IDEAL:
        value = 0
    elif variant == CODIM2_ABELIAN:
        if n < 2:
            raise ValueError("the codimension-2 variant needs n >= 2")
        value = 1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    count = max(0, degree - 2 * n)
    return CentralizerSequence.from_values(characteristic, n, [value] * count,
                                           normalized=bool(value))


def witt_value(i: int) -> Fraction:
    return Fraction(6 * (i - 2), i * i - i)


def witt_sequence(degree: int) -> CentralizerSequence:
    """``beta_i = 6(i-2)/(i^2-i)`` over Q for ``3 <= i <= degree - 2``."""
    if degree < 5:
        raise ValueError("degree must be at least 5")
    return CentralizerSequence.from_function(0, 2, degree - 2, witt_value, normalized=True)


def reduce_mod(seq: CentralizerSequence, p: int):
    """Reduce a rational sequence modulo ``p`` as far as denominators allow.

    Returns ``(prefix, bad)``: ``prefix`` stops just before the first
    entry whose denominator is divisible by ``p`` and ``bad`` lists all
    such indices.
    """
    check_prime(p)
    if seq.characteristic != 0:
        raise ValueError("reduce_mod expects a rational sequence")
    bad = reduction_bad_indices(seq, p)
    stop = bad[0] - 1 if bad else seq.last_index
    values = [b.value for i, b in seq.items() if i <= stop]
    return CentralizerSequence(p, seq.n, tuple(Scalar(p, v) for v in values)), bad


def reduction_bad_indices(seq: CentralizerSequence, p: int) -> list:
    return [i for i, b in seq.items() if b.value.denominator % p == 0]


def reduction_pins(seq: CentralizerSequence, p: int) -> dict:
    """Residues of the entries whose denominators are invertible modulo ``p``."""
    return {i: Scalar(p, b.value).value for i, b in seq.items()
            if b.value.denominator % p}
