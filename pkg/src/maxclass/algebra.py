"""Centralizer sequences and the multiplication they determine.

An algebra of type ``n`` has graded basis ``z`` (degree 1) and
``e_i = [e_n, z^(i-n)]`` for ``i >= n``.  Its sequence ``beta_i`` is defined
by ``[e_i, e_n] = beta_i e_(i+n)`` for ``i > n``; ``beta_n`` is taken to be 0
(and for type 1 the implicit ``alpha_1`` is 0).  Every other product
``[e_i, e_j] = c(i, j) e_(i+j)`` follows from the derivation rule for
``ad z``::

    c(i, j+1) = c(i, j) - c(i+1, j),     c(i, n) = beta_i

whose closed form is ``c(i, j) = sum_k (-1)^k C(j-n, k) beta_(i+k)``.

Degree conventions: a prefix whose last entry is ``beta_N`` supports the
structure constants and identities of total degree up to ``N + n``; that
number is the prefix's :attr:`CentralizerSequence.degree`.  Nothing is ever
claimed past it.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .scalar import Scalar, binom_lucas, reduce_raw

__all__ = [
    "CentralizerSequence",
    "ConsistencyReport",
    "InsufficientPrefix",
    "LiePowerProfile",
    "StructureTable",
    "bracket_coeff",
    "build_table",
    "check_consistency",
    "lie_power_profile",
]


class InsufficientPrefix(IndexError):
    """A computation needed an entry beyond the known prefix."""

    def __init__(self, index: int, last_index: int):
        super().__init__(
            f"insufficient prefix: beta_{index} is needed but the sequence "
            f"is only known up to beta_{last_index}"
        )
        self.index = index
        self.last_index = last_index


@dataclass(frozen=True)
class CentralizerSequence:
    """A finite prefix ``(beta_(n+1), ..., beta_N)`` of a two-step centralizer sequence.

    ``entries[k]`` is ``beta_(first_index + k)``.  For ``n == 1`` the entries
    are the ``alpha_i`` of an uncovered algebra of type 1, starting at
    ``alpha_2``.
    """

    characteristic: int
    n: int
    entries: tuple = ()
    normalized: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"type must be at least 1, got {self.n}")
        entries = tuple(
            e if isinstance(e, Scalar) else Scalar(self.characteristic, e)
            for e in self.entries
        )
        for e in entries:
            if e.characteristic != self.characteristic:
                raise ValueError(
                    f"entry {e!r} does not have characteristic {self.characteristic}"
                )
        object.__setattr__(self, "entries", entries)
        if self.normalized:
            first = next((e for e in entries if e), None)
            if first is not None and first != 1:
                raise ValueError("normalized sequence must have first nonzero entry 1")

    @classmethod
    def from_values(cls, characteristic: int, n: int, values: Iterable, normalized: bool = False):
        return cls(characteristic, n, tuple(Scalar(characteristic, v) for v in values), normalized)

    @classmethod
    def from_function(cls, characteristic: int, n: int, last_index: int, fn, normalized=False):
        """Build ``beta_i = fn(i)`` for ``n < i <= last_index``."""
        first = n + 1
        return cls.from_values(characteristic, n, (fn(i) for i in range(first, last_index + 1)),
                               normalized)

    @property
    def first_index(self) -> int:
        return self.n + 1

    @property
    def last_index(self) -> int:
        return self.n + len(self.entries)

    @property
    def degree(self) -> int:
        """Largest total degree whose structure constants are all determined."""
        return self.last_index + self.n

    @cached_property
    def raw(self) -> tuple:
        """Raw values indexed by position: ``raw[i]`` is ``beta_i`` (zero for ``i <= n``)."""
        zero = Fraction(0) if self.characteristic == 0 else 0
        return (zero,) * (self.n + 1) + tuple(e.value for e in self.entries)

    def beta(self, i: int) -> Scalar:
        if i <= self.n:
            if i < 1:
                raise IndexError(f"no entry beta_{i}")
            return Scalar.zero(self.characteristic)
        if i > self.last_index:
            raise InsufficientPrefix(i, self.last_index)
        return self.entries[i - self.first_index]

    def __getitem__(self, i: int) -> Scalar:
        return self.beta(i)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self):
        """Pairs ``(i, beta_i)`` over the known prefix."""
        return zip(range(self.first_index, self.last_index + 1), self.entries)

    def first_nonzero_index(self) -> Optional[int]:
        return next((i for i, b in self.items() if b), None)

    def truncate(self, last_index: int) -> "CentralizerSequence":
        if last_index > self.last_index:
            raise InsufficientPrefix(last_index, self.last_index)
        keep = max(0, last_index - self.n)
        return CentralizerSequence(self.characteristic, self.n, self.entries[:keep], self.normalized)

    def to_degree(self, degree: int) -> "CentralizerSequence":
        """The prefix that supports exactly ``degree``."""
        return self.truncate(degree - self.n)

    # serialisation ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "type": self.n,
            "first_index": self.first_index,
            "entries": [str(e) for e in self.entries],
            "normalized": self.normalized,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "CentralizerSequence":
        p = int(data["characteristic"])
        n = int(data["type"])
        first = int(data.get("first_index", n + 1))
        if first != n + 1:
            raise ValueError(f"first_index for type {n} must be {n + 1}, got {first}")
        entries = tuple(Scalar.parse(str(s), p) for s in data["entries"])
        return cls(p, n, entries, bool(data.get("normalized", False)))

    @classmethod
    def from_json(cls, text: str) -> "CentralizerSequence":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# raw kernels


def _new_table(degree: int):
    return [[None] * (degree + 1) for _ in range(degree + 1)]


def _fill_diagonal(c, beta, d: int, n: int, p: int) -> None:
    """Fill ``c[i][d-i]`` for ``n <= i <= d-n`` from the diagonal below.

    ``beta[d-n]`` must be known; entries of total degree ``d - 1`` must be
    filled already.
    """
    top = d - n
    c[top][n] = beta[top]
    if p:
        for i in range(top - 1, n - 1, -1):
            j = d - i
            c[i][j] = (c[i][j - 1] - c[i + 1][j - 1]) % p
    else:
        for i in range(top - 1, n - 1, -1):
            j = d - i
            c[i][j] = c[i][j - 1] - c[i + 1][j - 1]


def _antisymmetry_residuals(c, d: int, n: int):
    """Yield ``(i, j, residual)`` for ``n <= i <= j``, ``i + j == d``.

    For ``i < j`` the residual is ``c(i,j) + c(j,i)``; on the diagonal it is
    ``c(i,i)`` itself (alternation, which also covers characteristic 2).
    """
    for i in range(n, d // 2 + 1):
        j = d - i
        if j < i:
            break
        yield i, j, (c[i][j] + c[j][i]) if i < j else c[i][i]


def _jacobi_residuals(c, d: int, n: int):
    """Yield ``(i, j, k, residual)`` for ``n <= i < j < k`` with ``i + j + k == d``."""
    for i in range(n, d // 3 + 1):
        for j in range(i + 1, (d - i + 1) // 2):
            k = d - i - j
            if k <= j:
                break
            yield i, j, k, (c[i][j] * c[i + j][k] + c[j][k] * c[j + k][i]
                            + c[k][i] * c[k + i][j])


def _raw_table(seq: CentralizerSequence, degree: int):
    if degree - seq.n > seq.last_index:
        raise InsufficientPrefix(degree - seq.n, seq.last_index)
    c = _new_table(degree)
    zero = seq.raw[0]
    n = seq.n
    c[n][n] = zero
    for d in range(2 * n + 1, degree + 1):
        _fill_diagonal(c, seq.raw, d, n, seq.characteristic)
    return c


# ---------------------------------------------------------------------------
# public operations


def bracket_coeff(seq: CentralizerSequence, i: int, j: int) -> Scalar:
    """``c(i, j)`` with ``[e_i, e_j] = c(i, j) e_(i+j)``, by the closed binomial form."""
    n = seq.n
    if i < n or j < n:
        raise ValueError(f"indices must be at least the type {n}, got ({i}, {j})")
    if i + j - n > seq.last_index:
        raise InsufficientPrefix(i + j - n, seq.last_index)
    p = seq.characteristic
    total = Scalar.zero(p)
    for k in range(j - n + 1):
        b = seq.beta(i + k)
        if not b:
            continue
        coeff = binom_lucas(j - n, k, p) if p else Scalar(0, math.comb(j - n, k))
        total = total + coeff * b if k % 2 == 0 else total - coeff * b
    return total


@dataclass(frozen=True)
class StructureTable:
    """All structure constants ``c(i, j)`` with ``i, j >= n`` and ``i + j <= degree``."""

    characteristic: int
    n: int
    degree: int
    rows: tuple = field(repr=False)

    def raw(self, i: int, j: int):
        if i < self.n or j < self.n or i + j > self.degree:
            raise IndexError(f"c({i},{j}) is outside the table (n={self.n}, degree={self.degree})")
        return self.rows[i][j]

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return Scalar(self.characteristic, self.raw(i, j))

    def entries(self):
        """Iterate ``((i, j), Scalar)`` in lexicographic order."""
        for i in range(self.n, self.degree - self.n + 1):
            for j in range(self.n, self.degree - i + 1):
                yield (i, j), self[i, j]


def build_table(seq: CentralizerSequence, degree: int) -> StructureTable:
    """Structure table up to ``degree`` via the difference recursion."""
    c = _raw_table(seq, degree)
    rows = tuple(tuple(row) for row in c)
    return StructureTable(seq.characteristic, seq.n, degree, rows)


@dataclass(frozen=True)
class ConsistencyReport:
    degree: int
    antisymmetry_violations: tuple = ()
    jacobi_violations: tuple = ()

    @property
    def consistent(self) -> bool:
        return not self.antisymmetry_violations and not self.jacobi_violations

    @property
    def violations(self) -> list:
        return list(self.antisymmetry_violations) + list(self.jacobi_violations)

    def first_violation_degree(self) -> Optional[int]:
        degs = [sum(v[:-1]) for v in self.violations]
        return min(degs) if degs else None

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "consistent": self.consistent,
            "violations": (
                [{"kind": "antisymmetry", "indices": [i, j], "residual": str(r)}
                 for i, j, r in self.antisymmetry_violations]
                + [{"kind": "jacobi", "indices": [i, j, k], "residual": str(r)}
                   for i, j, k, r in self.jacobi_violations]
            ),
        }


def _check_degrees(seq: CentralizerSequence, degree: int, lo: int, hi: int):
    c = _raw_table(seq, degree)
    p = seq.characteristic
    n = seq.n
    anti, jac = [], []
    for d in range(lo, hi + 1):
        for i, j, r in _antisymmetry_residuals(c, d, n):
            r = reduce_raw(r, p)
            if r:
                anti.append((i, j, Scalar(p, r)))
        for i, j, k, r in _jacobi_residuals(c, d, n):
            r = reduce_raw(r, p)
            if r:
                jac.append((i, j, k, Scalar(p, r)))
    return anti, jac


def check_consistency(seq: CentralizerSequence, degree: int, workers: int = 1) -> ConsistencyReport:
    """Check antisymmetry and the Jacobi identity for every product up to ``degree``.

    Identities involving ``z`` reduce to antisymmetry, because the table is
    built from the derivation rule of ``ad z``.  With ``workers > 1`` the
    degree range is split across processes; the report is the same either
    way (violations are sorted lexicographically).
    """
    lo = 2 * seq.n
    if workers <= 1 or degree - lo < 2 * workers:
        anti, jac = _check_degrees(seq, degree, lo, degree)
    else:
        bounds = _split_range(lo, degree, workers)
        anti, jac = [], []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_check_degrees, seq, degree, a, b) for a, b in bounds]
            for fut in futures:
                a, j = fut.result()
                anti.extend(a)
                jac.extend(j)
    anti.sort(key=lambda v: v[:2])
    jac.sort(key=lambda v: v[:3])
    return ConsistencyReport(degree, tuple(anti), tuple(jac))


def _split_range(lo: int, hi: int, parts: int):
    # Work per degree grows roughly quadratically; balance on cumulative d^2.
    weights = [(d, d * d) for d in range(lo, hi + 1)]
    total = sum(w for _, w in weights)
    bounds, start, acc = [], lo, 0
    for d, w in weights:
        acc += w
        if acc >= total * (len(bounds) + 1) / parts and len(bounds) < parts - 1:
            bounds.append((start, d))
            start = d + 1
    if start <= hi:
        bounds.append((start, hi))
    return bounds


@dataclass(frozen=True)
class LiePowerProfile:
    """Degrees ``m_1 < m_2 < ...`` with ``(L^2)^r = L_(>= m_r)``.

    ``truncated`` is set when the next term was not found within
    ``horizon``; it may lie beyond the horizon or not exist at all.
    """

    degrees: tuple
    horizon: int
    truncated: bool

    def differences(self) -> list:
        return [b - a for a, b in zip(self.degrees, self.degrees[1:])]


def lie_power_profile(seq: CentralizerSequence, degree: int) -> LiePowerProfile:
    """Lie powers of ``L^2 = L_(>= n+1)``, as computed from the structure table."""
    n = seq.n
    if n < 2:
        raise ValueError("lie_power_profile needs type n >= 2")
    c = _raw_table(seq, degree)
    p = seq.characteristic
    m = n + 1
    degrees = [m]
    while True:
        best = None
        for i in range(m, degree - n):
            if best is not None and i + n + 1 >= best:
                break
            for j in range(n + 1, degree - i + 1):
                if best is not None and i + j >= best:
                    break
                if reduce_raw(c[i][j], p):
                    best = i + j
                    break
        if best is None:
            return LiePowerProfile(tuple(degrees), degree, True)
        degrees.append(best)
        m = best


def sequences_equal(a: CentralizerSequence, b: CentralizerSequence) -> bool:
    """Equality of the common prefix of two sequences of the same shape."""
    if (a.characteristic, a.n) != (b.characteristic, b.n):
        return False
    k = min(len(a), len(b))
    return a.entries[:k] == b.entries[:k]


def seq_from_raw(characteristic: int, n: int, values: Sequence, normalized=False) -> CentralizerSequence:
    return CentralizerSequence(characteristic, n, tuple(Scalar(characteristic, v) for v in values),
                               normalized)
