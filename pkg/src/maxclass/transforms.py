"""Maps between sequences: translation, subalgebras of type-1 algebras,
the one-step extension from type ``n`` to type ``n - 1``, and normalization.

All maps act on the known prefix only and never invent entries past the
degree horizon.
"""

from __future__ import annotations

import math

from .algebra import CentralizerSequence, InsufficientPrefix
from .constituents import split_constituents
from .scalar import Scalar, binom_mod

__all__ = [
    "NotSpecial",
    "UnsupportedOperation",
    "normalize",
    "scale",
    "subalgebra_from_type1",
    "translate",
    "ugolini_extend",
]


class UnsupportedOperation(ValueError):
    """The map is not defined for this kind of sequence."""


class NotSpecial(ValueError):
    """A constituent lacks the binomial form needed for the extension."""

    def __init__(self, ordinal: int, end: int):
        super().__init__(f"constituent {ordinal} (ending at index {end}) is not of the special form")
        self.ordinal = ordinal
        self.end = end


def _binom(a: int, b: int, p: int) -> int:
    if b < 0 or b > a:
        return 0
    return binom_mod(a, b, p) if p else math.comb(a, b)


def translate(seq: CentralizerSequence, delta) -> CentralizerSequence:
    """Add ``delta`` to every entry; only defined for type ``p`` in characteristic ``p``."""
    p = seq.characteristic
    if p == 0 or seq.n != p:
        raise UnsupportedOperation(
            f"translation needs type n equal to the characteristic p (got n={seq.n}, p={p})")
    d = delta if isinstance(delta, Scalar) else Scalar(p, delta)
    return CentralizerSequence(p, seq.n, tuple(b + d for b in seq.entries))


def subalgebra_from_type1(alpha: CentralizerSequence, n_target: int,
                          last_index: int = None) -> CentralizerSequence:
    """Sequence of the subalgebra generated by ``z`` and ``e_n`` of a type-1 algebra.

    ``beta_i = sum_k (-1)^k C(n-1, k) alpha_(i+k)``; each ``beta_i`` needs
    ``alpha`` up to ``i + n - 1``, so by default the output stops at
    ``alpha.last_index - n + 1``.
    """
    if alpha.n != 1:
        raise ValueError("subalgebra_from_type1 expects a type-1 sequence")
    n = n_target
    if n < 2:
        raise ValueError("target type must exceed 1")
    p = alpha.characteristic
    top = alpha.last_index - n + 1 if last_index is None else last_index
    if top + n - 1 > alpha.last_index:
        raise InsufficientPrefix(top + n - 1, alpha.last_index)
    a = alpha.raw
    coefs = [(-1) ** k * _binom(n - 1, k, p) for k in range(n)]
    values = [sum(c * a[i + k] for k, c in enumerate(coefs)) for i in range(n + 1, top + 1)]
    return CentralizerSequence(p, n, tuple(Scalar(p, v) for v in values))


def ugolini_extend(seq: CentralizerSequence, profile=None) -> CentralizerSequence:
    """Extend a type-``n`` sequence with special constituents to type ``n - 1``.

    For ``j_(r-1) < i <= j_r`` the new entry is
    ``(-1)^(j_r - i) C(n-2, j_r - i) lambda_(j_r)``, where ``lambda_(j_r)``
    is the last entry of constituent ``r``.  Past the last complete
    constituent the new entries are known only up to the next nonzero entry
    of the input (or up to one past its end, if no nonzero entry follows).
    """
    n, p = seq.n, seq.characteristic
    if n < 2:
        raise ValueError("ugolini_extend needs type n >= 2")
    prof = profile if profile is not None else split_constituents(seq)
    for c in prof.constituents:
        if not c.ordinary:
            raise NotSpecial(c.r, c.end)
    out = {}
    prev = 0
    for c in prof.constituents:
        lam = c.end_value.value
        for i in range(max(prev + 1, n), c.end + 1):
            out[i] = (-1) ** (c.end - i) * _binom(n - 2, c.end - i, p) * lam
        prev = c.end
    nxt = next((k for k, b in enumerate(prof.tail) if b), None)
    stop = prof.tail_start + nxt if nxt is not None else seq.last_index + 1
    for i in range(max(prev + 1, n), stop + 1):
        out[i] = 0
    values = [out[i] for i in range(n, stop + 1)]
    return CentralizerSequence(p, n - 1, tuple(Scalar(p, v) for v in values))


def scale(seq: CentralizerSequence, c) -> CentralizerSequence:
    s = c if isinstance(c, Scalar) else Scalar(seq.characteristic, c)
    if not s:
        raise ValueError("scaling factor must be nonzero")
    return CentralizerSequence(seq.characteristic, seq.n, tuple(b * s for b in seq.entries))


def normalize(seq: CentralizerSequence) -> CentralizerSequence:
    """Scale so that the first nonzero entry is 1."""
    i0 = seq.first_nonzero_index()
    if i0 is None:
        raise ValueError("cannot normalize: every known entry is zero")
    inv = seq.beta(i0).inverse()
    return CentralizerSequence(seq.characteristic, seq.n,
                               tuple(b * inv for b in seq.entries), True)
