"""Search-backed reports on first constituent lengths and ordinariness."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from ..algebra import CentralizerSequence
from ..constituents import split_constituents
from ..constructions import reduction_bad_indices, reduction_pins, witt_sequence
from ..polyclass import powers_of
from ..scalar import check_prime, is_power_of_p
from .search import SearchConfig, SearchResult, search_sequences

LOG = logging.getLogger(__name__)

__all__ = [
    "FirstLengthReport",
    "Length2qReport",
    "WittReductionReport",
    "allowed_first_lengths",
    "verify_first_length",
    "verify_length2q",
    "witt_reduction_obstruction",
]

WITNESSED = "witnessed"
EXCLUDED = "excluded"

DEFAULT_NODE_LIMIT = 10**9


def allowed_first_lengths(p: int, limit: int) -> set:
    """``{2q} ∪ {even ell : q < ell <= q + p}`` for powers ``q > p``, up to ``limit``."""
    out = set()
    for q in powers_of(p, limit):
        if q <= p:
            continue
        if 2 * q <= limit:
            out.add(2 * q)
        out.update(e for e in range(q + 1, min(q + p, limit) + 1) if e % 2 == 0)
    return out


@dataclass
class FirstLengthReport:
    p: int
    degree: int
    status: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    search_degree: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    partial: list = field(default_factory=list)

    @property
    def witnessed(self) -> list:
        return sorted(e for e, s in self.status.items() if s == WITNESSED)

    @property
    def excluded(self) -> list:
        return sorted(e for e, s in self.status.items() if s == EXCLUDED)

    @property
    def unexpected(self) -> list:
        allowed = allowed_first_lengths(self.p, 2 * self.degree)
        return [e for e in self.witnessed if e not in allowed]

    @property
    def ok(self) -> bool:
        return not self.unexpected

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "degree": self.degree,
            "status": {str(k): v for k, v in sorted(self.status.items())},
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "witnessed": self.witnessed,
            "excluded": self.excluded,
            "unexpected": self.unexpected,
            "partial": self.partial,
            "ok": self.ok,
        }


def verify_first_length(p: int, degree: int, node_limit: Optional[int] = DEFAULT_NODE_LIMIT,
                        time_limit: Optional[float] = None, threads: int = 1) -> FirstLengthReport:
    """For each ``4p < ell <= degree/2`` decide whether a type-``p`` prefix with that first length exists.

    Odd lengths are excluded without searching.  Even lengths are searched
    to degree ``min(degree, 2*ell + p)``.
    """
    check_prime(p)
    report = FirstLengthReport(p, degree)
    for ell in range(4 * p + 1, degree // 2 + 1):
        if ell % 2:
            report.status[ell] = EXCLUDED
            report.counts[ell] = 0
            continue
        d = min(degree, 2 * ell + p)
        cfg = SearchConfig(p, p, d, ell=ell, node_limit=node_limit, time_limit=time_limit)
        res = search_sequences(cfg, threads=threads)
        report.search_degree[ell] = d
        report.counts[ell] = len(res.sequences)
        if res.sequences:
            report.status[ell] = WITNESSED
            report.witnesses[ell] = res.sequences
        elif res.partial:
            report.status[ell] = "undecided"
            report.partial.append(ell)
        else:
            report.status[ell] = EXCLUDED
        LOG.info("ell=%d degree=%d found=%d nodes=%d", ell, d, len(res.sequences), res.nodes)
    return report


@dataclass
class Length2qReport:
    p: int
    q: int
    degree: int
    sequences: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    complete: bool = True

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "degree": self.degree,
            "found": len(self.sequences),
            "complete": self.complete,
            "counterexamples": [
                {"sequence": s.to_dict(), "constituents": rs} for s, rs in self.counterexamples
            ],
            "ok": self.ok,
        }


def non_ordinary_constituents(seq: CentralizerSequence) -> list:
    """Ordinals of complete constituents that are not ordinary."""
    return [c.r for c in split_constituents(seq).constituents if not c.ordinary]


def in_length2q_scope(seq: CentralizerSequence, q: int) -> bool:
    return split_constituents(seq).ell == 2 * q


def verify_length2q(p: int, q: int, degree: int, node_limit: Optional[int] = DEFAULT_NODE_LIMIT,
                    time_limit: Optional[float] = None, threads: int = 1,
                    extra: tuple = ()) -> Length2qReport:
    """Check that every type-``p`` prefix with ``ell = 2q`` has only ordinary constituents.

    ``extra`` adds further sequences (e.g. constructed ones); those with a
    different first length are out of scope and skipped.
    """
    check_prime(p)
    if is_power_of_p(q, p) is None or q <= p:
        raise ValueError("q must be a power of p exceeding p")
    report = Length2qReport(p, q, degree)
    res: SearchResult = search_sequences(
        SearchConfig(p, p, degree, ell=2 * q, node_limit=node_limit, time_limit=time_limit),
        threads=threads)
    report.complete = res.complete
    pool = list(res.sequences) + [s for s in extra if in_length2q_scope(s, q)]
    report.sequences = pool
    for s in pool:
        bad = non_ordinary_constituents(s)
        if bad:
            report.counterexamples.append((s, bad))
    return report


@dataclass
class WittReductionReport:
    p: int
    degree: int
    bad_indices: list
    first_empty_degree: Optional[int]
    survivors: dict = field(default_factory=dict)

    @property
    def obstructed(self) -> bool:
        return self.first_empty_degree is not None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "degree": self.degree,
            "bad_indices": self.bad_indices,
            "first_empty_degree": self.first_empty_degree,
            "survivors": {str(k): v for k, v in self.survivors.items()},
            "obstructed": self.obstructed,
        }


def witt_reduction_obstruction(p: int, degree: int) -> WittReductionReport:
    """Search GF(p) type-2 prefixes that agree with the Witt sequence wherever it reduces.

    Entries whose denominators are divisible by ``p`` are left free.  The
    first degree at which no prefix survives certifies that no algebra of
    type 2 over GF(p) has a sequence reducing the Witt one.
    """
    check_prime(p)
    w = witt_sequence(max(degree, 5))
    report = WittReductionReport(p, degree, reduction_bad_indices(w, p), None)
    for d in range(6, degree + 1):
        pins = reduction_pins(w.to_degree(d), p)
        res = search_sequences(SearchConfig(p, 2, d, pinned=tuple(pins.items()), normalize=False))
        report.survivors[d] = len(res.sequences)
        if not res.sequences:
            report.first_empty_degree = d
            break
    return report
