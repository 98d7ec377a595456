"""Depth-first enumeration of consistent centralizer-sequence prefixes over GF(p).

Entries are appended one at a time.  Appending ``beta_m`` fixes every
structure constant of total degree ``d = m + n``, and every antisymmetry or
Jacobi identity of total degree ``d`` mentions only those constants and
lower ones.  Each identity is evaluated exactly once, at the step where it
becomes determined.

On the new anti-diagonal ``c(i, d-i) = B_i + s_i * beta_m`` with
``s_i = +-1``, while the other factor of each Jacobi term has lower degree.
So every new identity is an affine equation ``a + b * beta_m = 0`` and the
surviving values of ``beta_m`` are obtained by solving those equations
rather than by trial.  The result is the same set a trial of all ``p``
values would give, which the brute-force comparison in the tests checks.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from ..algebra import seq_from_raw
from ..scalar import check_prime

LOG = logging.getLogger(__name__)

__all__ = ["SearchConfig", "SearchResult", "search_sequences"]


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one exhaustive search.

    ``prefix`` pins ``beta_(n+1), beta_(n+2), ...``; ``pinned`` pins arbitrary
    indices.  ``ell`` pins the first constituent length, i.e. forces
    ``beta_i = 0`` for ``i <= ell - n`` and ``beta_(ell-n+1) != 0``.  With
    ``normalize`` the first nonzero entry is forced to 1, so the output lists
    one representative per isomorphism class.
    """

    p: int
    n: int
    degree: int
    prefix: tuple = ()
    pinned: tuple = ()
    ell: Optional[int] = None
    normalize: bool = True
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None

    def __post_init__(self):
        check_prime(self.p)
        if self.n < 1:
            raise ValueError("type must be at least 1")
        if self.degree < self.n + 2:
            raise ValueError(f"degree must be at least n + 2 = {self.n + 2}")
        object.__setattr__(self, "prefix", tuple(int(v) % self.p for v in self.prefix))
        pinned = dict(self.pinned) if not isinstance(self.pinned, dict) else self.pinned
        object.__setattr__(self, "pinned", tuple(sorted((int(i), int(v) % self.p)
                                                        for i, v in pinned.items())))
        if self.ell is not None and self.ell % 2:
            LOG.warning("pinned first constituent length %d is odd; "
                        "no consistent sequence can have it", self.ell)

    @property
    def last_index(self) -> int:
        return self.degree - self.n

    def fixed_values(self) -> dict:
        fixed = {self.n + 1 + k: v for k, v in enumerate(self.prefix)}
        for i, v in self.pinned:
            if fixed.get(i, v) != v:
                raise ValueError(f"conflicting pins for beta_{i}")
            fixed[i] = v
        return fixed


@dataclass
class SearchResult:
    config: SearchConfig
    sequences: list = field(default_factory=list)
    nodes: int = 0
    elapsed: float = 0.0
    complete: bool = True
    limit: Optional[str] = None
    frontier: list = field(default_factory=list)

    @property
    def partial(self) -> bool:
        return not self.complete


def _allowed_values(cfg: SearchConfig, fixed: dict, m: int, seen_nonzero: bool):
    p = cfg.p
    if m in fixed:
        return [fixed[m]]
    if cfg.ell is not None:
        i0 = cfg.ell - cfg.n + 1
        if m < i0:
            return [0]
        if m == i0:
            return [1] if cfg.normalize else list(range(1, p))
    if cfg.normalize and not seen_nonzero:
        return [0, 1] if p > 1 else [0]
    return list(range(p))


def _solve_level(c, d: int, n: int, p: int):
    """Affine data for the anti-diagonal of degree ``d``.

    Returns ``(base, sign, solution)`` where ``solution`` is ``None`` when
    every value of the new entry is admissible, a single residue when one
    is forced, or ``False`` when no value works.
    """
    top = d - n
    base = [0] * (top + 1)
    sign = [0] * (top + 1)
    sign[top] = 1
    for i in range(top - 1, n - 1, -1):
        base[i] = (c[i][d - i - 1] - base[i + 1]) % p
        sign[i] = -sign[i + 1]
    solution = None

    def constrain(a, b):
        nonlocal solution
        a %= p
        b %= p
        if b:
            v = (-a * pow(b, -1, p)) % p
            if solution is None:
                solution = v
            elif solution != v:
                solution = False
        elif a:
            solution = False
        return solution is not False

    # antisymmetry / alternation on the new diagonal
    for i in range(n, d // 2 + 1):
        j = d - i
        if j < i:
            break
        if i < j:
            ok = constrain(base[i] + base[j], sign[i] + sign[j])
        else:
            ok = constrain(base[i], sign[i])
        if not ok:
            return base, sign, False
    # Jacobi: first factors of degree i+j, j+k, k+i < d are already fixed
    for i in range(n, d // 3 + 1):
        ci = c[i]
        for j in range(i + 1, (d - i + 1) // 2):
            k = d - i - j
            if k <= j:
                break
            x, y, w = ci[j], c[j][k], c[k][i]
            a = x * base[i + j] + y * base[j + k] + w * base[k + i]
            b = x * sign[i + j] + y * sign[j + k] + w * sign[k + i]
            if not constrain(a, b):
                return base, sign, False
    return base, sign, solution


def _run(cfg: SearchConfig, deadline: Optional[float], node_budget: Optional[int]):
    p, n = cfg.p, cfg.n
    last = cfg.last_index
    first = n + 1
    fixed = cfg.fixed_values()
    degree = cfg.degree
    c = [[0] * (degree + 1) for _ in range(degree + 1)]
    beta = [0] * (last + 2)
    found = []
    nodes = 0

    if last < first:
        return [()], 0, None, []

    cands = [None] * (last + 2)
    pos = [0] * (last + 2)
    levels = [None] * (last + 2)
    seen = [False] * (last + 2)

    def prepare(m):
        base, sign, sol = _solve_level(c, m + n, n, p)
        allowed = _allowed_values(cfg, fixed, m, seen[m])
        if sol is False:
            cands[m] = []
        elif sol is None:
            cands[m] = allowed
        else:
            cands[m] = [sol] if sol in allowed else []
        levels[m] = (base, sign)
        pos[m] = 0

    m = first
    prepare(m)
    limit = None
    while m >= first:
        if pos[m] >= len(cands[m]):
            m -= 1
            continue
        v = cands[m][pos[m]]
        pos[m] += 1
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            limit = "node_limit"
        elif deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
            limit = "time_limit"
        if limit:
            pos[m] -= 1
            nodes -= 1
            break
        beta[m] = v
        base, sign = levels[m]
        d = m + n
        for i in range(n, m + 1):
            c[i][d - i] = (base[i] + sign[i] * v) % p
        if m == last:
            found.append(tuple(beta[first:last + 1]))
            continue
        seen[m + 1] = seen[m] or v != 0
        m += 1
        prepare(m)

    frontier = []
    if limit:
        for level in range(first, m + 1):
            for v in cands[level][pos[level]:]:
                frontier.append(tuple(beta[first:level]) + (v,))
    return found, nodes, limit, frontier


def _split_prefixes(cfg: SearchConfig, depth: int):
    """Consistent prefixes of ``depth`` entries, used to split work across processes."""
    sub = SearchConfig(cfg.p, cfg.n, 2 * cfg.n + depth, cfg.prefix[:depth],
                       tuple((i, v) for i, v in cfg.pinned if i <= cfg.n + depth),
                       cfg.ell, cfg.normalize)
    found, _, _, _ = _run(sub, None, None)
    return found


def _worker(args):
    cfg, prefix, deadline, budget = args
    sub = SearchConfig(cfg.p, cfg.n, cfg.degree, prefix, cfg.pinned, cfg.ell, cfg.normalize)
    return _run(sub, deadline, budget)


def search_sequences(cfg: SearchConfig, threads: int = 1) -> SearchResult:
    """Enumerate every consistent prefix to ``cfg.degree``, sorted lexicographically.

    If a node or time limit is hit the result has ``complete == False`` and
    lists the unexplored ``frontier`` prefixes; the solutions found so far
    are kept but are not the full set.
    """
    start = time.monotonic()
    deadline = start + cfg.time_limit if cfg.time_limit else None
    if threads <= 1:
        found, nodes, limit, frontier = _run(cfg, deadline, cfg.node_limit)
    else:
        depth = min(max(len(cfg.prefix), 6), cfg.last_index - cfg.n)
        prefixes = _split_prefixes(cfg, depth)
        found, nodes, limit, frontier = [], len(prefixes), None, []
        jobs = [(cfg, pre, deadline, cfg.node_limit) for pre in prefixes]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for f, k, lim, fr in pool.map(_worker, jobs):
                found.extend(f)
                nodes += k
                frontier.extend(fr)
                limit = limit or lim
    found = sorted(set(found))
    seqs = [seq_from_raw(cfg.p, cfg.n, row, normalized=cfg.normalize and any(row))
            for row in found]
    return SearchResult(cfg, seqs, nodes, time.monotonic() - start, limit is None, limit,
                        sorted(frontier))
