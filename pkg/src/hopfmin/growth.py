"""Dimension tables by multidegree and growth verdicts on their totals.

The dimension of the minimal quotient in a multidegree is the rank of the
Sh block there. Collecting every multidegree of total degree up to a bound
gives a truncated Hilbert table; summing ranks along total degree gives the
sequence the growth classifier looks at.

Classification inspects a trailing window of the totals:

* all zeros there: Finite;
* some k-th difference sequence settles (constant across the window, or
  equal at stride two inside it, which catches period-two quasi-polynomial
  dimension counts such as graded root-system tables): Polynomial(k) for
  the least such k < window;
* consecutive ratios all at least the threshold: ExponentialSuspected;
* anything else, or a history shorter than twice the window: Inconclusive.

The stride-two clause is deliberate: totals of a free-to-shuffle table over
a rank-two root system oscillate in their second differences forever, and a
literal constancy test would never settle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .shapovalov import (
    DEFAULT_BLOCK_LIMIT,
    BlockSizeError,
    SymEngine,
    matrix_rows,
    rank_rows,
)
from .words import block_size, multidegrees_up_to

FINITE = "finite"
POLYNOMIAL = "polynomial"
EXPONENTIAL_SUSPECTED = "exponential_suspected"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BlockDim:
    deg: tuple[int, ...]
    size: int
    rank: int


@dataclass(frozen=True)
class HilbertTable:
    max_total: int
    blocks: tuple[BlockDim, ...]

    def dims(self):
        """Multidegree -> rank mapping."""
        return {b.deg: b.rank for b in self.blocks}

    def totals(self):
        """Summed ranks per total degree, indices 0..max_total."""
        out = [0] * (self.max_total + 1)
        for b in self.blocks:
            out[sum(b.deg)] += b.rank
        return tuple(out)


@dataclass(frozen=True)
class GrowthVerdict:
    kind: str
    degree: object
    evidence: dict


@dataclass(frozen=True)
class DominanceReport:
    table: HilbertTable
    verdict: GrowthVerdict
    dominance: str


def _block_entry(datum, deg, block_limit, engine=None):
    size = block_size(deg)
    if block_limit is not None and size > block_limit:
        raise BlockSizeError(deg, size, block_limit)
    _, rows = matrix_rows(datum, deg, engine=engine)
    return BlockDim(tuple(deg), size, rank_rows(datum.field, rows))


def _block_task(args):
    datum, deg, block_limit = args
    return _block_entry(datum, deg, block_limit)


def compute_blocks(datum, degs, block_limit=DEFAULT_BLOCK_LIMIT, jobs=1):
    """BlockDim for each multidegree, in the order given.

    The size guard runs over all requested blocks before any work starts,
    so oversized inputs fail fast and name the offending multidegree. With
    jobs > 1 blocks are computed in worker processes; results are collected
    in input order, so the output does not depend on scheduling.
    """
    degs = [tuple(d) for d in degs]
    for deg in degs:
        size = block_size(deg)
        if block_limit is not None and size > block_limit:
            raise BlockSizeError(deg, size, block_limit)
    if jobs > 1 and len(degs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return tuple(pool.map(
                _block_task,
                [(datum, deg, block_limit) for deg in degs]))
    engine = SymEngine(datum.braiding_matrix)
    out = []
    for deg in degs:
        out.append(_block_entry(datum, deg, block_limit, engine=engine))
        engine.trim()
    return tuple(out)


def hilbert_table(datum, max_total, block_limit=DEFAULT_BLOCK_LIMIT, jobs=1):
    """Ranks of every block with total degree up to max_total."""
    degs = multidegrees_up_to(datum.m, max_total)
    return HilbertTable(max_total, compute_blocks(
        datum, degs, block_limit=block_limit, jobs=jobs))


def kostant_dims(roots, deg):
    """Number of multisets of the given roots summing to the multidegree.

    Exhaustive recursion over the root list; the classical prediction for
    block ranks of a Cartan-type braiding with these positive roots.
    """
    roots = tuple(tuple(r) for r in roots)

    @lru_cache(maxsize=None)
    def count(i, rem):
        if not any(rem):
            return 1
        if i == len(roots):
            return 0
        total = count(i + 1, rem)
        root = roots[i]
        if all(a >= b for a, b in zip(rem, root)):
            total += count(i, tuple(a - b for a, b in zip(rem, root)))
        return total

    result = count(0, tuple(int(d) for d in deg))
    count.cache_clear()
    return result


def _differences(seq):
    return tuple(b - a for a, b in zip(seq, seq[1:]))


def _settled(tail):
    """A difference tail counts as settled when constant, or when equal at
    stride two (period-two oscillation)."""
    if all(x == tail[0] for x in tail):
        return "constant"
    if len(tail) >= 3 and all(tail[i] == tail[i - 2] for i in range(2, len(tail))):
        return "alternating"
    return None


def growth_classify(totals, window=3, ratio=Fraction(3, 2)):
    """Growth verdict for a totals sequence indexed from degree 0."""
    totals = tuple(int(x) for x in totals)
    if window < 1:
        raise ValueError("window must be positive")
    top = len(totals) - 1
    if top < 2 * window:
        return GrowthVerdict(INCONCLUSIVE, None, {
            "reason": f"need totals up to degree {2 * window}, have {top}",
            "window": window,
        })
    tail = totals[-window:]
    if not any(tail):
        last_nonzero = max((i for i, x in enumerate(totals) if x), default=0)
        return GrowthVerdict(FINITE, None, {
            "window": window,
            "trailing": list(tail),
            "last_nonzero_degree": last_nonzero,
        })
    diffs = totals
    for k in range(window):
        dtail = diffs[-window:]
        mode = _settled(dtail)
        if mode is not None:
            return GrowthVerdict(POLYNOMIAL, k, {
                "window": window,
                "differences_order": k,
                "differences_tail": list(dtail),
                "mode": mode,
            })
        diffs = _differences(diffs)
    if all(totals[i] for i in range(len(totals) - window, len(totals))):
        ratios = [Fraction(totals[i + 1], totals[i])
                  for i in range(len(totals) - window, len(totals) - 1)]
        if all(r >= ratio for r in ratios):
            return GrowthVerdict(EXPONENTIAL_SUSPECTED, None, {
                "window": window,
                "ratios": [str(r) for r in ratios],
                "threshold": str(ratio),
            })
    return GrowthVerdict(INCONCLUSIVE, None, {
        "reason": "trailing window neither settles nor grows steadily",
        "window": window,
        "trailing": list(tail),
    })


def dominance_label(verdict, max_total):
    """One-line reading of a verdict as a dominance statement."""
    if verdict.kind == FINITE:
        return (f"dominant at truncation {max_total}: "
                f"graded dimensions vanish from degree "
                f"{verdict.evidence['last_nonzero_degree'] + 1} on")
    if verdict.kind == POLYNOMIAL:
        return (f"dominant at truncation {max_total}: "
                f"graded growth is polynomial of degree {verdict.degree}")
    if verdict.kind == EXPONENTIAL_SUSPECTED:
        return (f"not dominant at truncation {max_total}: "
                f"graded growth looks exponential")
    return f"undetermined at truncation {max_total}"


def dominance_verdict(datum, max_total, window=3,
                      block_limit=DEFAULT_BLOCK_LIMIT, jobs=1):
    """Hilbert table, growth verdict, and dominance line for a datum."""
    table = hilbert_table(datum, max_total, block_limit=block_limit, jobs=jobs)
    verdict = growth_classify(table.totals(), window=window)
    return DominanceReport(table, verdict, dominance_label(verdict, max_total))
