"""How common are lower perfect, upper perfect and perfect sets among ``C(n,d)/2``-subsets of ``M_{n,d}``.

Exact counts for tiny ``(n, d)``, seeded Monte Carlo estimates otherwise, and the
closed-form bounds that drive the asymptotics: a union bound from below for
lower perfection, and a block-covering bound from above for upper perfection.
"""
from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, exp, lgamma
from typing import Iterable, Sequence

import numpy as np
from scipy.stats import binomtest

from .complexes import is_f_ideal
from .errors import InvalidArgument, StructurallyImpossible, TooLarge, UndefinedBound
from .monomial import GeneratorSet, check_n
from .perfect import SliceIndex

KINDS = ("lp", "up", "perfect", "fideal")
DEFAULT_BUDGET = 10**6
BLOCK = 1024  # trials per independently seeded block


@dataclass(frozen=True)
class DensityEstimate:
    kind: str
    fraction: float
    ci_low: float
    ci_high: float
    trials: int
    seed: int | None
    hits: int

    @property
    def half_width(self) -> float:
        return (self.ci_high - self.ci_low) / 2


@dataclass(frozen=True)
class ExactCounts:
    n: int
    d: int
    total: int
    lp: int
    up: int
    perfect: int
    fideal: int

    def estimates(self) -> list[DensityEstimate]:
        out = []
        for kind in KINDS:
            hits = getattr(self, kind)
            f = hits / self.total
            out.append(DensityEstimate(kind, f, f, f, self.total, None, hits))
        return out

    def fraction(self, kind: str) -> Fraction:
        return Fraction(getattr(self, kind), self.total)


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    m: int
    l: int
    lp_lower_bound: float
    up_upper_bound: float | None


def _check_slice(n: int, d: int) -> int:
    check_n(n)
    if not isinstance(d, int) or d < 2 or d >= n:
        raise InvalidArgument(f"need 2 <= d < n, got n = {n}, d = {d}")
    total = comb(n, d)
    if total % 2:
        raise StructurallyImpossible(f"C({n},{d}) = {total} is odd")
    return total // 2


def _log_comb(a: int, b: int) -> float:
    return lgamma(a + 1) - lgamma(b + 1) - lgamma(a - b + 1)


def lp_lower_bound(n: int, d: int) -> float:
    """``1 - C(n,d-1) C(2m-n+d-1, m) / C(2m, m)`` with ``m = C(n,d)/2``, clamped to [0, 1]."""
    m = _check_slice(n, d)
    top = 2 * m - n + d - 1
    if top < m:
        return 1.0
    ratio = exp(_log_comb(n, d - 1) + _log_comb(top, m) - _log_comb(2 * m, m))
    return min(1.0, max(0.0, 1.0 - ratio))


def up_cover_bound(n: int, d: int) -> float:
    """``[1 - ((m-n)/(2m-n))^(d+1)]^l`` with ``l = floor(n/(d+1))``.

    Upper bound on the probability that a uniform ``m``-subset meets every block
    ``{u_p / x : x | u_p}`` of the disjoint monomials ``u_p``, a necessary condition for
    upper perfection.
    """
    m = _check_slice(n, d)
    if m <= n:
        raise UndefinedBound(f"m = {m} <= n = {n}: the covering bound is undefined")
    l = n // (d + 1)
    inner = (m - n) / (2 * m - n)
    return (1.0 - inner ** (d + 1)) ** l


def bound_report(n: int, d: int) -> BoundReport:
    m = _check_slice(n, d)
    try:
        up = up_cover_bound(n, d)
    except UndefinedBound:
        up = None
    return BoundReport(n, d, m, n // (d + 1), lp_lower_bound(n, d), up)


def wilson(hits: int, trials: int) -> tuple[float, float]:
    ci = binomtest(hits, trials).proportion_ci(confidence_level=0.95, method="wilson")
    return float(ci.low), float(ci.high)


def _estimate(kind: str, hits: int, trials: int, seed: int) -> DensityEstimate:
    lo, hi = wilson(hits, trials)
    f = hits / trials
    return DensityEstimate(kind, f, min(lo, f), max(hi, f), trials, seed, hits)


def enumerate_exact(n: int, d: int, budget: int = DEFAULT_BUDGET) -> ExactCounts:
    """Classify every ``C(n,d)/2``-subset of ``M_{n,d}``.

    Perfection is tested on rank tables; the f-ideal count comes from the ABCD
    engine run on each generated ideal, independently of the perfection test.
    """
    m = _check_slice(n, d)
    size = comb(n, d)
    total = comb(size, m)
    if total > budget:
        raise TooLarge(f"C({size},{m}) = {total} subsets exceeds the budget {budget}")
    idx = SliceIndex(n, d)
    lp = up = perfect = fideal = 0
    subsets = combinations(range(size), m)
    while True:
        chunk = np.array(list(_take(subsets, 8192)), dtype=np.int64)
        if chunk.size == 0:
            break
        chosen = idx.indicator(chunk)
        low = idx.lower_perfect(chosen)
        upp = idx.upper_perfect(chosen)
        lp += int(low.sum())
        up += int(upp.sum())
        perfect += int((low & upp).sum())
        for row in chunk:
            g = GeneratorSet.from_masks(n, (idx.masks[r] for r in row))
            fideal += is_f_ideal(g)
    return ExactCounts(n, d, total, lp, up, perfect, fideal)


def _take(it, k: int):
    for _ in range(k):
        try:
            yield next(it)
        except StopIteration:
            return


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("FIDEAL_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def _block_counts(idx: SliceIndex, m: int, seed: int, block: int, size: int, fideal: str) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))
    keys = rng.random((size, idx.size))
    ranks = np.argpartition(keys, m - 1, axis=1)[:, :m]
    chosen = idx.indicator(ranks)
    low = idx.lower_perfect(chosen)
    upp = idx.upper_perfect(chosen)
    both = low & upp
    if fideal == "engine":
        fi = np.array(
            [is_f_ideal(GeneratorSet.from_masks(idx.n, (idx.masks[r] for r in row))) for row in ranks],
            dtype=bool,
        )
    else:
        fi = both
    return np.array([low.sum(), upp.sum(), both.sum(), fi.sum()], dtype=np.int64)


def sample_densities(
    n: int,
    d: int,
    trials: int,
    seed: int,
    workers: int | None = None,
    fideal: str = "perfect",
) -> list[DensityEstimate]:
    """Estimate the four densities from ``trials`` uniform ``C(n,d)/2``-subsets.

    Trials are split into fixed blocks of ``BLOCK``; block ``b`` draws from the stream
    ``SeedSequence(seed, spawn_key=(b,))``, so results do not depend on ``workers``.
    ``fideal="perfect"`` reports the f-ideal density as the perfect density (the two
    coincide for ideals with ``C(n,d)/2`` generators); ``fideal="engine"`` runs the
    ABCD engine on every draw instead, which is far slower.
    """
    m = _check_slice(n, d)
    if not isinstance(trials, int) or trials < 1:
        raise InvalidArgument(f"trials must be a positive integer, got {trials!r}")
    if fideal not in ("perfect", "engine"):
        raise InvalidArgument(f"fideal must be 'perfect' or 'engine', got {fideal!r}")
    idx = SliceIndex(n, d)
    sizes = [min(BLOCK, trials - b * BLOCK) for b in range((trials + BLOCK - 1) // BLOCK)]
    w = _workers(workers)
    args = [(idx, m, seed, b, s, fideal) for b, s in enumerate(sizes)]
    if w == 1 or len(args) == 1:
        parts = [_block_counts(*a) for a in args]
    else:
        with ThreadPoolExecutor(max_workers=w) as ex:
            parts = list(ex.map(lambda a: _block_counts(*a), args))
    counts = np.sum(parts, axis=0)
    return [_estimate(kind, int(c), trials, seed) for kind, c in zip(KINDS, counts)]


TREND_COLUMNS = [
    "n", "d", "mode", "trials", "seed",
    "lp", "lp_lo", "lp_hi", "up", "up_lo", "up_hi",
    "perfect", "fideal", "lp_bound", "up_bound",
]


def trend_report(
    d: int,
    n_list: Iterable[int],
    trials: int,
    seed: int,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
) -> list[dict]:
    """One row per ``n`` (sorted): exact counts when affordable, samples otherwise, plus both bounds.

    A row for an ``n`` with ``C(n,d)`` odd has ``mode == "impossible"`` and blank values.
    """
    rows = []
    for n in sorted(n_list):
        row: dict = {c: "" for c in TREND_COLUMNS}
        row.update(n=n, d=d)
        try:
            m = _check_slice(n, d)
        except StructurallyImpossible:
            row["mode"] = "impossible"
            rows.append(row)
            continue
        size = comb(n, d)
        if comb(size, m) <= budget:
            ex = enumerate_exact(n, d, budget)
            est = {e.kind: e for e in ex.estimates()}
            row.update(mode="exact", trials=ex.total, seed="")
        else:
            est = {e.kind: e for e in sample_densities(n, d, trials, seed, workers)}
            row.update(mode="sample", trials=trials, seed=seed)
        for kind in ("lp", "up"):
            row[kind] = est[kind].fraction
            row[f"{kind}_lo"] = est[kind].ci_low
            row[f"{kind}_hi"] = est[kind].ci_high
        row["perfect"] = est["perfect"].fraction
        row["fideal"] = est["fideal"].fraction
        b = bound_report(n, d)
        row["lp_bound"] = b.lp_lower_bound
        row["up_bound"] = "" if b.up_upper_bound is None else b.up_upper_bound
        rows.append(row)
    return rows


def format_trend_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TREND_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _fmt(v) for k, v in row.items()})
    return buf.getvalue()


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.6g}"
    return v
