"""Lower, upper and perfect subsets of one degree slice ``M_{n,d}``."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .errors import InvalidArgument, StructurallyImpossible
from .monomial import GeneratorSet, Monomial, check_n, iter_masks


@dataclass(frozen=True)
class DegreeSlice:
    n: int
    d: int
    mons: frozenset[Monomial]

    def __init__(self, n: int, d: int, mons: Iterable[Monomial | Iterable[int]]):
        check_n(n)
        if not 0 <= d <= n:
            raise InvalidArgument(f"degree must satisfy 0 <= d <= n = {n}, got {d}")
        ms = frozenset(m if isinstance(m, Monomial) else Monomial(m) for m in mons)
        full = (1 << n) - 1
        for m in ms:
            if m.degree != d:
                raise InvalidArgument(f"{list(m.vars)} has degree {m.degree}, slice degree is {d}")
            if m.mask & ~full:
                raise InvalidArgument(f"{list(m.vars)} uses an index larger than n = {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "mons", ms)

    @classmethod
    def of_ideal(cls, g: GeneratorSet) -> "DegreeSlice":
        degs = g.degrees
        if len(degs) != 1:
            raise InvalidArgument(f"generators span degrees {degs}; a degree slice needs exactly one")
        return cls(g.n, degs[0], g.gens)

    @property
    def half(self) -> int:
        """``C(n, d) / 2``, the generator count of any pure f-ideal in this slice."""
        return comb(self.n, self.d) // 2

    def masks(self) -> set[int]:
        return {m.mask for m in self.mons}

    def __len__(self) -> int:
        return len(self.mons)


def _bits(m: int):
    while m:
        low = m & -m
        yield low
        m ^= low


def is_lower_perfect(a: DegreeSlice) -> bool:
    if a.d < 1:
        raise InvalidArgument("lower perfection needs d >= 1")
    shadow = {m ^ b for m in a.masks() for b in _bits(m)}
    return len(shadow) == comb(a.n, a.d - 1)


def is_upper_perfect(a: DegreeSlice) -> bool:
    if a.d >= a.n:
        raise InvalidArgument("upper perfection needs d < n")
    full = (1 << a.n) - 1
    shadow = {m | b for m in a.masks() for b in _bits(full ^ m)}
    return len(shadow) == comb(a.n, a.d + 1)


def is_perfect(a: DegreeSlice) -> bool:
    return is_lower_perfect(a) and is_upper_perfect(a)


class Verdict(str, enum.Enum):
    YES = "yes"
    NO = "no"
    IMPOSSIBLE = "impossible"


def pure_f_ideal_verdict(a: DegreeSlice) -> Verdict:
    if a.d < 2:
        raise InvalidArgument("pure f-ideals are generated in degree >= 2")
    if comb(a.n, a.d) % 2:
        return Verdict.IMPOSSIBLE
    if len(a) == a.half and is_perfect(a):
        return Verdict.YES
    return Verdict.NO


def is_pure_f_ideal(a: DegreeSlice) -> bool:
    """True iff ``a`` has exactly ``C(n,d)/2`` elements and is perfect.

    Raises :class:`StructurallyImpossible` when ``C(n, d)`` is odd.
    """
    v = pure_f_ideal_verdict(a)
    if v is Verdict.IMPOSSIBLE:
        raise StructurallyImpossible(f"C({a.n},{a.d}) = {comb(a.n, a.d)} is odd")
    return v is Verdict.YES


class SliceIndex:
    """Rank tables for testing many subsets of ``M_{n,d}`` at once.

    A subset is a boolean row over lexicographic ranks.  ``lower[r]`` lists the ranks
    of the degree-``d`` multiples of the ``r``-th degree-``d-1`` monomial, and
    ``upper[r]`` the ranks of the degree-``d`` divisors of the ``r``-th degree-``d+1``
    monomial.
    """

    def __init__(self, n: int, d: int):
        check_n(n)
        if not 1 <= d <= n - 1:
            raise InvalidArgument(f"need 1 <= d <= n - 1, got n={n}, d={d}")
        self.n, self.d = n, d
        self.masks = list(iter_masks(n, d))
        rank = {m: r for r, m in enumerate(self.masks)}
        full = (1 << n) - 1
        self.lower = np.array(
            [[rank[m | b] for b in _bits(full ^ m)] for m in iter_masks(n, d - 1)], dtype=np.int64
        )
        self.upper = np.array(
            [[rank[m ^ b] for b in _bits(m)] for m in iter_masks(n, d + 1)], dtype=np.int64
        )

    @property
    def size(self) -> int:
        return len(self.masks)

    def indicator(self, ranks_rows: np.ndarray) -> np.ndarray:
        """Boolean membership matrix from an integer array of chosen ranks, one row per subset."""
        rows = np.atleast_2d(ranks_rows)
        out = np.zeros((rows.shape[0], self.size), dtype=bool)
        np.put_along_axis(out, rows, True, axis=1)
        return out

    def lower_perfect(self, chosen: np.ndarray, chunk: int = 4096) -> np.ndarray:
        return self._covers(chosen, self.lower, chunk)

    def upper_perfect(self, chosen: np.ndarray, chunk: int = 4096) -> np.ndarray:
        return self._covers(chosen, self.upper, chunk)

    @staticmethod
    def _covers(chosen: np.ndarray, table: np.ndarray, chunk: int) -> np.ndarray:
        chosen = np.atleast_2d(chosen)
        ok = np.ones(chosen.shape[0], dtype=bool)
        for lo in range(0, table.shape[0], chunk):
            part = table[lo:lo + chunk]
            ok &= chosen[:, part].any(axis=2).all(axis=1)
        return ok


def all_half_subsets(n: int, d: int) -> Iterable[tuple[int, ...]]:
    """Every ``C(n,d)/2``-subset of ranks of ``M_{n,d}``, lexicographically."""
    total = comb(n, d)
    return combinations(range(total), total // 2)
