"""Squarefree monomials as subsets of variable indices.

A monomial ``x_{i1} ... x_{ir}`` is stored as the bitmask with bit ``i - 1`` set
for each index ``i``.  Indices are 1-based everywhere outside this module.
"""
from __future__ import annotations

import json
from functools import total_ordering
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgument

MAX_VARS = 64


def check_n(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    if n > MAX_VARS:
        raise InvalidArgument(f"n = {n} exceeds the supported bound {MAX_VARS}")
    return n


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if not isinstance(i, int) or isinstance(i, bool) or i < 1 or i > MAX_VARS:
            raise InvalidArgument(f"variable index must be an integer in 1..{MAX_VARS}, got {i!r}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise InvalidArgument(f"repeated variable index {i}: monomial is not squarefree")
        mask |= bit
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@total_ordering
class Monomial:
    """Immutable squarefree monomial, identified with its support.

    Ordering is lexicographic on the sorted index tuple, so ``{1,2} < {1,2,3} < {1,3}``.
    """

    __slots__ = ("mask", "vars")

    def __init__(self, indices: Iterable[int] = ()):
        object.__setattr__(self, "mask", mask_of(indices))
        object.__setattr__(self, "vars", indices_of(self.mask))

    @classmethod
    def from_mask(cls, mask: int) -> "Monomial":
        if mask < 0 or mask >> MAX_VARS:
            raise InvalidArgument(f"mask {mask!r} out of range")
        m = cls.__new__(cls)
        object.__setattr__(m, "mask", mask)
        object.__setattr__(m, "vars", indices_of(mask))
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.vars)

    def __len__(self) -> int:
        return len(self.vars)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vars)

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= MAX_VARS and bool(self.mask >> (i - 1) & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.mask == other.mask

    def __lt__(self, other: "Monomial") -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.vars < other.vars

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return f"Monomial({list(self.vars)})"

    def __str__(self) -> str:
        return "*".join(f"x{i}" for i in self.vars) or "1"

    def __reduce__(self):
        return (Monomial, (self.vars,))

    def divides(self, other: "Monomial") -> bool:
        return divides(self, other)


UNIT = Monomial()


def enumerate_monomials(n: int, d: int) -> list[Monomial]:
    """All ``C(n, d)`` squarefree monomials of degree ``d`` in lexicographic order."""
    check_n(n)
    if not isinstance(d, int) or d < 0 or d > n:
        raise InvalidArgument(f"degree must satisfy 0 <= d <= n = {n}, got {d!r}")
    return [Monomial(c) for c in combinations(range(1, n + 1), d)]


def iter_masks(n: int, d: int) -> Iterator[int]:
    """Bitmasks of the degree-``d`` monomials, in the same order as :func:`enumerate_monomials`."""
    for c in combinations(range(n), d):
        m = 0
        for i in c:
            m |= 1 << i
        yield m


def divides(a: Monomial, b: Monomial) -> bool:
    return a.mask & ~b.mask == 0


def complement_monomial(m: Monomial, n: int) -> Monomial:
    """``x_1 ... x_n / m``."""
    check_n(n)
    full = (1 << n) - 1
    if m.mask & ~full:
        raise InvalidArgument(f"{m!r} uses an index larger than n = {n}")
    return Monomial.from_mask(full ^ m.mask)


def rank_monomial(m: Monomial, n: int) -> int:
    """Lexicographic position of ``m`` within ``enumerate_monomials(n, m.degree)``."""
    d = m.degree
    r = 0
    prev = 0
    for pos, i in enumerate(m.vars):
        if i > n:
            raise InvalidArgument(f"{m!r} uses an index larger than n = {n}")
        for j in range(prev + 1, i):
            r += comb(n - j, d - pos - 1)
        prev = i
    return r


def unrank_monomial(r: int, n: int, d: int) -> Monomial:
    total = comb(n, d)
    if not 0 <= r < total:
        raise InvalidArgument(f"rank {r} outside 0..{total - 1}")
    out = []
    x = 1
    for pos in range(d):
        while True:
            c = comb(n - x, d - pos - 1)
            if r < c:
                break
            r -= c
            x += 1
        out.append(x)
        x += 1
    return Monomial(out)


def _minimal_masks(masks: Sequence[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: m.bit_count())
    kept: list[int] = []
    by_degree: dict[int, list[int]] = {}
    for m in uniq:
        deg = m.bit_count()
        redundant = False
        for e, group in by_degree.items():
            if e < deg and any(h & ~m == 0 for h in group):
                redundant = True
                break
        if not redundant:
            kept.append(m)
            by_degree.setdefault(deg, []).append(m)
    return kept


class GeneratorSet:
    """A finite set of squarefree monomials in ``n`` variables (a candidate ``G(I)``).

    Duplicates are dropped on construction.  ``minimal`` reports whether no element
    divides another; use :func:`minimalize` to obtain a minimal generating set.
    """

    __slots__ = ("n", "gens", "masks", "_minimal")

    def __init__(self, n: int, gens: Iterable[Monomial | Iterable[int]]):
        check_n(n)
        full = (1 << n) - 1
        mons = {g if isinstance(g, Monomial) else Monomial(g) for g in gens}
        for g in mons:
            if g.mask & ~full:
                raise InvalidArgument(f"generator {list(g.vars)} uses an index larger than n = {n}")
        self.n = n
        self.gens: tuple[Monomial, ...] = tuple(sorted(mons))
        self.masks: tuple[int, ...] = tuple(g.mask for g in self.gens)
        self._minimal: bool | None = None

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "GeneratorSet":
        return cls(n, (Monomial.from_mask(m) for m in masks))

    @property
    def minimal(self) -> bool:
        if self._minimal is None:
            self._minimal = len(_minimal_masks(self.masks)) == len(self.masks)
        return self._minimal

    @property
    def degrees(self) -> list[int]:
        return sorted({g.degree for g in self.gens})

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return m in set(self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneratorSet):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"GeneratorSet(n={self.n}, gens={[list(g.vars) for g in self.gens]})"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "generators": [list(g.vars) for g in self.gens]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GeneratorSet":
        try:
            n = obj["n"]
            gens = obj["generators"]
        except (KeyError, TypeError) as exc:
            raise InvalidArgument(f"GeneratorSet JSON needs 'n' and 'generators': {exc}") from None
        if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
            raise InvalidArgument("'generators' must be a list of integer lists")
        return cls(n, gens)

    @classmethod
    def from_json(cls, text: str) -> "GeneratorSet":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidArgument(f"malformed JSON: {exc}") from None
        return cls.from_json_obj(obj)


def minimalize(g: GeneratorSet) -> GeneratorSet:
    """Drop every generator that is a proper multiple of another one."""
    out = GeneratorSet.from_masks(g.n, _minimal_masks(g.masks))
    out._minimal = True
    return out
