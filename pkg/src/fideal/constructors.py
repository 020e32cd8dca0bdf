"""Explicit constructions of f-ideals.

Mixed constructions in degrees 2 and 3 (``construct_mixed_odd_a``,
``construct_mixed_odd_b``, ``construct_mixed_even``, ``construct_block_odd``,
``construct_block_even``), pure constructions in degrees 3, 4 and 5 over the
residue blocks ``S_i = {x_j : j = i mod d}`` (``construct_pure``) and the
complementary dual (``newton_dual``).

Every constructor verifies its output before returning it and raises
:class:`ConstructionFailed` otherwise.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .complexes import is_f_ideal
from .errors import ConstructionFailed, InvalidArgument, StructurallyImpossible, UnsupportedIdeal
from .monomial import GeneratorSet, Monomial, complement_monomial, iter_masks, minimalize
from .perfect import DegreeSlice, is_perfect

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelectionPolicy:
    """How the free-choice step of a construction picks its monomials.

    ``lex`` takes the lexicographically smallest eligible monomials, ``random``
    draws uniformly with a fixed seed, ``explicit`` uses a caller-given list
    (which must consist of eligible monomials of the right count).
    """

    mode: str = "lex"
    seed: int | None = None
    choice: tuple[Monomial, ...] = ()

    @classmethod
    def lex(cls) -> "SelectionPolicy":
        return cls()

    @classmethod
    def seeded(cls, seed: int) -> "SelectionPolicy":
        return cls("random", int(seed))

    @classmethod
    def explicit(cls, mons: Iterable[Monomial | Iterable[int]]) -> "SelectionPolicy":
        return cls("explicit", None, tuple(m if isinstance(m, Monomial) else Monomial(m) for m in mons))

    def __post_init__(self):
        if self.mode not in ("lex", "random", "explicit"):
            raise InvalidArgument(f"unknown selection mode {self.mode!r}")
        if self.mode == "random" and self.seed is None:
            raise InvalidArgument("random selection needs a seed")

    def select(self, pool: Sequence[int], count: int, what: str) -> list[int]:
        if count < 0:
            raise ConstructionFailed(f"{what}: closed-form count is negative ({count})")
        if count > len(pool):
            raise ConstructionFailed(f"{what}: need {count} monomials but only {len(pool)} are eligible")
        if self.mode == "lex":
            return list(pool[:count])
        if self.mode == "random":
            rng = np.random.default_rng(self.seed)
            picked = np.sort(rng.choice(len(pool), size=count, replace=False))
            return [pool[i] for i in picked]
        wanted = [m.mask for m in self.choice]
        eligible = set(pool)
        bad = [Monomial.from_mask(m) for m in wanted if m not in eligible]
        if bad:
            raise InvalidArgument(f"{what}: {[list(b.vars) for b in bad]} are not eligible choices")
        if len(set(wanted)) != count:
            raise InvalidArgument(f"{what}: expected {count} distinct monomials, got {len(set(wanted))}")
        return sorted(set(wanted), key=lambda m: Monomial.from_mask(m).vars)

    def to_json_obj(self) -> dict:
        out: dict = {"mode": self.mode}
        if self.seed is not None:
            out["seed"] = self.seed
        if self.choice:
            out["choice"] = [list(m.vars) for m in self.choice]
        return out


LEX = SelectionPolicy()


@dataclass
class ConstructionTrace:
    algorithm: str
    params: dict
    parts: dict[str, tuple[Monomial, ...]]
    free_choice_count: int
    printed_free_count: Fraction | int | None = None
    policy: SelectionPolicy = LEX
    notes: list[str] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        printed = self.printed_free_count
        if isinstance(printed, Fraction):
            printed = int(printed) if printed.denominator == 1 else str(printed)
        return {
            "algorithm": self.algorithm,
            "params": self.params,
            "policy": self.policy.to_json_obj(),
            "parts": {k: [list(m.vars) for m in v] for k, v in self.parts.items()},
            "part_sizes": {k: len(v) for k, v in self.parts.items()},
            "free_choice_count": self.free_choice_count,
            "printed_free_count": printed,
            "notes": self.notes,
        }


class Construction(NamedTuple):
    ideal: GeneratorSet
    trace: ConstructionTrace


def _m(*idx: int) -> int:
    out = 0
    for i in idx:
        out |= 1 << (i - 1)
    return out


def _mons(masks: Iterable[int]) -> tuple[Monomial, ...]:
    return tuple(sorted(Monomial.from_mask(m) for m in masks))


def _check_int(name: str, v) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidArgument(f"{name} must be an integer, got {v!r}")
    return v


def _finish(n: int, trace: ConstructionTrace, verify: bool) -> Construction:
    # NF holds the chosen degree-2 nonfaces, not generators
    gens = [m for name, part in trace.parts.items() if name != "NF" for m in part]
    ideal = GeneratorSet(n, gens)
    if len(ideal) != len(gens):
        raise ConstructionFailed(f"{trace.algorithm}: generator parts overlap")
    if verify and not is_f_ideal(ideal):
        raise ConstructionFailed(f"{trace.algorithm} with {trace.params}: output is not an f-ideal")
    return Construction(ideal, trace)


def _free_cubics(
    n: int,
    quadrics: set[int],
    nonfaces: set[int],
    fixed: set[int],
) -> tuple[list[int], int]:
    """Eligible degree-3 monomials and the number of them the free step must add.

    With no generators above degree 3, ``#A_3 = #C_3`` forces ``#C_3`` to be half of
    the degree-3 monomials outside ``D_3`` (the multiples of degree-2 generators).
    """
    blocked = quadrics | nonfaces
    outside_d3 = 0
    pool = []
    for c in iter_masks(n, 3):
        pairs = [c ^ b for b in _bits(c)]
        if not any(p in quadrics for p in pairs):
            outside_d3 += 1
        if c in fixed or any(p in blocked for p in pairs):
            continue
        pool.append(c)
    if outside_d3 % 2:
        raise ConstructionFailed(f"{outside_d3} degree-3 monomials outside D_3: odd, cannot split evenly")
    return pool, outside_d3 // 2 - len(fixed)


def _bits(m: int):
    while m:
        low = m & -m
        yield low
        m ^= low


def _record_count(trace: ConstructionTrace) -> None:
    printed = trace.printed_free_count
    if printed is not None and printed != trace.free_choice_count:
        msg = f"closed-form free count {printed} differs from slice count {trace.free_choice_count}"
        trace.notes.append(msg)
        log.warning("%s: %s", trace.algorithm, msg)


def _mixed_odd(k: int, policy: SelectionPolicy, verify: bool, variant: str) -> Construction:
    n = 2 * k + 1
    evens = range(2, 2 * k + 1, 2)
    odds = range(1, 2 * k, 2)
    g1 = {_m(i, j) for i, j in combinations(evens, 2)}
    nf = {_m(i, j) for i in odds for j in evens if i + 1 < j}
    if variant == "b":
        g1 |= {_m(2, 3), _m(2, 5)}
        nf |= {_m(2, 7), _m(2, 9)}
    g2 = {_m(i, j, n) for i, j in combinations(range(1, 2 * k + 1), 2) if _m(i, j) not in g1 | nf}
    g3 = {_m(*t) for t in combinations(odds, 3)}
    pool, free = _free_cubics(n, g1, nf, g2 | g3)
    if variant == "a":
        printed = Fraction(k * (k + 1) * (4 * k - 1), 12) - Fraction(k * (k - 1) * (k - 2) + 6 * k * k, 6)
    else:
        printed = Fraction(4 * k**3 + 3 * k**2 - 13 * k + 6, 12) - Fraction(k * (k - 1) * (k - 2) + 6 * k * k - 24, 6)
    trace = ConstructionTrace(
        "4.1" if variant == "a" else "4.4",
        {"k": k, "n": n},
        {},
        free,
        printed,
        policy,
    )
    _record_count(trace)
    g4 = policy.select(pool, free, f"{trace.algorithm} G4")
    trace.parts = {
        "G1": _mons(g1),
        "NF": _mons(nf),
        "G2": _mons(g2),
        "G3": _mons(g3),
        "G4": _mons(g4),
    }
    return _finish(n, trace, verify)


def construct_mixed_odd_a(k: int, policy: SelectionPolicy = LEX, verify: bool = True) -> Construction:
    """Mixed degree-2/3 f-ideal in ``n = 2k + 1`` variables, ``k >= 3`` and ``k = 0, 3 (mod 4)``.

    ``G3`` is every product of three distinct odd-indexed variables among
    ``x_1, x_3, ..., x_{2k-1}`` (``C(k, 3)`` monomials).
    """
    _check_int("k", k)
    if k < 3 or k % 4 not in (0, 3):
        raise InvalidArgument(f"need k >= 3 with k = 0 or 3 (mod 4), got k = {k}")
    return _mixed_odd(k, policy, verify, "a")


def construct_mixed_odd_b(k: int, policy: SelectionPolicy = LEX, verify: bool = True) -> Construction:
    """Mixed degree-2/3 f-ideal in ``n = 2k + 1`` variables, ``k >= 15`` and ``k = 1, 2 (mod 4)``."""
    _check_int("k", k)
    if k < 15 or k % 4 not in (1, 2):
        raise InvalidArgument(f"need k >= 15 with k = 1 or 2 (mod 4), got k = {k}")
    return _mixed_odd(k, policy, verify, "b")


def construct_mixed_even(k: int, policy: SelectionPolicy = LEX, verify: bool = True) -> Construction:
    """Mixed degree-2/3 f-ideal in ``n = 2k`` variables, ``k >= 4``."""
    _check_int("k", k)
    if k < 4:
        raise InvalidArgument(f"need k >= 4, got k = {k}")
    n = 2 * k
    evens = range(2, 2 * k - 1, 2)  # x_2 .. x_{2k-2}
    odds = range(1, 2 * k, 2)  # x_1 .. x_{2k-1}
    g1 = {_m(i, j) for i, j in combinations(evens, 2)}
    nf = {_m(i, j) for i in odds for j in evens if i + 1 < j}
    g2 = {_m(i, j, 2 * k - 1) for i, j in combinations(range(1, 2 * k - 1), 2) if _m(i, j) not in nf | g1}
    g3 = {_m(*t) for t in combinations(range(1, 2 * k - 2, 2), 3)}
    g4 = {_m(i, j, 2 * k) for i, j in combinations(odds, 2)}
    g5 = {_m(i, 2 * k - 1, 2 * k) for i in evens}
    pool, free = _free_cubics(n, g1, nf, g2 | g3 | g4 | g5)
    trace = ConstructionTrace("4.6", {"k": k, "n": n}, {}, free, Fraction(k**3 - 3 * k**2 - 4 * k + 6, 6), policy)
    _record_count(trace)
    g6 = policy.select(pool, free, "4.6 G6")
    trace.parts = {
        "G1": _mons(g1),
        "NF": _mons(nf),
        "G2": _mons(g2),
        "G3": _mons(g3),
        "G4": _mons(g4),
        "G5": _mons(g5),
        "G6": _mons(g6),
    }
    return _finish(n, trace, verify)


def construct_block_odd(k: int, l: int, m: int, policy: SelectionPolicy = LEX, verify: bool = True) -> Construction:
    """Variables ``x_1..x_k`` (indices ``1..k``) and ``y_1..y_{k+1}`` (indices ``k+1..2k+1``), ``k`` odd.

    All ``x``-pairs except ``x_l x_m``, all ``y``-pairs, and ``(k+1)/2`` of the
    monomials ``y_i x_l x_m``.
    """
    for name, v in (("k", k), ("l", l), ("m", m)):
        _check_int(name, v)
    if k < 3 or k % 2 == 0:
        raise InvalidArgument(f"need odd k >= 3, got k = {k}")
    if not (1 <= l <= k and 1 <= m <= k and l != m):
        raise InvalidArgument(f"need distinct l, m in 1..{k}, got l = {l}, m = {m}")
    n = 2 * k + 1
    g1 = {_m(i, j) for i, j in combinations(range(1, k + 1), 2)} - {_m(l, m)}
    g2 = {_m(i, j) for i, j in combinations(range(k + 1, n + 1), 2)}
    pool = sorted((_m(l, m, k + i) for i in range(1, k + 2)), key=lambda x: Monomial.from_mask(x).vars)
    free = (k + 1) // 2
    trace = ConstructionTrace("4.8", {"k": k, "l": l, "m": m, "n": n}, {}, free, free, policy)
    g3 = policy.select(pool, free, "4.8 G3")
    trace.parts = {"G1": _mons(g1), "G2": _mons(g2), "G3": _mons(g3)}
    return _finish(n, trace, verify)


def construct_block_even(k: int, l: int, m: int, policy: SelectionPolicy = LEX, verify: bool = True) -> Construction:
    """Variables ``x_1..x_k`` (indices ``1..k``) and ``y_1..y_{k+2}`` (indices ``k+1..2k+2``), ``k`` even.

    All ``x``-pairs, all ``y``-pairs except ``y_l y_m``, and ``k/2`` of the
    monomials ``x_i y_l y_m``.
    """
    for name, v in (("k", k), ("l", l), ("m", m)):
        _check_int(name, v)
    if k < 4 or k % 2:
        raise InvalidArgument(f"need even k >= 4, got k = {k}")
    if not (1 <= l <= k + 2 and 1 <= m <= k + 2 and l != m):
        raise InvalidArgument(f"need distinct l, m in 1..{k + 2}, got l = {l}, m = {m}")
    n = 2 * k + 2
    yl, ym = k + l, k + m
    g1 = {_m(i, j) for i, j in combinations(range(1, k + 1), 2)}
    g2 = {_m(i, j) for i, j in combinations(range(k + 1, n + 1), 2)} - {_m(yl, ym)}
    pool = sorted((_m(i, yl, ym) for i in range(1, k + 1)), key=lambda x: Monomial.from_mask(x).vars)
    free = k // 2
    trace = ConstructionTrace("4.9", {"k": k, "l": l, "m": m, "n": n}, {}, free, free, policy)
    g3 = policy.select(pool, free, "4.9 G3")
    trace.parts = {"G1": _mons(g1), "G2": _mons(g2), "G3": _mons(g3)}
    return _finish(n, trace, verify)


# Residue-block families: each pattern lists (class offset from i, how many variables
# from that class); the family is the union over i = 1..d.
_PURE_PATTERNS: dict[int, list[tuple[str, list[tuple[int, int]] | None]]] = {
    3: [
        ("G1", [(0, 3)]),
        ("G2", [(0, 2), (1, 1)]),
    ],
    4: [
        ("G1", [(0, 2), (1, 1), (2, 1)]),
        ("G2", None),  # pairs from two distinct blocks S_i, S_j with i < j
        ("G3", [(0, 3), (-1, 1)]),
        ("G4", [(0, 4)]),
    ],
    5: [
        ("G1", [(0, 2), (1, 1), (2, 1), (3, 1)]),
        ("G2", [(0, 2), (-1, 2), (-2, 1)]),
        ("G3", [(0, 2), (2, 2), (4, 1)]),
        ("G4", [(0, 3), (-1, 1), (-3, 1)]),
        ("G5", [(0, 3), (1, 1), (3, 1)]),
        ("G6", [(0, 3), (-1, 2)]),
        ("G7", [(0, 3), (-3, 2)]),
        ("G8", [(0, 4), (1, 1)]),
        ("G9", [(0, 4), (3, 1)]),
        ("G10", [(0, 5)]),
    ],
}


def residue_blocks(n: int, d: int) -> dict[int, list[int]]:
    """``S_i`` for ``i = 1..d``: indices ``j <= n`` with ``j = i (mod d)`` (residue 0 is block ``d``)."""
    return {i: [j for j in range(1, n + 1) if (j - i) % d == 0] for i in range(1, d + 1)}


def _block(i: int, d: int) -> int:
    return (i - 1) % d + 1


def _family(blocks: dict[int, list[int]], d: int, pattern: list[tuple[int, int]]) -> set[int]:
    out = set()
    for i in range(1, d + 1):
        choices = [combinations(blocks[_block(i + off, d)], cnt) for off, cnt in pattern]
        for parts in product(*choices):
            out.add(_m(*(j for part in parts for j in part)))
    return out


def _pair_pair_family(blocks: dict[int, list[int]], d: int) -> set[int]:
    out = set()
    for i, j in combinations(range(1, d + 1), 2):
        for p, q in product(combinations(blocks[i], 2), combinations(blocks[j], 2)):
            out.add(_m(*p, *q))
    return out


def _shadow_repair(n: int, d: int, fixed: set[int]) -> set[int]:
    """Lex-first degree-``d`` monomials completing the lower and upper shadows of ``fixed``.

    Empty whenever the fixed families already form a perfect set.
    """
    full = (1 << n) - 1
    cover: set[int] = set()
    lower = {m ^ b for m in fixed for b in _bits(m)}
    for t in iter_masks(n, d - 1):
        if t in lower:
            continue
        free = full ^ t
        ext = t | (free & -free)  # lex-first multiple: add the smallest missing vertex
        cover.add(ext)
        lower.update(ext ^ b for b in _bits(ext))
    have = fixed | cover
    for u in iter_masks(n, d + 1):
        if not any((u ^ b) in have for b in _bits(u)):
            first = u ^ (1 << (u.bit_length() - 1))  # lex-first divisor: drop the largest vertex
            cover.add(first)
            have.add(first)
    return cover


def construct_pure(d: int, n: int, policy: SelectionPolicy = LEX, verify: bool = True) -> Construction:
    """Pure f-ideal with ``C(n,d)/2`` generators of degree ``d`` in {3, 4, 5}, for ``n >= d**2``."""
    _check_int("d", d)
    _check_int("n", n)
    if d not in _PURE_PATTERNS:
        raise InvalidArgument(f"pure constructions exist for d in 3, 4, 5; got d = {d}")
    if n < d * d:
        raise InvalidArgument(f"need n >= d^2 = {d * d}, got n = {n}")
    if n > 64:
        raise InvalidArgument(f"n = {n} exceeds the supported bound 64")
    total = comb(n, d)
    if total % 2:
        raise StructurallyImpossible(f"C({n},{d}) = {total} is odd")
    half = total // 2
    blocks = residue_blocks(n, d)
    fixed: dict[str, set[int]] = {}
    seen: set[int] = set()
    for name, pattern in _PURE_PATTERNS[d]:
        fam = _pair_pair_family(blocks, d) if pattern is None else _family(blocks, d, pattern)
        fixed[name] = fam - seen
        seen |= fam
    free = half - len(seen)
    alg = {3: "5.1", 4: "5.3", 5: "5.5"}[d]
    free_name = f"G{len(fixed) + 1}"
    trace = ConstructionTrace(alg, {"d": d, "n": n}, {}, free, free, policy)
    cover = _shadow_repair(n, d, seen)
    if len(cover) > free:
        raise ConstructionFailed(f"{alg}: {len(cover)} monomials needed to complete the shadows, only {free} free")
    if cover:
        msg = f"fixed families leave shadows uncovered; {len(cover)} free choices spent on covering them"
        trace.notes.append(msg)
        log.info("%s n=%d: %s", alg, n, msg)
    taken = seen | cover
    pool = [c for c in iter_masks(n, d) if c not in taken]
    chosen = policy.select(pool, free - len(cover), f"{alg} {free_name}")
    trace.parts = {name: _mons(fam) for name, fam in fixed.items()}
    trace.parts[f"{free_name}_cover"] = _mons(cover)
    trace.parts[free_name] = _mons(chosen)
    ideal = GeneratorSet(n, [m for part in trace.parts.values() for m in part])
    if len(ideal) != half:
        raise ConstructionFailed(f"{alg}: produced {len(ideal)} generators, expected {half}")
    if verify:
        if not is_perfect(DegreeSlice(n, d, ideal.gens)):
            raise ConstructionFailed(f"{alg} with n = {n}: generator set is not perfect")
        if not is_f_ideal(ideal):
            raise ConstructionFailed(f"{alg} with n = {n}: output is not an f-ideal")
    return Construction(ideal, trace)


def block_signature(g: Monomial, d: int, n: int | None = None) -> tuple[int, ...]:
    """Support counts of ``g`` in each residue block mod ``d``, sorted from greatest to least."""
    _check_int("d", d)
    if d < 2:
        raise InvalidArgument(f"need d >= 2, got d = {d}")
    if n is not None and g.vars and g.vars[-1] > n:
        raise InvalidArgument(f"{list(g.vars)} uses an index larger than n = {n}")
    counts = [0] * d
    for j in g.vars:
        counts[(j - 1) % d] += 1
    return tuple(sorted(counts, reverse=True))


def newton_dual(g: GeneratorSet, n: int | None = None) -> GeneratorSet:
    """Ideal generated by ``x_1 ... x_n / m`` for each generator ``m``."""
    n = g.n if n is None else n
    if n != g.n:
        g = GeneratorSet(n, g.gens)
    big = [m for m in g.gens if m.degree > n - 2]
    if big:
        raise UnsupportedIdeal(
            f"generator {list(big[0].vars)} has degree {big[0].degree} > n - 2; its complement would have degree < 2"
        )
    return minimalize(GeneratorSet(n, (complement_monomial(m, n) for m in g.gens)))


ALGORITHMS = {
    "4.1": "construct_mixed_odd_a",
    "4.4": "construct_mixed_odd_b",
    "4.6": "construct_mixed_even",
    "4.8": "construct_block_odd",
    "4.9": "construct_block_even",
    "pure3": "construct_pure",
    "pure4": "construct_pure",
    "pure5": "construct_pure",
}
