"""Slow, obviously-correct reference implementations used as test oracles.

Everything works on frozensets of 1-based indices and imports nothing from the package.
"""
from itertools import combinations
from math import comb


def subsets(n, k):
    return (frozenset(c) for c in combinations(range(1, n + 1), k))


def minimal(gens):
    gens = {frozenset(g) for g in gens}
    return {g for g in gens if not any(h < g for h in gens)}


def _trim(counts):
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def sr_fvector(n, gens):
    gens = minimal(gens)
    return _trim([sum(1 for f in subsets(n, k) if not any(g <= f for g in gens)) for k in range(n + 1)])


def facet_fvector(n, gens):
    gens = minimal(gens)
    return _trim([sum(1 for f in subsets(n, k) if any(f <= g for g in gens)) for k in range(n + 1)])


def is_f_ideal(n, gens):
    return sr_fvector(n, gens) == facet_fvector(n, gens)


def abcd(n, gens):
    gens = minimal(gens)
    rows = []
    for k in range(n + 1):
        a = b = c = d = 0
        for f in subsets(n, k):
            if f in gens:
                c += 1
            elif any(g <= f for g in gens):
                d += 1
            elif any(f < g for g in gens):
                b += 1
            else:
                a += 1
        rows.append((k, a, b, c, d))
    return rows


def lower_perfect(n, d, chosen):
    chosen = {frozenset(x) for x in chosen}
    return all(any(t | {v} in chosen for v in range(1, n + 1) if v not in t) for t in subsets(n, d - 1))


def upper_perfect(n, d, chosen):
    chosen = {frozenset(x) for x in chosen}
    return all(any(u - {v} in chosen for v in u) for u in subsets(n, d + 1))


def exact_counts(n, d):
    """(total, lp, up, perfect, fideal) over all C(n,d)/2-subsets of the degree-d slice."""
    slice_ = list(subsets(n, d))
    half = comb(n, d) // 2
    total = lp = up = perfect = fideal = 0
    for pick in combinations(slice_, half):
        total += 1
        lo = lower_perfect(n, d, pick)
        hi = upper_perfect(n, d, pick)
        lp += lo
        up += hi
        perfect += lo and hi
        fideal += is_f_ideal(n, pick)
    return total, lp, up, perfect, fideal
