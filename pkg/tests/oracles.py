"""Independent reference computations used by the tests.

Nothing here imports the product, coproduct or enumeration code under test;
words are handled as plain tuples of hashable letters and results as
``Counter``/``dict`` objects keyed by tuples.
"""

import itertools
import math
from collections import Counter
from functools import lru_cache


# -- word laws on tuples ---------------------------------------------------

@lru_cache(maxsize=None)
def shuffle(u: tuple, v: tuple) -> Counter:
    """Classical shuffle: au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v)."""
    if not u:
        return Counter({v: 1})
    if not v:
        return Counter({u: 1})
    out = Counter()
    for w, c in shuffle(u[1:], v).items():
        out[(u[0],) + w] += c
    for w, c in shuffle(u, v[1:]).items():
        out[(v[0],) + w] += c
    return out


@lru_cache(maxsize=None)
def infiltration(u: tuple, v: tuple) -> Counter:
    """Classical infiltration: ... + δ_{a,b} a(u ↑ v)."""
    if not u:
        return Counter({v: 1})
    if not v:
        return Counter({u: 1})
    out = Counter()
    for w, c in infiltration(u[1:], v).items():
        out[(u[0],) + w] += c
    for w, c in infiltration(u, v[1:]).items():
        out[(v[0],) + w] += c
    if u[0] == v[0]:
        for w, c in infiltration(u[1:], v[1:]).items():
            out[(u[0],) + w] += c
    return out


def hadamard(u: tuple, v: tuple) -> Counter:
    return Counter({u: 1}) if u == v else Counter()


@lru_cache(maxsize=None)
def quasi_shuffle(u: tuple, v: tuple) -> Counter:
    """Letters are exponent dicts frozen as sorted tuples; merging adds exponents."""
    if not u:
        return Counter({v: 1})
    if not v:
        return Counter({u: 1})
    out = Counter()
    for w, c in quasi_shuffle(u[1:], v).items():
        out[(u[0],) + w] += c
    for w, c in quasi_shuffle(u, v[1:]).items():
        out[(v[0],) + w] += c
    merged = Counter(dict(u[0]))
    merged.update(dict(v[0]))
    ab = tuple(sorted(merged.items()))
    for w, c in quasi_shuffle(u[1:], v[1:]).items():
        out[(ab,) + w] += c
    return out


# -- counting --------------------------------------------------------------

@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def fubini(n: int) -> int:
    """Ordered Bell numbers as sum_k k! S(n, k)."""
    return sum(math.factorial(k) * stirling2(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def delannoy(p: int, q: int) -> int:
    if p == 0 or q == 0:
        return 1
    return delannoy(p - 1, q) + delannoy(p, q - 1) + delannoy(p - 1, q - 1)


def brute_shs(p: int, q: int) -> set:
    """Shs(p, q) by filtering every endofunction of [1..p+q]."""
    n = p + q
    out = set()
    for f in itertools.product(range(1, n + 1), repeat=n):
        m = max(f, default=0)
        if set(f) != set(range(1, m + 1)):
            continue
        if not max(p, q) <= m <= n:
            continue
        if all(f[i] < f[i + 1] for i in range(p - 1)) and all(f[i] < f[i + 1] for i in range(p, n - 1)):
            out.add(f)
    return out


def surjections(n: int):
    """All maps [1..n] -> [1..k] onto, any k (ordered set partitions)."""
    for f in itertools.product(range(1, n + 1), repeat=n):
        if set(f) == set(range(1, max(f) + 1)):
            yield f


def brute_mult(weights: dict) -> int:
    """Count pairs of ordered set partitions realising ``weights``."""
    n = sum(weights.values())
    target = Counter(weights)
    return sum(1 for g in surjections(n) for h in surjections(n) if Counter(zip(g, h)) == target)


# -- polynomials as functions ----------------------------------------------

def poly_eval(terms: dict, vc: int, vs: int) -> int:
    return sum(c * vc ** i * vs ** j for (i, j), c in terms.items())
