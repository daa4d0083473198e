"""Labelled bipartite multigraph diagrams.

A diagram is a weight function ``(i, j) -> w`` on black spots ``i`` and
white spots ``j`` whose supports project onto intervals ``[1..p]`` and
``[1..q]``.  Diagrams are coded by words of monomials (row ``i`` becomes the
letter ``prod_j x_j^w(i,j)``), and multiplied by shuffling their black spots
with superposition.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import BoundError, GapError, NotACodeError, NotOntoError, TooLargeError, ZeroWeightError
from .kernel import Coeff, Monomial, Word, _acc, _Span

__all__ = [
    "Diagram", "EMPTY_DIAGRAM", "DiagLin", "ShsMap", "MultiIndex",
    "diagram_new", "code", "decode", "diagram_concat", "bks", "act",
    "shs_enumerate", "shs_product", "mult", "expand", "multiindex",
    "diagram_from_json", "diagram_to_json",
    "fubini", "multinomial_mult", "MULT_EDGE_BOUND", "EXPAND_BOUND",
]

MULT_EDGE_BOUND = 8
EXPAND_BOUND = 5


class Diagram:
    """Validated weight function; build with :func:`diagram_new`."""

    __slots__ = ("weights", "p", "q", "_hash")

    def __init__(self, weights: Mapping[tuple[int, int], int] | Iterable = ()):
        if isinstance(weights, Mapping):
            items = list(weights.items())
        else:
            items = list(weights)
        acc: dict[tuple[int, int], int] = {}
        for key, w in items:
            i, j = key
            if isinstance(w, bool) or not isinstance(w, int):
                raise TypeError("weights must be integers")
            if i < 1 or j < 1:
                raise GapError(f"spot indices must be positive, got {(i, j)}")
            if w == 0:
                raise ZeroWeightError(f"zero multiplicity supplied at {(i, j)}")
            if w < 0:
                raise ZeroWeightError(f"negative multiplicity supplied at {(i, j)}")
            if (i, j) in acc:
                raise ValueError(f"duplicate weight entry at {(i, j)}")
            acc[(i, j)] = w
        blacks = {i for i, _ in acc}
        whites = {j for _, j in acc}
        p, q = len(blacks), len(whites)
        if blacks != set(range(1, p + 1)):
            missing = min(set(range(1, max(blacks) + 1)) - blacks)
            raise GapError(f"black spots do not form an interval (index {missing} missing)")
        if whites != set(range(1, q + 1)):
            missing = min(set(range(1, max(whites) + 1)) - whites)
            raise GapError(f"white spots do not form an interval (index {missing} missing)")
        self.weights = tuple(sorted(acc.items()))
        self.p = p
        self.q = q
        self._hash = hash(self.weights)

    @classmethod
    def _raw(cls, weights: tuple, p: int, q: int):
        obj = cls.__new__(cls)
        obj.weights = weights
        obj.p = p
        obj.q = q
        obj._hash = hash(weights)
        return obj

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.weights == other.weights

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.weights < other.weights

    def __bool__(self):
        return bool(self.weights)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.weights)

    def weight(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def edges(self) -> int:
        """``|d|``, the total number of edges."""
        return sum(w for _, w in self.weights)

    def __len__(self):
        return self.edges()

    def row_sums(self) -> list[int]:
        out = [0] * self.p
        for (i, _), w in self.weights:
            out[i - 1] += w
        return out

    def column_sums(self) -> list[int]:
        out = [0] * self.q
        for (_, j), w in self.weights:
            out[j - 1] += w
        return out

    def __str__(self):
        if not self.weights:
            return "{}"
        return "{" + ", ".join(f"({i},{j}):{w}" for (i, j), w in self.weights) + "}"

    def __repr__(self):
        return f"Diagram({str(self)})"


EMPTY_DIAGRAM = Diagram._raw((), 0, 0)


def diagram_new(weights) -> Diagram:
    return Diagram(weights)


class DiagLin(_Span):
    """Linear combination of diagrams."""

    __slots__ = ()

    def _check_key(self, k):
        if not isinstance(k, Diagram):
            raise TypeError("DiagLin keys must be Diagram")

    @staticmethod
    def _sort_key(k):
        return k.weights

    def code(self):
        """Termwise image under :func:`code`."""
        from .kernel import Lin
        out: dict = {}
        for d, c in self.raw_items():
            _acc(out, code(d), c)
        return Lin._raw(out)


# --------------------------------------------------------------------------
# code / decode / concatenation
# --------------------------------------------------------------------------

def code(d: Diagram) -> Word:
    rows: list[list[tuple[int, int]]] = [[] for _ in range(d.p)]
    for (i, j), w in d.weights:
        rows[i - 1].append((j, w))
    return Word._raw(tuple(Monomial._raw(tuple(r)) for r in rows))


def decode(w: Word) -> Diagram:
    idx = w.indices()
    if idx != frozenset(range(1, len(idx) + 1)):
        missing = min(set(range(1, max(idx) + 1)) - idx)
        raise NotACodeError(f"variable indices of {w} are not an interval (x{missing} unused)")
    weights = []
    for i, m in enumerate(w.letters, start=1):
        for j, e in m.exps:
            weights.append(((i, j), e))
    return Diagram._raw(tuple(sorted(weights)), len(w), len(idx))


def diagram_concat(d1: Diagram, d2: Diagram) -> Diagram:
    """``[d1|d2]``: d2's black and white spots placed after those of d1."""
    shifted = tuple(((i + d1.p, j + d1.q), w) for (i, j), w in d2.weights)
    return Diagram._raw(d1.weights + shifted, d1.p + d2.p, d1.q + d2.q)


def bks(d: Diagram, l: int) -> int:
    """Degree of black spot ``l``."""
    if not 1 <= l <= d.p:
        raise IndexError(f"black spot {l} out of range 1..{d.p}")
    return sum(w for (i, _), w in d.weights if i == l)


def act(d: Diagram, f: Sequence[int]) -> Diagram:
    """Relabel black spots: spot ``i`` becomes ``f[i-1]``; merged rows add."""
    f = tuple(f)
    if len(f) != d.p:
        raise NotOntoError(f"map has length {len(f)}, diagram has {d.p} black spots")
    r = max(f, default=0)
    if set(f) != set(range(1, r + 1)):
        raise NotOntoError(f"image of {f} is not an interval [1..{r}]")
    acc: dict[tuple[int, int], int] = {}
    for (i, j), w in d.weights:
        k = (f[i - 1], j)
        acc[k] = acc.get(k, 0) + w
    return Diagram._raw(tuple(sorted(acc.items())), r, d.q)


# --------------------------------------------------------------------------
# Shuffles with superposition
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ShsMap:
    """Value sequence ``f(1..p+q)``, increasing on each block, onto ``[1..m]``."""

    f: tuple[int, ...]
    p: int
    q: int

    @property
    def m(self) -> int:
        return max(self.f, default=0)

    def crossings(self):
        """Pairs ``i < j`` (1-based) with ``f(i) > f(j)``."""
        f = self.f
        return [(i + 1, j + 1) for i in range(self.p) for j in range(self.p, self.p + self.q) if f[i] > f[j]]

    def superpositions(self):
        f = self.f
        return [(i + 1, j + 1) for i in range(self.p) for j in range(self.p, self.p + self.q) if f[i] == f[j]]


@lru_cache(maxsize=None)
def _shs(p: int, q: int) -> tuple[ShsMap, ...]:
    out = []

    def walk(i, j, slot, left, right):
        if i == p and j == q:
            out.append(ShsMap(tuple(left + right), p, q))
            return
        slot += 1
        if i < p:
            walk(i + 1, j, slot, left + [slot], right)
        if j < q:
            walk(i, j + 1, slot, left, right + [slot])
        if i < p and j < q:
            walk(i + 1, j + 1, slot, left + [slot], right + [slot])

    walk(0, 0, 0, [], [])
    return tuple(out)


def shs_enumerate(p: int, q: int) -> list[ShsMap]:
    return list(_shs(p, q))


def shs_product(d1: Diagram, d2: Diagram) -> DiagLin:
    """Deformed product of two diagrams, indexed by ``Shs(p1, p2)``."""
    d = diagram_concat(d1, d2)
    deg = d.row_sums()
    out: dict = {}
    for s in _shs(d1.p, d2.p):
        ec = sum(deg[i - 1] * deg[j - 1] for i, j in s.crossings())
        es = sum(deg[i - 1] * deg[j - 1] for i, j in s.superpositions())
        _acc(out, act(d, s.f), Coeff.monomial(ec, es))
    return DiagLin._raw(out)


# --------------------------------------------------------------------------
# Multiplicities and the order-n expansion
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiIndex:
    """Degree profiles: ``alpha`` for white spots, ``beta`` for black spots."""

    alpha: tuple[tuple[int, int], ...]
    beta: tuple[tuple[int, int], ...]

    @classmethod
    def from_degrees(cls, white: Iterable[int], black: Iterable[int]):
        return cls(tuple(sorted(Counter(white).items())), tuple(sorted(Counter(black).items())))

    def alpha_dict(self) -> dict[int, int]:
        return dict(self.alpha)

    def beta_dict(self) -> dict[int, int]:
        return dict(self.beta)

    def monomial(self) -> str:
        """``L^alpha V^beta`` as text, e.g. ``L1 L3^2 V5``."""
        parts = [f"L{i}" if c == 1 else f"L{i}^{c}" for i, c in self.alpha]
        parts += [f"V{i}" if c == 1 else f"V{i}^{c}" for i, c in self.beta]
        return " ".join(parts) or "1"


def multiindex(d: Diagram) -> MultiIndex:
    return MultiIndex.from_degrees(d.column_sums(), d.row_sums())


def mult(d: Diagram, bound: int = MULT_EDGE_BOUND) -> int:
    """Number of pairs of ordered set partitions ``(B, W)`` of ``[1..n]``
    with ``|B_i & W_j| = w(i, j)``, found by enumerating the pairs."""
    n = d.edges()
    if n == 0:
        raise ValueError("mult is defined for nonempty diagrams")
    if n > bound:
        raise TooLargeError(f"diagram has {n} edges, above the bound {bound}")
    cells = [ij for ij, _ in d.weights]
    capacity = [w for _, w in d.weights]

    # each element of [1..n] is sent to the cell (i, j) = (its black block, its white block);
    # a complete assignment respecting the capacities is one pair (B, W)
    def count(e):
        if e == n:
            return 1
        total = 0
        for k in range(len(cells)):
            if capacity[k]:
                capacity[k] -= 1
                total += count(e + 1)
                capacity[k] += 1
        return total

    return count(0)


def _ordered_set_partitions(n: int) -> list[tuple[int, ...]]:
    # block labels of elements 1..n; onto [1..k] for some k
    out = []
    for f in itertools.product(range(1, n + 1), repeat=n):
        k = max(f)
        if len(set(f)) == k:
            out.append(f)
    return out


def expand(n: int, bound: int = EXPAND_BOUND) -> list[tuple[Diagram, int, MultiIndex]]:
    """All ``n``-edge diagrams with their multiplicities and multi-indices."""
    if n < 0:
        raise BoundError("order must be nonnegative")
    if n > bound:
        raise BoundError(f"order {n} exceeds the bound {bound}")
    if n == 0:
        return [(EMPTY_DIAGRAM, 1, MultiIndex((), ()))]
    parts = _ordered_set_partitions(n)
    counts: Counter = Counter()
    for black in parts:
        for white in parts:
            counts[tuple(sorted(Counter(zip(black, white)).items()))] += 1
    rows = []
    for weights, c in sorted(counts.items()):
        p = max(i for (i, _), _ in weights)
        q = max(j for (_, j), _ in weights)
        d = Diagram._raw(weights, p, q)
        rows.append((d, c, multiindex(d)))
    return rows


# --------------------------------------------------------------------------
# JSON
# --------------------------------------------------------------------------

def diagram_to_json(d: Diagram) -> dict:
    return {"weights": [{"i": i, "j": j, "w": w} for (i, j), w in d.weights]}


def diagram_from_json(data) -> Diagram:
    """Accepts a dict or a JSON string of the form ``{"weights": [{"i","j","w"}, ...]}``."""
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    if not isinstance(data, dict) or "weights" not in data:
        raise ValueError('diagram JSON must be an object with a "weights" list')
    entries = []
    for e in data["weights"]:
        try:
            entries.append(((e["i"], e["j"]), e["w"]))
        except (KeyError, TypeError):
            raise ValueError(f"malformed weight entry {e!r}") from None
    return Diagram(entries)


def multinomial_mult(d: Diagram) -> int:
    """Closed form ``n! / prod w(i,j)!`` for ``mult(d)``."""
    out = math.factorial(d.edges())
    for _, w in d.weights:
        out //= math.factorial(w)
    return out


@lru_cache(maxsize=None)
def fubini(n: int) -> int:
    """Ordered Bell number: ``F(0) = 1``, ``F(n) = sum_k C(n, k) F(n - k)``."""
    if n == 0:
        return 1
    return sum(math.comb(n, k) * fubini(n - k) for k in range(1, n + 1))
