"""Irreducible words of the shifted monoid and triangularity of the shifted law."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyWordError
from .kernel import EMPTY, ONE, Coeff, Word, is_code_word
from .law import infil_shifted, shifted_concat

__all__ = [
    "Factorization", "cut_positions", "is_irreducible", "factorize",
    "filtration_length", "TriangularityReport", "triangularity_check",
]


def cut_positions(w: Word) -> list[int]:
    """Every ``0 < k < len(w)`` such that all indices of ``w[:k]`` are below all of ``w[k:]``."""
    n = len(w)
    prefix_max = []
    m = 0
    for letter in w.letters:
        m = max(m, letter.max_index())
        prefix_max.append(m)
    suffix_min = [0] * n
    lo = None
    for k in range(n - 1, -1, -1):
        first = w.letters[k].exps[0][0]
        lo = first if lo is None else min(lo, first)
        suffix_min[k] = lo
    return [k for k in range(1, n) if prefix_max[k - 1] < suffix_min[k]]


def is_irreducible(w: Word) -> bool:
    if not w.letters:
        raise EmptyWordError("the empty word is the unit, neither reducible nor irreducible")
    return not cut_positions(w)


@dataclass(frozen=True)
class Factorization:
    factors: tuple[Word, ...]

    def __len__(self):
        return len(self.factors)

    def recombine(self) -> Word:
        out = EMPTY
        for f in self.factors:
            out = shifted_concat(out, f)
        return out

    def non_code_factors(self) -> list[int]:
        """Positions (0-based) of factors violating the code criterion."""
        return [k for k, f in enumerate(self.factors) if not is_code_word(f)]


def factorize(w: Word) -> Factorization:
    """Finest decomposition into irreducibles; factors are translated down
    so that :func:`shifted_concat` reassembles ``w``."""
    if not w.letters:
        raise EmptyWordError("cannot factor the empty word")
    bounds = [0] + cut_positions(w) + [len(w)]
    factors = []
    offset = 0
    for lo, hi in zip(bounds, bounds[1:]):
        piece = w[lo:hi]
        factors.append(piece.translate(-offset))
        offset = piece.max_index()
    return Factorization(tuple(factors))


def filtration_length(w: Word) -> int:
    """Number of irreducible factors; 0 for the empty word."""
    if not w.letters:
        return 0
    return len(cut_positions(w)) + 1


@dataclass
class TriangularityReport:
    u: Word
    v: Word
    leading: Word
    leading_coeff: Coeff
    bound: int
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.leading_coeff == ONE and not self.violations

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        text = f"{status}: {self.u} ⊛↑ {self.v}: leading {self.leading} coeff {self.leading_coeff}"
        for w, c, l in self.violations:
            text += f"\n  term {w} (coeff {c}) has l = {l} >= {self.bound}"
        return text


def triangularity_check(u: Word, v: Word) -> TriangularityReport:
    """Leading term ``shifted_concat(u, v)`` with coefficient 1, all others of lower length."""
    prod = infil_shifted(u, v)
    lead = shifted_concat(u, v)
    bound = filtration_length(u) + filtration_length(v)
    report = TriangularityReport(u, v, lead, prod.coefficient(lead), bound)
    for w, c in prod.items():
        if w == lead:
            continue
        l = filtration_length(w)
        if l >= bound:
            report.violations.append((w, c, l))
    return report
