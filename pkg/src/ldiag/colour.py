"""Colour factors and the coloured (twisted) tensor product.

A colour factor ``chi`` on a commutative semigroup of degrees makes the
product ``(x1⊗y1)(x2⊗y2) = chi(deg y1, deg x2) (x1x2 ⊗ y1y2)`` associative;
this is equivalent to the cocycle identity

    chi(b1, a2) chi(b1 + b2, a3) == chi(b2, a3) chi(b1, a2 + a3).
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .kernel import ONE, Coeff, Tensor, Word, as_coeff, word_degree, _acc

__all__ = [
    "ColourFactor", "is_colour_factor", "is_bicharacter", "bicharacter_pow",
    "constant_factor", "perturbed_factor", "named_factor", "coloured_mul",
    "QC_BICHAR", "QS_BICHAR", "TRIVIAL",
]


@dataclass(frozen=True)
class ColourFactor:
    """``fn(deg, deg) -> Coeff`` plus the grading used on words.

    ``grade`` maps a word to its degree (total degree by default) and ``add``
    is the law of the degree semigroup.
    """

    fn: Callable[[Any, Any], Coeff]
    name: str = "chi"
    grade: Callable[[Word], Any] = field(default=word_degree, repr=False)
    add: Callable[[Any, Any], Any] = field(default=operator.add, repr=False)

    def __call__(self, a, b) -> Coeff:
        return as_coeff(self.fn(a, b))

    def on_words(self, u: Word, v: Word) -> Coeff:
        return self(self.grade(u), self.grade(v))


def is_colour_factor(chi: ColourFactor, sample: Iterable) -> tuple[bool, tuple | None]:
    """Check the cocycle identity on every ``(b1, b2, a2, a3)`` from ``sample``.

    Returns ``(True, None)`` or ``(False, (b1, b2, a2, a3))`` for the first
    violation found.  Certification is relative to the sample only.
    """
    sample = list(sample)
    add = chi.add
    for b1, b2, a2, a3 in itertools.product(sample, repeat=4):
        lhs = chi(b1, a2) * chi(add(b1, b2), a3)
        rhs = chi(b2, a3) * chi(b1, add(a2, a3))
        if lhs != rhs:
            return False, (b1, b2, a2, a3)
    return True, None


def is_bicharacter(chi: ColourFactor, sample: Iterable) -> tuple[bool, tuple | None]:
    """Multiplicativity in each argument on the sample."""
    sample = list(sample)
    add = chi.add
    for a, a2, b in itertools.product(sample, repeat=3):
        if chi(add(a, a2), b) != chi(a, b) * chi(a2, b):
            return False, (a, a2, b)
        if chi(b, add(a, a2)) != chi(b, a) * chi(b, a2):
            return False, (b, a, a2)
    return True, None


def bicharacter_pow(rule: Callable[[Any, Any], int], which: str = "qc", **kw) -> ColourFactor:
    """``chi(a, b) = q^{rule(a, b)}`` with ``q`` one of ``qc``/``qs``; ``rule`` bilinear."""
    if which == "qc":
        fn = lambda a, b: Coeff.monomial(rule(a, b), 0)
    elif which == "qs":
        fn = lambda a, b: Coeff.monomial(0, rule(a, b))
    else:
        raise ValueError("which must be 'qc' or 'qs'")
    return ColourFactor(fn, name=kw.pop("name", f"{which}-bichar"), **kw)


def constant_factor(c) -> ColourFactor:
    c = as_coeff(c)
    return ColourFactor(lambda a, b: c, name=f"const:{c}")


def perturbed_factor() -> ColourFactor:
    """``qc^{a+b}`` with the value at ``(1, 1)`` replaced by ``qc^3``; not a colour factor."""
    def fn(a, b):
        if (a, b) == (1, 1):
            return Coeff.monomial(3, 0)
        return Coeff.monomial(a + b, 0)
    return ColourFactor(fn, name="perturbed")


def _product_rule(a, b):
    return a * b


QC_BICHAR = bicharacter_pow(_product_rule, "qc")
QS_BICHAR = bicharacter_pow(_product_rule, "qs")
TRIVIAL = ColourFactor(lambda a, b: ONE, name="const:1")


def named_factor(name: str) -> ColourFactor:
    """Look up ``const:<c>``, ``qc-bichar``, ``qs-bichar`` or ``perturbed``."""
    if name == "qc-bichar":
        return QC_BICHAR
    if name == "qs-bichar":
        return QS_BICHAR
    if name == "perturbed":
        return perturbed_factor()
    if name.startswith("const:"):
        return constant_factor(Coeff.parse(name[len("const:"):]))
    raise ValueError(f"unknown colour factor {name!r}")


def coloured_mul(chi: ColourFactor, t1, t2) -> Tensor:
    """Coloured product of two 2-tensors (pairs of words are accepted too)."""
    if isinstance(t1, tuple):
        t1 = Tensor.pure(*t1)
    if isinstance(t2, tuple):
        t2 = Tensor.pure(*t2)
    out: dict = {}
    for (x1, y1), c1 in t1.raw_items():
        gy1 = chi.grade(y1)
        for (x2, y2), c2 in t2.raw_items():
            c = c1 * c2 * chi(gy1, chi.grade(x2))
            if c:
                _acc(out, (x1 + x2, y1 + y2), c)
    return Tensor._raw(out)

