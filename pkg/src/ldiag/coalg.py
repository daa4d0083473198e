"""Comultiplications on words of monomials and the laws dual to them.

The deformed law is recovered as a dual law: letters get the coproduct
``s⊗1 + 1⊗s + sum_{rt=s} qs^{|r||t|} r⊗t``, words get the algebra-morphism
extension through the tensor product coloured by ``qc^{|y||x|}``.  Pairing
against that coproduct (Kronecker pairing on words) gives back ``infil``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .colour import QC_BICHAR, QS_BICHAR, TRIVIAL, ColourFactor, coloured_mul
from .diagram import shs_enumerate
from .errors import NotLetterWordError
from .kernel import EMPTY, ONE, ZERO, Coeff, Lin, Monomial, Tensor, Word, _acc, as_coeff, pairing

__all__ = [
    "diag_deform_product", "mono_factorizations", "dual_comultiplication", "delta1",
    "delta_letter", "delta", "dual_product", "candidate_words", "tensor_map",
    "coassociativity_defect", "LetterCoproductKind", "SHUFFLE", "HADAMARD", "INFILTRATION",
    "q_deformed", "letter_coproduct", "letter_dual_product",
    "AugmentedVec", "extended_pairing", "augmented_mul", "augmented_coproduct",
    "augmented_tensor_pairing", "counit", "delta_plus",
]


# --------------------------------------------------------------------------
# Diagonal deformation of the monomial semigroup and its dual
# --------------------------------------------------------------------------

def diag_deform_product(chi: ColourFactor, a: Monomial, b: Monomial) -> tuple[Coeff, Monomial]:
    """``a ._chi b = chi(|a|, |b|) ab``."""
    return chi(a.degree(), b.degree()), a * b


@lru_cache(maxsize=None)
def _factorizations(m: Monomial) -> tuple[tuple[Monomial, Monomial], ...]:
    vars_ = [v for v, _ in m.exps]
    ranges = [range(e + 1) for _, e in m.exps]
    out = []
    for split in itertools.product(*ranges):
        r = tuple((v, k) for v, k in zip(vars_, split) if k)
        t = tuple((v, e - k) for (v, e), k in zip(m.exps, split) if e - k)
        if r and t:
            out.append((Monomial._raw(r), Monomial._raw(t)))
    return tuple(out)


def mono_factorizations(m: Monomial) -> list[tuple[Monomial, Monomial]]:
    """Ordered pairs of nonempty monomials ``(r, t)`` with ``rt = m``."""
    if m.is_unit():
        raise ValueError("factorizations are taken of nonempty monomials")
    return list(_factorizations(m))


def dual_comultiplication(chi: ColourFactor, m: Monomial) -> Tensor:
    """``sum_{rt=m} chi(|r|, |t|) r⊗t``, dual to :func:`diag_deform_product`."""
    out: dict = {}
    for r, t in _factorizations(m):
        c = chi(r.degree(), t.degree())
        if c:
            _acc(out, (Word._raw((r,)), Word._raw((t,))), c)
    return Tensor._raw(out)


def delta1(m: Monomial) -> Tensor:
    return dual_comultiplication(QS_BICHAR, m)


@lru_cache(maxsize=None)
def delta_letter(m: Monomial) -> Tensor:
    """``s⊗1 + 1⊗s + Δ1(s)`` for a letter ``s``."""
    s = Word._raw((m,))
    out = dict(delta1(m).raw_items())
    out[(s, EMPTY)] = ONE
    out[(EMPTY, s)] = ONE
    return Tensor._raw(out)


@lru_cache(maxsize=None)
def _delta(w: Word) -> Tensor:
    if not w.letters:
        return Tensor._raw({(EMPTY, EMPTY): ONE})
    return coloured_mul(QC_BICHAR, _delta(w[:-1]), delta_letter(w.letters[-1]))


def delta(w: Word) -> Tensor:
    """Coproduct of a word: product of letter coproducts in the coloured tensor algebra."""
    return _delta(w)


def tensor_map(t: Tensor, position: int, fn: Callable[[Word], Tensor]) -> Tensor:
    """Apply a linear map ``Word -> k-tensor`` to one tensor factor."""
    out: dict = {}
    for key, c in t.raw_items():
        head, w, tail = key[:position], key[position], key[position + 1:]
        for sub, c2 in fn(w).raw_items():
            _acc(out, head + sub + tail, c * c2)
    return Tensor._raw(out)


def coassociativity_defect(coproduct: Callable[[Word], Tensor], w: Word) -> Tensor:
    """``(Δ⊗Id)Δ(w) - (Id⊗Δ)Δ(w)``; zero iff the rectangle commutes on ``w``."""
    d = coproduct(w)
    return tensor_map(d, 0, coproduct) - tensor_map(d, 1, coproduct)


def candidate_words(u: Word, v: Word, merge: Callable[[Monomial, Monomial], Monomial | None]):
    """Words obtained by shuffling ``u`` and ``v`` with superposition.

    Any word pairing nonzero with ``u⊗v`` under a letter coproduct of the
    form ``s⊗1 + 1⊗s + (superposed terms)`` is of this shape.
    """
    p, q = len(u), len(v)
    seen = set()
    for s in shs_enumerate(p, q):
        slots: list[list[Monomial]] = [[] for _ in range(s.m)]
        for pos, k in enumerate(s.f):
            slots[k - 1].append(u.letters[pos] if pos < p else v.letters[pos - p])
        letters = []
        for content in slots:
            if len(content) == 1:
                letters.append(content[0])
            else:
                merged = merge(content[0], content[1])
                if merged is None:
                    break
                letters.append(merged)
        else:
            w = Word._raw(tuple(letters))
            if w not in seen:
                seen.add(w)
                yield w


def dual_product(u: Word, v: Word) -> Lin:
    """``sum_w <u⊗v | Δ(w)> w``: the law dual to :func:`delta`."""
    out: dict = {}
    key = (u, v)
    for w in candidate_words(u, v, lambda a, b: a * b):
        c = _delta(w).coefficient(key)
        if c:
            out[w] = c
    return Lin._raw(out)


# --------------------------------------------------------------------------
# Classical letter coproducts on words of plain letters
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LetterCoproductKind:
    kind: str
    q: Coeff | None = None

    def __post_init__(self):
        if self.kind not in ("shuffle", "hadamard", "infiltration", "q_deformed"):
            raise ValueError(f"unknown letter coproduct {self.kind!r}")
        if self.kind == "q_deformed" and self.q is None:
            raise ValueError("q_deformed needs a parameter q")

    def on_letter(self, y: Monomial) -> Tensor:
        s = Word._raw((y,))
        split = {(s, EMPTY): ONE, (EMPTY, s): ONE}
        if self.kind == "shuffle":
            return Tensor._raw(split)
        if self.kind == "hadamard":
            return Tensor._raw({(s, s): ONE})
        q = ONE if self.kind == "infiltration" else as_coeff(self.q)
        if q:
            split[(s, s)] = q
        return Tensor._raw(split)


SHUFFLE = LetterCoproductKind("shuffle")
HADAMARD = LetterCoproductKind("hadamard")
INFILTRATION = LetterCoproductKind("infiltration")


def q_deformed(q) -> LetterCoproductKind:
    return LetterCoproductKind("q_deformed", as_coeff(q))


def _check_letter_word(w: Word):
    for m in w.letters:
        if not m.is_letter():
            raise NotLetterWordError(f"{m} is not a single variable with exponent 1")


def letter_coproduct(kind: LetterCoproductKind, w: Word) -> Tensor:
    """Algebra-morphism extension of ``kind`` through the plain tensor product."""
    _check_letter_word(w)
    out = Tensor._raw({(EMPTY, EMPTY): ONE})
    for y in w.letters:
        out = coloured_mul(TRIVIAL, out, kind.on_letter(y))
    return out


def letter_dual_product(kind: LetterCoproductKind, u: Word, v: Word) -> Lin:
    """Law dual to :func:`letter_coproduct`."""
    _check_letter_word(u)
    _check_letter_word(v)
    out: dict = {}
    key = (u, v)
    for w in candidate_words(u, v, lambda a, b: a if a == b else None):
        c = letter_coproduct(kind, w).coefficient(key)
        if c:
            out[w] = c
    return Lin._raw(out)


# --------------------------------------------------------------------------
# Adjoined unit / grouplike element
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AugmentedVec:
    """``body + unit_coeff * e`` where ``e`` is the adjoined unit ``v``
    (algebra side) or the grouplike ``u`` (coalgebra side).

    ``body`` lives in the augmentation-free part: no empty-word term.
    """

    body: Lin
    unit_coeff: Coeff = ZERO

    def __post_init__(self):
        if EMPTY in self.body:
            raise ValueError("body must not contain the empty word")
        object.__setattr__(self, "unit_coeff", as_coeff(self.unit_coeff))

    @classmethod
    def from_lin(cls, x: Lin) -> "AugmentedVec":
        """Split off the empty-word component as the unit coefficient."""
        c = x.coefficient(EMPTY)
        body = x - Lin.single(EMPTY, c) if c else x
        return cls(body, c)

    def to_lin(self) -> Lin:
        return self.body + Lin.single(EMPTY, self.unit_coeff)


def extended_pairing(a: AugmentedVec, b: AugmentedVec) -> Coeff:
    """``<x + αv | y + βu> = <x|y> + αβ``."""
    return pairing(a.body, b.body) + a.unit_coeff * b.unit_coeff


def counit(y: Lin) -> Coeff:
    return y.coefficient(EMPTY)


def augmented_mul(a: AugmentedVec, b: AugmentedVec, law: Callable[[Lin, Lin], Lin]) -> AugmentedVec:
    """Product in ``A ⊕ K.v`` with ``v`` the adjoined unit; ``law`` multiplies bodies."""
    body = law(a.body, b.body) + a.body.scale(b.unit_coeff) + b.body.scale(a.unit_coeff)
    return AugmentedVec(body, a.unit_coeff * b.unit_coeff)


def augmented_coproduct(y: AugmentedVec, coproduct: Callable[[Word], Tensor]) -> Tensor:
    """``Δ(y + βu)`` with the grouplike ``u`` carried by the empty word."""
    out: dict = {}
    for w, c in y.body.raw_items():
        for key, c2 in coproduct(w).raw_items():
            _acc(out, key, c * c2)
    if y.unit_coeff:
        _acc(out, (EMPTY, EMPTY), y.unit_coeff)
    return Tensor._raw(out)


def delta_plus(y: Lin, coproduct: Callable[[Word], Tensor]) -> Tensor:
    """``Δ+(y) = Δ(y) - y⊗u - u⊗y + ε(y) u⊗u``."""
    out: dict = {}
    for w, c in y.raw_items():
        for key, c2 in coproduct(w).raw_items():
            _acc(out, key, c * c2)
    for w, c in y.raw_items():
        _acc(out, (w, EMPTY), -c)
        _acc(out, (EMPTY, w), -c)
    e = counit(y)
    if e:
        _acc(out, (EMPTY, EMPTY), e)
    return Tensor._raw(out)


def _bullet(a: AugmentedVec, w: Word) -> Coeff:
    return a.unit_coeff if not w.letters else a.body.coefficient(w)


def augmented_tensor_pairing(a1: AugmentedVec, a2: AugmentedVec, t: Tensor) -> Coeff:
    """``<a1⊗a2 | t>`` with the extended pairing on each factor."""
    total = ZERO
    for (w1, w2), c in t.raw_items():
        p = _bullet(a1, w1)
        if p:
            total = total + c * p * _bullet(a2, w2)
    return total
