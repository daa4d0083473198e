"""The two-parameter deformed infiltration law and its shifted version.

    1 ↑ w = w ↑ 1 = w
    au ↑ bv = a(u ↑ bv) + qc^{|au||b|} b(au ↑ v) + qc^{|u||b|} qs^{|a||b|} (a·b)(u ↑ v)

``|.|`` is the total degree, ``a·b`` the commutative product of monomials.
The shifted law translates the right factor past the largest variable index
of the left one; on codes of diagrams it is the diagram product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import NotLetterWordError
from .kernel import Coeff, Lin, Word, _acc

__all__ = [
    "infil", "infil_lin", "shifted_concat", "infil_shifted", "shifted_law_generic",
    "bilinear", "concat", "word_class", "WORD_CLASSES", "LawParams", "clear_caches",
]


@lru_cache(maxsize=None)
def _infil(u: Word, v: Word) -> Lin:
    if not u.letters:
        return Lin._raw({v: Coeff.monomial()})
    if not v.letters:
        return Lin._raw({u: Coeff.monomial()})
    a, u1 = u.letters[0], u[1:]
    b, v1 = v.letters[0], v[1:]
    da, db = a.degree(), b.degree()
    out: dict = {}
    for w, c in _infil(u1, v).raw_items():
        _acc(out, w.prepend(a), c)
    e = u.degree() * db
    for w, c in _infil(u, v1).raw_items():
        _acc(out, w.prepend(b), c.shift(e, 0))
    ab = a * b
    ec, es = u1.degree() * db, da * db
    for w, c in _infil(u1, v1).raw_items():
        _acc(out, w.prepend(ab), c.shift(ec, es))
    return Lin._raw(out)


def infil(u: Word, v: Word) -> Lin:
    """Deformed infiltration product of two words."""
    return _infil(u, v)


def bilinear(law: Callable[[Word, Word], Lin]) -> Callable[[Lin, Lin], Lin]:
    """Extend a law on words to linear combinations."""
    def extended(a: Lin, b: Lin) -> Lin:
        out: dict = {}
        for u, cu in a.raw_items():
            for v, cv in b.raw_items():
                c = cu * cv
                for w, cw in law(u, v).raw_items():
                    _acc(out, w, cw * c)
        return Lin._raw(out)
    extended.__name__ = getattr(law, "__name__", "law") + "_lin"
    return extended


infil_lin = bilinear(infil)
infil_lin.__doc__ = "Bilinear extension of :func:`infil`."


def concat(u: Word, v: Word) -> Lin:
    return Lin._raw({u + v: Coeff.monomial()})


def shifted_law_generic(star, grade_of, translate_by, u: Word, v: Word) -> Lin:
    """``u ⋆ T_{grade_of(u)}(v)`` for an arbitrary word law ``star``."""
    return star(u, translate_by(v, grade_of(u)))


def _translate(w: Word, n: int) -> Word:
    return w.translate(n)


def _max_index(w: Word) -> int:
    return w.max_index()


def shifted_concat(u: Word, v: Word) -> Word:
    return u + v.translate(u.max_index())


def infil_shifted(u: Word, v: Word) -> Lin:
    """Shifted deformed law; on codes of diagrams, the diagram product."""
    return shifted_law_generic(infil, _max_index, _translate, u, v)


def clear_caches():
    _infil.cache_clear()


@dataclass(frozen=True)
class LawParams:
    """Values of ``qc``/``qs``; ``None`` keeps a parameter symbolic."""

    qc: int | None = None
    qs: int | None = None

    @property
    def symbolic(self) -> bool:
        return self.qc is None and self.qs is None

    def apply(self, value):
        return value.subs(self.qc, self.qs)

    def product(self, u: Word, v: Word, shifted: bool = True) -> Lin:
        return self.apply(infil_shifted(u, v) if shifted else infil(u, v))


# --------------------------------------------------------------------------
# Word classes stable under shifted concatenation
# --------------------------------------------------------------------------

WORD_CLASSES = ("packed", "injective", "permutation", "increasing", "strictly_increasing", "disconnected")


def letter_indices(w: Word) -> list[int]:
    """Indices ``j_1..j_k`` of a word ``y_{j_1}...y_{j_k}`` of plain letters."""
    out = []
    for m in w.letters:
        if not m.is_letter():
            raise NotLetterWordError(f"{m} is not a single variable with exponent 1")
        out.append(m.exps[0][0])
    return out


def word_class(w: Word, cls: str) -> bool:
    js = letter_indices(w)
    if cls == "packed":
        return set(js) == set(range(1, len(set(js)) + 1))
    if cls == "injective":
        return len(set(js)) == len(js)
    if cls == "permutation":
        return word_class(w, "packed") and word_class(w, "injective")
    if cls == "increasing":
        return all(a <= b for a, b in zip(js, js[1:]))
    if cls == "strictly_increasing":
        return all(a < b for a, b in zip(js, js[1:]))
    if cls == "disconnected":
        present = set(js)
        return any(js[r] + 1 not in present for r in range(len(js) - 1))
    raise ValueError(f"unknown word class {cls!r}; expected one of {', '.join(WORD_CLASSES)}")

