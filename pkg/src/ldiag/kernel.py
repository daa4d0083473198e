"""Scalars, monomials, words of monomials and their linear spans.

Everything here is immutable once built.  ``Coeff`` is an integer polynomial
in the two formal parameters ``qc`` (crossings) and ``qs`` (superpositions);
``Word`` is a finite sequence of nonempty ``Monomial`` letters; ``Lin`` and
``Tensor`` are finite ``Coeff``-linear combinations of words and of tuples of
words respectively.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator, Mapping

__all__ = [
    "Coeff", "ZERO", "ONE", "QC", "QS", "as_coeff",
    "Monomial", "UNIT_MONOMIAL", "x",
    "Word", "EMPTY",
    "Lin", "Tensor",
    "coeff_mul", "coeff_eval", "mono_mul", "mono_degree", "word_degree",
    "translate", "max_index", "pairing", "tensor_pairing",
    "words_of_degree", "words_up_to_degree", "random_word", "is_code_word",
]


# --------------------------------------------------------------------------
# Coeff
# --------------------------------------------------------------------------

class Coeff:
    """Integer polynomial in ``qc`` and ``qs``.

    Stored as a dict ``{(i, j): c}`` meaning ``c * qc**i * qs**j`` with every
    ``c`` nonzero.  Compares equal to plain ints when constant.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | int | None = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {(0, 0): terms}
        clean = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent in Coeff")
            if c:
                clean[(int(i), int(j))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, i=0, j=0, c=1):
        """``c * qc**i * qs**j``."""
        return cls._raw({(i, j): c} if c else {})

    @classmethod
    def parse(cls, text: str) -> "Coeff":
        from .grammar import parse_coeff
        return parse_coeff(text)

    @property
    def terms(self) -> list[tuple[tuple[int, int], int]]:
        """Terms sorted by (qc-degree, qs-degree)."""
        return sorted(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return all(k == (0, 0) for k in self._terms)

    def constant(self) -> int:
        return self._terms.get((0, 0), 0)

    def degree(self):
        """Pair of maximal qc- and qs-degrees (``(0, 0)`` for constants)."""
        if not self._terms:
            return (0, 0)
        return (max(i for i, _ in self._terms), max(j for _, j in self._terms))

    def __eq__(self, other):
        if isinstance(other, int):
            other = Coeff(other)
        if not isinstance(other, Coeff):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = as_coeff(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return Coeff._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Coeff._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-as_coeff(other))

    def __rsub__(self, other):
        return as_coeff(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return Coeff._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Coeff):
            return NotImplemented
        if len(other._terms) == 1:
            ((i, j), c), = other._terms.items()
            return self.shift(i, j, c)
        if len(self._terms) == 1:
            ((i, j), c), = self._terms.items()
            return other.shift(i, j, c)
        out: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return Coeff._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, i: int, j: int, c: int = 1) -> "Coeff":
        """Multiply by ``c * qc**i * qs**j``."""
        if not c:
            return ZERO
        if i == 0 and j == 0 and c == 1:
            return self
        return Coeff._raw({(a + i, b + j): v * c for (a, b), v in self._terms.items()})

    def eval(self, vc: int, vs: int) -> int:
        return sum(c * vc ** i * vs ** j for (i, j), c in self._terms.items())

    def subs(self, qc: int | None = None, qs: int | None = None) -> "Coeff":
        """Specialize one or both parameters; ``None`` keeps it symbolic."""
        if qc is None and qs is None:
            return self
        out: dict = {}
        for (i, j), c in self._terms.items():
            if qc is not None:
                c *= qc ** i
                i = 0
            if qs is not None:
                c *= qs ** j
                j = 0
            out[(i, j)] = out.get((i, j), 0) + c
        return Coeff._raw({k: c for k, c in out.items() if c})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for n, ((i, j), c) in enumerate(self.terms):
            factors = []
            if i:
                factors.append("qc" if i == 1 else f"qc^{i}")
            if j:
                factors.append("qs" if j == 1 else f"qs^{j}")
            mono = "*".join(factors)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if n == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Coeff({str(self)!r})"

    def is_single_term(self):
        return len(self._terms) == 1


def as_coeff(x) -> Coeff:
    if isinstance(x, Coeff):
        return x
    if isinstance(x, int):
        return Coeff._raw({(0, 0): x} if x else {})
    raise TypeError(f"cannot use {type(x).__name__} as a coefficient")


ZERO = Coeff._raw({})
ONE = Coeff._raw({(0, 0): 1})
QC = Coeff._raw({(1, 0): 1})
QS = Coeff._raw({(0, 1): 1})


def coeff_mul(a, b) -> Coeff:
    return as_coeff(a) * as_coeff(b)


def coeff_eval(a, vc: int, vs: int) -> int:
    return as_coeff(a).eval(vc, vs)


# --------------------------------------------------------------------------
# Monomial
# --------------------------------------------------------------------------

class Monomial:
    """Commutative monomial ``x_1^e_1 x_2^e_2 ...`` with positive exponents."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(exps, Mapping):
            exps = exps.items()
        acc: dict[int, int] = {}
        for var, e in exps:
            if var < 1:
                raise ValueError(f"variable index must be positive, got {var}")
            if e < 0:
                raise ValueError(f"negative exponent on x{var}")
            if e:
                acc[var] = acc.get(var, 0) + e
        self.exps = tuple(sorted(acc.items()))
        self._hash = hash(self.exps)

    @classmethod
    def _raw(cls, exps: tuple):
        obj = cls.__new__(cls)
        obj.exps = exps
        obj._hash = hash(exps)
        return obj

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.exps < other.exps

    def __bool__(self):
        return bool(self.exps)

    def is_unit(self):
        return not self.exps

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other.exps:
            return self
        if not self.exps:
            return other
        acc = dict(self.exps)
        for var, e in other.exps:
            acc[var] = acc.get(var, 0) + e
        return Monomial._raw(tuple(sorted(acc.items())))

    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def indices(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.exps)

    def max_index(self) -> int:
        return self.exps[-1][0] if self.exps else 0

    def exponent(self, var: int) -> int:
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    def translate(self, n: int) -> "Monomial":
        if n == 0:
            return self
        if self.exps and self.exps[0][0] + n < 1:
            raise ValueError("translation would produce a nonpositive index")
        return Monomial._raw(tuple((v + n, e) for v, e in self.exps))

    def is_letter(self) -> bool:
        """Single variable with exponent one (an element of the alphabet Y)."""
        return len(self.exps) == 1 and self.exps[0][1] == 1

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self.exps)

    def __repr__(self):
        return f"Monomial({str(self)!r})"


UNIT_MONOMIAL = Monomial._raw(())


def x(i: int, e: int = 1) -> Monomial:
    """The monomial ``x_i^e``."""
    return Monomial(((i, e),))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def mono_degree(a: Monomial) -> int:
    return a.degree()


# --------------------------------------------------------------------------
# Word
# --------------------------------------------------------------------------

class Word:
    """Word of nonempty monomials; the empty word is the unit ``1``."""

    __slots__ = ("letters", "_hash", "_degree")

    def __init__(self, letters: Iterable[Monomial] = ()):
        letters = tuple(letters)
        for m in letters:
            if not isinstance(m, Monomial):
                raise TypeError(f"word letters must be Monomial, got {type(m).__name__}")
            if m.is_unit():
                raise ValueError("the unit monomial cannot be a letter of a word")
        self.letters = letters
        self._hash = hash(letters)
        self._degree = None

    @classmethod
    def _raw(cls, letters: tuple):
        obj = cls.__new__(cls)
        obj.letters = letters
        obj._hash = hash(letters)
        obj._degree = None
        return obj

    @classmethod
    def parse(cls, text: str) -> "Word":
        from .grammar import parse_word
        return parse_word(text)

    @classmethod
    def of(cls, *rows: Mapping[int, int]) -> "Word":
        """Build from exponent maps, e.g. ``Word.of({2: 2, 3: 1}, {1: 1})``."""
        return cls(Monomial(r) for r in rows)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._raw(self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word._raw(self.letters + other.letters)

    def prepend(self, letter: Monomial) -> "Word":
        return Word._raw((letter,) + self.letters)

    def degree(self) -> int:
        if self._degree is None:
            self._degree = sum(m.degree() for m in self.letters)
        return self._degree

    def indices(self) -> frozenset[int]:
        out: set[int] = set()
        for m in self.letters:
            out.update(v for v, _ in m.exps)
        return frozenset(out)

    def max_index(self) -> int:
        return max((m.max_index() for m in self.letters), default=0)

    def translate(self, n: int) -> "Word":
        if n == 0:
            return self
        return Word._raw(tuple(m.translate(n) for m in self.letters))

    def sort_key(self):
        # longer words first; then lexicographic on exponent maps
        return (-len(self.letters), tuple(m.exps for m in self.letters))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if not self.letters:
            return "1"
        return ".".join(str(m) for m in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"


EMPTY = Word._raw(())


def word_degree(w: Word) -> int:
    return w.degree()


def translate(w: Word, n: int) -> Word:
    return w.translate(n)


def max_index(w: Word) -> int:
    return w.max_index()


def is_code_word(w: Word) -> bool:
    """Variable indices used by ``w`` form an interval ``[1..m]``."""
    idx = w.indices()
    return idx == frozenset(range(1, len(idx) + 1))


# --------------------------------------------------------------------------
# Linear combinations
# --------------------------------------------------------------------------

class _Span:
    """Finite ``Coeff``-linear combination over a hashable basis."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        out: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                self._check_key(k)
                c = as_coeff(c)
                if c:
                    s = out.get(k, ZERO) + c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        self._terms = out

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def single(cls, key, c=ONE):
        c = as_coeff(c)
        return cls._raw({key: c} if c else {})

    @classmethod
    def zero(cls):
        return cls._raw({})

    def _check_key(self, k):
        pass

    @staticmethod
    def _sort_key(k):
        return k

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def raw_items(self):
        return self._terms.items()

    def support(self):
        return [k for k, _ in self.items()]

    def coefficient(self, key) -> Coeff:
        return self._terms.get(key, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.items())

    def __contains__(self, key):
        return key in self._terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(out)

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "_Span":
        c = as_coeff(c)
        if not c:
            return self._raw({})
        out = {}
        for k, v in self._terms.items():
            p = v * c
            if p:
                out[k] = p
        return self._raw(out)

    def __mul__(self, c):
        if isinstance(c, (int, Coeff)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def map_coeffs(self, fn: Callable[[Coeff], Coeff]):
        out = {}
        for k, c in self._terms.items():
            c2 = fn(c)
            if c2:
                out[k] = c2
        return self._raw(out)

    def subs(self, qc: int | None = None, qs: int | None = None):
        return self.map_coeffs(lambda c: c.subs(qc, qs))

    def eval(self, vc: int, vs: int):
        return self.subs(vc, vs)

    def map_keys(self, fn):
        """Linear extension of a basis map ``key -> key``."""
        out: dict = {}
        for k, c in self._terms.items():
            _acc(out, fn(k), c)
        return self._raw(out)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    @staticmethod
    def _render_key(k) -> str:
        return str(k)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for n, (k, c) in enumerate(self.items()):
            key = self._render_key(k)
            if c.is_single_term():
                ((i, j), v), = c._terms.items()
                neg = v < 0
                mag = Coeff._raw({(i, j): abs(v)})
                coeff_txt = "" if mag == ONE else str(mag) + "*"
            else:
                neg = False
                coeff_txt = f"({c})*"
            body = coeff_txt + key
            if n == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


def _acc(out: dict, key, c: Coeff):
    s = out.get(key)
    if s is None:
        out[key] = c
        return
    s = s + c
    if s:
        out[key] = s
    else:
        del out[key]


class Lin(_Span):
    """Linear combination of words."""

    __slots__ = ()

    def _check_key(self, k):
        if not isinstance(k, Word):
            raise TypeError("Lin keys must be Word")

    @staticmethod
    def _sort_key(k):
        return k.sort_key()

    @classmethod
    def parse(cls, text: str) -> "Lin":
        from .grammar import parse_lin
        return parse_lin(text)

    def translate(self, n: int) -> "Lin":
        return self.map_keys(lambda w: w.translate(n))

    def is_homogeneous(self) -> bool:
        return len({w.degree() for w in self._terms}) <= 1


class Tensor(_Span):
    """Linear combination of tuples of words (elements of a tensor power)."""

    __slots__ = ()

    def _check_key(self, k):
        if not (isinstance(k, tuple) and all(isinstance(w, Word) for w in k)):
            raise TypeError("Tensor keys must be tuples of Word")

    @staticmethod
    def _sort_key(k):
        return tuple(w.sort_key() for w in k)

    @staticmethod
    def _render_key(k):
        return "(" + " ⊗ ".join(str(w) for w in k) + ")"

    @classmethod
    def pure(cls, *words: Word, c=ONE) -> "Tensor":
        return cls.single(tuple(words), c)

    def arity(self) -> int | None:
        for k in self._terms:
            return len(k)
        return None


def pairing(a: Lin, b: Lin) -> Coeff:
    """Bilinear extension of the Kronecker pairing on words."""
    if len(a) > len(b):
        a, b = b, a
    total = ZERO
    for w, c in a.raw_items():
        d = b._terms.get(w)
        if d is not None:
            total = total + c * d
    return total


def tensor_pairing(a: Tensor, b: Tensor) -> Coeff:
    """Kronecker pairing on tuples of words, extended bilinearly."""
    total = ZERO
    for k, c in a.raw_items():
        d = b._terms.get(k)
        if d is not None:
            total = total + c * d
    return total


# --------------------------------------------------------------------------
# Enumeration and sampling helpers
# --------------------------------------------------------------------------

def _monomials_of_degree(d: int, nvars: int) -> list[Monomial]:
    out = []
    for combo in itertools.combinations_with_replacement(range(1, nvars + 1), d):
        acc: dict[int, int] = {}
        for v in combo:
            acc[v] = acc.get(v, 0) + 1
        out.append(Monomial._raw(tuple(sorted(acc.items()))))
    return out


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def words_of_degree(d: int, nvars: int) -> list[Word]:
    """Every word over ``x1..x_nvars`` with total degree exactly ``d``."""
    cache: dict[int, list[Monomial]] = {}
    out = []
    for comp in _compositions(d):
        pools = []
        for part in comp:
            if part not in cache:
                cache[part] = _monomials_of_degree(part, nvars)
            pools.append(cache[part])
        for letters in itertools.product(*pools):
            out.append(Word._raw(tuple(letters)))
    return out


def words_up_to_degree(d: int, nvars: int) -> list[Word]:
    out = []
    for k in range(d + 1):
        out.extend(words_of_degree(k, nvars))
    return out


def random_word(rng, degree: int, nvars: int, max_letter_degree: int | None = None) -> Word:
    """Random word of total degree ``degree`` over ``x1..x_nvars``."""
    letters = []
    remaining = degree
    while remaining:
        top = remaining if max_letter_degree is None else min(remaining, max_letter_degree)
        k = rng.randint(1, top)
        acc: dict[int, int] = {}
        for _ in range(k):
            v = rng.randint(1, nvars)
            acc[v] = acc.get(v, 0) + 1
        letters.append(Monomial._raw(tuple(sorted(acc.items()))))
        remaining -= k
    return Word._raw(tuple(letters))
