"""Self-verification suites behind ``ldiag verify``.

Every suite is deterministic for a given seed and reports failing instances
in the word text grammar so they can be replayed with ``ldiag product``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .coalg import (
    SHUFFLE, coassociativity_defect, delta, dual_product, letter_dual_product,
)
from .colour import QC_BICHAR, QS_BICHAR, constant_factor, is_colour_factor, named_factor, perturbed_factor
from .diagram import code, decode, shs_product
from .errors import UnknownSuiteError
from .kernel import EMPTY, Lin, Monomial, Word, is_code_word, random_word, words_of_degree, words_up_to_degree
from .law import (
    WORD_CLASSES, bilinear, concat, infil, infil_lin, infil_shifted, shifted_concat,
    shifted_law_generic, word_class,
)
from .structure import factorize, filtration_length, is_irreducible, triangularity_check

__all__ = ["SuiteReport", "SUITES", "run_suite", "DEFAULT_DEGREE"]


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.cases} cases)"


def word_triples(max_degree: int, nvars: int):
    words = words_up_to_degree(max_degree, nvars)
    for u, v, w in itertools.product(words, repeat=3):
        if u.degree() + v.degree() + w.degree() <= max_degree:
            yield u, v, w


def word_pairs(max_degree: int, nvars: int):
    words = words_up_to_degree(max_degree, nvars)
    for u, v in itertools.product(words, repeat=2):
        if u.degree() + v.degree() <= max_degree:
            yield u, v


def code_words(max_degree: int, min_degree: int = 0):
    out = []
    for d in range(min_degree, max_degree + 1):
        out.extend(w for w in words_of_degree(d, max(d, 1)) if is_code_word(w))
    return out


def random_split(rng, total: int, parts: int) -> list[int]:
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [total])]


def random_triples(rng, count: int, max_degree: int, nvars: int = 3):
    for _ in range(count):
        total = rng.randint(0, max_degree)
        yield tuple(random_word(rng, d, nvars) for d in random_split(rng, total, 3))


def random_code_word(rng, degree: int) -> Word:
    """Random code word: a random word relabelled onto an interval of indices."""
    w = random_word(rng, degree, max(degree, 1))
    idx = sorted(w.indices())
    relabel = {old: new for new, old in enumerate(idx, start=1)}
    return Word._raw(tuple(Monomial._raw(tuple((relabel[v], e) for v, e in m.exps)) for m in w.letters))


def _assoc(law_lin, u, v, w):
    u, v, w = Lin.single(u), Lin.single(v), Lin.single(w)
    return law_lin(law_lin(u, v), w) == law_lin(u, law_lin(v, w))


# --------------------------------------------------------------------------

def suite_assoc(seed=0, max_degree=4) -> SuiteReport:
    r = SuiteReport("assoc")
    rng = random.Random(seed)
    for u, v, w in word_triples(max_degree, 2):
        r.cases += 1
        if not _assoc(infil_lin, u, v, w):
            r.fail(f"infil not associative on ({u}, {v}, {w})")
    for u, v, w in random_triples(rng, 200, max_degree + 2):
        r.cases += 1
        if not _assoc(infil_lin, u, v, w):
            r.fail(f"infil not associative on ({u}, {v}, {w})")
    shifted = bilinear(infil_shifted)
    codes = code_words(max_degree)
    for u, v, w in itertools.product(codes, repeat=3):
        if u.degree() + v.degree() + w.degree() > max_degree:
            continue
        r.cases += 1
        if not _assoc(shifted, u, v, w):
            r.fail(f"shifted law not associative on ({u}, {v}, {w})")
    return r


def suite_duality(seed=0, max_degree=5) -> SuiteReport:
    r = SuiteReport("duality")
    for u, v in word_pairs(max_degree, 2):
        r.cases += 1
        if dual_product(u, v) != infil(u, v):
            r.fail(f"dual law differs from infil on ({u}, {v})")
    return r


def suite_coassoc(seed=0, max_degree=4) -> SuiteReport:
    r = SuiteReport("coassoc")
    for w in words_up_to_degree(max_degree, 2):
        r.cases += 1
        if coassociativity_defect(delta, w):
            r.fail(f"rectangle does not commute on {w}")
    return r


def suite_cocycle(seed=0, max_degree=5, chi: str | None = None) -> SuiteReport:
    r = SuiteReport("cocycle")
    sample = range(0, max_degree + 1)
    if chi is not None:
        factor = named_factor(chi)
        r.cases += 1
        ok, bad = is_colour_factor(factor, sample)
        if ok:
            r.notes.append(f"{factor.name}: certified on degrees 0..{max_degree}")
        else:
            r.fail(f"{factor.name}: cocycle fails at (b1, b2, a2, a3) = {bad}")
        return r
    for factor in (QC_BICHAR, QS_BICHAR, constant_factor(1), constant_factor(3)):
        r.cases += 1
        ok, bad = is_colour_factor(factor, sample)
        if ok:
            r.notes.append(f"{factor.name}: certified on degrees 0..{max_degree}")
        else:
            r.fail(f"{factor.name}: cocycle fails at (b1, b2, a2, a3) = {bad}")
    r.cases += 1
    ok, bad = is_colour_factor(perturbed_factor(), sample)
    if ok:
        r.fail("perturbed: unexpectedly certified")
    else:
        r.notes.append(f"perturbed: rejected at (b1, b2, a2, a3) = {bad}")
    return r


def suite_code_bijection(seed=0, max_degree=4) -> SuiteReport:
    r = SuiteReport("code-bijection")
    for w in code_words(max_degree):
        r.cases += 1
        d = decode(w)
        if code(d) != w:
            r.fail(f"code(decode({w})) = {code(d)}")
        if decode(code(d)) != d:
            r.fail(f"decode(code(d)) != d for {d}")
    return r


def suite_diagram_code(seed=0, max_degree=4) -> SuiteReport:
    r = SuiteReport("diagram-code")
    diagrams = [decode(w) for w in code_words(max_degree) if len(w) <= 3]
    for d1, d2 in itertools.product(diagrams, repeat=2):
        r.cases += 1
        if shs_product(d1, d2).code() != infil_shifted(code(d1), code(d2)):
            r.fail(f"code of diagram product differs from shifted law on ({code(d1)}, {code(d2)})")
    return r


def random_irreducible(rng, max_degree: int = 4) -> Word:
    while True:
        w = random_code_word(rng, rng.randint(1, max_degree))
        if is_irreducible(w):
            return w


def suite_triangularity(seed=0, max_degree=5) -> SuiteReport:
    r = SuiteReport("triangularity")
    codes = code_words(max_degree - 1, min_degree=1)
    for u, v in itertools.product(codes, repeat=2):
        if u.degree() + v.degree() > max_degree:
            continue
        r.cases += 1
        rep = triangularity_check(u, v)
        if not rep.passed:
            r.fail(str(rep))
    rng = random.Random(seed)
    for _ in range(200):
        r.cases += 1
        factors = tuple(random_irreducible(rng) for _ in range(rng.randint(1, 4)))
        w = EMPTY
        for f in factors:
            w = shifted_concat(w, f)
        got = factorize(w)
        if got.factors != factors or filtration_length(w) != len(factors):
            r.fail(f"factorization of {w} is {[str(f) for f in got.factors]}, expected {[str(f) for f in factors]}")
    return r


def random_class_word(rng, cls: str, max_len: int = 5) -> Word:
    """Random letter word in the given class."""
    def word(js):
        return Word._raw(tuple(Monomial._raw(((j, 1),)) for j in js))

    while True:
        k = rng.randint(1, max_len)
        if cls == "packed":
            m = rng.randint(1, k)
            js = list(range(1, m + 1)) + [rng.randint(1, m) for _ in range(k - m)]
            rng.shuffle(js)
        elif cls == "injective":
            js = rng.sample(range(1, 2 * max_len + 1), k)
        elif cls == "permutation":
            js = list(range(1, k + 1))
            rng.shuffle(js)
        elif cls == "increasing":
            js = sorted(rng.randint(1, 2 * max_len) for _ in range(k))
        elif cls == "strictly_increasing":
            js = sorted(rng.sample(range(1, 2 * max_len + 1), k))
        elif cls == "disconnected":
            js = [rng.randint(1, 2 * max_len) for _ in range(max(k, 2))]
        else:
            raise ValueError(cls)
        w = word(js)
        if word_class(w, cls):
            return w


def suite_classes(seed=0, max_degree=5) -> SuiteReport:
    r = SuiteReport("classes")
    rng = random.Random(seed)
    for cls in WORD_CLASSES:
        for _ in range(100):
            u = random_class_word(rng, cls, max_degree)
            v = random_class_word(rng, cls, max_degree)
            r.cases += 1
            if not word_class(shifted_concat(u, v), cls):
                r.fail(f"{cls}: {u} ⊛ {v} = {shifted_concat(u, v)} left the class")
    return r


def suite_shift_lemma(seed=0, max_degree=5) -> SuiteReport:
    r = SuiteReport("shift-lemma")
    rng = random.Random(seed)
    shuffle_law = lambda u, v: letter_dual_product(SHUFFLE, u, v)
    laws = {
        "concat": concat,
        "infil": infil,
    }
    grade = lambda w: w.max_index()
    move = lambda w, n: w.translate(n)
    for name, star in laws.items():
        shifted = bilinear(lambda u, v, star=star: shifted_law_generic(star, grade, move, u, v))
        base = bilinear(star)
        for u, v, w in random_triples(rng, 50, max_degree):
            r.cases += 1
            if _assoc(base, u, v, w) and not _assoc(shifted, u, v, w):
                r.fail(f"shifted {name} not associative on ({u}, {v}, {w})")
    shifted = bilinear(lambda u, v: shifted_law_generic(shuffle_law, grade, move, u, v))
    base = bilinear(shuffle_law)
    for _ in range(50):
        u, v, w = (random_word(rng, rng.randint(0, 2), 3, max_letter_degree=1) for _ in range(3))
        r.cases += 1
        if _assoc(base, u, v, w) and not _assoc(shifted, u, v, w):
            r.fail(f"shifted shuffle not associative on ({u}, {v}, {w})")
    return r


SUITES = {
    "assoc": suite_assoc,
    "duality": suite_duality,
    "coassoc": suite_coassoc,
    "cocycle": suite_cocycle,
    "code-bijection": suite_code_bijection,
    "diagram-code": suite_diagram_code,
    "triangularity": suite_triangularity,
    "classes": suite_classes,
    "shift-lemma": suite_shift_lemma,
}

DEFAULT_DEGREE = {
    "assoc": 4, "duality": 5, "coassoc": 4, "cocycle": 5, "code-bijection": 4,
    "diagram-code": 4, "triangularity": 5, "classes": 5, "shift-lemma": 5,
}


def run_suite(name: str, seed: int = 0, max_degree: int | None = None, **kw) -> list[SuiteReport]:
    if name == "all":
        return [run_suite(n, seed, max_degree)[0] for n in SUITES]
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    degree = DEFAULT_DEGREE[name] if max_degree is None else max_degree
    return [SUITES[name](seed=seed, max_degree=degree, **kw)]
