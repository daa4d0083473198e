import pytest
from hypothesis import given, strategies as st

from conftest import coeffs, monomials, words
from oracles import poly_eval
from ldiag.kernel import (
    EMPTY, ONE, QC, QS, ZERO, Coeff, Lin, Monomial, Tensor, Word, coeff_eval, coeff_mul,
    max_index, mono_degree, mono_mul, pairing, translate, word_degree, words_of_degree, x,
)

W = Word.parse
FIG1 = W("x2^2*x3 . x1*x2*x3^3 . x3*x4^2")


class TestCoeff:
    def test_mul_examples(self):
        assert coeff_mul(QC, QS) == Coeff({(1, 1): 1})
        assert coeff_mul(1 + QC, 1 + QC) == Coeff({(0, 0): 1, (1, 0): 2, (2, 0): 1})
        assert coeff_mul(QC - QS, QC + QS) == Coeff({(2, 0): 1, (0, 2): -1})

    def test_eval_examples(self):
        assert coeff_eval(QC + QS, 1, 1) == 2
        assert coeff_eval(QC ** 2 * QS, 2, 3) == 12
        assert coeff_eval(ZERO, 7, 9) == 0

    def test_canonical_form_drops_zeros(self):
        c = Coeff({(1, 0): 2, (0, 1): 0})
        assert c.terms == [((1, 0), 2)]
        assert (QC - QC).terms == []
        assert QC - QC == 0

    def test_str(self):
        assert str(1 + 2 * QC + QC ** 2 * QS) == "1 + 2*qc + qc^2*qs"
        assert str(ZERO) == "0"
        assert str(-QC + 3) == "3 - qc"

    def test_subs_partial(self):
        c = 1 + 2 * QC * QS + QS ** 2
        assert c.subs(qc=1) == 1 + 2 * QS + QS ** 2
        assert c.subs(qs=0) == 1
        assert c.subs(2, 3) == c.eval(2, 3)

    @given(coeffs, coeffs, coeffs)
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a and a * ONE == a
        assert a - a == ZERO

    @given(coeffs, coeffs, st.integers(-3, 3), st.integers(-3, 3))
    def test_mul_agrees_with_evaluation(self, a, b, vc, vs):
        # evaluation is a ring morphism; checked against a dict-level evaluator
        assert poly_eval(dict((a * b).terms), vc, vs) == poly_eval(dict(a.terms), vc, vs) * poly_eval(dict(b.terms), vc, vs)


class TestMonomial:
    def test_mul(self):
        assert mono_mul(x(1), x(1)) == x(1, 2)
        assert mono_mul(Monomial({2: 2, 3: 1}), x(1)) == Monomial({1: 1, 2: 2, 3: 1})
        assert mono_mul(Monomial(), x(5)) == x(5)

    def test_degree(self):
        assert mono_degree(Monomial({2: 2, 3: 1})) == 3
        assert mono_degree(Monomial({1: 1, 2: 1, 3: 3})) == 5
        assert mono_degree(Monomial()) == 0

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            Monomial({0: 1})
        with pytest.raises(ValueError):
            Word([Monomial()])

    @given(monomials, monomials)
    def test_commutative_and_degree_additive(self, a, b):
        assert mono_mul(a, b) == mono_mul(b, a)
        assert mono_degree(mono_mul(a, b)) == mono_degree(a) + mono_degree(b)


class TestWord:
    def test_degree(self):
        assert word_degree(FIG1) == 11
        assert word_degree(W("x1")) == 1
        assert word_degree(EMPTY) == 0

    def test_translate(self):
        assert translate(W("x1.x2"), 2) == W("x3.x4")
        assert translate(FIG1, 0) == FIG1
        assert translate(translate(W("x1"), 1), 1) == W("x3") == translate(W("x1"), 2)

    def test_max_index(self):
        assert max_index(FIG1) == 4
        assert max_index(W("x1.x1")) == 1
        assert max_index(EMPTY) == 0

    @given(words, st.integers(0, 5), st.integers(0, 5))
    def test_translate_properties(self, w, m, n):
        assert word_degree(translate(w, n)) == word_degree(w)
        assert len(translate(w, n)) == len(w)
        assert translate(translate(w, n), m) == translate(w, m + n)

    def test_word_enumeration_counts(self):
        # words over {x1, x2} of degree d: sum over compositions of prod (part + 1)
        assert [len(words_of_degree(d, 2)) for d in range(5)] == [1, 2, 7, 24, 82]


class TestLin:
    def test_pairing(self):
        u, v = W("x1.x2"), W("x2.x1")
        assert pairing(Lin.single(u), Lin.single(u)) == 1
        assert pairing(Lin.single(u), Lin.single(v)) == 0
        assert pairing(Lin({u: 2, v: QC}), Lin.single(v)) == QC

    @given(words, words)
    def test_pairing_is_kronecker_and_symmetric(self, u, v):
        a, b = Lin.single(u), Lin.single(v)
        assert pairing(a, b) == (1 if u == v else 0)
        assert pairing(a, b) == pairing(b, a)

    def test_linear_ops(self):
        u, v = W("x1"), W("x2")
        a = Lin({u: 1 + QC, v: 2})
        assert a - a == Lin.zero()
        assert (a + a) == a.scale(2)
        assert a.scale(0) == Lin.zero()
        assert Lin({u: QC, v: 0}) == Lin.single(u, QC)

    def test_render_order_longest_first(self):
        v = Lin({W("x1*x2"): QS, W("x2.x1"): QC, W("x1.x2"): 1})
        assert str(v) == "x1.x2 + qc*x2.x1 + qs*x1*x2"

    def test_tensor_basic(self):
        t = Tensor.pure(W("x1"), EMPTY) + Tensor.pure(EMPTY, W("x1"))
        assert t.arity() == 2
        assert len(t - t) == 0
