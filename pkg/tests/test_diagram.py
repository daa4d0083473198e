import json

import pytest
from hypothesis import given, settings

from conftest import code_words
from oracles import brute_mult, brute_shs, delannoy, fubini as fubini_oracle
from ldiag.diagram import (
    EMPTY_DIAGRAM, Diagram, act, bks, code, decode, diagram_concat, diagram_from_json,
    diagram_to_json, expand, fubini, mult, multiindex, multinomial_mult, shs_enumerate,
    shs_product,
)
from ldiag.errors import BoundError, GapError, NotACodeError, NotOntoError, TooLargeError, ZeroWeightError
from ldiag.kernel import EMPTY, QC, QS, Lin, Word, translate
from ldiag.law import infil_shifted

FIG2 = {(1, 2): 2, (1, 3): 1, (2, 1): 1, (2, 2): 1, (2, 3): 3, (3, 3): 1, (3, 4): 2}
FIG1 = Diagram(FIG2)
FIG1_CODE = Word.parse("x2^2*x3 . x1*x2*x3^3 . x3*x4^2")
E = Diagram({(1, 1): 1})


class TestConstruction:
    def test_fig2_table(self):
        assert (FIG1.p, FIG1.q) == (3, 4)
        assert FIG1.edges() == 11

    def test_empty(self):
        assert Diagram({}) == EMPTY_DIAGRAM
        assert (EMPTY_DIAGRAM.p, EMPTY_DIAGRAM.q) == (0, 0)

    def test_gap(self):
        with pytest.raises(GapError):
            Diagram({(2, 1): 1})
        with pytest.raises(GapError):
            Diagram({(1, 1): 1, (1, 3): 1})

    def test_zero_weight(self):
        with pytest.raises(ZeroWeightError):
            Diagram({(1, 1): 0})

    def test_edges_at_least_spots(self):
        for d, _, _ in expand(3):
            assert d.edges() >= max(d.p, d.q)


class TestCode:
    def test_fig1(self):
        assert code(FIG1) == FIG1_CODE
        assert decode(FIG1_CODE) == FIG1

    def test_small(self):
        assert code(EMPTY_DIAGRAM) == EMPTY
        assert decode(EMPTY) == EMPTY_DIAGRAM
        assert code(Diagram({(1, 1): 2})) == Word.parse("x1^2")

    def test_not_a_code(self):
        with pytest.raises(NotACodeError):
            decode(Word.parse("x2"))

    @given(code_words())
    def test_decode_code_round_trip(self, w):
        assert code(decode(w)) == w

    def test_code_of_every_small_diagram_round_trips(self):
        for n in range(1, 4):
            for d, _, _ in expand(n):
                assert decode(code(d)) == d


class TestConcatAndAct:
    def test_concat(self):
        assert diagram_concat(FIG1, EMPTY_DIAGRAM) == FIG1 == diagram_concat(EMPTY_DIAGRAM, FIG1)
        assert diagram_concat(E, E) == Diagram({(1, 1): 1, (2, 2): 1})

    def test_concat_code(self):
        assert code(diagram_concat(FIG1, FIG1)) == FIG1_CODE + translate(FIG1_CODE, 4)

    def test_bks(self):
        assert [bks(FIG1, l) for l in (1, 2, 3)] == [3, 5, 3]
        with pytest.raises(IndexError):
            bks(FIG1, 4)

    def test_act(self):
        assert act(FIG1, (1, 2, 3)) == FIG1
        assert act(Diagram({(1, 1): 1, (2, 1): 1}), (1, 1)) == Diagram({(1, 1): 2})
        assert act(Diagram({(1, 1): 1, (2, 2): 1}), (2, 1)) == Diagram({(1, 2): 1, (2, 1): 1})

    def test_act_not_onto(self):
        with pytest.raises(NotOntoError):
            act(E, (2,))
        with pytest.raises(NotOntoError):
            act(FIG1, (1, 2))

    def test_act_composes(self):
        # (d . f) . g = d . (g o f)
        f, g = (1, 2, 1), (2, 1)
        assert act(act(FIG1, f), g) == act(FIG1, tuple(g[k - 1] for k in f))


class TestShs:
    def test_small(self):
        assert {s.f for s in shs_enumerate(1, 1)} == {(1, 2), (2, 1), (1, 1)}
        assert len(shs_enumerate(2, 1)) == 5
        assert [s.f for s in shs_enumerate(3, 0)] == [(1, 2, 3)]

    @pytest.mark.parametrize("p, q", [(0, 0), (1, 2), (2, 2), (3, 1), (2, 3)])
    def test_matches_brute_force(self, p, q):
        assert {s.f for s in shs_enumerate(p, q)} == brute_shs(p, q)

    def test_counts_follow_delannoy(self):
        for p in range(5):
            for q in range(5):
                assert len(shs_enumerate(p, q)) == delannoy(p, q)

    def test_crossings_and_superpositions(self):
        (s,) = [s for s in shs_enumerate(2, 1) if s.f == (1, 2, 1)]
        assert s.superpositions() == [(1, 3)]
        assert s.crossings() == [(2, 3)]


class TestShsProduct:
    def test_single_edges(self):
        got = shs_product(E, E)
        assert got.coefficient(Diagram({(1, 1): 1, (2, 2): 1})) == 1
        assert got.coefficient(Diagram({(1, 2): 1, (2, 1): 1})) == QC
        assert got.coefficient(Diagram({(1, 1): 1, (1, 2): 1})) == QS
        assert len(got) == 3

    def test_unit(self):
        assert dict(shs_product(FIG1, EMPTY_DIAGRAM).items()) == {FIG1: 1}
        assert dict(shs_product(EMPTY_DIAGRAM, FIG1).items()) == {FIG1: 1}

    def test_specialised_to_concat(self):
        got = shs_product(FIG1, E).subs(0, 0)
        assert dict(got.items()) == {diagram_concat(FIG1, E): 1}

    def test_code_compatibility_examples(self):
        for d1, d2 in [(E, E), (FIG1, E), (Diagram({(1, 1): 1, (2, 1): 1}), Diagram({(1, 2): 1, (1, 1): 2}))]:
            assert shs_product(d1, d2).code() == infil_shifted(code(d1), code(d2))


class TestMult:
    def test_examples(self):
        assert mult(E) == 1
        assert mult(Diagram({(1, 1): 1, (1, 2): 1})) == 2
        assert mult(Diagram({(1, 1): 2})) == 1

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_against_brute_force_and_closed_form(self, n):
        for d, m, _ in expand(n):
            assert m == mult(d) == brute_mult(d.as_dict()) == multinomial_mult(d)

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            mult(Diagram({(1, 1): 9}))
        assert mult(Diagram({(1, 1): 9}), bound=9) == 1


class TestExpand:
    def test_order_one_and_two(self):
        (row,) = expand(1)
        assert row[0] == E and row[1] == 1
        assert row[2].alpha_dict() == {1: 1} and row[2].beta_dict() == {1: 1}
        rows = expand(2)
        assert sorted(m for _, m, _ in rows) == [1, 2, 2, 2, 2]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_checksum(self, n):
        assert sum(m for _, m, _ in expand(n)) == fubini_oracle(n) ** 2

    def test_bound(self):
        with pytest.raises(BoundError):
            expand(6)
        with pytest.raises(BoundError):
            expand(-1)

    def test_fubini_recurrences_agree(self):
        assert [fubini(n) for n in range(8)] == [fubini_oracle(n) for n in range(8)]
        assert [fubini(n) for n in range(5)] == [1, 1, 3, 13, 75]


class TestMultiIndex:
    def test_fig1(self):
        mi = multiindex(FIG1)
        assert mi.beta_dict() == {3: 2, 5: 1}
        assert mi.alpha_dict() == {1: 1, 2: 1, 3: 1, 5: 1}
        assert mi.monomial() == "L1 L2 L3 L5 V3^2 V5"

    def test_empty(self):
        mi = multiindex(EMPTY_DIAGRAM)
        assert mi.alpha == () and mi.beta == ()


class TestJson:
    def test_round_trip(self):
        assert diagram_from_json(json.dumps(diagram_to_json(FIG1))) == FIG1
        assert diagram_from_json({"weights": []}) == EMPTY_DIAGRAM

    @pytest.mark.parametrize("bad", ['[]', '{"weights": [{"i": 1}]}', '{"w": []}'])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            diagram_from_json(bad)


@settings(max_examples=40, deadline=None)
@given(code_words(max_letters=2), code_words(max_letters=2))
def test_cross_presentation_on_random_codes(u, v):
    assert shs_product(decode(u), decode(v)).code() == infil_shifted(u, v)


def test_lin_from_diaglin_code():
    got = shs_product(E, E).code()
    assert isinstance(got, Lin)
    assert str(got) == "x1.x2 + qc*x2.x1 + qs*x1*x2"
