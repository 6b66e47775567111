from __future__ import annotations

import pytest
from hypothesis import given, settings

from hyperpd.ideal import (IdealParseError, MonomialIdeal, colon_by_monomial, intersect, minimalize,
                           monomial, parse_ideal, scale_by_monomial)
from hyperpd.oracle import pd_reg

from conftest import square_free_ideals


def gens(*specs):
    return {monomial(s) for s in specs}


class TestParse:
    def test_juxtaposed_letters(self):
        I = parse_ideal("ab, bc, cd")
        assert set(I.generators) == gens("ab", "bc", "cd")
        assert I.variables == ("a", "b", "c", "d")

    def test_single_variable(self):
        I = parse_ideal("x")
        assert I.generators == (frozenset("x"),)
        assert I.variables == ("x",)

    def test_fourteen_variables(self):
        I = parse_ideal("abk, bcl, cdklm, dekn, efgn, ghmn, hikl, ijk")
        assert len(I.generators) == 8
        assert len(I.variables) == 14
        assert I.variables[:4] == ("a", "b", "k", "c")

    def test_star_mode_and_comments(self):
        text = "# a comment\n(x1*x2, x2*x3\nx3*x4)  # trailing\n"
        I = parse_ideal(text)
        assert set(I.generators) == {frozenset({"x1", "x2"}), frozenset({"x2", "x3"}), frozenset({"x3", "x4"})}
        assert I.variables == ("x1", "x2", "x3", "x4")

    def test_generators_kept_as_listed(self):
        I = parse_ideal("abc, ab")
        assert I.generators == (frozenset("abc"), frozenset("ab"))
        assert not I.is_minimal

    @pytest.mark.parametrize("text", ["", "  # only a comment\n", "()"])
    def test_empty(self, text):
        with pytest.raises(IdealParseError, match="empty"):
            parse_ideal(text)

    @pytest.mark.parametrize("text", ["aab", "x1*x1"])
    def test_repeated_variable(self, text):
        with pytest.raises(IdealParseError, match="square-free"):
            parse_ideal(text)

    @pytest.mark.parametrize("text", ["a-b", "x1**x2", "1x"])
    def test_malformed(self, text):
        with pytest.raises(IdealParseError, match="malformed"):
            parse_ideal(text)

    def test_str_round_trip(self):
        I = parse_ideal("ac, ab, bc")
        assert str(I) == "(ac, ab, bc)"
        assert parse_ideal(str(I)) == I


class TestMinimalize:
    @pytest.mark.parametrize("given_, expected", [
        (["c", "cd"], ["c"]),
        (["ab", "bc", "cd"], ["ab", "bc", "cd"]),
        (["abc", "ab"], ["ab"]),
        (["ab", "ab"], ["ab"]),
    ])
    def test_examples(self, given_, expected):
        I = MonomialIdeal.from_generators(given_)
        assert set(minimalize(I).generators) == gens(*expected)

    @given(square_free_ideals())
    def test_idempotent_and_antichain(self, I):
        M = minimalize(I)
        assert minimalize(M).generators == M.generators
        for g in M.generators:
            for h in M.generators:
                assert g is h or not g <= h


class TestColon:
    def test_examples(self):
        I = MonomialIdeal.from_generators(["bc", "cd"], variables="abcd")
        assert set(colon_by_monomial(I, monomial("ab")).generators) == gens("c")
        unit = colon_by_monomial(MonomialIdeal.from_generators(["ab"]), monomial("ab"))
        assert unit.is_unit and unit.generators == (frozenset(),)
        J = MonomialIdeal.from_generators(["ab", "bc", "cd"])
        assert colon_by_monomial(J, monomial("e")) == J

    @given(square_free_ideals())
    def test_colon_by_one(self, I):
        assert colon_by_monomial(I, frozenset()) == minimalize(I)


class TestIntersect:
    def test_examples(self):
        assert set(intersect(MonomialIdeal.from_generators(["ab"]),
                             MonomialIdeal.from_generators(["bc"])).generators) == gens("abc")
        X = MonomialIdeal.from_generators(["x"])
        assert intersect(X, X) == X

    @given(square_free_ideals(max_gens=4), square_free_ideals(max_gens=4), square_free_ideals(max_gens=4))
    @settings(max_examples=60)
    def test_commutative_associative(self, A, B, C):
        assert intersect(A, B) == intersect(B, A)
        assert intersect(intersect(A, B), C) == intersect(A, intersect(B, C))


class TestScale:
    def test_examples(self):
        I = MonomialIdeal.from_generators(["ab", "bc"])
        assert set(scale_by_monomial(I, monomial("z")).generators) == gens("zab", "zbc")
        assert set(scale_by_monomial(MonomialIdeal.from_generators(["x"]), "y").generators) == gens("xy")

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="overlaps"):
            scale_by_monomial(MonomialIdeal.from_generators(["ab"]), "b")

    def test_oracle_shift(self):
        I = parse_ideal("ab, bc, cd")
        pd, reg = pd_reg(I)
        pd_z, reg_z = pd_reg(scale_by_monomial(I, "z"))
        assert (pd_z, reg_z) == (pd, reg + 1) == (2, 2)


def test_equality_ignores_order():
    assert parse_ideal("ab, cd") == parse_ideal("cd, ab")
    assert hash(parse_ideal("ab, cd")) == hash(parse_ideal("cd, ab"))
    assert parse_ideal("ab, cd") != parse_ideal("ab, ce")
