from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powmon import (
    ElementKind,
    FactorWitness,
    GroupElement,
    LexCone,
    ParseError,
    QuadraticIrrational,
    SearchExhausted,
    SlopeCone,
    box_members,
    classify,
    difference_witness,
    factor_nontrivial,
    format_cone,
    is_unit,
    parse_cone,
    valuation_check,
)
from strategies import cone_members, cone_with_member, cones, elements

LEX = LexCone()
SLOPE2 = SlopeCone(QuadraticIrrational(0, 1, 2))
ORIGIN = GroupElement(0, 0)


def test_contains_examples():
    assert LEX.contains(GroupElement(-3, 1))
    assert not LEX.contains(GroupElement(-1, 0))
    assert SLOPE2.contains(GroupElement(1, 1))
    assert not SLOPE2.contains(GroupElement(1, 2))
    assert LEX.contains(ORIGIN)
    assert SLOPE2.contains(ORIGIN)


def test_is_unit_examples():
    assert is_unit(LEX, ORIGIN)
    assert is_unit(SLOPE2, ORIGIN)
    assert not is_unit(LEX, GroupElement(1, 0))
    assert not is_unit(SLOPE2, GroupElement(1, 1))


def test_valuation_check_examples():
    assert valuation_check(LEX, GroupElement(-7, 0))
    assert valuation_check(SLOPE2, GroupElement(0, 5))
    assert valuation_check(LEX, ORIGIN)


@given(cones, elements)
def test_valuation_property(m, g):
    assert valuation_check(m, g)


@given(cones, elements)
def test_reduced_property(m, g):
    assert is_unit(m, g) == (g == ORIGIN)


@given(cone_with_member(), st.data())
def test_closure(mg, data):
    m, g = mg
    h = data.draw(cone_members(m))
    assert m.contains(g + h)


@given(cones, elements)
def test_difference_witness(m, g):
    h1, h2 = difference_witness(m, g)
    assert m.contains(h1) and m.contains(h2)
    assert h1 - h2 == g


def test_difference_witness_examples():
    assert difference_witness(LEX, GroupElement(-1, 0)) == (ORIGIN, GroupElement(1, 0))
    assert difference_witness(LEX, GroupElement(3, 1)) == (GroupElement(3, 1), ORIGIN)
    assert difference_witness(SLOPE2, GroupElement(0, 1)) == (ORIGIN, GroupElement(0, -1))


def test_classify_unit_and_atom():
    assert classify(LEX, ORIGIN).kind is ElementKind.UNIT
    assert classify(SLOPE2, ORIGIN).kind is ElementKind.UNIT
    assert classify(LEX, GroupElement(1, 0)).kind is ElementKind.IRREDUCIBLE


def test_classify_lex_example():
    outcome = classify(LEX, GroupElement(-5, 1))
    assert outcome.kind is ElementKind.REDUCIBLE
    assert outcome.witness == FactorWitness(GroupElement(1, 0), GroupElement(-6, 1))
    assert outcome.witness.is_valid_for(LEX, GroupElement(-5, 1))


def test_classify_rejects_non_member():
    with pytest.raises(ValueError):
        classify(LEX, GroupElement(-1, 0))
    with pytest.raises(ValueError):
        classify(SLOPE2, GroupElement(1, 2))


@given(cone_with_member(coord=20))
def test_classify_witnesses_validate(mg):
    m, g = mg
    outcome = classify(m, g)
    if outcome.kind is ElementKind.UNIT:
        assert g == ORIGIN
    elif outcome.kind is ElementKind.IRREDUCIBLE:
        assert (m, g) == (LEX, GroupElement(1, 0))
    else:
        assert outcome.witness.is_valid_for(m, g)


@given(cone_members(SLOPE2, coord=25).filter(lambda g: g != ORIGIN))
def test_slope_members_always_reducible(g):
    outcome = classify(SLOPE2, g)
    assert outcome.kind is ElementKind.REDUCIBLE
    assert outcome.witness.is_valid_for(SLOPE2, g)


def test_factor_nontrivial_examples():
    for g in [GroupElement(2, 2), GroupElement(0, -1), GroupElement(1, 0)]:
        w = factor_nontrivial(SLOPE2, g)
        assert w.is_valid_for(SLOPE2, g)


def test_factor_nontrivial_deterministic():
    g = GroupElement(4, 5)
    assert factor_nontrivial(SLOPE2, g) == factor_nontrivial(SLOPE2, g)


def test_factor_nontrivial_radius_cap():
    # (1,1) has no splitting with |x1| <= 1, but one appears at radius 2
    with pytest.raises(SearchExhausted):
        factor_nontrivial(SLOPE2, GroupElement(1, 1), max_radius=1)
    w = factor_nontrivial(SLOPE2, GroupElement(1, 1), max_radius=2)
    assert w.is_valid_for(SLOPE2, GroupElement(1, 1))


def test_factor_nontrivial_preconditions():
    with pytest.raises(TypeError):
        factor_nontrivial(LEX, GroupElement(2, 0))
    with pytest.raises(ValueError):
        factor_nontrivial(SLOPE2, GroupElement(1, 2))  # not a member
    with pytest.raises(ValueError):
        factor_nontrivial(SLOPE2, ORIGIN)
    with pytest.raises(ValueError):
        factor_nontrivial(SLOPE2, GroupElement(2, 2), max_radius=0)


def test_lex_atoms_in_box():
    atoms = []
    for g in box_members(LEX, 12):
        if g == ORIGIN:
            continue
        outcome = classify(LEX, g)
        if outcome.kind is ElementKind.IRREDUCIBLE:
            atoms.append(g)
        else:
            assert outcome.witness.is_valid_for(LEX, g)
    assert atoms == [GroupElement(1, 0)]


def test_box_members_are_members_in_order():
    got = list(box_members(SLOPE2, 3))
    assert got == sorted(got)
    assert all(SLOPE2.contains(g) for g in got)
    assert ORIGIN in got
    assert GroupElement(1, 2) not in got


def test_parse_cone():
    assert parse_cone("lex") == LEX
    assert parse_cone("slope:sqrt(2)") == SLOPE2
    assert parse_cone(" slope:1/2+3*sqrt(5) ").alpha == QuadraticIrrational(Fraction(1, 2), 3, 5)


@pytest.mark.parametrize("bad", ["", "foo", "slope:", "slope:sqrt(4)", "lex:extra"])
def test_parse_cone_rejects(bad):
    with pytest.raises(ParseError):
        parse_cone(bad)


@given(cones)
def test_cone_text_round_trip(m):
    assert parse_cone(format_cone(m)) == m
