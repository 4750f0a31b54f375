import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncolor.core import (
    AllowedSet,
    ColoredComposition,
    ColoredPart,
    Modular,
    NoPartOneOne,
    ProhibitedSet,
    RegularComposition,
    Unrestricted,
    canonical,
    format_composition,
    format_regular,
    parse_composition,
    parse_constraint,
    parse_regular,
    render_tiling,
    satisfies,
    validate,
)
from ncolor.errors import InvalidPart, ParseError


@st.composite
def compositions(draw, max_parts=6, max_size=7):
    sizes = draw(st.lists(st.integers(1, max_size), max_size=max_parts))
    return ColoredComposition(tuple((s, draw(st.integers(1, s))) for s in sizes))


color_sets = st.lists(st.integers(1, 8), min_size=1, max_size=4)


@pytest.mark.parametrize(
    "size, color, expected",
    [(3, 2, True), (1, 1, True), (2, 3, False), (4, 0, False)],
)
def test_validate(size, color, expected):
    assert validate(ColoredPart(size, color)) is expected


def test_composition_rejects_bad_color():
    with pytest.raises(InvalidPart):
        ColoredComposition.of((2, 3))


def test_satisfies_examples():
    assert not satisfies(parse_composition("2_2 1_1"), ProhibitedSet([2]))
    assert satisfies(parse_composition("5_3 3_3 4_3"), AllowedSet([3]))
    for k in (Unrestricted(), AllowedSet([4]), ProhibitedSet([1]), Modular(3, [2]), NoPartOneOne()):
        assert satisfies(ColoredComposition(), k)


def test_no_part_one_one_only_blocks_one_one():
    k = NoPartOneOne()
    assert not k.permits(1, 1)
    assert all(k.permits(s, c) for s in range(1, 6) for c in range(1, s + 1) if s > 1)


def test_modular_residue_m_is_multiples():
    k = Modular(3, [3])
    assert [c for c in range(1, 10) if k.permits(9, c)] == [3, 6, 9]


@given(compositions())
def test_modulus_one_allows_everything(comp):
    assert satisfies(comp, Modular(1, [1]))


@given(compositions(), color_sets)
def test_allowed_and_prohibited_exclusive(comp, colors):
    if comp.parts and satisfies(comp, AllowedSet(colors)):
        assert not satisfies(comp, ProhibitedSet(colors))


def test_constraint_sets_normalize():
    assert AllowedSet([3, 1, 3]).colors == (1, 3)
    assert ProhibitedSet([4, 2]).max_color == 4
    with pytest.raises(ValueError):
        AllowedSet([])
    with pytest.raises(ValueError):
        Modular(2, [3])


def test_parse_examples():
    comp = parse_composition("5_3 3_3 4_3")
    assert comp.n == 12 and len(comp) == 3
    assert parse_composition("") == ColoredComposition()
    assert parse_composition("").n == 0
    with pytest.raises(InvalidPart):
        parse_composition("2_3")


def test_parse_accepts_parentheses_and_commas():
    assert parse_composition("(5_3, 3_3, 4_3)") == parse_composition("5_3 3_3 4_3")
    assert canonical("(2_1,1_1)") == "2_1 1_1"
    assert canonical("()") == ""


def test_parse_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_composition("1_1 2x1")
    assert exc.value.position == 4


@given(compositions())
def test_format_parse_round_trip(comp):
    text = format_composition(comp)
    assert parse_composition(text) == comp
    assert canonical(text) == text


def test_json_shape():
    comp = parse_composition("3_2 1_1")
    obj = comp.to_json()
    assert obj == {"n": 4, "parts": [{"size": 3, "color": 2}, {"size": 1, "color": 1}]}
    assert ColoredComposition.from_json(json.loads(json.dumps(obj))) == comp
    with pytest.raises(ParseError):
        ColoredComposition.from_json({"n": 5, "parts": obj["parts"]})


@pytest.mark.parametrize(
    "text, picture",
    [("3_2", "|·●·|"), ("2_1 1_1", "|●·|●|"), ("", "||"), ("3_3", "|··●|")],
)
def test_render_tiling(text, picture):
    assert render_tiling(parse_composition(text)) == picture


@pytest.mark.parametrize(
    "text, expected",
    [
        ("all", Unrestricted()),
        ("allow=3,1", AllowedSet([1, 3])),
        ("forbid=2", ProhibitedSet([2])),
        ("mod=3:2,3", Modular(3, [2, 3])),
        ("no11", NoPartOneOne()),
    ],
)
def test_constraint_grammar(text, expected):
    k = parse_constraint(text)
    assert k == expected
    assert parse_constraint(k.text) == k


@pytest.mark.parametrize("text", ["allow=", "forbid=0", "mod=2:3", "mod=0:1", "colors=1", "allow=1;2"])
def test_constraint_grammar_rejects(text):
    with pytest.raises(ParseError):
        parse_constraint(text)


def test_regular_tags():
    reg = parse_regular("4 3'")
    assert reg == RegularComposition((4, 3), (1, 2))
    assert format_regular(reg) == "4 3'"
    assert parse_regular("4 3", tagged=True).tags == (1, 1)
    with pytest.raises(ParseError):
        parse_regular("1'", tagged=False)
    with pytest.raises(ValueError):
        RegularComposition((1, 2), (1,))
