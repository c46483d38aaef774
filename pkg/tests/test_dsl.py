import pytest
from hypothesis import given, strategies as st

from bluescheme.dsl import parse_presentation, parse_sum, to_dsl, tokenize
from bluescheme.errors import DSLParseError
from bluescheme.models import grassmannian_2_4_presentation
from bluescheme.monomial import FormalSum, Monomial, Relation
from bluescheme.presentation import BlueprintPresentation, validate_grading

GR24_TEXT = "blueprint gr24 { gens x12 x13 x14 x23 x24 x34 : deg 1; rel x12*x34 + x14*x23 == x13*x24; }"


def test_parse_gr24_matches_builtin():
    parsed = parse_presentation(GR24_TEXT)
    assert parsed == grassmannian_2_4_presentation()
    assert parsed.name == "gr24"


def test_groups_and_exponents():
    text = """
    blueprint w {   # weighted
        gens a b : deg 1;
        gens c : deg 2;
        rel a^2 + b^2 == c;
        rel 1 == 1;
    }
    """
    pres = parse_presentation(text)
    assert pres.degrees == (1, 1, 2)
    assert pres.relations[0] == Relation(FormalSum.of(Monomial.var(0, 2), Monomial.var(1, 2)),
                                         FormalSum.of(Monomial.var(2)))


def test_zero_is_the_empty_sum():
    pres = parse_presentation("blueprint z { gens a; rel a == 0; }")
    assert pres.relations[0].rhs == FormalSum()


@pytest.mark.parametrize("text, line, col", [
    ("blueprint b { gens a b; rel a == c; }", 1, 34),
    # missing ';' after gens: "rel" and "a" read as generator names
    ("blueprint b {\n  gens a b\n  rel a == b; }", 3, 9),
    ("blueprint b {\n  gens a : deg 1;\n  gens b;\n}", 3, 8),
    ("blueprint b { gens a : deg 1; rel a == a*a; }", 1, 35),
    ("blueprint b { gens a a; }", 1, 22),
    ("blueprint b { gens a; rel a == 2; }", 1, 32),
    ("blueprint b { gens a; rel a $ a; }", 1, 29),
    ("blueprint b { gens a; ", 1, 23),
])
def test_parse_errors_report_position(text, line, col):
    with pytest.raises(DSLParseError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert f"line {line}, column {col}" in str(info.value)


def test_tokenize_tracks_lines():
    toks = tokenize("a\n  b")
    assert [(t.text, t.line, t.col) for t in toks[:2]] == [("a", 1, 1), ("b", 2, 3)]


def test_chart_names_parse(gr24):
    from bluescheme.localization import degree_zero_part, localize

    chart = degree_zero_part(localize(gr24, gr24.gen("x12")))
    assert parse_presentation(to_dsl(chart)) == chart
    assert parse_sum("x13/x12*x24/x12", chart) == FormalSum.of(Monomial.from_dict({0: 1, 3: 1}))


names = st.lists(st.from_regex(r"[a-z][a-z0-9]{0,3}", fullmatch=True), min_size=1, max_size=5, unique=True)


@st.composite
def presentations(draw):
    gens = tuple(draw(names))
    graded = draw(st.booleans())
    degrees = tuple(draw(st.integers(0, 2)) for _ in gens) if graded else None
    n = len(gens)
    mono = st.dictionaries(st.integers(0, n - 1), st.integers(1, 3), max_size=3).map(Monomial.from_dict)
    side = st.lists(mono, min_size=1, max_size=3).map(lambda ts: FormalSum(tuple(ts)))
    rels = draw(st.lists(st.tuples(side, side).map(lambda p: Relation(*p)), max_size=3))
    pres = BlueprintPresentation(gens, degrees, tuple(rels), name="r")
    if graded:
        pres = BlueprintPresentation(gens, degrees, tuple(r for r in rels if r not in validate_grading(pres)), name="r")
    return pres


@given(presentations())
def test_round_trip(pres):
    assert parse_presentation(to_dsl(pres)) == pres
