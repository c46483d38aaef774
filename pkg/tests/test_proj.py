import pytest

from bluescheme.errors import BlueprintError, GradingError, UnsupportedDegreeError
from bluescheme.models import grassmannian_2_4_presentation, matrices_2x2, projective_space
from bluescheme.monomial import FormalSum, Monomial
from bluescheme.presentation import BlueprintPresentation, make_free_blueprint, quotient
from bluescheme.proj import (basic_open, build_proj, chart, chart_point, irrelevant_ideal, is_homogeneous_ideal,
                             proj_points, stalk, structural_fiber)
from bluescheme.spectra import spectrum


def test_irrelevant_ideal(gr24):
    p1 = make_free_blueprint(["T0", "T1"], 1)
    assert irrelevant_ideal(p1).names == ("T0", "T1")
    assert irrelevant_ideal(gr24).names == gr24.generators
    trivial = make_free_blueprint(["a", "b"], 0)
    ideal = irrelevant_ideal(trivial)
    assert ideal.generator_subset == frozenset() and Monomial.zero() in ideal
    with pytest.raises(GradingError):
        irrelevant_ideal(make_free_blueprint(["a"]))


@pytest.mark.parametrize("n, count", [(0, 1), (1, 3), (2, 7)])
def test_projective_space_points(n, count):
    assert len(projective_space(n).points) == count


def test_gr24_points(gr24_proj):
    assert len(gr24_proj.points) == 36


def test_proj_needs_valid_grading():
    with pytest.raises(GradingError):
        proj_points(make_free_blueprint(["a"]))
    xy = make_free_blueprint(["x", "y"], 1)
    bad = BlueprintPresentation(xy.generators, xy.degrees, (xy.relation("x == y^2"),))
    with pytest.raises(GradingError):
        proj_points(bad)


def test_trivially_graded_proj_is_empty():
    trivial = make_free_blueprint(["a", "b"], 0)
    proj = build_proj(trivial)
    assert len(proj.points) == 0
    assert len(spectrum(trivial)) == 4


def test_basic_open(gr24_proj, p1_proj):
    u = basic_open(gr24_proj, "x12")
    assert all("x12" not in p.names for p in u)
    assert len(u) == len(spectrum(chart(gr24_proj, "x12")))
    assert basic_open(gr24_proj, Monomial.unit()) == list(gr24_proj.points)
    assert sorted(p.names for p in basic_open(p1_proj, "T0")) == [(), ("T1",)]
    with pytest.raises(BlueprintError):
        basic_open(gr24_proj, Monomial.zero())


def test_basic_open_of_a_product(gr24_proj):
    # U_{fg} is the intersection of U_f and U_g
    both = set(basic_open(gr24_proj, "x12*x13"))
    assert both == set(basic_open(gr24_proj, "x12")) & set(basic_open(gr24_proj, "x13"))


def test_charts(gr24_proj, p1_proj):
    assert set(chart(gr24_proj, "x12").relations) == set(matrices_2x2(False).relations)
    c13 = chart(gr24_proj, "x13")
    assert c13.relations == (c13.relation("x12/x13*x34/x13 + x14/x13*x23/x13 == x24/x13"),)
    c = chart(p1_proj, "T0")
    assert c.generators == ("T1/T0",) and c.relations == ()
    assert chart(gr24_proj, gr24_proj.presentation.gen("x12")) is gr24_proj.charts["x12"]


def test_chart_at_degree_two_generator_fails():
    pres = make_free_blueprint(["T", "w"], [1, 2])
    proj = build_proj(pres)
    assert set(proj.charts) == {"T"}
    with pytest.raises(UnsupportedDegreeError):
        chart(proj, "w")


def test_chart_point_bookkeeping(gr24_proj):
    p = gr24_proj.points.find(["x13", "x24"])
    assert chart_point(gr24_proj, "x12", p) == frozenset({0, 3})
    with pytest.raises(BlueprintError):
        chart_point(gr24_proj, "x13", p)


def test_structural_fiber(gr24_proj):
    for p in gr24_proj.points:
        fiber = structural_fiber(gr24_proj, p)
        assert fiber.presentation.ngens == 0 and fiber.generator_subset == frozenset()
    for p in projective_space(2).points:
        assert structural_fiber(projective_space(2), p).generator_subset == frozenset()


def test_structural_fiber_with_degree_zero_generators():
    pres = make_free_blueprint(["u", "T0", "T1"], [0, 1, 1])
    proj = build_proj(pres)
    # Proj over F1[u]: points are (subset of {u}) x (proper subset of {T0, T1})
    assert len(proj.points) == 6
    p = proj.points.find(["u", "T1"])
    fiber = structural_fiber(proj, p)
    assert fiber.presentation.generators == ("u",) and fiber.names == ("u",)
    with pytest.raises(ValueError):
        structural_fiber(proj, spectrum(pres).find(["u", "T0", "T1"]))


def test_stalk(gr24_proj):
    p = gr24_proj.points.find(["x12", "x34"])
    st = stalk(gr24_proj, p)
    # chart at x13 (first degree-1 generator outside p), inverting the
    # coordinates of x14, x23, x24
    assert st.base is gr24_proj.charts["x13"]
    assert st.inverted.format(st.base.generators) == "x14/x13*x23/x13*x24/x13"
    generic = stalk(gr24_proj, gr24_proj.points.find([]))
    assert generic.base is gr24_proj.charts["x12"]
    assert len(generic.inverted.exponents) == 5


def test_is_homogeneous_ideal(gr24, gr24_proj):
    for p in gr24_proj.points:
        assert is_homogeneous_ideal(gr24, p.ideal)
    p1 = make_free_blueprint(["T0", "T1"], 1)
    assert is_homogeneous_ideal(p1, [p1.monomial("T0"), p1.monomial("T0*T1")])
    assert not is_homogeneous_ideal(p1, [FormalSum.of(p1.monomial("T0"), p1.monomial("T0*T1"))])
    with pytest.raises(GradingError):
        is_homogeneous_ideal(matrices_2x2(), [matrices_2x2().monomial("a")])


def test_cover_by_basic_opens(gr24_proj):
    covered = set()
    for g in gr24_proj.presentation.generators:
        covered |= set(basic_open(gr24_proj, g))
    assert covered == set(gr24_proj.points)


def test_proj_of_a_quotient_by_a_monomial_relation():
    # F1[T0, T1, T2] // <T0*T1 == T2^2>: the cone over a conic
    pres = make_free_blueprint(["T0", "T1", "T2"], 1)
    pres = quotient(pres, [pres.relation("T0*T1 == T2^2")])
    proj = build_proj(pres)
    names = sorted(p.names for p in proj.points)
    # T2 lies in a prime iff T0 or T1 does
    assert names == [(), ("T0", "T2"), ("T1", "T2")]
