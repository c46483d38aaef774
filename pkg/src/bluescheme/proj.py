"""Proj of a graded monomial blueprint: points, basic opens, charts, structure map."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .config import Settings
from .errors import BlueprintError, GradingError
from .localization import LocalizedPresentation, degree_zero_part, localize
from .monomial import FormalSum, Monomial
from .presentation import BlueprintPresentation, degree_of, degree_zero_subpresentation, validate_grading
from .spectra import MonomialIdeal, PrimeIdeal, SpectrumPoset, enumerate_primes, specialization_order


@dataclass(frozen=True, eq=False)
class ProjSpace:
    presentation: BlueprintPresentation
    points: SpectrumPoset
    # degree-1 generator name -> presentation of B[h^-1]_0, filled at construction
    charts: Mapping[str, BlueprintPresentation] = field(default_factory=dict)
    budget: int = 3

    @property
    def name(self) -> str:
        return self.presentation.name

    def degree_one_generators(self) -> list[str]:
        pres = self.presentation
        return [g for g, d in zip(pres.generators, pres.degrees) if d == 1]


def irrelevant_ideal(pres: BlueprintPresentation) -> MonomialIdeal:
    """``B_hom^+``: generated by the generators of positive degree."""
    return MonomialIdeal(pres, frozenset(pres.positive_generators()))


def proj_points(pres: BlueprintPresentation, budget: int | None = None,
                settings: Settings | None = None) -> SpectrumPoset:
    """Homogeneous primes that do not contain the irrelevant ideal.

    For a trivially graded blueprint the irrelevant ideal is ``{0}``, which
    every prime contains, so the result is empty.
    """
    if not pres.is_graded:
        raise GradingError("Proj needs a graded presentation")
    bad = validate_grading(pres)
    if bad:
        raise GradingError(f"inhomogeneous relation: {bad[0].format(pres.generators)}")
    positive = frozenset(pres.positive_generators())
    primes = enumerate_primes(pres, homogeneous_only=True, budget=budget, settings=settings)
    return specialization_order(p for p in primes if not positive <= p.generator_subset)


def build_proj(pres: BlueprintPresentation, budget: int | None = None, settings: Settings | None = None) -> ProjSpace:
    settings = settings or Settings()
    budget = settings.budget if budget is None else budget
    points = proj_points(pres, budget, settings)
    charts = {
        g: degree_zero_part(localize(pres, pres.gen(g)))
        for g, d in zip(pres.generators, pres.degrees)
        if d == 1
    }
    return ProjSpace(pres, points, charts, budget)


def _as_monomial(pres: BlueprintPresentation, h) -> Monomial:
    if isinstance(h, Monomial):
        return h
    if isinstance(h, str):
        return pres.monomial(h)
    raise TypeError(f"expected a monomial or a generator name, got {type(h).__name__}")


def basic_open(proj: ProjSpace, h) -> list[PrimeIdeal]:
    """``U_h``: the points not containing ``h``."""
    m = _as_monomial(proj.presentation, h)
    if m.is_zero:
        raise BlueprintError("U_0 is not a basic open")
    return [p for p in proj.points if m not in p]


def _generator_name(pres: BlueprintPresentation, h) -> str:
    if isinstance(h, Monomial):
        if len(h.exponents) == 1 and h.exponents[0][1] == 1:
            return pres.generators[h.exponents[0][0]]
        raise BlueprintError("charts are indexed by single generators")
    pres.index(h)
    return h


def chart(proj: ProjSpace, h) -> BlueprintPresentation:
    """Presentation of ``B[h^-1]_0`` with ``Spec`` of it isomorphic to ``U_h``."""
    name = _generator_name(proj.presentation, h)
    try:
        return proj.charts[name]
    except KeyError:
        # not degree 1: degree_zero_part raises the right error
        return degree_zero_part(localize(proj.presentation, proj.presentation.gen(name)))


def chart_point(proj: ProjSpace, h, p: PrimeIdeal) -> frozenset[int]:
    """Generator subset of the chart prime matching ``p`` in ``U_h``.

    ``x_k`` in ``p`` goes to the chart generator ``x_k/h``; chart generators
    keep the base order with ``h`` removed.
    """
    pres = proj.presentation
    hi = pres.index(_generator_name(pres, h))
    if hi in p.generator_subset:
        raise BlueprintError(f"{p.format()} is not in U_{pres.generators[hi]}")
    return frozenset(k - (k > hi) for k in p.generator_subset)


def structural_fiber(proj: ProjSpace, p: PrimeIdeal) -> MonomialIdeal:
    """Image of ``p`` under ``Proj B -> Spec B_0``, i.e. ``p`` intersected with ``B_0``."""
    if p not in proj.points:
        raise ValueError(f"{p.format()} is not a point of {proj.name or 'this Proj'}")
    sub, keep = degree_zero_subpresentation(proj.presentation)
    where = {old: new for new, old in enumerate(keep)}
    return MonomialIdeal(sub, frozenset(where[i] for i in p.generator_subset if i in where))


def stalk(proj: ProjSpace, p: PrimeIdeal) -> LocalizedPresentation:
    """``B_(p)`` as the chart at some degree-1 ``h`` outside ``p``, further
    localized at every chart generator coming from outside ``p``."""
    pres = proj.presentation
    if p not in proj.points:
        raise ValueError(f"{p.format()} is not a point of {proj.name or 'this Proj'}")
    outside = [g for g in proj.degree_one_generators() if pres.index(g) not in p.generator_subset]
    if not outside:
        raise BlueprintError("no degree-1 generator outside the point")
    h = outside[0]
    hi = pres.index(h)
    ch = chart(proj, h)
    units = {k - (k > hi): 1 for k in range(pres.ngens) if k != hi and k not in p.generator_subset}
    return localize(ch, Monomial.from_dict(units))


def is_homogeneous_ideal(pres: BlueprintPresentation, ideal) -> bool:
    """True iff the ideal's generators are homogeneous.

    ``ideal`` is a MonomialIdeal or an iterable of generators (monomials, or
    formal sums, which count as homogeneous when all terms share a degree).
    """
    if not pres.is_graded:
        raise GradingError("homogeneity needs a graded presentation")
    if isinstance(ideal, MonomialIdeal):
        gens: Iterable = [Monomial.var(i) for i in ideal.generator_subset] + list(ideal.forced)
    else:
        gens = ideal
    for g in gens:
        terms = g.terms if isinstance(g, FormalSum) else (g,)
        if len({degree_of(pres, t) for t in terms if not t.is_zero}) > 1:
            return False
    return True

