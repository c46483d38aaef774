"""Localization ``B[h^-1]`` and its degree-zero part ``B[h^-1]_0``."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BlueprintError, GradingError, UnsupportedDegreeError
from .monomial import FormalSum, Monomial, Relation
from .presentation import BlueprintPresentation, degree_of


@dataclass(frozen=True)
class Fraction:
    """``numerator / h**power`` in normal form: if ``power > 0`` then h does not divide the numerator."""

    numerator: Monomial
    power: int = 0


@dataclass(frozen=True)
class LocalizedPresentation:
    base: BlueprintPresentation
    inverted: Monomial

    def __post_init__(self):
        if self.inverted.is_zero:
            raise BlueprintError("cannot invert zero")

    def fraction(self, numerator: Monomial, power: int = 0) -> Fraction:
        """Normal form of ``numerator / h**power``; negative powers multiply out."""
        h = self.inverted
        if numerator.is_zero:
            return Fraction(numerator, 0)
        while power < 0:
            numerator = numerator * h
            power += 1
        while power > 0 and h.divides(numerator):
            numerator = numerator / h
            power -= 1
        return Fraction(numerator, power)

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return self.fraction(a.numerator * b.numerator, a.power + b.power)

    def inverse_of_h(self) -> Fraction:
        return self.fraction(Monomial.unit(), 1)

    def degree(self, f: Fraction) -> int | None:
        if self.base.degrees is None:
            raise GradingError("localization of an ungraded presentation has no degrees")
        if f.numerator.is_zero:
            return None
        return degree_of(self.base, f.numerator) - f.power * degree_of(self.base, self.inverted)

    @property
    def relations(self) -> tuple[Relation, ...]:
        return self.base.relations

    def format_fraction(self, f: Fraction) -> str:
        num = f.numerator.format(self.base.generators)
        if f.power == 0:
            return num
        h = self.inverted.format(self.base.generators)
        den = h if f.power == 1 else f"({h})^{f.power}"
        return f"{num}/{den}"


def localize(pres: BlueprintPresentation, h: Monomial) -> LocalizedPresentation:
    return LocalizedPresentation(pres, h)


def chart_generator_name(x: str, h: str, degree: int) -> str:
    if degree == 0:
        return x
    if degree == 1:
        return f"{x}/{h}"
    return f"{x}/{h}_{degree}"


def degree_zero_part(loc: LocalizedPresentation, name: str | None = None) -> BlueprintPresentation:
    """Presentation of ``B[h^-1]_0`` for a degree-1 generator ``h``.

    Each generator ``x != h`` of degree ``e`` becomes ``x/h^e``; a relation of
    degree ``d`` is divided termwise by ``h^d``, which amounts to deleting the
    ``h`` factors.  The result is ungraded.
    """
    base, h = loc.base, loc.inverted
    if base.degrees is None:
        raise GradingError("degree-zero part needs a graded base")
    deg_h = degree_of(base, h)
    if deg_h != 1:
        raise UnsupportedDegreeError(f"charts only at degree-1 elements, got degree {deg_h}")
    if len(h.exponents) != 1 or h.exponents[0][1] != 1:
        raise UnsupportedDegreeError("charts only at a single degree-1 generator")
    hi = h.exponents[0][0]
    keep = [i for i in range(base.ngens) if i != hi]
    where = {old: new for new, old in enumerate(keep)}
    hname = base.generators[hi]
    names = tuple(chart_generator_name(base.generators[i], hname, base.degrees[i]) for i in keep)

    def dehomogenize(m: Monomial) -> Monomial:
        return Monomial.from_dict({where[i]: e for i, e in m.exponents if i != hi})

    rels = []
    for r in base.relations:
        lhs = FormalSum(tuple(dehomogenize(t) for t in r.lhs))
        rhs = FormalSum(tuple(dehomogenize(t) for t in r.rhs))
        rel = Relation(lhs, rhs)
        if lhs != rhs and rel not in rels:
            rels.append(rel)
    if name is None:
        name = f"{base.name or 'B'}_chart_{hname}".replace("/", "_")
    return BlueprintPresentation(names, None, tuple(rels), name=name)
