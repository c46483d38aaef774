"""Blueprint presentations ``F1[x_1, ..., x_n] // R`` with an optional grading."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import GradingError, PresentationError, UnknownGeneratorError
from .monomial import FormalSum, Monomial, Relation


@dataclass(frozen=True)
class BlueprintPresentation:
    """Generators, optional degrees (one per generator, same order) and relations.

    ``degrees is None`` means ungraded.  A presentation is an immutable value;
    ``quotient`` returns a new one.
    """

    generators: tuple[str, ...]
    degrees: tuple[int, ...] | None = None
    relations: tuple[Relation, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(set(self.generators)) != len(self.generators):
            dupes = sorted({g for g in self.generators if self.generators.count(g) > 1})
            raise PresentationError(f"duplicate generator names: {', '.join(dupes)}")
        if self.degrees is not None:
            degs = tuple(int(d) for d in self.degrees)
            if len(degs) != len(self.generators):
                raise PresentationError("one degree per generator required")
            if any(d < 0 for d in degs):
                raise PresentationError("degrees must be natural numbers")
            object.__setattr__(self, "degrees", degs)
        object.__setattr__(self, "relations", tuple(self.relations))
        n = len(self.generators)
        for rel in self.relations:
            for m in rel.monomials():
                if any(i >= n for i in m.variables()):
                    raise PresentationError(f"relation {rel.format()} uses an unknown generator index")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def is_graded(self) -> bool:
        return self.degrees is not None

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise UnknownGeneratorError(f"unknown generator {name!r}") from None

    def gen(self, name: str) -> Monomial:
        return Monomial.var(self.index(name))

    def monomial(self, spec: Mapping[str, int] | str) -> Monomial:
        """Build a monomial from ``{"x12": 1, "x34": 1}`` or from ``"x12*x34"``."""
        if isinstance(spec, str):
            from .dsl import parse_monomial

            return parse_monomial(spec, self)
        return Monomial.from_dict({self.index(k): e for k, e in spec.items()})

    def sum(self, *terms: Monomial | str) -> FormalSum:
        return FormalSum(tuple(self.monomial(t) if isinstance(t, str) else t for t in terms))

    def relation(self, text: str) -> Relation:
        from .dsl import parse_relation

        return parse_relation(text, self)

    def positive_generators(self) -> list[int]:
        if self.degrees is None:
            raise GradingError("presentation is not graded")
        return [i for i, d in enumerate(self.degrees) if d > 0]

    def max_relation_degree(self) -> int:
        """Largest total (standard) degree of a monomial occurring in a relation."""
        return max((m.total_degree() for r in self.relations for m in r.monomials()), default=0)

    def format(self, names: Sequence[str] | None = None) -> str:
        names = tuple(names) if names is not None else self.generators
        return "\n".join(r.format(names) for r in self.relations)


def make_free_blueprint(names: Iterable[str], degrees=None, name: str = "") -> BlueprintPresentation:
    """The free blueprint ``F1[names]``.

    ``degrees`` may be a single int (every generator gets it), a sequence, or
    a mapping name -> degree.
    """
    names = tuple(names)
    if degrees is None:
        degs = None
    elif isinstance(degrees, int):
        degs = (degrees,) * len(names)
    elif isinstance(degrees, Mapping):
        missing = [n for n in names if n not in degrees]
        if missing:
            raise PresentationError(f"no degree given for {', '.join(missing)}")
        degs = tuple(degrees[n] for n in names)
    else:
        degs = tuple(degrees)
    return BlueprintPresentation(names, degs, (), name=name)


def degree_of(pres: BlueprintPresentation, m: Monomial) -> int | None:
    """Degree of a monomial; ``None`` for zero, which lies in every degree layer."""
    if pres.degrees is None:
        raise GradingError("degree_of needs a graded presentation")
    if m.is_zero:
        return None
    return sum(e * pres.degrees[i] for i, e in m.exponents)


def _relation_degrees(pres: BlueprintPresentation, rel: Relation) -> set[int]:
    return {degree_of(pres, m) for m in rel.monomials()}


def validate_grading(pres: BlueprintPresentation) -> list[Relation]:
    """Return the generating relations that are not homogeneous (empty list = ok)."""
    if pres.degrees is None:
        raise GradingError("validate_grading needs a graded presentation")
    return [r for r in pres.relations if len(_relation_degrees(pres, r)) > 1]


def quotient(pres: BlueprintPresentation, rels: Iterable[Relation], name: str | None = None) -> BlueprintPresentation:
    rels = tuple(rels)
    out = BlueprintPresentation(
        pres.generators, pres.degrees, pres.relations + rels, name=pres.name if name is None else name
    )
    if out.is_graded:
        bad = [r for r in rels if len(_relation_degrees(out, r)) > 1]
        if bad:
            shown = "; ".join(r.format(out.generators) for r in bad)
            raise GradingError(f"inhomogeneous relation on a graded presentation: {shown}")
    return out


def degree_zero_subpresentation(pres: BlueprintPresentation) -> tuple[BlueprintPresentation, list[int]]:
    """The subblueprint of degree-0 elements and the embedding of its generators.

    Over a monomial blueprint the degree-0 part is generated by the degree-0
    generators; a homogeneous relation of degree 0 only involves those.
    """
    if pres.degrees is None:
        raise GradingError("presentation is not graded")
    keep = [i for i, d in enumerate(pres.degrees) if d == 0]
    where = {old: new for new, old in enumerate(keep)}
    rels = [
        r.rename(where)
        for r in pres.relations
        if all(m.variables() <= set(keep) for m in r.monomials())
    ]
    sub = BlueprintPresentation(
        tuple(pres.generators[i] for i in keep), (0,) * len(keep), tuple(rels), name=f"{pres.name}_0"
    )
    return sub, keep
