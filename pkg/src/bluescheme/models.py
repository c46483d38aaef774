"""Built-in presentations and the point-counting oracle."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .errors import UnknownGeneratorError
from .presentation import BlueprintPresentation, make_free_blueprint, quotient
from .proj import ProjSpace, build_proj, chart

GR24_GENERATORS = ("x12", "x13", "x14", "x23", "x24", "x34")
PLUCKER_RELATION = "x12*x34 + x14*x23 == x13*x24"
# the three pairs of complementary Plücker coordinates
PLUCKER_PAIRS = (("x12", "x34"), ("x14", "x23"), ("x13", "x24"))


@dataclass(frozen=True)
class CountingPolynomial:
    """``N(q) = sum(c_i * (q - 1)**i)``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coefficients):
            raise ValueError("coefficients must be nonnegative")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, q: int) -> int:
        return eval_counting_polynomial(self, q)


# counting polynomial of Gr(2,4) in the (q-1)-basis
GR24_COUNTING = CountingPolynomial((6, 12, 11, 5, 1))


def eval_counting_polynomial(poly: CountingPolynomial, q: int) -> int:
    return sum(c * (q - 1) ** i for i, c in enumerate(poly.coefficients))


def affine_space(n: int) -> BlueprintPresentation:
    if n < 0:
        raise ValueError("n must be >= 0")
    return make_free_blueprint([f"T{i}" for i in range(1, n + 1)], name=f"A{n}")


def projective_space_presentation(n: int) -> BlueprintPresentation:
    if n < 0:
        raise ValueError("n must be >= 0")
    return make_free_blueprint([f"T{i}" for i in range(n + 1)], 1, name=f"P{n}")


def projective_space(n: int, budget: int | None = None) -> ProjSpace:
    return build_proj(projective_space_presentation(n), budget)


def grassmannian_2_4_presentation(name: str = "gr24") -> BlueprintPresentation:
    free = make_free_blueprint(GR24_GENERATORS, 1, name=name)
    return quotient(free, [free.relation(PLUCKER_RELATION)])


def grassmannian_2_4(budget: int | None = None) -> ProjSpace:
    return build_proj(grassmannian_2_4_presentation(), budget)


def matrices_2x2(twisted: bool = False) -> BlueprintPresentation:
    """``F1[a,b,c,d,D] // <ad == bc + D>``, or ``<ad + bc == D>`` when twisted."""
    free = make_free_blueprint(["a", "b", "c", "d", "D"], name="m2t" if twisted else "m2")
    rel = "a*d + b*c == D" if twisted else "a*d == b*c + D"
    return quotient(free, [free.relation(rel)])


@dataclass(frozen=True)
class ChartMatch:
    generator: str
    matched: bool
    twisted: bool | None = None
    # chart generator name -> model generator name
    bijection: dict = field(default_factory=dict)

    def __bool__(self):
        return self.matched


def find_isomorphism(src: BlueprintPresentation, dst: BlueprintPresentation) -> dict | None:
    """A generator bijection carrying the relation set of ``src`` exactly onto that of ``dst``."""
    if src.ngens != dst.ngens or len(src.relations) != len(dst.relations):
        return None
    target = set(dst.relations)
    for perm in permutations(range(dst.ngens)):
        mapping = dict(enumerate(perm))
        if {r.rename(mapping) for r in src.relations} == target:
            return {src.generators[i]: dst.generators[j] for i, j in mapping.items()}
    return None


def chart_matches_model(proj: ProjSpace, h: str) -> ChartMatch:
    if h not in proj.presentation.generators:
        raise UnknownGeneratorError(f"unknown generator {h!r}")
    ch = chart(proj, h)
    for twisted in (False, True):
        iso = find_isomorphism(ch, matrices_2x2(twisted))
        if iso is not None:
            return ChartMatch(h, True, twisted, iso)
    return ChartMatch(h, False)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def count_subspaces_bruteforce(k: int, n: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``F_q^n``, counted one reduced
    row-echelon matrix at a time."""
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if q > 7 or not 0 <= k <= n <= 5:
        raise ValueError("oracle is limited to q <= 7 and k <= n <= 5")
    count = 0
    for pivots in combinations(range(n), k):
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            if _is_rref(rows, pivots):
                count += 1
    return count


def _is_rref(rows, pivots) -> bool:
    for r, p in enumerate(pivots):
        if any(rows[r][:p]) or rows[r][p] != 1:
            return False
        if any(rows[s][p] for s in range(len(rows)) if s != r):
            return False
    return True


BUILTINS = {
    **{f"a{n}": (lambda n=n: affine_space(n)) for n in range(1, 5)},
    **{f"p{n}": (lambda n=n: projective_space_presentation(n)) for n in range(6)},
    "gr24": grassmannian_2_4_presentation,
    "gr24-cone": lambda: grassmannian_2_4_presentation("gr24_cone"),
    "m2": lambda: matrices_2x2(False),
    "m2t": lambda: matrices_2x2(True),
}


def get_builtin(name: str) -> BlueprintPresentation:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}") from None
