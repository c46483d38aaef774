"""Monomial ideals, primality, and the finite spectrum of a monomial blueprint.

A prime ideal of a monomial blueprint contains a monomial exactly when it
contains one of its variables, so every prime is the ideal generated by the
set of generators it contains.  Enumerating primes therefore means testing
each subset of generators: build the ideal, saturate it under the ideal
forcing rule, and keep it when nothing outside the subset gets forced and the
result is prime.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable

from .config import Settings
from .congruence import force_closure
from .errors import EnumerationLimitError, GradingError
from .monomial import Monomial
from .presentation import BlueprintPresentation

MAX_FORCING_ROUNDS = 16


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by a set of generators plus the monomials forcing added.

    ``escaped`` records that forcing produced a monomial with no variable in
    the subset, i.e. the subset alone does not generate an ideal.
    """

    presentation: BlueprintPresentation = field(compare=False, repr=False)
    generator_subset: frozenset[int]
    forced: frozenset[Monomial] = frozenset()
    escaped: bool = False

    @property
    def bitmask(self) -> int:
        return sum(1 << i for i in self.generator_subset)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.presentation.generators[i] for i in sorted(self.generator_subset))

    def __contains__(self, m: Monomial) -> bool:
        if m.is_zero:
            return True
        if m.variables() & self.generator_subset:
            return True
        return any(f.divides(m) for f in self.forced)

    def is_proper(self) -> bool:
        return Monomial.unit() not in self

    def format(self) -> str:
        return "(" + ", ".join(self.names) + ")" if self.generator_subset else "(0)"


@dataclass(frozen=True)
class PrimeIdeal:
    ideal: MonomialIdeal
    homogeneous: bool = False

    @property
    def generator_subset(self) -> frozenset[int]:
        return self.ideal.generator_subset

    @property
    def bitmask(self) -> int:
        return self.ideal.bitmask

    @property
    def names(self) -> tuple[str, ...]:
        return self.ideal.names

    def __contains__(self, m: Monomial) -> bool:
        return m in self.ideal

    def format(self) -> str:
        return self.ideal.format()


def _subset_indices(pres: BlueprintPresentation, subset: Iterable) -> frozenset[int]:
    out = set()
    for s in subset:
        out.add(pres.index(s) if isinstance(s, str) else int(s))
    if any(i < 0 or i >= pres.ngens for i in out):
        raise IndexError("generator index out of range")
    return frozenset(out)


def ideal_from_generators(pres: BlueprintPresentation, subset: Iterable, budget: int | None = None,
                          settings: Settings | None = None, stop_on_escape: bool = False) -> MonomialIdeal:
    """The monoid ideal of ``subset``, saturated under ``sum(a) + c == sum(b)  =>  c``.

    The rule fires when every ``a`` and ``b`` is already in the ideal.
    """
    settings = settings or Settings()
    budget = settings.budget if budget is None else budget
    S = _subset_indices(pres, subset)
    n = pres.ngens
    units = [tuple(1 if j == i else 0 for j in range(n)) for i in sorted(S)]
    forced: list[tuple[int, ...]] = []

    def member(v):
        if any(v[i] for i in S):
            return True
        return any(all(a >= b for a, b in zip(v, f)) for f in forced)

    escaped = False
    for _ in range(MAX_FORCING_ROUNDS):
        new = force_closure(pres, member, units + forced, budget, settings)
        new = {v for v in new if not member(v)}
        if not new:
            break
        forced.extend(sorted(new))
        escaped = True
        if stop_on_escape:
            break
    # a forced monomial with a variable in S is redundant; those never reach
    # `forced` because member() already accepts them
    return MonomialIdeal(pres, S, frozenset(Monomial.from_vector(v) for v in forced), escaped)


def _monomials_upto(indices: list[int], degree: int) -> list[Monomial]:
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(indices, d):
            exps: dict[int, int] = {}
            for i in combo:
                exps[i] = exps.get(i, 0) + 1
            out.append(Monomial.from_dict(exps))
    return out


def is_prime(pres: BlueprintPresentation, ideal: MonomialIdeal) -> bool:
    """``ab in I  =>  a in I or b in I``, checked on products up to the relation degree."""
    if not ideal.is_proper():
        return False
    bound = max([pres.max_relation_degree()] + [f.total_degree() for f in ideal.forced])
    outside = [i for i in range(pres.ngens) if i not in ideal.generator_subset]
    candidates = [m for m in _monomials_upto(outside, bound) if m not in ideal]
    for i, a in enumerate(candidates):
        da = a.total_degree()
        for b in candidates[i:]:
            if da + b.total_degree() <= bound and (a * b) in ideal:
                return False
    return True


def _test_subset(pres, mask, budget, settings, homogeneous):
    subset = [i for i in range(pres.ngens) if mask >> i & 1]
    ideal = ideal_from_generators(pres, subset, budget, settings, stop_on_escape=True)
    if ideal.escaped or not is_prime(pres, ideal):
        return None
    return PrimeIdeal(ideal, homogeneous)


def enumerate_primes(pres: BlueprintPresentation, homogeneous_only: bool = False, budget: int | None = None,
                     settings: Settings | None = None, workers: int = 1) -> list[PrimeIdeal]:
    """All primes, in ascending bitmask order over the generator order.

    Subsets are independent, so ``workers > 1`` farms them out to threads; the
    merged result does not depend on scheduling.
    """
    settings = settings or Settings()
    budget = settings.budget if budget is None else budget
    if pres.ngens > settings.max_generators:
        raise EnumerationLimitError(
            f"{pres.ngens} generators exceeds the enumeration limit of {settings.max_generators}"
        )
    if homogeneous_only and not pres.is_graded:
        raise GradingError("homogeneous primes need a graded presentation")
    # generator-subset ideals of a graded monomial blueprint are homogeneous
    homogeneous = pres.is_graded
    masks = range(1 << pres.ngens)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            found = list(pool.map(lambda m: _test_subset(pres, m, budget, settings, homogeneous), masks))
    else:
        found = [_test_subset(pres, m, budget, settings, homogeneous) for m in masks]
    return [p for p in found if p is not None]


@dataclass(frozen=True)
class SpectrumPoset:
    """Points ordered by containment; sorted by rank (descending), then bitmask."""

    points: tuple[PrimeIdeal, ...]

    def leq(self, q: PrimeIdeal, p: PrimeIdeal) -> bool:
        return q.generator_subset <= p.generator_subset

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return p in self._index

    @cached_property
    def _index(self) -> dict[PrimeIdeal, int]:
        return {p: i for i, p in enumerate(self.points)}

    def id_of(self, p: PrimeIdeal) -> int:
        return self._index[p]

    @cached_property
    def ranks(self) -> dict[PrimeIdeal, int]:
        return _chain_ranks(self.points)

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations ``(lower id, upper id)``: the transitive reduction."""
        pts = self.points
        out = []
        for i, q in enumerate(pts):
            above = [j for j, p in enumerate(pts) if j != i and q.generator_subset < p.generator_subset]
            for j in above:
                if not any(pts[j].generator_subset > pts[k].generator_subset for k in above if k != j):
                    out.append((i, j))
        return sorted(out)

    def rank_histogram(self) -> list[int]:
        if not self.points:
            return []
        top = max(self.ranks.values())
        hist = [0] * (top + 1)
        for r in self.ranks.values():
            hist[r] += 1
        return hist

    def find(self, names: Iterable[str]) -> PrimeIdeal:
        want = set(names)
        for p in self.points:
            if set(p.names) == want:
                return p
        raise KeyError(f"no point generated by {sorted(want)}")


def _chain_ranks(points) -> dict[PrimeIdeal, int]:
    """Longest strictly increasing chain starting at each point (DAG longest path)."""
    order = sorted(points, key=lambda p: -len(p.generator_subset))
    ranks: dict[PrimeIdeal, int] = {}
    for p in order:
        above = [ranks[q] for q in ranks if p.generator_subset < q.generator_subset]
        ranks[p] = 1 + max(above) if above else 0
    return ranks


def specialization_order(primes: Iterable[PrimeIdeal]) -> SpectrumPoset:
    primes = list(primes)
    ranks = _chain_ranks(primes)
    ordered = sorted(primes, key=lambda p: (-ranks[p], p.bitmask))
    return SpectrumPoset(tuple(ordered))


def rank(poset: SpectrumPoset, p: PrimeIdeal) -> int:
    if p not in poset:
        raise ValueError(f"{p.format()} is not a point of this spectrum")
    return poset.ranks[p]


def closed_points(poset: SpectrumPoset) -> list[PrimeIdeal]:
    return [p for p in poset if not any(p.generator_subset < q.generator_subset for q in poset)]


def generic_points(poset: SpectrumPoset) -> list[PrimeIdeal]:
    return [p for p in poset if not any(q.generator_subset < p.generator_subset for q in poset)]


def spectrum(pres: BlueprintPresentation, budget: int | None = None, settings: Settings | None = None) -> SpectrumPoset:
    return specialization_order(enumerate_primes(pres, budget=budget, settings=settings))
