"""Bounded saturation of the pre-addition generated by a presentation.

The congruence on formal sums generated by the relations ``L == R`` is the
equivalence closure of the one-step rewrites ``Z + m*L -> Z + m*R`` (``m`` a
monomial, ``Z`` any sum).  Everything here explores that rewrite graph to a
fixed depth, so answers are exact up to the budget and otherwise ``UNKNOWN``.

Internally monomials are dense exponent vectors and sums are sorted tuples of
them.
"""
from __future__ import annotations

import enum
from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable

from .config import Settings
from .monomial import FormalSum, Monomial
from .presentation import BlueprintPresentation, degree_of

Vec = tuple[int, ...]
State = tuple[Vec, ...]
Rule = tuple[State, State]


class Verdict(enum.Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


def rules_of(pres: BlueprintPresentation) -> tuple[Rule, ...]:
    """Both orientations of every generating relation, as dense states."""
    n = pres.ngens
    out = []
    for rel in pres.relations:
        lhs = tuple(sorted(t.to_vector(n) for t in rel.lhs))
        rhs = tuple(sorted(t.to_vector(n) for t in rel.rhs))
        if lhs == rhs:
            continue
        out.append((lhs, rhs))
        out.append((rhs, lhs))
    return tuple(dict.fromkeys(out))


def _has_empty_side(rules: tuple[Rule, ...]) -> bool:
    return any(not lhs for lhs, _ in rules)


def to_state(s: FormalSum, n: int) -> State:
    return tuple(sorted(t.to_vector(n) for t in s))


def from_state(state: State) -> FormalSum:
    return FormalSum(tuple(Monomial.from_vector(v) for v in state))


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def successors(state: State, rules: tuple[Rule, ...]) -> set[State]:
    """All sums reachable from ``state`` in one rewrite step."""
    counts = Counter(state)
    out = set()
    for lhs, rhs in rules:
        if not lhs:
            # inserting m*rhs for arbitrary m branches infinitely; only m = 1
            new = Counter(state)
            new.update(rhs)
            out.add(tuple(sorted(new.elements())))
            continue
        lcount = Counter(lhs)
        first = lhs[0]
        for x in counts:
            m = tuple(a - b for a, b in zip(x, first))
            if min(m, default=0) < 0:
                continue
            need = Counter({_add(m, t): c for t, c in lcount.items()})
            if any(counts[t] < c for t, c in need.items()):
                continue
            new = counts - need
            new.update(_add(m, t) for t in rhs)
            out.add(tuple(sorted(new.elements())))
    out.discard(state)
    return out


@lru_cache(maxsize=200_000)
def explore(seed: State, rules: tuple[Rule, ...], budget: int, max_states: int) -> tuple[dict, bool]:
    """BFS over the congruence class of ``seed`` up to ``budget`` steps.

    Returns ``(depths, complete)`` where ``complete`` says the whole class was
    enumerated (the frontier died out before the budget or the state cap).
    """
    depths = {seed: 0}
    frontier = [seed]
    for depth in range(1, budget + 1):
        nxt = []
        for st in frontier:
            for succ in successors(st, rules):
                if succ not in depths:
                    depths[succ] = depth
                    nxt.append(succ)
                    if len(depths) >= max_states:
                        return depths, False
        if not nxt:
            return depths, True
        frontier = nxt
    if not frontier:
        return depths, True
    # one more look: if nothing new is reachable the class is complete
    for st in frontier:
        if any(s not in depths for s in successors(st, rules)):
            return depths, False
    return depths, True


def _connect(a: State, b: State, rules, budget: int, max_states: int, exhaustive_ok: bool):
    """Bidirectional search for a rewrite path from ``a`` to ``b``."""
    if a == b:
        return Verdict.PROVED, [a]
    if b < a:
        # search in a canonical orientation so the verdict ignores argument order
        v, path = _connect(b, a, rules, budget, max_states, exhaustive_ok)
        return v, path[::-1] if path else path
    if exhaustive_ok and (not a) != (not b):
        return Verdict.REFUTED, None
    par_a: dict = {a: None}
    par_b: dict = {b: None}
    front_a, front_b = [a], [b]
    used = 0
    while used < budget:
        grow_a = len(front_a) <= len(front_b)
        front, par, other = (front_a, par_a, par_b) if grow_a else (front_b, par_b, par_a)
        nxt = []
        for st in front:
            for succ in successors(st, rules):
                if succ in par:
                    continue
                par[succ] = st
                if succ in other:
                    return Verdict.PROVED, _join(succ, par_a, par_b)
                nxt.append(succ)
        used += 1
        if not nxt:
            return (Verdict.REFUTED if exhaustive_ok else Verdict.UNKNOWN), None
        if len(par_a) + len(par_b) > max_states:
            return Verdict.UNKNOWN, None
        if grow_a:
            front_a = nxt
        else:
            front_b = nxt
    return Verdict.UNKNOWN, None


def _join(meet, par_a, par_b) -> list[State]:
    left = []
    st = meet
    while st is not None:
        left.append(st)
        st = par_a[st]
    left.reverse()
    st = par_b[meet]
    while st is not None:
        left.append(st)
        st = par_b[st]
    return left


def _components(pres: BlueprintPresentation, state: State) -> dict:
    """Split a sum by degree; rewrites never move terms between degrees."""
    if pres.degrees is None:
        return {None: state}
    out: dict = {}
    for v in state:
        d = sum(e * w for e, w in zip(v, pres.degrees))
        out.setdefault(d, []).append(v)
    return {d: tuple(vs) for d, vs in out.items()}


def _homogeneous_rules(pres: BlueprintPresentation) -> bool:
    if pres.degrees is None:
        return False
    return all(len({degree_of(pres, m) for m in r.monomials()}) <= 1 for r in pres.relations)


def find_derivation(pres: BlueprintPresentation, lhs: FormalSum, rhs: FormalSum, budget: int | None = None,
                    settings: Settings | None = None) -> tuple[Verdict, list[FormalSum] | None]:
    """Decide ``lhs == rhs`` up to the budget, returning a rewrite path when proved.

    For graded presentations the budget applies to each degree component
    separately.
    """
    settings = settings or Settings()
    budget = settings.budget if budget is None else budget
    if budget < 0:
        raise ValueError("budget must be >= 0")
    n = pres.ngens
    rules = rules_of(pres)
    exhaustive_ok = not _has_empty_side(rules)
    a, b = to_state(lhs, n), to_state(rhs, n)
    if _homogeneous_rules(pres):
        ca, cb = _components(pres, a), _components(pres, b)
    else:
        ca, cb = {None: a}, {None: b}
    verdicts = []
    paths = []
    for d in sorted(set(ca) | set(cb), key=lambda x: (x is None, x)):
        v, path = _connect(ca.get(d, ()), cb.get(d, ()), rules, budget, settings.max_states, exhaustive_ok)
        if v is Verdict.REFUTED:
            return Verdict.REFUTED, None
        verdicts.append(v)
        paths.append((d, path))
    if any(v is Verdict.UNKNOWN for v in verdicts):
        return Verdict.UNKNOWN, None

    current = dict(ca)
    full = [lhs]
    for d, path in paths:
        for st in path[1:]:
            current[d] = st
            full.append(from_state(tuple(v for part in current.values() for v in part)))
    return Verdict.PROVED, full


def relation_holds(pres: BlueprintPresentation, lhs: FormalSum, rhs: FormalSum, budget: int | None = None,
                   settings: Settings | None = None) -> Verdict:
    return find_derivation(pres, lhs, rhs, budget, settings)[0]


def _seeds_for(rules, generators: list[Vec], n: int) -> set[State]:
    """Relation sides multiplied so that every term is a multiple of some generator.

    For each side and each choice of generator per term, the multiplier is
    the least one making every chosen divisibility hold.
    """
    seeds = set()
    for side, _ in rules:
        if not side:
            continue
        for choice in product(generators, repeat=len(side)):
            m = [0] * n
            for g, t in zip(choice, side):
                for i in range(n):
                    need = g[i] - t[i]
                    if need > m[i]:
                        m[i] = need
            m = tuple(m)
            seeds.add(tuple(sorted(_add(m, t) for t in side)))
    return seeds


def force_closure(pres: BlueprintPresentation, member: Callable[[Vec], bool], generators: Iterable[Vec],
                  budget: int, settings: Settings, single_term_only: bool = False) -> set[Vec]:
    """One round of forcing against a membership predicate.

    Seeds are sums all of whose terms are members; every sum in a seed's class
    (within budget) with exactly one non-member term ``c`` (multiplicity one)
    forces ``c``.  With ``single_term_only`` the class member must consist of
    ``c`` alone, which is the additive-closure rule ``c == sum of members``.
    """
    rules = rules_of(pres)
    n = pres.ngens
    forced: set[Vec] = set()
    for seed in _seeds_for(rules, list(generators), n):
        if not all(member(t) for t in seed):
            continue
        depths, _ = explore(seed, rules, budget, settings.max_states)
        for st in depths:
            if single_term_only:
                if len(st) == 1 and not member(st[0]):
                    forced.add(st[0])
                continue
            outs = [t for t in st if not member(t)]
            if len(outs) == 1:
                forced.add(outs[0])
    return forced


def additive_closure(pres: BlueprintPresentation, M: Iterable[Monomial], budget: int | None = None,
                     settings: Settings | None = None) -> frozenset[Monomial]:
    """Least superset of ``M`` and 0 closed under ``b == sum(a_i), a_i in M  =>  b in M``.

    Only derivations within the budget are used.
    """
    settings = settings or Settings()
    budget = settings.budget if budget is None else budget
    n = pres.ngens
    members = {m.to_vector(n) for m in M if not m.is_zero}
    while True:
        new = force_closure(pres, members.__contains__, sorted(members), budget, settings, single_term_only=True)
        new -= members
        if not new:
            break
        members |= new
    return frozenset({Monomial.zero()} | {Monomial.from_vector(v) for v in members})
