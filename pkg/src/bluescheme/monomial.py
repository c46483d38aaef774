"""Monomials over F1, formal sums of monomials, and additive relations.

A monomial is an exponent map ``{generator index: exponent}`` or the absorbing
zero.  Formal sums are multisets of nonzero monomials; the empty sum is zero.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True, order=True)
class Monomial:
    # sorted ((index, exponent), ...) with every exponent >= 1
    exponents: tuple[tuple[int, int], ...] = ()
    is_zero: bool = False

    def __post_init__(self):
        if self.is_zero and self.exponents:
            raise ValueError("the zero monomial carries no exponents")
        prev = -1
        for i, e in self.exponents:
            if i <= prev:
                raise ValueError("exponent indices must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be positive")
            prev = i

    @classmethod
    def from_dict(cls, exps: Mapping[int, int]) -> Monomial:
        return cls(tuple(sorted((i, e) for i, e in exps.items() if e)))

    @classmethod
    def unit(cls) -> Monomial:
        return cls()

    @classmethod
    def zero(cls) -> Monomial:
        return cls((), True)

    @classmethod
    def var(cls, index: int, power: int = 1) -> Monomial:
        return cls(((index, power),))

    @classmethod
    def from_vector(cls, vec: Iterable[int]) -> Monomial:
        return cls(tuple((i, e) for i, e in enumerate(vec) if e))

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def to_vector(self, n: int) -> tuple[int, ...]:
        if self.is_zero:
            raise ValueError("zero has no exponent vector")
        vec = [0] * n
        for i, e in self.exponents:
            vec[i] = e
        return tuple(vec)

    @property
    def is_unit(self) -> bool:
        return not self.is_zero and not self.exponents

    def variables(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.exponents)

    def exponent(self, index: int) -> int:
        return self.as_dict().get(index, 0)

    def total_degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        return monomial_mul(self, other)

    def divides(self, other: Monomial) -> bool:
        if other.is_zero:
            return True
        if self.is_zero:
            return False
        theirs = other.as_dict()
        return all(theirs.get(i, 0) >= e for i, e in self.exponents)

    def __truediv__(self, other: Monomial) -> Monomial:
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        if other.is_zero or not other.divides(self):
            raise ArithmeticError(f"{other} does not divide {self}")
        if self.is_zero:
            return self
        exps = self.as_dict()
        for i, e in other.exponents:
            exps[i] -= e
        return Monomial.from_dict(exps)

    def lcm(self, other: Monomial) -> Monomial:
        if self.is_zero or other.is_zero:
            return Monomial.zero()
        exps = self.as_dict()
        for i, e in other.exponents:
            exps[i] = max(exps.get(i, 0), e)
        return Monomial.from_dict(exps)

    def gcd(self, other: Monomial) -> Monomial:
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        theirs = other.as_dict()
        return Monomial.from_dict({i: min(e, theirs.get(i, 0)) for i, e in self.exponents})

    def format(self, names: list[str] | tuple[str, ...] | None = None, sep: str = "*") -> str:
        if self.is_zero:
            return "0"
        if not self.exponents:
            return "1"
        parts = []
        for i, e in self.exponents:
            name = names[i] if names is not None else f"g{i}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return sep.join(parts)

    def __str__(self):
        return self.format()


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if a.is_zero or b.is_zero:
        return Monomial.zero()
    exps = a.as_dict()
    for i, e in b.exponents:
        exps[i] = exps.get(i, 0) + e
    return Monomial.from_dict(exps)


@dataclass(frozen=True)
class FormalSum:
    """A multiset of nonzero monomials, kept sorted so equality is multiset equality."""

    terms: tuple[Monomial, ...] = ()

    def __post_init__(self):
        terms = tuple(sorted(t for t in self.terms if not t.is_zero))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *terms: Monomial) -> FormalSum:
        return cls(tuple(terms))

    def __add__(self, other: FormalSum) -> FormalSum:
        return FormalSum(self.terms + other.terms)

    def scale(self, m: Monomial) -> FormalSum:
        return FormalSum(tuple(m * t for t in self.terms))

    def counts(self) -> Counter:
        return Counter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def format(self, names=None, sep: str = "*") -> str:
        if not self.terms:
            return "0"
        return " + ".join(t.format(names, sep) for t in self.terms)

    def __str__(self):
        return self.format()


@dataclass(frozen=True, eq=False)
class Relation:
    """An additive relation ``lhs == rhs``.

    Equality and hashing ignore orientation; the written orientation is only
    kept for display.
    """

    lhs: FormalSum
    rhs: FormalSum

    def key(self) -> tuple[tuple[Monomial, ...], tuple[Monomial, ...]]:
        a, b = self.lhs.terms, self.rhs.terms
        return (a, b) if a <= b else (b, a)

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def sides(self) -> tuple[FormalSum, FormalSum]:
        return self.lhs, self.rhs

    def monomials(self) -> list[Monomial]:
        return list(self.lhs.terms + self.rhs.terms)

    def rename(self, mapping: Mapping[int, int]) -> Relation:
        def move(m: Monomial) -> Monomial:
            return Monomial.from_dict({mapping[i]: e for i, e in m.exponents})

        return Relation(
            FormalSum(tuple(move(t) for t in self.lhs)),
            FormalSum(tuple(move(t) for t in self.rhs)),
        )

    def format(self, names=None, sep: str = "*") -> str:
        return f"{self.lhs.format(names, sep)} == {self.rhs.format(names, sep)}"
