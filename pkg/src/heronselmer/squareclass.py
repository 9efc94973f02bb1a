"""Square classes of rationals with support in a fixed finite place set.

A class is stored as a sign together with the sorted tuple of primes whose
product is the square-free representative.  The group law is sign
multiplication plus symmetric difference of supports; every element is its
own inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING, Iterable

from .intmath import squarefree_decompose

if TYPE_CHECKING:  # pragma: no cover
    from .curve import HeronCurve


class AmbientMismatch(ValueError):
    """Raised when classes from different ambient place sets are combined."""


class SupportOutsideAmbient(ValueError):
    """Raised when an integer's square-free part uses a prime outside S."""


@dataclass(frozen=True)
class SquareClass:
    """An element of the square-class group, e.g. -2*79 for the integer -158."""

    sign: int
    support: tuple[int, ...]
    ambient: frozenset[int] | None = field(default=None, compare=False, repr=False)

    @property
    def value(self) -> int:
        v = self.sign
        for p in self.support:
            v *= p
        return v

    def sort_key(self) -> tuple[int, int]:
        return (0 if self.sign > 0 else 1, abs(self.value))

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class DescentPair:
    """A candidate pair of square classes tested for Selmer membership."""

    b1: SquareClass
    b2: SquareClass

    def values(self) -> tuple[int, int]:
        return (self.b1.value, self.b2.value)

    def sort_key(self):
        return (self.b1.sort_key(), self.b2.sort_key())

    def __str__(self) -> str:
        return f"({self.b1}, {self.b2})"


IDENTITY = SquareClass(1, ())


def _merge_ambient(a: SquareClass, b: SquareClass) -> frozenset[int] | None:
    if a.ambient is not None and b.ambient is not None and a.ambient != b.ambient:
        raise AmbientMismatch(f"classes live in different ambients: {set(a.ambient)} vs {set(b.ambient)}")
    return a.ambient or b.ambient


def class_mul(a: SquareClass, b: SquareClass) -> SquareClass:
    """Group law: signs multiply, supports take the symmetric difference."""
    ambient = _merge_ambient(a, b)
    support = tuple(sorted(set(a.support) ^ set(b.support)))
    return SquareClass(a.sign * b.sign, support, ambient)


def pair_mul(a: DescentPair, b: DescentPair) -> DescentPair:
    return DescentPair(class_mul(a.b1, b.b1), class_mul(a.b2, b.b2))


def from_integer(x: int, curve: "HeronCurve | None" = None) -> SquareClass:
    """Canonical reduction of a nonzero integer modulo squares.

    When a curve is given, the square-free support must lie inside the
    curve's place set {2} ∪ {p_i} ∪ {q}.
    """
    if x == 0:
        raise ValueError("0 has no square class")
    s, _ = squarefree_decompose(x)
    sign = 1 if s > 0 else -1
    support = () if abs(s) == 1 else tuple(sorted(factorization(abs(s))))
    ambient = None
    if curve is not None:
        ambient = curve.place_support()
        outside = set(support) - ambient
        if outside:
            raise SupportOutsideAmbient(f"square class {s} uses primes {sorted(outside)} outside S")
    return SquareClass(sign, support, ambient)


def factorization(n: int) -> list[int]:
    """Prime support of a square-free positive integer (any parity)."""
    from .intmath import factor_squarefree

    out: list[int] = []
    if n % 2 == 0:
        out.append(2)
        n //= 2
    if n > 1:
        out.extend(factor_squarefree(n))
    return out


def from_rational(x: Fraction, curve: "HeronCurve | None" = None) -> SquareClass:
    """Square class of a nonzero rational: the class of numerator * denominator."""
    if x == 0:
        raise ValueError("0 has no square class")
    return from_integer(x.numerator * x.denominator, curve)


def enumerate_qs2(curve: "HeronCurve") -> list[SquareClass]:
    """All 2^(k+3) classes generated by -1, 2, p_1..p_k, q, canonically ordered.

    The order sorts positive representatives first, each side by magnitude,
    so repeated runs and JSON dumps are diffable.
    """
    gens = [2, *curve.primes, curve.q]
    ambient = curve.place_support()
    classes = []
    for sign in (1, -1):
        for r in range(len(gens) + 1):
            for combo in combinations(gens, r):
                classes.append(SquareClass(sign, tuple(sorted(combo)), ambient))
    classes.sort(key=SquareClass.sort_key)
    return classes


def enumerate_pairs(curve: "HeronCurve") -> list[DescentPair]:
    """All 4^(k+3) candidate pairs, in canonical order."""
    classes = enumerate_qs2(curve)
    return [DescentPair(a, b) for a in classes for b in classes]


def subgroup_closure(generators: Iterable[DescentPair]) -> frozenset[DescentPair]:
    """The subgroup of pairs generated by the given pairs (always contains (1,1))."""
    identity = DescentPair(IDENTITY, IDENTITY)
    group = {identity}
    for g in generators:
        group |= {pair_mul(g, h) for h in group}
    return frozenset(group)
