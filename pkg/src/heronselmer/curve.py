"""The curve family y^2 = x(x - 2^m n^2)(x + 2^m) and its 2-descent map.

Parameters: n odd and square-free, and (n^2 + 1)/2 = q must be prime.  The
three finite 2-torsion points are (0,0), (2^m n^2, 0) and (-2^m, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intmath import factor_squarefree, is_prime
from .squareclass import DescentPair, from_integer, from_rational, pair_mul

INF = "inf"

Place = object  # INF or an int prime


class QNotPrime(ValueError):
    """Raised when (n^2 + 1)/2 is not prime."""


class PointNotOnCurve(ValueError):
    """Raised when a point fails the curve equation."""


@dataclass(frozen=True)
class HeronCurve:
    n: int
    m: int
    primes: tuple[int, ...]
    q: int
    delta: int
    discriminant: int

    def place_support(self) -> frozenset[int]:
        """Finite primes generating the square classes: {2} ∪ {p_i} ∪ {q}."""
        return frozenset({2, *self.primes, self.q})

    @property
    def a(self) -> int:
        """The root 2^m n^2."""
        return 2**self.m * self.n * self.n

    @property
    def b(self) -> int:
        """Minus the root -2^m."""
        return 2**self.m

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "q": self.q,
            "primes": list(self.primes),
            "discriminant": str(self.discriminant),
        }


@dataclass(frozen=True)
class CurvePoint:
    kind: str  # "identity" or "affine"
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)

    def __str__(self) -> str:
        if self.kind == "identity":
            return "O"
        return f"({self.x}, {self.y})"


IDENTITY_POINT = CurvePoint("identity")


def new_curve(n: int, m: int) -> HeronCurve:
    """Validated curve; rejects even, non-square-free n and composite q."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    primes = tuple(factor_squarefree(n))  # raises NotOdd / NotSquareFree
    q = (n * n + 1) // 2
    if not is_prime(q):
        raise QNotPrime(f"QNotPrime: {n}^2+1 = {n * n + 1} = 2*{q} with {q} composite")
    delta = m % 2
    discriminant = 2 ** (6 * m + 6) * n**4 * q * q
    return HeronCurve(n, m, primes, q, delta, discriminant)


def places_to_check(curve: HeronCurve) -> list:
    """[∞, 2, 3, p_1, ..., p_k, q], deduplicated and sorted.

    Every other prime has smooth reduction and at least (sqrt(l) - 1)^2 > 0
    points over F_l by the Hasse-Weil bound, so a 3 gets checked explicitly
    and everything else outside the bad set is solvable for free.
    """
    finite = sorted({2, 3, *curve.primes, curve.q})
    return [INF, *finite]


def torsion_image(curve: HeronCurve) -> frozenset[DescentPair]:
    """Image of the 2-torsion under the descent map: a 4-element subgroup."""
    d = curve.delta
    t1 = DescentPair(from_integer(-1, curve), from_integer(-(2**d), curve))
    t2 = DescentPair(from_integer(2**d, curve), from_integer(2 * curve.q, curve))
    ident = DescentPair(from_integer(1, curve), from_integer(1, curve))
    return frozenset({ident, t1, t2, pair_mul(t1, t2)})


def on_curve(curve: HeronCurve, point: CurvePoint) -> bool:
    if point.kind == "identity":
        return True
    x, y = point.x, point.y
    return y * y == x * (x - curve.a) * (x + curve.b)


def beta(curve: HeronCurve, point: CurvePoint) -> DescentPair:
    """The 2-descent map into pairs of square classes.

    Piecewise: O ↦ (1,1); (0,0) ↦ (-1, -2^δ); (2^m n^2, 0) ↦ (2^δ, 2q);
    any other point ↦ (x, x - 2^m n^2) reduced modulo squares.
    """
    if not on_curve(curve, point):
        raise PointNotOnCurve(f"{point} does not satisfy the curve equation")
    if point.kind == "identity":
        return DescentPair(from_integer(1, curve), from_integer(1, curve))
    x = point.x
    if x == 0:
        return DescentPair(from_integer(-1, curve), from_integer(-(2**curve.delta), curve))
    if x == curve.a:
        return DescentPair(from_integer(2**curve.delta, curve), from_integer(2 * curve.q, curve))
    return DescentPair(from_rational(x, curve), from_rational(x - curve.a, curve))


def two_torsion_points(curve: HeronCurve) -> list[CurvePoint]:
    """O plus the three affine points of order 2."""
    return [
        IDENTITY_POINT,
        CurvePoint("affine", Fraction(0), Fraction(0)),
        CurvePoint("affine", Fraction(curve.a), Fraction(0)),
        CurvePoint("affine", Fraction(-curve.b), Fraction(0)),
    ]
