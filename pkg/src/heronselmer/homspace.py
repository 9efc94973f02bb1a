"""Homogeneous spaces: the pair of quadrics attached to a descent pair.

For a pair (b1, b2) the projective curve in P^3 is cut out by

    Q1 = b1*x1^2 - b2*x2^2 - 2^m n^2 * x0^2
    Q2 = b1*x1^2 - b1*b2*x3^2 + 2^m * x0^2

and Q3 = Q1 - Q2 = b1*b2*x3^2 - b2*x2^2 - 2^(m+1) q * x0^2 is carried along
because several local arguments read off that combination directly.  Setting
x0 = 1 recovers the affine equations in (z1, z2, z3).

All three forms are diagonal; a form is stored as its 4-tuple of
coefficients of (x0^2, x1^2, x2^2, x3^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curve import HeronCurve
from .squareclass import DescentPair

Form = tuple[int, int, int, int]


@dataclass(frozen=True)
class HomogeneousSpace:
    curve: HeronCurve
    pair: DescentPair
    q1: Form
    q2: Form
    q3: Form


@dataclass(frozen=True)
class JacobianMatrix:
    """2x4 matrix of the linear forms d(Q_r)/d(x_i) = 2 c_{r,i} x_i.

    rows[r][i] is the coefficient 2*c_{r,i} multiplying x_i.
    """

    rows: tuple[tuple[int, int, int, int], tuple[int, int, int, int]]


def build(curve: HeronCurve, pair: DescentPair) -> HomogeneousSpace:
    """Forms with exact integer coefficients from the canonical square-free
    representatives of the pair."""
    b1 = pair.b1.value
    b2 = pair.b2.value
    a = curve.a  # 2^m n^2
    b = curve.b  # 2^m
    c = 2 ** (curve.m + 1) * curve.q  # a + b
    q1: Form = (-a, b1, -b2, 0)
    q2: Form = (b, b1, 0, -b1 * b2)
    q3: Form = (-c, 0, -b2, b1 * b2)
    return HomogeneousSpace(curve, pair, q1, q2, q3)


def evaluate(space: HomogeneousSpace, point, modulus: int) -> tuple[int, int]:
    """Exact evaluation of (Q1, Q2) at an integer 4-tuple, reduced mod modulus."""
    sq = [x * x for x in point]
    r1 = sum(c * s for c, s in zip(space.q1, sq)) % modulus
    r2 = sum(c * s for c, s in zip(space.q2, sq)) % modulus
    return (r1, r2)


def evaluate_exact(space: HomogeneousSpace, point) -> tuple[int, int]:
    sq = [x * x for x in point]
    return (
        sum(c * s for c, s in zip(space.q1, sq)),
        sum(c * s for c, s in zip(space.q2, sq)),
    )


def jacobian(space: HomogeneousSpace) -> JacobianMatrix:
    return JacobianMatrix(
        (
            tuple(2 * c for c in space.q1),
            tuple(2 * c for c in space.q2),
        )
    )


_MINOR_COLS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def minor_values(space: HomogeneousSpace, point) -> list[int]:
    """The six 2x2 minors of the Jacobian at the point.

    Because both forms are diagonal, the (i, j) minor collapses to
    4 (c1_i c2_j - c1_j c2_i) x_i x_j.
    """
    c1, c2 = space.q1, space.q2
    return [
        4 * (c1[i] * c2[j] - c1[j] * c2[i]) * point[i] * point[j]
        for i, j in _MINOR_COLS
    ]


def jacobian_minor_valuation(space: HomogeneousSpace, point, l: int) -> int | float:
    """Minimal l-adic valuation over the six 2x2 Jacobian minors at the point.

    Returns math.inf when every minor vanishes exactly.  The point must not
    be congruent to (0,0,0,0) mod l.
    """
    if all(x % l == 0 for x in point):
        raise ValueError("point must be primitive modulo l")
    best: int | float = math.inf
    for value in minor_values(space, point):
        if value == 0:
            continue
        v = 0
        while value % l == 0:
            value //= l
            v += 1
        best = min(best, v)
        if best == 0:
            break
    return best


def minor_coeff_valuations(space: HomogeneousSpace, l: int) -> list[int | float]:
    """v_l of the constant part 4(c1_i c2_j - c1_j c2_i) of each minor.

    Used by the lifting searches: the minor valuation at a point is this
    constant valuation plus the valuations of the two coordinates.
    """
    c1, c2 = space.q1, space.q2
    out: list[int | float] = []
    for i, j in _MINOR_COLS:
        value = 4 * (c1[i] * c2[j] - c1[j] * c2[i])
        if value == 0:
            out.append(math.inf)
            continue
        v = 0
        while value % l == 0:
            value //= l
            v += 1
        out.append(v)
    return out


MINOR_COLUMN_PAIRS = _MINOR_COLS
