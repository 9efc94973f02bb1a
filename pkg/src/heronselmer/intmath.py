"""Exact number-theoretic primitives shared by the whole package.

Everything here operates on plain Python integers (or Fractions), is
deterministic, and has no shared state, so all functions are safe to call
from any number of worker processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class NotOdd(ValueError):
    """Raised when an argument that must be odd is even."""


class NotSquareFree(ValueError):
    """Raised when an argument that must be square-free has a repeated prime."""


class InfiniteValuation(ValueError):
    """Raised when the valuation of zero is requested."""


@dataclass(frozen=True)
class Valuation:
    """Exact decomposition x = unit * l**exponent with gcd(unit, l) = 1."""

    exponent: int
    unit: int | Fraction


def valuation(x: int | Fraction, l: int) -> Valuation:
    """l-adic valuation of a nonzero integer or rational.

    Raises InfiniteValuation on zero input (v_l(0) is not a finite number).
    """
    if x == 0:
        raise InfiniteValuation(f"valuation of 0 at {l} is infinite")
    if isinstance(x, Fraction):
        num = valuation(x.numerator, l)
        den = valuation(x.denominator, l)
        unit = Fraction(num.unit, den.unit)
        if unit.denominator == 1:
            unit = unit.numerator
        return Valuation(num.exponent - den.exponent, unit)
    t = 0
    u = x
    while u % l == 0:
        u //= l
        t += 1
    return Valuation(t, u)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n; Legendre symbol when n is prime."""
    if n <= 0 or n % 2 == 0:
        raise NotOdd(f"jacobi denominator must be odd and positive, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Thresholds below which the listed Miller-Rabin bases are a proven
# deterministic witness set.  The last entry covers everything below
# 3.3 * 10**24, comfortably past 2**64.
_MR_BASES = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (9080191, (31, 73)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (4759123141, (2, 7, 61)),
    (1122004669633, (2, 13, 23, 1662803)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318665857834031151167461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (proven below 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES[-1][1]
    for bound, witnesses in _MR_BASES:
        if n < bound:
            bases = witnesses
            break
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sqrt_mod(a: int, l: int) -> int | None:
    """Square root of a modulo an odd prime l, or None if a is a non-residue.

    Tonelli-Shanks; returns a root in [0, l).  For a ≡ 0 returns 0.
    """
    a %= l
    if a == 0:
        return 0
    if jacobi(a, l) != 1:
        return None
    if l % 4 == 3:
        return pow(a, (l + 1) // 4, l)
    # Write l - 1 = q * 2^s with q odd.
    q, s = l - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    # Any quadratic non-residue works as the generator z; 2 upward is fine
    # and deterministic.
    z = 2
    while jacobi(z, l) != -1:
        z += 1
    c = pow(z, q, l)
    x = pow(a, (q + 1) // 2, l)
    t = pow(a, q, l)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % l
            i += 1
        b = pow(c, 1 << (m - i - 1), l)
        x = x * b % l
        c = b * b % l
        t = t * c % l
        m = i
    return x


def lift_sqrt(a: int, l: int, k: int) -> int | None:
    """Root of r^2 ≡ a (mod l**k) for odd prime l and a a unit residue.

    Newton iteration doubles the precision each step, so a root modulo l
    lifts to any requested power.  Returns None when a is a non-residue.
    """
    if a % l == 0:
        raise ValueError("lift_sqrt needs a unit argument; strip l-powers first")
    r = sqrt_mod(a % l, l)
    if r is None:
        return None
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        mod = l**prec
        r = (r + a * pow(r, -1, mod)) * pow(2, -1, mod) % mod
    return r


def _pollard_brent(n: int, seed: int = 1) -> int:
    """Brent's cycle variant of Pollard rho; returns a nontrivial factor of composite n."""
    if n % 2 == 0:
        return 2
    y, c, m = seed, seed, 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    if g == n:
        return _pollard_brent(n, seed + 1)
    return g


def _factor(n: int, out: list[int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    d = _pollard_brent(n)
    _factor(d, out)
    _factor(n // d, out)


def factor_squarefree(n: int) -> list[int]:
    """Prime factors of an odd square-free positive integer, sorted.

    Trial division up to 10**6, then Pollard rho for any remaining cofactor.
    Raises NotOdd / NotSquareFree when the preconditions fail.
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n % 2 == 0:
        raise NotOdd(f"{n} is even")
    factors: list[int] = []
    rest = n
    p = 3
    while p * p <= rest and p < 10**6:
        if rest % p == 0:
            rest //= p
            if rest % p == 0:
                raise NotSquareFree(f"{n} is divisible by {p}^2")
            factors.append(p)
        p += 2
    if rest > 1:
        tail: list[int] = []
        _factor(rest, tail)
        if len(set(tail)) != len(tail):
            raise NotSquareFree(f"{n} has a repeated prime factor")
        factors.extend(tail)
    factors.sort()
    return factors


def squarefree_decompose(x: int) -> tuple[int, int]:
    """Write nonzero x = s * t^2 with s square-free; returns (s, t)."""
    if x == 0:
        raise ValueError("0 has no square-free decomposition")
    sign = 1 if x > 0 else -1
    n = abs(x)
    s, t = 1, 1
    rest = n
    p = 2
    while p * p <= rest and p < 10**6:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            if e % 2:
                s *= p
            t *= p ** (e // 2)
        p += 1 if p == 2 else 2
    if rest > 1:
        tail: list[int] = []
        _factor(rest, tail)
        for p in sorted(set(tail)):
            e = tail.count(p)
            if e % 2:
                s *= p
            t *= p ** (e // 2)
    return sign * s, t
