"""Diophantine solvers feeding the cube census.

Three problems appear:

* the plane equation a^2 + b^2 + c^2 = 3 d^2 (normals of the triangle
  planes; only odd d with gcd(a,b,c)=1 matter),
* the Eisenstein norm form k^2 = m^2 - m n + n^2 (triangle sizes inside
  a plane),
* the representation count pi_eps(d) = number of primitive solutions of
  the plane equation, for which a closed formula exists and is
  cross-checked against plain enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple

from sympy import factorint, isprime


class PlaneSolution(NamedTuple):
    """Primitive solution of a^2 + b^2 + c^2 = 3 d^2 with 0 < a <= b <= c."""

    a: int
    b: int
    c: int
    d: int


class NormFormSolution(NamedTuple):
    """(m, n) with m^2 - m n + n^2 = k^2, gcd(m, n) = 1, m >= 0, 2m < n."""

    m: int
    n: int


def legendre_minus3(p: int) -> int:
    """The character chi(p) = (-3 | p) for an odd prime p."""
    if p % 2 == 0 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")
    if p == 3:
        return 0
    return 1 if p % 12 in (1, 7) else -1


def lambda_d(d: int) -> int:
    """Lambda(d) = 8 d * prod over primes p|d of (1 - chi(p)/p), exactly."""
    if d < 1 or d % 2 == 0:
        raise ValueError("d must be a positive odd integer")
    acc = Fraction(8 * d)
    for p in factorint(d):
        acc *= Fraction(p - legendre_minus3(p), p)
    assert acc.denominator == 1
    return int(acc)


def gamma2(d: int) -> int:
    """Gamma_2(d): the correction term counting diagonal-type solutions.

    0 when some prime factor of d is 5 or 7 mod 8, 1 when d = 3, else
    2^(number of distinct prime factors of d that are 1 or 3 mod 8,
    excluding 3 itself).
    """
    if d < 1 or d % 2 == 0:
        raise ValueError("d must be a positive odd integer")
    if d == 3:
        return 1
    primes = factorint(d)
    if any(p % 8 in (5, 7) for p in primes):
        return 0
    k = sum(1 for p in primes if p % 8 in (1, 3) and p != 3)
    return 2**k


def pi_epsilon(d: int) -> int:
    """Number of primitive solutions of a^2+b^2+c^2 = 3d^2, 0 < a <= b <= c.

    Closed form (Lambda(d) + 24*Gamma_2(d)) / 48.  d = 1 is degenerate
    (the formula machinery assumes a < c somewhere); its single solution
    (1,1,1) is returned directly.
    """
    if d == 1:
        return 1
    num = lambda_d(d) + 24 * gamma2(d)
    if num % 48:
        raise ArithmeticError(f"pi_epsilon({d}): 48 does not divide {num}")
    return num // 48


def solve_three_squares(d: int) -> list[PlaneSolution]:
    """All primitive (a, b, c) with a^2+b^2+c^2 = 3d^2, 0 < a <= b <= c.

    Direct scan: for each a, each b in [a, sqrt of remainder], test the
    leftover for squareness.  All of a, b, c come out odd and coprime to 3
    automatically; only the gcd filter is applied explicitly.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError("d must be a positive odd integer")
    target = 3 * d * d
    out: list[PlaneSolution] = []
    for a in range(1, d + 1):
        rest = target - a * a
        b = a
        while 2 * b * b <= rest:
            cc = rest - b * b
            c = isqrt(cc)
            if c * c == cc and gcd(gcd(a, b), c) == 1:
                out.append(PlaneSolution(a, b, c, d))
            b += 1
    out.sort()
    return out


def solve_norm_form(k: int) -> list[NormFormSolution]:
    """All (m, n) with m^2 - mn + n^2 = k^2, gcd(m,n)=1, m >= 0, 2m < n."""
    if k < 1:
        raise ValueError("k must be positive")
    kk = k * k
    out: list[NormFormSolution] = []
    for m in range(0, k + 1):
        for n in range(2 * m + 1, 2 * k + 1):
            if m * m - m * n + n * n == kk and gcd(m, n) == 1:
                out.append(NormFormSolution(m, n))
    return out


def k_values(N: int) -> list[int]:
    """Odd k <= N equal to 1 or with every prime factor = 1 mod 3."""
    if N < 1:
        raise ValueError("N must be positive")
    out = []
    for k in range(1, N + 1, 2):
        if k == 1 or all(p % 3 == 1 for p in factorint(k)):
            out.append(k)
    return out
