"""Arithmetic in the ring Z[i*sqrt(3)].

Elements are pairs (u, v) representing u + v*i*sqrt(3), with norm
u^2 + 3*v^2.  The ring is not a UFD (4 = 2*2 = (1+i*sqrt(3))(1-i*sqrt(3)))
but factorization of *primitive* elements (gcd(u, v) = 1 times a content)
is controlled enough for our purposes: every odd prime p = 1 mod 3 that
divides the norm splits as p = x^2 + 3y^2 with a unique orientation
dividing the element, 3 enters through i*sqrt(3) itself, and 2 only ever
enters through a single factor of norm 4.

The only units are +-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple, Optional


class NotRepresentable(ValueError):
    """Raised when a prime has no representation x^2 + 3*y^2."""


class RingElem(NamedTuple):
    """u + v*i*sqrt(3) with integer u, v."""

    u: int
    v: int

    def norm(self) -> int:
        return self.u * self.u + 3 * self.v * self.v

    def conj(self) -> "RingElem":
        return RingElem(self.u, -self.v)

    def __mul__(self, other: "RingElem") -> "RingElem":  # type: ignore[override]
        # (u1 + v1 w)(u2 + v2 w) with w^2 = -3
        return RingElem(
            self.u * other.u - 3 * self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    def __neg__(self) -> "RingElem":
        return RingElem(-self.u, -self.v)


ONE = RingElem(1, 0)
MINUS_ONE = RingElem(-1, 0)


def divide_exact(z: RingElem, w: RingElem) -> Optional[RingElem]:
    """Return z / w if w divides z exactly in the ring, else None."""
    n = w.norm()
    if n == 0:
        return None
    t = z * w.conj()
    if t.u % n or t.v % n:
        return None
    return RingElem(t.u // n, t.v // n)


def unique_decomposition(p: int) -> RingElem:
    """Representation of the prime p as an element of norm p (norm 4 for p=2).

    For p = 1 mod 3 returns (x, y) with x^2 + 3y^2 = p, x > 0, y > 0;
    the representation is unique up to signs.  For p = 2 returns (1, 1),
    the norm-4 factor through which 2 enters the ring.  Raises
    NotRepresentable for p = 3 and for primes p = 2 mod 3.
    """
    if p == 2:
        return RingElem(1, 1)
    if p == 3 or p % 3 != 1:
        raise NotRepresentable(f"{p} has no primitive representation x^2 + 3y^2")
    for y in range(1, isqrt(p // 3) + 1):
        r = p - 3 * y * y
        x = isqrt(r)
        if x * x == r:
            return RingElem(x, y)
    raise NotRepresentable(f"{p} has no representation x^2 + 3y^2")


@dataclass(frozen=True)
class RingFactorization:
    """content * unit * prod(factors[i] ** mult[i]) for a ring element.

    content is the integer gcd pulled out first; each factor is a ring
    element of prime norm (norm 4 for the prime 2, norm 3 for the prime 3)
    oriented so that it actually divides the reduced element.  The unit is
    +1 or -1.  Invariant: content^2 * prod(norm(f)^m) == norm of the input.
    """

    content: int
    unit: int
    factors: tuple[tuple[RingElem, int], ...]

    def value(self) -> RingElem:
        acc = RingElem(self.content * self.unit, 0)
        for f, m in self.factors:
            for _ in range(m):
                acc = acc * f
        return acc


def factor_ring(u: int, v: int) -> RingFactorization:
    """Factor u + v*i*sqrt(3) into content, unit and prime-norm elements.

    The reduced part (u, v)/content is primitive, so its norm is divisible
    by 4 at most once, by 3 at most once, and only by primes p = 1 mod 3
    otherwise; each prime-norm factor is oriented by exact division.
    """
    if u == 0 and v == 0:
        raise ValueError("cannot factor 0")
    g = gcd(abs(u), abs(v))
    z = RingElem(u // g, v // g)
    n = z.norm()

    factors: list[tuple[RingElem, int]] = []

    # prime 2 enters only via the norm-4 element (1, +-1), at most once
    if n % 2 == 0:
        e = 0
        while n % 2 == 0:
            n //= 2
            e += 1
        assert e == 2, "primitive norm is divisible by 4 exactly once"
        f = RingElem(1, 1) if (z.u - z.v) % 4 == 0 else RingElem(1, -1)
        q = divide_exact(z, f)
        assert q is not None
        z = q
        factors.append((f, 1))

    if n % 3 == 0:
        e = 0
        while n % 3 == 0:
            n //= 3
            e += 1
        assert e == 1, "primitive norm is divisible by 3 at most once"
        f = RingElem(0, 1)
        q = divide_exact(z, f)
        assert q is not None
        z = q
        factors.append((f, 1))

    p = 5
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            f = unique_decomposition(p)
            if divide_exact(z, f) is None:
                f = f.conj()
            for _ in range(e):
                q = divide_exact(z, f)
                assert q is not None, "oriented prime factor must divide"
                z = q
            factors.append((f, e))
        p += 2 if p % 6 == 5 else 4  # only 1, 5 mod 6 can be prime
    if n > 1:
        f = unique_decomposition(n)
        if divide_exact(z, f) is None:
            f = f.conj()
        q = divide_exact(z, f)
        assert q is not None
        z = q
        factors.append((f, 1))

    assert z in (ONE, MINUS_ONE), "remainder after all prime factors must be a unit"
    unit = 1 if z == ONE else -1
    return RingFactorization(content=g, unit=unit, factors=tuple(factors))


def find_rs(A: int, B: int, q: int) -> tuple[int, int]:
    """Solve s^2 + 3*r^2 = 2*q given that 2*q divides A^2 + 3*B^2.

    Builds s + r*i*sqrt(3) from the factorization of A + B*i*sqrt(3) by
    picking, for each prime power in 2*q, the stored factor with the right
    orientation.  This is the congruence-compatible square root needed by
    the triangle parametrization: the returned (r, s) satisfies
    2*q | (A*s - 3*B*r) and 2*q | (A*r + B*s) up to the sign choices the
    caller iterates over.
    """
    if (A * A + 3 * B * B) % (2 * q) != 0:
        raise ValueError("2q must divide A^2 + 3B^2")
    fac = factor_ring(A, B)
    common = gcd(fac.content, 2 * q)
    qq = (2 * q) // (common * common)
    if qq * common * common != 2 * q:
        raise ValueError("content mismatch: 2q/content^2 not integral")

    # prime powers f1^f2 of qq, by trial division
    powers: list[tuple[int, int]] = []
    n = qq
    f1 = 2
    while f1 * f1 <= n:
        if n % f1 == 0:
            f2 = 0
            while n % f1 == 0:
                n //= f1
                f2 += 1
            powers.append((f1, f2))
        f1 += 1
    if n > 1:
        powers.append((n, 1))

    # the shared integer content is part of the gcd, so the product starts there
    acc = RingElem(common, 0)
    for f1, f2 in powers:
        if f1 == 2:
            # a norm-form value 2q has 2-adic valuation exactly 2, one ring factor
            assert f2 == 2, "2 enters a norm-form value as 4 exactly"
            f2 = 1
        target = 4 if f1 == 2 else f1
        matched = None
        for f, m in fac.factors:
            if f.norm() == target:
                matched = (f, m)
                break
        if matched is None:
            raise ValueError(f"required factor of norm {target} not present")
        f, m = matched
        for _ in range(min(m, f2)):
            acc = acc * f

    s, r = acc.u, acc.v
    if s * s + 3 * r * r != 2 * q:
        s, r = r, s
    if s * s + 3 * r * r != 2 * q:
        raise ValueError("factor selection does not multiply to norm 2q")
    return r, s
