"""Brute-force cube counter, independent of the analytic pipeline.

Counts every lattice cube inside {0..n}^3 by direct enumeration of
orthogonal frames: for each side s, every ordered triple of pairwise
orthogonal integer vectors of length s spans a cube.  Translation
classes are deduplicated by their octant form and each class is counted
once per position of its bounding box inside the grid.

No ring arithmetic, no triangle parametrization, no orbit machinery:
the only shared code is the Vec3/Cube canonical form.  That is the
point - this module is the referee for the fast counter.
"""

from __future__ import annotations

from math import isqrt

from .lattice_geometry import Cube, Vec3
from .symmetry import generalized_orbit

_EPS = tuple((e1, e2, e3) for e1 in (0, 1) for e2 in (0, 1) for e3 in (0, 1))


def _vectors_of_norm(n2: int) -> list[Vec3]:
    """All integer vectors with squared length n2."""
    out = []
    bound = isqrt(n2)
    for x in range(-bound, bound + 1):
        rx = n2 - x * x
        by = isqrt(rx)
        for y in range(-by, by + 1):
            zz = rx - y * y
            z = isqrt(zz)
            if z * z != zz:
                continue
            out.append(Vec3(x, y, z))
            if z:
                out.append(Vec3(x, y, -z))
    return out


def enumerate_frames(s: int) -> list[tuple[Vec3, Vec3, Vec3]]:
    """All ordered orthogonal frames (e1, e2, e3) of integer vectors, |e_i| = s."""
    if s < 1:
        raise ValueError("side must be positive")
    vs = _vectors_of_norm(s * s)
    frames = []
    for e1 in vs:
        for e2 in vs:
            if e1.dot(e2) != 0:
                continue
            cr = e1.cross(e2)
            if cr.x % s or cr.y % s or cr.z % s:
                continue
            e3 = Vec3(cr.x // s, cr.y // s, cr.z // s)
            frames.append((e1, e2, e3))
            frames.append((e1, e2, -e3))
    return frames


def brute_force_count(n: int) -> int:
    """Number of lattice cubes with all 8 vertices in {0..n}^3."""
    if n < 1:
        raise ValueError("n must be positive")
    classes: dict[Cube, tuple[int, int, int]] = {}
    for s in range(1, n + 1):
        for e1, e2, e3 in enumerate_frames(s):
            pts = [
                (
                    a * e1.x + b * e2.x + c * e3.x,
                    a * e1.y + b * e2.y + c * e3.y,
                    a * e1.z + b * e2.z + c * e3.z,
                )
                for a, b, c in _EPS
            ]
            # octant shift done inline on raw points, not via Cube methods
            mx = min(p[0] for p in pts)
            my = min(p[1] for p in pts)
            mz = min(p[2] for p in pts)
            shifted = [(p[0] - mx, p[1] - my, p[2] - mz) for p in pts]
            w = (
                max(p[0] for p in shifted),
                max(p[1] for p in shifted),
                max(p[2] for p in shifted),
            )
            if max(w) > n:
                continue
            classes[Cube.from_points(shifted)] = w
    total = 0
    for w1, w2, w3 in classes.values():
        total += (n + 1 - w1) * (n + 1 - w2) * (n + 1 - w3)
    return total


def brute_force_orbit_fill(c: Cube, n: int) -> int:
    """Distinct cubes in {0..n}^3 reachable from c's generalized orbit.

    Literal set construction used to validate the placement polynomial;
    intended for small bounding boxes only.
    """
    seen: set[tuple[Vec3, ...]] = set()
    for member in generalized_orbit(c):
        w1, w2, w3 = member.extents()
        if max(w1, w2, w3) > n:
            continue
        for i in range(n - w1 + 1):
            for j in range(n - w2 + 1):
                for k in range(n - w3 + 1):
                    seen.add(member.translate(Vec3(i, j, k)).vertices)
    return len(seen)
