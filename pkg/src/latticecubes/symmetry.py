"""Box symmetries, orbits, and the placement invariants (a0, a, b, g).

A cube sitting octant-normalized in its bounding box [0, d]^3 is acted
on by the 48 signed coordinate permutations of the box.  The counting
formula needs four numbers per cube:

  alpha0  size of the plain symmetry orbit (positioned images),
  alpha   size of the generalized orbit (orbit closed under in-box
          translation),
  beta    generalized-orbit members with no vertex on the face z = d,
  gamma   members additionally having no vertex on y = d.

alpha, beta, gamma are computed per translation class: a class with
extents (w1, w2, w3) has slack s_i = d - w_i and contributes
(s1+1)(s2+1)(s3+1), (s1+1)(s2+1)s3, (s1+1)s2 s3 respectively.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import NamedTuple

from .lattice_geometry import Cube, Vec3

# all 48 (permutation, per-axis flip) pairs
BOX_MAPS: tuple[tuple[tuple[int, int, int], tuple[bool, bool, bool]], ...] = tuple(
    (perm, flips)
    for perm in permutations((0, 1, 2))
    for flips in product((False, True), repeat=3)
)


class InvariantSet(NamedTuple):
    alpha0: int
    alpha: int
    beta: int
    gamma: int


def _assert_octant(c: Cube) -> None:
    for axis in range(3):
        if min(v[axis] for v in c.vertices) != 0:
            raise ValueError("cube must be octant-normalized")


def apply_box_map(
    c: Cube, d: int, perm: tuple[int, int, int], flips: tuple[bool, bool, bool]
) -> Cube:
    """Image of c under one signed permutation of the box [0, d]^3."""
    vs = []
    for v in c.vertices:
        coords = tuple(d - v[perm[i]] if flips[i] else v[perm[i]] for i in range(3))
        vs.append(Vec3(*coords))
    return Cube(tuple(sorted(vs)))


def symmetry_orbit(c: Cube) -> frozenset[Cube]:
    """All distinct positioned images of c under the 48 box maps."""
    _assert_octant(c)
    d = c.bounding_dim()
    return frozenset(apply_box_map(c, d, perm, flips) for perm, flips in BOX_MAPS)


def orbit_classes(c: Cube) -> frozenset[Cube]:
    """Distinct translation classes (octant forms) of the symmetry orbit."""
    return frozenset(img.translate_to_octant() for img in symmetry_orbit(c))


def generalized_orbit(c: Cube) -> frozenset[Cube]:
    """The symmetry orbit closed under all translations inside [0, d]^3."""
    _assert_octant(c)
    d = c.bounding_dim()
    out = set()
    for cls in orbit_classes(c):
        w1, w2, w3 = cls.extents()
        for i in range(d - w1 + 1):
            for j in range(d - w2 + 1):
                for k in range(d - w3 + 1):
                    out.add(cls.translate(Vec3(i, j, k)))
    return frozenset(out)


def invariants(c: Cube) -> InvariantSet:
    _assert_octant(c)
    d = c.bounding_dim()
    positioned = symmetry_orbit(c)
    alpha0 = len(positioned)
    alpha = beta = gamma = 0
    for cls in {img.translate_to_octant() for img in positioned}:
        w1, w2, w3 = cls.extents()
        s1, s2, s3 = d - w1, d - w2, d - w3
        alpha += (s1 + 1) * (s2 + 1) * (s3 + 1)
        beta += (s1 + 1) * (s2 + 1) * s3
        gamma += (s1 + 1) * s2 * s3
    assert alpha0 <= alpha and gamma <= beta <= alpha and 48 % alpha0 == 0
    return InvariantSet(alpha0, alpha, beta, gamma)


def canonical_form(c: Cube) -> Cube:
    """Lexicographically smallest octant form over the 48 box images.

    A fingerprint of the full symmetry-and-translation class; two cubes
    have equal canonical forms iff their generalized orbits coincide.
    """
    return min(orbit_classes(c.translate_to_octant()), key=lambda x: x.vertices)
