"""The brute-force frame-enumeration referee."""

import pytest

from latticecubes.lattice_geometry import Cube
from latticecubes.oracle import (
    _vectors_of_norm,
    brute_force_count,
    brute_force_orbit_fill,
    enumerate_frames,
)
from latticecubes.reference import ORACLE_FROZEN
from latticecubes.symmetry import invariants

from .published_data import TABLE1

UNIT = Cube.from_points(TABLE1[0][2])
ROW3 = Cube.from_points(TABLE1[1][2])
ROW5 = Cube.from_points(TABLE1[2][2])


def test_vectors_of_norm():
    assert len(_vectors_of_norm(1)) == 6
    assert len(_vectors_of_norm(2)) == 12
    assert len(_vectors_of_norm(9)) == 30  # 6 axial + 24 of type (1,2,2)
    vs = _vectors_of_norm(9)
    assert len(set(vs)) == 30
    assert all(v.norm2() == 9 for v in vs)


def test_enumerate_frames_small():
    assert len(enumerate_frames(1)) == 48
    assert len(enumerate_frames(2)) == 48
    frames3 = enumerate_frames(3)
    assert len(frames3) == 240  # axis frames + (1,2,2)-type frames
    for e1, e2, e3 in frames3:
        assert e1.norm2() == e2.norm2() == e3.norm2() == 9
        assert e1.dot(e2) == e2.dot(e3) == e1.dot(e3) == 0
        cr = e1.cross(e2)
        assert e3.scale(3) in (cr, -cr)


def test_enumerate_frames_group_action():
    # the 48 signed permutations act freely on frames
    for s in range(1, 12):
        assert len(enumerate_frames(s)) % 48 == 0, s


def test_enumerate_frames_rejects():
    with pytest.raises(ValueError):
        enumerate_frames(0)


def test_brute_force_count_frozen_values():
    for n in range(1, 13):
        assert brute_force_count(n) == ORACLE_FROZEN[n], n


def test_brute_force_count_rejects():
    with pytest.raises(ValueError):
        brute_force_count(0)


def test_orbit_fill_exact_box():
    assert brute_force_orbit_fill(UNIT, 1) == 1
    assert brute_force_orbit_fill(UNIT, 3) == 27
    assert brute_force_orbit_fill(ROW3, 5) == 4
    assert brute_force_orbit_fill(ROW5, 7) == 18


def test_orbit_fill_with_slack():
    # one slack step: (t+1)^3 a - 3 t (t+1)^2 b + 3 (t+1) t^2 g at t = 1
    inv = invariants(ROW5)
    expect = 8 * inv.alpha - 12 * inv.beta + 6 * inv.gamma
    assert brute_force_orbit_fill(ROW5, 8) == expect
    assert brute_force_orbit_fill(UNIT, 2) == 8


def test_orbit_fill_undersized_box():
    assert brute_force_orbit_fill(ROW5, 6) == 0
