"""The census: every irreducible cube up to grid size N, then NC(n).

Generation sweeps k (triangle scale), (m, n) (norm-form solution), odd d
(plane scale) and the plane solutions (a, b, c); each tuple yields one
cube.  A cube is accepted when it is genuinely new - not in the
generalized orbit of anything already recorded at the same side length -
and when the k = 1 pass could not have produced it (the "exception"
guard: for k > 1 the cube must not have 1 among its k-values).

NC(n) is then a sum of placement counts: each record contributes
(t+1)^3 a - 3t(t+1)^2 b + 3(t+1)t^2 g with t = n - bound_dim, the
inclusion-exclusion of its generalized orbit sliding inside {0..n}^3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator, Optional

from .diophantine import (
    NormFormSolution,
    PlaneSolution,
    k_values,
    solve_norm_form,
    solve_three_squares,
)
from .lattice_geometry import Cube, Vec3, build_cube
from .symmetry import InvariantSet, invariants, orbit_classes

CACHE_VERSION = 1


@dataclass(frozen=True)
class CubeRecord:
    side: int
    bound_dim: int
    cube: Cube
    k_values: frozenset[int]
    invariants: InvariantSet
    source: tuple[PlaneSolution, NormFormSolution]


@dataclass
class CubeRegistry:
    """Accepted irreducible cubes plus the claimed-orbit index.

    by_side maps a side length to the octant forms (vertex tuples) of
    every cube in the generalized orbits claimed at that side; a
    candidate is a duplicate iff its octant form is already present.
    """

    n_built: int
    records: list[CubeRecord] = field(default_factory=list)
    by_side: dict[int, set[tuple[Vec3, ...]]] = field(default_factory=dict)

    def claim(self, record: CubeRecord) -> None:
        self.records.append(record)
        claimed = self.by_side.setdefault(record.side, set())
        for cls in orbit_classes(record.cube):
            claimed.add(cls.vertices)

    def is_claimed(self, side: int, octant_cube: Cube) -> bool:
        return octant_cube.vertices in self.by_side.get(side, ())


def _candidate_stream(
    N: int,
) -> Iterator[tuple[int, NormFormSolution, int, PlaneSolution]]:
    """(k, mn, d, sol) tuples in the canonical generation order."""
    for k in k_values(N):
        mns = solve_norm_form(k)
        for mn in mns:
            d = 1
            while d * k <= N:
                for sol in solve_three_squares(d):
                    yield k, mn, d, sol
                d += 2


def _build_one(
    item: tuple[int, NormFormSolution, int, PlaneSolution],
) -> tuple[list[list[int]], list[int]]:
    """Pure per-candidate work: octant cube and its k-values."""
    k, mn, d, sol = item
    cube = build_cube(sol, mn).translate_to_octant()
    return cube.as_lists(), sorted(cube.four_k_values())


def build_irreducible_list(N: int, threads: int = 1) -> CubeRegistry:
    """Registry of all irreducible cubes with side <= N.

    Candidate construction is pure and may be farmed out to worker
    processes; acceptance always runs serially in the canonical order,
    so the result is independent of the thread count.
    """
    if N < 1:
        raise ValueError("N must be positive")
    items = list(_candidate_stream(N))
    if threads > 1 and len(items) > 1:
        with Pool(threads) as pool:
            built = pool.map(_build_one, items, chunksize=max(1, len(items) // (threads * 8)))
    else:
        built = [_build_one(it) for it in items]

    reg = CubeRegistry(n_built=N)
    for (k, mn, d, sol), (cube_lists, fkv) in zip(items, built):
        side = d * k
        if k != 1 and 1 in fkv:
            continue  # already reachable by the k=1 pass
        cube = Cube.from_points(cube_lists)
        if reg.is_claimed(side, cube):
            continue
        assert cube.side == side, "pipeline cube side must equal d*k"
        assert cube.is_irreducible(), "pipeline cube must be irreducible"
        reg.claim(
            CubeRecord(
                side=side,
                bound_dim=cube.bounding_dim(),
                cube=cube,
                k_values=frozenset(fkv),
                invariants=invariants(cube),
                source=(sol, mn),
            )
        )
    return reg


def build_multiples(N: int, reg: CubeRegistry) -> list[CubeRecord]:
    """Dilations j >= 2 of registry records with j * bound_dim <= N.

    Invariants and k-values are recomputed from the dilated cube; they
    do not scale linearly (the dilated cube has slack in its original
    box position, changing the whole orbit structure).
    """
    out = []
    for rec in reg.records:
        j = 2
        while j * rec.bound_dim <= N:
            dil = rec.cube.dilate(j)
            assert dil.bounding_dim() == j * rec.bound_dim
            out.append(
                CubeRecord(
                    side=rec.side * j,
                    bound_dim=j * rec.bound_dim,
                    cube=dil,
                    k_values=frozenset(dil.four_k_values()),
                    invariants=invariants(dil),
                    source=rec.source,
                )
            )
            j += 1
    return out


def placement_count(N: int, d: int, inv: InvariantSet) -> int:
    """Distinct grid positions of a generalized orbit inside {0..N}^3."""
    if N < d:
        raise ValueError("grid size smaller than the cube's bounding box")
    t = N - d
    return (
        (t + 1) ** 3 * inv.alpha
        - 3 * t * (t + 1) ** 2 * inv.beta
        + 3 * (t + 1) * t * t * inv.gamma
    )


def count_cubes(N: int, reg: CubeRegistry, multiples: list[CubeRecord]) -> int:
    """NC(N): lattice cubes with all 8 vertices in {0..N}^3."""
    total = 0
    for rec in reg.records:
        if rec.bound_dim <= N:
            total += placement_count(N, rec.bound_dim, rec.invariants)
    for rec in multiples:
        if rec.bound_dim <= N:
            total += placement_count(N, rec.bound_dim, rec.invariants)
    return total


def sequence(
    N: int, threads: int = 1, registry: Optional[CubeRegistry] = None
) -> list[int]:
    """[NC(1), ..., NC(N)] from a single registry build."""
    if N < 1:
        raise ValueError("N must be positive")
    if registry is None:
        registry = build_irreducible_list(N, threads=threads)
    elif registry.n_built < N:
        raise ValueError("cached registry was built for a smaller N")
    multiples = build_multiples(N, registry)
    return [count_cubes(n, registry, multiples) for n in range(1, N + 1)]


def _record_to_json(rec: CubeRecord) -> dict:
    sol, mn = rec.source
    return {
        "side": rec.side,
        "bound_dim": rec.bound_dim,
        "cube": rec.cube.as_lists(),
        "k_values": sorted(rec.k_values),
        "invariants": list(rec.invariants),
        "source": {
            "a": sol.a,
            "b": sol.b,
            "c": sol.c,
            "d": sol.d,
            "m": mn.m,
            "n": mn.n,
        },
    }


def _record_from_json(data: dict) -> CubeRecord:
    src = data["source"]
    return CubeRecord(
        side=data["side"],
        bound_dim=data["bound_dim"],
        cube=Cube.from_points(data["cube"]),
        k_values=frozenset(data["k_values"]),
        invariants=InvariantSet(*data["invariants"]),
        source=(
            PlaneSolution(src["a"], src["b"], src["c"], src["d"]),
            NormFormSolution(src["m"], src["n"]),
        ),
    )


def save_registry(reg: CubeRegistry, path: str | Path) -> None:
    records = sorted(
        reg.records, key=lambda r: (r.side, r.bound_dim, r.cube.vertices)
    )
    doc = {
        "version": CACHE_VERSION,
        "N": reg.n_built,
        "records": [_record_to_json(r) for r in records],
    }
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")


def load_registry(path: str | Path, N: int) -> Optional[CubeRegistry]:
    """Registry from cache if present, valid, and built for at least N."""
    p = Path(path)
    if not p.is_file():
        return None
    try:
        doc = json.loads(p.read_text())
        if doc.get("version") != CACHE_VERSION or doc.get("N", 0) < N:
            return None
        records = [_record_from_json(r) for r in doc["records"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError):
        return None
    reg = CubeRegistry(n_built=doc["N"])
    for rec in records:
        reg.claim(rec)
    return reg
