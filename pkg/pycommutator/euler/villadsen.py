# ------------------------------------------------------------------------------
#  Copyright 2022 Upstream Data Inc                                            -
#                                                                              -
#  Licensed under the Apache License, Version 2.0 (the "License");             -
#  you may not use this file except in compliance with the License.            -
#  You may obtain a copy of the License at                                     -
#                                                                              -
#      http://www.apache.org/licenses/LICENSE-2.0                              -
#                                                                              -
#  Unless required by applicable law or agreed to in writing, software         -
#  distributed under the License is distributed on an "AS IS" BASIS,           -
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.    -
#  See the License for the specific language governing permissions and         -
#  limitations under the License.                                              -
# ------------------------------------------------------------------------------

import itertools
import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import yaml

from pycommutator.errors import DimensionError
from pycommutator.euler.bott import SpherePoint
from pycommutator.euler.cohomology import (
    BundleSpec,
    EulerCertificate,
    certify_cm_failure,
)
from pycommutator.settings import CommutatorSettings

GRID_MESH = Fraction(1, 2)


class _RationalEnumeration:
    """Q listed by height max(|p|, q): 0, 1, -1, 2, -2, 1/2, -1/2, 3, ..."""

    def __init__(self):
        self._values: List[Fraction] = [Fraction(0)]
        self._height = 0

    def _grow(self):
        self._height += 1
        h = self._height
        for q in range(1, h + 1):
            for p in range(1, h + 1):
                if max(p, q) == h and math.gcd(p, q) == 1:
                    self._values.extend((Fraction(p, q), Fraction(-p, q)))

    def __getitem__(self, index: int) -> Fraction:
        while index >= len(self._values):
            self._grow()
        return self._values[index]


_RATIONALS = _RationalEnumeration()


def unpair(index: int) -> Tuple[int, int]:
    """Inverse of the square-shell pairing (a, b) -> max^2 + max + a - b."""
    shell = math.isqrt(index)
    offset = index - shell * shell
    if offset < shell:
        return offset, shell
    return shell, shell * shell + 2 * shell - index


def dense_point(index: int) -> SpherePoint:
    """D_index: the stereographic image of the index-th pair of rationals."""
    a, b = unpair(index)
    return SpherePoint.stereographic(_RATIONALS[a], _RATIONALS[b])


def _slot_of_position(p: int) -> int:
    """Bit 0 and bit 1 feed slot 0; bit p >= 2 feeds slot v_2(p - 1)."""
    if p < 2:
        return 0
    q = p - 1
    return (q & -q).bit_length() - 1


def _slot_positions(slot: int) -> Iterator[int]:
    for p in itertools.count():
        if _slot_of_position(p) == slot:
            yield p


def slot_indices(r: int, slots: int) -> List[int]:
    """De-interleave the bits of r into one dense-set index per slot."""
    indices = [0] * slots
    filled = [0] * slots
    for p in range(r.bit_length()):
        slot = _slot_of_position(p)
        if slot < slots and (r >> p) & 1:
            indices[slot] |= 1 << filled[slot]
        if slot < slots:
            filled[slot] += 1
    return indices


def spread(slot: int, index: int) -> int:
    """Smallest r whose slot-th de-interleaved index is `index`, all others 0."""
    r = 0
    for p in _slot_positions(slot):
        if not index:
            return r
        if index & 1:
            r |= 1 << p
        index >>= 1
    return r


def first_stage_realizing(indices: Sequence[int]) -> int:
    """Least n whose z_n contains blocks 1..j and gives their first spheres these indices.

    j is len(indices); slot s carries the first sphere of block s + 1.
    """
    j = len(indices)
    r = sum(spread(slot, index) for slot, index in enumerate(indices))
    if r < j - 1:
        # z_{r+1} lacks block j; the lowest bit of slot j leaves slots 0..j-1 unchanged
        r += 1 << next(_slot_positions(j))
    return r + 1


def _grid_cell(point: SpherePoint) -> Tuple[int, int, int]:
    return tuple(min(math.floor(c / GRID_MESH), 1) for c in (point.x, point.y, point.z))


def sphere_cells() -> List[Tuple[int, int, int]]:
    """The 1/2-mesh cubes of [-1, 1]^3 meeting the sphere in positive area."""
    cells = []
    for cell in itertools.product(range(-2, 2), repeat=3):
        low, high = Fraction(0), Fraction(0)
        for c in cell:
            a, b = c * GRID_MESH, (c + 1) * GRID_MESH
            low += 0 if a <= 0 <= b else min(a * a, b * b)
            high += max(a * a, b * b)
        if low < 1 < high:
            cells.append(cell)
    return cells


def first_hits(limit: Optional[int] = None) -> Optional[Dict[Tuple[int, int, int], int]]:
    """First dense-set index landing in each sphere cell, or None past the scan limit."""
    if limit is None:
        limit = CommutatorSettings().schedule_scan_limit
    missing = set(sphere_cells())
    hits = {}
    for index in range(limit):
        cell = _grid_cell(dense_point(index))
        if cell in missing:
            missing.discard(cell)
            hits[cell] = index
            if not missing:
                return hits
    logging.warning(f"{len(missing)} cells - (Dense Point Schedule) - not reached in {limit} points")
    return None


@dataclass(frozen=True)
class PointSchedule:
    """Evaluation points z_1, ..., z_N and the grid coverage of their prefixes.

    Attributes:
        points: z_n as a tuple of sphere points, block 1 first.
        coverage: For j = 1, 2 the first n by which the first sphere
            coordinates of blocks 1..j have visited every pair of grid cells,
            None when the scan limit is reached first.
    """

    points: Tuple[Tuple[SpherePoint, ...], ...]
    coverage: Dict[int, Optional[int]] = field(default_factory=dict)

    def first_coordinates(self, block: int) -> List[SpherePoint]:
        """The first sphere of `block` (1-based) in every z_n that has it."""
        offsets = _block_offsets([len(z) for z in self.points])
        return [z[offsets[block - 1]] for z in self.points[block - 1 :]]

    def as_dict(self) -> dict:
        return {
            "points": [[p.as_list() for p in z] for z in self.points],
            "coverage": {str(j): n for j, n in self.coverage.items()},
        }


def _block_offsets(lengths: Sequence[int]) -> List[int]:
    # z_n holds the blocks 1..n, so consecutive length differences are block sizes
    offsets = [0]
    for length in lengths[:-1]:
        offsets.append(length)
    return offsets


def _slot_layout(ks: Sequence[int]) -> List[List[int]]:
    """Slot of each sphere: first spheres of the blocks take slots 0..N-1."""
    layout = [[b] for b in range(len(ks))]
    next_slot = len(ks)
    for b, k in enumerate(ks):
        for _ in range(1, k):
            layout[b].append(next_slot)
            next_slot += 1
    return layout


def dense_point_schedule(N: int, ks: Sequence[int], limit: Optional[int] = None) -> PointSchedule:
    """Points z_n in the product of the first n blocks, dense in every finite prefix.

    z_n reads the bits of n - 1 through a fixed interleaving, one dense-set
    index per sphere; every finite pattern of indices recurs for infinitely
    many n.

    Parameters:
        N: Number of stages.
        ks: Sphere count k_n of each block.
        limit: Dense-set points scanned when computing the coverage.
    """
    if N < 1 or len(ks) != N or any(k < 1 for k in ks):
        raise DimensionError(f"need N >= 1 positive sphere counts, got N={N}, ks={list(ks)}")
    layout = _slot_layout(ks)
    slots = sum(ks)
    points = []
    for n in range(1, N + 1):
        indices = slot_indices(n - 1, slots)
        z = tuple(dense_point(indices[slot]) for block in layout[:n] for slot in block)
        points.append(z)

    coverage: Dict[int, Optional[int]] = {}
    hits = first_hits(limit)
    # only blocks present in the schedule get a coverage entry
    for j in range(1, min(N, 2) + 1):
        if hits is None:
            coverage[j] = None
            continue
        values = sorted(set(hits.values()))
        coverage[j] = max(first_stage_realizing(c) for c in itertools.product(values, repeat=j))
    return PointSchedule(points=tuple(points), coverage=coverage)


@dataclass(frozen=True)
class StageEmbedding:
    """Stage n of the inductive system.

    Attributes:
        n: Stage number, 1-based.
        k_n: Spheres in the block X_n = (S^2)^{k_n}.
        l_n: Multiplicity of the new tensor projection.
        rank_r_n: Rank 1 + l_1 + ... + l_n of the tracked subprojection.
        dim_Y_n: Real dimension 2 (k_1 + ... + k_n) of the base space.
        z_n: Evaluation point in X_1 x ... x X_n.
        certificate: Obstruction for the cumulative bundle of stages 1..n.
        stage_certificate: Obstruction for stage n alone.
        section_count: The 8m off-diagonal elements the C_m obstruction counts.
    """

    n: int
    k_n: int
    l_n: int
    rank_r_n: int
    dim_Y_n: int
    z_n: Tuple[SpherePoint, ...]
    certificate: EulerCertificate
    stage_certificate: EulerCertificate
    section_count: int

    @property
    def next_multiplicity(self) -> int:
        """l_{n+1}: the tracked rank fixes the next multiplicity."""
        return self.rank_r_n

    @property
    def corner_split(self) -> Tuple[int, int]:
        """Ranks of the corner e_11 and of r_n' = q_1^{l_1} (+) ... (+) q_n^{l_n}, of rank l_1 + ... + l_n."""
        return 1, self.rank_r_n - 1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k_n": self.k_n,
            "l_n": self.l_n,
            "rank_r_n": self.rank_r_n,
            "dim_Y_n": self.dim_Y_n,
            "z_n": [p.as_list() for p in self.z_n],
            "certificate": self.certificate.as_dict(),
            "stage_certificate": self.stage_certificate.as_dict(),
            "next_multiplicity": self.next_multiplicity,
            "corner_split": list(self.corner_split),
            "section_count": self.section_count,
        }


@dataclass(frozen=True)
class VilladsenPlan:
    """A finite prefix of the inductive system failing C_m at every stage."""

    m: int
    stages: Tuple[StageEmbedding, ...]
    schedule: PointSchedule

    @property
    def all_certified(self) -> bool:
        return all(s.certificate.certified and s.stage_certificate.certified for s in self.stages)

    def verify(self) -> bool:
        """Recompute the bookkeeping and every certificate."""
        ks = [s.k_n for s in self.stages]
        expected = _stage_data(self.m, ks)
        for stage, (n, k, l, rank, dim) in zip(self.stages, expected):
            if (stage.n, stage.k_n, stage.l_n, stage.rank_r_n, stage.dim_Y_n) != (n, k, l, rank, dim):
                return False
            if stage.certificate != certify_cm_failure(_cumulative(self.stages[:n]), self.m):
                return False
            if stage.stage_certificate != certify_cm_failure(BundleSpec(((k, l),)), self.m):
                return False
            if not (stage.certificate.verify() and stage.stage_certificate.verify()):
                return False
            if stage.stage_certificate.certified and 8 * self.m * l > k:
                return False
            if len(stage.z_n) != sum(ks[:n]):
                return False
            if stage.section_count != 8 * self.m:
                return False
        return len(self.stages) == len(expected)

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "all_certified": self.all_certified,
            "stages": [s.as_dict() for s in self.stages],
            "schedule_coverage": {str(j): n for j, n in self.schedule.coverage.items()},
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def as_yaml(self) -> str:
        return yaml.dump(self.as_dict(), sort_keys=False)


def _stage_data(m: int, ks: Sequence[int]) -> List[Tuple[int, int, int, int, int]]:
    data = []
    l, rank, spheres = 1, 1, 0
    for n, k in enumerate(ks, start=1):
        rank += l
        spheres += k
        data.append((n, k, l, rank, 2 * spheres))
        l = rank
    return data


def _cumulative(stages: Sequence[StageEmbedding]) -> BundleSpec:
    return BundleSpec(tuple((s.k_n, s.l_n) for s in stages))


def minimal_sphere_counts(m: int, N: int) -> List[int]:
    """k_n = 8m l_n, the least block sizes the Euler argument accepts."""
    return [8 * m * (2 ** (n - 1)) for n in range(1, N + 1)]


def villadsen_plan(m: int, N: int, k: Optional[Sequence[int]] = None) -> VilladsenPlan:
    """Stage bookkeeping and obstructions for the first N stages.

    Parameters:
        m: The C_m property being ruled out.
        N: Number of stages.
        k: Sphere counts k_1..k_N, defaulting to the minimal 8m l_n.
    """
    if m < 1 or N < 1:
        raise DimensionError(f"need m >= 1 and N >= 1, got m={m}, N={N}")
    ks = list(k) if k is not None else minimal_sphere_counts(m, N)
    if len(ks) != N or any(value < 1 for value in ks):
        raise DimensionError(f"need {N} positive sphere counts, got {ks}")
    schedule = dense_point_schedule(N, ks)
    stages: List[StageEmbedding] = []
    cumulative: List[Tuple[int, int]] = []
    for (n, k_n, l_n, rank, dim), z_n in zip(_stage_data(m, ks), schedule.points):
        cumulative.append((k_n, l_n))
        stage = StageEmbedding(
            n=n,
            k_n=k_n,
            l_n=l_n,
            rank_r_n=rank,
            dim_Y_n=dim,
            z_n=z_n,
            certificate=certify_cm_failure(BundleSpec(tuple(cumulative)), m),
            stage_certificate=certify_cm_failure(BundleSpec(((k_n, l_n),)), m),
            section_count=8 * m,
        )
        if not stage.stage_certificate.certified:
            logging.info(f"stage {n} - (Villadsen Plan) - k_n = {k_n} < 8m l_n = {8 * m * l_n}")
        stages.append(stage)
    return VilladsenPlan(m=m, stages=tuple(stages), schedule=schedule)
