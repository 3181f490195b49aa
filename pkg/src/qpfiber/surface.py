"""Braided Seifert surfaces as handle complexes.

S(b) has one 0-handle (disk) per strand and one half-twisted 1-handle per
band, stacked vertically in band order.  Everything topological about S(b)
is read off this data: Euler characteristic (disks minus bands), components
(connectivity of the handle graph), and boundary circles per component
(cycles of the strand permutation of the braid word, attributed to the
component owning their strands).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .braidcore import BandRepresentation, beta, permutation_cycles
from .errors import InvalidParameter


@dataclass(frozen=True)
class BraidedSurface:
    """The braided surface S(rep); bands are 1-handles at heights 1..k."""

    rep: BandRepresentation

    @property
    def strands(self) -> int:
        return self.rep.strands

    @property
    def bands(self):
        return self.rep.bands

    def band_count(self) -> int:
        return len(self.rep.bands)

    def to_json(self) -> dict:
        return self.rep.to_json()

    @staticmethod
    def from_json(doc: dict) -> "BraidedSurface":
        return BraidedSurface(BandRepresentation.from_json(doc))


@dataclass(frozen=True)
class SurfaceSummary:
    """Homeomorphism-type certificate: per-component (chi, boundary circles)."""

    total_chi: int
    components: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(sorted(tuple(c) for c in self.components)))
        if self.total_chi != sum(chi for chi, _ in self.components):
            raise InvalidParameter("total chi does not match component sum")
        for chi, boundary in self.components:
            if chi > 1:
                raise InvalidParameter(f"component chi {chi} exceeds 1")
            if boundary < 1:
                raise InvalidParameter("component with empty boundary")
            genus2 = 2 - chi - boundary
            if genus2 < 0 or genus2 % 2:
                raise InvalidParameter(f"(chi, boundary) = ({chi}, {boundary}) is not an orientable surface")

    def to_json(self) -> dict:
        return {"chi": self.total_chi, "components": [list(c) for c in self.components]}

    @staticmethod
    def from_components(components: Iterable[tuple[int, int]]) -> "SurfaceSummary":
        comps = tuple(components)
        return SurfaceSummary(sum(chi for chi, _ in comps), comps)


def euler_characteristic(surface: BraidedSurface) -> int:
    return surface.strands - surface.band_count()


def summary(surface: BraidedSurface) -> SurfaceSummary:
    """Component-wise (chi, boundary circles) of S(b)."""
    n = surface.strands
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for band in surface.bands:
        ri, rj = find(band.i), find(band.j)
        if ri != rj:
            parent[ri] = rj

    disks: dict[int, int] = {}
    bands: dict[int, int] = {}
    for s in range(1, n + 1):
        disks[find(s)] = disks.get(find(s), 0) + 1
    for band in surface.bands:
        root = find(band.i)
        bands[root] = bands.get(root, 0) + 1

    boundary: dict[int, int] = {}
    for cycle in permutation_cycles(beta(surface.rep)):
        roots = {find(s) for s in cycle}
        assert len(roots) == 1, "a closure component crossed surface components"
        root = roots.pop()
        boundary[root] = boundary.get(root, 0) + 1

    components = []
    for root, disk_count in disks.items():
        chi = disk_count - bands.get(root, 0)
        components.append((chi, boundary[root]))
    return SurfaceSummary.from_components(components)


def handle_spine(surface: BraidedSurface, selected: Iterable[int]):
    """The spine graph of the sub-handle-complex on the selected 1-handles.

    Every 0-handle carries one comb with a tooth per selected incident band
    (an isolated point if none touches it); every selected band carries one
    arc.  Heights order the teeth.
    """
    from . import graphcalc

    chosen = sorted(set(int(t) for t in selected))
    k = surface.band_count()
    for t in chosen:
        if not 1 <= t <= k:
            raise InvalidParameter(f"selected 1-handle {t} out of range 1..{k}")
    disks = []
    for s in range(1, surface.strands + 1):
        teeth = []
        for t in chosen:
            band = surface.bands[t - 1]
            if s in (band.i, band.j):
                teeth.append(graphcalc.ArcEnd(t, 0))
        if teeth:
            disks.append((graphcalc.Comb(tuple(teeth)),))
        else:
            disks.append((graphcalc.IsolatedPoint(),))
    return graphcalc.CombedGraph(surface, tuple(disks))
