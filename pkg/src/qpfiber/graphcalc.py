"""Combed graphs on braided surfaces.

A combed graph meets every 0-handle in combs (a vertical spine with
horizontal teeth, listed bottom to top) and isolated points, and every
1-handle in arcs parallel to its core.  Components stack vertically inside
a disk, so enumerating a disk's teeth component by component runs bottom to
top; the teeth entering one attaching arc occupy its slots 0..r-1 in that
order.  Arcs through a band pair slot p on the i side with slot r-1-p on
the j side: the half-twist reverses the transverse order.  The pairing is
structural (never stored), and the face-tracing conventions below are
validated against the independent permutation-cycle boundary count by the
self-calibration suite, not assumed.

Face tracing walks the boundary of a regular neighborhood with two tokens
per arc end: the strand entering the band just above a tooth, and the
strand leaving it just below.  Inside a comb the walk drops one tooth
cyclically (skipping teeth that end on the surface boundary); through a
band it jumps to the paired arc end.  Orbits of this successor map are the
boundary circles of components containing at least one arc; arc-free
components are disks.
"""

from __future__ import annotations

from dataclasses import dataclass
from .braidcore import BandRepresentation
from .errors import (
    CycleEnumerationBudgetExceeded,
    InternalError,
    InvalidGraph,
    NotFull,
    SiteNotEligible,
)
from .surface import BraidedSurface, SurfaceSummary

DEFAULT_CYCLE_BUDGET = 100_000


@dataclass(frozen=True)
class ArcEnd:
    """A tooth continuing into an arc through 1-handle `band`, at `slot`."""

    band: int
    slot: int


@dataclass(frozen=True)
class FreeEnd:
    """A tooth ending on the boundary of the host surface."""


@dataclass(frozen=True)
class Comb:
    """Teeth bottom to top; at least one."""

    teeth: tuple

    def __post_init__(self):
        object.__setattr__(self, "teeth", tuple(self.teeth))


@dataclass(frozen=True)
class IsolatedPoint:
    """A single point of the graph in the interior of a 0-handle."""


@dataclass(frozen=True)
class CombedGraph:
    """A combed graph; `disks[s-1]` lists disk s's components bottom to top."""

    host: BraidedSurface
    disks: tuple

    def __post_init__(self):
        object.__setattr__(self, "disks", tuple(tuple(comps) for comps in self.disks))

    # -- bookkeeping ------------------------------------------------------

    def arc_count(self, band: int) -> int:
        count = 0
        i_disk = self.host.bands[band - 1].i
        for comp in self.disks[i_disk - 1]:
            if isinstance(comp, Comb):
                count += sum(
                    1 for tooth in comp.teeth if isinstance(tooth, ArcEnd) and tooth.band == band
                )
        return count

    def total_arcs(self) -> int:
        return sum(self.arc_count(t) for t in range(1, self.host.band_count() + 1))

    def has_free_ends(self) -> bool:
        for comps in self.disks:
            for comp in comps:
                if isinstance(comp, Comb) and any(isinstance(x, FreeEnd) for x in comp.teeth):
                    return True
        return False

    def arcs(self) -> list[tuple[int, int, int]]:
        """All arcs as (band, i-slot, j-slot), sorted."""
        out = []
        for band in range(1, self.host.band_count() + 1):
            r = self.arc_count(band)
            out.extend((band, p, r - 1 - p) for p in range(r))
        return out

    def to_json(self) -> dict:
        disks = []
        for comps in self.disks:
            doc = []
            for comp in comps:
                if isinstance(comp, IsolatedPoint):
                    doc.append({"point": True})
                else:
                    teeth = []
                    for tooth in comp.teeth:
                        if isinstance(tooth, FreeEnd):
                            teeth.append({"free_end": True})
                        else:
                            teeth.append({"arc_end": [tooth.band, tooth.slot]})
                    doc.append({"comb": teeth})
            disks.append(doc)
        return {
            "host": self.host.to_json(),
            "disks": disks,
            "arcs": [list(a) for a in self.arcs()],
        }

    @staticmethod
    def from_json(doc: dict) -> "CombedGraph":
        try:
            host = BraidedSurface(BandRepresentation.from_json(doc["host"]))
            disks = []
            for comps in doc["disks"]:
                row = []
                for comp in comps:
                    if comp.get("point"):
                        row.append(IsolatedPoint())
                    else:
                        teeth = []
                        for tooth in comp["comb"]:
                            if tooth.get("free_end"):
                                teeth.append(FreeEnd())
                            else:
                                band, slot = tooth["arc_end"]
                                teeth.append(ArcEnd(int(band), int(slot)))
                        row.append(Comb(tuple(teeth)))
                disks.append(tuple(row))
            graph = CombedGraph(host, tuple(disks))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InvalidGraph(f"malformed combed graph document: {exc}") from exc
        problems = validate(graph)
        if problems:
            raise InvalidGraph("; ".join(problems))
        if "arcs" in doc:
            stated = sorted(tuple(int(x) for x in arc) for arc in doc["arcs"])
            if stated != graph.arcs():
                raise InvalidGraph("stated arcs are not the order-reversing pairing of the teeth")
        return graph


# A tooth location: (disk, component index, tooth index), all 0-based except disk.
Location = tuple[int, int, int]


def _tooth_at(graph: CombedGraph, loc: Location):
    disk, ci, ti = loc
    return graph.disks[disk - 1][ci].teeth[ti]


def _arc_end_locations(graph: CombedGraph) -> dict[tuple[int, str], list[Location]]:
    """Per (band, side) the arc-end locations in global (bottom-to-top) order."""
    index: dict[tuple[int, str], list[Location]] = {}
    for disk, comps in enumerate(graph.disks, start=1):
        for ci, comp in enumerate(comps):
            if not isinstance(comp, Comb):
                continue
            for ti, tooth in enumerate(comp.teeth):
                if isinstance(tooth, ArcEnd):
                    band = graph.host.bands[tooth.band - 1]
                    side = "i" if disk == band.i else "j"
                    index.setdefault((tooth.band, side), []).append((disk, ci, ti))
    return index


def validate(graph: CombedGraph) -> list[str]:
    """All structural invariants; returns a list of violations (empty = ok)."""
    problems = []
    host = graph.host
    if len(graph.disks) != host.strands:
        return [f"graph lists {len(graph.disks)} disks for a {host.strands}-strand host"]
    k = host.band_count()
    for disk, comps in enumerate(graph.disks, start=1):
        for ci, comp in enumerate(comps):
            if isinstance(comp, IsolatedPoint):
                continue
            if not isinstance(comp, Comb):
                problems.append(f"disk {disk} component {ci} is not a comb or point")
                continue
            if not comp.teeth:
                problems.append(f"disk {disk} component {ci} is an empty comb")
            for ti, tooth in enumerate(comp.teeth):
                if isinstance(tooth, FreeEnd):
                    continue
                if not isinstance(tooth, ArcEnd):
                    problems.append(f"disk {disk} component {ci} tooth {ti} has unknown type")
                    continue
                if not 1 <= tooth.band <= k:
                    problems.append(f"tooth references 1-handle {tooth.band} outside 1..{k}")
                    continue
                band = host.bands[tooth.band - 1]
                if disk not in (band.i, band.j):
                    problems.append(
                        f"disk {disk} tooth enters 1-handle {tooth.band} joining {band.i},{band.j}"
                    )
    if problems:
        return problems
    # teeth of one comb entering one attaching arc must be consecutive
    for disk, comps in enumerate(graph.disks, start=1):
        for ci, comp in enumerate(comps):
            if not isinstance(comp, Comb):
                continue
            last_seen: dict[int, int] = {}
            for ti, tooth in enumerate(comp.teeth):
                if not isinstance(tooth, ArcEnd):
                    continue
                if tooth.band in last_seen and last_seen[tooth.band] != ti - 1:
                    problems.append(
                        f"disk {disk} component {ci}: teeth into 1-handle {tooth.band} are not consecutive"
                    )
                last_seen[tooth.band] = ti
    index = _arc_end_locations(graph)
    for band in range(1, k + 1):
        i_side = index.get((band, "i"), [])
        j_side = index.get((band, "j"), [])
        if len(i_side) != len(j_side):
            problems.append(
                f"1-handle {band} has {len(i_side)} arc ends on the i side, {len(j_side)} on the j side"
            )
            continue
        for side, locs in (("i", i_side), ("j", j_side)):
            slots = [_tooth_at(graph, loc).slot for loc in locs]
            if slots != list(range(len(locs))):
                problems.append(
                    f"1-handle {band} {side}-side slots are {slots}, expected 0..{len(locs) - 1} in vertical order"
                )
    return problems


def _require_valid(graph: CombedGraph):
    problems = validate(graph)
    if problems:
        raise InvalidGraph("; ".join(problems))


# ---------------------------------------------------------------------------
# Regular-neighborhood summaries (ribbon-graph face tracing)


def _component_roots(graph: CombedGraph, index):
    """Union-find over (disk, comp) nodes along the arcs."""
    nodes = [
        (disk, ci)
        for disk, comps in enumerate(graph.disks, start=1)
        for ci in range(len(comps))
    ]
    parent = {node: node for node in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for band in range(1, graph.host.band_count() + 1):
        i_side = index.get((band, "i"), [])
        j_side = index.get((band, "j"), [])
        r = len(i_side)
        for p in range(r):
            a = i_side[p]
            b = j_side[r - 1 - p]
            ra, rb = find((a[0], a[1])), find((b[0], b[1]))
            if ra != rb:
                parent[ra] = rb
    return nodes, find


def neighborhood_summary(graph: CombedGraph) -> SurfaceSummary:
    """Homeomorphism type of a regular neighborhood of the graph."""
    _require_valid(graph)
    index = _arc_end_locations(graph)
    nodes, find = _component_roots(graph, index)

    # mate of an arc-end location through its band
    mate: dict[Location, Location] = {}
    for band in range(1, graph.host.band_count() + 1):
        i_side = index.get((band, "i"), [])
        j_side = index.get((band, "j"), [])
        r = len(i_side)
        for p in range(r):
            mate[i_side[p]] = j_side[r - 1 - p]
            mate[j_side[r - 1 - p]] = i_side[p]

    def comb_predecessor(loc: Location) -> Location:
        """Next arc end reached inside the comb: drop one tooth cyclically."""
        disk, ci, ti = loc
        teeth = graph.disks[disk - 1][ci].teeth
        m = len(teeth)
        step = (ti - 1) % m
        while not isinstance(teeth[step], ArcEnd):
            step = (step - 1) % m
        return (disk, ci, step)

    orbits_per_root: dict = {}
    seen: set[tuple[str, Location]] = set()
    for start_loc in mate:
        for phase in ("A", "B"):
            token = (phase, start_loc)
            if token in seen:
                continue
            root = find((start_loc[0], start_loc[1]))
            orbits_per_root[root] = orbits_per_root.get(root, 0) + 1
            while token not in seen:
                seen.add(token)
                ph, loc = token
                if ph == "A":
                    token = ("B", mate[loc])
                else:
                    token = ("A", comb_predecessor(loc))

    node_count: dict = {}
    arc_count: dict = {}
    for node in nodes:
        root = find(node)
        node_count[root] = node_count.get(root, 0) + 1
    for band in range(1, graph.host.band_count() + 1):
        for loc in index.get((band, "i"), []):
            root = find((loc[0], loc[1]))
            arc_count[root] = arc_count.get(root, 0) + 1

    components = []
    for root, vertices in node_count.items():
        edges = arc_count.get(root, 0)
        chi = vertices - edges
        boundary = orbits_per_root.get(root, 0)
        if edges == 0:
            assert vertices == 1 and boundary == 0
            boundary = 1
        components.append((chi, boundary))
    return SurfaceSummary.from_components(components)


# ---------------------------------------------------------------------------
# Fullness via cycle words in the free group on co-tree 1-handles


def _host_spanning_tree(host: BraidedSurface) -> set[int]:
    """Band heights forming the spanning forest of the handle graph."""
    parent = list(range(host.strands + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = set()
    for pos, band in enumerate(host.bands, start=1):
        ri, rj = find(band.i), find(band.j)
        if ri != rj:
            parent[ri] = rj
            tree.add(pos)
    return tree


def _free_reduce(word: list[tuple[int, int]]) -> list[tuple[int, int]]:
    stack: list[tuple[int, int]] = []
    for letter in word:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return stack


def _cyclic_reduce(word: list[tuple[int, int]]) -> list[tuple[int, int]]:
    word = _free_reduce(word)
    while len(word) >= 2 and word[0][0] == word[-1][0] and word[0][1] == -word[-1][1]:
        word = word[1:-1]
    return word


def _simple_cycles(graph: CombedGraph, budget: int):
    """Vertex-simple cycles of the comb/arc multigraph, as edge lists.

    Edges are (arc_id, node_i, node_j) with arc_id = (band, i-slot); a cycle
    is reported once, as a list of (arc_id, direction) with direction +1 for
    an i-to-j traversal.
    """
    index = _arc_end_locations(graph)
    edges = []
    for band in range(1, graph.host.band_count() + 1):
        i_side = index.get((band, "i"), [])
        j_side = index.get((band, "j"), [])
        r = len(i_side)
        for p in range(r):
            ni = (i_side[p][0], i_side[p][1])
            nj = (j_side[r - 1 - p][0], j_side[r - 1 - p][1])
            edges.append(((band, p), ni, nj))
    incidence: dict = {}
    for eid, (arc_id, ni, nj) in enumerate(edges):
        incidence.setdefault(ni, []).append((eid, nj, 1))
        incidence.setdefault(nj, []).append((eid, ni, -1))

    nodes = sorted(incidence)
    cycles = []
    steps = 0

    def explore(root, node, used_edges, path, first_eid):
        nonlocal steps
        steps += 1
        if steps > 100 * budget:
            raise CycleEnumerationBudgetExceeded(
                f"cycle enumeration exceeded {budget} cycles (step cap)"
            )
        for eid, other, direction in incidence.get(node, []):
            if eid in used_edges:
                continue
            if other == root:
                if eid > first_eid:
                    cycles.append(path + [(edges[eid][0], direction)])
                    if len(cycles) > budget:
                        raise CycleEnumerationBudgetExceeded(
                            f"more than {budget} simple cycles"
                        )
                continue
            if other < root or other in on_path:
                continue
            on_path.add(other)
            used_edges.add(eid)
            explore(root, other, used_edges, path + [(edges[eid][0], direction)], first_eid)
            used_edges.discard(eid)
            on_path.discard(other)

    for root in nodes:
        for eid, other, direction in incidence[root]:
            if other < root or other == root:
                continue
            on_path = {other}
            explore(root, other, {eid}, [(edges[eid][0], direction)], eid)
    return cycles


def cycle_words(graph: CombedGraph, budget: int = DEFAULT_CYCLE_BUDGET) -> list[list[tuple[int, int]]]:
    """Cyclically reduced word, over co-tree 1-handles, of every simple cycle.

    Letters are (band height, sign); the host's fundamental group is free on
    the co-tree bands of its handle graph, so a cycle bounds a disk exactly
    when its word is empty.
    """
    _require_valid(graph)
    tree = _host_spanning_tree(graph.host)
    words = []
    for cycle in _simple_cycles(graph, budget):
        word = [(band, direction) for (band, _slot), direction in cycle if band not in tree]
        words.append(_cyclic_reduce(word))
    return words


def is_full(graph: CombedGraph, budget: int = DEFAULT_CYCLE_BUDGET) -> bool:
    """True iff no simple cycle of the graph bounds a disk on the host."""
    return all(word for word in cycle_words(graph, budget))


# ---------------------------------------------------------------------------
# Whitehead moves


@dataclass(frozen=True)
class Site:
    """A move site: teeth (tooth, tooth+1) of one comb, entering one band."""

    disk: int
    component: int
    tooth: int

    def to_json(self):
        return [self.disk, self.component, self.tooth]


def eligible_sites(graph: CombedGraph) -> list[Site]:
    """Sites where a comb has vertically adjacent teeth in one attaching arc."""
    sites = []
    for disk, comps in enumerate(graph.disks, start=1):
        for ci, comp in enumerate(comps):
            if not isinstance(comp, Comb):
                continue
            for ti in range(len(comp.teeth) - 1):
                a, b = comp.teeth[ti], comp.teeth[ti + 1]
                if isinstance(a, ArcEnd) and isinstance(b, ArcEnd) and a.band == b.band:
                    sites.append(Site(disk, ci, ti))
    return sites


def whitehead_step(graph: CombedGraph, site: Site, check_full: bool = True) -> CombedGraph:
    """One Whitehead move: two parallel arcs become one, far combs merge.

    Preserves the regular-neighborhood summary and fullness; drops the arc
    count by exactly one.
    """
    _require_valid(graph)
    try:
        comp = graph.disks[site.disk - 1][site.component]
    except IndexError as exc:
        raise SiteNotEligible(f"no component at {site}") from exc
    if not isinstance(comp, Comb):
        raise SiteNotEligible("site component is an isolated point")
    if site.tooth + 1 >= len(comp.teeth):
        raise SiteNotEligible("site names a tooth without an upper neighbor")
    lower, upper = comp.teeth[site.tooth], comp.teeth[site.tooth + 1]
    if not (isinstance(lower, ArcEnd) and isinstance(upper, ArcEnd)):
        raise SiteNotEligible("site teeth are not both arc ends")
    if lower.band != upper.band:
        raise SiteNotEligible("site teeth enter different 1-handles")
    band = lower.band
    if upper.slot != lower.slot + 1:
        raise SiteNotEligible("site teeth do not hold adjacent slots")
    if check_full and not is_full(graph):
        raise NotFull("Whitehead moves require a full graph")

    host = graph.host
    r = graph.arc_count(band)
    p = lower.slot
    hostband = host.bands[band - 1]
    near_disk = site.disk
    far_disk = hostband.j if near_disk == hostband.i else hostband.i
    index = _arc_end_locations(graph)
    near_side = "i" if near_disk == hostband.i else "j"
    far_side = "j" if near_side == "i" else "i"
    far_locs = index[(band, far_side)]
    keep_far = far_locs[r - 1 - p]      # far end of the kept (lower-near) arc
    drop_far = far_locs[r - 2 - p]      # far end of the removed (upper-near) arc
    if (keep_far[0], keep_far[1]) == (drop_far[0], drop_far[1]):
        raise SiteNotEligible("far ends share a comb; the merge would close a cycle")

    comb_b_idx, comb_a_idx = drop_far[1], keep_far[1]
    disk_comps = list(graph.disks[far_disk - 1])
    comb_b, comb_a = disk_comps[comb_b_idx], disk_comps[comb_a_idx]
    if comb_b_idx > comb_a_idx:
        raise InvalidGraph("far arc ends out of vertical order")
    if drop_far[2] != len(comb_b.teeth) - 1:
        raise InvalidGraph("removed far end is not the top tooth of its comb")
    if keep_far[2] != 0:
        raise InvalidGraph("kept far end is not the bottom tooth of its comb")
    for between in disk_comps[comb_b_idx + 1 : comb_a_idx]:
        if not isinstance(between, IsolatedPoint):
            raise InvalidGraph("a comb separates the two far combs")

    merged = Comb(tuple(comb_b.teeth[:-1]) + tuple(comb_a.teeth))

    def renumber(tooth, disk):
        if not isinstance(tooth, ArcEnd) or tooth.band != band:
            return tooth
        side = "i" if disk == hostband.i else "j"
        gone = p + 1 if side == near_side else r - 2 - p
        return ArcEnd(band, tooth.slot - 1 if tooth.slot > gone else tooth.slot)

    new_disks = []
    for disk, comps in enumerate(graph.disks, start=1):
        row = []
        for ci, item in enumerate(comps):
            if disk == near_disk and ci == site.component:
                teeth = tuple(x for ti, x in enumerate(item.teeth) if ti != site.tooth + 1)
                row.append(Comb(tuple(renumber(x, disk) for x in teeth)))
            elif disk == far_disk and ci == comb_b_idx:
                row.append(Comb(tuple(renumber(x, disk) for x in merged.teeth)))
            elif disk == far_disk and ci == comb_a_idx:
                continue  # absorbed into the merge
            elif isinstance(item, Comb):
                row.append(Comb(tuple(renumber(x, disk) for x in item.teeth)))
            else:
                row.append(item)
        new_disks.append(tuple(row))
    result = CombedGraph(host, tuple(new_disks))

    problems = validate(result)
    if problems:
        raise InternalError(f"Whitehead move produced an invalid graph: {problems}")
    if result.total_arcs() != graph.total_arcs() - 1:
        raise InternalError("Whitehead move did not drop the arc count by one")
    if neighborhood_summary(result) != neighborhood_summary(graph):
        raise InternalError("Whitehead move changed the neighborhood summary")
    return result


def reduce(graph: CombedGraph, budget: int = DEFAULT_CYCLE_BUDGET) -> CombedGraph:
    """Apply Whitehead moves at the least eligible site until none remains."""
    return reduce_with_trace(graph, budget)[0]


def reduce_with_trace(
    graph: CombedGraph, budget: int = DEFAULT_CYCLE_BUDGET
) -> tuple[CombedGraph, list[Site]]:
    _require_valid(graph)
    if not is_full(graph, budget):
        raise NotFull("reduce requires a full graph")
    trace: list[Site] = []
    limit = graph.total_arcs()
    current = graph
    while True:
        sites = eligible_sites(current)
        if not sites:
            return current, trace
        if len(trace) >= limit:
            raise InternalError("reduction failed to terminate within the arc budget")
        site = sites[0]
        current = whitehead_step(current, site, check_full=False)
        trace.append(site)
