"""The acceptance suite, as plain callables.

Each check returns (name, ok, detail).  The same functions back the pytest
acceptance module and the CLI `selftest` verb, so the repository verifies
itself without a test harness.  All checks are exact; sizes follow the
stated criteria.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import graphcalc
from .braidcore import BandRepresentation, BraidWord, EmbeddedBand, beta, permutation_cycles
from .constructions import expand_bands, nabla, pad_into_nabla, q_rep, verify_fiber
from .errors import FiberVerificationFailed
from .invariants import (
    alexander_from_braid,
    alexander_from_seifert,
    eq_up_to_units,
    seifert_matrix,
)
from .qpize import quasipositize, quasipositize_handle_subsurface
from .sampling import (
    random_band_representation,
    random_connected_quasipositive,
    random_full_graph,
    random_graph_mixed_fullness,
    random_fine_handle_subset,
)
from .surface import BraidedSurface, euler_characteristic, handle_spine, summary


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def check_chi_identity() -> CheckResult:
    """Criterion 1: chi(S(q_n)) = 1 - (n-1)^2 = chi(S(nabla_n)) for n = 2..6."""
    failures = []
    for n in range(2, 7):
        want = 1 - (n - 1) ** 2
        chi_q = euler_characteristic(BraidedSurface(q_rep(n)))
        chi_nab = euler_characteristic(BraidedSurface(nabla(n)))
        if not (chi_q == want == chi_nab):
            failures.append(f"n={n}: q {chi_q}, nabla {chi_nab}, want {want}")
    return CheckResult("chi-identity", not failures, "; ".join(failures) or "n=2..6 exact")


def check_fiber_agreement() -> CheckResult:
    """Criterion 2: verify_fiber passes for n = 2, 3, 4."""
    try:
        for n in (2, 3, 4):
            verify_fiber(n)
    except FiberVerificationFailed as exc:
        return CheckResult("fiber-agreement", False, str(exc))
    return CheckResult("fiber-agreement", True, "components and Alexander agree for n=2,3,4")


def check_cross_oracle(seed: int = 20603) -> CheckResult:
    """Criterion 3: Seifert and Burau routes agree on 200 connected samples."""
    rng = random.Random(seed)
    failures = []
    for trial in range(200):
        rep = random_connected_quasipositive(rng, max_strands=4, max_bands=5)
        via_seifert = alexander_from_seifert(seifert_matrix(rep))
        via_burau = alexander_from_braid(beta(rep))
        if not eq_up_to_units(via_seifert, via_burau):
            failures.append(f"trial {trial}: {rep.to_json()}")
    return CheckResult(
        "cross-oracle-alexander", not failures, "; ".join(failures[:3]) or "200/200 agree"
    )


def _all_positive_words(max_strands: int, max_length: int):
    for n in range(2, max_strands + 1):
        for length in range(max_length + 1):
            for combo in itertools.product(range(1, n), repeat=length):
                yield BraidWord(n, tuple((i, 1) for i in combo))


def check_pad_pipeline() -> CheckResult:
    """Criterion 4: pad_into_nabla gives full graphs presenting S(p)."""
    failures = 0
    count = 0
    for word in _all_positive_words(4, 6):
        count += 1
        n, graph = pad_into_nabla(word)
        want = summary(
            BraidedSurface(
                BandRepresentation(n, tuple(EmbeddedBand(i, i + 1, 1) for i, _ in word.letters))
            )
        )
        if not graphcalc.is_full(graph) or graphcalc.neighborhood_summary(graph) != want:
            failures += 1
    return CheckResult(
        "pad-into-nabla", failures == 0, f"{count - failures}/{count} positive words (m<=4, len<=6)"
    )


def check_expand_pipeline(seed: int = 20604) -> CheckResult:
    """Criterion 5: expand_bands gives positive words and full matching graphs."""
    rng = random.Random(seed)
    failures = []
    for trial in range(200):
        rep = random_band_representation(
            rng, max_strands=5, max_bands=5, positive_only=True, min_strands=2
        )
        word, graph = expand_bands(rep)
        ok = (
            word.is_positive()
            and graphcalc.is_full(graph)
            and graphcalc.neighborhood_summary(graph) == summary(BraidedSurface(rep))
        )
        if not ok:
            failures.append(f"trial {trial}: {rep.to_json()}")
    return CheckResult(
        "expand-bands", not failures, "; ".join(failures[:3]) or "200/200 representations"
    )


def check_self_calibration(seed: int = 20605) -> CheckResult:
    """Criterion 6: full-spine neighborhoods match the surface summary."""
    rng = random.Random(seed)
    failures = []
    for trial in range(300):
        rep = random_band_representation(rng, max_strands=5, max_bands=6)
        surface = BraidedSurface(rep)
        spine = handle_spine(surface, range(1, len(rep.bands) + 1))
        if graphcalc.neighborhood_summary(spine) != summary(surface):
            failures.append(f"trial {trial}: {rep.to_json()}")
    return CheckResult(
        "self-calibration", not failures, "; ".join(failures[:3]) or "300/300 spines"
    )


def check_whitehead_reduction(seed: int = 20606) -> CheckResult:
    """Criterion 7: reduction terminates, step by step, summary preserved."""
    rng = random.Random(seed)
    failures = []
    for trial in range(200):
        graph = random_full_graph(rng, max_arcs=12, expansions=5)
        start_arcs = graph.total_arcs()
        want = graphcalc.neighborhood_summary(graph)
        steps = 0
        current = graph
        ok = True
        while True:
            sites = graphcalc.eligible_sites(current)
            if not sites:
                break
            nxt = graphcalc.whitehead_step(current, sites[0], check_full=False)
            steps += 1
            if nxt.total_arcs() != current.total_arcs() - 1:
                ok = False
                break
            if graphcalc.neighborhood_summary(nxt) != want:
                ok = False
                break
            if not graphcalc.is_full(nxt):
                ok = False
                break
            current = nxt
        if not ok or steps > start_arcs or graphcalc.eligible_sites(current):
            failures.append(f"trial {trial}")
    return CheckResult(
        "whitehead-reduction", not failures, "; ".join(failures[:3]) or "200/200 graphs"
    )


def check_quasipositize(seed: int = 20607) -> CheckResult:
    """Criterion 8: fiber spines reproduce the fiber; random subsets match."""
    failures = []
    for n in (2, 3):
        result = quasipositize_handle_subsurface(n, range(1, 2 * (n - 1) ** 2 + 1))
        fiber_boundary = len(permutation_cycles(beta(result.output)))
        alexander_ok = eq_up_to_units(
            alexander_from_braid(beta(result.output)),
            alexander_from_braid(beta(nabla(n))),
        )
        if fiber_boundary != n or not alexander_ok:
            failures.append(f"full spine n={n}")
    rng = random.Random(seed)
    for trial in range(100):
        n = 3 if trial % 2 == 0 else 4
        subset = random_fine_handle_subset(rng, 2 * (n - 1) ** 2)
        spine = handle_spine(BraidedSurface(q_rep(n)), subset)
        want = graphcalc.neighborhood_summary(spine)
        result = quasipositize(n, spine)
        if not all(b.sign == 1 for b in result.output.bands) or result.output_summary != want:
            failures.append(f"trial {trial} n={n} subset={subset}")
    return CheckResult(
        "quasipositize", not failures, "; ".join(failures[:3]) or "fiber spines + 100 subsets"
    )


def _bruteforce_is_full(graph) -> bool:
    """Independent fullness check: arc subsets forming cycles, words by stack."""
    index = graphcalc._arc_end_locations(graph)
    tree = graphcalc._host_spanning_tree(graph.host)
    edges = []
    for band in range(1, graph.host.band_count() + 1):
        i_side = index.get((band, "i"), [])
        j_side = index.get((band, "j"), [])
        r = len(i_side)
        for p in range(r):
            ni = (i_side[p][0], i_side[p][1])
            nj = (j_side[r - 1 - p][0], j_side[r - 1 - p][1])
            edges.append((band, ni, nj))
    m = len(edges)
    for mask in range(1, 1 << m):
        chosen = [edges[e] for e in range(m) if mask >> e & 1]
        degree: dict = {}
        for band, ni, nj in chosen:
            degree[ni] = degree.get(ni, 0) + 1
            degree[nj] = degree.get(nj, 0) + 1
        if any(d != 2 for d in degree.values()):
            continue
        # connected?
        nodes = sorted(degree)
        reached = {nodes[0]}
        frontier = [nodes[0]]
        adj: dict = {}
        for eidx, (band, ni, nj) in enumerate(chosen):
            adj.setdefault(ni, []).append((eidx, nj))
            adj.setdefault(nj, []).append((eidx, ni))
        while frontier:
            node = frontier.pop()
            for _, other in adj[node]:
                if other not in reached:
                    reached.add(other)
                    frontier.append(other)
        if reached != set(nodes):
            continue
        # walk the cycle, collect the word
        start = nodes[0]
        word = []
        node = start
        used = set()
        while True:
            eidx, other = next(
                (e, o) for e, o in adj[node] if e not in used
            )
            used.add(eidx)
            band, ni, nj = chosen[eidx]
            direction = 1 if node == ni else -1
            if band not in tree:
                word.append((band, direction))
            node = other
            if node == start and len(used) == len(chosen):
                break
            if node == start and len(used) < len(chosen):
                break  # not a single cycle after all
        if len(used) < len(chosen):
            continue
        stack = []
        for letter in word:
            if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
                stack.pop()
            else:
                stack.append(letter)
        while len(stack) >= 2 and stack[0][0] == stack[-1][0] and stack[0][1] == -stack[-1][1]:
            stack = stack[1:-1]
        if not stack:
            return False
    return True


def check_fullness_detector(seed: int = 20608) -> CheckResult:
    """Criterion 9: bigon/spine sanity plus brute-force agreement."""
    failures = []
    host = BraidedSurface(BandRepresentation(2, (EmbeddedBand(1, 2, 1), EmbeddedBand(1, 2, 1))))
    bigon = graphcalc.CombedGraph(
        host,
        (
            (graphcalc.Comb((graphcalc.ArcEnd(1, 0), graphcalc.ArcEnd(1, 1))),),
            (graphcalc.Comb((graphcalc.ArcEnd(1, 0), graphcalc.ArcEnd(1, 1))),),
        ),
    )
    if graphcalc.is_full(bigon):
        failures.append("bigon judged full")
    rng = random.Random(seed)
    for trial in range(100):
        rep = random_band_representation(rng, max_strands=5, max_bands=6)
        spine = handle_spine(BraidedSurface(rep), range(1, len(rep.bands) + 1))
        if not graphcalc.is_full(spine):
            failures.append(f"spine trial {trial} judged not full")
    for trial in range(100):
        graph = random_graph_mixed_fullness(rng)
        if graphcalc.is_full(graph) != _bruteforce_is_full(graph):
            failures.append(f"brute-force disagreement at trial {trial}")
    return CheckResult(
        "fullness-detector", not failures, "; ".join(failures[:3]) or "bigon + spines + 100 random"
    )


def run_all(seed: int = 20600) -> list[CheckResult]:
    return [
        check_chi_identity(),
        check_fiber_agreement(),
        check_cross_oracle(seed + 3),
        check_pad_pipeline(),
        check_expand_pipeline(seed + 5),
        check_self_calibration(seed + 6),
        check_whitehead_reduction(seed + 7),
        check_quasipositize(seed + 8),
        check_fullness_detector(seed + 9),
    ]
