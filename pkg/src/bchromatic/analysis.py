"""Structural analysis passes: regularity, short-cycle detection, girth,
diameter, vertex connectivity with a cut certificate, five-cycle statistics,
and the combined hypothesis report that gates the coloring strategies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from collections import deque

from bchromatic.graph_core import CeilingExceeded, Graph, GraphMetadata

# five_cycle_stats enumerates every 5-cycle; refuse beyond this many vertices
FIVE_CYCLE_VERTEX_CEILING = 200

# three-component separator sweep gives up (reports unknown) beyond this many
# candidate subsets
_SEPARATOR_SWEEP_BUDGET = 250_000


def is_regular(g: Graph) -> int | None:
    """The common degree d when every vertex has it, else None.

    The empty graph has no well-defined degree and yields None.
    """
    degs = g.degrees()
    if not degs:
        return None
    d = degs[0]
    return d if all(x == d for x in degs) else None


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically first triangle (a, b, c) with a < b < c, or None."""
    for a in range(g.vertex_count):
        for b in g.adjacency[a]:
            if b <= a:
                continue
            for c in sorted(g.neighbor_sets[a] & g.neighbor_sets[b]):
                if c > b:
                    return (a, b, c)
    return None


def has_triangle(g: Graph) -> bool:
    return find_triangle(g) is not None


def find_four_cycle(g: Graph) -> tuple[int, int, int, int] | None:
    """A 4-cycle in traversal order (u, x, v, y), or None.

    Two vertices with two common neighbors are exactly the witness: u and v
    nonadjacent-or-adjacent ends, x and y their shared neighbors.
    """
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            shared = sorted(g.neighbor_sets[u] & g.neighbor_sets[v])
            if len(shared) >= 2:
                return (u, shared[0], v, shared[1])
    return None


def contains_c4(g: Graph) -> bool:
    return find_four_cycle(g) is not None


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests.

    One BFS per root: every shortest cycle is witnessed from some root by a
    non-tree edge closing at dist[x] + dist[y] + 1.
    """
    best: int | float = math.inf
    n = g.vertex_count
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            if 2 * dist[x] >= best:
                continue
            for y in g.adjacency[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif y != parent[x]:
                    cycle = dist[x] + dist[y] + 1
                    if cycle < best:
                        best = cycle
    return best


def connected_components(g: Graph, removed: frozenset[int] = frozenset()) -> tuple[tuple[int, ...], ...]:
    """Components of g with `removed` vertices deleted, each sorted, ordered
    by smallest member."""
    seen = set(removed)
    comps: list[tuple[int, ...]] = []
    for s in range(g.vertex_count):
        if s in seen:
            continue
        q = deque([s])
        seen.add(s)
        comp = [s]
        while q:
            x = q.popleft()
            for y in g.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    q.append(y)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def _bfs_distances(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[s] = 0
    q = deque([s])
    while q:
        x = q.popleft()
        for y in g.adjacency[x]:
            if dist[y] == -1:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def diameter(g: Graph) -> tuple[int | float, tuple[int, int] | None]:
    """(diameter, witness pair) with the lexicographically smallest witness.

    Disconnected graphs give (inf, cross-component pair); graphs with fewer
    than two vertices give (0, None).
    """
    n = g.vertex_count
    if n <= 1:
        return (0, None)
    dist0 = _bfs_distances(g, 0)
    if -1 in dist0:
        other = dist0.index(-1)
        return (math.inf, (0, other))
    best = -1
    witness = (0, 0)
    for s in range(n):
        dist = _bfs_distances(g, s)
        for t in range(s + 1, n):
            if dist[t] > best:
                best = dist[t]
                witness = (s, t)
    return (best, witness)


@dataclass(frozen=True)
class CutCertificate:
    """Exact vertex connectivity with a witnessing separator.

    components lists the connected components of the graph minus the
    separator, each sorted, ordered by smallest member. Complete graphs use
    the convention kappa = n - 1, separator = all but vertex 0.
    """

    kappa: int
    separator: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


def _min_vertex_cut(g: Graph, s: int, t: int, cap_limit: int) -> tuple[int, tuple[int, ...] | None]:
    """Minimum s-t vertex cut by unit-capacity flow on the split graph.

    Returns (flow, cut) when the flow is exhausted below cap_limit, else
    (cap_limit, None) once the limit is reached (search aborted).
    """
    n = g.vertex_count
    big = n + 1
    # node 2v = v_in, 2v+1 = v_out; source s_out, sink t_in
    cap: dict[int, dict[int, int]] = {}

    def add(u: int, v: int, c: int) -> None:
        cap.setdefault(u, {})[v] = cap.setdefault(u, {}).get(v, 0) + c
        cap.setdefault(v, {}).setdefault(u, 0)

    for v in range(n):
        if v != s and v != t:
            add(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap_limit:
        parent: dict[int, int] = {source: source}
        q = deque([source])
        while q and sink not in parent:
            x = q.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    q.append(y)
        if sink not in parent:
            reach = set(parent)
            cut = tuple(
                v for v in range(n)
                if v != s and v != t and 2 * v in reach and 2 * v + 1 not in reach
            )
            if len(cut) != flow:
                raise AssertionError("min-cut extraction disagrees with flow value")
            return flow, cut
        y = sink
        while y != source:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1
    return flow, None


def vertex_connectivity(g: Graph) -> CutCertificate:
    """Exact kappa with a witnessing separator and the split components.

    Flow-based sweep over all nonadjacent pairs; the returned separator is
    the lexicographically smallest among the minimum cuts the fixed sweep
    materializes.
    """
    n = g.vertex_count
    if n == 0:
        return CutCertificate(0, (), ())
    comps = connected_components(g)
    if len(comps) > 1:
        return CutCertificate(0, (), comps)
    if g.edge_count == n * (n - 1) // 2:
        return CutCertificate(n - 1, tuple(range(1, n)), ((0,),))
    best = n - 1
    cuts: list[tuple[int, ...]] = []
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            flow, cut = _min_vertex_cut(g, s, t, best + 1)
            if cut is not None:
                if flow < best:
                    best = flow
                    cuts = [cut]
                elif flow == best:
                    cuts.append(cut)
    separator = min(c for c in cuts if len(c) == best)
    return CutCertificate(best, separator, connected_components(g, frozenset(separator)))


@dataclass(frozen=True)
class FiveCycleStats:
    """Exact 5-cycle census.

    cycles holds each 5-cycle once, canonically (smallest vertex first, then
    the smaller of its two cycle neighbors). per_edge_count covers every edge
    of the graph, zero included. max_edge_disjoint[e] is the largest family of
    5-cycles through e whose pairwise intersection is exactly e;
    max_path_disjoint does the same for 2-paths keyed (endpoint, midpoint,
    endpoint) with sorted endpoints.
    """

    cycles: tuple[tuple[int, int, int, int, int], ...]
    per_edge_count: dict[tuple[int, int], int]
    max_edge_disjoint: dict[tuple[int, int], int]
    max_path_disjoint: dict[tuple[int, int, int], int]

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)


def _enumerate_five_cycles(g: Graph) -> list[tuple[int, int, int, int, int]]:
    cycles = []
    ns = g.neighbor_sets
    for s in range(g.vertex_count):
        for a in g.adjacency[s]:
            if a <= s:
                continue
            for b in g.adjacency[a]:
                if b <= s:
                    continue
                for c in g.adjacency[b]:
                    if c <= s or c == a:
                        continue
                    for e in g.adjacency[c]:
                        # close the cycle with e adjacent to s; e > a fixes
                        # the traversal direction so each cycle appears once
                        if e > a and e != b and s in ns[e]:
                            cycles.append((s, a, b, c, e))
    return cycles


def _max_compatible(items: list[frozenset[int]], core_size: int) -> int:
    """Largest subfamily whose pairwise intersections have exactly core_size
    vertices (the shared edge or path all of them contain)."""
    m = len(items)
    conflict: list[set[int]] = [set() for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if len(items[i] & items[j]) > core_size:
                conflict[i].add(j)
                conflict[j].add(i)

    def rec(avail: frozenset[int]) -> int:
        if not avail:
            return 0
        v = max(avail, key=lambda x: len(conflict[x] & avail))
        if not (conflict[v] & avail):
            # conflict-free remainder is mutually compatible
            return len(avail)
        with_v = 1 + rec(avail - {v} - conflict[v])
        without_v = rec(avail - {v})
        return max(with_v, without_v)

    return rec(frozenset(range(m)))


def five_cycle_stats(g: Graph) -> FiveCycleStats:
    """Exhaustive 5-cycle statistics; refuses graphs larger than
    FIVE_CYCLE_VERTEX_CEILING vertices."""
    if g.vertex_count > FIVE_CYCLE_VERTEX_CEILING:
        raise CeilingExceeded(
            f"five-cycle enumeration capped at {FIVE_CYCLE_VERTEX_CEILING} vertices, "
            f"got {g.vertex_count}"
        )
    cycles = _enumerate_five_cycles(g)
    per_edge: dict[tuple[int, int], int] = {e: 0 for e in g.edges()}
    by_edge: dict[tuple[int, int], list[int]] = {e: [] for e in per_edge}
    by_path: dict[tuple[int, int, int], list[int]] = {}
    for v in range(g.vertex_count):
        for u, w in combinations(g.adjacency[v], 2):
            by_path[(u, v, w)] = []
    for idx, cyc in enumerate(cycles):
        for i in range(5):
            u, v = cyc[i], cyc[(i + 1) % 5]
            e = (u, v) if u < v else (v, u)
            per_edge[e] += 1
            by_edge[e].append(idx)
            mid = cyc[(i + 1) % 5]
            a, b = cyc[i], cyc[(i + 2) % 5]
            key = (min(a, b), mid, max(a, b))
            by_path[key].append(idx)
    vertex_sets = [frozenset(c) for c in cycles]
    max_edge = {
        e: _max_compatible([vertex_sets[i] for i in ids], 2)
        for e, ids in by_edge.items()
    }
    max_path = {
        p: _max_compatible([vertex_sets[i] for i in ids], 3)
        for p, ids in by_path.items()
    }
    return FiveCycleStats(tuple(cycles), per_edge, max_edge, max_path)


@dataclass(frozen=True)
class HypothesisReport:
    """Which coloring routes apply to a graph, with the structural facts
    behind each gate and the implied bounds on the b-chromatic number."""

    vertices: int
    edges: int
    regular_degree: int | None
    c4_free: bool
    c4_witness: tuple[int, int, int, int] | None
    has_triangle: bool
    triangle_witness: tuple[int, int, int] | None
    girth: int | float
    diameter: int | float
    diameter_witness: tuple[int, int] | None
    kappa: int
    separator: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    lower_bound_applies: bool
    lower_bound_colors: int | None
    five_cycle_count_vertex_exists: bool | None
    five_cycle_count_witness: int | None
    five_cycle_packing_vertex_exists: bool | None
    five_cycle_packing_witness: int | None
    diameter_route_applies: bool
    small_cut_route_applies: bool
    loose_cut_bound_applies: bool
    loose_cut_bound_colors: int | None
    three_component_cut_exists: bool | None
    phi_lower_bound: int
    phi_upper_bound: int

    def to_json_dict(self) -> dict:
        def num(x):
            return None if x is math.inf else x

        def seq(x):
            return None if x is None else list(x)

        return {
            "vertices": self.vertices,
            "edges": self.edges,
            "regular_degree": self.regular_degree,
            "c4_free": self.c4_free,
            "c4_witness": seq(self.c4_witness),
            "has_triangle": self.has_triangle,
            "triangle_witness": seq(self.triangle_witness),
            "girth": num(self.girth),
            "diameter": num(self.diameter),
            "diameter_witness": seq(self.diameter_witness),
            "kappa": self.kappa,
            "separator": list(self.separator),
            "components": [list(c) for c in self.components],
            "lower_bound_applies": self.lower_bound_applies,
            "lower_bound_colors": self.lower_bound_colors,
            "five_cycle_count_vertex_exists": self.five_cycle_count_vertex_exists,
            "five_cycle_count_witness": self.five_cycle_count_witness,
            "five_cycle_packing_vertex_exists": self.five_cycle_packing_vertex_exists,
            "five_cycle_packing_witness": self.five_cycle_packing_witness,
            "diameter_route_applies": self.diameter_route_applies,
            "small_cut_route_applies": self.small_cut_route_applies,
            "loose_cut_bound_applies": self.loose_cut_bound_applies,
            "loose_cut_bound_colors": self.loose_cut_bound_colors,
            "three_component_cut_exists": self.three_component_cut_exists,
            "phi_lower_bound": self.phi_lower_bound,
            "phi_upper_bound": self.phi_upper_bound,
        }


def _three_component_separator_exists(g: Graph, kappa: int) -> bool | None:
    """Whether some separator of size exactly kappa splits g into >= 3
    components; None when the subset sweep would exceed its budget."""
    n = g.vertex_count
    if kappa == 0:
        return len(connected_components(g)) >= 3
    if math.comb(n, kappa) > _SEPARATOR_SWEEP_BUDGET:
        return None
    for subset in combinations(range(n), kappa):
        if len(connected_components(g, frozenset(subset))) >= 3:
            return True
    return False


def check_hypotheses(g: Graph) -> HypothesisReport:
    """Evaluate every coloring-route hypothesis on g.

    The five-cycle vertex predicates ask for a vertex v all of whose incident
    edges lie on at most (d-2)/2 five-cycles (count route), or all of whose
    incident edges and 2-paths through v pack at most (d-2)/2 mutually
    edge/path-anchored five-cycles (packing route); the threshold relaxes to
    (d-1)/2 when the girth is exactly 5. They are None when the graph is not
    regular and C4-free, or beyond the enumeration ceiling.
    """
    d = is_regular(g)
    c4 = find_four_cycle(g)
    tri = find_triangle(g)
    gr = girth(g)
    diam, diam_witness = diameter(g)
    cert = vertex_connectivity(g)
    n = g.vertex_count

    eligible = d is not None and c4 is None
    lower_colors = None
    if eligible:
        assert d is not None
        lower_colors = (d + 4) // 2 if tri is not None else (d + 3) // 2

    count_exists = packing_exists = None
    count_witness = packing_witness = None
    if eligible and n <= FIVE_CYCLE_VERTEX_CEILING:
        assert d is not None
        stats = five_cycle_stats(g)
        # integer threshold: count <= (d-2)/2, or (d-1)/2 at girth 5
        slack = (d - 1) if gr == 5 else (d - 2)
        count_exists = packing_exists = False
        for v in range(n):
            edges_v = [(min(v, u), max(v, u)) for u in g.adjacency[v]]
            if all(2 * stats.per_edge_count[e] <= slack for e in edges_v):
                count_exists = True
                if count_witness is None:
                    count_witness = v
            paths_v = [key for key in stats.max_path_disjoint if v in key]
            if all(2 * stats.max_edge_disjoint[e] <= slack for e in edges_v) and all(
                2 * stats.max_path_disjoint[p] <= slack for p in paths_v
            ):
                packing_exists = True
                if packing_witness is None:
                    packing_witness = v

    diameter_route = eligible and diam >= 6
    small_cut_route = eligible and 2 * cert.kappa <= (d + 1 if d is not None else 0)
    loose_cut = eligible and d is not None and 3 * cert.kappa < 2 * d - 1
    loose_colors = min(2 * ((d + 4) // 3), d + 1) if loose_cut else None
    three_comp = _three_component_separator_exists(g, cert.kappa) if loose_cut else None

    phi_upper = 0 if n == 0 else g.max_degree() + 1
    phi_lower = 0 if n == 0 else 1
    if eligible:
        assert d is not None and lower_colors is not None
        phi_lower = max(phi_lower, lower_colors)
        if count_exists or packing_exists or diameter_route or small_cut_route:
            phi_lower = max(phi_lower, d + 1)
        if loose_cut:
            assert loose_colors is not None
            phi_lower = max(phi_lower, loose_colors)
            if three_comp:
                phi_lower = max(phi_lower, d + 1)

    return HypothesisReport(
        vertices=n,
        edges=g.edge_count,
        regular_degree=d,
        c4_free=c4 is None,
        c4_witness=c4,
        has_triangle=tri is not None,
        triangle_witness=tri,
        girth=gr,
        diameter=diam,
        diameter_witness=diam_witness,
        kappa=cert.kappa,
        separator=cert.separator,
        components=cert.components,
        lower_bound_applies=eligible,
        lower_bound_colors=lower_colors,
        five_cycle_count_vertex_exists=count_exists,
        five_cycle_count_witness=count_witness,
        five_cycle_packing_vertex_exists=packing_exists,
        five_cycle_packing_witness=packing_witness,
        diameter_route_applies=diameter_route,
        small_cut_route_applies=small_cut_route,
        loose_cut_bound_applies=loose_cut,
        loose_cut_bound_colors=loose_colors,
        three_component_cut_exists=three_comp,
        phi_lower_bound=phi_lower,
        phi_upper_bound=phi_upper,
    )


def metadata_for(g: Graph) -> GraphMetadata:
    return GraphMetadata(
        regular_degree=is_regular(g),
        girth=girth(g),
        has_c4=contains_c4(g),
        has_triangle=has_triangle(g),
    )
