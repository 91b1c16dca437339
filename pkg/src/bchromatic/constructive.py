"""Constructive b-colorings for d-regular C4-free graphs.

Three strategies share one seeding engine. The engine colors a center vertex
and its neighborhood so that the center and a prefix of its neighbors become
color-dominating, walking the second neighborhood ring by ring and placing
each ring's missing colors through a perfect matching. A color relabeling
attached to the plan lets two far-apart seedings realize complementary color
sets, which is how the diameter and small-cut strategies reach all d+1
colors. The lower-bound strategy instead extends greedily and squeezes out
unrealized colors by color exchange.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from bchromatic import analysis
from bchromatic.graph_core import CeilingExceeded, Graph
from bchromatic.matching import BipartiteInstance, HallViolator, Matching, perfect_matching


class HypothesisRejection(Exception):
    """The input graph fails the hypothesis a strategy requires."""


class ConstructionInvariantError(RuntimeError):
    """A guarantee the construction relies on failed at runtime.

    Signals an implementation bug or a precondition violation that slipped
    past the gates; carries the Hall violator when a ring matching failed.
    """

    def __init__(self, message: str, hall_violator: HallViolator | None = None) -> None:
        super().__init__(message)
        self.hall_violator = hall_violator


# ----------------------------------------------------------------------------
# colorings
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class PartialColoring:
    """Colors 1..palette_size on a subset of vertices; None is uncolored."""

    palette_size: int
    assignment: tuple[int | None, ...]

    def assigned_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.assignment) if c is not None)

    def used_colors(self) -> tuple[int, ...]:
        return tuple(sorted({c for c in self.assignment if c is not None}))

    def to_coloring(self) -> "Coloring":
        if any(c is None for c in self.assignment):
            raise ValueError("partial coloring is not total")
        return Coloring(self.palette_size, tuple(c for c in self.assignment if c is not None))


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors 1..palette_size."""

    palette_size: int
    assignment: tuple[int, ...]

    def used_colors(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.assignment)))


def validate_partial_coloring(g: Graph, pc: PartialColoring) -> None:
    """Raise ValueError unless pc is in range and proper on its domain."""
    if len(pc.assignment) != g.vertex_count:
        raise ValueError("assignment length disagrees with the graph")
    for v, c in enumerate(pc.assignment):
        if c is None:
            continue
        if not 1 <= c <= pc.palette_size:
            raise ValueError(f"vertex {v} has color {c} outside 1..{pc.palette_size}")
        for u in g.adjacency[v]:
            if u > v and pc.assignment[u] == c:
                raise ValueError(f"edge ({v}, {u}) is monochromatic in color {c}")


@dataclass(frozen=True)
class VerificationReport:
    """Properness and per-color realization status of a total coloring."""

    proper: bool
    conflict_edge: tuple[int, int] | None
    used_colors: tuple[int, ...]
    realized: dict[int, int | None]
    is_b_coloring: bool


def verify_bcoloring(g: Graph, c: Coloring) -> VerificationReport:
    """Exact check: proper, and every used color has a dominating vertex.

    realized maps each used color to its smallest dominating vertex, or None.
    """
    if len(c.assignment) != g.vertex_count:
        raise ValueError("coloring is not total on the graph's vertices")
    conflict = None
    for u in range(g.vertex_count):
        for v in g.adjacency[u]:
            if u < v and c.assignment[u] == c.assignment[v]:
                conflict = (u, v)
                break
        if conflict:
            break
    used = set(c.assignment)
    realized: dict[int, int | None] = {col: None for col in sorted(used)}
    for v in range(g.vertex_count):
        col = c.assignment[v]
        if realized[col] is not None:
            continue
        seen = {c.assignment[u] for u in g.adjacency[v]}
        if used - {col} <= seen:
            realized[col] = v
    proper = conflict is None
    return VerificationReport(
        proper=proper,
        conflict_edge=conflict,
        used_colors=tuple(sorted(used)),
        realized=realized,
        is_b_coloring=proper and all(w is not None for w in realized.values()),
    )


# ----------------------------------------------------------------------------
# seeding
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class SeedPlan:
    """Recipe for one dominating-neighborhood seeding.

    steps counts how many ordered neighbors become dominating alongside the
    center (0 allowed: the center alone). color_map[i-1] is the final label
    of canonical color i; canonically the center takes d+1 and the j-th
    ordered neighbor takes j, so the canonically realized set steps..  is
    [steps] plus d+1, and the map places it wherever the caller needs it.
    """

    center: int
    ordered_neighbors: tuple[int, ...]
    steps: int
    color_map: tuple[int, ...]
    triangle_mode: bool = False


def identity_color_map(d: int) -> tuple[int, ...]:
    return tuple(range(1, d + 2))


def color_map_realizing(target: tuple[int, ...] | list[int], d: int) -> tuple[int, ...]:
    """Bijection on 1..d+1 sending the canonically realized set of a
    (len(target)-1)-step seeding to exactly `target`.

    Canonical color d+1 goes to max(target), canonical 1..steps to the rest
    of target ascending, and the unrealized canonical colors to the
    complement ascending.
    """
    t_sorted = sorted(target)
    steps = len(t_sorted) - 1
    if steps < 0 or steps > d:
        raise ValueError("target must hold between 1 and d+1 colors")
    if t_sorted and (t_sorted[0] < 1 or t_sorted[-1] > d + 1 or len(set(t_sorted)) != len(t_sorted)):
        raise ValueError("target colors must be distinct members of 1..d+1")
    spare = [c for c in range(1, d + 2) if c not in set(t_sorted)]
    sigma = [0] * (d + 1)
    for i in range(steps):
        sigma[i] = t_sorted[i]
    sigma[d] = t_sorted[-1]
    for offset, c in enumerate(spare):
        sigma[steps + offset] = c
    return tuple(sigma)


def validate_seed_plan(g: Graph, plan: SeedPlan) -> int:
    """Check every plan invariant against g; returns the degree d."""
    d = g.degree(plan.center)
    if d < 3:
        raise ValueError("seeding requires degree at least 3")
    if tuple(sorted(plan.ordered_neighbors)) != g.adjacency[plan.center]:
        raise ValueError("ordered_neighbors is not a permutation of the center's neighborhood")
    if sorted(plan.color_map) != list(range(1, d + 2)):
        raise ValueError("color_map is not a bijection on 1..d+1")
    limit = d // 2 + 1 if plan.triangle_mode else (d + 1) // 2
    if not 0 <= plan.steps <= limit:
        raise ValueError(f"steps must lie in 0..{limit}")
    if plan.triangle_mode:
        if d % 2:
            raise ValueError("triangle mode requires even degree")
        a = plan.ordered_neighbors[0]
        b = plan.ordered_neighbors[d // 2]
        if not g.has_edge(a, b):
            raise ValueError(
                "triangle mode requires the first neighbor adjacent to the middle one"
            )
    elif d % 2 and plan.steps == (d + 1) // 2:
        pivot = plan.ordered_neighbors[plan.steps - 1]
        if g.neighbor_sets[pivot] & g.neighbor_sets[plan.center]:
            raise ValueError(
                "with a full odd-degree seeding the last step neighbor must have "
                "no neighbors inside the center's neighborhood"
            )
    return d


def plan_seed(
    g: Graph,
    center: int,
    t: int,
    triangle_mode: bool = False,
    color_map: tuple[int, ...] | None = None,
) -> SeedPlan:
    """Order the center's neighborhood so a t-step seeding is legal.

    The graph must be regular of degree >= 3 and contain no 4-cycle. In
    triangle mode (even d only) the center must lie in a triangle; the two
    adjacent neighbors are placed first and middle. For a full odd-d seeding
    a neighbor with no neighbors inside N(center) is placed last among the
    step positions; one exists because the induced neighborhood has maximum
    degree one.
    """
    d = analysis.is_regular(g)
    if d is None:
        raise ValueError("graph is not regular")
    if d < 3:
        raise ValueError("seeding requires degree at least 3")
    if analysis.contains_c4(g):
        raise ValueError("graph contains a 4-cycle")
    neighbors = list(g.adjacency[center])
    nv = g.neighbor_sets[center]
    order: list[int]
    if triangle_mode:
        if d % 2:
            raise ValueError("triangle mode requires even degree")
        pair = None
        for a in neighbors:
            for b in sorted(g.neighbor_sets[a] & nv):
                if b > a:
                    pair = (a, b)
                    break
            if pair:
                break
        if pair is None:
            raise ValueError(f"center {center} does not lie in a triangle")
        rest = [x for x in neighbors if x not in pair]
        order = [pair[0]] + rest[: d // 2 - 1] + [pair[1]] + rest[d // 2 - 1:]
    elif d % 2 and t == (d + 1) // 2:
        unmatched = [x for x in neighbors if not (g.neighbor_sets[x] & nv)]
        if not unmatched:
            raise ConstructionInvariantError(
                "no neighbor free of the center's neighborhood despite odd degree"
            )
        pivot = unmatched[0]
        rest = [x for x in neighbors if x != pivot]
        order = rest[: t - 1] + [pivot] + rest[t - 1:]
    else:
        order = neighbors
    plan = SeedPlan(
        center=center,
        ordered_neighbors=tuple(order),
        steps=t,
        color_map=color_map if color_map is not None else identity_color_map(d),
        triangle_mode=triangle_mode,
    )
    validate_seed_plan(g, plan)
    return plan


@dataclass
class SeedStepRecord:
    """What one inductive step did, for tests and diagnostics."""

    center: int
    index: int
    step_vertex: int
    ring: tuple[int, ...]
    needed_colors: tuple[int, ...]
    placed: tuple[tuple[int, int], ...]


@dataclass
class ReductionPassRecord:
    removed_color: int
    recolored: tuple[tuple[int, int], ...]


@dataclass
class ConstructionTrace:
    """Mutable log of a construction run."""

    centers: list[int] = field(default_factory=list)
    seed_steps: list[SeedStepRecord] = field(default_factory=list)
    reduction_passes: list[ReductionPassRecord] = field(default_factory=list)
    triangle_mode: bool = False


def seed_dominating_neighborhood(
    g: Graph, plan: SeedPlan, trace: ConstructionTrace | None = None
) -> PartialColoring:
    """Color the center, its neighborhood, and the step rings so the center
    and the first `steps` ordered neighbors all see every color of 1..d+1 on
    their closed neighborhoods.

    Works canonically (center d+1, j-th neighbor j) and applies the plan's
    color_map at the end. Every counting guarantee the inductive argument
    rests on is asserted at runtime; a failed ring matching raises
    ConstructionInvariantError carrying the Hall violator.
    """
    d = validate_seed_plan(g, plan)
    if analysis.is_regular(g) != d:
        raise ValueError("graph is not regular of the plan's degree")
    n = g.vertex_count
    center = plan.center
    nv = g.neighbor_sets[center]
    colors: list[int | None] = [None] * n
    colors[center] = d + 1
    for idx, u in enumerate(plan.ordered_neighbors):
        colors[u] = idx + 1
    if trace is not None:
        trace.centers.append(center)
        trace.triangle_mode = trace.triangle_mode or plan.triangle_mode

    for i in range(1, plan.steps + 1):
        vi = plan.ordered_neighbors[i - 1]
        inside = sorted(g.neighbor_sets[vi] & nv)
        if len(inside) > 1:
            raise ConstructionInvariantError(
                f"neighbor {vi} has {len(inside)} neighbors inside N({center}); "
                "a 4-cycle slipped past the gate"
            )
        ring = sorted(g.neighbor_sets[vi] - nv - {center})
        blocked = {colors[w] for w in inside}
        needed = sorted(set(range(1, d + 1)) - {i} - blocked)
        if len(ring) != len(needed) or len(ring) != d - 1 - len(inside):
            raise ConstructionInvariantError(
                f"step {i}: ring size {len(ring)} and needed colors {len(needed)} "
                f"disagree with degree counting"
            )
        if any(colors[x] is not None for x in ring):
            raise ConstructionInvariantError(
                f"step {i}: ring overlaps an earlier ring; rings must be disjoint"
            )
        edges = set()
        degree_left = {x: 0 for x in ring}
        degree_right = {c: 0 for c in needed}
        for x in ring:
            present = {colors[y] for y in g.adjacency[x] if colors[y] is not None}
            for c in needed:
                if c not in present:
                    edges.add((x, c))
                    degree_left[x] += 1
                    degree_right[c] += 1
        if ring:
            worst = min(min(degree_left.values()), min(degree_right.values()))
            if 2 * worst < len(ring):
                raise ConstructionInvariantError(
                    f"step {i}: availability degree {worst} below half of {len(ring)}; "
                    "the counting guarantee failed"
                )
        outcome = perfect_matching(
            BipartiteInstance(tuple(ring), tuple(needed), frozenset(edges))
        )
        if isinstance(outcome, HallViolator):
            raise ConstructionInvariantError(
                f"step {i}: ring has no perfect color matching", hall_violator=outcome
            )
        assert isinstance(outcome, Matching)
        for x, c in sorted(outcome.pairs):
            colors[x] = c
        if trace is not None:
            trace.seed_steps.append(
                SeedStepRecord(center, i, vi, tuple(ring), tuple(needed),
                               tuple(sorted(outcome.pairs)))
            )

    full = set(range(1, d + 2))
    for w in (center, *plan.ordered_neighbors[: plan.steps]):
        closed = {colors[w]} | {colors[y] for y in g.adjacency[w]}
        if closed != full:
            raise ConstructionInvariantError(
                f"vertex {w} sees {sorted(c for c in closed if c is not None)} "
                f"instead of all of 1..{d + 1} on its closed neighborhood"
            )

    mapped = tuple(None if c is None else plan.color_map[c - 1] for c in colors)
    result = PartialColoring(d + 1, mapped)
    validate_partial_coloring(g, result)
    return result


def realized_targets(plan: SeedPlan, d: int) -> tuple[int, ...]:
    """The final color labels the plan's seeding realizes."""
    canonical = list(range(1, plan.steps + 1)) + [d + 1]
    return tuple(sorted(plan.color_map[c - 1] for c in canonical))


# ----------------------------------------------------------------------------
# extension and reduction
# ----------------------------------------------------------------------------

def greedy_extend(
    g: Graph, partial: PartialColoring, sources: tuple[int, ...] | None = None
) -> Coloring:
    """Complete a partial coloring with the smallest color missing from each
    neighborhood, visiting uncolored vertices in BFS order from `sources`
    (default: the already-colored vertices). Needs palette >= max degree + 1.
    """
    if partial.palette_size < g.max_degree() + 1:
        raise ValueError("greedy extension needs palette at least max degree + 1")
    validate_partial_coloring(g, partial)
    n = g.vertex_count
    colors = list(partial.assignment)
    if sources is None:
        sources = partial.assigned_vertices()
    order: list[int] = []
    seen = [False] * n
    q: deque[int] = deque()
    for s in sorted(set(sources)):
        if not seen[s]:
            seen[s] = True
            q.append(s)
    while q:
        x = q.popleft()
        order.append(x)
        for y in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                q.append(y)
    for v in range(n):
        if not seen[v]:
            order.append(v)
    for v in order:
        if colors[v] is None:
            taken = {colors[u] for u in g.adjacency[v]}
            colors[v] = next(c for c in range(1, partial.palette_size + 1) if c not in taken)
    return Coloring(partial.palette_size, tuple(colors))  # type: ignore[arg-type]


def reduce_unrealized(
    g: Graph, c: Coloring, trace: ConstructionTrace | None = None
) -> Coloring:
    """Exchange away unrealized colors until the coloring is a b-coloring.

    While some used color has no dominating vertex, take the smallest such
    color and recolor each of its vertices (ascending) to the smallest used
    color absent from that vertex's neighborhood. Such a color exists exactly
    because the vertex is not dominating; the class being independent keeps
    the scan order irrelevant. Each pass removes one color and never harms an
    existing dominating vertex, so at most |used| passes run.
    """
    colors = list(c.assignment)
    while True:
        report = verify_bcoloring(g, Coloring(c.palette_size, tuple(colors)))
        if not report.proper:
            raise ValueError(f"input coloring is improper on edge {report.conflict_edge}")
        if report.is_b_coloring:
            return Coloring(c.palette_size, tuple(colors))
        target = next(col for col in report.used_colors if report.realized[col] is None)
        holders = [v for v in range(g.vertex_count) if colors[v] == target]
        used = set(report.used_colors)
        recolored = []
        for v in holders:
            neighbor_colors = {colors[u] for u in g.adjacency[v]}
            candidates = sorted(used - {target} - neighbor_colors)
            if not candidates:
                raise ConstructionInvariantError(
                    f"vertex {v} of unrealized color {target} sees every other color"
                )
            colors[v] = candidates[0]
            recolored.append((v, candidates[0]))
        if trace is not None:
            trace.reduction_passes.append(ReductionPassRecord(target, tuple(recolored)))


# ----------------------------------------------------------------------------
# strategies
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstructionOutcome:
    """A verified b-coloring plus how it was obtained.

    guaranteed_colors is what the strategy promises for its hypothesis class;
    the coloring may use more. Strategy is one of "lower-bound", "diameter",
    "connectivity", "small-case".
    """

    coloring: Coloring
    strategy: str
    guaranteed_colors: int
    plans: tuple[SeedPlan, ...]
    triangle_mode: bool
    report: VerificationReport


def _gate_regular_c4_free(g: Graph) -> int:
    d = analysis.is_regular(g)
    if d is None:
        raise HypothesisRejection("graph is not regular")
    c4 = analysis.find_four_cycle(g)
    if c4 is not None:
        raise HypothesisRejection(f"graph contains the 4-cycle {c4}")
    return d


def _cycle_order(g: Graph, component: tuple[int, ...]) -> list[int]:
    # walk a 2-regular component starting at its smallest vertex, toward the
    # smaller neighbor first
    start = component[0]
    order = [start]
    prev, cur = start, g.adjacency[start][0]
    while cur != start:
        order.append(cur)
        a, b = g.adjacency[cur]
        prev, cur = cur, b if a == prev else a
    return order


def _small_case_bcoloring(g: Graph, d: int) -> Coloring:
    """Direct b-colorings with d+1 colors for degrees 0..2.

    d = 2 components are cycles other than C4 (the 4-cycle gate ran); the
    repeating 1,2,3 pattern with a fixed seam yields dominating vertices for
    all three colors.
    """
    n = g.vertex_count
    if d == 0:
        return Coloring(1, (1,) * n)
    if d == 1:
        colors = [0] * n
        for u, v in g.edges():
            colors[u], colors[v] = 1, 2
        return Coloring(2, tuple(colors))
    colors = [0] * n
    for component in analysis.connected_components(g):
        order = _cycle_order(g, component)
        m = len(order)
        for pos, v in enumerate(order):
            colors[v] = pos % 3 + 1
        if m % 3 == 1:
            colors[order[-1]] = 2
    return Coloring(3, tuple(colors))


def _finish_small_case(g: Graph, d: int) -> ConstructionOutcome:
    coloring = _small_case_bcoloring(g, d)
    report = verify_bcoloring(g, coloring)
    if not report.is_b_coloring or len(report.used_colors) != d + 1:
        raise ConstructionInvariantError(
            f"small-case coloring failed verification for degree {d}"
        )
    return ConstructionOutcome(coloring, "small-case", d + 1, (), False, report)


def construct_lower_bound_bcoloring(
    g: Graph, trace: ConstructionTrace | None = None
) -> ConstructionOutcome:
    """B-coloring with at least floor((d+3)/2) colors, or floor((d+4)/2)
    when a triangle exists, on any d-regular C4-free graph.

    Seeds one dominating neighborhood, extends greedily over d+1 colors, and
    exchanges away unrealized colors. The seeded dominating vertices survive
    reduction, which is what pins the final count to the bound.
    """
    d = _gate_regular_c4_free(g)
    tri = analysis.find_triangle(g)
    if d <= 2:
        outcome = _finish_small_case(g, d)
        promised = (d + 4) // 2 if tri else (d + 3) // 2
        if len(outcome.report.used_colors) < promised:
            raise ConstructionInvariantError("small case fell below the promised bound")
        return outcome
    triangle_mode = d % 2 == 0 and tri is not None
    if triangle_mode:
        assert tri is not None
        center = tri[0]
        t = d // 2 + 1
    else:
        def inside_edges(v: int) -> int:
            ns = g.neighbor_sets[v]
            return sum(1 for u in ns for w in g.adjacency[u] if w > u and w in ns)

        center = min(range(g.vertex_count), key=lambda v: (inside_edges(v), v))
        t = (d + 1) // 2
    plan = plan_seed(g, center, t, triangle_mode)
    partial = seed_dominating_neighborhood(g, plan, trace=trace)
    total = greedy_extend(g, partial, sources=(center,))
    reduced = reduce_unrealized(g, total, trace=trace)
    report = verify_bcoloring(g, reduced)
    promised = (d + 4) // 2 if tri else (d + 3) // 2
    kept = realized_targets(plan, d)
    if (
        not report.is_b_coloring
        or len(report.used_colors) < promised
        or any(report.realized.get(c) is None for c in kept)
    ):
        raise ConstructionInvariantError(
            f"reduction lost a seeded color: kept {kept}, report {report.realized}"
        )
    return ConstructionOutcome(reduced, "lower-bound", promised, (plan,), triangle_mode, report)


def _seeded_region(partial: PartialColoring) -> set[int]:
    return set(partial.assigned_vertices())


def _merge_partials(g: Graph, a: PartialColoring, b: PartialColoring) -> PartialColoring:
    if a.palette_size != b.palette_size:
        raise ConstructionInvariantError("seedings disagree on palette size")
    ra, rb = _seeded_region(a), _seeded_region(b)
    overlap = ra & rb
    if overlap:
        raise ConstructionInvariantError(f"seeded regions overlap on {sorted(overlap)}")
    for u in ra:
        for v in g.adjacency[u]:
            if v in rb:
                raise ConstructionInvariantError(
                    f"edge ({u}, {v}) connects the two seeded regions"
                )
    merged = tuple(
        a.assignment[v] if a.assignment[v] is not None else b.assignment[v]
        for v in range(g.vertex_count)
    )
    result = PartialColoring(a.palette_size, merged)
    validate_partial_coloring(g, result)
    return result


def _two_center_finish(
    g: Graph,
    d: int,
    strategy: str,
    plans: tuple[SeedPlan, SeedPlan],
    trace: ConstructionTrace | None,
) -> ConstructionOutcome:
    first = seed_dominating_neighborhood(g, plans[0], trace=trace)
    second = seed_dominating_neighborhood(g, plans[1], trace=trace)
    merged = _merge_partials(g, first, second)
    total = greedy_extend(g, merged, sources=(plans[0].center, plans[1].center))
    report = verify_bcoloring(g, total)
    covered = set(realized_targets(plans[0], d)) | set(realized_targets(plans[1], d))
    if covered != set(range(1, d + 2)):
        raise ConstructionInvariantError(
            f"the two seedings realize {sorted(covered)} instead of all of 1..{d + 1}"
        )
    if not report.is_b_coloring or len(report.used_colors) != d + 1:
        raise ConstructionInvariantError(
            f"{strategy} construction did not reach a {d + 1}-color b-coloring"
        )
    return ConstructionOutcome(total, strategy, d + 1, plans, False, report)


def construct_diameter_bcoloring(
    g: Graph, trace: ConstructionTrace | None = None
) -> ConstructionOutcome:
    """B-coloring with exactly d+1 colors when the diameter is at least 6.

    Seeds two dominating neighborhoods at a farthest vertex pair; distance
    at least 6 keeps the two colored balls edge-free of each other, so their
    color sets, chosen complementary, realize everything with no reduction.
    """
    d = _gate_regular_c4_free(g)
    diam, witness = analysis.diameter(g)
    if diam < 6:
        raise HypothesisRejection(f"diameter {diam} is below 6")
    if d <= 2:
        return _finish_small_case(g, d)
    assert witness is not None
    v, w = witness
    low = list(range(1, (d + 3) // 2 + 1))
    high = [c for c in range(1, d + 2) if c not in low]
    plan_v = plan_seed(g, v, (d + 1) // 2, color_map=color_map_realizing(low, d))
    plan_w = plan_seed(g, w, len(high) - 1, color_map=color_map_realizing(high, d))
    return _two_center_finish(g, d, "diameter", (plan_v, plan_w), trace)


def construct_connectivity_bcoloring(
    g: Graph,
    trace: ConstructionTrace | None = None,
    oracle_ceiling: int | None = None,
) -> ConstructionOutcome:
    """B-coloring with exactly d+1 colors when the vertex connectivity is at
    most (d+1)/2.

    Finds, in each of two components of the graph minus a minimum separator,
    a vertex with no neighbor in the separator, and seeds complementary
    dominating neighborhoods there; the separator keeps the regions apart.
    For degree 3 a failed search falls back to the exact oracle, which the
    classification of cubic C4-free graphs keeps honest.
    """
    d = _gate_regular_c4_free(g)
    cert = analysis.vertex_connectivity(g)
    if 2 * cert.kappa > d + 1:
        raise HypothesisRejection(
            f"vertex connectivity {cert.kappa} exceeds ({d} + 1)/2"
        )
    if d <= 2:
        return _finish_small_case(g, d)
    if len(cert.components) < 2:
        raise ConstructionInvariantError(
            "minimum separator failed to disconnect a non-complete graph"
        )
    separator = set(cert.separator)
    sides = (cert.components[0], cert.components[1])
    if d % 2 == 0:
        low = list(range(1, d // 2 + 2))
    else:
        low = list(range(1, (d + 1) // 2 + 1))
    high = [c for c in range(1, d + 2) if c not in low]

    plans = []
    for side, colors in zip(sides, (low, high)):
        side_set = set(side)
        anchor = None
        usable: list[int] = []
        for a in side:
            if g.neighbor_sets[a] & separator:
                continue
            usable = [
                x for x in g.adjacency[a] if not (g.neighbor_sets[x] & separator)
            ]
            if len(usable) >= len(colors) - 1:
                anchor = a
                break
        if anchor is None:
            if d == 3:
                return _oracle_fallback(g, d, oracle_ceiling)
            raise ConstructionInvariantError(
                "no separator-free anchor vertex in a component; the existence "
                f"argument fails only below degree 4 (degree {d}, separator "
                f"{sorted(separator)})"
            )
        steps = len(colors) - 1
        xs = usable[:steps]
        rest = [x for x in g.adjacency[anchor] if x not in set(xs)]
        plan = SeedPlan(
            center=anchor,
            ordered_neighbors=tuple(xs + rest),
            steps=steps,
            color_map=color_map_realizing(colors, d),
        )
        validate_seed_plan(g, plan)
        if not set(g.adjacency[anchor]) <= side_set:
            raise ConstructionInvariantError(
                f"anchor {anchor} has neighbors outside its component"
            )
        plans.append(plan)
    return _two_center_finish(g, d, "connectivity", (plans[0], plans[1]), trace)


def _oracle_fallback(g: Graph, d: int, ceiling: int | None = None) -> ConstructionOutcome:
    # local import: the oracle depends on this module's Coloring and verifier
    from bchromatic import exact_oracle

    if ceiling is None:
        ceiling = exact_oracle.DEFAULT_VERTEX_CEILING
    witness = exact_oracle.exists_bcoloring_with_k(g, d + 1, ceiling=ceiling)
    if witness is None:
        raise ConstructionInvariantError(
            f"oracle found no {d + 1}-color b-coloring where one is guaranteed"
        )
    report = verify_bcoloring(g, witness)
    if not report.is_b_coloring:
        raise ConstructionInvariantError("oracle witness failed verification")
    return ConstructionOutcome(witness, "small-case", d + 1, (), False, report)
