"""Exact b-chromatic number by witness-guided exhaustive search.

A b-coloring with k colors needs k distinct vertices, one per color, each
adjacent to all other k-1 colors. Up to a color permutation the witnesses can
be assumed sorted with ascending colors, so the search enumerates witness
k-sets among vertices of degree at least k-1 and backtracks over the
remaining vertices, propagating for every witness the set of colors its
neighborhood still misses against the number of its still-uncolored
neighbors. Small graphs only: the search refuses inputs above a vertex
ceiling rather than run unbounded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from bchromatic.constructive import Coloring, verify_bcoloring
from bchromatic.graph_core import CeilingExceeded, Graph

DEFAULT_VERTEX_CEILING = 24


@dataclass(frozen=True)
class OracleResult:
    """Exact b-chromatic number with a verified witness coloring."""

    phi: int
    witness: Coloring
    explored: int


def _search(g: Graph, k: int) -> tuple[Coloring | None, int]:
    """Find a b-coloring with exactly k colors, counting assignments tried."""
    n = g.vertex_count
    explored = 0
    candidates = [v for v in range(n) if g.degree(v) >= k - 1]
    if len(candidates) < k:
        return None, explored
    full = frozenset(range(1, k + 1))

    for combo in itertools.combinations(candidates, k):
        colors = [0] * n
        wit_at: dict[int, int] = {}
        for i, w in enumerate(combo):
            colors[w] = i + 1
            wit_at[w] = i
        missing: list[set[int]] = []
        uncol = [0] * k
        feasible = True
        for i, w in enumerate(combo):
            m = set(full) - {i + 1}
            u = 0
            for y in g.adjacency[w]:
                cy = colors[y]
                if cy:
                    m.discard(cy)
                else:
                    u += 1
            if len(m) > u:
                feasible = False
                break
            missing.append(m)
            uncol[i] = u
        if not feasible:
            continue

        uncolored_count = n - k

        def legal(v: int) -> set[int]:
            s = set(full)
            for y in g.adjacency[v]:
                cy = colors[y]
                if cy:
                    s.discard(cy)
            for y in g.adjacency[v]:
                i = wit_at.get(y)
                # a witness with as many missing colors as uncolored
                # neighbors forces each of them into the missing set
                if i is not None and len(missing[i]) == uncol[i]:
                    s &= missing[i]
                    if not s:
                        break
            return s

        def dfs() -> bool:
            nonlocal explored, uncolored_count
            if uncolored_count == 0:
                return all(not m for m in missing)
            best_v = -1
            best_legal: set[int] | None = None
            for v in range(n):
                if colors[v]:
                    continue
                s = legal(v)
                if best_legal is None or len(s) < len(best_legal):
                    best_v, best_legal = v, s
                    if not s:
                        return False
            assert best_legal is not None
            for c in sorted(best_legal):
                explored += 1
                colors[best_v] = c
                uncolored_count -= 1
                log: list[tuple[int, int | None]] = []
                ok = True
                for y in g.adjacency[best_v]:
                    i = wit_at.get(y)
                    if i is None:
                        continue
                    uncol[i] -= 1
                    if c in missing[i]:
                        missing[i].discard(c)
                        log.append((i, c))
                    else:
                        log.append((i, None))
                    if len(missing[i]) > uncol[i]:
                        ok = False
                if ok and dfs():
                    return True
                for i, removed in reversed(log):
                    uncol[i] += 1
                    if removed is not None:
                        missing[i].add(removed)
                colors[best_v] = 0
                uncolored_count += 1
            return False

        if dfs():
            found = Coloring(k, tuple(colors))
            report = verify_bcoloring(g, found)
            assert report.is_b_coloring and len(report.used_colors) == k, (
                "search returned a non-b-coloring"
            )
            return found, explored
    return None, explored


def exists_bcoloring_with_k(
    g: Graph, k: int, ceiling: int = DEFAULT_VERTEX_CEILING
) -> Coloring | None:
    """A verified b-coloring using exactly k colors, or None if impossible.

    Raises CeilingExceeded when the graph has more than `ceiling` vertices
    and ValueError when k is outside 1..max_degree+1.
    """
    if g.vertex_count > ceiling:
        raise CeilingExceeded(
            f"{g.vertex_count} vertices exceed the search ceiling {ceiling}"
        )
    if not 1 <= k <= g.max_degree() + 1:
        raise ValueError(f"k must lie in 1..{g.max_degree() + 1}")
    found, _ = _search(g, k)
    return found


def exact_b_chromatic(g: Graph, ceiling: int = DEFAULT_VERTEX_CEILING) -> OracleResult:
    """The largest k admitting a b-coloring, found by scanning k downward
    from max_degree+1.

    Downward scanning needs no monotonicity: the first k that succeeds is
    the maximum. The scan always lands somewhere at or above the chromatic
    number, because exchanging away an unrealizable color turns any proper
    coloring into one with fewer colors.
    """
    if g.vertex_count == 0:
        return OracleResult(0, Coloring(0, ()), 0)
    if g.vertex_count > ceiling:
        raise CeilingExceeded(
            f"{g.vertex_count} vertices exceed the search ceiling {ceiling}"
        )
    explored = 0
    for k in range(g.max_degree() + 1, 0, -1):
        found, tried = _search(g, k)
        explored += tried
        if found is not None:
            return OracleResult(k, found, explored)
    raise AssertionError("no b-coloring found at any k; unreachable for n >= 1")
