"""Multiplicative spanners resilient to edge faults.

The fault-tolerant variant runs the classical greedy spanner f+1 times,
deleting each round's output from the working graph.  Rounds are edge
disjoint, so when an edge is rejected every round, it has f+1 pairwise
edge-disjoint detours of length <= alpha; at most f of them can be hit by
f edge faults, and replacing every faulted-graph shortest path edge by a
surviving detour bounds the stretch by alpha.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class SpannerResult:
    edges: frozenset  # kept edge ids (union over rounds)
    alpha: int
    f: int
    rounds: tuple  # per-round kept edge id frozensets


def _bounded_dist(adj, u, v, cap):
    """Hop distance from u to v over adj, or cap+1 when it exceeds cap."""
    if u == v:
        return 0
    dist = {u: 0}
    q = deque([u])
    while q:
        x = q.popleft()
        dx = dist[x]
        if dx >= cap:
            continue
        for y in adj[x]:
            if y not in dist:
                if y == v:
                    return dx + 1
                dist[y] = dx + 1
                q.append(y)
    return cap + 1


def greedy_spanner(g, alpha, edges=None):
    """Classical greedy (alpha, 0) spanner; returns the kept edge id set.

    Scans the given edge ids (default: all of g) in index order and keeps
    an edge iff the kept subgraph so far has no path of length <= alpha
    between its endpoints.  Every cycle of the output is therefore longer
    than alpha + 1.
    """
    if alpha < 1 or alpha % 2 == 0:
        raise ValueError(f"stretch must be odd and >= 1, got {alpha}")
    scan = sorted(edges) if edges is not None else range(g.m)
    kept = []
    adj = [[] for _ in range(g.n)]
    for eid in scan:
        u, v = g.edges[eid]
        if _bounded_dist(adj, u, v, alpha) > alpha:
            kept.append(eid)
            adj[u].append(v)
            adj[v].append(u)
    return frozenset(kept)


def ft_spanner(g, alpha, f, edges=None):
    """f-edge fault tolerant (alpha, 0) spanner: f+1 greedy rounds."""
    if f < 0:
        raise ValueError(f"fault budget must be >= 0, got {f}")
    remaining = set(edges) if edges is not None else set(range(g.m))
    rounds = []
    out = set()
    for _ in range(f + 1):
        kept = greedy_spanner(g, alpha, remaining)
        rounds.append(kept)
        out |= kept
        remaining -= kept
        if not remaining:
            break
    return SpannerResult(edges=frozenset(out), alpha=alpha, f=f, rounds=tuple(rounds))
