"""Brute-force ground truth: fault-tolerant distances and stretch checks.

``verify_structure`` enumerates every fault set up to the budget and
compares surviving distances in the candidate subgraph against the host
graph, so a passing report is an exhaustive certificate at desk scale.
Every listed violation is re-verifiable by two plain BFS runs.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .graph import INF, bfs_distances, bfs_tree
from .limits import guard_fault_enumeration


class SubsetError(ValueError):
    """The candidate structure is not a subgraph of the host graph."""


@dataclass
class VerificationReport:
    """Outcome of an exhaustive stretch check.

    ``violations`` holds (target, fault_eids, dist_h, dist_g) tuples sorted
    by (fault set, target); dist_h is None when the target is disconnected
    in the surviving structure.  ``worst_mult``/``worst_add`` aggregate the
    largest observed dist_h/dist_g ratio and dist_h - dist_g difference
    over all checked pairs, regardless of the thresholds.
    """

    params: dict
    checked: int
    worst_mult: float | None
    worst_add: float | None
    violations: list
    edges_g: int
    edges_h: int
    ms: int

    @property
    def passed(self):
        return not self.violations

    def to_jsonable(self):
        def num(x):
            if x is None or x == INF:
                return None
            return round(x, 9) if isinstance(x, float) else x

        return {
            "params": self.params,
            "checked": self.checked,
            "worst_mult": num(self.worst_mult),
            "worst_add": num(self.worst_add),
            "violations": [
                {"v": v, "faults": list(fs), "dist_h": num(dh), "dist_g": dg}
                for v, fs, dh, dg in self.violations
            ],
            "edges_g": self.edges_g,
            "edges_h": self.edges_h,
            "ms": self.ms,
        }

    def to_json(self):
        return json.dumps(self.to_jsonable(), sort_keys=True, indent=2) + "\n"


def ft_distance(g, s, v, faults=frozenset()):
    """Hop distance from s to v in g minus the fault edges (INF sentinel)."""
    return bfs_distances(g, s, frozenset(faults))[v]


def enumerate_fault_sets(m, f, tree_edges=None):
    """All fault sets |F| <= f as sorted tuples, sizes ascending, lexicographic.

    With ``tree_edges`` given, only sets intersecting it (plus the empty
    set) are produced -- the opt-in approximate fast mode.
    """
    out = [()]
    for size in range(1, f + 1):
        for combo in combinations(range(m), size):
            if tree_edges is not None and not any(e in tree_edges for e in combo):
                continue
            out.append(combo)
    return out


def _h_as_edge_subset(g, h):
    """Map the structure's edges onto g edge ids; SubsetError if not a subgraph."""
    if h.n > g.n:
        raise SubsetError(f"structure has {h.n} vertices, graph {g.n}")
    h_eids = set()
    for u, v in h.edges:
        key = (u, v) if u < v else (v, u)
        eid = g.edge_id.get(key)
        if eid is None:
            raise SubsetError(f"structure edge ({u}, {v}) not in graph")
        h_eids.add(eid)
    return h_eids


def _scan_chunk(g, s, n, alpha, beta, fault_sets, h_adj, h_eid_of):
    """Check one chunk of fault sets; returns (checked, worst, violations)."""
    checked = 0
    worst_mult = 1.0
    worst_add = 0
    violations = []
    for combo in fault_sets:
        banned_g = frozenset(combo)
        dist_g = bfs_distances(g, s, banned_g)
        banned_h = frozenset(e for e in (h_eid_of.get(c) for c in combo) if e is not None)
        dist_h = _bfs_on_adj(h_adj, n, s, banned_h)
        for v in range(n):
            dg = dist_g[v]
            if dg == INF:
                continue
            checked += 1
            dh = dist_h[v]
            if dh == INF:
                worst_mult = INF
                worst_add = INF
                violations.append((v, combo, None, dg))
                continue
            if dg > 0:
                ratio = dh / dg
                if ratio > worst_mult:
                    worst_mult = ratio
            diff = dh - dg
            if diff > worst_add:
                worst_add = diff
            if dh > alpha * dg + beta:
                violations.append((v, combo, dh, dg))
    return checked, worst_mult, worst_add, violations


def _bfs_on_adj(adj, n, s, banned):
    from collections import deque

    dist = [INF] * n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        du = dist[u]
        for v, eid in adj[u]:
            if eid not in banned and dist[v] == INF:
                dist[v] = du + 1
                q.append(v)
    return dist


def verify_structure(g, h, s, alpha, beta, f, threads=1, fast=False, work_limit=None):
    """Exhaustively check dist(s,v,h\\F) <= alpha*dist(s,v,g\\F)+beta.

    Quantifies over every fault set F with |F| <= f and every target with
    finite surviving distance in g.  ``h`` must be an edge-subgraph of
    ``g`` (same vertex ids).  ``fast=True`` restricts the enumeration to
    fault sets touching the BFS tree of g -- approximate, labeled in the
    report, off by default.  Results are independent of ``threads``.
    """
    start = time.perf_counter()
    guard_fault_enumeration(g.m, f, g.n, work_limit)
    h_eids = _h_as_edge_subset(g, h)
    # Rebuild h's adjacency in terms of g edge ids so fault sets apply as-is.
    h_adj = [[] for _ in range(g.n)]
    h_eid_of = {}
    for eid in sorted(h_eids):
        u, v = g.edges[eid]
        h_adj[u].append((v, eid))
        h_adj[v].append((u, eid))
        h_eid_of[eid] = eid
    tree_filter = None
    if fast:
        tree_filter = bfs_tree(g, s).tree_edges
    fault_sets = enumerate_fault_sets(g.m, f, tree_filter)

    if threads <= 1:
        parts = [_scan_chunk(g, s, g.n, alpha, beta, fault_sets, h_adj, h_eid_of)]
    else:
        chunks = [fault_sets[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(
                    lambda c: _scan_chunk(g, s, g.n, alpha, beta, c, h_adj, h_eid_of),
                    chunks,
                )
            )
    checked = sum(p[0] for p in parts)
    worst_mult = max(p[1] for p in parts)
    worst_add = max(p[2] for p in parts)
    violations = sorted(
        (v for p in parts for v in p[3]), key=lambda rec: (rec[1], rec[0])
    )
    ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        params={"s": s, "alpha": alpha, "beta": beta, "f": f, "fast": fast},
        checked=checked,
        worst_mult=worst_mult,
        worst_add=worst_add,
        violations=violations,
        edges_g=g.m,
        edges_h=h.m,
        ms=ms,
    )


@dataclass
class NecessityReport:
    """Per-block-edge detection results for a lower-bound instance.

    ``violations`` lists block edges whose removal was NOT detected as a
    stretch violation (an empty list certifies the necessity claim);
    ``checked`` counts block edges examined.
    """

    params: dict
    checked: int
    detected: int
    violations: list
    min_excess: float | None
    ms: int

    @property
    def passed(self):
        return not self.violations

    def to_jsonable(self):
        return {
            "params": self.params,
            "checked": self.checked,
            "detected": self.detected,
            "violations": [
                {"i": i, "j1": j1, "j2": j2, "eid": eid}
                for i, j1, j2, eid in self.violations
            ],
            "min_excess": self.min_excess if self.min_excess != INF else None,
            "ms": self.ms,
        }

    def to_json(self):
        return json.dumps(self.to_jsonable(), sort_keys=True, indent=2) + "\n"


def verify_necessity(inst, beta, work_limit=None):
    """Check that removing any single block edge breaks the (1, beta) property.

    For each block edge the generator names the witnessing fault (the host
    path edge below the block's column) and target (the far endpoint), so
    the check is two BFS runs; a found violation is exactly a violation
    ``verify_structure`` would list.  If the witness ever fails to violate,
    the full exhaustive oracle is consulted before declaring a miss.
    """
    start = time.perf_counter()
    g = inst.graph
    s = inst.source
    undetected = []
    detected = 0
    min_excess = INF
    for i, j1, j2, eid in inst.block_edges:
        fault = frozenset((inst.p0_edge_by_j[j2],))
        target = inst.x[i - 1][j1 - 1]
        dg = ft_distance(g, s, target, fault)
        dh = ft_distance(g, s, target, fault | {eid})
        excess = dh - dg
        if excess > beta:
            detected += 1
            if excess < min_excess:
                min_excess = excess
            continue
        # Witness inconclusive: fall back to the exhaustive oracle.
        from .graph import build_graph

        h_pairs = [g.edges[e] for e in range(g.m) if e != eid]
        h = build_graph(g.n, h_pairs)
        report = verify_structure(g, h, s, 1, beta, 1, work_limit=work_limit)
        if report.passed:
            undetected.append((i, j1, j2, eid))
        else:
            detected += 1
    ms = int((time.perf_counter() - start) * 1000)
    return NecessityReport(
        params={"beta": beta, "d": inst.d, "n": g.n},
        checked=len(inst.block_edges),
        detected=detected,
        violations=undetected,
        min_excess=min_excess,
        ms=ms,
    )
