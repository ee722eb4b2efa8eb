"""Replacement paths under a four-component lexicographic edge cost.

Every structure builder needs a *canonical* shortest replacement path: two
distinct simple paths between the same endpoints must never compare equal,
or the constructions lose both their size bounds and their determinism.
The cost of a path is compared lexicographically on

    (hops, new_count, overlap, edge_bits)

where ``new_count`` counts edges outside the base BFS tree, ``overlap``
counts edges shared with the protected target's root path (zero when no
target context is given), and ``edge_bits`` breaks the remaining ties by
the rule "the path not containing the largest edge index in the symmetric
difference is smaller".  ``edge_bits`` is kept as an integer bitset over
edge indices, whose natural ``<`` implements exactly that rule, so no
astronomically scaled single-integer weight encoding is ever
materialized.

Each edge contributes (1, [not in tree], [on target path], {its index}),
so the cost is additive along a path and strictly grows with every hop.
That makes a label-setting Dijkstra with one settled label per vertex
exact: the settled label is the minimum over all simple paths, and it is
attained by exactly one path (distinct simple paths have distinct edge
sets, hence distinct edge_bits).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import INF, Path, tree_path


@dataclass(frozen=True)
class LexCost:
    """Comparable path cost; see module docstring for the ordering."""

    hops: int
    new_count: int
    overlap: int
    edge_bits: int

    def key(self):
        return (self.hops, self.new_count, self.overlap, self.edge_bits)

    def __lt__(self, other):
        return self.key() < other.key()

    def __le__(self, other):
        return self.key() <= other.key()


def path_cost(p, t, target_pi=None):
    """LexCost of a simple path, in the optional target-path context."""
    pi_eids = frozenset(target_pi.eids) if target_pi is not None else frozenset()
    new_count = 0
    overlap = 0
    bits = 0
    for eid in p.eids:
        if eid not in t.tree_edges:
            new_count += 1
        if eid in pi_eids:
            overlap += 1
        bits |= 1 << eid
    return LexCost(len(p), new_count, overlap, bits)


def compare_cost(p1, p2, t, target_pi=None):
    """-1, 0 or 1 as p1 compares to p2 under the lexicographic cost."""
    a = path_cost(p1, t, target_pi).key()
    b = path_cost(p2, t, target_pi).key()
    return (a > b) - (a < b)


def lex_sssp(g, t, source, banned=frozenset(), pi_eids=frozenset(), banned_vertices=frozenset(), stop_at=None):
    """Search from ``source`` minimizing LexCost; one settled label per vertex.

    Returns a per-vertex list of settled ``(hops, new, overlap, bits)``
    tuples (None where unreachable).  ``banned`` are removed edge ids,
    ``banned_vertices`` may not be entered, ``pi_eids`` is the overlap
    context.  With ``stop_at`` the search halts once that vertex settles,
    leaving later labels unset.
    """
    tree = t.tree_edges
    label = [None] * g.n
    heap = [(0, 0, 0, 0, source)]
    adj = g.adj
    while heap:
        hops, new, over, bits, u = heapq.heappop(heap)
        if label[u] is not None:
            continue
        label[u] = (hops, new, over, bits)
        if u == stop_at:
            break
        h1 = hops + 1
        for v, eid in adj[u]:
            if label[v] is not None or eid in banned or v in banned_vertices:
                continue
            heapq.heappush(
                heap,
                (h1, new + (eid not in tree), over + (eid in pi_eids), bits | (1 << eid), v),
            )
    return label


def _step_matches(lu, lv, eid, tree, pi_eids):
    """Does settled label lu extend along eid to exactly the label lv?"""
    return (
        lu[0] + 1 == lv[0]
        and lu[1] + (eid not in tree) == lv[1]
        and lu[2] + (eid in pi_eids) == lv[2]
        and lu[3] | (1 << eid) == lv[3]
    )


def walk_back(g, t, label, source, target, banned=frozenset(), pi_eids=frozenset()):
    """Reconstruct the unique optimal path to ``target`` from settled labels.

    The edge_bits of a settled label are the edge set of one simple path,
    and an edge set that forms a simple path determines it, so at every
    step exactly one neighbor's label extends to the current one.
    """
    tree = t.tree_edges
    verts = [target]
    eids = []
    v = target
    while v != source:
        lv = label[v]
        for u, eid in g.adj[v]:
            if eid in banned or label[u] is None:
                continue
            if _step_matches(label[u], lv, eid, tree, pi_eids):
                verts.append(u)
                eids.append(eid)
                v = u
                break
        else:
            raise AssertionError(f"no predecessor found at vertex {v}")
    verts.reverse()
    eids.reverse()
    return Path(tuple(verts), tuple(eids))


def recover_parents(g, t, label, banned=frozenset(), pi_eids=frozenset()):
    """Parent arrays for every settled vertex (for all-targets extraction)."""
    tree = t.tree_edges
    parent = [None] * g.n
    parent_eid = [None] * g.n
    for v in range(g.n):
        lv = label[v]
        if lv is None or lv[0] == 0:
            continue
        for u, eid in g.adj[v]:
            if eid in banned or label[u] is None:
                continue
            if _step_matches(label[u], lv, eid, tree, pi_eids):
                parent[v] = u
                parent_eid[v] = eid
                break
        else:
            raise AssertionError(f"no predecessor found at vertex {v}")
    return parent, parent_eid


def extract_path(source, target, parent, parent_eid):
    """Build the Path to ``target`` by following recovered parents."""
    verts = [target]
    eids = []
    v = target
    while v != source:
        eids.append(parent_eid[v])
        v = parent[v]
        verts.append(v)
    verts.reverse()
    eids.reverse()
    return Path(tuple(verts), tuple(eids))


def replacement_path(g, t, target, faults, pi_context=True):
    """The unique minimum-LexCost source->target path in g minus faults.

    With ``pi_context`` on, the overlap component measures sharing with the
    target's own tree path; with it off the overlap is identically zero
    (the uniqueness-only weighting used by the multi-fault builders).
    Returns None when the faults disconnect the target.
    """
    if t.depth[target] == INF:
        return None
    banned = frozenset(faults)
    if pi_context:
        pi_eids = frozenset(tree_path(g, t, t.source, target).eids)
    else:
        pi_eids = frozenset()
    label = lex_sssp(g, t, t.source, banned=banned, pi_eids=pi_eids, stop_at=target)
    if label[target] is None:
        return None
    return walk_back(g, t, label, t.source, target, banned=banned, pi_eids=pi_eids)
