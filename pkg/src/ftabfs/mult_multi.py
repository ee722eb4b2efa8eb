"""Structures resilient to f simultaneous edge faults.

Three phases: a brute-force table of canonical replacement paths for every
fault set up to the budget; per-path sparsification that keeps at most
f+1 of each path's non-tree edges (same-component endpoints are bypassed
through the surviving tree); and a fault-tolerant spanner over the kept
non-tree edges.  The plain variant trades an additive log-term for O(fn)
size; the pure-multiplicative variant additionally keeps the last edges
of all short replacement paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import bfs_tree, tree_path
from .limits import guard_fault_enumeration
from .repath import extract_path, lex_sssp, recover_parents
from .spanner import ft_spanner
from .structure import Structure


@dataclass(frozen=True)
class Labeling:
    """Connected-component labels of the tree after removing a fault set.

    Vertices share a label iff they stay connected in the surviving
    forest; labels are numbered by first appearance in vertex-id order.
    """

    faults: frozenset
    labels: tuple
    n_labels: int


def label_components(g, t, faults):
    faults = frozenset(faults)
    labels = [None] * g.n
    nxt = 0
    for v0 in range(g.n):
        if labels[v0] is not None:
            continue
        labels[v0] = nxt
        stack = [v0]
        while stack:
            u = stack.pop()
            for w in t.children[u]:
                eid = t.parent_eid[w]
                if eid not in faults and labels[w] is None:
                    labels[w] = nxt
                    stack.append(w)
            p = t.parent[u]
            if p is not None and t.parent_eid[u] not in faults and labels[p] is None:
                labels[p] = nxt
                stack.append(p)
        nxt += 1
    return Labeling(faults=faults, labels=tuple(labels), n_labels=nxt)


@dataclass(frozen=True)
class SparsePathSelection:
    """Outcome of sparsifying one replacement path.

    ``new`` lists the path's non-tree edges as (position, eid, endpoint)
    triples in path order, where the endpoint is the vertex the path
    reaches through the edge.  ``matched`` maps each new-edge index to the
    farthest later index whose endpoint carries the same component label;
    ``selected`` are the kept indices, and ``bypass`` the walk that uses
    only kept new edges plus surviving tree paths.
    """

    path: object
    new: tuple
    matched: tuple
    selected: tuple
    bypass: object

    def selected_eids(self):
        return tuple(self.new[i][1] for i in self.selected)


def sparsify_path(g, t, p, labeling):
    """Keep at most one new edge per surviving tree component.

    Walks the path's new edges in order; after keeping one, skips ahead
    past the farthest later new-edge endpoint in the same component (the
    skipped stretch can be bypassed inside that component's subtree).
    """
    labels = labeling.labels
    new = tuple(
        (pos, eid, p.vertices[pos + 1])
        for pos, eid in enumerate(p.eids)
        if eid not in t.tree_edges
    )
    k = len(new)
    matched = []
    for i in range(k):
        li = labels[new[i][2]]
        far = i
        for j in range(k - 1, i, -1):
            if labels[new[j][2]] == li:
                far = j
                break
        matched.append(far)
    selected = []
    i = 0
    while i < k:
        selected.append(i)
        i = matched[i] + 1

    # Bypass walk: path prefix to the first kept endpoint, then alternate
    # tree detours (to the matched endpoint) with path stretches that each
    # cross exactly one kept new edge.
    if not selected:
        bypass = p
    else:
        pos0 = new[selected[0]][0]
        bypass = p.__class__(p.vertices[: pos0 + 2], p.eids[: pos0 + 1])
        for y, i_sel in enumerate(selected):
            v_i = new[i_sel][2]
            v_m = new[matched[i_sel]][2]
            if v_m != v_i:
                bypass = bypass.concat(tree_path(g, t, v_i, v_m))
            nxt_pos = new[selected[y + 1]][0] if y + 1 < len(selected) else len(p.eids)
            from_pos = new[matched[i_sel]][0] + 1
            if nxt_pos >= from_pos:
                seg = p.__class__(
                    p.vertices[from_pos : nxt_pos + 2], p.eids[from_pos : nxt_pos + 1]
                )
                if len(seg) > 0:
                    bypass = bypass.concat(seg)

    sel_labels = [labels[new[i][2]] for i in selected]
    assert len(set(sel_labels)) == len(sel_labels), "kept endpoints must differ in component"
    assert len(selected) <= labeling.n_labels
    assert len(bypass) <= 3 * max(1, len(selected)) * len(p)
    return SparsePathSelection(
        path=p, new=new, matched=tuple(matched), selected=tuple(selected), bypass=bypass
    )


@dataclass
class FbfsTable:
    """Canonical replacement paths for every fault set up to the budget.

    ``paths[fault_tuple][v]`` is the minimum-length replacement path to v
    (uniqueness-weighted, no target context) or None when disconnected;
    ``edges`` is the union of all path edges.
    """

    tree: object
    f: int
    fault_sets: list
    paths: dict
    edges: frozenset


def fbfs(g, s, f, work_limit=None, prune=True):
    """Brute-force replacement-path table over all fault sets |F| <= f.

    Cost grows as C(m, f); a work-limit guard refuses oversized runs.
    With ``prune`` on (default), a fault set that does not touch any path
    recorded so far reuses the table entry of its touching subset -- the
    untouched faults cannot change any canonical path.  The equivalence is
    covered by tests; pass ``prune=False`` to force full recomputation.
    """
    guard_fault_enumeration(g.m, f, g.n, work_limit)
    t = bfs_tree(g, s)
    fault_sets = [()]
    for size in range(1, f + 1):
        fault_sets.extend(combinations(range(g.m), size))

    paths = {}
    union_edges = set()

    def compute(combo):
        banned = frozenset(combo)
        label = lex_sssp(g, t, s, banned=banned)
        parent, parent_eid = recover_parents(g, t, label, banned=banned)
        row = [None] * g.n
        for v in range(g.n):
            if label[v] is None:
                continue
            row[v] = extract_path(s, v, parent, parent_eid)
            union_edges.update(row[v].eids)
        return row

    for combo in fault_sets:
        if prune and combo:
            touching = tuple(e for e in combo if e in union_edges)
            if len(touching) < len(combo):
                paths[combo] = paths[touching]
                continue
        paths[combo] = compute(combo)
    return FbfsTable(tree=t, f=f, fault_sets=fault_sets, paths=paths, edges=frozenset(union_edges))


def log2_ceil(n):
    return (n - 1).bit_length() if n >= 1 else 0


def _odd_up(x):
    return x if x % 2 == 1 else x + 1


def _sparsified_new_edges(g, table):
    """Union of kept new edges over every (fault set, target) path."""
    t = table.tree
    labelings = {}
    kept = set()
    seen_rows = set()
    for combo in table.fault_sets:
        row = table.paths[combo]
        if id(row) in seen_rows:
            continue  # pruned alias: identical paths, identical selection
        seen_rows.add(id(row))
        lab = labelings.get(combo)
        if lab is None:
            lab = label_components(g, t, combo)
            labelings[combo] = lab
        for v in range(g.n):
            p = row[v]
            if p is None or len(p) == 0:
                continue
            sel = sparsify_path(g, t, p, lab)
            assert len(sel.selected) <= table.f + 1
            assert len(sel.bypass) <= 3 * (table.f + 1) * len(p)
            kept.update(sel.selected_eids())
    return kept


def _multf_core(g, s, f, spanner_alpha, work_limit=None, table=None):
    if f < 1:
        raise ValueError(f"fault budget must be >= 1, got {f}")
    if table is None:
        table = fbfs(g, s, f, work_limit=work_limit)
    t = table.tree
    kept = _sparsified_new_edges(g, table)
    non_tree = {e for e in kept if e not in t.tree_edges}
    thinned = ft_spanner(g, spanner_alpha, f, edges=non_tree)
    return t, thinned.edges, table


def build_multf(g, s, f, work_limit=None, table=None):
    """(3(f+1), (f+1)*ceil(log2 n)) structure with O(fn) edges."""
    alpha = _odd_up(max(1, log2_ceil(g.n)))
    t, spanner_edges, _ = _multf_core(g, s, f, alpha, work_limit, table)
    return Structure(tree=t, new_edges=frozenset(spanner_edges - t.tree_edges))


def short_path_last_edges(table, ell):
    """Last edges of every replacement path of length in [1, ell]."""
    out = set()
    seen_rows = set()
    for combo in table.fault_sets:
        row = table.paths[combo]
        if id(row) in seen_rows:
            continue
        seen_rows.add(id(row))
        for p in row:
            if p is not None and 1 <= len(p) <= ell:
                out.add(p.last_edge())
    return out


def build_multf_pure(g, s, f, k=3, work_limit=None, table=None):
    """(3(f+1)+1, 0) structure: short-path last edges plus a 2k-1 thinning."""
    if k < 3:
        raise ValueError(f"spanner parameter must be >= 3, got {k}")
    ell = (f + 1) * (2 * k - 1)
    t, spanner_edges, table = _multf_core(g, s, f, 2 * k - 1, work_limit, table)
    short = short_path_last_edges(table, ell)
    new = (short | spanner_edges) - t.tree_edges
    return Structure(tree=t, new_edges=frozenset(new))
