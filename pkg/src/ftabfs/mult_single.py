"""Single-edge-fault structure with multiplicative stretch 3.

For every target and every tree edge on its root path, compute the
canonical replacement path (target-path context on); whenever that path
ends with a non-tree edge, keep only its first non-tree edge.  The tree
plus these first edges is a (3, 0) single-fault structure, and each vertex
can be the entry endpoint of at most three kept edges, so at most 3n new
edges are ever added.
"""

from __future__ import annotations

from .graph import INF, bfs_tree, tree_path
from .repath import lex_sssp, walk_back
from .structure import Structure


def first_new_edge(p, t):
    """Global id of the first (from the path start) non-tree edge; None if all tree."""
    for eid in p.eids:
        if eid not in t.tree_edges:
            return eid
    return None


def first_new_edge_info(p, t):
    """(position, eid, entry_vertex) of the first non-tree edge; None if none.

    ``entry_vertex`` is the endpoint reached when the path crosses the
    edge, i.e. the far end in path direction.
    """
    for pos, eid in enumerate(p.eids):
        if eid not in t.tree_edges:
            return pos, eid, p.vertices[pos + 1]
    return None


def is_new_ending(p, t):
    """True when the path's last edge is not a tree edge."""
    last = p.last_edge()
    return last is not None and last not in t.tree_edges


def build_mult3(g, s):
    """Build the 1-fault (3, 0) structure rooted at s.

    Targets are scanned in ascending id; faults along each root path from
    the source downward.  Pairs whose fault disconnects the target are
    skipped (nothing to protect).
    """
    t = bfs_tree(g, s)
    new_edges = set()
    provenance = {}
    entry_points = {}
    for ui in range(g.n):
        if ui == s or t.depth[ui] == INF:
            continue
        pi = tree_path(g, t, s, ui)
        pi_eids = frozenset(pi.eids)
        for fault in pi.eids:
            banned = frozenset((fault,))
            label = lex_sssp(g, t, s, banned=banned, pi_eids=pi_eids, stop_at=ui)
            if label[ui] is None:
                continue
            path = walk_back(g, t, label, s, ui, banned=banned, pi_eids=pi_eids)
            if path.last_edge() in t.tree_edges:
                continue
            _pos, eid, entry = first_new_edge_info(path, t)
            new_edges.add(eid)
            provenance.setdefault(eid, set()).add((ui, fault))
            entry_points.setdefault(eid, set()).add(entry)
    return Structure(tree=t, new_edges=frozenset(new_edges), provenance=provenance, entry_points=entry_points)
