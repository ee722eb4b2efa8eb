"""Structure container shared by all builders: base tree plus new edges."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import build_graph


@dataclass
class Structure:
    """A subgraph under construction: the BFS tree plus bought new edges.

    ``provenance`` maps each new edge id to the (target, fault_eid) pairs
    that contributed it; ``entry_points`` additionally records, per new
    edge, the endpoints through which the contributing paths entered it
    (diagnostics for the per-vertex counting bounds).  Both may be empty
    for builders that do not track contributions edge by edge.
    """

    tree: object
    new_edges: frozenset
    provenance: dict = field(default_factory=dict)
    entry_points: dict = field(default_factory=dict)

    def edge_ids(self):
        return frozenset(self.tree.tree_edges) | self.new_edges

    @property
    def m(self):
        return len(self.tree.tree_edges) + len(self.new_edges)


def serialize_structure(g, st):
    """Edge-list text: header, tree edges, new edges, new-edge-count trailer."""
    out = [f"# n={g.n}"]
    for eid in sorted(st.tree.tree_edges):
        u, v = g.edges[eid]
        out.append(f"{u} {v}")
    for eid in sorted(st.new_edges):
        u, v = g.edges[eid]
        out.append(f"{u} {v}")
    out.append(f"# new-edges={len(st.new_edges)}")
    return "\n".join(out) + "\n"


def structure_as_graph(g, st):
    """Materialize the structure as its own Graph (tree edges first)."""
    pairs = [g.edges[eid] for eid in sorted(st.tree.tree_edges)]
    pairs.extend(g.edges[eid] for eid in sorted(st.new_edges))
    return build_graph(g.n, pairs)
