"""Single-edge-fault protection with multiplicative stretch 3.

Builds the sparse structure on a random graph, shows the size accounting
(at most 3n edges beyond the BFS tree, 4n total), and lets the exhaustive
oracle certify the stretch guarantee under every possible single fault.
"""

from ftabfs import build_mult3, gen_family, structure_as_graph, verify_structure

n = 80
g = gen_family("gnp", n, p=6.0 / (n - 1), seed=7)
print(f"host graph: n={g.n}, m={g.m}")

st = build_mult3(g, 0)
print(f"structure:  tree edges={len(st.tree.tree_edges)}, new edges={len(st.new_edges)}")
print(f"size bounds: new <= 3n ({len(st.new_edges)} <= {3 * n}), total <= 4n ({st.m} <= {4 * n})")

# Which vertices attracted protection edges, and against which faults?
sample = sorted(st.provenance.items())[:3]
for eid, pairs in sample:
    u, v = g.edges[eid]
    some = sorted(pairs)[:3]
    print(f"  kept edge ({u},{v}) protects e.g. (target, fault) pairs {some}")

rep = verify_structure(g, structure_as_graph(g, st), 0, alpha=3, beta=0, f=1)
print(f"oracle: checked {rep.checked} (target, fault) pairs, "
      f"worst ratio {rep.worst_mult:.3f}, worst extra hops {rep.worst_add}")
print("PASS" if rep.passed else f"FAIL: {rep.violations[:5]}")

# The guarantee is tight in the sense that the bare BFS tree fails it.
from ftabfs import bfs_tree, build_graph

t = bfs_tree(g, 0)
tree_only = build_graph(g.n, [g.edges[e] for e in sorted(t.tree_edges)])
rep_tree = verify_structure(g, tree_only, 0, alpha=3, beta=0, f=1)
print(f"bare tree violations under the same check: {len(rep_tree.violations)}")
