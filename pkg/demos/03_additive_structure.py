"""The additive-4 construction, stage by stage.

The instance is shaped so every stage has work to do: two clusters hang
from sibling branches and a single inter-cluster edge is the only way
across once a trunk edge fails.  The buying stage pays for the crossing
detour once; the remaining candidates then cost nothing because the one
bought edge already carries them, and the oracle certifies dist + 4
everywhere.
"""

from ftabfs import add4_pipeline, structure_as_graph, verify_structure
from ftabfs.graph import build_graph

# Trunk 0-1-2-3 and branch 1-4-5; cluster {6,7,8} below 3 (hub 9),
# cluster {10,11,12} below 5 (hub 13); one crossing edge (10,6).
edges = [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]
edges += [(3, a) for a in (6, 7, 8)] + [(3, 9)] + [(9, a) for a in (6, 7, 8)]
edges += [(5, b) for b in (10, 11, 12)] + [(5, 13)] + [(13, b) for b in (10, 11, 12)]
edges += [(10, 6)]
g = build_graph(14, edges)

res = add4_pipeline(g, 0)
cs = res.clusters
print(f"clusters of size {cs.size}: {cs.clusters} (centers {cs.centers})")
print(f"clustering subgraph keeps {len(cs.gc_edges)} of {len(cs.allowed)} non-tree edges")

seg = res.segmentation
for cid in range(len(cs.clusters)):
    print(f"  cluster {cid}: shared prefix to vertex {seg.anchor[cid]}, "
          f"mid zone starts at {seg.top[cid]}")

print(f"near/far harvested edges: {sum(map(len, res.qcons.e_near.values()))} near, "
      f"{sum(map(len, res.qcons.e_far.values()))} far")

print("buying ledger (target fault cost value bought):")
for line in res.ledger.dump_lines():
    print("  " + line)

rep = verify_structure(g, structure_as_graph(g, res.structure), 0, 1, 4, 1)
print(f"final structure: {res.structure.m} of {g.m} edges, additive-4 oracle "
      f"-> {'PASS' if rep.passed else 'FAIL'} (worst extra hops {rep.worst_add})")
