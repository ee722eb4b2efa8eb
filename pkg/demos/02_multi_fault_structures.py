"""Protection against two simultaneous edge faults.

Runs the brute-force replacement-path table once and derives both
structures from it: the O(fn)-size variant that pays an additive log
term, and the pure-multiplicative variant that additionally keeps the
last edges of all short replacement paths.
"""

from ftabfs import (
    build_multf,
    build_multf_pure,
    fbfs,
    gen_family,
    structure_as_graph,
    verify_structure,
)
from ftabfs.mult_multi import log2_ceil, short_path_last_edges

f, k = 2, 3
n = 32
g = gen_family("gnp", n, p=3.5 / (n - 1), seed=21)
print(f"host graph: n={g.n}, m={g.m}, fault budget f={f}")

table = fbfs(g, 0, f)
print(f"replacement-path table: {len(table.fault_sets)} fault sets, "
      f"{len(table.edges)} edges used by some path")

st = build_multf(g, 0, f, table=table)
beta = (f + 1) * log2_ceil(g.n)
rep = verify_structure(g, structure_as_graph(g, st), 0, 3 * (f + 1), beta, f)
print(f"log-additive variant: {st.m} edges, verified at "
      f"({3 * (f + 1)}, {beta}) -> {'PASS' if rep.passed else 'FAIL'} "
      f"(worst ratio {rep.worst_mult:.2f}, worst extra {rep.worst_add})")

stp = build_multf_pure(g, 0, f, k, table=table)
ell = (f + 1) * (2 * k - 1)
short = short_path_last_edges(table, ell)
rep_p = verify_structure(g, structure_as_graph(g, stp), 0, 3 * (f + 1) + 1, 0, f)
print(f"pure variant (k={k}): {stp.m} edges, {len(short)} short-path last edges "
      f"(bound n*ell^(f+1) = {g.n * ell ** (f + 1)}), verified at "
      f"({3 * (f + 1) + 1}, 0) -> {'PASS' if rep_p.passed else 'FAIL'}")
