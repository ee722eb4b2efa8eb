"""Why additive structures cannot be linear-size: the hard family.

Every edge of the high-girth bipartite blocks is irreplaceable: remove
one, fail the matching host-path edge, and the surviving distance to the
block's left endpoint exceeds the allowed additive slack.  The necessity
oracle confirms this for every single block edge.
"""

from ftabfs import gen_lb_additive, girth, verify_necessity
from ftabfs.lbgen import gen_bipartite_girth, min_n_for

beta = 3
for d in (3, 4, 5):
    inst = gen_lb_additive(min_n_for(beta, d), beta)
    g = inst.graph
    rep = verify_necessity(inst, beta)
    blocks = len(inst.blocks)
    per_block = len(inst.block_edges) // blocks
    print(f"d={inst.d}: n={g.n}, m={g.m}, {blocks} blocks x {per_block} edges; "
          f"removals detected {rep.detected}/{rep.checked} "
          f"(min excess {rep.min_excess} > beta={beta}) "
          f"-> {'PASS' if rep.passed else 'FAIL'}")

# The blocks themselves: projective-plane incidence once the side is large
# enough to host one, greedy high-girth otherwise.
b = gen_bipartite_girth(7, 6)
print(f"side-7 block: {b.m} edges, girth {girth(b)} (plane incidence, optimal density)")
b = gen_bipartite_girth(5, 6)
print(f"side-5 block: {b.m} edges, girth {girth(b)} (greedy fallback)")
