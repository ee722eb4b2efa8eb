"""Graph generators: hard instances for additive structures, plus test families.

The hard family G(n, beta) pins a long host path to a grid of bipartite
high-girth blocks through calibrated connector paths: after the fault of
the j-th host-path edge, the unique shortest route to a block's left
vertex runs through the block edge itself, and girth beta+3 makes every
detour inside a block at least beta+1 hops longer.  Hence every block
edge is irreplaceable within additive slack beta, which the oracle can
confirm exhaustively at desk scale.
"""

from __future__ import annotations

import json
import math
import random
from collections import deque
from dataclasses import dataclass

from .graph import build_graph, connected_components, girth


def _is_prime(q):
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def _projective_plane_incidence(q):
    """Point-line incidence of the projective plane of prime order q.

    Points and lines are the 1-dimensional subspaces of GF(q)^3 in
    normalized homogeneous coordinates; point p lies on line l iff
    p . l == 0 (mod q).  q^2+q+1 of each, girth 6.
    """
    ppoints = []
    for x in range(q):
        for y in range(q):
            ppoints.append((1, x, y))
    for y in range(q):
        ppoints.append((0, 1, y))
    ppoints.append((0, 0, 1))
    edges = []
    for pi, p in enumerate(ppoints):
        for li, l in enumerate(ppoints):
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0:
                edges.append((pi, li))
    return len(ppoints), edges


def gen_bipartite_girth(side, girth_target):
    """Bipartite graph on side+side vertices with girth >= girth_target.

    Left vertices are 0..side-1, right ones side..2*side-1.  For girth 6
    with side >= 7 the densest known layout is used (projective-plane
    incidence of the largest prime order that fits, padded with isolated
    vertices); otherwise a deterministic greedy scan keeps an edge iff the
    current endpoints' distance is at least girth_target - 1.  Density is
    best effort; the girth guarantee is asserted.
    """
    if side < 1:
        raise ValueError(f"side must be >= 1, got {side}")
    if girth_target < 4:
        raise ValueError(f"girth target must be >= 4, got {girth_target}")
    # Bipartite cycles are even, so an odd target means the next even one.
    girth_target += girth_target % 2
    pairs = []
    if girth_target == 6 and side >= 7:
        q = next(q for q in range(side, 1, -1) if _is_prime(q) and q * q + q + 1 <= side)
        count, inc = _projective_plane_incidence(q)
        assert count <= side
        pairs = [(p, side + l) for p, l in inc]
    else:
        adj = [[] for _ in range(2 * side)]
        for a in range(side):
            for b in range(side):
                if _hop_dist(adj, a, side + b, girth_target - 2) >= girth_target - 1:
                    pairs.append((a, side + b))
                    adj[a].append(side + b)
                    adj[side + b].append(a)
    g = build_graph(2 * side, pairs)
    assert girth(g) >= girth_target
    return g


def _hop_dist(adj, u, v, cap):
    """Distance from u to v over adj, or cap+1 when it exceeds cap."""
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
            if y == v:
                return dx + 1
            if y not in dist:
                dist[y] = dx + 1
                q.append(y)
    return cap + 1


@dataclass
class LbInstance:
    """A generated hard instance with its component inventory.

    Coordinates in ``block_edges`` are 1-based (column j1 on the left
    side, column j2 on the right side of block i); ``p0_edge_by_j`` maps
    the 1-based host-path edge number to its global edge id.
    """

    graph: object
    source: int
    n: int
    beta: int
    d: int
    p0_vertices: list
    p0_edge_by_j: dict
    vstar: int
    x: list
    z: list
    w: list
    u_paths: list
    q_paths: list
    p_paths: list
    r_vertices: list
    block_edges: list  # (i, j1, j2, eid), 1-based coords
    blocks: list  # per-block frozenset of edge ids

    def necessary_edges(self):
        return frozenset(eid for _, _, _, eid in self.block_edges)

    def inventory(self):
        return {
            "n": self.n,
            "beta": self.beta,
            "d": self.d,
            "source": self.source,
            "p0_vertices": self.p0_vertices,
            "p0_edge_by_j": {str(j): e for j, e in sorted(self.p0_edge_by_j.items())},
            "vstar": self.vstar,
            "x": self.x,
            "z": self.z,
            "w": self.w,
            "u_paths": self.u_paths,
            "q_paths": self.q_paths,
            "p_paths": self.p_paths,
            "r_vertices": self.r_vertices,
            "block_edges": [
                {"i": i, "j1": j1, "j2": j2, "eid": eid}
                for i, j1, j2, eid in self.block_edges
            ],
        }

    def inventory_json(self):
        return json.dumps(self.inventory(), sort_keys=True, indent=2) + "\n"


def min_n_for(beta, d=2):
    """Smallest n whose derived grid parameter reaches d."""
    return 14 * beta * d * d


def gen_lb_additive(n, beta):
    """Assemble the hard instance G(n, beta); exact vertex count n.

    The grid parameter is d = floor(sqrt(n / (14*beta))); an error names
    the minimum n when d would drop below 2.  Vertex ids are assigned
    block-major: host path, left grid, left connector interiors, right
    grid, hubs, hub connector interiors, column paths, padding path.
    """
    if beta < 3:
        raise ValueError(f"additive stretch must be >= 3, got {beta}")
    d = math.isqrt(n // (14 * beta))
    if d < 2:
        raise ValueError(
            f"n={n} too small for beta={beta}: need n >= {min_n_for(beta)} (grid parameter >= 2)"
        )

    counter = [0]

    def alloc(k):
        base = counter[0]
        counter[0] += k
        return list(range(base, base + k))

    p0 = alloc(d + 1)  # host path [s = v_1, ..., v_{d+1} = v*]
    s = p0[0]
    vstar = p0[-1]
    x = [alloc(d) for _ in range(d)]  # x[i][j], 0-based grid
    u_interiors = [[alloc(beta) for _ in range(d)] for _ in range(d)]
    z = [alloc(d) for _ in range(d)]
    w = alloc(d)
    q_interiors = [[alloc(beta) for _ in range(d)] for _ in range(d)]
    # Column path lengths must shrink by beta+2 per column: the route
    # through column j also saves one host-path hop per column step, so a
    # beta+1 length gap alone would let a sibling block edge one column up
    # replace a removed edge within additive slack exactly beta.  The
    # extra unit makes every cross-column detour at least beta+1 longer,
    # which is what the irreplaceability argument needs.
    p_len = [d + 4 + (beta + 2) * (d - j + 1) for j in range(1, d + 1)]  # edge counts
    p_interiors = [alloc(p_len[j] - 1) for j in range(d)]

    edges = []

    def path_edges(verts):
        edges.extend(zip(verts, verts[1:]))

    path_edges(p0)
    p0_edge_by_j = {j: j - 1 for j in range(1, d + 1)}  # p0 edges come first

    u_paths = []
    for i in range(d):
        for j in range(d):
            verts = [vstar] + u_interiors[i][j] + [x[i][j]]
            path_edges(verts)
            u_paths.append(verts)
    q_paths = []
    for i in range(d):
        for j in range(d):
            verts = [w[j]] + q_interiors[i][j] + [z[i][j]]
            path_edges(verts)
            q_paths.append(verts)
    p_paths = []
    for j in range(d):
        verts = [p0[j]] + p_interiors[j] + [w[j]]
        path_edges(verts)
        p_paths.append(verts)

    block_edges = []
    blocks = []
    block_graph = gen_bipartite_girth(d, beta + 3)
    for i in range(d):
        eids = []
        for a, b in block_graph.edges:
            j1, j2 = a, b - d
            eid = len(edges)
            edges.append((x[i][j1], z[i][j2]))
            block_edges.append((i + 1, j1 + 1, j2 + 1, eid))
            eids.append(eid)
        blocks.append(frozenset(eids))

    used = counter[0]
    d_prime = n - used
    if d_prime < 0:
        raise AssertionError(f"component accounting exceeded n: {used} > {n}")
    r = alloc(d_prime)
    if r:
        path_edges([s] + r)

    g = build_graph(n, edges)
    assert g.n == n and counter[0] == n
    for j in range(1, d + 1):
        assert g.edges[p0_edge_by_j[j]] == (p0[j - 1], p0[j])
    return LbInstance(
        graph=g,
        source=s,
        n=n,
        beta=beta,
        d=d,
        p0_vertices=p0,
        p0_edge_by_j=p0_edge_by_j,
        vstar=vstar,
        x=x,
        z=z,
        w=w,
        u_paths=u_paths,
        q_paths=q_paths,
        p_paths=p_paths,
        r_vertices=r,
        block_edges=block_edges,
        blocks=blocks,
    )


def gen_family(kind, n, p=None, seed=0):
    """Deterministic test families: gnp, cycle, grid, complete, tree.

    gnp draws each pair with probability p and then chains component
    representatives so the result is always connected; all randomness
    comes from the seed.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        pairs = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    elif kind == "complete":
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif kind == "grid":
        width = math.ceil(math.sqrt(n))
        pairs = []
        for v in range(n):
            if (v + 1) % width and v + 1 < n:
                pairs.append((v, v + 1))
            if v + width < n:
                pairs.append((v, v + width))
    elif kind == "tree":
        rng = random.Random(seed)
        pairs = [(rng.randrange(v), v) for v in range(1, n)]
    elif kind == "gnp":
        if p is None:
            raise ValueError("gnp needs p")
        rng = random.Random(seed)
        pairs = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g0 = build_graph(n, pairs)
        comps = connected_components(g0)
        pairs = pairs + [
            (comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)
        ]
    else:
        raise ValueError(f"unknown family {kind!r}")
    return build_graph(n, pairs)
