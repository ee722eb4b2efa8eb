"""Shared test fixtures: independent oracles and crafted instances.

The oracles here deliberately avoid the library's own search routines:
distances come from Floyd-Warshall, girth from per-edge removal, path
enumeration from DFS, so every comparison is implementation-vs-oracle.
"""

from __future__ import annotations

from ftabfs.graph import INF, Path, build_graph
from ftabfs.lbgen import gen_family


def floyd_warshall(g, banned=frozenset()):
    n = g.n
    dist = [[INF] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for eid, (u, v) in enumerate(g.edges):
        if eid not in banned:
            dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def brute_girth(g):
    """Shortest cycle by removing each edge and measuring endpoint distance."""
    best = INF
    for eid, (u, v) in enumerate(g.edges):
        d = floyd_warshall(g, frozenset((eid,)))[u][v]
        if d + 1 < best:
            best = d + 1
    return best


def all_simple_paths(g, s, t, banned=frozenset()):
    """Every simple s->t path as a Path (DFS; exponential, tiny graphs only)."""
    out = []
    verts = [s]
    eids = []
    onpath = {s}

    def rec(u):
        if u == t:
            out.append(Path(tuple(verts), tuple(eids)))
            return
        for v, eid in g.adj[u]:
            if eid in banned or v in onpath:
                continue
            verts.append(v)
            eids.append(eid)
            onpath.add(v)
            rec(v)
            onpath.remove(v)
            verts.pop()
            eids.pop()

    rec(s)
    return out


def parent_walk_path_len(t, x, y):
    """|tree path| via raw parent walks (independent of tree_path)."""
    ax, ay = x, y
    da, db = t.depth[x], t.depth[y]
    hops = 0
    while da > db:
        ax = t.parent[ax]
        da -= 1
        hops += 1
    while db > da:
        ay = t.parent[ay]
        db -= 1
        hops += 1
    while ax != ay:
        ax = t.parent[ax]
        ay = t.parent[ay]
        hops += 2
    return hops


def root_path_edges(t, v):
    """Edge ids on the tree path source->v via raw parent walks."""
    out = set()
    while t.parent[v] is not None:
        out.add(t.parent_eid[v])
        v = t.parent[v]
    return out


def gnp_connected(n, deg, seed):
    return gen_family("gnp", n, p=min(1.0, deg / (n - 1)), seed=seed)


def fano_incidence():
    """Point-line incidence of the 7-point projective plane (girth 6).

    Lines are the 3-subsets of 1..7 whose bitwise XOR vanishes.
    """
    from itertools import combinations

    lines = [t for t in combinations(range(1, 8), 3) if t[0] ^ t[1] ^ t[2] == 0]
    assert len(lines) == 7
    pairs = []
    for li, line in enumerate(lines):
        for p in line:
            pairs.append((p - 1, 7 + li))
    return build_graph(14, pairs)


def buying_instance():
    """Two sibling clusters joined by one crossing edge.

    Faults on the trunk above either cluster force replacement paths that
    end with the inter-cluster edge, so the buying stage sees candidates
    (and purchases one).
    """
    edges = [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]
    edges += [(3, a) for a in (6, 7, 8)] + [(3, 9)] + [(9, a) for a in (6, 7, 8)]
    edges += [(5, b) for b in (10, 11, 12)] + [(5, 13)] + [(13, b) for b in (10, 11, 12)]
    edges += [(10, 6)]
    return build_graph(14, edges)


def crossing_gadget(seed, branches=3, size=4):
    """Randomized cluster-crossing gadget for the buying machinery.

    ``branches`` equal-length paths hang from the source, each ending in a
    platform that carries a cluster of ``size`` members plus a hub; random
    crossing edges join members of different clusters at equal depth.  A
    padding chain fixes n = size**3 so ceil(n^(1/3)) == size.  Faults on
    branch edges cut one cluster off, and the crossings are the only way
    back in, so replacement paths end with inter-cluster edges.
    """
    import random

    rng = random.Random(seed)
    n_target = size**3
    length = rng.randrange(2, 5)
    edges = []
    nxt = 1
    platforms = []
    clusters = []
    for _ in range(branches):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        platforms.append(prev)
        members = list(range(nxt, nxt + size))
        hub = nxt + size
        nxt += size + 1
        edges += [(prev, v) for v in members + [hub]]
        edges += [(hub, v) for v in members]
        clusters.append(members)
    for i in range(branches):
        for j in range(i + 1, branches):
            for _ in range(rng.randrange(1, 3)):
                edges.append((rng.choice(clusters[i]), rng.choice(clusters[j])))
    # Deduplicate crossings drawn twice, then pad to the target size.
    seen = set()
    uniq = []
    for u, v in edges:
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            uniq.append((u, v))
    prev = 0
    while nxt < n_target:
        uniq.append((prev, nxt))
        prev = nxt
        nxt += 1
    return build_graph(n_target, uniq)


def deep_capture_instance():
    """Deep spine with twin bypasses; exit points land above the mid zone.

    Mid-zone trunk faults force replacement paths whose single exit vertex
    sits in the far zone, so the shared per-target path (and only its last
    edge) is kept.
    """
    edges = [(i, i + 1) for i in range(40)]
    nxt = 41
    twin = [10]
    for _ in range(10):
        edges.append((twin[-1], nxt))
        twin.append(nxt)
        nxt += 1
    edges.append((twin[-1], 21))
    chain = [10]
    for _ in range(30):
        edges.append((chain[-1], nxt))
        chain.append(nxt)
        nxt += 1
    ytwin = [10]
    for _ in range(10):
        edges.append((ytwin[-1], nxt))
        ytwin.append(nxt)
        nxt += 1
    edges.append((ytwin[-1], chain[11]))
    c_members = list(range(nxt, nxt + 6))
    nxt += 6
    edges += [(40, v) for v in c_members] + [(c_members[-1], v) for v in c_members[:-1]]
    w_members = list(range(nxt, nxt + 6))
    nxt += 6
    edges += [(chain[-1], v) for v in w_members] + [(w_members[-1], v) for v in w_members[:-1]]
    edges += [(w_members[0], c_members[0])]
    return build_graph(nxt, edges)
