"""Single-fault structure with additive stretch 4 and O(n^{4/3}) edges.

Pipeline: cluster the non-tree graph (clusters of ⌈n^{1/3}⌉ vertices with
diameter 2 in the clustering subgraph), split every clustered vertex's
root path into far/mid/near segments, protect near and far faults by
keeping the last edges of a well-behaved replacement-path family, rebuild
the family once more for prefix reuse, and finally run a cost/value
path-buying pass over the remaining detours: a detour is added in full
iff its missing-edge count is at most four times the number of
vertex-to-cluster and cluster-to-cluster distances it improves.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .graph import INF, bfs_distances, bfs_tree, lca, path_from_vertices, sensitive, tree_path
from .repath import lex_sssp, walk_back
from .structure import Structure


# ---------------------------------------------------------------------------
# Clustering


@dataclass(frozen=True)
class ClusterSet:
    """Disjoint same-size clusters plus the clustering subgraph.

    ``gc_edges`` keeps every allowed edge except those joining two
    different clusters; each cluster's members are all adjacent to its
    center inside ``gc_edges``, so intra-cluster distances are <= 2 there.
    """

    size: int
    clusters: tuple
    centers: tuple
    cluster_of: dict
    gc_edges: frozenset
    allowed: frozenset


def cluster(g, gamma, excluded=frozenset()):
    """Greedy clustering of g minus the excluded edges.

    While some vertex has >= ⌈n^gamma⌉ unclustered neighbors (smallest id
    first), the smallest ⌈n^gamma⌉ of them form a cluster and the star
    edges go to the clustering subgraph; afterwards every edge with an
    unclustered endpoint and every intra-cluster edge is added too.
    """
    n = g.n
    size = math.ceil(n**gamma) if n > 0 else 1
    allowed = frozenset(range(g.m)) - frozenset(excluded)
    adj = [[] for _ in range(n)]
    for eid in sorted(allowed):
        u, v = g.edges[eid]
        adj[u].append((v, eid))
        adj[v].append((u, eid))

    cluster_of = {}
    clusters = []
    centers = []
    gc = set()
    while True:
        center = None
        members = None
        for c in range(n):
            free = [v for v, _ in adj[c] if v not in cluster_of]
            if len(free) >= size:
                center = c
                members = sorted(free)[:size]
                break
        if center is None:
            break
        cid = len(clusters)
        for v in members:
            cluster_of[v] = cid
        clusters.append(tuple(members))
        centers.append(center)
        star = {v: eid for v, eid in adj[center]}
        gc.update(star[v] for v in members)

    for eid in allowed:
        u, v = g.edges[eid]
        cu, cv = cluster_of.get(u), cluster_of.get(v)
        if cu is None or cv is None or cu == cv:
            gc.add(eid)

    # Structural guarantees the rest of the pipeline relies on.
    assert all(len(c) == size for c in clusters)
    assert len(cluster_of) == size * len(clusters), "clusters must be disjoint"
    assert len(clusters) * size <= n
    for eid in allowed - gc:
        u, v = g.edges[eid]
        assert cluster_of.get(u) is not None and cluster_of.get(v) is not None
        assert cluster_of[u] != cluster_of[v]
    return ClusterSet(
        size=size,
        clusters=tuple(clusters),
        centers=tuple(centers),
        cluster_of=cluster_of,
        gc_edges=frozenset(gc),
        allowed=allowed,
    )


# ---------------------------------------------------------------------------
# Root-path segmentation


@dataclass(frozen=True)
class Segmentation:
    """Per-cluster split points of the shared root-path prefix.

    The shared prefix runs from the source to the cluster's lowest common
    ancestor; its bottom ``mid_cap`` edges form the mid segment and
    everything above is far.  Edges below the ancestor (per member) are
    near.  Clusters outside the source component carry None entries.
    """

    mid_cap: int
    anchor: tuple  # per-cluster LCA vertex
    top: tuple  # per-cluster upper end of the mid segment
    shared_eids: tuple  # per-cluster edge ids of the source->LCA tree path
    mid_vertices: tuple  # per-cluster frozenset of mid-segment vertices

    def fault_zone(self, t, cid, fault_eid, fault_depth):
        """'far' | 'mid' | 'near' placement of a root-path fault."""
        a = self.anchor[cid]
        if fault_depth > t.depth[a]:
            return "near"
        if fault_depth > t.depth[self.top[cid]]:
            return "mid"
        return "far"


def segment(g, t, cs):
    """Compute split points for every cluster of cs under tree t."""
    n = g.n
    mid_cap = math.ceil(n ** (2 / 3))
    anchor = []
    top = []
    shared = []
    midv = []
    for members in cs.clusters:
        if any(t.depth[v] == INF for v in members):
            anchor.append(None)
            top.append(None)
            shared.append(None)
            midv.append(None)
            continue
        a = lca(t, members)
        z = a
        while t.depth[z] > max(0, t.depth[a] - mid_cap):
            z = t.parent[z]
        pi_c = tree_path(g, t, t.source, a)
        anchor.append(a)
        top.append(z)
        shared.append(frozenset(pi_c.eids))
        zd = t.depth[z]
        midv.append(frozenset(v for v in pi_c.vertices if t.depth[v] >= zd))
    return Segmentation(
        mid_cap=mid_cap,
        anchor=tuple(anchor),
        top=tuple(top),
        shared_eids=tuple(shared),
        mid_vertices=tuple(midv),
    )


# ---------------------------------------------------------------------------
# First replacement-path family (near/far last-edge harvesting)


@dataclass
class QconsResult:
    paths: dict  # (target, fault_eid) -> Path
    e_near: dict  # target -> set of eids
    e_far: dict  # target -> set of eids
    forced_missing: set  # pairs where every replacement path ends off the base subgraph
    divergence: dict  # pair -> single divergence vertex (forced pairs only)


def _divergence_prefix(p, pi):
    """Length of the maximal common prefix (in edges) of p and pi."""
    q = 0
    for a, b in zip(p.eids, pi.eids):
        if a != b:
            break
        q += 1
    return q


def qcons(g, t, base_eids, cs, seg, fault_dists):
    """Build one replacement path per (target, root-path fault) pair.

    When some shortest replacement path can end inside ``base_eids`` (the
    tree plus clustering subgraph), the uniqueness-weighted one avoiding
    the target's missing incident edges is taken.  Otherwise every
    replacement path ends with a missing edge; the path chosen then leaves
    the target's root path exactly once, at the shallowest vertex any such
    single-divergence path can leave from, with uniqueness-weighted ties.
    Also harvests the missing last edges for near- and far-zone faults and
    checks the well-behavedness bounds (<= 5 near, <= ⌈n^{1/3}⌉ far).
    """
    n = g.n
    paths = {}
    e_near = {}
    e_far = {}
    forced = set()
    divergence = {}
    for vi in range(n):
        if vi == t.source or t.depth[vi] == INF:
            continue
        pi = tree_path(g, t, t.source, vi)
        pi_vset = frozenset(pi.vertices)
        missing_inc = frozenset(eid for _, eid in g.adj[vi] if eid not in base_eids)
        rev_label = None
        for fault in pi.eids:
            dist_j = fault_dists(fault)
            lj = dist_j[vi]
            if lj == INF:
                continue
            banned = frozenset((fault,))
            if missing_inc:
                avoid = bfs_distances(g, t.source, banned | missing_inc)[vi]
            else:
                avoid = lj
            if avoid == lj:
                # A replacement path ending inside the base subgraph exists.
                label = lex_sssp(g, t, t.source, banned=banned | missing_inc, stop_at=vi)
                q = walk_back(g, t, label, t.source, vi, banned=banned | missing_inc)
            else:
                forced.add((vi, fault))
                if rev_label is None:
                    rev_label = lex_sssp(
                        g, t, vi, banned_vertices=pi_vset - {vi}
                    )
                q = _shallowest_single_divergence(
                    g, t, vi, pi, rev_label, fault, lj
                )
                divergence[(vi, fault)] = q.vertices[_divergence_prefix(q, pi)]
            paths[(vi, fault)] = q
            last = q.last_edge()
            if last not in base_eids:
                cid = cs.cluster_of.get(vi)
                assert cid is not None, "missing last edge implies a clustered target"
                zone = seg.fault_zone(t, cid, fault, _fault_depth(g, t, fault))
                if zone == "near":
                    e_near.setdefault(vi, set()).add(last)
                elif zone == "far":
                    e_far.setdefault(vi, set()).add(last)

    far_cap = math.ceil(n ** (1 / 3))
    for vi, s_ in e_near.items():
        assert len(s_) <= 5, f"near set of {vi} has {len(s_)} edges"
    for vi, s_ in e_far.items():
        assert len(s_) <= far_cap, f"far set of {vi} has {len(s_)} edges"
    return QconsResult(
        paths=paths, e_near=e_near, e_far=e_far, forced_missing=forced, divergence=divergence
    )


def _fault_depth(g, t, eid):
    u, v = g.edges[eid]
    return max(t.depth[u], t.depth[v])


def restore_single_divergence(g, t, p, pi):
    """Rebuild p so it leaves pi exactly once; returns (path, exit_vertex).

    If the part of p past its maximal common prefix with pi shares an edge
    with pi, the prefix is rerouted along the tree to p's last pi vertex.
    For canonical minimum-cost replacement paths under a single fault this
    never fires (a shared edge would imply an equally short tree-ending
    path, which wins the tie on non-tree edge count), but the rebuild is
    kept for arbitrary shortest-path families.
    """
    qpos = _divergence_prefix(p, pi)
    b = p.vertices[qpos]
    if not (frozenset(p.eids[qpos:]) & frozenset(pi.eids[qpos:])):
        return p, b
    pi_vset = frozenset(pi.vertices)
    w = next(v for v in reversed(p.vertices[:-1]) if v in pi_vset)
    return tree_path(g, t, t.source, w).concat(p.suffix_from(w)), w


def _shallowest_single_divergence(g, t, vi, pi, rev_label, fault, lj):
    """Shallowest-exit replacement path that never returns to the root path.

    ``rev_label`` holds uniqueness-weighted labels from the target inside
    the graph with all root-path vertices (except the target) deleted, so
    any exit vertex w combines its root prefix, one hop off the path, and
    a labeled suffix.  The shallowest w admitting total length equal to
    the replacement distance wins; among its hops the uniqueness weight
    decides.  Such a path always exists: any replacement path, cut at its
    last root-path vertex, is of this shape.
    """
    fd = _fault_depth(g, t, fault)
    pi_vset = frozenset(pi.vertices)
    tree = t.tree_edges
    for w_depth in range(fd):  # w strictly above the fault
        w = pi.vertices[w_depth]
        best = None
        for x, eid in g.adj[w]:
            if x != vi and x in pi_vset:
                continue
            lx = rev_label[x]
            if lx is None or w_depth + 1 + lx[0] != lj:
                continue
            cand = (lx[1] + (eid not in tree), lx[3] | (1 << eid), x, eid)
            if best is None or cand < best:
                best = cand
        if best is None:
            continue
        _, _, x, eid = best
        suffix = walk_back(
            g, t, rev_label, vi, x, pi_eids=frozenset()
        )
        # rev_label paths run target -> x; flip to path order.
        suffix = path_from_vertices(g, tuple(reversed(suffix.vertices)))
        hop = path_from_vertices(g, (w, x))
        prefix = pi.prefix_to(w)
        out = prefix.concat(hop).concat(suffix) if len(suffix) else prefix.concat(hop)
        assert len(out) == lj
        return out
    raise AssertionError(f"no single-divergence replacement path for ({vi}, {fault})")


# ---------------------------------------------------------------------------
# Second replacement-path family (prefix reuse + renewed single divergence)


@dataclass
class PconsResult:
    paths: dict  # (target, fault_eid) -> Path
    p_all: dict  # target -> shared deep-exit path
    divergence: dict  # (target, fault_eid) -> divergence vertex (missing-ending only)
    spanner3: frozenset


def pcons(g, t, base2_eids, qres, cs, seg, fault_dists, sens_of):
    """Rebuild the replacement paths with prefix reuse.

    Faults are processed bottom-up (deepest tree edge first); per fault,
    targets in nondecreasing surviving distance.  Each target's path
    extends its last-hop neighbor's path when that neighbor is also cut
    off; a missing last edge triggers restoring a single divergence point,
    and paths exiting above the mid segment are shared per target (only
    their one last edge is kept in the preliminary subgraph).
    """
    order = sorted(
        t.tree_edges, key=lambda e: (-_fault_depth(g, t, e), e)
    )
    paths = {}
    p_all = {}
    p_all_div = {}
    divergence = {}
    for fault in order:
        dist_j = fault_dists(fault)
        sens = sens_of(fault)
        targets = sorted(sens, key=lambda v: (dist_j[v], v))
        for vi in targets:
            q = qres.paths.get((vi, fault))
            if q is None:
                continue
            vl = q.vertices[-2]
            last_eid = q.eids[-1]
            if vl in sens:
                prev = paths[(vl, fault)]
                rep1 = prev.concat(path_from_vertices(g, (vl, vi)))
            else:
                rep1 = tree_path(g, t, t.source, vl).concat(
                    path_from_vertices(g, (vl, vi))
                )
            if last_eid in base2_eids:
                paths[(vi, fault)] = rep1
                continue

            pi = tree_path(g, t, t.source, vi)
            rep2, bij = restore_single_divergence(g, t, rep1, pi)
            assert t.depth[bij] < _fault_depth(g, t, fault), "exit must clear the fault"

            cid = cs.cluster_of.get(vi)
            assert cid is not None
            assert seg.fault_zone(t, cid, fault, _fault_depth(g, t, fault)) == "mid"
            if bij in seg.mid_vertices[cid]:
                paths[(vi, fault)] = rep2
                divergence[(vi, fault)] = bij
            else:
                if vi not in p_all:
                    p_all[vi] = rep2
                    p_all_div[vi] = bij
                paths[(vi, fault)] = p_all[vi]
                divergence[(vi, fault)] = p_all_div[vi]
            # Rebuilt paths stay optimal, and everything past their first
            # non-tree edge is cut off by the fault.
            chosen = paths[(vi, fault)]
            assert len(chosen) == dist_j[vi]
            npos = next(
                (k for k, e in enumerate(chosen.eids) if e not in t.tree_edges), None
            )
            if npos is not None:
                assert all(v in sens for v in chosen.vertices[npos + 1 :])

    spanner3 = frozenset(base2_eids) | {p.last_edge() for p in p_all.values()}
    return PconsResult(paths=paths, p_all=p_all, divergence=divergence, spanner3=spanner3)


# ---------------------------------------------------------------------------
# Path buying


@dataclass
class CandidateEval:
    cost: int
    value: int
    cont_b: frozenset
    cont_v: frozenset
    z_list: tuple


@dataclass
class LedgerEntry:
    target: int
    fault: int
    cost: int
    value: int
    bought: bool


@dataclass
class BuyLedger:
    entries: list = field(default_factory=list)

    def dump_lines(self):
        return [
            f"{e.target} {e.fault} {e.cost} {e.value} {int(e.bought)}"
            for e in self.entries
        ]


def _bfs_to_set(adj, n, sources, goals, banned):
    """Min hop distance from any source to any goal, edges in adj minus banned."""
    goalset = goals if isinstance(goals, (set, frozenset)) else frozenset(goals)
    dist = {}
    q = deque()
    for s0 in sources:
        if s0 in goalset:
            return 0
        dist[s0] = 0
        q.append(s0)
    while q:
        u = q.popleft()
        du = dist[u]
        for v, eid in adj[u]:
            if eid in banned or v in dist:
                continue
            if v in goalset:
                return du + 1
            dist[v] = du + 1
            q.append(v)
    return INF


def evaluate_candidate(g, t, cs, seg, h_adj, h_edges, detour, target):
    """Cost and improvement value of buying one detour into the current set.

    Cost counts detour edges missing from the working edge set.  Every
    third missing-edge endpoint (spaced >= 3 apart along the detour, hence
    in pairwise distinct clusters) is tested: the detour contributes a
    pair when it shortens the exit-vertex-to-that-cluster distance, or the
    target-cluster-to-that-cluster distance, measured with the respective
    cluster's shared root prefix removed.
    """
    b = detour.start
    missing = [
        (pos, eid) for pos, eid in enumerate(detour.eids) if eid not in h_edges
    ]
    cost = len(missing)
    z_list = []
    for idx in range(0, len(missing), 3):
        pos, _eid = missing[idx]
        z_list.append((pos + 1, detour.vertices[pos + 1]))
    for (pa, za), (pb, zb) in zip(z_list, z_list[1:]):
        assert pb - pa >= 3
        ca, cb = cs.cluster_of.get(za), cs.cluster_of.get(zb)
        if ca is not None and cb is not None:
            assert ca != cb, "spaced endpoints must sit in distinct clusters"

    cont_b = set()
    cont_v = set()
    cr = cs.cluster_of.get(target)
    assert cr is not None
    cr_members = cs.clusters[cr]
    for pos, z in z_list:
        cl = cs.cluster_of.get(z)
        if cl is None:
            continue
        d_b = _bfs_to_set(h_adj, g.n, (b,), frozenset(cs.clusters[cl]), seg.shared_eids[cl])
        if pos < d_b:
            cont_b.add((b, cl))
        d_v = _bfs_to_set(
            h_adj, g.n, cr_members, frozenset(cs.clusters[cl]), seg.shared_eids[cr]
        )
        if len(detour) - pos < d_v:
            cont_v.add((target, cl))
    return CandidateEval(
        cost=cost,
        value=len(cont_b) + len(cont_v),
        cont_b=frozenset(cont_b),
        cont_v=frozenset(cont_v),
        z_list=tuple(z_list),
    )


# ---------------------------------------------------------------------------
# Full pipeline


@dataclass
class Add4Result:
    structure: Structure
    clusters: ClusterSet
    segmentation: Segmentation
    qcons: QconsResult
    pcons: PconsResult
    ledger: BuyLedger
    spanner1: frozenset
    spanner2: frozenset


def add4_pipeline(g, s):
    """Run every stage and return all intermediates (see build_add4)."""
    t = bfs_tree(g, s)
    cs = cluster(g, 1 / 3, excluded=t.tree_edges)
    seg = segment(g, t, cs)
    spanner1 = frozenset(t.tree_edges) | cs.gc_edges

    dist_cache = {}

    def fault_dists(eid):
        out = dist_cache.get(eid)
        if out is None:
            out = bfs_distances(g, s, frozenset((eid,)))
            dist_cache[eid] = out
        return out

    sens_cache = {}

    def sens_of(eid):
        out = sens_cache.get(eid)
        if out is None:
            out = sensitive(g, t, eid)
            sens_cache[eid] = out
        return out

    qres = qcons(g, t, spanner1, cs, seg, fault_dists)
    spanner2 = spanner1 | frozenset(
        e for s_ in qres.e_near.values() for e in s_
    ) | frozenset(e for s_ in qres.e_far.values() for e in s_)
    pres = pcons(g, t, spanner2, qres, cs, seg, fault_dists, sens_of)

    # Candidates: detours of paths whose last edge is still missing.
    candidates = []
    for (vi, fault), p in pres.paths.items():
        if p.last_edge() not in pres.spanner3:
            candidates.append((fault, vi))
    candidates.sort(key=lambda fv: (-_fault_depth(g, t, fv[0]), fv[0], fv[1]))

    # The working edge set starts as the whole preliminary subgraph, tree
    # included.  Starting it tree-less would price a detour's stretches
    # along other branches' tree edges as missing: such edges are free in
    # the final structure, and their endpoints are unclustered, so they
    # could never contribute value -- a detour that is the only route back
    # into a cut-off cluster would then be rejected outright.
    h_edges = set(pres.spanner3)
    h_adj = [[] for _ in range(g.n)]
    for eid in sorted(h_edges):
        u, v = g.edges[eid]
        h_adj[u].append((v, eid))
        h_adj[v].append((u, eid))

    ledger = BuyLedger()
    for fault, vi in candidates:
        p = pres.paths[(vi, fault)]
        b = pres.divergence[(vi, fault)]
        detour = p.suffix_from(b)
        ev = evaluate_candidate(g, t, cs, seg, h_adj, h_edges, detour, vi)
        bought = ev.cost <= 4 * ev.value
        if bought:
            for eid in detour.eids:
                if eid not in h_edges:
                    h_edges.add(eid)
                    u, v = g.edges[eid]
                    h_adj[u].append((v, eid))
                    h_adj[v].append((u, eid))
        ledger.entries.append(
            LedgerEntry(target=vi, fault=fault, cost=ev.cost, value=ev.value, bought=bought)
        )

    final = frozenset(h_edges) | pres.spanner3
    structure = Structure(tree=t, new_edges=final - t.tree_edges)
    return Add4Result(
        structure=structure,
        clusters=cs,
        segmentation=seg,
        qcons=qres,
        pcons=pres,
        ledger=ledger,
        spanner1=spanner1,
        spanner2=spanner2,
    )


def build_add4(g, s):
    """Build the single-fault additive-4 structure rooted at s."""
    return add4_pipeline(g, s).structure
