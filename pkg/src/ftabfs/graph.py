"""Undirected unweighted graphs, BFS trees and tree/path machinery.

Everything downstream (structure builders, generators, the verification
oracle) works on these types.  Graphs carry a fixed global edge ordering
(file order / generator emission order); edge index ``eid`` is stable for
the lifetime of a Graph value.  All types are immutable after construction.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

INF = math.inf

# A fault set is just a frozenset of global edge indices.
FaultSet = frozenset


class GraphFormatError(ValueError):
    """Malformed edge-list input (carries a 1-based line number)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a fixed edge ordering.

    ``edges[eid] = (u, v)`` as given on input; ``adj[v]`` lists
    ``(neighbor, eid)`` pairs in edge-index order.
    """

    n: int
    edges: tuple
    adj: tuple = field(repr=False)
    edge_id: dict = field(repr=False)  # (min(u,v), max(u,v)) -> eid

    @property
    def m(self):
        return len(self.edges)

    def has_edge(self, u, v):
        return ((u, v) if u < v else (v, u)) in self.edge_id

    def eid_of(self, u, v):
        """Edge index of (u, v); KeyError if absent."""
        return self.edge_id[(u, v) if u < v else (v, u)]

    def degree(self, v):
        return len(self.adj[v])


def build_graph(n, edge_pairs):
    """Assemble a Graph from an explicit vertex count and edge list.

    Validates simplicity: no self-loops, no duplicates, ids in range.
    """
    edges = []
    edge_id = {}
    adj = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edge_pairs):
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range: ({u}, {v}) with n={n}")
        key = (u, v) if u < v else (v, u)
        if key in edge_id:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        edge_id[key] = eid
        edges.append((u, v))
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    return Graph(n=n, edges=tuple(edges), adj=tuple(tuple(a) for a in adj), edge_id=edge_id)


def load_graph(text):
    """Parse an edge-list document into a Graph.

    Format: data lines ``<u> <v>`` with 0-based ids, one edge per line,
    in the order that fixes the global edge indices.  Lines starting with
    '#' are comments; a comment of the form ``# n=<N>`` declares the vertex
    count (otherwise n = max id + 1).  Blank lines are skipped.
    """
    declared_n = None
    pairs = []
    seen_pairs = set()
    lines = []  # (lineno, u, v)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n=") and declared_n is None:
                try:
                    declared_n = int(body[2:])
                except ValueError:
                    raise GraphFormatError(f"bad header {line!r}", lineno) from None
                if declared_n < 0:
                    raise GraphFormatError("negative vertex count", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two fields, got {len(parts)}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex id", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen_pairs:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        seen_pairs.add(key)
        lines.append((lineno, u, v))
        pairs.append((u, v))

    max_id = max((max(u, v) for _, u, v in lines), default=-1)
    n = declared_n if declared_n is not None else max_id + 1
    if declared_n is not None and max_id >= declared_n:
        bad = next(ln for ln, u, v in lines if max(u, v) >= declared_n)
        raise GraphFormatError(f"vertex id exceeds declared n={declared_n}", bad)
    return build_graph(n, pairs)


def dump_graph(g):
    """Serialize a Graph back to the edge-list format (index order, LF)."""
    out = [f"# n={g.n}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class BfsTree:
    """Shortest-path (BFS) tree rooted at ``source``.

    ``depth[v]`` is the exact hop distance from the source (INF when
    unreachable); ``parent[v]`` is None for the source and for unreachable
    vertices.  ``parent_eid[v]`` is the global index of the tree edge
    (parent(v), v).  Parent ties are broken by smallest neighbor id, then
    smallest edge index, so the tree is a pure function of the Graph.
    """

    source: int
    parent: tuple
    parent_eid: tuple
    depth: tuple
    tree_edges: frozenset
    children: tuple = field(repr=False)

    def is_tree_edge(self, eid):
        return eid in self.tree_edges


def bfs_tree(g, s):
    """Build the canonical BFS tree of g rooted at s."""
    if not (0 <= s < g.n):
        raise ValueError(f"source {s} out of range for n={g.n}")
    depth = [INF] * g.n
    depth[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        du = depth[u]
        for v, _eid in g.adj[u]:
            if depth[v] == INF:
                depth[v] = du + 1
                q.append(v)
    parent = [None] * g.n
    parent_eid = [None] * g.n
    tree_edges = set()
    children = [[] for _ in range(g.n)]
    for v in range(g.n):
        if v == s or depth[v] == INF:
            continue
        best = None
        for u, eid in g.adj[v]:
            if depth[u] == depth[v] - 1:
                cand = (u, eid)
                if best is None or cand < best:
                    best = cand
        parent[v], parent_eid[v] = best
        tree_edges.add(best[1])
        children[best[0]].append(v)
    return BfsTree(
        source=s,
        parent=tuple(parent),
        parent_eid=tuple(parent_eid),
        depth=tuple(depth),
        tree_edges=frozenset(tree_edges),
        children=tuple(tuple(c) for c in children),
    )


@dataclass(frozen=True)
class Path:
    """A walk given by its vertex sequence plus the global edge indices.

    len(path) is the number of edges.  Paths produced by the search
    routines are simple and directed away from the source; tree bypass
    walks may revisit vertices.
    """

    vertices: tuple
    eids: tuple

    def __len__(self):
        return len(self.eids)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def last_edge(self):
        """Global index of the last edge; None for an empty path."""
        return self.eids[-1] if self.eids else None

    def concat(self, other):
        """Concatenation self ∘ other; other must start where self ends."""
        if self.end != other.start:
            raise ValueError(f"cannot concatenate: {self.end} != {other.start}")
        return Path(self.vertices + other.vertices[1:], self.eids + other.eids)

    def subpath(self, x, y):
        """Subpath from the first occurrence of x to the next occurrence of y."""
        i = self.vertices.index(x)
        j = self.vertices.index(y, i)
        return Path(self.vertices[i : j + 1], self.eids[i:j])

    def prefix_to(self, x):
        i = self.vertices.index(x)
        return Path(self.vertices[: i + 1], self.eids[:i])

    def suffix_from(self, x):
        i = self.vertices.index(x)
        return Path(self.vertices[i:], self.eids[i:])


def path_from_vertices(g, vertices):
    """Build a Path from consecutive-adjacent vertices, resolving edge ids."""
    eids = tuple(g.eid_of(a, b) for a, b in zip(vertices, vertices[1:]))
    return Path(tuple(vertices), eids)


def tree_path(g, t, x, y):
    """The unique x-y path in the tree (via their lowest common ancestor)."""
    if t.depth[x] == INF or t.depth[y] == INF:
        raise ValueError(f"{x} and {y} are not connected in the tree")
    up_x, up_y = [x], [y]
    a, b = x, y
    while t.depth[a] > t.depth[b]:
        a = t.parent[a]
        up_x.append(a)
    while t.depth[b] > t.depth[a]:
        b = t.parent[b]
        up_y.append(b)
    while a != b:
        a = t.parent[a]
        b = t.parent[b]
        up_x.append(a)
        up_y.append(b)
    # up_x ends at the LCA; descend along up_y reversed, skipping the LCA.
    verts = up_x + up_y[-2::-1]
    return path_from_vertices(g, verts)


def lca(t, vs):
    """Lowest common ancestor of a nonempty vertex set in the tree."""
    it = iter(vs)
    try:
        a = next(it)
    except StopIteration:
        raise ValueError("lca of empty set") from None
    if t.depth[a] == INF:
        raise ValueError(f"vertex {a} not in the source component")
    for b in it:
        if t.depth[b] == INF:
            raise ValueError(f"vertex {b} not in the source component")
        while t.depth[a] > t.depth[b]:
            a = t.parent[a]
        while t.depth[b] > t.depth[a]:
            b = t.parent[b]
        while a != b:
            a = t.parent[a]
            b = t.parent[b]
    return a


def sensitive(g, t, eid):
    """Vertices whose root path uses tree edge eid: the subtree below it."""
    if eid not in t.tree_edges:
        raise ValueError(f"edge {eid} is not a tree edge")
    u, v = g.edges[eid]
    below = v if t.depth[v] > t.depth[u] else u
    out = []
    stack = [below]
    while stack:
        w = stack.pop()
        out.append(w)
        stack.extend(t.children[w])
    return frozenset(out)


def bfs_distances(g, s, banned=frozenset()):
    """Hop distances from s in g minus the banned edge ids (INF sentinel)."""
    dist = [INF] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        du = dist[u]
        for v, eid in g.adj[u]:
            if eid not in banned and dist[v] == INF:
                dist[v] = du + 1
                q.append(v)
    return dist


def bfs_tree_paths(g, s, banned=frozenset()):
    """(dist, parent, parent_eid) arrays of a plain BFS avoiding banned edges.

    Parent choice follows queue order (not the canonical tie-break); use
    only where any shortest path will do.
    """
    dist = [INF] * g.n
    parent = [None] * g.n
    parent_eid = [None] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        du = dist[u]
        for v, eid in g.adj[u]:
            if eid not in banned and dist[v] == INF:
                dist[v] = du + 1
                parent[v] = u
                parent_eid[v] = eid
                q.append(v)
    return dist, parent, parent_eid


def girth(g):
    """Exact minimum cycle length (INF for forests).

    One truncated BFS per start vertex; any non-tree edge seen closes a
    candidate cycle dist[x] + dist[y] + 1.  The candidate walk always
    contains a cycle no longer than itself, and for a start vertex on a
    minimum cycle the bound is attained, so the global minimum is exact.
    """
    best = INF
    for start in range(g.n):
        dist = {start: 0}
        parent_edge = {start: -1}
        q = deque([start])
        while q:
            x = q.popleft()
            dx = dist[x]
            if 2 * dx >= best - 1:
                continue
            for y, eid in g.adj[x]:
                if eid == parent_edge[x]:
                    continue
                if y not in dist:
                    dist[y] = dx + 1
                    parent_edge[y] = eid
                    q.append(y)
                else:
                    cand = dx + dist[y] + 1
                    if cand < best:
                        best = cand
    return best


def connected_components(g, banned=frozenset()):
    """List of components (sorted vertex lists), in order of smallest member."""
    seen = [False] * g.n
    comps = []
    for v0 in range(g.n):
        if seen[v0]:
            continue
        comp = []
        stack = [v0]
        seen[v0] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w, eid in g.adj[u]:
                if eid not in banned and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps
