import pytest

from ftabfs.graph import (
    INF,
    GraphFormatError,
    bfs_tree,
    connected_components,
    dump_graph,
    girth,
    lca,
    load_graph,
    sensitive,
    tree_path,
)
from ftabfs.lbgen import gen_family

from helpers import brute_girth, fano_incidence, gnp_connected, parent_walk_path_len, root_path_edges


def test_load_two_edge_path():
    g = load_graph("0 1\n1 2")
    assert g.n == 3 and g.m == 2


def test_load_header_overrides_max_id():
    g = load_graph("# n=5\n0 1")
    assert g.n == 5 and g.m == 1
    assert sum(1 for v in range(g.n) if not g.adj[v]) == 3


def test_load_self_loop_rejected():
    with pytest.raises(GraphFormatError) as exc:
        load_graph("0 0")
    assert exc.value.line == 1


def test_load_duplicate_rejected():
    with pytest.raises(GraphFormatError) as exc:
        load_graph("0 1\n1 0")
    assert exc.value.line == 2


def test_load_malformed_line_number():
    with pytest.raises(GraphFormatError) as exc:
        load_graph("0 1\n2 x")
    assert exc.value.line == 2
    with pytest.raises(GraphFormatError) as exc:
        load_graph("0 1\n\n1 2 3")
    assert exc.value.line == 3


def test_load_header_id_overflow():
    with pytest.raises(GraphFormatError):
        load_graph("# n=2\n0 3")


def test_dump_roundtrip_preserves_order():
    text = "# n=6\n4 1\n0 1\n2 0\n"
    g = load_graph(text)
    assert dump_graph(g) == text
    g2 = load_graph(dump_graph(g))
    assert g2.edges == g.edges and g2.n == g.n


def test_bfs_triangle_depths():
    g = load_graph("0 1\n1 2\n0 2")
    t = bfs_tree(g, 0)
    assert list(t.depth) == [0, 1, 1]


def test_bfs_path_parent():
    g = load_graph("0 1\n1 2")
    t = bfs_tree(g, 0)
    assert t.parent[2] == 1


def test_bfs_four_cycle_one_non_tree_edge():
    g = load_graph("0 1\n1 2\n2 3\n3 0")
    t = bfs_tree(g, 0)
    # Oracle: edges of the graph minus the tree edge set.
    non_tree = [e for e in range(g.m) if e not in t.tree_edges]
    assert len(non_tree) == 1


def test_bfs_depths_match_plain_bfs_and_component_law():
    for seed in range(4):
        g = gnp_connected(40, 3.0, seed=100 + seed)
        t = bfs_tree(g, 0)
        comp = next(c for c in connected_components(g) if 0 in c)
        finite = [v for v in range(g.n) if t.depth[v] != INF]
        assert sorted(finite) == comp
        assert len(t.tree_edges) == len(comp) - 1


def test_bfs_unreachable_sentinel():
    g = load_graph("# n=4\n0 1")
    t = bfs_tree(g, 0)
    assert t.depth[2] == INF and t.parent[2] is None


def test_tree_path_identity_and_trivial():
    g = load_graph("0 1\n1 2")
    t = bfs_tree(g, 0)
    assert tree_path(g, t, 2, 2).vertices == (2,)
    assert len(tree_path(g, t, 2, 2)) == 0
    assert tree_path(g, t, 0, 2).vertices == (0, 1, 2)


def test_tree_path_length_identity_random():
    for seed in range(3):
        g = gen_family("tree", 30, seed=seed)
        t = bfs_tree(g, 0)
        for x in range(0, 30, 3):
            for y in range(1, 30, 4):
                p = tree_path(g, t, x, y)
                a = lca(t, (x, y))
                assert len(p) == t.depth[x] + t.depth[y] - 2 * t.depth[a]
                assert len(p) == parent_walk_path_len(t, x, y)


def test_tree_path_disconnected_raises():
    g = load_graph("# n=4\n0 1\n2 3")
    t = bfs_tree(g, 0)
    with pytest.raises(ValueError):
        tree_path(g, t, 0, 2)


def test_lca_basics():
    g = load_graph("0 1\n0 2\n1 3")
    t = bfs_tree(g, 0)
    assert lca(t, (3,)) == 3
    assert lca(t, (0, 3)) == 0
    assert lca(t, (1, 2)) == 0  # two leaves of a star meet at the root
    with pytest.raises(ValueError):
        lca(t, ())


def test_sensitive_examples():
    g = load_graph("0 1\n1 2")
    t = bfs_tree(g, 0)
    assert sensitive(g, t, t.parent_eid[2]) == frozenset({2})  # leaf edge
    assert sensitive(g, t, t.parent_eid[1]) == frozenset({1, 2})
    with pytest.raises(ValueError):
        sensitive(g, t, 99 if g.m > 99 else g.m - 1 + 10**6)


def test_sensitive_matches_root_path_membership_exhaustively():
    g = gnp_connected(64, 3.0, seed=7)
    t = bfs_tree(g, 0)
    for eid in sorted(t.tree_edges):
        sens = sensitive(g, t, eid)
        for v in range(g.n):
            on_path = eid in root_path_edges(t, v)
            assert (v in sens) == on_path


def test_sensitive_rejects_non_tree_edge():
    g = load_graph("0 1\n1 2\n2 0")
    t = bfs_tree(g, 0)
    non_tree = next(e for e in range(g.m) if e not in t.tree_edges)
    with pytest.raises(ValueError):
        sensitive(g, t, non_tree)


def test_girth_triangle_and_tree():
    assert girth(load_graph("0 1\n1 2\n0 2")) == 3
    assert girth(load_graph("0 1\n1 2\n1 3")) == INF


def test_girth_fano_incidence_is_six():
    g = fano_incidence()
    assert g.n == 14 and g.m == 21
    assert brute_girth(g) == 6  # independent edge-removal oracle
    assert girth(g) == 6


def test_girth_matches_brute_on_random():
    for seed in range(6):
        g = gnp_connected(18, 3.0, seed=200 + seed)
        assert girth(g) == brute_girth(g)


def test_determinism_identical_documents():
    text = "0 1\n1 2\n2 3\n3 0\n1 3\n"
    g1, g2 = load_graph(text), load_graph(text)
    assert g1 == g2
    assert bfs_tree(g1, 0) == bfs_tree(g2, 0)


def test_bfs_parent_tiebreak_smallest_neighbor():
    # Vertex 3 is adjacent to both 1 and 2 at depth 1; parent must be 1.
    g = load_graph("0 2\n0 1\n2 3\n1 3")
    t = bfs_tree(g, 0)
    assert t.parent[3] == 1
