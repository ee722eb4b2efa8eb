"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s``.  Corpora are frozen by
seed; expensive intermediates are shared across criteria through session
fixtures that reduce to scalars immediately.
"""

import io
import itertools
import json
import math

import pytest

from ftabfs.additive import add4_pipeline
from ftabfs.cli import main as cli_main
from ftabfs.graph import INF, bfs_tree, build_graph, sensitive, tree_path
from ftabfs.lbgen import gen_lb_additive, min_n_for
from ftabfs.mult_multi import (
    build_multf,
    build_multf_pure,
    fbfs,
    label_components,
    log2_ceil,
    short_path_last_edges,
    sparsify_path,
)
from ftabfs.mult_single import build_mult3
from ftabfs.oracle import verify_necessity, verify_structure
from ftabfs.repath import replacement_path
from ftabfs.structure import structure_as_graph

from helpers import floyd_warshall, gnp_connected


def report(num, name, ok):
    print(f"ACCEPTANCE {num} {name}: {'PASS' if ok else 'FAIL'}")
    return ok


# ---------------------------------------------------------------------------
# Shared corpora


@pytest.fixture(scope="session")
def single_fault_corpus():
    """Criteria 1-2: 200 random connected graphs, n in [20, 200]."""
    out = []
    for idx in range(200):
        n = 20 + (180 * idx * idx) // (199 * 199)
        deg = (2.5, 4.0, 6.0, 8.0)[idx % 4]
        g = gnp_connected(n, deg, seed=1000 + idx)
        out.append((g, build_mult3(g, 0)))
    return out


@pytest.fixture(scope="session")
def multi_fault_results():
    """Criteria 3-4: 30 seeded instances, n <= 48, f = 2, reduced to scalars."""
    f, k = 2, 3
    ell = (f + 1) * (2 * k - 1)
    rows = []
    for idx in range(30):
        n = 12 + (idx * 36) // 29
        deg = (2.5, 3.5, 5.0)[idx % 3]
        g = gnp_connected(n, deg, seed=2000 + idx)
        table = fbfs(g, 0, f)
        st = build_multf(g, 0, f, table=table)
        stp = build_multf_pure(g, 0, f, k, table=table)
        rep = verify_structure(
            g, structure_as_graph(g, st), 0, 3 * (f + 1), 2 * log2_ceil(g.n), f
        )
        rep_pure = verify_structure(g, structure_as_graph(g, stp), 0, 3 * (f + 1) + 1, 0, f)
        h1_ok = len(short_path_last_edges(table, ell)) <= g.n * ell ** (f + 1)

        sparsify_ok = True
        t = table.tree
        seen_rows = set()
        for combo in table.fault_sets:
            row = table.paths[combo]
            if id(row) in seen_rows:
                continue
            seen_rows.add(id(row))
            lab = label_components(g, t, frozenset(combo))
            for v in range(g.n):
                p = row[v]
                if p is None or len(p) == 0:
                    continue
                sel = sparsify_path(g, t, p, lab)
                if len(sel.selected) > f + 1 or len(sel.bypass) > 3 * (f + 1) * len(p):
                    sparsify_ok = False
                allowed = set(t.tree_edges) | set(sel.selected_eids())
                if any(e not in allowed or e in combo for e in sel.bypass.eids):
                    sparsify_ok = False
        rows.append(
            {
                "n": g.n,
                "pass_multf": rep.passed,
                "pass_pure": rep_pure.passed,
                "h1_ok": h1_ok,
                "sparsify_ok": sparsify_ok,
            }
        )
    return rows


@pytest.fixture(scope="session")
def additive_results():
    """Criteria 5-6: 100 random connected graphs, n <= 150, reduced to scalars."""
    rows = []
    for idx in range(100):
        n = 20 + (idx * 130) // 99
        deg = (2.5, 4.0, 6.0)[idx % 3]
        g = gnp_connected(n, deg, seed=3000 + idx)
        res = add4_pipeline(g, 0)
        rep = verify_structure(g, structure_as_graph(g, res.structure), 0, 1, 4, 1)

        cs, seg, t = res.clusters, res.segmentation, bfs_tree(g, 0)
        size_ok = all(len(c) == math.ceil(g.n ** (1 / 3)) for c in cs.clusters)
        disjoint_ok = len(cs.cluster_of) == sum(len(c) for c in cs.clusters)
        gc_adj = {}
        for eid in cs.gc_edges:
            u, v = g.edges[eid]
            gc_adj.setdefault(u, set()).add(v)
            gc_adj.setdefault(v, set()).add(u)
        diameter_ok = all(
            all(m in gc_adj.get(cs.centers[cid], ()) for m in members)
            for cid, members in enumerate(cs.clusters)
        )
        missing_ok = all(
            cs.cluster_of.get(g.edges[eid][0]) is not None
            and cs.cluster_of.get(g.edges[eid][1]) is not None
            and cs.cluster_of[g.edges[eid][0]] != cs.cluster_of[g.edges[eid][1]]
            for eid in cs.allowed - cs.gc_edges
        )
        cap = math.ceil(g.n ** (1 / 3))
        nice_ok = all(len(s) <= 5 for s in res.qcons.e_near.values()) and all(
            len(s) <= cap for s in res.qcons.e_far.values()
        )
        divergence_ok = True
        for (v, fault), p in res.pcons.paths.items():
            if p.last_edge() in res.pcons.spanner3:
                continue
            b = res.pcons.divergence[(v, fault)]
            pi = tree_path(g, t, 0, v)
            suffix = p.suffix_from(b)
            below = pi.suffix_from(b)
            if set(suffix.eids) & set(below.eids):
                divergence_ok = False
            if b not in seg.mid_vertices[cs.cluster_of[v]]:
                divergence_ok = False
        rows.append(
            {
                "n": g.n,
                "passed": rep.passed,
                "violations": len(rep.violations),
                "cluster_ok": size_ok and disjoint_ok and diameter_ok and missing_ok,
                "nice_ok": nice_ok,
                "divergence_ok": divergence_ok,
            }
        )
    return rows


# ---------------------------------------------------------------------------
# Criteria


def test_criterion_1_size_bound(single_fault_corpus):
    bad = [
        g.n
        for g, st in single_fault_corpus
        if len(st.new_edges) > 3 * g.n or st.m > 4 * g.n
    ]
    ok = report(1, "(3,0) size bound |new| <= 3n and |H| <= 4n on 200 graphs", not bad)
    assert ok, f"size bound violated at n={bad}"


def test_criterion_2_single_fault_stretch(single_fault_corpus):
    bad = []
    for g, st in single_fault_corpus:
        rep = verify_structure(g, structure_as_graph(g, st), 0, 3, 0, 1)
        if not rep.passed:
            bad.append((g.n, rep.violations[:2]))
    ok = report(2, "(3,0) exhaustive stretch oracle on 200 graphs", not bad)
    assert ok, f"stretch violations: {bad}"


def test_criterion_3_multi_fault_stretch(multi_fault_results):
    bad = [
        r["n"]
        for r in multi_fault_results
        if not (r["pass_multf"] and r["pass_pure"] and r["h1_ok"])
    ]
    ok = report(
        3,
        "f=2 oracle: multf at (9, 2*ceil(log2 n)), pure at (10, 0), short-path bound",
        not bad,
    )
    assert ok, f"multi-fault failures at n={bad}"


def test_criterion_4_sparsification_laws(multi_fault_results):
    bad = [r["n"] for r in multi_fault_results if not r["sparsify_ok"]]
    ok = report(
        4, "sparsified paths: <= f+1 kept edges, bypass <= 3(f+1)|P| in T2\\F", not bad
    )
    assert ok, f"sparsification law violated at n={bad}"


def test_criterion_5_additive_stretch(additive_results):
    bad = [(r["n"], r["violations"]) for r in additive_results if not r["passed"]]
    ok = report(5, "(1,4) exhaustive stretch oracle on 100 graphs", not bad)
    assert ok, f"additive stretch violations: {bad}"


def test_criterion_6_niceness_and_clustering(additive_results):
    bad = [
        r["n"]
        for r in additive_results
        if not (r["cluster_ok"] and r["nice_ok"] and r["divergence_ok"])
    ]
    ok = report(
        6, "clustering invariants, near/far bounds, mid-zone divergence", not bad
    )
    assert ok, f"property failures at n={bad}"


def test_criterion_7_lower_bound_necessity():
    bad = []
    for d in (3, 4, 5):
        inst = gen_lb_additive(min_n_for(3, d), 3)
        assert inst.d == d
        rep = verify_necessity(inst, 3)
        if not rep.passed or rep.detected != rep.checked:
            bad.append((d, rep.detected, rep.checked))
    ok = report(7, "block-edge removal detected 100% for d in {3,4,5}", not bad)
    assert ok, f"undetected removals: {bad}"


def _connected_labeled_graphs(n):
    from ftabfs.graph import connected_components

    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(chosen) < n - 1:
            continue
        g = build_graph(n, chosen)
        if len(connected_components(g)) == 1:
            yield g


def test_criterion_8_replacement_path_exactness():
    ok = True
    graphs = list(_connected_labeled_graphs(4)) + list(_connected_labeled_graphs(5))
    for idx in range(12):
        graphs.append(gnp_connected(10 + idx % 3, 3.0, seed=4000 + idx))
    for g in graphs:
        t = bfs_tree(g, 0)
        for fault in range(g.m):
            dist = floyd_warshall(g, frozenset((fault,)))
            for v in range(1, g.n):
                p = replacement_path(g, t, v, frozenset((fault,)))
                if dist[0][v] == INF:
                    ok &= p is None
                    continue
                ok &= p is not None and len(p) == dist[0][v]
                if fault in t.tree_edges and fault in tree_path(g, t, 0, v).eids:
                    sens = sensitive(g, t, fault)
                    for pos, eid in enumerate(p.eids):
                        if eid not in t.tree_edges:
                            ok &= p.vertices[pos + 1] in sens
    ok = report(8, "replacement paths match Floyd-Warshall; new edges enter the cut subtree", ok)
    assert ok


def _run_cli(args):
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(args, stdout=out, stderr=err)
    assert code == 0, err.getvalue()
    return out.getvalue()


def _mask_ms_json(text):
    data = json.loads(text)
    data.pop("ms", None)
    return data


def _mask_ms_csv(text):
    rows = [line.split(",") for line in text.strip().splitlines()]
    return [row[:-1] for row in rows]


def test_criterion_9_determinism(tmp_path):
    ok = True
    # Generators: byte-identical files under identical flags.
    for args in (
        ["gen", "--family", "gnp", "--n", "60", "--p", "0.1", "--seed", "11"],
        ["gen", "--family", "lb-additive", "--n", "200", "--beta", "3"],
    ):
        a, b = tmp_path / "a.edges", tmp_path / "b.edges"
        _run_cli(args + ["--out", str(a)])
        _run_cli(args + ["--out", str(b)])
        ok &= a.read_bytes() == b.read_bytes()
        if args[2] == "lb-additive":
            ok &= (tmp_path / "a.edges.inventory.json").read_bytes() == (
                tmp_path / "b.edges.inventory.json"
            ).read_bytes()

    # Builders: byte-identical structure files, identical summaries minus ms.
    gpath = tmp_path / "g.edges"
    _run_cli(["gen", "--family", "gnp", "--n", "40", "--p", "0.12", "--seed", "12", "--out", str(gpath)])
    for algo, extra in (("mult1", []), ("add4", []), ("multf", ["--f", "1"])):
        h1, h2 = tmp_path / f"{algo}1.edges", tmp_path / f"{algo}2.edges"
        s1 = _run_cli(["build", "--algo", algo, "--graph", str(gpath), "--out", str(h1)] + extra)
        s2 = _run_cli(["build", "--algo", algo, "--graph", str(gpath), "--out", str(h2)] + extra)
        ok &= h1.read_bytes() == h2.read_bytes()
        ok &= _mask_ms_json(s1) == _mask_ms_json(s2)

    # Verifier: identical reports minus ms, independent of thread count.
    hpath = tmp_path / "mult11.edges"
    base = ["verify", "--graph", str(gpath), "--structure", str(hpath),
            "--source", "0", "--alpha", "3", "--beta", "0", "--f", "1"]
    r1 = _run_cli(base + ["--threads", "1"])
    r2 = _run_cli(base + ["--threads", "2"])
    r3 = _run_cli(base + ["--threads", "1"])
    ok &= _mask_ms_json(r1) == _mask_ms_json(r2) == _mask_ms_json(r3)

    # Bench: identical CSV minus the ms column.
    spec = tmp_path / "spec.json"
    spec.write_text(
        json.dumps(
            {"sweeps": [{"family": "gnp", "ns": [20, 30], "p": 0.15, "seed": 5, "algo": "mult1"}]}
        )
    )
    c1, c2 = tmp_path / "b1.csv", tmp_path / "b2.csv"
    _run_cli(["bench", "--spec", str(spec), "--out", str(c1)])
    _run_cli(["bench", "--spec", str(spec), "--out", str(c2)])
    ok &= _mask_ms_csv(c1.read_text()) == _mask_ms_csv(c2.read_text())

    ok = report(9, "byte-identical outputs (ms fields masked); thread-count independent", ok)
    assert ok
