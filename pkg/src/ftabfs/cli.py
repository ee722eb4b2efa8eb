"""Command-line front end: generate, build, verify, benchmark.

Exit codes: 0 success/pass, 1 verification failure, 2 work-limit guard,
3 input error.  All file outputs are deterministic for fixed flags; the
JSON/CSV reports carry an elapsed-ms field that is the one run-dependent
value.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .additive import build_add4
from .graph import GraphFormatError, dump_graph, load_graph
from .lbgen import gen_family, gen_lb_additive
from .limits import WorkLimitExceeded
from .mult_multi import build_multf, build_multf_pure, log2_ceil
from .mult_single import build_mult3
from .oracle import SubsetError, verify_structure
from .structure import serialize_structure, structure_as_graph

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_WORK_LIMIT = 2
EXIT_INPUT = 3

ALGOS = ("mult1", "multf", "multf-pure", "add4")
FAMILIES = ("gnp", "cycle", "grid", "complete", "tree", "lb-additive")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    """Validated knobs of one CLI invocation."""

    command: str
    graph: str = None
    structure: str = None
    out: str = None
    spec: str = None
    algo: str = None
    family: str = None
    source: int = 0
    f: int = 1
    k: int = 3
    alpha: float = None
    beta: float = None
    n: int = None
    p: float = None
    seed: int = 0
    work_limit: int = None
    threads: int = 1

    def validate(self):
        if self.command == "build":
            if self.algo not in ALGOS:
                raise UsageError(f"--algo must be one of {ALGOS}")
            if self.algo in ("multf", "multf-pure") and self.f < 1:
                raise UsageError("--f must be >= 1 for the multi-fault builders")
            if self.algo == "multf-pure" and self.k < 3:
                raise UsageError("--k must be >= 3")
        elif self.command == "gen":
            if self.family not in FAMILIES:
                raise UsageError(f"--family must be one of {FAMILIES}")
            if self.n is None:
                raise UsageError("gen requires --n")
            if self.family == "gnp" and self.p is None:
                raise UsageError("gnp requires --p")
            if self.family == "lb-additive" and self.beta is None:
                raise UsageError("lb-additive requires --beta")
        elif self.command == "verify":
            if self.alpha is None or self.beta is None:
                raise UsageError("verify requires --alpha and --beta")
        return self


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _build_structure(cfg, g):
    if cfg.algo == "mult1":
        return build_mult3(g, cfg.source)
    if cfg.algo == "multf":
        return build_multf(g, cfg.source, cfg.f, work_limit=cfg.work_limit)
    if cfg.algo == "multf-pure":
        return build_multf_pure(g, cfg.source, cfg.f, cfg.k, work_limit=cfg.work_limit)
    return build_add4(g, cfg.source)


def cmd_build(cfg, stdout):
    g = load_graph(_read(cfg.graph))
    t0 = time.perf_counter()
    st = _build_structure(cfg, g)
    ms = int((time.perf_counter() - t0) * 1000)
    if cfg.out:
        _write(cfg.out, serialize_structure(g, st))
    summary = {
        "algo": cfg.algo,
        "n": g.n,
        "m_g": g.m,
        "m_h": st.m,
        "new_edges": len(st.new_edges),
        "ms": ms,
    }
    stdout.write(json.dumps(summary, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_verify(cfg, stdout):
    g = load_graph(_read(cfg.graph))
    h = load_graph(_read(cfg.structure))
    report = verify_structure(
        g,
        h,
        cfg.source,
        cfg.alpha,
        cfg.beta,
        cfg.f,
        threads=cfg.threads,
        work_limit=cfg.work_limit,
    )
    stdout.write(report.to_json())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def cmd_gen(cfg, stdout):
    if cfg.family == "lb-additive":
        inst = gen_lb_additive(cfg.n, int(cfg.beta))
        _write(cfg.out, dump_graph(inst.graph))
        _write(cfg.out + ".inventory.json", inst.inventory_json())
        stdout.write(
            json.dumps(
                {"family": cfg.family, "n": inst.n, "m": inst.graph.m, "d": inst.d},
                sort_keys=True,
            )
            + "\n"
        )
    else:
        g = gen_family(cfg.family, cfg.n, p=cfg.p, seed=cfg.seed)
        _write(cfg.out, dump_graph(g))
        stdout.write(
            json.dumps({"family": cfg.family, "n": g.n, "m": g.m}, sort_keys=True) + "\n"
        )
    return EXIT_OK


def _verify_params(algo, n, f):
    if algo == "mult1":
        return 3, 0, 1
    if algo == "multf":
        return 3 * (f + 1), (f + 1) * log2_ceil(n), f
    if algo == "multf-pure":
        return 3 * (f + 1) + 1, 0, f
    return 1, 4, 1


def cmd_bench(cfg, stdout):
    """Sweep spec: JSON {"sweeps": [{family, ns, p?, seed, algo, f?, k?}]}.

    One row per (instance, algo); instance i of a sweep uses seed+i.
    """
    spec = json.loads(_read(cfg.spec))
    rows = []
    for sweep in spec.get("sweeps", []):
        family = sweep["family"]
        algo = sweep["algo"]
        f = int(sweep.get("f", 1))
        k = int(sweep.get("k", 3))
        seed = int(sweep.get("seed", 0))
        for i, n in enumerate(sweep["ns"]):
            if family == "lb-additive":
                g = gen_lb_additive(n, int(sweep.get("beta", 3))).graph
            else:
                g = gen_family(family, n, p=sweep.get("p"), seed=seed + i)
            run = RunConfig(
                command="build", algo=algo, source=0, f=f, k=k, work_limit=cfg.work_limit
            )
            t0 = time.perf_counter()
            st = _build_structure(run, g)
            ms = int((time.perf_counter() - t0) * 1000)
            alpha, beta, vf = _verify_params(algo, g.n, f)
            rep = verify_structure(
                g, structure_as_graph(g, st), 0, alpha, beta, vf,
                threads=cfg.threads, work_limit=cfg.work_limit,
            )
            rows.append(
                (
                    family,
                    n,
                    algo,
                    st.m,
                    st.m / n,
                    st.m / n ** (4 / 3),
                    rep.worst_add,
                    rep.worst_mult,
                    ms,
                )
            )
    lines = ["family,n,algo,m_h,m_h_per_n,m_h_per_n43,worst_add,worst_mult,ms"]
    for row in rows:
        lines.append(
            ",".join(
                f"{x:.6g}" if isinstance(x, float) else str(x) for x in row
            )
        )
    text = "\n".join(lines) + "\n"
    if cfg.out:
        _write(cfg.out, text)
    else:
        stdout.write(text)
    return EXIT_OK


def make_parser():
    ap = argparse.ArgumentParser(prog="ftabfs", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a fault-tolerant structure")
    b.add_argument("--algo", required=True, choices=ALGOS)
    b.add_argument("--graph", required=True)
    b.add_argument("--source", type=int, default=0)
    b.add_argument("--f", type=int, default=1)
    b.add_argument("--k", type=int, default=3)
    b.add_argument("--out")
    b.add_argument("--work-limit", type=int, dest="work_limit")
    b.add_argument("--threads", type=int, default=1)

    v = sub.add_parser("verify", help="exhaustively verify a structure file")
    v.add_argument("--graph", required=True)
    v.add_argument("--structure", required=True)
    v.add_argument("--source", type=int, default=0)
    v.add_argument("--alpha", type=float, required=True)
    v.add_argument("--beta", type=float, required=True)
    v.add_argument("--f", type=int, default=1)
    v.add_argument("--work-limit", type=int, dest="work_limit")
    v.add_argument("--threads", type=int, default=1)

    gn = sub.add_parser("gen", help="generate a graph family instance")
    gn.add_argument("--family", required=True, choices=FAMILIES)
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--beta", type=float)
    gn.add_argument("--p", type=float)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--out", required=True)

    bench = sub.add_parser("bench", help="run a sweep spec, emit CSV")
    bench.add_argument("--spec", required=True)
    bench.add_argument("--out")
    bench.add_argument("--work-limit", type=int, dest="work_limit")
    bench.add_argument("--threads", type=int, default=1)
    return ap


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    ap = make_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    cfg = RunConfig(
        command=ns.command,
        graph=getattr(ns, "graph", None),
        structure=getattr(ns, "structure", None),
        out=getattr(ns, "out", None),
        spec=getattr(ns, "spec", None),
        algo=getattr(ns, "algo", None),
        family=getattr(ns, "family", None),
        source=getattr(ns, "source", 0),
        f=getattr(ns, "f", 1),
        k=getattr(ns, "k", 3),
        alpha=getattr(ns, "alpha", None),
        beta=getattr(ns, "beta", None),
        n=getattr(ns, "n", None),
        p=getattr(ns, "p", None),
        seed=getattr(ns, "seed", 0),
        work_limit=getattr(ns, "work_limit", None),
        threads=getattr(ns, "threads", 1),
    )
    try:
        cfg.validate()
        handler = {
            "build": cmd_build,
            "verify": cmd_verify,
            "gen": cmd_gen,
            "bench": cmd_bench,
        }[cfg.command]
        return handler(cfg, stdout)
    except WorkLimitExceeded as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_WORK_LIMIT
    except SubsetError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (UsageError, GraphFormatError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
