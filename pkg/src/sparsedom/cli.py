"""Command-line front end: generate, order, dominate, exact, verify, bench.

Exit codes: 0 success, 1 a certificate check failed, 2 usage or input error,
3 oracle budget refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass, replace
from typing import Sequence

from . import oracles
from .domination import DominationCertificate, check_radii, dominating_set
from .generators import lower_bound_gn, parse_family_spec
from .graph import Graph, GraphError, load_graph, write_edge_list
from .orderings import (
    AdmissibilityCeilingError,
    VertexOrdering,
    admissibility_ordering,
    degeneracy_ordering,
    load_ordering,
    ordering_stats,
    write_ordering,
)

log = logging.getLogger("sparsedom")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    out: str | None = None
    k: int = 1
    m: int | None = None
    ordering: str = "degeneracy"
    pmax: int | None = None
    budget_n: int | None = None
    seed: int = 0

    @property
    def radius_m(self) -> int:
        return 2 * self.k if self.m is None else self.m


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record_line(rec: dict) -> str:
    return json.dumps(rec, separators=(",", ":")) + "\n"


def _load(path: str) -> Graph:
    try:
        return load_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read graph file {path}: {exc}") from exc
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def obtain_ordering(g: Graph, cfg: RunConfig) -> tuple[VertexOrdering, dict]:
    mode = cfg.ordering
    m = cfg.radius_m
    if mode == "degeneracy":
        ordering, d = degeneracy_ordering(g)
        return ordering, {"ordering": "degeneracy", "degeneracy": d}
    if mode in ("adm-exact", "adm-approx"):
        res = admissibility_ordering(
            g, m, mode="exact" if mode == "adm-exact" else "approx", p_max=cfg.pmax
        )
        return res.ordering, {"ordering": mode, "adm": res.adm}
    if mode.startswith("file:"):
        path = mode[len("file:"):]
        try:
            ordering = load_ordering(path)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read ordering file {path}: {exc}") from exc
        if len(ordering) != g.n:
            raise UsageError(f"ordering file {path} has {len(ordering)} vertices, graph has {g.n}")
        return ordering, {"ordering": "file"}
    raise UsageError(f"unknown ordering mode {mode!r}")


def verify_certificate(g: Graph, cert: DominationCertificate) -> dict[str, bool]:
    """Re-check a certificate with plain BFS, independent of how it was built."""
    return {
        "dominating": oracles.verify_dominating(g, cert.D, cert.k),
        "independent": oracles.verify_independent(g, cert.A, cert.m),
        "ratio": len(cert.D) <= cert.c**2 * len(cert.A),
    }


def run_dominate(g: Graph, cfg: RunConfig) -> tuple[dict, bool]:
    ordering, info = obtain_ordering(g, cfg)
    cert = dominating_set(g, ordering, cfg.k, cfg.radius_m)
    log.debug("dominate n=%d k=%d m=%d c=%d |D|=%d |A|=%d", g.n, cert.k, cert.m, cert.c, len(cert.D), len(cert.A))
    checks = verify_certificate(g, cert)
    rec = {**info, **cert.to_record(), "verified": checks}
    return rec, all(checks.values())


def cmd_generate(args) -> int:
    spec = args.spec
    kind = spec.partition(":")[0]
    if kind == "lower_bound":
        nums = [int(x) for x in spec.partition(":")[2].split(",")]
        inst = lower_bound_gn(*nums)
        g = inst.graph
        if args.ordering_out:
            with open(args.ordering_out, "w") as fh:
                write_ordering(inst.prescribed_ordering, fh)
    else:
        g = parse_family_spec(spec, seed=args.seed)
    if args.out:
        with open(args.out, "w") as fh:
            write_edge_list(g, fh)
    else:
        write_edge_list(g, sys.stdout)
    return EXIT_OK


def cmd_order(args) -> int:
    cfg = _config(args)
    g = _load(cfg.input)
    ordering, info = obtain_ordering(g, cfg)
    stats = ordering_stats(g, ordering, cfg.radius_m)
    info.update(m=cfg.radius_m, wcol=stats.wcol, col=stats.col)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            write_ordering(ordering, fh)
    else:
        write_ordering(ordering, sys.stdout)
    sys.stderr.write(_record_line(info))
    return EXIT_OK


def cmd_dominate(args) -> int:
    cfg = _config(args)
    try:
        check_radii(cfg.k, cfg.radius_m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    g = _load(cfg.input)
    if g.n == 0:
        raise UsageError(f"{cfg.input}: graph has no vertices")
    rec, ok = run_dominate(g, cfg)
    if args.format == "text":
        cert = DominationCertificate.from_record(rec)
        text = cert.format_text() + "\n" + "".join(
            f"verified {name}: {'ok' if v else 'FAILED'}\n" for name, v in rec["verified"].items()
        )
    else:
        text = _record_line(rec)
    _emit(text, cfg.out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_exact(args) -> int:
    cfg = _config(args)
    g = _load(cfg.input)
    m = cfg.radius_m
    set_budget = oracles.SET_BUDGET
    if cfg.budget_n is not None:
        set_budget = replace(set_budget, max_n=cfg.budget_n)
    # the factorial-time ordering oracles keep their own ceiling
    order_budget = oracles.ORDERING_BUDGET
    dom, dom_witness = oracles.exact_dom_k(g, cfg.k, set_budget)
    alpha, alpha_witness = oracles.exact_alpha_m(g, m, set_budget)
    rec = {
        "n": g.n,
        "k": cfg.k,
        "m": m,
        "dom_k": dom,
        "dom_witness": dom_witness,
        "alpha_m": alpha,
        "alpha_witness": alpha_witness,
    }
    if g.n <= order_budget.max_n:
        rec["wcol_m"] = oracles.exact_wcol(g, m, order_budget)
        rec["col_m"] = oracles.exact_col(g, m, order_budget)
        rec["adm_m"] = oracles.exact_adm(g, m, order_budget)
    _emit(_record_line(rec), cfg.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.input)
    try:
        with open(args.certificate) as fh:
            recs = [json.loads(line) for line in fh if line.strip()]
        certs = [DominationCertificate.from_record(r) for r in recs]
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read certificate {args.certificate}: {exc}") from exc
    ok = True
    lines = []
    for cert in certs:
        checks = verify_certificate(g, cert)
        ok &= all(checks.values())
        lines.append(_record_line({"k": cert.k, "m": cert.m, "c": cert.c, **checks}))
    _emit("".join(lines), args.out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _bench_instances(args) -> list[tuple[str, Graph | str]]:
    """(name, graph) pairs; a string in place of a graph is a load error."""
    items: list[tuple[str, Graph | str]] = []
    for source in args.sources:
        if os.path.isdir(source):
            for name in sorted(os.listdir(source)):
                path = os.path.join(source, name)
                try:
                    items.append((name, load_graph(path)))
                except (OSError, GraphError) as exc:
                    items.append((name, str(exc)))
        else:
            try:
                items.append((source, parse_family_spec(source, seed=args.seed)))
            except (TypeError, ValueError) as exc:
                items.append((source, str(exc)))
    return items


def bench_row(name: str, g: Graph | str, cfg: RunConfig, timing: bool = True) -> dict:
    if isinstance(g, str):
        return {"instance": name, "error": g}
    row: dict = {"instance": name, "n": g.n}
    try:
        t0 = time.perf_counter()
        rec, ok = run_dominate(g, cfg)
        elapsed = time.perf_counter() - t0
    except (ValueError, RuntimeError) as exc:
        row["error"] = str(exc)
        return row
    size_d, size_a = rec["size_D"], rec["size_A"]
    row.update(
        c=rec["c"],
        size_D=size_d,
        size_A=size_a,
        ratio=round(size_d / size_a, 6) if size_a else None,
        c_squared=rec["c"] ** 2,
        label_decreases=rec["label_decreases"],
        decrease_bound=(cfg.k + 1) * g.n,
        verified=ok,
    )
    if timing:
        row["wall_time"] = round(elapsed, 6)
    return row


def cmd_bench(args) -> int:
    cfg = _config(args)
    try:
        check_radii(cfg.k, cfg.radius_m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    items = _bench_instances(args)
    timing = not args.no_time
    if args.jobs > 1 and len(items) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(bench_row, *zip(*items), [cfg] * len(items), [timing] * len(items)))
    else:
        rows = [bench_row(name, g, cfg, timing) for name, g in items]
    _emit("".join(_record_line(r) for r in rows), cfg.out)
    return EXIT_OK


def _config(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        out=getattr(args, "out", None),
        k=getattr(args, "k", 1),
        m=getattr(args, "m", None),
        ordering=getattr(args, "ordering", "degeneracy"),
        pmax=getattr(args, "pmax", None),
        budget_n=getattr(args, "budget_n", None),
        seed=getattr(args, "seed", 0),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sparsedom", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def radii(p, m_help="radius of independence (default 2k)"):
        p.add_argument("--k", type=int, default=1, help="domination radius")
        p.add_argument("--m", type=int, default=None, help=m_help)

    def ordering_flags(p):
        p.add_argument(
            "--ordering",
            default="degeneracy",
            help="degeneracy | adm-exact | adm-approx | file:PATH",
        )
        p.add_argument("--pmax", type=int, default=None, help="ceiling for adm-exact")

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("spec", help="e.g. grid:10x10, cycle:6, random:100,150, lower_bound:5,1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--ordering-out", help="for lower_bound: write the prescribed ordering here")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("order", help="compute an ordering and report its wcol/col")
    p.add_argument("input")
    radii(p, "radius of the measured statistics (default 2k)")
    ordering_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("dominate", help="k-dominating set with an independent certificate")
    p.add_argument("input")
    radii(p)
    ordering_flags(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("exact", help="exact dom_k, alpha_m (and wcol/col/adm when tiny)")
    p.add_argument("input")
    radii(p)
    p.add_argument("--budget-n", type=int, default=None, help="override the oracle vertex ceiling")
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="re-check certificate records against a graph")
    p.add_argument("input")
    p.add_argument("certificate", help="file of certificate records, one per line")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run dominate over a corpus and tabulate")
    p.add_argument("sources", nargs="*", help="corpus directories or generator specs")
    radii(p)
    ordering_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-time", action="store_true", help="omit wall times for diffable output")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"sparsedom {args.command}: {exc}\n")
        return EXIT_USAGE
    except oracles.BudgetExceeded as exc:
        sys.stderr.write(f"sparsedom {args.command}: {exc}\n")
        return EXIT_BUDGET
    except AdmissibilityCeilingError as exc:
        sys.stderr.write(f"sparsedom {args.command}: {exc} (raise --pmax)\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
