"""Command-line front end.

Subcommands: gen, extend, dc, dac, spectrum, critical, verify, realize,
probe, tables. Digraphs travel as edge-list text files ("n m" header, one
"u v" line per arc, '#' comments); colorings and certificates as JSON.

Exit codes: 0 success, 1 domain or input error (with a JSON error object
on stderr), 2 usage error, 3 search budget exhausted ("unknown", which is
never conflated with a proved "no").
"""

import argparse
import json
import os
import sys
from pathlib import Path

from .core import Digraph, format_edge_list, parse_edge_list
from .coloring import (coloring_from_json, coloring_to_json,
                       is_acyclic_coloring, is_complete_coloring)
from .construct import attach_path
from .families import (CirculantSpec, asymmetric_threshold, circulant,
                       complete_symmetric, critical_tournament,
                       critical_tournament_dac, full_circulant_tournament,
                       transitive_tournament)
from .realize import (certificate_from_json, certificate_to_json,
                      conjecture_probe, realize_asymmetric,
                      realize_nonsymmetric, verify_certificate)
from .solvers import (Budget, BudgetExhausted, InterpolationGap,
                      diachromatic_number, dichromatic_number,
                      interpolation_spectrum, is_vertex_critical)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 3


def parse_digraph_file(path: str | Path) -> Digraph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def dac_value_table(r_max: int, s_max: int) -> dict[int, list[int]]:
    """Closed-form diachromatic values of the critical circulant family,
    one row per dichromatic number r = 3..r_max, columns s = 0..s_max."""
    if r_max < 3:
        raise ValueError("r_max must be >= 3")
    if s_max < 0:
        raise ValueError("s_max must be >= 0")
    return {
        r: [critical_tournament_dac(r, s) for s in range(s_max + 1)]
        for r in range(3, r_max + 1)
    }


def threshold_table(r_max: int) -> dict[int, int]:
    """Best known asymmetric realizability thresholds b(r), r = 2..r_max."""
    if r_max < 2:
        raise ValueError("r_max must be >= 2")
    return {r: asymmetric_threshold(r) for r in range(2, r_max + 1)}


def _budget_from(args) -> Budget:
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _threads_from(args) -> int:
    threads = args.threads
    if threads is None:
        env = os.environ.get("DIKROMA_THREADS")
        threads = int(env) if env else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError("--threads must be >= 1")
    return threads


def _write_text(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _write_json(obj, out: str | None) -> None:
    _write_text(json.dumps(obj, indent=2) + "\n", out)


def _add_budget_flags(sub) -> None:
    sub.add_argument("--budget-nodes", type=int, default=None,
                     help="abort with 'unknown' after this many search nodes")
    sub.add_argument("--budget-seconds", type=float, default=None,
                     help="abort with 'unknown' after this much wall time")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker count (default: DIKROMA_THREADS or machine "
                          "parallelism); answers never depend on it")


def _add_format_flag(sub, choices=("text", "json")) -> None:
    sub.add_argument("--format", choices=choices, default="text")


def _cmd_gen(args) -> int:
    if args.family == "circulant":
        residues = frozenset(int(w) for w in args.connection.split(","))
        d = circulant(CirculantSpec(args.m, residues))
    elif args.family == "full-circulant":
        d = full_circulant_tournament(args.m)
    elif args.family == "critical-tournament":
        d = critical_tournament(args.r, args.s)
    elif args.family == "complete-symmetric":
        d = complete_symmetric(args.n)
    else:  # transitive
        d = transitive_tournament(args.n)
    _write_text(format_edge_list(d), args.out)
    return EXIT_OK


def _cmd_extend(args) -> int:
    base = parse_digraph_file(args.infile)
    d = attach_path(base, args.v0, args.path_len)
    _write_text(format_edge_list(d), args.out)
    return EXIT_OK


def _solve_command(args, name: str, solver) -> int:
    d = parse_digraph_file(args.infile)
    result = solver(d, _budget_from(args))
    payload = {
        "command": name,
        "n": d.n,
        "m": d.m,
        "value": result.value,
        "witness": coloring_to_json(result.witness),
        "stats": {
            "nodes_explored": result.stats.nodes_explored,
            "elapsed_seconds": result.stats.elapsed,
            "threads": _threads_from(args),
        },
    }
    if args.format == "json":
        _write_json(payload, None)
    else:
        print(f"{name} = {result.value}")
        print(f"witness: {json.dumps(coloring_to_json(result.witness))}")
        print(f"nodes explored: {result.stats.nodes_explored}")
    return EXIT_OK


def _cmd_dc(args) -> int:
    return _solve_command(args, "dc", dichromatic_number)


def _cmd_dac(args) -> int:
    return _solve_command(args, "dac", diachromatic_number)


def _cmd_spectrum(args) -> int:
    d = parse_digraph_file(args.infile)
    levels = interpolation_spectrum(d, _budget_from(args))
    payload = {
        "command": "spectrum",
        "dc": levels[0][0],
        "dac": levels[-1][0],
        "levels": [
            {"k": k, "coloring": coloring_to_json(c)} for k, c in levels
        ],
    }
    if args.format == "json":
        _write_json(payload, None)
    else:
        print(f"spectrum: {levels[0][0]}..{levels[-1][0]}")
        for k, c in levels:
            print(f"  k={k}: {json.dumps(coloring_to_json(c))}")
    return EXIT_OK


def _cmd_critical(args) -> int:
    d = parse_digraph_file(args.infile)
    answer = is_vertex_critical(d, _budget_from(args))
    if args.format == "json":
        _write_json({"command": "critical", "vertex_critical": answer}, None)
    else:
        print(f"vertex-critical: {'yes' if answer else 'no'}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.cert:
        cert = certificate_from_json(
            json.loads(Path(args.cert).read_text(encoding="utf-8")))
        check = verify_certificate(cert, _budget_from(args))
        payload = {"command": "verify", "ok": check.ok,
                   "violations": list(check.violations)}
        ok = check.ok
    else:
        d = parse_digraph_file(args.infile)
        coloring = coloring_from_json(
            json.loads(Path(args.coloring).read_text(encoding="utf-8")))
        acyclic = is_acyclic_coloring(d, coloring)
        complete = is_complete_coloring(d, coloring)
        payload = {"command": "verify", "acyclic": acyclic,
                   "complete": complete, "ok": acyclic and complete}
        ok = acyclic and complete
    if args.format == "json":
        _write_json(payload, None)
    else:
        for key, value in payload.items():
            if key != "command":
                print(f"{key}: {value}")
    return EXIT_OK if ok else EXIT_ERROR


def _cmd_realize(args) -> int:
    builder = realize_asymmetric if args.asymmetric else realize_nonsymmetric
    cert = builder(args.r, args.t, _budget_from(args))
    _write_json(certificate_to_json(cert), args.out)
    if args.out:
        print(f"certificate written to {args.out}: dc={cert.claimed_r} "
              f"({cert.dc_verified}), dac={cert.claimed_t} ({cert.dac_verified}), "
              f"{cert.symmetry}")
    return EXIT_OK


def _cmd_probe(args) -> int:
    report = conjecture_probe(args.r, args.n_max, samples_per_n=args.samples,
                              seed=args.seed, budget=_budget_from(args))
    _write_json(report.to_json(), args.out)
    return EXIT_BUDGET if report.budget_exhausted else EXIT_OK


def _format_table(rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        return "\n".join(",".join(str(x) for x in row) for row in rows) + "\n"
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(str(x).rjust(w) for x, w in zip(row, widths)) for row in rows
    ) + "\n"


def _cmd_tables(args) -> int:
    chunks = []
    titled = args.format == "text"
    if args.which in ("1", "all"):
        table = dac_value_table(args.r_max, args.s_max)
        rows = [["r \\ s" if titled else "r"] + list(range(args.s_max + 1))]
        rows += [[r] + values for r, values in table.items()]
        title = "diachromatic values of the critical circulant family\n" if titled else ""
        chunks.append(title + _format_table(rows, args.format))
    if args.which in ("2", "all"):
        table = threshold_table(max(args.r_max, 2))
        rows = [["r"] + list(table.keys()), ["b(r)"] + list(table.values())]
        title = "asymmetric realizability thresholds\n" if titled else ""
        chunks.append(title + _format_table(rows, args.format))
    _write_text("\n".join(chunks), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dikroma",
        description="Exact dichromatic/diachromatic toolkit for finite digraphs")
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="generate a named digraph family")
    gen_subs = gen.add_subparsers(dest="family", required=True)
    g = gen_subs.add_parser("circulant")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--connection", required=True,
                   help="comma-separated residues, e.g. 1,2,4")
    g = gen_subs.add_parser("full-circulant")
    g.add_argument("--m", type=int, required=True)
    g = gen_subs.add_parser("critical-tournament")
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--s", type=int, default=0)
    g = gen_subs.add_parser("complete-symmetric")
    g.add_argument("--n", type=int, required=True)
    g = gen_subs.add_parser("transitive")
    g.add_argument("--n", type=int, required=True)
    for g in gen_subs.choices.values():
        g.add_argument("--out", default=None)
        g.set_defaults(handler=_cmd_gen)

    ext = subs.add_parser("extend", help="attach an alternating path")
    ext.add_argument("--in", dest="infile", required=True)
    ext.add_argument("--v0", type=int, required=True, help="anchor vertex")
    ext.add_argument("--path-len", type=int, required=True)
    ext.add_argument("--out", default=None)
    ext.set_defaults(handler=_cmd_extend)

    for name, handler, blurb in (
        ("dc", _cmd_dc, "dichromatic number with witness"),
        ("dac", _cmd_dac, "diachromatic number with witness"),
        ("spectrum", _cmd_spectrum, "complete acyclic coloring per level"),
        ("critical", _cmd_critical, "vertex-criticality check"),
    ):
        sub = subs.add_parser(name, help=blurb)
        sub.add_argument("--in", dest="infile", required=True)
        _add_budget_flags(sub)
        _add_format_flag(sub)
        sub.set_defaults(handler=handler)

    ver = subs.add_parser("verify", help="check a certificate or a coloring")
    ver.add_argument("--cert", default=None, help="certificate JSON file")
    ver.add_argument("--in", dest="infile", default=None, help="digraph file")
    ver.add_argument("--coloring", default=None, help="coloring JSON file")
    _add_budget_flags(ver)
    _add_format_flag(ver)
    ver.set_defaults(handler=_cmd_verify)

    rea = subs.add_parser("realize", help="certified digraph for a (dc, dac) pair")
    rea.add_argument("--r", type=int, required=True)
    rea.add_argument("--t", type=int, required=True)
    rea.add_argument("--asymmetric", action="store_true")
    rea.add_argument("--out", default=None)
    _add_budget_flags(rea)
    rea.set_defaults(handler=_cmd_realize)

    pro = subs.add_parser("probe", help="search for equal-pair asymmetric digraphs")
    pro.add_argument("--r", type=int, required=True)
    pro.add_argument("--n-max", type=int, required=True)
    pro.add_argument("--samples", type=int, default=200)
    pro.add_argument("--seed", type=int, default=0)
    pro.add_argument("--out", default=None)
    _add_budget_flags(pro)
    pro.set_defaults(handler=_cmd_probe)

    tab = subs.add_parser("tables", help="closed-form value tables")
    tab.add_argument("--which", choices=("1", "2", "all"), default="all")
    tab.add_argument("--r-max", type=int, default=9)
    tab.add_argument("--s-max", type=int, default=5)
    tab.add_argument("--format", choices=("text", "csv"), default="text")
    tab.add_argument("--out", default=None)
    tab.set_defaults(handler=_cmd_tables)

    return parser


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": {"kind": kind, "message": message}}) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if bool(args.cert) == bool(args.infile and args.coloring):
            parser.error("verify needs --cert, or --in together with --coloring")
    try:
        return args.handler(args)
    except BudgetExhausted as exc:
        _emit_error("budget-exhausted", str(exc))
        return EXIT_BUDGET
    except InterpolationGap as exc:
        _emit_error("interpolation-gap", str(exc))
        return EXIT_ERROR
    except (ValueError, OSError, KeyError, OverflowError, MemoryError) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_ERROR
    except RuntimeError as exc:
        _emit_error("internal-defect", str(exc))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
