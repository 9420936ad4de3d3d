"""``kneser-lab`` command line.

Exit status: 0 success, 1 a mathematical counterexample or bound violation
was found, 2 usage or input error, 3 a resource cap or time budget was hit.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import replace
from pathlib import Path

from . import __version__
from .bounds import alt_number, bound_report, cd, max_alt_fixed_perm
from .coloring import chromatic_number, local_chromatic_number
from .config import Caps
from .errors import KneserLabError, ParseError, ResourceLimitError
from .fan import exhaustive_fan_check
from .hardness import random_rho, verify_reduction
from .hypercore import Hypergraph, coloring_from_json, read_hypergraph
from .kneser import build_kneser, complete_ksubsets
from .rainbow import sweep_verify

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

ENV_HELP = """\
environment overrides:
  KNESER_LAB_KG_EDGES         max edges of a built Kneser hypergraph (default 10^7)
  KNESER_LAB_ALT_INNER_N      max n for exact fixed-order alternation (default 22)
  KNESER_LAB_ALT_OUTER_N      max n for exact alternation number (default 9)
  KNESER_LAB_FAN_LABELINGS    max labelings for an exhaustive fan check (default 10^7)
  KNESER_LAB_FAN_VERTICES     max (q+1)^n for the subdivision (default 10^6)
  KNESER_LAB_SWEEP_COLORINGS  max colorings in an exhaustive rainbow sweep (default 10^6)
  KNESER_LAB_TIME_BUDGET_MS   default time budget, 0 = none
  KNESER_LAB_DISABLE_JIT=1    run the search kernels without numba
"""


class UsageError(Exception):
    pass


def _json_default(obj):
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if k != "elapsed_ms"}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


def emit_report(report: dict, timings: bool = True) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    data = json.loads(json.dumps(report, default=_json_default))
    if not timings:
        data = _strip_timings(data)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _add_input(p: argparse.ArgumentParser, name: str = "--input"):
    p.add_argument(name, dest="input", help="hypergraph in .hg format")
    p.add_argument("--n", type=int, help="use the complete k-subset hypergraph on [n]")
    p.add_argument("--k", type=int, help="subset size for --n")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--time-budget-ms", type=int, default=None)
    p.add_argument("--no-timings", action="store_true",
                   help="omit elapsed times so identical runs give identical bytes")
    p.add_argument("--workers", type=int, default=1,
                   help="accepted for compatibility; searches run single-threaded")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kneser-lab", description="Exact computations on Kneser hypergraphs.",
        epilog=ENV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"kneser-lab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    kn = sub.add_parser("kneser", help="Kneser hypergraph construction")
    kn_sub = kn.add_subparsers(dest="kneser_command", required=True)
    b = kn_sub.add_parser("build", help="write KG^q(H) as .hg plus a vertex-map sidecar")
    _add_input(b)
    _add_common(b)
    b.add_argument("--q", type=int, default=2)
    b.add_argument("--hg-out", required=True, help="path of the .hg file to write")

    for name, help_ in (("chromatic", "exact chromatic number"),
                        ("local-chromatic", "local chromatic number")):
        p = sub.add_parser(name, help=help_)
        _add_input(p)
        _add_common(p)
        p.add_argument("--kneser", type=int, metavar="Q",
                       help="work on KG^Q of the input instead of the input itself")
        if name == "local-chromatic":
            p.add_argument("--max-t", type=int, default=None)

    p = sub.add_parser("defect", help="q-colorability defect")
    _add_input(p)
    _add_common(p)
    p.add_argument("--q", type=int, default=2)

    p = sub.add_parser("alt", help="alternation number")
    _add_input(p)
    _add_common(p)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--mode", choices=("exact", "heuristic", "fixed"), default="exact")
    p.add_argument("--perm", help="comma-separated vertex order for --mode fixed")
    p.add_argument("--restarts", type=int, default=8)

    p = sub.add_parser("report", help="all lower bounds for chi(KG^q(H))")
    _add_input(p)
    _add_common(p)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--exact", action="store_true", help="also solve chi and chi_l of KG^q(H)")
    p.add_argument("--max-t", type=int, default=None)

    p = sub.add_parser("verify-rainbow", help="sweep colorings of KG^p(H) for rainbow witnesses")
    _add_input(p)
    _add_common(p)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--r-mode", choices=("cd", "alt"), default="cd")
    p.add_argument("--max-t", type=int, default=None)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--force", action="store_true", help="allow non-prime p (exploratory)")
    p.add_argument("--colorings", nargs="*", help="coloring JSON files to check instead")
    p.add_argument("--counterexample-dir", default="counterexamples")

    p = sub.add_parser("fan-check", help="exhaustive check of equivariant labelings")
    _add_common(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--samples", type=int, default=None)

    p = sub.add_parser("hardness-demo", help="independent set to alternation reduction")
    _add_input(p, "--graph")
    _add_common(p)
    p.add_argument("--random-rho", action="store_true", help="number vertices by a seeded permutation")
    return parser


def _load(args) -> Hypergraph:
    if args.input:
        path = Path(args.input)
        if not path.is_file():
            raise UsageError(f"input file not found: {path}")
        return read_hypergraph(path)
    if args.n is not None and args.k is not None:
        return complete_ksubsets(args.n, args.k)
    raise UsageError("give an input hypergraph file or --n and --k")


def _budget(args, caps: Caps):
    ms = args.time_budget_ms if args.time_budget_ms is not None else caps.time_budget_ms
    return ms / 1000.0 if ms else None


def _config_echo(args) -> dict:
    skip = {"output", "no_timings"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(args, caps: Caps | None = None) -> tuple:
    """Execute one parsed command; returns ``(exit_status, report_dict)``."""
    caps = Caps.from_env() if caps is None else caps
    budget = _budget(args, caps)
    status = EXIT_OK
    cmd = args.command

    if cmd == "kneser":
        h = _load(args)
        k = build_kneser(h, args.q, edge_cap=caps.kg_edges)
        hg_out = Path(args.hg_out)
        hg_out.write_text(k.kg.to_text(), encoding="utf-8")
        sidecar = hg_out.with_suffix(hg_out.suffix + ".map.json")
        sidecar.write_text(k.sidecar_json(), encoding="utf-8")
        result = {"kg_vertices": k.kg.n, "kg_edges": k.kg.m, "q": args.q,
                  "hg_file": str(hg_out), "map_file": str(sidecar)}
    elif cmd in ("chromatic", "local-chromatic"):
        h = _load(args)
        if args.kneser:
            h = build_kneser(h, args.kneser, edge_cap=caps.kg_edges).kg
        if cmd == "chromatic":
            res = chromatic_number(h, time_budget_s=budget)
            result = {**res.to_dict(), "elapsed_ms": res.elapsed_ms}
        else:
            res = local_chromatic_number(h, args.max_t, time_budget_s=budget)
            result = {**res.to_dict(), "elapsed_ms": res.elapsed_ms}
        if res.status == "timeout":
            status = EXIT_RESOURCE
    elif cmd == "defect":
        res = cd(_load(args), args.q, time_budget_s=budget)
        result = res.to_dict()
        if res.status == "timeout":
            status = EXIT_RESOURCE
    elif cmd == "alt":
        h = _load(args)
        if args.mode == "fixed":
            perm = None if not args.perm else [int(v) for v in args.perm.split(",")]
            result = max_alt_fixed_perm(h, args.q, perm, cap=caps.alt_inner_n).to_dict()
        else:
            result = alt_number(h, args.q, args.mode, args.seed, restarts=args.restarts,
                                outer_cap=caps.alt_outer_n, inner_cap=caps.alt_inner_n).to_dict()
    elif cmd == "report":
        rep = bound_report(_load(args), args.q, exact=args.exact, seed=args.seed,
                           max_t=args.max_t, time_budget_s=budget, caps=caps)
        result = rep.to_dict()
        if not rep.consistent:
            status = EXIT_COUNTEREXAMPLE
        elif rep.cd.status != "exact" or (rep.chi is not None and rep.chi.status != "exact"):
            status = EXIT_RESOURCE
    elif cmd == "verify-rainbow":
        h = _load(args)
        colorings = None
        if args.colorings:
            colorings = []
            for path in args.colorings:
                if not Path(path).is_file():
                    raise UsageError(f"coloring file not found: {path}")
                colorings.append(coloring_from_json(Path(path).read_text(encoding="utf-8")))
        rep = sweep_verify(h, args.p, args.r_mode, args.max_t, samples=args.samples,
                           seed=args.seed, force=args.force, colorings=colorings,
                           counterexample_dir=args.counterexample_dir,
                           time_budget_s=budget, caps=caps)
        result = rep.to_dict()
        if not rep.ok:
            status = EXIT_COUNTEREXAMPLE
        elif not rep.complete:
            status = EXIT_RESOURCE
    elif cmd == "fan-check":
        rep = exhaustive_fan_check(args.q, args.n, args.m, args.samples, args.seed,
                                   cap=caps.fan_labelings)
        result = rep.to_dict()
        if rep.violations:
            status = EXIT_COUNTEREXAMPLE
    elif cmd == "hardness-demo":
        g = _load(args)
        rho = random_rho(g.n, args.seed) if args.random_rho else None
        verdict = verify_reduction(g, rho, cap=caps.alt_inner_n)
        result = verdict.to_dict()
        if not verdict.equal:
            status = EXIT_COUNTEREXAMPLE
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown command {cmd}")
    return status, result


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.monotonic()
    try:
        caps = Caps.from_env()
        if args.time_budget_ms is not None:
            caps = replace(caps, time_budget_ms=args.time_budget_ms)
        status, result = run(args, caps)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"kneser-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"kneser-lab: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except KneserLabError as exc:  # pragma: no cover - all subclasses handled above
        print(f"kneser-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    command = args.command if args.command != "kneser" else f"kneser {args.kneser_command}"
    report = {
        "tool": "kneser-lab",
        "version": __version__,
        "command": command,
        "config": _config_echo(args),
        "result": result,
        "exit_status": status,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
    }
    text = emit_report(report, timings=not args.no_timings)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
