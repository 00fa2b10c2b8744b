"""Command line: bridgelab <subcommand> [flags].

Exit codes: 0 every requested check holds, 1 a check failed, 2 usage or
config error, 3 refused because of a resource cap.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from fractions import Fraction

from . import acceptance, reports
from .classes import (
    external_class,
    census,
    check_bridge_addable,
    check_bridge_alterable,
    get_class,
    iter_rows,
)
from .engine import (
    STATS,
    conjecture_explorer,
    statistic_distribution,
    trend_report,
    verify_theorem1,
    verify_theorem2,
)
from .errors import CapExceeded, DegenerateDistribution, DomainError, HypothesisError
from .forests import (
    bridge_free_base,
    fiber_mass_identity_check,
    moon_brute_force,
    moon_tree_total,
    verify_fn2_identity,
    verify_smalln25,
)
from .graph import Graph, GraphError
from .rooted import (
    rooted_frag_trend,
    rooted_kappa_distribution,
    unrooted_aside_check,
    verify_rooted_ratio,
    verify_theorem7,
)
from .sampler import ChainConfig, chi_square_validation, run_chain
from .weighting import F_CLUSTER, F_ONE, F_TABLE, Weighting, random_cluster_weighting

log = logging.getLogger("bridgelab")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# flag defaults, applied after the config file so that "given" can be told apart
DEFAULTS = {
    "cls": "forests", "n": "5", "lam": None, "nu": None, "p": None, "f": None,
    "f_table": None, "weights": None, "out": None, "format": "json", "seed": 0,
    "max_n": None, "predicate": None, "lenient": False,
}
CONFIG_KEYS = {
    "class": "cls", "n": "n", "lambda": "lam", "nu": "nu", "p": "p", "f": "f",
    "f-table": "f_table", "weights": "weights", "out": "out", "format": "format",
    "seed": "seed", "max-n": "max_n", "predicate": "predicate",
}


class UsageError(Exception):
    pass


def parse_n(text: str) -> list[int]:
    """'5' or '2..5' (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"--n must be an integer or a range a..b, got {text!r}") from None


def parse_weights(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        vals = json.loads(text) if text.startswith("[") else [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--weights must be like 1,2,3 or [1,2,3], got {text!r}") from None
    if not vals or any(not isinstance(v, int) or v < 1 for v in vals):
        raise UsageError("weights must be positive integers")
    return tuple(vals)


def read_config(path: str) -> dict:
    """key=value lines; '#' starts a comment; keys mirror the long flag names."""
    out = {}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for num, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{num}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        val = val.strip('"').strip("'")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{num}: unknown key {key!r}")
        out[CONFIG_KEYS[key]] = val
    return out


def _common(p: argparse.ArgumentParser):
    p.add_argument("--class", dest="cls", help="graph class name")
    p.add_argument("--n", help="vertex count or inclusive range a..b")
    p.add_argument("--lambda", dest="lam", help="bridge weight, as P/Q")
    p.add_argument("--nu", help="component weight, as P/Q")
    p.add_argument("--p", help="edge probability P/Q (random-cluster form, implies f=cluster)")
    p.add_argument("--f", choices=[F_ONE, F_CLUSTER, F_TABLE], help="bridge-free factor")
    p.add_argument("--f-table", dest="f_table", help="JSON file {graph6: 'P/Q'} for f=table")
    p.add_argument("--weights", help="vertex weights, 1,2,3 or [1,2,3]")
    p.add_argument("--out", help="write the report here instead of standard output")
    p.add_argument("--format", choices=["json", "csv", "text"])
    p.add_argument("--seed", type=int)
    p.add_argument("--max-n", dest="max_n", type=int, help="override the enumeration cap")
    p.add_argument("--config", help="key=value file mirroring these flags; flags win")
    p.add_argument("--predicate", help="command answering Y/N per graph6 line (user class)")
    p.add_argument("--lenient", action="store_true", default=None,
                   help="evaluate bounds even where the class hypothesis fails")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bridgelab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="census and statistic laws of a class")
    _common(p)
    p.add_argument("--stat", choices=STATS, default="kappa")
    p.add_argument("--graphs", action="store_true", help="also list members as graph6")

    p = sub.add_parser("verify", help="exact finite-n verification")
    _common(p)
    p.add_argument("--theorem", default="1",
                   choices=["1", "2", "moon", "fiber", "fn2", "smalln"])
    p.add_argument("--base", help="component sizes of the bridge-free base, e.g. 3,1,1")
    p.add_argument("--shape", choices=["cycle", "clique"], default="cycle")

    p = sub.add_parser("trend", help="per-n connectivity, E[kappa], E[frag]")
    _common(p)

    p = sub.add_parser("rooted", help="rooted-graph laws and checks")
    _common(p)
    p.add_argument("--check", default="theorem7",
                   choices=["law", "ratio", "theorem7", "frag-trend", "aside"])

    p = sub.add_parser("conjecture", help="finite-n evidence for the open conjectures")
    _common(p)

    p = sub.add_parser("sample", help="Metropolis chain on the class")
    _common(p)
    p.add_argument("--steps", type=int, default=100_000)
    p.add_argument("--burn-in", dest="burn_in", type=int, default=1_000)
    p.add_argument("--thinning", type=int, default=10)
    p.add_argument("--stream", help="write every recorded graph as graph6 to this file")
    p.add_argument("--chi-square", dest="chi_square", action="store_true",
                   help="compare the kappa counts with the exact law")
    p.add_argument("--allow-unchecked", dest="allow_unchecked", action="store_true",
                   help="run even if the class is not known to be deletion-closed")

    p = sub.add_parser("classcheck", help="mechanical bridge-addable/alterable check")
    _common(p)

    p = sub.add_parser("verify-all", help="run the acceptance criteria")
    _common(p)
    p.add_argument("--only", help="comma-separated criterion numbers")
    return parser


def resolve(args) -> argparse.Namespace:
    """Merge config file and defaults into args; validate before any work."""
    if getattr(args, "config", None):
        for key, val in read_config(args.config).items():
            if getattr(args, key, None) is None:
                setattr(args, key, val)
    for key, val in DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, val)
    args.seed = int(args.seed)
    if args.max_n is not None:
        args.max_n = int(args.max_n)
    args.n_list = parse_n(str(args.n))
    if args.p is not None and (args.lam is not None or args.f not in (None, F_CLUSTER)):
        raise UsageError("--p sets lambda and f=cluster; do not combine it with --lambda or --f")
    if args.f_table and args.f not in (None, F_TABLE):
        raise UsageError("--f-table needs --f table")
    try:
        nu = Fraction(args.nu) if args.nu is not None else Fraction(1)
        if args.p is not None:
            args.weighting = random_cluster_weighting(Fraction(args.p), nu)
        else:
            lam = Fraction(args.lam) if args.lam is not None else Fraction(1)
            f = args.f or (F_TABLE if args.f_table else F_ONE)
            if f == F_TABLE:
                if not args.f_table:
                    raise UsageError("--f table needs --f-table FILE")
                args.weighting = Weighting.from_table_file(lam, nu, args.f_table)
            else:
                args.weighting = Weighting(lam, nu, f)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        raise UsageError(f"bad weighting: {exc}") from None
    args.weight_vec = parse_weights(args.weights) if args.weights else None
    args.graph_class = _pick_class(args)
    return args


def _pick_class(args):
    if args.predicate:
        cls = external_class(args.cls if args.cls != DEFAULTS["cls"] else "external",
                             args.predicate)
    else:
        try:
            cls = get_class(args.cls)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    if args.max_n is not None:
        cls = dataclasses.replace(cls, enum_cap=args.max_n)
    return cls


def _cap(cls, n):
    if n > cls.enum_cap:
        raise CapExceeded(f"{cls.name} is enumerated only up to n={cls.enum_cap} "
                          f"(use --max-n to override)")


# --------------------------------------------------------------------------
# subcommands; each returns (kind, result, holds, csv rows or None)


def cmd_enumerate(a):
    out = []
    for n in a.n_list:
        _cap(a.graph_class, n)
        cen = census(a.graph_class, n)
        entry = {
            "n": n, "members": sum(cen.values()),
            "law": statistic_distribution(a.graph_class, n, a.weighting, a.stat),
        }
        if a.graphs:
            entry["graphs"] = [Graph.from_rows(n, r) for r in iter_rows(a.graph_class, n)]
        out.append(entry)
    rows = [[e["n"], k, v] for e in out for k, v in e["law"].pmf.items()]
    return "enumerate", out, None, (["n", a.stat, "probability"], rows)


def cmd_verify(a):
    w, cls = a.weighting, a.graph_class
    results = []
    t = a.theorem
    if t in ("1", "2"):
        for n in a.n_list:
            _cap(cls, n)
            fn = verify_theorem1 if t == "1" else verify_theorem2
            results.append(fn(cls, n, w, strict=not a.lenient))
    elif t == "moon":
        vec = _need_weights(a)
        brute, formula = moon_brute_force(vec), moon_tree_total(vec)
        results.append({"weights": vec, "brute_force": brute, "formula": formula,
                        "holds": brute == formula})
    elif t == "fiber":
        if not a.base:
            raise UsageError("--theorem fiber needs --base sizes")
        sizes = parse_weights(a.base)
        g0, _ = bridge_free_base(sizes, a.shape)
        results.append(fiber_mass_identity_check(g0, w.lam, w.nu))
    else:
        vec = _need_weights(a)
        fn = verify_fn2_identity if t == "fn2" else verify_smalln25
        results.append(fn(len(vec), vec, w.lam, w.nu))
    return f"verify-{t}", results, _verdict(a, results), None


def _need_weights(a):
    if not a.weight_vec:
        raise UsageError(f"--theorem {a.theorem} needs --weights")
    if len(a.weight_vec) > 9:
        raise CapExceeded("weighted forest checks are capped at 9 vertices")
    return a.weight_vec


def _verdict(a, results):
    """True/False, or None when some bound was evaluated outside the hypothesis:
    such a run is never reported as a verification."""
    if any(str(getattr(r, "hypothesis", "")).startswith("violated") for r in results):
        a.unverified = True
        return None
    return all(_holds(r) for r in results)


def _holds(r) -> bool:
    if isinstance(r, dict):
        return bool(r["holds"])
    return bool(r.holds)


def cmd_trend(a):
    for n in a.n_list:
        _cap(a.graph_class, n)
    table = trend_report(a.graph_class, a.weighting, a.n_list)
    rows = [[r.n, r.p_connected, r.e_kappa, r.e_frag, table.ref_conn, table.ref_kappa,
             table.ref_frag] for r in table.rows]
    return "trend", table, None, (table.CSV_HEADER.split(","), rows)


def cmd_rooted(a):
    cls, w = a.graph_class, a.weighting
    for n in a.n_list:
        _cap(cls, n)
    strict = not a.lenient
    if a.check == "frag-trend":
        if cls.name != "forests":
            raise UsageError("rooted frag-trend is defined for forests only")
        rows = rooted_frag_trend(a.n_list, w)
        csv_rows = [[r.n, r.e_frag, r.sqrt_n, r.ratio] for r in rows]
        return "rooted-frag-trend", rows, None, (["n", "e_frag", "sqrt_n", "ratio"], csv_rows)
    results = []
    for n in a.n_list:
        if a.check == "law":
            results.append(rooted_kappa_distribution(cls, n, w))
        elif a.check == "ratio":
            results.append(verify_rooted_ratio(cls, n, w, strict=strict))
        elif a.check == "theorem7":
            results.append(verify_theorem7(cls, n, w, strict=strict))
        else:
            results.append(unrooted_aside_check(cls, n, w, strict=strict))
    holds = None if a.check == "law" else _verdict(a, results)
    return f"rooted-{a.check}", results, holds, None


def cmd_conjecture(a):
    for n in a.n_list:
        _cap(a.graph_class, n)
    rep = conjecture_explorer(a.graph_class, a.weighting, a.n_list, strict=not a.lenient)
    # evidence only: a conjecture going the wrong way is a finding, not a failed run
    return "conjecture", rep, None, None


def cmd_sample(a):
    if len(a.n_list) != 1:
        raise UsageError("sample takes a single --n")
    n = a.n_list[0]
    init = None
    cfg = ChainConfig(a.graph_class, n, a.weighting, steps=a.steps, burn_in=a.burn_in,
                      thinning=a.thinning, seed=a.seed, initial=init,
                      allow_unchecked=a.allow_unchecked)
    if a.chi_square:
        _cap(a.graph_class, n)
        rep = chi_square_validation(a.graph_class, n, a.weighting, cfg)
        return "sample-chi-square", {"config": cfg.describe(), "chi_square": rep}, rep.passed, None
    if a.stream:
        with open(a.stream, "w") as fh:
            summary = run_chain(cfg, stream=fh)
    else:
        summary = run_chain(cfg)
    rows = [[stat, k, v] for stat in ("kappa", "frag", "bridges")
            for k, v in getattr(summary, stat).items()]
    return "sample", summary, None, (["stat", "value", "frequency"], rows)


def cmd_classcheck(a):
    out = []
    for n in a.n_list:
        if n > a.graph_class.check_cap and a.max_n is None:
            raise CapExceeded(f"closure checks for {a.graph_class.name} are capped at "
                              f"n={a.graph_class.check_cap}")
        add = check_bridge_addable(a.graph_class, n)
        alt = check_bridge_alterable(a.graph_class, n) if add else None
        out.append({
            "n": n, "bridge_addable": add.holds, "addable_counterexample": add.counterexample,
            "bridge_alterable": None if alt is None else alt.holds,
            "alterable_counterexample": None if alt is None else alt.counterexample,
        })
    holds = all(r["bridge_addable"] for r in out)
    return "classcheck", out, holds, None


def cmd_verify_all(a):
    only = {int(x) for x in a.only.split(",")} if a.only else None
    results = acceptance.run_all(only, echo=lambda line: print(line, file=sys.stderr))
    return "verify-all", results, all(c.passed for c in results), None


COMMANDS = {
    "enumerate": cmd_enumerate, "verify": cmd_verify, "trend": cmd_trend,
    "rooted": cmd_rooted, "conjecture": cmd_conjecture, "sample": cmd_sample,
    "classcheck": cmd_classcheck, "verify-all": cmd_verify_all,
}


def _config_record(a) -> dict:
    rec = {"command": a.command, "class": a.graph_class.name, "n": a.n_list,
           "weighting": a.weighting.describe(), "seed": a.seed}
    if a.weight_vec:
        rec["weights"] = list(a.weight_vec)
    for key in ("theorem", "check", "stat", "base", "shape", "steps", "burn_in", "thinning"):
        if hasattr(a, key):
            rec[key] = getattr(a, key)
    return rec


def render(a, kind, result, holds, table) -> str:
    if a.format == "csv":
        if table is None:
            raise UsageError(f"{a.command} has no CSV form; use json or text")
        return reports.render_csv(*table)
    env = reports.envelope(kind, _config_record(a), result, holds)
    if a.format == "text":
        return reports.render_text(env)
    return reports.dumps(env)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        args = resolve(args)
        kind, result, holds, table = COMMANDS[args.command](args)
        text = render(args, kind, result, holds, table)
    except UsageError as exc:
        print(f"bridgelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"bridgelab: refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except HypothesisError as exc:
        print(f"bridgelab: hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (DomainError, DegenerateDistribution, GraphError, ValueError, KeyError,
            RuntimeError, OSError) as exc:
        print(f"bridgelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if holds is False:
        print(f"bridgelab: {kind}: a check failed", file=sys.stderr)
        return EXIT_FAIL
    if getattr(args, "unverified", False):
        print(f"bridgelab: {kind}: the class hypothesis fails, so nothing is verified",
              file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
