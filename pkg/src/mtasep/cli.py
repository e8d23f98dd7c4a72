"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or resource error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .chain import RNG_ALGORITHM, ChainSpec, Convention, simulate, stationary_exact, stationary_mlq, tv_distance
from .errors import DEFAULT_CAP, MtasepError, default_budget
from .formulas import inhom_sorted_probability, parse_params
from .mlq import count_all, mlqs_representing, partition_function, render_ascii
from .verify import SUITES, run_suite
from .words import (
    canonical_rotation,
    format_type,
    format_word,
    parse_type,
    parse_word,
    sorted_word,
    type_of,
    words_of_type,
)

REPORT_SCHEMA = "mtasep-report/1"


class Report:
    def __init__(self, command: str, argv: list[str], inputs: dict):
        self.data = {"schema": REPORT_SCHEMA, "command": command, "argv": argv, "inputs": inputs, "outputs": {}}
        self.text: list[str] = []
        self.csv_rows: list[list] = []
        self.exit_code = 0

    def emit(self, fmt: str, timing: float | None, out=sys.stdout):
        if timing is not None:
            self.data["seconds"] = round(timing, 3)
        if fmt == "json":
            out.write(json.dumps(self.data, indent=2) + "\n")
        elif fmt == "csv" and self.csv_rows:
            w = csv.writer(out, lineterminator="\n")
            w.writerows(self.csv_rows)
        else:
            out.write("\n".join(self.text) + "\n")


def _frac(p: Fraction) -> str:
    return f"{p.numerator}/{p.denominator}"


def cmd_brackets(args, rep: Report):
    if args.word:
        u = parse_word(args.word)
        m = type_of(u)
        counts = count_all(m, budget=args.budget)
        value = counts.get(u, 0)
        rep.data["outputs"] = {"word": format_word(u), "type": format_type(m), "bracket": value, "Z": partition_function(m)}
        rep.text.append(f"[{format_word(u)}] = {value}")
        rep.csv_rows = [["word", "bracket"], [format_word(u), value]]
        return
    m = parse_type(args.type)
    counts = count_all(m, budget=args.budget)
    z = partition_function(m)
    classes: dict[str, int] = {}
    brackets = {}
    rep.csv_rows.append(["word", "bracket", "cyclic_class"])
    for w in words_of_type(m):
        cls = format_word(canonical_rotation(w))
        brackets[format_word(w)] = counts.get(w, 0)
        classes[cls] = counts.get(w, 0)
        rep.csv_rows.append([format_word(w), counts.get(w, 0), cls])
    rep.data["outputs"] = {"type": format_type(m), "Z": z, "brackets": brackets, "cyclic_classes": classes}
    rep.text.append(f"type {format_type(m)}: Z = {z}, {len(classes)} cyclic classes")
    for cls, v in classes.items():
        rep.text.append(f"[{cls}] = {v}")


def cmd_stationary(args, rep: Report):
    m = parse_type(args.type)
    tables = {}
    if args.method in ("exact", "both"):
        tables["exact"] = stationary_exact(m, cap=args.cap)
    if args.method in ("mlq", "both"):
        tables["mlq"] = stationary_mlq(m, budget=args.budget)
    main = tables.get("exact") or tables["mlq"]
    out = main.to_dict()
    out["method"] = args.method
    if len(tables) == 2:
        agree = tables["exact"].entries == tables["mlq"].entries
        out["methods_agree"] = agree
        if not agree:
            rep.exit_code = 1
    rep.data["outputs"] = out
    rep.csv_rows = list(csv.reader(io.StringIO(main.to_csv())))
    rep.text.append(f"type {format_type(m)}, method {args.method}, Z = {main.Z}")
    for w, p in out["entries"].items():
        rep.text.append(f"pi({w}) = {p}")
    if "methods_agree" in out:
        rep.text.append("exact and MLQ tables agree" if out["methods_agree"] else "exact and MLQ tables DISAGREE")


def cmd_verify(args, rep: Report):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    rep.csv_rows.append(["suite", "passed", "checks", "counterexample"])
    for name in names:
        res = run_suite(name, args.nmax, cap=args.cap)
        results.append(res)
        rep.text.append(res.line())
        rep.csv_rows.append([name, res.passed, res.checks, res.counterexample or ""])
        if not res.passed:
            rep.exit_code = 1
            break
    rep.data["outputs"] = {"checks": [r.to_dict(timing=args.timing) for r in results], "all_passed": rep.exit_code == 0}


def cmd_simulate(args, rep: Report):
    m = parse_type(args.type)
    rates = parse_params(args.rates) if args.rates else None
    spec = ChainSpec(m, rates, Convention(args.convention))
    start = parse_word(args.start) if args.start else sorted_word(m)
    counts = simulate(spec, start, args.steps, args.seed)
    total = args.steps + 1
    out = {
        "type": format_type(m),
        "start": format_word(start),
        "steps": args.steps,
        "seed": args.seed,
        "rng": RNG_ALGORITHM,
        "counts": {format_word(w): c for w, c in counts.items()},
    }
    if rates is not None:
        out["rates"] = [str(x) for x in rates]
        out["convention"] = spec.convention.value
    rep.csv_rows = [["word", "count"]] + [[format_word(w), c] for w, c in counts.items()]
    rep.text.append(f"type {format_type(m)}, {args.steps} steps from {format_word(start)}, seed {args.seed}")
    for w, c in counts.items():
        rep.text.append(f"{format_word(w)}  {c}  {c / total:.5f}")
    try:
        exact = stationary_exact(spec, cap=args.cap)
    except MtasepError:
        exact = None
    if exact is not None:
        tv = tv_distance(counts, exact)
        out["tv_distance"] = _frac(tv)
        rep.text.append(f"total variation to exact stationary law: {float(tv):.5f}")
    if rates is not None:
        w0 = sorted_word(m)
        p = inhom_sorted_probability(m, rates)
        freq = Fraction(counts.get(w0, 0), total)
        out["sorted_word"] = {"word": format_word(w0), "closed_form": _frac(p), "empirical": _frac(freq),
                              "abs_difference": _frac(abs(freq - p))}
        rep.text.append(f"sorted word {format_word(w0)}: closed form {float(p):.5f}, empirical {float(freq):.5f}")
    rep.data["outputs"] = out


def cmd_render(args, rep: Report):
    u = parse_word(args.word)
    found = mlqs_representing(u, budget=args.budget)
    if args.index is not None:
        if not 0 <= args.index < len(found):
            raise ValueError(f"index {args.index} out of range, [{format_word(u)}] = {len(found)}")
        chosen = [found[args.index]]
    else:
        chosen = found
    rep.data["outputs"] = {"word": format_word(u), "bracket": len(found), "mlqs": [q.to_dict() for q in chosen]}
    if args.style == "json":
        rep.text.append(json.dumps(rep.data["outputs"]))
        return
    rep.text.append(f"[{format_word(u)}] = {len(found)}")
    for q in chosen:
        rep.text.append("")
        rep.text.append(render_ascii(q))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mtasep", description="Multispecies TASEP and multi-line queues.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--format", choices=["ascii", "json", "csv"], default="ascii")
    p.add_argument("--budget", type=int, default=None, help="max MLQs to enumerate (env MTASEP_BUDGET)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max chain states for exact solves")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("brackets", help="count MLQs per bottom word")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--type")
    g.add_argument("--word")
    s.set_defaults(func=cmd_brackets)

    s = sub.add_parser("stationary", help="stationary distribution of the chain")
    s.add_argument("--type", required=True)
    s.add_argument("--method", choices=["exact", "mlq", "both"], default="both")
    s.set_defaults(func=cmd_stationary)

    s = sub.add_parser("verify", help="exhaustive identity checks")
    s.add_argument("--suite", choices=["all", *SUITES], default="all")
    s.add_argument("--nmax", type=int, default=5)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("simulate", help="seeded Monte Carlo run")
    s.add_argument("--type", required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--start")
    s.add_argument("--rates", help="x_1,...,x_{r-1}, e.g. 1,2 or 1/2,3")
    s.add_argument("--convention", choices=[c.value for c in Convention], default="jumper")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("render", help="draw the MLQs representing a word")
    s.add_argument("--word", required=True)
    s.add_argument("--index", type=int)
    s.add_argument("--style", choices=["ascii", "json"], default="ascii")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.budget is None:
        args.budget = default_budget()
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "command", "format", "timing")}
    rep = Report(args.command, argv, inputs)
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
    except (MtasepError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    rep.emit(args.format, time.perf_counter() - t0 if args.timing else None, out)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
