"""Command-line front end: ``domina gamma|classify|verify-family|scan``.

Exit status: 0 clean, 1 usage or parse error, 2 a failed check or theorem
violation, 3 a counterexample to the SCC(2) conjecture.

JSON is the primary output format. CSV (``scan --format csv``) flattens a
report to one row per predicate with witness lists joined by ``;``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import IO, Sequence

from . import classifier, domination, family, harness
from .errors import DominaError, FamilyStructureError, MalformedGraph6
from .graph6 import iter_graph6, to_graph6_str

EXIT_CLEAN = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_COUNTEREXAMPLE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _open_input(path: str | None) -> IO[str]:
    if path is None or path == "-":
        return sys.stdin
    return open(path, encoding="ascii", errors="strict")


def _read_graphs(path: str | None) -> list:
    stream = _open_input(path)
    try:
        return [(line, g) for line, g in iter_graph6(stream)]
    finally:
        if stream is not sys.stdin:
            stream.close()


def _emit(rows: list[dict], fmt: str, text_line, out: IO[str]) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        for row in rows:
            out.write(text_line(row) + "\n")


def gamma_rows(graphs, variant: str) -> list[dict]:
    rows = []
    for _, g in graphs:
        row = {"graph6": to_graph6_str(g), "n": g.n}
        try:
            cert = domination.solve(g, variant)
            row.update(value=cert.value, witness=cert.witness.to_list())
        except DominaError:
            row.update(value="undefined", witness=None)
        rows.append(row)
    return rows


def classify_rows(graphs, mode: str) -> list[dict]:
    rows = []
    for _, g in graphs:
        row = {"graph6": to_graph6_str(g), "n": g.n}
        try:
            if mode == "fast":
                row.update(classifier.classify_fast(g).to_dict())
            else:
                rec = classifier.nordhaus_gaddum_check(g)
                types = classifier.types_from_gammas(rec.gamma_g, rec.gamma_gbar, g.n)
                row.update(type_i=types.type_i, type_ii=types.type_ii,
                           gamma_g=rec.gamma_g, gamma_gbar=rec.gamma_gbar)
        except DominaError as exc:
            row.update(error=type(exc).__name__)
        rows.append(row)
    return rows


def _gamma_text(row: dict) -> str:
    if row["value"] == "undefined":
        return f"{row['graph6']}\t{row['n']}\tundefined"
    witness = ",".join(map(str, row["witness"])) or "-"
    return f"{row['graph6']}\t{row['n']}\t{row['value']}\t{witness}"


def _classify_text(row: dict) -> str:
    head = f"{row['graph6']}\t{row['n']}"
    if "error" in row:
        return f"{head}\t{row['error']}"
    if "verdict" in row:
        return f"{head}\t{row['verdict']}\t{row['reason']}"
    flag = {True: "true", False: "false"}
    return (f"{head}\ttype_i={flag[row['type_i']]}\ttype_ii={flag[row['type_ii']]}"
            f"\tgamma_g={row['gamma_g']}\tgamma_gbar={row['gamma_gbar']}")


def verify_family(data: dict, condition_c: bool, build: bool, gamma_check: bool) -> dict:
    """Structured verdict for a decomposition document; ``ok`` is the conjunction."""
    verdict: dict = {}
    try:
        d = family.FamilyDecomposition.from_dict(data)
        family.validate_decomposition(d)
    except FamilyStructureError as exc:
        verdict["structure"] = {"ok": False, "error": type(exc).__name__, "message": str(exc)}
        verdict["ok"] = False
        return verdict
    verdict["structure"] = {"ok": True}
    if condition_c:
        result = family.check_condition_c(d)
        entry: dict = {"ok": result.ok}
        if result.witness is not None:
            index_set, s = result.witness
            entry["witness"] = {"index_set": list(index_set), "s": s.to_list()}
        verdict["condition_c"] = entry
    if build or gamma_check:
        g, _ = family.build_family_graph(d)
        if build:
            verdict["build"] = {"ok": True, "graph6": to_graph6_str(g), "n": g.n}
        if gamma_check:
            value = domination.gamma(g).value if g.n else 0
            verdict["gamma_check"] = {
                "ok": value == d.k == classifier.isqrt_floor(g.n),
                "gamma": value,
                "k": d.k,
                "isqrt_floor_n": classifier.isqrt_floor(g.n),
            }
    verdict["ok"] = all(v["ok"] for k, v in verdict.items() if isinstance(v, dict))
    return verdict


def exit_status(report: harness.ScanReport) -> int:
    if report.theorem_violation:
        return EXIT_VIOLATION
    if report.conjecture_violation:
        return EXIT_COUNTEREXAMPLE
    return EXIT_CLEAN


def _predicate_list(text: str | None):
    if text is None:
        return None
    try:
        return [harness.PredicateId(p.strip()) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"unknown predicate: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="domina", description=__doc__.splitlines()[0],
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gamma", help="domination numbers of graph6 graphs")
    p.add_argument("input", nargs="?", help="graph6 file (default stdin)")
    p.add_argument("--variant", choices=["plain", "total", "connected"], default="plain")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("classify", help="domination type of graph6 graphs")
    p.add_argument("input", nargs="?", help="graph6 file (default stdin)")
    p.add_argument("--mode", choices=["fast", "exact"], default="fast")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify-family", help="validate a family decomposition JSON document")
    p.add_argument("input", help="decomposition JSON file")
    p.add_argument("--condition-c", action="store_true")
    p.add_argument("--build", action="store_true")
    p.add_argument("--gamma-check", action="store_true")

    p = sub.add_parser(
        "scan", help="theorem and conjecture sweeps",
        description="JSON is the default report format; CSV flattens witness lists with ';'.",
    )
    modes = p.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    ex = modes.add_parser("exhaustive")
    ex.add_argument("n", type=int)
    sm = modes.add_parser("sampled")
    sm.add_argument("n", type=int)
    sm.add_argument("p", type=float)
    sm.add_argument("trials", type=int)
    sm.add_argument("seed", type=int)
    cj = modes.add_parser("conjecture")
    cj.add_argument("input", help="graph6 file ('-' for stdin)")
    for q in (ex, sm, cj):
        q.add_argument("--predicates", help="comma-separated predicate ids (default all)")
        q.add_argument("--out", help="write the report here instead of stdout")
        q.add_argument("--format", choices=["json", "csv"], default="json")
        q.add_argument("--timing", action="store_true", help="include wall_ms in JSON output")
        q.add_argument("--max-witnesses", type=int, default=harness.DEFAULT_MAX_WITNESSES)
    return parser


def _run_scan(args) -> int:
    predicates = _predicate_list(args.predicates)
    if args.mode == "exhaustive":
        report = harness.scan_exhaustive(args.n, predicates, max_witnesses=args.max_witnesses)
    elif args.mode == "sampled":
        report = harness.scan_sampled(args.n, args.p, args.trials, args.seed, predicates,
                                      max_witnesses=args.max_witnesses)
    else:
        if predicates is not None and predicates != [harness.PredicateId.SCC2_CONJECTURE]:
            raise UsageError("conjecture scans only run SCC2_CONJECTURE")
        stream = _open_input(args.input)
        try:
            report = harness.conjecture_scan(stream, source=args.input, max_witnesses=args.max_witnesses)
        finally:
            if stream is not sys.stdin:
                stream.close()
    text = report.to_csv() if args.format == "csv" else report.to_json(timing=args.timing)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return exit_status(report)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "gamma":
            rows = gamma_rows(_read_graphs(args.input), args.variant)
            _emit(rows, args.format, _gamma_text, sys.stdout)
            return EXIT_CLEAN
        if args.command == "classify":
            rows = classify_rows(_read_graphs(args.input), args.mode)
            _emit(rows, args.format, _classify_text, sys.stdout)
            return EXIT_CLEAN
        if args.command == "verify-family":
            data = json.loads(Path(args.input).read_text(encoding="utf-8"))
            verdict = verify_family(data, args.condition_c, args.build, args.gamma_check)
            sys.stdout.write(json.dumps(verdict, indent=2, sort_keys=True) + "\n")
            return EXIT_CLEAN if verdict["ok"] else EXIT_VIOLATION
        return _run_scan(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return EXIT_CLEAN if exc.code in (0, None) else EXIT_USAGE
    except (MalformedGraph6, DominaError, OSError, ValueError, KeyError) as exc:
        print(f"domina: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
