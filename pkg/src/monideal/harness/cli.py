"""Command-line interface: ``monideal <command> --ideal "x1*x2, x2^2" ...``.

Exit codes: 0 success, 1 failed assertion (examples, fuzz), 2 usage or
domain error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

from .. import core, decomp, io, polymatroid, resolution
from . import examples, fuzz, scan

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ideal(args, name: str = "ideal") -> core.MonomialIdeal:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return io.load_ideal_arg(value, args.nvars)


def _prime(args, ideal: core.MonomialIdeal) -> core.MonomialPrime:
    if not args.prime:
        raise UsageError("--prime is required (comma-separated variable indices)")
    try:
        idx = [int(v) for v in args.prime.replace(" ", "").split(",") if v]
    except ValueError as exc:
        raise UsageError(f"bad --prime {args.prime!r}") from exc
    return core.MonomialPrime(ideal.nvars, frozenset(idx))


def _emit(args, text: str, doc: Any) -> None:
    if args.format == "structured":
        print(json.dumps(doc, indent=2))
    else:
        print(text)
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2) + "\n")


def _ideal_doc(ideal: core.MonomialIdeal) -> dict:
    return io.ideal_to_dict(ideal)


def cmd_reg(args) -> int:
    ideal = _ideal(args)
    reg = resolution.regularity(ideal, args.char, args.jobs)
    _emit(args, f"reg = {reg}", {"ideal": _ideal_doc(ideal), "field_char": args.char, "regularity": reg})
    return EXIT_OK


def cmd_betti(args) -> int:
    ideal = _ideal(args)
    table = resolution.betti(ideal, args.char, args.jobs)
    _emit(args, table.format() + f"\nreg = {table.regularity()}", table.to_dict())
    return EXIT_OK


def cmd_linres(args) -> int:
    ideal = _ideal(args)
    linear = resolution.has_linear_resolution(ideal, args.char, args.jobs)
    text = f"linear resolution: {linear}"
    doc = {"ideal": _ideal_doc(ideal), "linear": linear}
    if args.quotients:
        result = resolution.linear_quotients(ideal, args.cap_gens)
        text += f"\nlinear quotients: {result.status.value}"
        doc["linear_quotients"] = result.status.value
        if result.order:
            text += "\n  order: " + ", ".join(core.format_monomial(u) for u in result.order)
            doc["order"] = [list(u) for u in result.order]
    _emit(args, text, doc)
    return EXIT_OK


def cmd_polymatroidal(args) -> int:
    ideal = _ideal(args)
    verdict = polymatroid.is_polymatroidal(ideal)
    text = f"polymatroidal: {verdict.polymatroidal}"
    witness = None
    if verdict.witness:
        u, v, i = verdict.witness
        witness = {"u": list(u), "v": list(v), "i": i}
        text += (f"\n  exchange fails for u={core.format_monomial(u)}, "
                 f"v={core.format_monomial(v)}, i={i}")
    _emit(args, text, {"ideal": _ideal_doc(ideal), "polymatroidal": verdict.polymatroidal,
                       "witness": witness})
    return EXIT_OK


def cmd_matroidal(args) -> int:
    ideal = _ideal(args)
    verdict = polymatroid.is_matroidal(ideal)
    _emit(args, f"matroidal: {verdict}", {"ideal": _ideal_doc(ideal), "matroidal": verdict})
    return EXIT_OK


def cmd_localize(args) -> int:
    ideal = _ideal(args)
    prime = _prime(args, ideal)
    loc = core.localize(ideal, prime)
    _emit(args, core.format_ideal(loc), _ideal_doc(loc))
    return EXIT_OK


def cmd_saturate(args) -> int:
    ideal = _ideal(args)
    if args.var is not None:
        result = core.saturate_var(ideal, args.var)
    else:
        result = core.saturate_graded(ideal)
    _emit(args, core.format_ideal(result), _ideal_doc(result))
    return EXIT_OK


def cmd_decompose(args) -> int:
    ideal = _ideal(args)
    comps = decomp.irreducible_decomposition(ideal)
    doc = [[[i, e] for i, e in c.exps] for c in comps]
    _emit(args, " ∩ ".join(str(c) for c in comps), {"components": doc})
    return EXIT_OK


def cmd_ass(args) -> int:
    ideal = _ideal(args)
    primes = decomp.ass_primes(ideal)
    minimal = set(decomp.min_primes(ideal))
    lines = [f"{p}{'' if p in minimal else '  (embedded)'}" for p in primes]
    _emit(args, "\n".join(lines), {"ass": [sorted(p.vars) for p in primes],
                                   "min": [sorted(p.vars) for p in sorted(minimal, key=core.MonomialPrime.sort_key)]})
    return EXIT_OK


def cmd_height(args) -> int:
    ideal = _ideal(args)
    h = decomp.height(ideal)
    doc = {"height": h, "unmixed": decomp.is_unmixed(ideal), "embedded": decomp.has_embedded(ideal)}
    _emit(args, f"height = {h}, unmixed = {doc['unmixed']}, embedded primes = {doc['embedded']}", doc)
    return EXIT_OK


def cmd_scan(args) -> int:
    ideal = _ideal(args)
    report = scan.scan_localizations(ideal, args.char)
    lines = [f"{'prime':<24} {'deg':>5} {'reg':>5}  linear  localization"]
    for row in report.rows:
        deg = row.degree if row.degree is not None else "mixed"
        reg = row.regularity if row.regularity is not None else "-"
        lines.append(f"{str(row.prime):<24} {deg!s:>5} {reg!s:>5}  {str(row.linear):<6}  {row.ideal}")
    lines.append(f"all_linear = {report.all_linear}, polymatroidal = {report.polymatroidal}, "
                 f"consistent = {report.consistent}")
    doc = report.to_dict()
    theorems = scan.check_theorems(ideal, args.char, report)
    for check in theorems.checks:
        lines.append(f"  [{check.flag}] {check.hypothesis}: all_linear <=> {check.conclusion}"
                     f" {'holds' if check.holds else 'VIOLATED'}")
    doc["theorems"] = {c.flag: c.holds for c in theorems.checks}
    _emit(args, "\n".join(lines), doc)
    return EXIT_OK


def cmd_powers(args) -> int:
    ideal = _ideal(args)
    rows = scan.powers_linearity_profile(ideal, args.kmax, args.char)
    lines = [f"{'k':>3} {'deg':>5} {'reg':>5}  linear"]
    lines += [f"{r.k:>3} {r.degree!s:>5} {r.regularity:>5}  {r.linear}" for r in rows]
    doc = [{"k": r.k, "degree": r.degree, "regularity": r.regularity, "linear": r.linear} for r in rows]
    _emit(args, "\n".join(lines), {"field_char": args.char, "powers": doc})
    return EXIT_OK


def cmd_product_check(args) -> int:
    a = _ideal(args)
    b = _ideal(args, "other")
    ab, pa, pb = scan.product_polymatroidality(a, b)
    _emit(args, f"IJ polymatroidal: {ab}\nI polymatroidal: {pa}\nJ polymatroidal: {pb}",
          {"IJ": ab, "I": pa, "J": pb})
    return EXIT_OK


def cmd_veronese(args) -> int:
    if args.ideal is not None:
        ideal = _ideal(args)
        found = polymatroid.is_veronese_type(ideal)
        if found is None:
            _emit(args, "not of Veronese type", {"veronese": None})
        else:
            d, bounds = found
            _emit(args, f"Veronese type: d = {d}, bounds = {list(bounds)}",
                  {"veronese": {"degree": d, "bounds": list(bounds)}})
        return EXIT_OK
    if args.degree is None or args.bounds is None:
        raise UsageError("veronese needs --ideal, or --degree and --bounds")
    bounds = [int(b) for b in args.bounds.split(",")]
    nvars = args.nvars or len(bounds)
    ideal = polymatroid.veronese_type(nvars, args.degree, bounds)
    _emit(args, core.format_ideal(ideal), _ideal_doc(ideal))
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.action == "list":
        print("\n".join(examples.example_names()))
        return EXIT_OK
    if not args.name:
        raise UsageError("examples run needs a name or 'all'")
    names = examples.example_names() if args.name == "all" else [args.name]
    reports = []
    for name in names:
        try:
            reports.append(examples.run_example(name, args.char))
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from exc
    doc = [{"name": r.name, "passed": r.passed,
            "checks": [{"claim": c.claim, "expected": repr(c.expected),
                        "observed": repr(c.observed), "ok": c.ok} for c in r.checks]}
           for r in reports]
    _emit(args, "\n".join(r.format() for r in reports), doc)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_fuzz(args) -> int:
    degrees = tuple(int(d) for d in args.degrees.split(","))
    report = fuzz.fuzz(args.seed, args.samples, args.nvars or 4, degrees, args.max_gens,
                       args.squarefree, args.char)
    lines = [f"samples = {report.samples}, all_linear = {report.all_linear}, "
             f"polymatroidal = {report.polymatroidal}, covered by a proven case = {report.covered}"]
    for f in report.findings:
        lines.append(f"  finding [{f.kind}] seed={f.seed} {f.params}: {f.ideal}  ({f.detail})")
    if not report.findings:
        lines.append("  no findings")
    _emit(args, "\n".join(lines), report.to_dict())
    return EXIT_FAIL if report.theorem_violations else EXIT_OK


COMMANDS = {
    "reg": (cmd_reg, "Castelnuovo-Mumford regularity"),
    "betti": (cmd_betti, "graded Betti table"),
    "linres": (cmd_linres, "does I have a linear resolution"),
    "polymatroidal": (cmd_polymatroidal, "exchange-property check"),
    "matroidal": (cmd_matroidal, "squarefree and polymatroidal"),
    "localize": (cmd_localize, "monomial localization at --prime"),
    "saturate": (cmd_saturate, "I : x_i^inf with --var, else I : m^inf"),
    "decompose": (cmd_decompose, "irreducible decomposition"),
    "ass": (cmd_ass, "associated primes"),
    "height": (cmd_height, "height, unmixedness, embedded primes"),
    "scan": (cmd_scan, "linearity of every monomial localization"),
    "powers": (cmd_powers, "regularity of I^k for k <= --kmax"),
    "product-check": (cmd_product_check, "polymatroidality of IJ, I and J"),
    "veronese": (cmd_veronese, "build or recognize a Veronese-type ideal"),
    "examples": (cmd_examples, "run the worked examples"),
    "fuzz": (cmd_fuzz, "random search for conjecture counterexamples"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nvars", type=int, help="number of variables (default: inferred)")
    common.add_argument("--ideal", help="ideal as text, a text file, or a JSON document/file")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--char", type=int, default=resolution.DEFAULT_CHAR,
                        help="prime characteristic for rank computations")
    common.add_argument("--out", help="also write the structured report to this file")
    common.add_argument("--jobs", type=int, default=None, help="worker processes for Betti strands")
    common.add_argument("--cap-gens", type=int, default=resolution.LINEAR_QUOTIENTS_CAP,
                        help="generator cap for the linear-quotients search")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="monideal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        if name == "localize":
            cmd.add_argument("--prime", help="variable indices, e.g. 1,3,4")
        elif name == "saturate":
            cmd.add_argument("--var", type=int, help="saturate by this variable only")
        elif name == "powers":
            cmd.add_argument("--kmax", type=int, default=3)
        elif name == "product-check":
            cmd.add_argument("--other", help="the second ideal J")
        elif name == "veronese":
            cmd.add_argument("--degree", type=int)
            cmd.add_argument("--bounds", help="comma-separated exponent bounds")
        elif name == "examples":
            cmd.add_argument("action", choices=("run", "list"))
            cmd.add_argument("name", nargs="?", help="example name or 'all'")
        elif name == "fuzz":
            cmd.add_argument("--seed", type=int, default=0)
            cmd.add_argument("--samples", type=int, default=100)
            cmd.add_argument("--degrees", default="2,3")
            cmd.add_argument("--max-gens", type=int, default=8)
            cmd.add_argument("--squarefree", action="store_true")
    sub.choices["linres"].add_argument("--quotients", action="store_true",
                                       help="also search for a linear-quotients order")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = COMMANDS[args.command][0]
    try:
        return handler(args)
    except core.ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, core.MonomialIdealError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
