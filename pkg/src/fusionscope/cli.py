"""Command line interface: ``fusionscope <command> ...``.

Exit codes: 0 success, 1 a violation or negative answer, 2 bad input or
usage, 3 a search refused by its resource limit.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from . import catalog, char_solver, group_recovery, subrings, su2_engine
from .document import RingDocument, dump, load, serialize
from .errors import DerivationError, FusionScopeError, InputError, MalformedRingError, ResourceLimitError
from .fusion_core import validate
from .report import analyze

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _fmt(z: complex) -> str:
    re, im = round(z.real, 6) + 0.0, round(z.imag, 6) + 0.0
    if im == 0:
        return f"{re:g}"
    if re == 0:
        return f"{im:g}i"
    return f"{re:g}{im:+g}i"


def cmd_validate(args) -> int:
    ring = load(args.file).to_ring()
    rep = validate(ring)
    if rep.ok:
        note = f" (checked complete products only, bound {ring.complete_below})" if ring.is_truncated else ""
        print(f"{ring.name}: valid{note}")
        return EXIT_OK
    print(f"{ring.name}: {len(rep.violations)} violation(s)")
    for v in rep.violations:
        print(f"  {v.axiom} at {list(v.witness)}: {v.detail}")
    return EXIT_NEGATIVE


def cmd_analyze(args) -> int:
    rep = analyze(load(args.file), seed=args.seed, tol=args.tol)
    sys.stdout.write(rep.to_json() if args.json else rep.to_text())
    return EXIT_OK if rep.valid else EXIT_NEGATIVE


def cmd_chain_group(args) -> int:
    ring = load(args.file).to_ring()
    res = group_recovery.chain_group(ring)
    print(f"chain group of {ring.name}: {res.group} (dual of the center)")
    for i, cls in enumerate(res.classes()):
        print(f"  class {i}: {', '.join(ring.labels[p] for p in cls)}")
    return EXIT_OK


def cmd_subrings(args) -> int:
    ring = load(args.file).to_ring()
    lat = subrings.enumerate_subrings(ring, max_rank=args.max_rank)
    print(f"{ring.name}: {len(lat)} representation subrings (= closed normal subgroups)")
    for i, s in enumerate(lat.subrings):
        print(f"  [{i}] {{{', '.join(s.labels())}}}")
    print("  covers: " + ", ".join(f"{i}<{j}" for i, j in lat.covers()))
    return EXIT_OK


def cmd_char_table(args) -> int:
    ring = load(args.file).to_ring()
    sols = char_solver.solve_character_system(ring, tol=args.tol, seed=args.seed)
    if ring.is_truncated:
        print(f"warning: {ring.name} is truncated; equations with clipped products are ignored")
    width = max(len(lab) for lab in ring.labels)
    print(f"{len(sols)} solutions (columns):")
    for p, lab in enumerate(ring.labels):
        print(f"  {lab:>{width}} | " + "  ".join(f"{_fmt(s.values[p]):>12}" for s in sols))
    print(f"  max residual {max((s.residual for s in sols), default=0.0):.2e}")
    if args.integer_solutions:
        ints = char_solver.integer_positive_solutions(ring, args.bound)
        print(f"positive integer solutions with entries <= {args.bound}: {len(ints)}")
        for sol in ints:
            print("  (" + ", ".join(map(str, sol)) + ")")
    return EXIT_OK


def cmd_isomorphic(args) -> int:
    a, b = load(args.file_a).to_ring(), load(args.file_b).to_ring()
    iso = subrings.find_order_isomorphism(a, b)
    if iso is None:
        print(f"{a.name} and {b.name}: no order isomorphism")
        return EXIT_NEGATIVE
    print(f"{a.name} and {b.name} have isomorphic fusion rules:")
    for src, dst in iso.mapping().items():
        print(f"  {src} -> {dst}")
    return EXIT_OK


def cmd_su2(args) -> int:
    try:
        jmax = Fraction(args.jmax)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--jmax must be a half-integer, got {args.jmax!r}") from None
    if (2 * jmax).denominator != 1 or jmax < Fraction(1, 2):
        raise InputError(f"--jmax must be a half-integer >= 1/2, got {args.jmax!r}")
    twice = int(2 * jmax)
    trace: list = []
    su2_engine.derive_half_tensor(twice, trace=trace)
    label = su2_engine.spin_label
    print(f"D_1/2 x D_k derived from dimensions and self-duality, 2k = 0..{twice}:")
    for step in trace:
        rhs = " + ".join(f"D_{label(t)}" for t in step.result)
        print(f"  D_1/2 x D_{label(step.twice_k)} = {rhs}   ({len(step.candidates)} candidate)")
    if args.emit_ring:
        ring = su2_engine.export_truncated_ring(twice)
        dump(RingDocument.from_ring(ring), args.emit_ring)
        print(f"wrote {ring.name} to {args.emit_ring}")
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.action == "list":
        for name in catalog.catalog_names():
            print(name)
        return EXIT_OK
    if not args.name:
        raise InputError("examples emit needs a catalog name")
    try:
        doc = catalog.get(args.name)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    data = serialize(doc)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fusionscope",
                                     description="Recover group data from fusion rules of compact groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_opts(p):
        p.add_argument("--seed", type=int, default=None,
                       help="solver seed (default: $FUSIONSCOPE_SEED or a fixed constant)")
        p.add_argument("--tol", type=float, default=char_solver.DEFAULT_TOL, help="residual tolerance")

    p = sub.add_parser("validate", help="check the ring axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="full analysis report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    solver_opts(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("chain-group", help="chain group (dual of the center)")
    p.add_argument("file")
    p.set_defaults(func=cmd_chain_group)

    p = sub.add_parser("subrings", help="lattice of representation subrings")
    p.add_argument("file")
    p.add_argument("--max-rank", type=int, default=subrings.DEFAULT_MAX_RANK)
    p.set_defaults(func=cmd_subrings)

    p = sub.add_parser("char-table", help="solve the character equations")
    p.add_argument("file")
    p.add_argument("--integer-solutions", action="store_true", help="also list positive integer solutions")
    p.add_argument("--bound", type=int, default=10, help="largest entry for --integer-solutions")
    solver_opts(p)
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("isomorphic", help="search an order isomorphism between two rings")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("su2", help="SU(2) Clebsch-Gordan derivation")
    su2_sub = p.add_subparsers(dest="su2_command", required=True)
    d = su2_sub.add_parser("derive", help="derive D_1/2 x D_k up to jmax")
    d.add_argument("--jmax", required=True, help="largest spin, e.g. 5 or 7/2")
    d.add_argument("--emit-ring", metavar="FILE", help="also write the truncated ring document")
    d.set_defaults(func=cmd_su2)

    p = sub.add_parser("examples", help="list or print catalog rings")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, MalformedRingError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DerivationError as exc:
        print(f"derivation failed: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except FusionScopeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


def run_cli(argv: Sequence[str] | None = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
