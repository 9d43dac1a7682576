"""fuscond command line: validate inputs, run the condensation analysis,
verify the subring correspondence, and materialize built-in examples.

Exit codes: 0 all checks pass, 1 a check failed, 2 unusable input,
3 numerical degeneracy.
"""
from __future__ import annotations

import argparse
import os
import sys

import mpmath as mp

from . import families
from .condense import (CondensationBundle, check_bundle, codegree_check,
                       indicator, schur_weyl)
from .errors import (CapabilityError, NumericalDegeneracyError, SchemaError,
                     TheoremViolationError)
from .galois import hasse_dot, markdown_table, verify_correspondence
from .modular import ModularData
from .modular import validate as validate_modular
from .ring import BasedRing
from .ring import validate as validate_ring
from .serialize import read_path, write_path
from .wedderburn import SPLIT_SEED


def _seed() -> int:
    raw = os.environ.get("FUSCOND_SEED")
    if raw is None:
        return SPLIT_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise SchemaError(f"FUSCOND_SEED must be an integer, got {raw!r}")


def _fmt(z) -> str:
    z = complex(z)
    re = 0.0 if abs(z.real) < 1e-12 else z.real
    if abs(z.imag) < 1e-12:
        return f"{re:.10g}"
    return f"{re:.10g}{z.imag:+.10g}i"


def _print_problems(problems) -> None:
    for p in problems:
        print(f"- FAIL: {p}")
    if not problems:
        print("- all checks passed")


def cmd_validate(args) -> int:
    value = read_path(args.input)
    if isinstance(value, BasedRing):
        kind, problems = "ring.v1", validate_ring(value).problems
    elif isinstance(value, ModularData):
        kind, problems = "mtc.v1", validate_modular(value, tol=args.tol).problems
    else:
        kind, problems = "bundle.v1", check_bundle(value, tol=args.tol).problems
    print(f"## validate {args.input} ({kind})")
    _print_problems(problems)
    return 1 if problems else 0


def _load_bundle(path) -> CondensationBundle:
    value = read_path(path)
    if not isinstance(value, CondensationBundle):
        raise SchemaError(f"{path} does not hold a bundle.v1 object")
    return value


def _print_schur_weyl(b, swr) -> None:
    print(f"- kernel_dim: {swr.kernel_dim}")
    lines = []
    for bi, bp in enumerate(swr.blocks):
        if not swr.in_ideal[bi]:
            continue
        x = swr.matched[bi]
        tag = b.ambient.labels[x] if x is not None else "(unmatched)"
        lines.append(f"m={bp.m} -> {tag}")
    print(f"- blocks: {', '.join(lines)}")
    for note in swr.notes:
        print(f"- note: {note}")


def cmd_analyze(args) -> int:
    b = _load_bundle(args.input)
    print(f"## analyze {args.input}")
    print(f"- ambient rank {b.ambient.rank}, module rank "
          f"{b.module_ring.rank}, |local| {len(b.local)}")
    rep = check_bundle(b, tol=args.tol)
    _print_problems(rep.problems)
    if rep.problems:
        return 1
    swr = schur_weyl(b, tol=args.tol, seed=_seed())
    _print_schur_weyl(b, swr)
    cg = codegree_check(swr, tol=args.tol)
    for name, scalar in cg.entries:
        print(f"- codegree {name}: {_fmt(scalar)}")
    print(f"- codegree residual: {cg.residual:.2e}")
    if not cg.ok:
        _print_problems(cg.report.problems)
        return 1
    return 0


def cmd_galois(args) -> int:
    b = _load_bundle(args.input)
    swr = schur_weyl(b, tol=args.tol, seed=_seed())
    rep = verify_correspondence(b, tol=args.tol, swr=swr)
    print(f"## galois {args.input}")
    print(markdown_table(rep), end="")
    if rep.injective:
        print("- subring -> multiplicity map is injective here")
    else:
        groups = "; ".join(str(list(c)) for c in rep.collisions)
        print(f"- multiplicity collisions (distinct subrings, equal "
              f"invariants): {groups}")
    print(f"- max dimension-formula residual: {rep.max_residual:.2e}")
    _print_problems(rep.problems)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(hasse_dot(rep))
        print(f"- wrote Hasse diagram to {args.dot}")
    return 1 if rep.problems else 0


def cmd_example(args) -> int:
    mtc = None
    if args.mtc is not None:
        value = read_path(args.mtc)
        if not isinstance(value, ModularData):
            raise SchemaError(f"{args.mtc} does not hold an mtc.v1 object")
        mtc = value
    b = families.build(args.name, n=args.n, mtc=mtc)
    print(f"## example {args.name}" + (f" n={args.n}" if args.n else ""))
    print(f"- ambient rank {b.ambient.rank}, module rank "
          f"{b.module_ring.rank}, |local| {len(b.local)}")
    if args.emit:
        write_path(b, args.emit)
        print(f"- wrote {args.emit}")
    return 0


def cmd_indicators(args) -> int:
    b = _load_bundle(args.input)
    swr = schur_weyl(b, tol=args.tol, seed=_seed())
    try:
        xi = b.ambient.labels.index(args.x)
    except ValueError:
        raise SchemaError(f"no ambient label {args.x!r}")
    print(f"## indicators {args.input} x={args.x}")
    rank = b.module_ring.rank
    for y in range(rank):
        vec = [0] * rank
        vec[y] = 1
        val = indicator(swr, xi, vec)
        print(f"- {b.module_ring.labels[y]}: {_fmt(val)}")
    return 0


def main(argv=None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9,
                        help="residual tolerance (default 1e-9)")
    common.add_argument("--digits", type=int, default=64,
                        help="working precision in decimal digits")

    parser = argparse.ArgumentParser(
        prog="fuscond",
        description="fusion rings, modular data, and condensable algebras")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="check a ring/mtc/bundle file against its axioms")
    p.add_argument("input")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("analyze", parents=[common],
                       help="run the condensation analysis on a bundle file")
    p.add_argument("input")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("galois", parents=[common],
                       help="verify the subring correspondence")
    p.add_argument("input")
    p.add_argument("--dot", help="write the lattice Hasse diagram here")
    p.set_defaults(fn=cmd_galois)

    p = sub.add_parser("example", parents=[common],
                       help="materialize a built-in bundle")
    p.add_argument("name", choices=sorted(families.FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--mtc", help="mtc.v1 file for coset-diagonal")
    p.add_argument("--emit", help="write the bundle.v1 file here")
    p.set_defaults(fn=cmd_example)

    p = sub.add_parser("indicators", parents=[common],
                       help="print the character row of one ambient sector")
    p.add_argument("input")
    p.add_argument("--x", required=True, help="ambient label with n_x > 0")
    p.set_defaults(fn=cmd_indicators)

    args = parser.parse_args(argv)
    mp.mp.dps = args.digits
    try:
        return args.fn(args)
    except SchemaError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except CapabilityError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except TheoremViolationError as err:
        print(f"check failed: {err}", file=sys.stderr)
        return 1
    except NumericalDegeneracyError as err:
        print(f"numerical degeneracy: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
