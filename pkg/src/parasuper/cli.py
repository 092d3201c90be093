"""Command-line front end: ``parasuper {build,verify,closure,export}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from pathlib import Path
from typing import Any, Sequence

from .errors import EmptyAlgebraError
from .export import dumps, structure_constants
from .gl import GlAlgebra, build_gl
from .osp import OspAlgebra
from .parastat import closure_dimension
from .report import DEFAULT_WITNESS_LIMIT
from .suites import DEFAULT_SEED, GL_SUITES, OSP_SUITES, run_gl_suite, run_osp_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
REPORT_FORMAT_ID = "parasuper.verification-report/1"

log = logging.getLogger("parasuper")


class UsageError(Exception):
    pass


def _dims(text: str) -> tuple[int, int, int, int]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected four comma-separated integers, got {text!r}") from None
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected m1,m2,n1,n2, got {text!r}")
    return parts  # type: ignore[return-value]


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m1", type=_nonneg, default=None, help="number of (0,0) parafermion sites")
    p.add_argument("--m2", type=_nonneg, default=None, help="number of (1,1) parafermion sites")
    p.add_argument("--n", type=_nonneg, default=None, help="number of paraboson sites")
    p.add_argument("--dims", type=_dims, default=None, metavar="M1,M2,N1,N2", help="select gl(m1,m2|n1,n2)")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parasuper", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct an algebra and print a summary")
    p.add_argument("kind", choices=("gl", "osp"))
    _add_params(p)
    _add_output(p)

    p = sub.add_parser("verify", help="run verification suites")
    _add_params(p)
    _add_output(p)
    p.add_argument("--suites", default="all", help="comma-separated suite names, or 'all'")
    p.add_argument("--witness-limit", type=_nonneg, default=DEFAULT_WITNESS_LIMIT)
    p.add_argument("--seed", type=_nonneg, default=DEFAULT_SEED)
    p.add_argument(
        "--mutate-embedding-sign",
        action="store_true",
        help="negative control: flip the sign inside the x_ij embedding before verifying",
    )

    p = sub.add_parser("closure", help="grow the span of the short root vectors to a fixpoint")
    _add_params(p)
    _add_output(p)

    p = sub.add_parser("export", help="write the structure-constant table as JSON")
    _add_params(p)
    p.add_argument("--out", type=Path, default=None)
    return parser


def _algebra(args: argparse.Namespace, kind: str | None = None, **osp_kwargs) -> GlAlgebra | OspAlgebra:
    osp_given = any(v is not None for v in (args.m1, args.m2, args.n))
    if kind is None:
        kind = "gl" if args.dims is not None else "osp"
    try:
        if kind == "gl":
            if args.dims is None or osp_given:
                raise UsageError("gl needs --dims m1,m2,n1,n2 (and no --m1/--m2/--n)")
            return build_gl(*args.dims)
        if args.dims is not None:
            raise UsageError("osp takes --m1/--m2/--n, not --dims")
        return OspAlgebra(args.m1 or 0, args.m2 or 0, args.n or 0, **osp_kwargs)
    except EmptyAlgebraError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.write_text(text, encoding="utf-8")


def _census(alg: GlAlgebra | OspAlgebra) -> dict[str, int]:
    if isinstance(alg, GlAlgebra):
        degrees = [b.degree for b in alg.basis]
    else:
        degrees = [alg.generator(i, j).degree for i, j in alg.canonical_basis().pairs]
    counts = Counter(str(d) for d in degrees)
    return {g: counts.get(g, 0) for g in ("(0,0)", "(1,1)", "(1,0)", "(0,1)")}


def cmd_build(args: argparse.Namespace) -> int:
    alg = _algebra(args, args.kind)
    if isinstance(alg, GlAlgebra):
        dim = len(alg.basis)
    else:
        dim = alg.dimension()
    summary = {
        "algebra": args.kind,
        "name": alg.name,
        "params": alg.params,
        "matrix_size": alg.scheme.total_dim,
        "dimension": dim,
        "basis_size": dim,
        "grading_census": _census(alg),
    }
    if isinstance(alg, GlAlgebra):
        summary["cartan_size"] = len(alg.cartan)
    if args.format == "json":
        _emit(json.dumps(summary, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [
            f"{alg.name}",
            f"  matrix size: {summary['matrix_size']}",
            f"  dimension:   {dim}",
            f"  basis size:  {dim}",
            "  grading census: " + ", ".join(f"{g}={c}" for g, c in summary["grading_census"].items()),
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _select_suites(spec: str, available: Sequence[str]) -> list[str]:
    names = [s.strip() for s in spec.split(",") if s.strip()]
    if not names:
        raise UsageError("select at least one suite")
    if names == ["all"]:
        return list(available)
    unknown = [s for s in names if s not in available]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; available: {', '.join(available)}")
    return names


def cmd_verify(args: argparse.Namespace) -> int:
    mutated = args.mutate_embedding_sign
    if mutated and args.dims is not None:
        raise UsageError("--mutate-embedding-sign applies to osp only")
    alg = _algebra(args, flip_sign=mutated) if mutated else _algebra(args)
    if isinstance(alg, GlAlgebra):
        names = _select_suites(args.suites, GL_SUITES)
        reports = [run_gl_suite(s, alg, seed=args.seed, witness_limit=args.witness_limit) for s in names]
    else:
        names = _select_suites(args.suites, OSP_SUITES)
        reports = [run_osp_suite(s, alg, seed=args.seed, witness_limit=args.witness_limit) for s in names]
    for r in reports:
        log.info("%s", r.summary_line())
    failed = any(r.failed for r in reports)
    payload: dict[str, Any] = {
        "format": REPORT_FORMAT_ID,
        "algebra": "gl" if isinstance(alg, GlAlgebra) else "osp",
        "name": alg.name,
        "params": alg.params,
        "seed": args.seed,
        "mutated": bool(mutated),
        "status": "fail" if failed else "pass",
        "totals": {"cases": sum(r.total for r in reports), "failures": sum(r.failures for r in reports)},
        "suites": [r.to_dict() for r in reports],
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    else:
        head = f"{alg.name} {alg.params}" + ("  [MUTATED EMBEDDING]" if mutated else "")
        lines = [head] + [r.summary_line() for r in reports]
        t = payload["totals"]
        note = "  (all selected suites vacuous)" if all(r.vacuous for r in reports) else ""
        lines.append(f"TOTAL {payload['status'].upper()} cases={t['cases']} failures={t['failures']}{note}")
        for r in reports:
            for w in r.witnesses[:1]:
                lines.append(f"  first witness for {r.family}: {json.dumps(w, sort_keys=True)}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_closure(args: argparse.Namespace) -> int:
    alg = _algebra(args, "osp")
    info = {"name": alg.name, "params": alg.params, **closure_dimension(alg)}
    if args.format == "json":
        _emit(json.dumps(info, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(
            f"{alg.name}: {info['generators']} short root vectors span rank {info['closure_rank']} "
            f"after {info['rounds']} rounds; dimension {info['dimension']}; "
            f"{'generates' if info['generates'] else 'DOES NOT generate'}\n",
            args.out,
        )
    return EXIT_OK if info["generates"] else EXIT_FAIL


def cmd_export(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    _emit(dumps(structure_constants(alg)), args.out)
    return EXIT_OK


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "closure": cmd_closure, "export": cmd_export}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"parasuper: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"parasuper: I/O error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        log.exception("internal error")
        print(f"parasuper: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
