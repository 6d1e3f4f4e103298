"""Command-line interface.

Exit codes follow checker conventions: 0 for an affirmative verdict,
1 for a negative one, 2 for any input or usage error.  Reports go to
stdout as JSON; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .cones import NotStronglyConvexError
from .corpus import (
    PRNG_ALGORITHM,
    GenerationBudgetError,
    GeneratorConfig,
    iter_random_cones,
    named_examples,
)
from .fans import FanValidationError
from .klyachko import sections_dimension
from .lattice import is_primitive
from .serialize import (
    cone_to_document,
    locally_free_report,
    parse_geometry_document,
    recheck_report,
    smooth_report,
    sweep_report,
    verify_report,
)
from .verifier import sweep as run_sweep

AFFIRMATIVE, NEGATIVE, ERROR = 0, 1, 2


def _comma_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricfree",
        description="Exact smoothness and tangent-sheaf local-freeness checks "
                    "for rational polyhedral cones and fans.")
    parser.add_argument("--version", action="version", version=f"toricfree {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["json"], default="json",
                       help="output format (json only)")

    p_smooth = sub.add_parser("smooth", help="decide smoothness for a cone or fan file")
    p_smooth.add_argument("file")
    add_format(p_smooth)

    p_free = sub.add_parser("locally-free",
                            help="decide tangent-sheaf local freeness for a cone or fan file")
    p_free.add_argument("file")
    add_format(p_free)

    p_verify = sub.add_parser("verify",
                              help="run both deciders and check they agree")
    p_verify.add_argument("file")
    add_format(p_verify)

    p_sweep = sub.add_parser("sweep", help="random-corpus agreement sweep")
    p_sweep.add_argument("--rank", type=int, required=True)
    p_sweep.add_argument("--bound", type=int, default=5)
    p_sweep.add_argument("--count", type=int, required=True)
    p_sweep.add_argument("--seed", type=int, required=True)
    p_sweep.add_argument("--min-gens", type=int, default=1)
    p_sweep.add_argument("--max-gens", type=int, default=None,
                         help="defaults to rank + 2")
    add_format(p_sweep)

    p_sections = sub.add_parser(
        "sections", help="graded tangent-section dimension at a ray and weight")
    p_sections.add_argument("file", help="cone or fan file fixing the ambient rank")
    p_sections.add_argument("--ray", type=_comma_ints, required=True)
    p_sections.add_argument("--weight", type=_comma_ints, required=True)
    add_format(p_sections)

    p_generate = sub.add_parser(
        "generate", help="emit random cone documents, one JSON object per line")
    p_generate.add_argument("--seed", type=int, required=True)
    p_generate.add_argument("--rank", type=int, required=True)
    p_generate.add_argument("--bound", type=int, default=5)
    p_generate.add_argument("--count", type=int, default=1)
    p_generate.add_argument("--min-gens", type=int, default=1)
    p_generate.add_argument("--max-gens", type=int, default=None)
    add_format(p_generate)

    p_recheck = sub.add_parser(
        "recheck", help="re-verify every certificate embedded in a report file")
    p_recheck.add_argument("file")
    add_format(p_recheck)

    p_examples = sub.add_parser("examples", help="list the named example corpus")
    add_format(p_examples)

    return parser


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _config_from_args(args) -> GeneratorConfig:
    max_gens = args.max_gens if args.max_gens is not None else args.rank + 2
    return GeneratorConfig(rank=args.rank, min_generators=args.min_gens,
                           max_generators=max_gens, bound=args.bound, seed=args.seed)


def _fold_vector_flags(argv: Sequence[str]) -> list[str]:
    """Join ``--ray -1,3`` into ``--ray=-1,3`` so negative entries parse."""
    folded = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in ("--ray", "--weight") and i + 1 < len(argv):
            folded.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            folded.append(token)
    return folded


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_fold_vector_flags(argv))
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError,
            NotStronglyConvexError, FanValidationError, GenerationBudgetError) as exc:
        print(f"toricfree: error: {exc}", file=sys.stderr)
        return ERROR


def _dispatch(args) -> int:
    if args.command == "smooth":
        report = smooth_report(parse_geometry_document(_load_json(args.file)))
        _emit(report)
        return AFFIRMATIVE if report["verdict"] else NEGATIVE

    if args.command == "locally-free":
        report = locally_free_report(parse_geometry_document(_load_json(args.file)))
        _emit(report)
        return AFFIRMATIVE if report["verdict"] else NEGATIVE

    if args.command == "verify":
        report = verify_report(parse_geometry_document(_load_json(args.file)))
        _emit(report)
        return AFFIRMATIVE if report["verdict"] else NEGATIVE

    if args.command == "sweep":
        config = _config_from_args(args)
        if args.count < 1:
            raise ValueError("--count must be at least 1")
        stream = iter_random_cones(config)
        summary = run_sweep(next(stream) for _ in range(args.count))
        config_doc = {
            "rank": config.rank,
            "min_generators": config.min_generators,
            "max_generators": config.max_generators,
            "bound": config.bound,
            "seed": config.seed,
            "prng": PRNG_ALGORITHM,
        }
        _emit(sweep_report(summary, config_doc))
        return AFFIRMATIVE if summary.all_agree else NEGATIVE

    if args.command == "sections":
        geometry = parse_geometry_document(_load_json(args.file))
        ray = args.ray
        if len(ray) != geometry.rank:
            raise ValueError(f"--ray has length {len(ray)}, document rank is {geometry.rank}")
        if not any(ray) or not is_primitive(ray):
            raise ValueError(f"--ray {ray} is not a primitive lattice vector")
        if len(args.weight) != geometry.rank:
            raise ValueError(
                f"--weight has length {len(args.weight)}, document rank is {geometry.rank}")
        print(sections_dimension(ray, args.weight))
        return AFFIRMATIVE

    if args.command == "generate":
        config = _config_from_args(args)
        if args.count < 1:
            raise ValueError("--count must be at least 1")
        stream = iter_random_cones(config)
        for _ in range(args.count):
            json.dump(cone_to_document(next(stream)), sys.stdout, sort_keys=False)
            sys.stdout.write("\n")
        return AFFIRMATIVE

    if args.command == "recheck":
        failures = recheck_report(_load_json(args.file))
        _emit({"kind": "recheck", "failures": failures, "verdict": not failures})
        return AFFIRMATIVE if not failures else NEGATIVE

    if args.command == "examples":
        rows = [{"name": e.name,
                 "kind": "fan" if hasattr(e.geometry, "cones") else "cone",
                 "smooth": e.smooth, "locally_free": e.locally_free}
                for e in named_examples()]
        _emit({"kind": "examples", "examples": rows})
        return AFFIRMATIVE

    raise ValueError(f"unknown command {args.command!r}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
