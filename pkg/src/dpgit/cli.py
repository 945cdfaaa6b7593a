"""Command-line front end: parsing, command dispatch, JSON reporting, batch mode.

Every command produces one JSON report with the fixed top-level shape

    {"input_echo": ..., "ambient": ..., "result": ..., "certificates"?, "timings": ...}

serialized with sorted keys so that output is byte-stable across runs except
for the ``timings`` field.  Exact rational values are rendered as strings
("-3/4"), never as floats.

Exit codes: 0 on success, 1 on a parse error, 2 on a mathematical error
(degenerate input, domain violation, truncation failure).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from .catalog import (
    document_pencil,
    document_profile,
    document_stability,
    fixture_names,
    verify_fixture,
)
from .enumer import gh_menu, hj_expansion, is_t_singularity, markov_solutions, noether_check
from .errors import DpgitError, ParseError
from .fields import FieldElement
from .germ import MAX_TRUNCATION, set_default_truncation
from .moduli import (
    QuinticData,
    divisor_check_deg4,
    pencil_to_quintic,
    quintic_invariants,
    quintic_invariants_raw,
)
from .parsing import InputDocument, canonical_text, parse
from .polyalg import MultiPoly, WeightSystem
from .singular import SurfaceProfile

COMMANDS = (
    "classify-singularities",
    "git-stability",
    "moduli-point",
    "degenerate",
    "tsing",
    "hj",
    "markov",
    "menu",
    "noether",
    "catalog-verify",
)

FILE_COMMANDS = ("classify-singularities", "git-stability", "moduli-point", "degenerate")


# -- JSON conversion -------------------------------------------------------------


def _plain(value: Any) -> Any:
    """Recursively convert report values to JSON-safe types, rationals as strings."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, (Fraction, FieldElement, MultiPoly)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


def render_report(report: dict, pretty: bool = False) -> str:
    data = _plain(report)
    if pretty:
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def error_report(exc: Exception) -> dict:
    entry: dict[str, Any] = {"message": str(exc)}
    if isinstance(exc, ParseError):
        entry["kind"] = "parse"
        if exc.line is not None:
            entry["line"] = exc.line
            entry["column"] = exc.column
    else:
        entry["kind"] = "math"
    return {"error": entry}


def exit_code_for(exc: Exception) -> int:
    return 1 if isinstance(exc, ParseError) else 2


# -- per-command result builders -------------------------------------------------


def _profile_result(profile: SurfaceProfile) -> dict:
    points = [
        {
            "type": p.type.label(),
            "count": p.cluster_size,
            "point": [str(c) for c in p.point],
            "chart": p.chart,
        }
        for p in profile.singular_points
    ]
    return {
        "normal": profile.is_normal,
        "smooth": profile.is_smooth,
        "degree": profile.degree,
        "profile": profile.expanded_labels(),
        "points": points,
    }


def _run_classify(doc: InputDocument) -> tuple[dict, Optional[dict]]:
    return _profile_result(document_profile(doc)), None


def _run_git_stability(doc: InputDocument) -> tuple[dict, Optional[dict]]:
    verdict, judge = document_stability(doc)
    profile = document_profile(doc)
    result = {
        "class": verdict.tag,
        "profile": profile.expanded_labels(),
        "normal": profile.is_normal,
        "judge": judge,
        "boundary": verdict.boundary,
    }
    if verdict.reason:
        result["reason"] = verdict.reason
    certificates = None
    if verdict.certificate is not None:
        certificates = {"destabilizing_1ps": list(verdict.certificate)}
    return result, certificates


def _document_quintic(doc: InputDocument) -> QuinticData:
    """A binary quintic from the document: a quadric pencil or a direct 2-variable form."""
    ambient = doc.require_ambient()
    if len(ambient.variables) == 2:
        return QuinticData(doc.poly())
    return pencil_to_quintic(document_pencil(doc))


def _run_moduli_point(doc: InputDocument) -> tuple[dict, Optional[dict]]:
    q = _document_quintic(doc)
    i4, i8, i12 = quintic_invariants_raw(q)
    point = quintic_invariants(q)
    result = {
        "invariants": {"I4": i4, "I8": i8, "I12": i12},
        "point": list(point.canonical()),
        "on_divisor": divisor_check_deg4(point),
    }
    return result, None


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise ParseError(f"--weights expects comma-separated integers, got {text!r}") from None


def _run_degenerate(doc: InputDocument, weights: tuple[int, ...]) -> tuple[dict, Optional[dict]]:
    p = doc.poly()
    limit, w_min = p.degeneration_limit(WeightSystem(weights))
    result = {
        "input": str(p),
        "weights": list(weights),
        "limit": str(limit),
        "limit_weight": w_min,
    }
    return result, None


def _run_tsing(n: int, a: int) -> tuple[dict, Optional[dict]]:
    t = is_t_singularity(n, a)
    result: dict[str, Any] = {"n": n, "a": a, "is_t": t is not None}
    if t is not None:
        result["decomposition"] = {"d": t.d, "n": t.n, "a": t.a}
        result["index"] = t.index
        result["label"] = t.singularity_type().label()
    return result, None


def _run_hj(n: int, a: int) -> tuple[dict, Optional[dict]]:
    h = hj_expansion(n, a)
    result = {
        "expansion": list(h.expansion),
        "string": list(h.exceptional_string),
        "reversed": list(reversed(h.exceptional_string)),
    }
    return result, None


def _run_markov(bound: int) -> tuple[dict, Optional[dict]]:
    sols = markov_solutions(bound)
    return {"bound": bound, "count": len(sols), "solutions": [list(s) for s in sols]}, None


def _run_menu(degree: int, noether: bool) -> tuple[list, Optional[dict]]:
    return [t.label() for t in gh_menu(degree, apply_noether=noether)], None


def _run_noether(degree: int, picard_rank: int, milnor: list[int]) -> tuple[dict, Optional[dict]]:
    consistent = noether_check(degree, picard_rank, milnor)
    result = {
        "degree": degree,
        "picard_rank": picard_rank,
        "milnor": list(milnor),
        "sum": picard_rank + degree + sum(milnor),
        "consistent": consistent,
    }
    return result, None


def _run_catalog_verify(names: list[str]) -> tuple[dict, Optional[dict]]:
    selected = list(names) if names else list(fixture_names())
    reports = [verify_fixture(name) for name in selected]
    entries = [
        {
            "name": r.name,
            "profile": list(r.labels),
            "normal": r.normal,
            "stability": r.stability,
            "judge": r.judge,
            "profile_ok": r.profile_ok,
            "stability_ok": r.stability_ok,
            "parametrization_ok": r.parametrization_ok,
            "ok": r.ok,
        }
        for r in reports
    ]
    return {"reports": entries, "all_ok": all(r.ok for r in reports)}, None


# -- the public entry point -------------------------------------------------------


def run(command: str, document: InputDocument | None = None, params: dict | None = None) -> dict:
    """Execute one command and return the full JSON-ready report dictionary.

    ``document`` is required for the file-driven commands; ``params`` carries
    the remaining arguments (weights, bounds, names) keyed by option name.
    Mathematical failures propagate as exceptions; the CLI layer converts
    them to structured error JSON and exit codes.
    """
    params = params or {}
    started = time.perf_counter()

    ambient_info = None
    input_echo: Any
    if command in FILE_COMMANDS:
        if document is None:
            raise ParseError("this command needs an input document")
        amb = document.require_ambient()
        ambient_info = {
            "label": amb.label(),
            "weights": list(amb.weights),
            "variables": list(amb.variables),
            "field": amb.coefficient_field(),
        }
        input_echo = canonical_text(document)
    else:
        input_echo = {"command": command, **{k: _plain(v) for k, v in params.items()}}

    if command == "classify-singularities":
        result, certificates = _run_classify(document)
    elif command == "git-stability":
        result, certificates = _run_git_stability(document)
    elif command == "moduli-point":
        result, certificates = _run_moduli_point(document)
    elif command == "degenerate":
        result, certificates = _run_degenerate(document, params["weights"])
    elif command == "tsing":
        result, certificates = _run_tsing(params["n"], params["a"])
    elif command == "hj":
        result, certificates = _run_hj(params["n"], params["a"])
    elif command == "markov":
        result, certificates = _run_markov(params["bound"])
    elif command == "menu":
        result, certificates = _run_menu(params["degree"], params.get("noether", False))
    elif command == "noether":
        result, certificates = _run_noether(params["degree"], params["picard_rank"], params["milnor"])
    elif command == "catalog-verify":
        result, certificates = _run_catalog_verify(params.get("names", []))
    else:
        raise ParseError(f"unknown command {command!r}")

    report = {
        "command": command,
        "input_echo": input_echo,
        "ambient": ambient_info,
        "result": result,
        "timings": {"seconds": round(time.perf_counter() - started, 6)},
    }
    if certificates is not None:
        report["certificates"] = certificates
    return report


# -- argument parsing -------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpgit",
        description="Exact classification of log del Pezzo degenerations: "
        "singularity profiles, GIT stability, moduli invariants, quotient enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_output_options(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", action="store_true", help="compact JSON output (default)")
        group.add_argument("--pretty", action="store_true", help="indented JSON output")
        p.add_argument(
            "--truncation",
            type=int,
            metavar="N",
            help=f"starting power-series truncation order (1..{MAX_TRUNCATION}); "
            "overrides DPGIT_TRUNCATION",
        )

    def add_file_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", nargs="?", metavar="FILE", help="input document (.dpg)")
        p.add_argument(
            "--batch",
            metavar="DIR",
            help="process every *.dpg file in DIR with a worker pool, "
            "writing one JSON report per file",
        )
        add_output_options(p)
        return p

    add_file_command("classify-singularities", "classify the singular points of a surface")
    add_file_command("git-stability", "decide the GIT stability class of a surface")
    p = add_file_command("moduli-point", "invariants and moduli point of a quadric pencil or binary quintic")
    p = add_file_command("degenerate", "limit of a polynomial under a one-parameter subgroup")
    p.add_argument("--weights", required=True, metavar="W1,W2,...", help="integer weight per variable")

    p = sub.add_parser("tsing", help="test whether 1/n(1,a) is a T-singularity")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    add_output_options(p)

    p = sub.add_parser("hj", help="Hirzebruch-Jung continued fraction of 1/n(1,a)")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    add_output_options(p)

    p = sub.add_parser("markov", help="Markov triples up to a bound")
    p.add_argument("bound", type=int)
    add_output_options(p)

    p = sub.add_parser("menu", help="allowed singularity menu for a degree-d limit surface")
    p.add_argument("degree", type=int)
    p.add_argument("--noether", action="store_true", help="apply the Noether bound to Du Val entries")
    add_output_options(p)

    p = sub.add_parser("noether", help="check the singular Noether formula rho + d + sum(mu) = 10")
    p.add_argument("degree", type=int)
    p.add_argument("picard_rank", type=int)
    p.add_argument("milnor", type=int, nargs="*", help="Milnor numbers of the singular points")
    add_output_options(p)

    p = sub.add_parser("catalog-verify", help="re-derive and check the built-in degeneration catalog")
    p.add_argument("names", nargs="*", help="fixture names (default: all)")
    p.add_argument("--all", action="store_true", dest="all_fixtures", help="verify every fixture")
    add_output_options(p)

    return parser


def _resolve_truncation(flag_value: int | None) -> int | None:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("DPGIT_TRUNCATION")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"DPGIT_TRUNCATION must be an integer, got {env!r}") from None
    return None


def _collect_params(args: argparse.Namespace) -> dict:
    command = args.command
    if command == "degenerate":
        return {"weights": _parse_weights(args.weights)}
    if command in ("tsing", "hj"):
        return {"n": args.n, "a": args.a}
    if command == "markov":
        return {"bound": args.bound}
    if command == "menu":
        return {"degree": args.degree, "noether": args.noether}
    if command == "noether":
        return {"degree": args.degree, "picard_rank": args.picard_rank, "milnor": args.milnor}
    if command == "catalog-verify":
        return {"names": [] if args.all_fixtures else args.names}
    return {}


# -- batch mode -------------------------------------------------------------------


def _batch_worker(job: tuple[str, str, dict, int | None]) -> tuple[str, int, str]:
    """Process one file in a worker: returns (stem, exit code, rendered JSON)."""
    command, path, params, truncation = job
    set_default_truncation(truncation)
    try:
        document = parse(Path(path).read_text(encoding="utf-8"))
        report = run(command, document, params)
        return Path(path).stem, 0, render_report(report)
    except DpgitError as exc:
        return Path(path).stem, exit_code_for(exc), render_report(error_report(exc))


def run_batch(
    command: str,
    directory: str,
    params: dict,
    truncation: int | None,
    pretty: bool,
    out=sys.stdout,
) -> int:
    """Apply one command to every .dpg file in a directory.

    Files are processed by a bounded worker pool with no shared state; each
    input ``name.dpg`` yields a sibling report ``name.json``.  The summary on
    stdout is sorted by file name, so output is order-independent.  The exit
    code is the worst per-file outcome (parse error beats math error).
    """
    base = Path(directory)
    files = sorted(base.glob("*.dpg"))
    if not files:
        raise ParseError(f"no .dpg files found in {directory!r}")
    jobs = [(command, str(f), params, truncation) for f in files]
    workers = min(8, len(jobs), os.cpu_count() or 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_batch_worker, jobs))
    else:
        outcomes = [_batch_worker(job) for job in jobs]

    codes = {}
    for stem, code, rendered in sorted(outcomes):
        (base / f"{stem}.json").write_text(rendered, encoding="utf-8")
        codes[stem] = code
        status = {0: "ok", 1: "parse error", 2: "math error"}[code]
        print(f"{stem}: {status}", file=out)
    failed = sum(1 for c in codes.values() if c)
    print(f"{len(codes) - failed}/{len(codes)} succeeded", file=out)
    if any(c == 1 for c in codes.values()):
        return 1
    if any(c == 2 for c in codes.values()):
        return 2
    return 0


# -- main -------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    pretty = bool(getattr(args, "pretty", False))
    try:
        truncation = _resolve_truncation(getattr(args, "truncation", None))
        set_default_truncation(truncation)
        try:
            params = _collect_params(args)
            if args.command in FILE_COMMANDS:
                if getattr(args, "batch", None):
                    if args.file:
                        raise ParseError("give either FILE or --batch DIR, not both")
                    return run_batch(args.command, args.batch, params, truncation, pretty)
                if not args.file:
                    raise ParseError("this command needs an input FILE (or --batch DIR)")
                document = parse(Path(args.file).read_text(encoding="utf-8"))
            else:
                document = None
            report = run(args.command, document, params)
        finally:
            set_default_truncation(None)
    except DpgitError as exc:
        sys.stdout.write(render_report(error_report(exc), pretty))
        return exit_code_for(exc)
    except OSError as exc:
        sys.stdout.write(render_report({"error": {"kind": "io", "message": str(exc)}}, pretty))
        return 1
    sys.stdout.write(render_report(report, pretty))
    return 0


if __name__ == "__main__":
    sys.exit(main())
