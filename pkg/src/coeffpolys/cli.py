"""Command-line front end.

    coeffpolys basis  --family laguerre --n 4
    coeffpolys coeffs --family legendre --n 6 --check-closed-form
    coeffpolys verify --suite interlacing --family laguerre --n 20

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 for usage errors. Reports go to stdout (or --output); logs go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import suites
from .bases import FAMILIES, BasisSpec, InvalidSpecError, ThreeTermRecurrence, basis_sequence
from .diffop import closed_form_Q, coefficient_polys
from .exactpoly import Polynomial

log = logging.getLogger("coeffpolys")

OUTPUT_DIR_ENV = "COEFFPOLYS_OUTPUT_DIR"
CLOSED_FORM_FAMILIES = ("hermite-phys", "hermite-scaled", "laguerre", "chebyshev", "legendre")
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    spec: Optional[BasisSpec]
    n_max: int
    order: int
    output_format: str = "json"
    output_path: Optional[Path] = None
    seed: Optional[int] = None
    suite: Optional[str] = None
    check_closed_form: bool = False
    count: Optional[int] = None
    inputs: str = "disk"

    def validate(self) -> None:
        if self.n_max < 0:
            raise UsageError("--n must be nonnegative")
        if self.order < self.n_max:
            raise UsageError("--order must be at least --n")
        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise UsageError("--seed must be a 64-bit unsigned integer")


def fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coeffpolys", description=__doc__.split("\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("--alpha", type=fraction_arg, help="parameter of hermite-prob, e.g. 1/2")
    common.add_argument("--beta", type=fraction_arg, help="parameter of hermite-scaled, e.g. -2")
    common.add_argument("--recurrence", help="JSON object {c, lambda, p0} for the custom family")
    common.add_argument("--spec-json", help="whole basis spec as a JSON object")
    common.add_argument("--n", type=int, default=10, dest="n_max")
    common.add_argument("--order", type=int, help="truncation order (defaults to --n)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", type=Path, help=f"output file; relative paths resolve against ${OUTPUT_DIR_ENV}")
    common.add_argument("--seed", type=int)
    common.add_argument("-v", "--verbose", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("basis", parents=[common], help="emit P_0..P_n")
    p = sub.add_parser("coeffs", parents=[common], help="emit Q_0..Q_n")
    p.add_argument("--check-closed-form", action="store_true")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=suites.SUITES, required=True)
    p.add_argument("--count", type=int, help="trials for randomized suites")
    p.add_argument("--inputs", choices=("disk", "interval"), default="disk",
                   help="disk-image inputs: zeros in the unit disk, or real zeros in (-1, 1)")
    return parser


def spec_from_args(args) -> Optional[BasisSpec]:
    if args.spec_json:
        try:
            return BasisSpec.from_json(json.loads(args.spec_json))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise UsageError(f"bad --spec-json: {exc}")
    if args.family is None:
        return None
    rec = None
    if args.recurrence:
        try:
            rec = ThreeTermRecurrence.from_json(json.loads(args.recurrence))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise UsageError(f"bad --recurrence: {exc}")
    spec = BasisSpec(args.family, alpha=args.alpha, beta=args.beta, recurrence=rec)
    try:
        spec.validate()
    except InvalidSpecError as exc:
        raise UsageError(str(exc))
    return spec


def config_from_args(args) -> RunConfig:
    cfg = RunConfig(
        command=args.command,
        spec=spec_from_args(args),
        n_max=args.n_max,
        order=args.order if args.order is not None else args.n_max,
        output_format=args.format,
        output_path=args.output,
        seed=args.seed,
        suite=getattr(args, "suite", None),
        check_closed_form=getattr(args, "check_closed_form", False),
        count=getattr(args, "count", None),
        inputs=getattr(args, "inputs", "disk"),
    )
    cfg.validate()
    return cfg


# -- rendering ------------------------------------------------------------------


def polys_to_csv(polys: list[Polynomial], extra: Optional[dict[str, list]] = None) -> str:
    width = max((len(p.coeffs) for p in polys), default=1) or 1
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    extra = extra or {}
    writer.writerow(["n", *(f"c{k}" for k in range(width)), *extra])
    for n, p in enumerate(polys):
        row = p.to_wire()
        row += ["0/1"] * (width - len(row))
        writer.writerow([n, *row, *(str(v[n]).lower() for v in extra.values())])
    return buf.getvalue()


def render_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def emit(text: str, cfg: RunConfig) -> None:
    if cfg.output_path is None:
        sys.stdout.write(text)
        return
    path = cfg.output_path
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    log.info("wrote %s", path)


# -- commands ----------------------------------------------------------------------


def _require_spec(cfg: RunConfig) -> BasisSpec:
    if cfg.spec is None:
        raise UsageError("--family (or --spec-json) is required")
    return cfg.spec


def cmd_basis(cfg: RunConfig) -> int:
    spec = _require_spec(cfg)
    polys = basis_sequence(spec, cfg.n_max)
    if cfg.output_format == "csv":
        emit(polys_to_csv(polys), cfg)
    else:
        emit(render_json({"spec": spec.to_json(), "n_max": cfg.n_max, "polynomials": [p.to_wire() for p in polys]}), cfg)
    return EXIT_OK


def cmd_coeffs(cfg: RunConfig) -> int:
    spec = _require_spec(cfg)
    rep = coefficient_polys(spec, cfg.n_max)
    agreement = None
    if cfg.check_closed_form:
        if spec.family not in CLOSED_FORM_FAMILIES:
            raise UsageError(f"no closed form for family {spec.family!r}")
        agreement = [q == closed_form_Q(spec, n) for n, q in enumerate(rep.q)]
    if cfg.output_format == "csv":
        extra = {"closed_form_agrees": agreement} if agreement is not None else None
        emit(polys_to_csv(list(rep.q), extra), cfg)
    else:
        body = {"spec": spec.to_json(), "operator": rep.to_json()}
        if agreement is not None:
            body["closed_form_agreement"] = agreement
        emit(render_json(body), cfg)
    if agreement is not None and not all(agreement):
        log.error("closed form disagrees at n = %d", agreement.index(False))
        return EXIT_FAILED
    return EXIT_OK


def run_suite(cfg: RunConfig) -> dict:
    s, n = cfg.suite, cfg.n_max
    seed = cfg.seed if cfg.seed is not None else 0
    if s == "reconstruction":
        return suites.reconstruction(n, (cfg.spec,) if cfg.spec else suites.NOTATION_SPECS)
    if s == "closed-forms":
        if cfg.spec and cfg.spec.family not in CLOSED_FORM_FAMILIES:
            raise UsageError(f"no closed form for family {cfg.spec.family!r}")
        return suites.closed_forms(n, (cfg.spec,) if cfg.spec else suites.CLOSED_FORM_SPECS)
    if s == "interlacing":
        spec = cfg.spec or BasisSpec.laguerre()
        if spec.family not in CLOSED_FORM_FAMILIES:
            raise UsageError(f"interlacing suite needs a closed-form family, not {spec.family!r}")
        return suites.interlacing(spec, n)
    if s == "ddq":
        return suites.ddq(n)
    if s == "genfun":
        return suites.genfun(cfg.order)
    if s == "classification":
        return suites.classification(max(n, 2), cfg.count or 50, seed)
    if s == "stability":
        return suites.stability(cfg.spec or BasisSpec.hermite_phys())
    if s == "disk-image":
        families = [cfg.spec.family] if cfg.spec else ["chebyshev", "legendre"]
        if any(f not in ("chebyshev", "legendre") for f in families):
            raise UsageError("disk-image suite needs --family chebyshev or legendre")
        parts = [
            suites.disk_image(f, cfg.count or 100, seed, complex_pairs=cfg.inputs == "disk")
            for f in families
        ]
        if len(parts) == 1:
            return parts[0]
        return {"suite": "disk-image", "passed": all(p["passed"] for p in parts), "parts": parts, "seed": seed}
    raise UsageError(f"unknown suite {s!r}")


def _csv_report(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["suite", "part", "n", "ok"])
    parts = report.get("parts", [report])
    for part in parts:
        fam = part.get("family")
        label = fam if isinstance(fam, str) else (fam or {}).get("family", "")
        for c in part["checks"]:
            writer.writerow([report["suite"], label, c["n"], str(c["ok"]).lower()])
    return buf.getvalue()


def cmd_verify(cfg: RunConfig) -> int:
    report = run_suite(cfg)
    emit(_csv_report(report) if cfg.output_format == "csv" else render_json(report), cfg)
    if not report["passed"]:
        log.error("suite %s failed", cfg.suite)
        return EXIT_FAILED
    return EXIT_OK


COMMANDS = {"basis": cmd_basis, "coeffs": cmd_coeffs, "verify": cmd_verify}


def configure_logging(verbose: bool) -> None:
    # own handler on the package logger; basicConfig is a no-op once root has handlers
    for h in list(log.handlers):
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO if verbose else logging.WARNING)
    log.propagate = False


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"coeffpolys: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
