"""Command-line front end.

Each sub-command builds a :class:`RunConfig`, runs its computation and
returns a :class:`VerificationReport`. ``main`` prints the report and maps
the outcome to the exit status: 0 when every check passed, 1 when a check
failed or a structural property broke, 2 on unusable input.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence
from math import factorial
from pathlib import Path
from typing import Any, TypeVar

import numpy as np
from pydantic import ValidationError

from .algebra import tensor_and_tor
from .common import (
    CanonicalCorner,
    CheckStatus,
    InputError,
    NeedDeeperProbe,
    OutputFormat,
    VerificationFailure,
)
from .complexes import ChainComplex, build_minus_complex
from .config import COMMANDS, MAX_FULL_STATES, RunConfig, Window
from .connect import (
    ConnectedSum,
    build_C,
    check_f,
    eta_failures,
    inclusion_quasi_iso_check,
    map_f,
    quotient_acyclicity_check,
)
from .grid import (
    GridDiagram,
    connected_sum_diagram,
    has_bottom_right_x,
    has_top_left_x,
    load_diagram,
    render_text,
    save_diagram,
)
from .homology import UModuleResult, blocked_homology, induced_map_is_iso, module_structure
from .legendrian import additivity_check, lambda_class
from .report import CheckResult, HomologyReport, VerificationLog, VerificationReport

T = TypeVar("T")

# number of input diagrams each command accepts
INPUT_COUNTS: dict[str, tuple[int, ...]] = {
    "validate": (1,),
    "homology": (1,),
    "connect": (2,),
    "verify-kunneth": (2,),
    "legendrian": (1, 2),
    "render": (1,),
}


def _status(ok: bool, sampled: bool = False) -> CheckStatus:
    if not ok:
        return CheckStatus.FAILED
    return CheckStatus.SAMPLED if sampled else CheckStatus.VERIFIED


def sample_items(items: Sequence[T], fraction: float | None, seed: int) -> list[T]:
    """A reproducible sample of ``items`` in their original order.

    With ``fraction`` None every item is returned.
    """
    if fraction is None or fraction >= 1.0:
        return list(items)
    k = max(1, round(len(items) * fraction))
    rng = np.random.default_rng(seed)
    picked = np.sort(rng.choice(len(items), size=min(k, len(items)), replace=False))
    return [items[int(i)] for i in picked]


def _module(c: ChainComplex, config: RunConfig, symmetric: bool = True) -> UModuleResult:
    """module_structure, retried once at the depth it asks for.

    Only grid complexes of knots may use the symmetric probe bound.
    """
    try:
        return module_structure(c, config.depth, symmetric, jobs=config.jobs)
    except NeedDeeperProbe as exc:
        if config.depth is not None:
            raise
        return module_structure(c, exc.depth, symmetric, jobs=config.jobs)


def _run_check(
    report: VerificationReport,
    name: str,
    scale: int,
    check: Callable[[], bool],
    sampled: bool = False,
    coverage: float | None = None,
    detail: str = "",
) -> bool:
    """Run one boolean check; a VerificationFailure counts as a failed check."""
    try:
        ok = check()
    except VerificationFailure as exc:
        ok = False
        detail = str(exc)
    report.add(
        CheckResult(
            name=name,
            status=_status(ok, sampled),
            scale=scale,
            coverage=coverage if sampled else None,
            detail=detail,
        )
    )
    return ok


def _skip(report: VerificationReport, name: str, scale: int, detail: str) -> None:
    report.add(CheckResult(name=name, status=CheckStatus.SKIPPED, scale=scale, detail=detail))


def is_desk_scale(size: int) -> bool:
    """Whether GC-(g) of an size x size diagram is small enough to build in full."""
    return factorial(size) <= MAX_FULL_STATES


# commands


def cmd_validate(config: RunConfig) -> VerificationReport:
    """Parse and validate a diagram, reporting its marking positions."""
    path = config.inputs[0]
    d = load_diagram(path)
    report = VerificationReport(command="validate")
    report.extra = {
        "input": str(path),
        "size": d.n,
        "o_row": list(d.o_row),
        "x_row": list(d.x_row),
        "x_top_left": has_top_left_x(d),
        "x_bottom_right": has_bottom_right_x(d),
    }
    report.add(CheckResult(name="valid knot diagram", status=CheckStatus.VERIFIED, scale=d.n))
    return report


def cmd_homology(config: RunConfig) -> VerificationReport:
    """GH- with tau, the blocked homology and the structural checks on GC-."""
    path = config.inputs[0]
    d = load_diagram(path)
    report = VerificationReport(command="homology")
    report.log.log_event("INFO", f"building GC- of {path}", scale=d.n)
    c = build_minus_complex(d, name=Path(path).stem, show_progress=config.progress)
    _run_check(report, "d^2 = 0", d.n, lambda: not c.d_squared_failures())
    _run_check(report, "differential has degree (-1, 0)", d.n, lambda: not c.inhomogeneous_generators())
    result = _module(c, config)
    report.homology.append(
        HomologyReport.from_module(
            result.module, name=Path(path).stem, size=d.n, blocked=blocked_homology(c)
        )
    )
    return report


def cmd_connect(config: RunConfig) -> VerificationReport:
    """Build g# from two summands; write it to ``output`` when given."""
    g1, g2 = (load_diagram(p) for p in config.inputs)
    g = connected_sum_diagram(g1, g2)
    report = VerificationReport(command="connect")
    report.extra = {"size": g.n, "o_row": list(g.o_row), "x_row": list(g.x_row)}
    if config.output is not None:
        save_diagram(g, config.output)
        report.extra["output"] = str(config.output)
    else:
        report.extra["diagram"] = "\n" + render_text(g)
    report.add(CheckResult(name="connect diagram is valid", status=CheckStatus.VERIFIED, scale=g.n))
    return report


def verify_kunneth(
    g1: GridDiagram,
    g2: GridDiagram,
    config: RunConfig,
    log: VerificationLog | None = None,
) -> VerificationReport:
    """
    The chain-level and homology-level checks on g1 # g2.

    C and f are always built. GC-(g#) and the homology comparisons need the
    full complex and run at desk scale only. With ``config.sample`` set, the
    slices of f and the generators for the eta chain-map check are sampled.
    """
    report = VerificationReport(command="verify-kunneth", log=log or VerificationLog())
    cs = ConnectedSum(g1, g2)
    scale = cs.size
    desk = is_desk_scale(scale)
    sampled = config.sample is not None and config.sample < 1.0
    report.extra = {"size": scale, "desk_scale": desk, "seed": config.seed}
    report.log.log_event("INFO", f"connected sum of size {scale}", scale=scale)

    try:
        c = build_C(cs.diagram, config.jobs, config.progress, report.log)
    except VerificationFailure as exc:
        report.add(
            CheckResult(name="C is a subcomplex", status=CheckStatus.FAILED, scale=scale, detail=str(exc))
        )
        return report
    report.add(
        CheckResult(
            name="C is a subcomplex",
            status=CheckStatus.VERIFIED,
            scale=scale,
            detail=f"{c.ad1_count} AD1 + {len(c) - c.ad1_count} S0 generators",
        )
    )

    f = map_f(c)
    all_slices = f.slice_bigradings()
    slices = sample_items(all_slices, config.sample, config.seed)
    coverage = len(slices) / len(all_slices) if all_slices else 1.0
    injective, image_ok = check_f(f, slices, report.log)
    for name, ok in (("f injective", injective), ("Im f = (U_n + U_n+1) II", image_ok)):
        report.add(
            CheckResult(
                name=name,
                status=_status(ok, sampled),
                scale=scale,
                coverage=coverage if sampled else None,
                detail=f"{len(slices)} of {len(all_slices)} slices",
            )
        )

    if sampled:
        states = sample_items(c.states, config.sample, config.seed)
        failures = eta_failures(cs, states)
        report.add(
            CheckResult(
                name="eta is a chain map",
                status=_status(not failures, True),
                scale=scale,
                coverage=len(states) / len(c),
                detail=f"{len(failures)} failing of {len(states)} sampled generators",
            )
        )
        eta_map = None
    else:
        eta_map = cs.eta_map(c)
        bad = eta_map.inhomogeneous_generators()
        failures_ids = eta_map.chain_map_failures(jobs=config.jobs, show_progress=config.progress)
        _run_check(report, "eta is homogeneous of degree (0, 0)", scale, lambda: not bad)
        _run_check(
            report,
            "eta is a chain map",
            scale,
            lambda: not failures_ids,
            detail=f"{len(failures_ids)} failing of {len(c)} generators",
        )

    window = config.window
    full_names = (
        "GC-(g#)/C is acyclic",
        "C -> GC-(g#) is a quasi-isomorphism",
        "eta is a quasi-isomorphism",
    )
    if desk:
        _run_check(
            report, full_names[0], scale, lambda: quotient_acyclicity_check(cs.diagram, window, c, report.log)
        )
        _run_check(
            report, full_names[1], scale, lambda: inclusion_quasi_iso_check(cs.diagram, c, report.log)
        )
        if eta_map is not None:
            em = eta_map
            _run_check(report, full_names[2], scale, lambda: induced_map_is_iso(em, window, config.depth))
        else:
            _skip(report, full_names[2], scale, "eta sampled")
    else:
        for name in full_names:
            _skip(report, name, scale, "GC-(g#) not computed at this scale")

    c1 = build_minus_complex(cs.g1, name="g1")
    c2 = build_minus_complex(cs.g2, name="g2")
    m1, m2 = _module(c1, config), _module(c2, config)
    expected = tensor_and_tor(m1.module, m2.module)
    for name, m, cx in (("g1", m1, c1), ("g2", m2, c2)):
        report.homology.append(
            HomologyReport.from_module(m.module, name=name, size=cs.g1.n, blocked=blocked_homology(cx))
        )
    report.homology.append(HomologyReport.from_module(expected, name="H(g1) (x) H(g2) + Tor"))

    if sampled:
        _skip(report, "H(C) = H(g1) (x) H(g2) + Tor", scale, "homology of C not computed when sampling")
        _skip(report, "tau(g#) = tau(g1) + tau(g2)", scale, "homology of C not computed when sampling")
        return report

    target = _module(cs.target, config, symmetric=False)
    _run_check(
        report,
        "H(GC-(g1) (x) GC-(g2)) = H(g1) (x) H(g2) + Tor",
        scale,
        lambda: target.module == expected,
    )
    hc = _module(c, config, symmetric=False)
    towers = len(hc.module.towers)
    if towers == 1:
        report.homology.append(
            HomologyReport.from_module(hc.module, name="C", size=scale, blocked=blocked_homology(c))
        )
    _run_check(report, "H(C) = H(g1) (x) H(g2) + Tor", scale, lambda: hc.module == expected)
    c_tau = str(hc.tau) if towers == 1 else f"undefined ({towers} towers)"
    _run_check(
        report,
        "tau(g#) = tau(g1) + tau(g2)",
        scale,
        lambda: towers == 1 and hc.tau == m1.tau + m2.tau,
        detail=f"{c_tau} vs {m1.tau} + {m2.tau}",
    )
    return report


def cmd_verify_kunneth(config: RunConfig) -> VerificationReport:
    g1, g2 = (load_diagram(p) for p in config.inputs)
    return verify_kunneth(g1, g2, config)


def cmd_legendrian(config: RunConfig) -> VerificationReport:
    """lambda+, lambda- and theta of one diagram, or their additivity for two."""
    diagrams = [load_diagram(p) for p in config.inputs]
    if len(diagrams) == 2:
        homology = None if config.sample is None else False
        return additivity_check(*diagrams, homology=homology, probe_depth=config.depth)
    d = diagrams[0]
    report = VerificationReport(command="legendrian")
    result = _module(build_minus_complex(d, name=config.inputs[0].stem), config)
    report.homology.append(HomologyReport.from_module(result.module, name=config.inputs[0].stem, size=d.n))
    for which in (CanonicalCorner.PLUS, CanonicalCorner.MINUS):
        sign = "+" if which is CanonicalCorner.PLUS else "-"
        try:
            lam = lambda_class(d, which, result)
        except VerificationFailure as exc:
            report.add(
                CheckResult(name=f"x{sign} is a cycle", status=CheckStatus.FAILED, scale=d.n, detail=str(exc))
            )
            continue
        report.add(
            CheckResult(name=f"x{sign} is a cycle", status=CheckStatus.VERIFIED, scale=d.n, detail=str(lam.canonical))
        )
        report.extra[f"lambda{sign}"] = str(lam.location)
        if which is CanonicalCorner.PLUS:
            report.extra["theta"] = str(lam.location)
            report.extra["lambda+ non-torsion"] = not lam.is_zero and not lam.is_torsion
    return report


def cmd_render(config: RunConfig) -> VerificationReport:
    """Print (or write) the diagram in text grid form."""
    d = load_diagram(config.inputs[0])
    report = VerificationReport(command="render")
    if config.output is not None:
        save_diagram(d, config.output)
        report.extra["output"] = str(config.output)
    report.extra["diagram"] = render_text(d)
    return report


COMMAND_HANDLERS: dict[str, Callable[[RunConfig], VerificationReport]] = {
    "validate": cmd_validate,
    "homology": cmd_homology,
    "connect": cmd_connect,
    "verify-kunneth": cmd_verify_kunneth,
    "legendrian": cmd_legendrian,
    "render": cmd_render,
}


# argument handling


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridhom",
        description="Minus-flavor grid homology and connected sums of grid diagrams.",
    )
    parser.add_argument("command", choices=COMMANDS, help="Sub-command")
    parser.add_argument("inputs", nargs="+", type=Path, help="Input diagram files (text grid or JSON)")
    parser.add_argument("-o", "--output", type=Path, help="Output path for connect and render")
    parser.add_argument("--window", type=Window.parse, help="Bigrading window M_LO:M_HI,A_LO:A_HI")
    parser.add_argument("--depth", type=int, help="Probe depth for module structure")
    parser.add_argument("--jobs", type=int, help="Worker threads (default from GRIDHOM_JOBS)")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Report format",
    )
    parser.add_argument("--seed", type=int, default=0, help="Seed for sampled checks")
    parser.add_argument("--sample", type=float, help="Fraction of generators or slices to check")
    parser.add_argument("--progress", action="store_true", help="Show progress bars")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields: dict[str, Any] = {
        "command": args.command,
        "inputs": args.inputs,
        "output": args.output,
        "window": args.window,
        "depth": args.depth,
        "output_format": OutputFormat(args.output_format),
        "seed": args.seed,
        "sample": args.sample,
        "progress": args.progress,
    }
    if args.jobs is not None:
        fields["jobs"] = args.jobs
    return RunConfig(**fields)


def emit(report: VerificationReport, config: RunConfig) -> None:
    if config.output_format is OutputFormat.JSON:
        print(report.to_json())
    elif config.command == "render" and config.output is None:
        print(report.extra["diagram"])
    else:
        report.print_report()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    counts = INPUT_COUNTS[args.command]
    if len(args.inputs) not in counts:
        expected = " or ".join(str(k) for k in counts)
        parser.error(f"{args.command} takes {expected} input file(s), got {len(args.inputs)}")
    try:
        config = config_from_args(args)
    except (ValidationError, ValueError) as exc:
        print(f"gridhom: invalid options: {exc}", file=sys.stderr)
        return 2
    try:
        report = COMMAND_HANDLERS[config.command](config)
    except (InputError, OSError, KeyError) as exc:
        print(f"gridhom: {exc}", file=sys.stderr)
        return 2
    except NeedDeeperProbe as exc:
        print(f"gridhom: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(f"gridhom: verification failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # malformed JSON and pydantic errors on diagram files
        print(f"gridhom: {exc}", file=sys.stderr)
        return 2
    emit(report, config)
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
