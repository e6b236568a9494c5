"""Legendrian invariants lambda+ and lambda-, the transverse invariant theta, and additivity."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from ..algebra import Bigrading, ModuleElement
from ..common import CanonicalCorner, CheckStatus, ClassKind, NotACycle
from ..complexes import ChainComplex, build_minus_complex
from ..config import MAX_FULL_STATES
from ..connect import ConnectedSum
from ..grid import GridDiagram
from ..homology import ClassLocation, UModuleResult, locate_class, module_structure
from ..report import CheckResult, VerificationLog, VerificationReport
from .canonical import CanonicalState, canonical_state


@dataclass(frozen=True)
class LegendrianClass:
    """
    The homology class of a canonical state.

    Attributes:
        canonical: x+ or x- with its state.
        cycle: The state as an element of the grid complex.
        location: Where the class sits in the module decomposition.
    """

    canonical: CanonicalState
    cycle: ModuleElement
    location: ClassLocation

    @property
    def bigrading(self) -> Bigrading | None:
        return self.location.bigrading

    @property
    def is_zero(self) -> bool:
        return self.location.kind is ClassKind.ZERO

    @property
    def is_torsion(self) -> bool:
        return self.location.kind is ClassKind.TORSION

    def __str__(self) -> str:
        sign = "+" if self.canonical.which is CanonicalCorner.PLUS else "-"
        return f"lambda{sign}: {self.location}"


def lambda_class(
    d: GridDiagram,
    which: CanonicalCorner,
    result: UModuleResult | None = None,
    probe_depth: int | None = None,
) -> LegendrianClass:
    """
    lambda+ or lambda- of the Legendrian knot a grid diagram represents.

    Args:
        d: A valid grid diagram.
        which: PLUS or MINUS.
        result: Module structure of GC-(d), computed when omitted.
        probe_depth: Passed to :func:`module_structure`.

    Raises:
        NotACycle: the canonical state has nonzero boundary.
    """
    if result is None:
        result = module_structure(build_minus_complex(d), probe_depth)
    c = result.complex
    canonical = canonical_state(d, which)
    cycle = c.element(canonical.state)
    if c.boundary(cycle):
        raise NotACycle(f"canonical state {canonical} has boundary {c.format(c.boundary(cycle))}")
    return LegendrianClass(canonical, cycle, locate_class(result, cycle))


def theta(
    d: GridDiagram, result: UModuleResult | None = None, probe_depth: int | None = None
) -> LegendrianClass:
    """theta of the transverse push-off: the lambda+ class."""
    return lambda_class(d, CanonicalCorner.PLUS, result, probe_depth)


def _same_class(a: ClassLocation, b: ClassLocation) -> bool:
    return (a.kind, a.bigrading, a.order, a.tower_power) == (
        b.kind,
        b.bigrading,
        b.order,
        b.tower_power,
    )


class _ModuleCache:
    def __init__(self, probe_depth: int | None) -> None:
        self.probe_depth = probe_depth
        self._results: dict[int, UModuleResult] = {}

    def locate(self, c: ChainComplex, cycle: ModuleElement) -> ClassLocation:
        key = id(c)
        if key not in self._results:
            self._results[key] = module_structure(c, self.probe_depth, symmetric=False)
        return locate_class(self._results[key], cycle)


def additivity_check(
    g1: GridDiagram,
    g2: GridDiagram,
    homology: bool | None = None,
    probe_depth: int | None = None,
    log: VerificationLog | None = None,
) -> VerificationReport:
    """
    Check that eta carries x+(g#) and x-(g#) to x(g1) (x) x(g2).

    The chain-level identity is checked term by term at every scale. At desk
    scale the classes are also located in H(C), H(GC-(g#)) and the homology
    of the target, and must agree.

    Args:
        g1, g2: Summand diagrams of equal size.
        homology: Force the homology-level check on or off; by default it
            runs when g# has at most ``MAX_FULL_STATES`` states.
        probe_depth: Passed to :func:`module_structure`.
        log: Event log shared with the report.
    """
    report = VerificationReport(command="legendrian", log=log or VerificationLog())
    cs = ConnectedSum(g1, g2)
    scale = cs.size
    if homology is None:
        homology = factorial(scale) <= MAX_FULL_STATES
    report.log.log_event("INFO", f"connected sum of size {scale}", scale=scale)
    located: dict[CanonicalCorner, bool] = {}
    gc = build_minus_complex(cs.diagram) if homology else None
    modules = _ModuleCache(probe_depth)
    for which in (CanonicalCorner.PLUS, CanonicalCorner.MINUS):
        sign = "+" if which is CanonicalCorner.PLUS else "-"
        x = canonical_state(cs.diagram, which).state
        expected = cs.target_generator(
            canonical_state(cs.g1, which).state, canonical_state(cs.g2, which).state
        )
        image = cs.eta_state(x)
        chain_ok = image == expected
        report.add(
            CheckResult(
                name=f"eta(x{sign}(g#)) = x{sign}(g1) (x) x{sign}(g2)",
                status=CheckStatus.VERIFIED if chain_ok else CheckStatus.FAILED,
                scale=scale,
                detail=f"class {cs.geometry.state_class(x).value}, image {cs.target.format(image)}",
            )
        )
        name = f"lambda{sign}(g1) (x) lambda{sign}(g2) -> lambda{sign}(g#)"
        if not homology:
            located[which] = chain_ok
            report.add(
                CheckResult(
                    name=name,
                    status=CheckStatus.SKIPPED,
                    scale=scale,
                    detail="homology not computed at this scale",
                )
            )
            continue
        assert gc is not None
        in_gc = modules.locate(gc, gc.element(x))
        in_c = modules.locate(cs.c, cs.c.element(x))
        in_target = modules.locate(cs.target, expected)
        ok = _same_class(in_gc, in_c) and _same_class(in_c, in_target)
        located[which] = chain_ok and ok
        report.add(
            CheckResult(
                name=name,
                status=CheckStatus.VERIFIED if ok else CheckStatus.FAILED,
                scale=scale,
                detail=f"GC-(g#): {in_gc}; C: {in_c}; target: {in_target}",
            )
        )
    report.add(
        CheckResult(
            name="theta additivity",
            status=CheckStatus.VERIFIED if located[CanonicalCorner.PLUS] else CheckStatus.FAILED,
            scale=scale,
            detail="theta is the lambda+ class",
        )
    )
    return report
