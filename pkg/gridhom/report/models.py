"""Machine-readable reports emitted by the command line."""

from __future__ import annotations

import json
from typing import Any

from pydantic import BaseModel, Field

from ..algebra import BigradedUModule, Bigrading
from ..common import CheckStatus
from .log import VerificationLog


class GradingEntry(BaseModel):
    """A bigrading with an optional multiplicity or torsion order."""

    maslov: int = Field(..., description="Maslov grading")
    alexander: int = Field(..., description="Alexander grading")

    @classmethod
    def of(cls, g: Bigrading) -> GradingEntry:
        return cls(maslov=g.maslov, alexander=g.alexander)


class TorsionEntry(GradingEntry):
    order: int = Field(..., ge=1, description="Torsion order k of F[U]/U^k")


class DimensionEntry(GradingEntry):
    dimension: int = Field(..., ge=1, description="Dimension over F_2")


class HomologyReport(BaseModel):
    """
    The F[U]-module decomposition of one complex.

    Attributes:
        name: Complex or input description
        size: Grid size the homology was computed from
        tower: Bigrading of the tower generator
        torsion: Torsion summands, sorted
        tau: Minus the Alexander grading of the tower
        blocked: Homology with every variable set to zero
        hat: Homology with the designated variable set to zero
    """

    name: str = Field("", description="Complex or input description")
    size: int | None = Field(None, description="Grid size")
    tower: GradingEntry = Field(..., description="Tower generator bigrading")
    torsion: list[TorsionEntry] = Field(default_factory=list, description="Torsion summands")
    tau: int = Field(..., description="tau invariant")
    blocked: list[DimensionEntry] = Field(default_factory=list, description="Blocked homology")
    hat: list[DimensionEntry] = Field(default_factory=list, description="Hat homology")

    @classmethod
    def from_module(
        cls,
        module: BigradedUModule,
        name: str = "",
        size: int | None = None,
        blocked: dict[Bigrading, int] | None = None,
    ) -> HomologyReport:
        return cls(
            name=name,
            size=size,
            tower=GradingEntry.of(module.tower_bigrading),
            torsion=[
                TorsionEntry(maslov=t.bigrading.maslov, alexander=t.bigrading.alexander, order=t.order)
                for t in module.torsion
            ],
            tau=module.tau,
            blocked=_dimension_entries(blocked or {}),
            hat=_dimension_entries(module.hat_dimensions()),
        )

    def summary_json(self) -> str:
        """The compact ``{"tower", "torsion", "tau"}`` form."""
        return json.dumps(
            self.model_dump(include={"tower", "torsion", "tau"}), sort_keys=True
        )

    def to_text(self) -> str:
        lines = [f"{self.name or 'homology'} ({self.size}x{self.size})" if self.size else self.name]
        lines.append(f"  tower:   F[U] at ({self.tower.maslov}, {self.tower.alexander})")
        for t in self.torsion:
            lines.append(f"  torsion: F[U]/U^{t.order} at ({t.maslov}, {t.alexander})")
        lines.append(f"  tau:     {self.tau}")
        if self.blocked:
            poly = " + ".join(f"{e.dimension} q^{e.alexander} t^{e.maslov}" for e in self.blocked)
            lines.append(f"  blocked: {poly}")
        return "\n".join(line for line in lines if line)


def _dimension_entries(dims: dict[Bigrading, int]) -> list[DimensionEntry]:
    return [
        DimensionEntry(maslov=g.maslov, alexander=g.alexander, dimension=d)
        for g, d in sorted(dims.items())
        if d
    ]


class CheckResult(BaseModel):
    """
    Outcome of one named check.

    A check run on a sample of its generators or slices is reported as
    ``sampled`` with its coverage, never as ``verified``.
    """

    name: str = Field(..., description="Check name")
    status: CheckStatus = Field(..., description="Outcome")
    scale: int | None = Field(None, description="Diagram size")
    coverage: float | None = Field(None, ge=0.0, le=1.0, description="Checked fraction")
    detail: str = Field("", description="Free-form detail")

    @property
    def passed(self) -> bool:
        return self.status in (CheckStatus.VERIFIED, CheckStatus.SAMPLED, CheckStatus.SKIPPED)

    def to_text(self) -> str:
        parts = [f"{self.status.value:<8} {self.name}"]
        if self.scale is not None:
            parts.append(f"[{self.scale}x{self.scale}]")
        if self.coverage is not None and self.status is CheckStatus.SAMPLED:
            parts.append(f"coverage {self.coverage:.1%}")
        if self.detail:
            parts.append(f"- {self.detail}")
        return " ".join(parts)


class VerificationReport(BaseModel):
    """Checks run by one command, with the event log and any homology reports."""

    command: str = Field(..., description="Command that produced the report")
    checks: list[CheckResult] = Field(default_factory=list, description="Check outcomes")
    homology: list[HomologyReport] = Field(default_factory=list, description="Homology reports")
    extra: dict[str, Any] = Field(default_factory=dict, description="Command-specific data")
    log: VerificationLog = Field(default_factory=VerificationLog, description="Event log")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        event = "PASS" if result.passed else "FAIL"
        self.log.log_event(event, result.to_text(), check=result.name, scale=result.scale)
        return result

    def to_json(self) -> str:
        data = self.model_dump(mode="json")
        data["passed"] = self.passed
        return json.dumps(data, indent=2, sort_keys=True)

    def print_report(self) -> None:
        """Print the report in text form to stdout."""
        print("=" * 70)
        print(f"GRIDHOM {self.command.upper()}")
        print("=" * 70)
        for h in self.homology:
            print(h.to_text())
        for key, value in self.extra.items():
            print(f"{key}: {value}")
        if self.checks:
            print("-" * 70)
            for c in self.checks:
                print(c.to_text())
        print("-" * 70)
        self.log.print_log()
        print("RESULT:", "PASS" if self.passed else "FAIL")
