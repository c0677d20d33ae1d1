"""Violation reporting shared by every checker in the package.

Checkers never raise on a broken law: they record one `Violation` per
failing instance and keep going, so a report doubles as a regression
diagnostic.  Exceptions are reserved for inputs that cannot even be
interpreted as a candidate structure (bad indices, mismatched bases,
wrong dimensions).
"""

from __future__ import annotations

from dataclasses import dataclass, field


class StructureError(ValueError):
    """Input is malformed or violates a checker precondition."""


class DimensionMismatch(StructureError):
    """Linear-map shapes are incompatible."""


class BoundExceeded(StructureError):
    """A guarded brute-force search was asked to exceed its size bound."""


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def line(self) -> str:
        inner = ",".join(str(part) for part in self.witness)
        text = f"FAIL axiom={self.axiom} witness=({inner})"
        if self.detail:
            text += f" {self.detail}"
        return text


@dataclass
class StructureReport:
    """Outcome of one checker run: the axioms swept and every violation found."""

    subject: str
    axioms: tuple[str, ...] = ()
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violations_for(self, axiom: str) -> list[Violation]:
        return [v for v in self.violations if v.axiom == axiom]

    def failed_axioms(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for v in self.violations:
            seen.setdefault(v.axiom, None)
        return tuple(seen)

    def fail(self, axiom: str, witness: tuple, detail: str = "") -> None:
        self.violations.append(Violation(axiom, witness, detail))

    def extend(self, other: "StructureReport") -> None:
        """Fold another report's axioms and violations into this one."""
        for tag in other.axioms:
            if tag not in self.axioms:
                self.axioms = self.axioms + (tag,)
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)


class InvalidStructureError(StructureError):
    """Eager validation failed; carries the offending report."""

    def __init__(self, report: StructureReport):
        self.report = report
        failed = ", ".join(report.failed_axioms())
        super().__init__(f"{report.subject}: violations in {failed}")


def format_report(report: StructureReport, only: str | None = None) -> str:
    """Stable, diff-friendly text: one PASS/FAIL line per check and a summary.

    `only` restricts output (and the summary count) to a single axiom tag.
    """
    lines = [f"== {report.subject}"]
    tags = [t for t in report.axioms if only is None or t == only]
    shown = 0
    for tag in tags:
        bad = report.violations_for(tag)
        if not bad:
            lines.append(f"PASS axiom={tag}")
        for v in bad:
            lines.append(v.line())
            shown += 1
    if only is None:
        for note in report.notes:
            lines.append(f"note: {note}")
    verdict = "PASS" if shown == 0 else "FAIL"
    lines.append(f"{verdict} {shown} violations")
    return "\n".join(lines) + "\n"


def report_as_document(report: StructureReport, only: str | None = None) -> dict:
    """Machine-readable mirror of `format_report` (consumed by the CLI)."""
    tags = [t for t in report.axioms if only is None or t == only]
    shown = [
        {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
        for v in report.violations
        if only is None or v.axiom == only
    ]
    return {
        "subject": report.subject,
        "axioms": tags,
        "violations": shown,
        "notes": list(report.notes) if only is None else [],
        "ok": not shown,
    }
