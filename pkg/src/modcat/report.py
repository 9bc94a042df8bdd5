"""Verification report containers shared by the verify operations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str                  # the identity being checked, e.g. "s^2 = D^2 c"
    status: str                # "pass" | "fail" | "skipped"
    witness: str | None = None

    def to_json_obj(self):
        obj = {"name": self.name, "status": self.status}
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    duration_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def record(self, name: str, ok: bool, witness: str | None = None) -> None:
        self.checks.append(CheckResult(
            name, "pass" if ok else "fail", None if ok else witness))

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(CheckResult(name, "skipped", reason))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.duration_seconds += other.duration_seconds

    def to_json_obj(self):
        # wall-clock time stays out of the canonical output so that
        # exact-mode runs are byte-identical
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_json_obj() for c in self.checks],
        }

    def pretty_lines(self) -> list[str]:
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            mark = {"pass": "ok  ", "fail": "FAIL", "skipped": "skip"}[c.status]
            line = f"  [{mark}] {c.name}"
            if c.witness:
                line += f"  ({c.witness})"
            lines.append(line)
        verdict = "PASSED" if self.passed else "FAILED"
        lines.append(f"  => {verdict} in {self.duration_seconds:.2f}s")
        return lines
