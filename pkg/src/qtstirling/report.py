"""Pass/fail bookkeeping shared by the verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    statement: str
    passed: bool
    detail: str = ""

    def to_json_obj(self) -> dict:
        out = {"name": self.name, "statement": self.statement, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, statement: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, statement, bool(passed), detail))
        return bool(passed)

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json_obj(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "n_checks": len(self.checks),
            "n_failed": len(self.failures),
            "checks": [c.to_json_obj() for c in self.checks],
        }

    def render(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'} ({len(self.checks)} checks)"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  [{mark}] {c.name}: {c.statement}"
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
        return "\n".join(lines)
