"""Small result records shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a batch of related checks.

    ``checks`` counts the individual assertions performed; ``failures`` holds
    one human-readable line per failed assertion (empty when ``passed``).
    """

    name: str
    passed: bool
    checks: int
    failures: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict[str, object]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": list(self.failures),
        }
