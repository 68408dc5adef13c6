"""Small pass/fail report record shared by the identity verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one verification sweep.

    ``failures`` holds one human-readable line per failing index; an empty
    list means the check passed over the whole range.  ``detail`` carries
    conventions that were fixed up front (e.g. the Fibonacci indexing used).
    """

    name: str
    max_n: int
    failures: list[str] = field(default_factory=list)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "max_n": self.max_n,
            "passed": self.passed,
            "failures": list(self.failures),
            "detail": self.detail,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} (n <= {self.max_n})"
        if self.detail:
            line += f" [{self.detail}]"
        if self.failures:
            line += f": {len(self.failures)} failure(s), first: {self.failures[0]}"
        return line
