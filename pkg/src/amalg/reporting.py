"""Pass/fail records shared by the verifiers and the command line front end."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of a single named check on a single instance."""

    check: str
    instance: str
    ok: bool
    witness: str | None = None


@dataclass(frozen=True)
class Report:
    """An ordered bundle of check records."""

    records: tuple[CheckRecord, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def first_failure(self) -> CheckRecord | None:
        for r in self.records:
            if not r.ok:
                return r
        return None

    def __add__(self, other: "Report") -> "Report":
        return Report(self.records + other.records)
