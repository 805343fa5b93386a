"""Result object returned by every ``verify_*`` routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of an identity check over a range of instances.

    ``checked`` lists one entry per instance (its parameters plus the two
    rendered sides); ``failures`` holds the subset that did not match.  A
    report is truthy exactly when every instance passed.
    """

    name: str
    checked: list[dict[str, Any]] = field(default_factory=list)
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def record(self, passed: bool, **info: Any) -> None:
        entry = dict(info, passed=passed)
        self.checked.append(entry)
        if not passed:
            self.failures.append(entry)

    def merge(self, other: Report) -> Report:
        self.checked.extend(other.checked)
        self.failures.extend(other.failures)
        return self

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {len(self.checked) - len(self.failures)}/{len(self.checked)} instances"
