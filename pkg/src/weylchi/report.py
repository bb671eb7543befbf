"""Pass/fail reports produced by the invariant sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import Partition

Failure = tuple[Partition, Partition, str]


@dataclass
class VerificationReport:
    check_name: str
    pairs_tested: int
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures
