"""Outcome of a verification routine."""

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class CheckResult:
    """Result of a named check; failures carry a diagnostic instead of raising."""
    name: str
    success: bool
    output: Any = None
    error: Optional[str] = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.success


def combine(name: str, results: list[CheckResult]) -> CheckResult:
    """Aggregate several checks; the failures' diagnostics are joined."""
    failures = [r for r in results if not r.success]
    return CheckResult(
        name=name,
        success=not failures,
        output=results,
        error="; ".join(f"{r.name}: {r.error}" for r in failures) or None,
        metadata={"passed": len(results) - len(failures), "total": len(results)},
    )
