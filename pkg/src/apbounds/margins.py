"""Margin-annotated inequality evaluations.

Every verification in this package reduces to comparisons of the form
lhs >= rhs (strict at equality).  A comparison "passes" only when the
margin lhs - rhs exceeds a relative slack guard, so that a verdict is
never the accident of float rounding: the guard scales with the size of
the two sides and floors at the absolute slack itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field

#: Module-wide relative slack: a margin must beat slack * max(|lhs|, |rhs|, 1).
DEFAULT_SLACK = 1e-9


def slack_threshold(lhs: float, rhs: float, slack: float = DEFAULT_SLACK) -> float:
    return slack * max(abs(lhs), abs(rhs), 1.0)


@dataclass(frozen=True)
class BoundEval:
    """One verified inequality, oriented as lhs >= rhs.

    margin and passed are derived from (lhs, rhs, slack) at construction;
    exact equality counts as a failure (the underlying inequalities are
    strict).
    """

    name: str
    lhs: float
    rhs: float
    slack: float = DEFAULT_SLACK
    margin: float = field(init=False)
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        margin = self.lhs - self.rhs
        object.__setattr__(self, "margin", margin)
        object.__setattr__(self, "passed", margin > slack_threshold(self.lhs, self.rhs, self.slack))

    def record(self, suite: str, inputs: dict) -> dict:
        """Serializable report row (the CLI's line format)."""
        return {
            "suite": suite,
            "name": self.name,
            "inputs": inputs,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "pass": self.passed,
        }


def all_passed(evals) -> bool:
    return all(e.passed for e in evals)
