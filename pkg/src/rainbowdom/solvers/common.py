from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from ..errors import InvalidParameter
from ..graphs import Graph
from ..rdf import RainbowAssignment, format_assignment, validate_krdf, weight


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    max_optima: Optional[int] = None

    def __post_init__(self):
        for name in ("max_nodes", "max_seconds", "max_optima"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise InvalidParameter(f"{name} must be positive, got {val}")


NO_LIMITS = SearchLimits()


@dataclass
class SolverResult:
    method: str  # "brute" | "branch-bound" | "transfer-dp"
    optimum: int
    witness: RainbowAssignment
    nodes: int
    elapsed: float
    exact: bool = True
    graph: Optional[Graph] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.graph is not None:
            report = validate_krdf(self.graph, self.witness)
            if not report.valid:
                raise AssertionError(f"{self.method} witness is not a rainbow dominating function: {report.violations}")
        if weight(self.witness) != self.optimum:
            raise AssertionError(f"{self.method} witness weight {weight(self.witness)} != optimum {self.optimum}")

    def to_dict(self):
        return {
            "method": self.method,
            "optimum": self.optimum,
            "witness": format_assignment(self.witness),
            "nodes": self.nodes,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "exact": self.exact,
        }


class Stopwatch:
    def __init__(self):
        self.start = time.perf_counter()

    def elapsed(self):
        return time.perf_counter() - self.start
