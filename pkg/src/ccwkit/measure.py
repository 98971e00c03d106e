"""Vertex-weight measures: non-negative weightings whose subgraph value is the
sum of vertex weights (monotone, subadditive, additive across disjoint parts)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Measure:
    weights: tuple[float, ...]

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("measure weights must be non-negative")

    @classmethod
    def uniform(cls, n: int) -> "Measure":
        return cls(weights=(1.0,) * n)

    def of(self, vertices: Iterable[int]) -> float:
        return sum(self.weights[v] for v in vertices)

    def total(self, n: int) -> float:
        if n != len(self.weights):
            raise ValueError("measure defined on a different vertex set")
        return sum(self.weights)

    @classmethod
    def from_list(cls, weights: Sequence[float]) -> "Measure":
        return cls(weights=tuple(float(w) for w in weights))
