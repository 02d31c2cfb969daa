"""Short-side clearing of a single interval with free disposal."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ClearingResult:
    sales: tuple[float, ...]
    excess: tuple[float, ...]
    shares: tuple[float, ...]
    total_excess: float
    unmet_demand: float


def clear(productions: Sequence[float], demand: float) -> ClearingResult:
    """Allocate a fixed demand across firm outputs.

    When supply exceeds demand every firm is rationed in proportion to its
    output and the surplus is disposed of; otherwise everything sells and the
    shortfall is reported as unmet demand. Shares are output-proportional
    (``1/N`` each when nothing is produced).
    """
    if not productions:
        raise ValueError("at least one firm is required")
    if demand < 0.0:
        raise ValueError(f"demand must be non-negative, got {demand}")
    for i, y in enumerate(productions):
        if y < 0.0:
            raise ValueError(f"production of firm {i} is negative: {y}")

    n = len(productions)
    supply = sum(productions)
    if supply == 0.0:
        zeros = (0.0,) * n
        return ClearingResult(zeros, zeros, (1.0 / n,) * n, 0.0, demand)

    shares = tuple(y / supply for y in productions)
    if supply <= demand:
        return ClearingResult(
            sales=tuple(productions),
            excess=(0.0,) * n,
            shares=shares,
            total_excess=0.0,
            unmet_demand=demand - supply,
        )

    ratio = demand / supply
    sales = tuple(y * ratio for y in productions)
    excess = tuple(y - s for y, s in zip(productions, sales))
    return ClearingResult(
        sales=sales,
        excess=excess,
        shares=shares,
        total_excess=supply - demand,
        unmet_demand=0.0,
    )
