"""Cobb-Douglas technology, cost-based pricing and the production response rule.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

DEFAULT_EPS = 1e-12
_HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class FirmParams:
    """Technology and behaviour of one firm.

    ``c`` and ``d`` are the capital and labour exponents (constant returns,
    so ``c + d == 1``). ``gamma_one`` scales expansion after a cost fall,
    ``gamma_two`` scales contraction after a cost rise.
    """

    c: float
    d: float
    gamma_one: float = 0.0
    gamma_two: float = 0.0
    initial_buffer: float = 0.0

    def __post_init__(self) -> None:
        if not (0.0 < self.c < 1.0 and 0.0 < self.d < 1.0):
            raise ValueError(f"exponents must lie in (0, 1), got c={self.c}, d={self.d}")
        if abs(self.c + self.d - 1.0) > 1e-12:
            raise ValueError(f"c + d must equal 1, got {self.c + self.d!r}")
        if self.gamma_one < 0.0 or self.gamma_two < 0.0:
            raise ValueError("reaction sensitivities must be non-negative")
        if self.initial_buffer < 0.0:
            raise ValueError("initial_buffer must be non-negative")

    @classmethod
    def from_capital_share(cls, c: float, **kwargs: float) -> "FirmParams":
        return cls(c=c, d=1.0 - c, **kwargs)


@dataclass(frozen=True)
class FactorPrices:
    """Normalised capital/labour prices for one interval."""

    p1: float
    p2: float

    def __post_init__(self) -> None:
        if not (self.p1 > 0.0 and self.p2 > 0.0):
            raise ValueError(f"factor prices must be positive, got ({self.p1}, {self.p2})")
        if abs(self.p1 + self.p2 - 1.0) > 1e-12:
            raise ValueError(f"factor prices must sum to 1, got {self.p1 + self.p2!r}")

    @classmethod
    def from_capital(cls, p1: float) -> "FactorPrices":
        return cls(p1=p1, p2=1.0 - p1)


class PriceMove(enum.Enum):
    LOWERED = "lowered"
    RAISED = "raised"
    UNCHANGED = "unchanged"


def output(x1: float, x2: float, params: FirmParams) -> float:
    """Cobb-Douglas output ``x1**c * x2**d``."""
    if x1 < 0.0 or x2 < 0.0:
        raise ValueError(f"factor quantities must be non-negative, got ({x1}, {x2})")
    return x1**params.c * x2**params.d


def factor_demands(y: float, prices: FactorPrices, params: FirmParams) -> tuple[float, float]:
    """Cost-minimising (capital, labour) bundle that produces ``y``."""
    if y < 0.0:
        raise ValueError(f"target output must be non-negative, got {y}")
    c, d = params.c, params.d
    ratio = (c * prices.p2) / (d * prices.p1)
    return y * ratio**d, y / ratio**c


def cobb_douglas_unit_cost(p1: float, p2: float, c: float, d: float) -> float:
    """Unit cost ``(p1/c)**c * (p2/d)**d`` for arbitrary positive prices.

    Unlike :func:`unit_cost` this does not require ``p1 + p2 == 1``.
    """
    return 1.0 / ((c / p1) ** c * (d / p2) ** d)


def unit_cost(prices: FactorPrices, params: FirmParams) -> float:
    """Selling price of a firm that prices at minimum unit cost."""
    return cobb_douglas_unit_cost(prices.p1, prices.p2, params.c, params.d)


def classify_price_move(p_new: float, p_old: float, eps: float = DEFAULT_EPS) -> PriceMove:
    if abs(p_new - p_old) <= eps:
        return PriceMove.UNCHANGED
    if p_new < p_old:
        return PriceMove.LOWERED
    return PriceMove.RAISED


def response_multiplier(
    p_old: float, p_new: float, gamma_one: float, gamma_two: float, eps: float = DEFAULT_EPS
) -> float:
    gap = p_old - p_new
    if abs(gap) <= eps:
        return 1.0
    gamma = gamma_one if gap > 0.0 else gamma_two
    return 1.0 + gamma * math.atan(gap) / _HALF_PI


def production_response(
    y_old: float,
    p_old: float,
    p_new: float,
    params: FirmParams,
    eps: float = DEFAULT_EPS,
) -> float:
    """New production level after the selling price moved from ``p_old`` to ``p_new``.

    A lower price scales output up by ``gamma_one``, a higher price scales it
    down by ``gamma_two``, both through ``atan(p_old - p_new) / (pi/2)``.
    Output is clamped at zero when ``gamma_two > 1`` would make it negative.
    """
    if y_old < 0.0:
        raise ValueError(f"production must be non-negative, got {y_old}")
    m = response_multiplier(p_old, p_new, params.gamma_one, params.gamma_two, eps)
    return max(0.0, y_old * m)
