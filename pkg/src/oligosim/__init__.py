"""Evolutionary oligopoly simulator with short-side market clearing."""

from oligosim.economics import (
    FactorPrices,
    FirmParams,
    PriceMove,
    classify_price_move,
    factor_demands,
    output,
    production_response,
    unit_cost,
)
from oligosim.engine import (
    IidUniform,
    RandomWalk,
    RunResult,
    SimConfig,
    init_state,
    next_prices,
    paper_firms,
    run,
    step,
)
from oligosim.market import ClearingResult, clear

__version__ = "0.1.0"

__all__ = [
    "ClearingResult",
    "FactorPrices",
    "FirmParams",
    "IidUniform",
    "PriceMove",
    "RandomWalk",
    "RunResult",
    "SimConfig",
    "classify_price_move",
    "clear",
    "factor_demands",
    "init_state",
    "next_prices",
    "output",
    "paper_firms",
    "production_response",
    "run",
    "step",
    "unit_cost",
]
