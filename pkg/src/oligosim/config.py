"""Reading and writing flat INI-style run configs and sweep specs.

A run config has a ``[simulation]`` section and one ``[firm.N]`` section per
firm, numbered from 1::

    [simulation]
    horizon = 30
    demand = 1.0
    seed = 0
    eps_price = 1e-12
    initial_prices = 0.5, 0.5
    price_process = iid_uniform      ; or random_walk
    p_min = 0.05
    step = 0.1                       ; random_walk only

    [firm.1]
    c = 0.2
    d = 0.8
    gamma_one = 0.7
    gamma_two = 0.6
    initial_buffer = 1.0

A sweep spec is a run config plus a ``[sweep]`` section with comma-separated
``gamma_one`` and ``gamma_two`` grids and a ``replicates`` count.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import replace
from pathlib import Path
from typing import Any, Callable, Optional, Union

from oligosim.economics import DEFAULT_EPS, FactorPrices, FirmParams
from oligosim.engine import (
    DEFAULT_GAMMA_ONE,
    DEFAULT_GAMMA_TWO,
    DEFAULT_INITIAL_BUFFER,
    IidUniform,
    RandomWalk,
    SimConfig,
)
from oligosim.experiments import DEFAULT_GRID, SweepSpec

PathLike = Union[str, Path]

_SIM_KEYS = {"horizon", "demand", "seed", "eps_price", "initial_prices", "price_process", "p_min", "step"}
_FIRM_KEYS = {"c", "d", "gamma_one", "gamma_two", "initial_buffer"}
_SWEEP_KEYS = {"gamma_one", "gamma_two", "replicates"}
_FIRM_SECTION = re.compile(r"^firm\.(\d+)$")


class ConfigError(ValueError):
    pass


def _parser() -> configparser.ConfigParser:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"), interpolation=None)
    parser.optionxform = str  # keys are case-sensitive field names
    return parser


def _get(section: configparser.SectionProxy, key: str, conv: Callable[[str], Any], default: Any = None) -> Any:
    if key not in section:
        if default is None:
            raise ConfigError(f"[{section.name}] missing required key '{key}'")
        return default
    raw = section[key]
    try:
        return conv(raw)
    except ValueError as exc:
        raise ConfigError(f"[{section.name}] {key} = {raw!r}: {exc}") from None


def _floats(raw: str) -> tuple[float, ...]:
    return tuple(float(x) for x in raw.split(",") if x.strip())


def _check_keys(section: configparser.SectionProxy, allowed: set[str]) -> None:
    unknown = sorted(set(section) - allowed)
    if unknown:
        raise ConfigError(f"[{section.name}] unknown keys: {', '.join(unknown)}")


def _sim_config(parser: configparser.ConfigParser, source: str) -> SimConfig:
    if not parser.has_section("simulation"):
        raise ConfigError(f"{source}: missing [simulation] section")
    sim = parser["simulation"]
    _check_keys(sim, _SIM_KEYS)

    firm_sections = []
    for name in parser.sections():
        m = _FIRM_SECTION.match(name)
        if m:
            firm_sections.append((int(m.group(1)), name))
        elif name not in ("simulation", "sweep"):
            raise ConfigError(f"{source}: unknown section [{name}]")
    firm_sections.sort()
    if not firm_sections:
        raise ConfigError(f"{source}: no [firm.N] sections")
    if [n for n, _ in firm_sections] != list(range(1, len(firm_sections) + 1)):
        raise ConfigError(f"{source}: firm sections must be numbered 1..N without gaps")

    try:
        firms = []
        for _, name in firm_sections:
            sec = parser[name]
            _check_keys(sec, _FIRM_KEYS)
            firms.append(
                FirmParams(
                    c=_get(sec, "c", float),
                    d=_get(sec, "d", float),
                    gamma_one=_get(sec, "gamma_one", float, DEFAULT_GAMMA_ONE),
                    gamma_two=_get(sec, "gamma_two", float, DEFAULT_GAMMA_TWO),
                    initial_buffer=_get(sec, "initial_buffer", float, DEFAULT_INITIAL_BUFFER),
                )
            )

        kind = _get(sim, "price_process", str, "iid_uniform")
        p_min = _get(sim, "p_min", float, 0.05)
        if kind == "iid_uniform":
            if "step" in sim:
                raise ConfigError("[simulation] 'step' only applies to price_process = random_walk")
            process: Union[IidUniform, RandomWalk] = IidUniform(p_min=p_min)
        elif kind == "random_walk":
            process = RandomWalk(step=_get(sim, "step", float), p_min=p_min)
        else:
            raise ConfigError(f"[simulation] unknown price_process {kind!r}")

        initial = _get(sim, "initial_prices", _floats, (0.5, 0.5))
        if len(initial) != 2:
            raise ConfigError("[simulation] initial_prices needs exactly two values")

        return SimConfig(
            firms=tuple(firms),
            horizon=_get(sim, "horizon", int, 30),
            demand=_get(sim, "demand", float, 1.0),
            seed=_get(sim, "seed", int, 0),
            price_process=process,
            eps_price=_get(sim, "eps_price", float, DEFAULT_EPS),
            initial_prices=FactorPrices(*initial),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{source}: {exc}") from None


def _read(path: PathLike) -> configparser.ConfigParser:
    parser = _parser()
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return parser


def parse_config(text: str, source: str = "<string>") -> SimConfig:
    parser = _parser()
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from None
    return _sim_config(parser, source)


def load_config(path: PathLike) -> SimConfig:
    return _sim_config(_read(path), str(path))


def load_sweep_spec(path: PathLike, seed: Optional[int] = None) -> SweepSpec:
    parser = _read(path)
    base = _sim_config(parser, str(path))
    if seed is not None:
        base = with_seed(base, seed)
    if not parser.has_section("sweep"):
        return SweepSpec(base=base)
    sec = parser["sweep"]
    _check_keys(sec, _SWEEP_KEYS)
    try:
        return SweepSpec(
            base=base,
            gamma_one=_get(sec, "gamma_one", _floats, DEFAULT_GRID),
            gamma_two=_get(sec, "gamma_two", _floats, DEFAULT_GRID),
            replicates=_get(sec, "replicates", int, 1000),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def with_seed(config: SimConfig, seed: Optional[int]) -> SimConfig:
    """``config`` with its seed replaced, as ``--seed`` does on the command line."""
    if seed is None:
        return config
    try:
        return replace(config, seed=seed)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def config_to_dict(config: SimConfig) -> dict[str, Any]:
    """Field-for-field echo of ``config``, the same keys the file format uses."""
    process = config.price_process
    sim: dict[str, Any] = {
        "horizon": config.horizon,
        "demand": config.demand,
        "seed": config.seed,
        "eps_price": config.eps_price,
        "initial_prices": [config.initial_prices.p1, config.initial_prices.p2],
        "price_process": "random_walk" if isinstance(process, RandomWalk) else "iid_uniform",
        "p_min": process.p_min,
    }
    if isinstance(process, RandomWalk):
        sim["step"] = process.step
    firms = [
        {
            "c": f.c,
            "d": f.d,
            "gamma_one": f.gamma_one,
            "gamma_two": f.gamma_two,
            "initial_buffer": f.initial_buffer,
        }
        for f in config.firms
    ]
    return {"simulation": sim, "firms": firms}


def format_config(config: SimConfig) -> str:
    """Render ``config`` in the file format read by :func:`load_config`."""
    echo = config_to_dict(config)
    lines = ["[simulation]"]
    for key, value in echo["simulation"].items():
        if isinstance(value, list):
            value = ", ".join(repr(v) for v in value)
        lines.append(f"{key} = {value!r}" if isinstance(value, float) else f"{key} = {value}")
    for n, firm in enumerate(echo["firms"], start=1):
        lines.append("")
        lines.append(f"[firm.{n}]")
        lines.extend(f"{key} = {value!r}" for key, value in firm.items())
    return "\n".join(lines) + "\n"
