"""Exergy-accounting forward simulator for EV and parallel HEV powertrains."""

from ._core import (
    Config,
    ConfigError,
    Cycle,
    IoError,
    ModelError,
    ParseError,
    Result,
    SimulationError,
    calibrate_heat_coefficient,
    ev_preset,
    hev_preset,
    load_config,
    load_cycle,
    run,
)

__all__ = [
    "Config",
    "ConfigError",
    "Cycle",
    "IoError",
    "ModelError",
    "ParseError",
    "Result",
    "SimulationError",
    "calibrate_heat_coefficient",
    "ev_preset",
    "hev_preset",
    "load_config",
    "load_cycle",
    "run",
]
