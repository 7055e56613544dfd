"""Flat ``key = value`` run configuration.

One assignment per line, ``#`` starts a comment. Angles may be plain radians
or multiples/fractions of pi (``pi/6``, ``-3*pi/4``, ``2pi/3``).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, fields, replace

COMMANDS = ("spectrum", "probabilities", "neutrino-scan", "verify")
FORMATS = ("csv", "json")

_PI_RE = re.compile(
    r"^(?P<coef>[+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?$"
)


class ConfigError(ValueError):
    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key


def parse_angle(text: str) -> float:
    s = text.strip().lower()
    m = _PI_RE.match(s)
    if m:
        coef = m.group("coef")
        value = math.pi * (float(coef) if coef not in ("", "+", "-") else float(coef + "1"))
        if m.group("den"):
            value /= float(m.group("den"))
        return value
    return float(s)


@dataclass(frozen=True)
class Grid:
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("grid count must be at least 1")
        if self.count > 1 and not self.stop > self.start:
            raise ValueError("grid must be increasing (stop > start)")

    @classmethod
    def parse(cls, text: str) -> "Grid":
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError("grid must look like start:stop:count")
        return cls(float(parts[0]), float(parts[1]), int(parts[2]))

    def __str__(self) -> str:
        return f"{self.start!r}:{self.stop!r}:{self.count}"

    def points(self):
        import numpy as np

        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class RunConfig:
    command: str = "spectrum"
    rho: float = 0.0
    sigma: float = 0.0
    varphi: float = 0.0
    phi_offdiag: float = 0.0
    dm2: float = 2.5e-3
    m2_bar: float = 0.0
    energy: float = 1.0
    alpha_prime: tuple[float, ...] = ()
    grid: Grid | None = None
    format: str = "csv"
    out: str | None = None
    tolerance: float | None = None
    draws: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError("command", f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ConfigError("format", f"must be one of {', '.join(FORMATS)}")
        for key in ("rho", "sigma", "varphi", "phi_offdiag", "dm2", "m2_bar", "energy"):
            if not math.isfinite(getattr(self, key)):
                raise ConfigError(key, "must be finite")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ConfigError("tolerance", "must be positive")
        if self.draws < 1:
            raise ConfigError("draws", "must be at least 1")

    def to_text(self) -> str:
        default = RunConfig()
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name != "command" and value == getattr(default, f.name):
                continue
            lines.append(f"{f.name} = {_format_value(f.name, value)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        return cls.from_mapping(parse_pairs(text))

    @classmethod
    def from_mapping(cls, raw: dict[str, str], base: "RunConfig | None" = None) -> "RunConfig":
        values = {}
        for key, text in raw.items():
            if key not in _PARSERS:
                raise ConfigError(key, "unknown key")
            try:
                values[key] = _PARSERS[key](text)
            except ConfigError:
                raise
            except (TypeError, ValueError) as exc:
                raise ConfigError(key, f"cannot parse {text!r} ({exc})") from None
        if base is None:
            return cls(**values)
        return replace(base, **values)


def parse_pairs(text: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}", f"expected 'key = value', got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        pairs[key.replace("-", "_")] = value
    return pairs


def _parse_optional_str(text: str):
    return text or None


_PARSERS = {
    "command": str.strip,
    "rho": float,
    "sigma": float,
    "varphi": parse_angle,
    "phi_offdiag": parse_angle,
    "dm2": float,
    "m2_bar": float,
    "energy": float,
    "alpha_prime": lambda s: tuple(parse_angle(x) for x in s.split(",") if x.strip()),
    "grid": Grid.parse,
    "format": str.strip,
    "out": _parse_optional_str,
    "tolerance": float,
    "draws": int,
    "seed": int,
}


def _format_value(name: str, value) -> str:
    if name == "alpha_prime":
        return ", ".join(repr(float(v)) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)
