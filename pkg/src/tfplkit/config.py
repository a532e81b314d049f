"""Run configuration: defaults, then a JSON file, then environment, then flags."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Mapping

ENV_PREFIX = "TFPLKIT_"


@dataclass(frozen=True)
class Config:
    fpl_max_n: int = 7
    tfpl_max_n: int = 4
    puzzle_max_n: int = 5
    parallelism: int = 1
    output_dir: Path = Path("tfplkit-out")

    def __post_init__(self):
        for name in ("fpl_max_n", "tfpl_max_n", "puzzle_max_n", "parallelism"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be an integer >= 1, got {value!r}")
        object.__setattr__(self, "output_dir", Path(self.output_dir))

    def to_json(self) -> dict:
        data = asdict(self)
        data["output_dir"] = str(self.output_dir)
        return data


def _coerce(name: str, value):
    if name == "output_dir":
        return Path(value)
    return int(value)


def load_config(
    path: str | os.PathLike | None = None,
    env: Mapping[str, str] | None = None,
    **overrides,
) -> Config:
    """Build a :class:`Config`; later layers win and ``None`` overrides are ignored."""
    names = {f.name for f in fields(Config)}
    values: dict = {}
    if path is not None:
        with open(path) as fh:
            data = json.load(fh)
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown config keys in {path}: {sorted(unknown)}")
        values.update({k: _coerce(k, v) for k, v in data.items()})
    env = os.environ if env is None else env
    for name in names:
        key = ENV_PREFIX + name.upper()
        if key in env:
            values[name] = _coerce(name, env[key])
    for name, value in overrides.items():
        if name not in names:
            raise TypeError(f"unknown config field {name!r}")
        if value is not None:
            values[name] = _coerce(name, value)
    return replace(Config(), **values)
