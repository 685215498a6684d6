"""Verification config: typed flat ``key = value`` files plus CLI overrides.

Example file::

    # orders of the exact series identities
    split_order = 8
    inert_order = 10
    samples = 10
    seed = 20240611
    tol = 1e-6

Blank lines and ``#`` comments are ignored. Unknown keys and ill-typed values
are errors reported with their line number.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, fields
from pathlib import Path


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class VerifyConfig:
    split_order: int = 8
    inert_order: int = 10
    tensor_bound: int = 5
    sym_bound: int = 8
    branch_bound: int = 3
    char_bound: int = 4
    unipotent_bound: int = 20
    samples: int = 10
    q: int = 3
    s: float = 3.0
    z: float = 2.0
    terms: int = 60
    seed: int = 0
    tol: float = 1e-6
    out: str = ""
    timings: bool = False
    inject_fault: str = ""

    def __post_init__(self):
        if min(self.split_order, self.inert_order) < 1:
            raise ConfigError("truncation orders must be >= 1")
        if not self.tol > 0:
            raise ConfigError("tol must be positive")
        if self.samples < 1 or self.terms < 1:
            raise ConfigError("samples and terms must be >= 1")
        if self.q < 2:
            raise ConfigError("q must be >= 2")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        for name in ("tensor_bound", "sym_bound", "branch_bound", "char_bound", "unipotent_bound"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be >= 0")

    def echo(self) -> dict:
        """Config as a JSON-ready mapping; ``out`` is left out so reports don't depend on it."""
        d = dataclasses.asdict(self)
        d.pop("out")
        return d

    def replace(self, **changes) -> "VerifyConfig":
        return dataclasses.replace(self, **{k: v for k, v in changes.items() if v is not None})


_TYPES = {f.name: f.type for f in fields(VerifyConfig)}


def _convert(key: str, raw: str):
    kind = _TYPES[key]
    if kind == "int":
        return int(raw, 0)
    if kind == "float":
        return float(raw)
    if kind == "bool":
        low = raw.lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"not a boolean: {raw!r}")
    return raw


def parse_config_text(text: str, source: str = "<config>") -> dict:
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value'")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in _TYPES:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        try:
            values[key] = _convert(key, raw)
        except ValueError as exc:
            raise ConfigError(f"{source}:{lineno}: bad value for {key}: {exc}") from None
    return values


def load_config(path: str | Path | None = None, **overrides) -> VerifyConfig:
    base = {}
    if path is not None:
        p = Path(path)
        base = parse_config_text(p.read_text(encoding="utf-8"), str(p))
    base.update({k: v for k, v in overrides.items() if v is not None})
    return VerifyConfig(**base)
