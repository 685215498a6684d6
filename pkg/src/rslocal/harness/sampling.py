"""Reproducible unit-modulus Satake samples.

Generator: numpy ``PCG64`` seeded through ``SeedSequence(seed)``; doubles come
from ``Generator.random()`` (top 53 bits of a 64-bit draw, times 2^-53), so
every angle is an exact dyadic rational. Split samples use the stream of
``seed``, inert samples that of ``seed + 1``. Each split sample draws 4 angles
and subtracts a quarter of their sum (exactly, in rationals), which makes the
eigenvalue product exactly 1 at the angle level. Each inert sample draws 2
free angles.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..satake import SatakeClassA3, SatakeClassC2


def _stream(kind: str, seed: int) -> np.random.Generator:
    offset = {"split": 0, "inert": 1}[kind]
    return np.random.Generator(np.random.PCG64((seed + offset) % 2 ** 64))


def sample_angles(kind: str, seed: int, count: int) -> list[tuple[Fraction, ...]]:
    if count < 1:
        raise ValueError("count must be at least 1")
    if kind not in ("split", "inert"):
        raise ValueError(f"kind must be 'split' or 'inert', got {kind!r}")
    rng = _stream(kind, seed)
    out = []
    for _ in range(count):
        if kind == "split":
            raw = [Fraction(rng.random()) for _ in range(4)]
            shift = sum(raw) / 4
            out.append(tuple(t - shift for t in raw))
        else:
            out.append(tuple(Fraction(rng.random()) for _ in range(2)))
    return out


def sample_satake(kind: str, seed: int, count: int) -> list[SatakeClassA3 | SatakeClassC2]:
    cls = SatakeClassA3 if kind == "split" else SatakeClassC2
    return [cls.from_angles(a) for a in sample_angles(kind, seed, count)]
