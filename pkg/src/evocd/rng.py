"""Deterministic random-stream derivation.

Every stochastic operation in the package draws from an RngStream derived
from a master seed plus a path of purpose keys (strings or integers).  Two
streams built from the same key path are identical, independent of worker
count or scheduling, which is what makes parallel runs replayable.
"""

from __future__ import annotations

import zlib

import numpy as np


def _key_to_int(key) -> int:
    if isinstance(key, (int, np.integer)):
        return int(key) & 0xFFFFFFFF
    if isinstance(key, str):
        return zlib.crc32(key.encode("utf-8"))
    raise TypeError(f"rng key must be int or str, got {type(key).__name__}")


class RngStream:
    """A lazily-instantiated numpy Generator addressed by a key path."""

    __slots__ = ("path", "_gen")

    def __init__(self, seed, *keys):
        self.path = (int(seed),) + tuple(_key_to_int(k) for k in keys)
        self._gen = None

    def child(self, *keys) -> "RngStream":
        """Derive an independent stream; never shares state with self."""
        return RngStream(self.path[0], *self.path[1:], *keys)

    @property
    def generator(self) -> np.random.Generator:
        if self._gen is None:
            self._gen = np.random.default_rng(np.random.SeedSequence(self.path))
        return self._gen

    def __repr__(self):
        return f"RngStream{self.path}"
