"""Seeded error-vector sampling for binary symmetric and Pauli channels.

Every sampling call is a pure function of its RngStream, so trials can run
on any worker in any order without changing results. Stream indices are
derived by hashing experiment tags, keeping streams disjoint by construction.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .gf2core import BitVector

_U64 = 1 << 64


def derive_stream_index(*parts) -> int:
    """Stable 64-bit stream index from a tag tuple (e.g. ("mse", p, trial)).

    Uses blake2b over the reprs of the parts; repr of a float round-trips
    exactly, so distinct parameters map to distinct streams and the result
    does not depend on interpreter hash randomization.
    """
    payload = "\x1f".join(repr(part) for part in parts).encode()
    return int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "big")


@dataclass(frozen=True)
class RngStream:
    """A (master_seed, stream_index) pair that fully determines a sequence."""

    master_seed: int
    stream_index: int

    def __post_init__(self):
        for name in ("master_seed", "stream_index"):
            value = getattr(self, name)
            if not 0 <= value < _U64:
                raise ValueError(f"{name} must be a 64-bit unsigned integer")

    def generator(self) -> np.random.Generator:
        """Fresh generator; repeated calls replay the same sequence."""
        seq = np.random.SeedSequence([self.master_seed, self.stream_index])
        return np.random.default_rng(seq)


@dataclass(frozen=True)
class PauliChannelParams:
    """I/X/Y/Z probabilities of an i.i.d. single-qubit Pauli channel."""

    p_i: float
    p_x: float
    p_y: float
    p_z: float

    def __post_init__(self):
        probs = (self.p_i, self.p_x, self.p_y, self.p_z)
        if any(not 0.0 <= v <= 1.0 for v in probs):
            raise ValueError("Pauli probabilities must lie in [0, 1]")
        if abs(sum(probs) - 1.0) > 1e-12:
            raise ValueError("Pauli probabilities must sum to 1")
        # marginal flip rates must stay below 1/2 for the estimator to apply
        if self.p_x + self.p_y >= 0.5:
            raise ValueError("X marginal p_x + p_y must be < 1/2")
        if self.p_z + self.p_y >= 0.5:
            raise ValueError("Z marginal p_z + p_y must be < 1/2")

    @classmethod
    def depolarizing(cls, p: float) -> "PauliChannelParams":
        """Equal probability p/2 for each of X, Y, Z."""
        return cls(1.0 - 1.5 * p, 0.5 * p, 0.5 * p, 0.5 * p)


def sample_bsc_error(n: int, p: float, rng: RngStream) -> BitVector:
    """Length-n error vector with independent flips of probability p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p < 0.5:
        raise ValueError("flip probability must satisfy 0 <= p < 1/2")
    flips = rng.generator().random(n) < p
    return BitVector.from_bits(flips.astype(np.uint8))


def sample_pauli_errors(
    n: int, params: PauliChannelParams, rng: RngStream
) -> tuple[BitVector, BitVector]:
    """Draw I/X/Y/Z per position; returns (e_X, e_Z) with Y setting both."""
    if n < 1:
        raise ValueError("n must be >= 1")
    u = rng.generator().random(n)
    x_lo = params.p_i
    z_lo = params.p_i + params.p_x
    x_hi = z_lo + params.p_y
    e_x = (u >= x_lo) & (u < x_hi)
    e_z = u >= z_lo
    return (
        BitVector.from_bits(e_x.astype(np.uint8)),
        BitVector.from_bits(e_z.astype(np.uint8)),
    )
