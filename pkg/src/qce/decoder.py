"""Syndrome-conditioned sum-product decoding over a binary symmetric channel.

Only the syndrome s = H e is observed, so check node i enforces parity s[i]
instead of zero. Messages are log-likelihood ratios ln(P(bit=0)/P(bit=1));
the channel enters solely through the prior ln((1-p)/p) supplied per call.
Flooding schedule: all check updates, then all variable updates, then a hard
decision tested against s. Messages live in flat per-edge arrays plus one
padded (checks x max_degree) buffer, so an iteration is a handful of
vectorized passes over the edge list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gf2core import BitMatrix, BitVector

LLR_CLAMP = 30.0
DEFAULT_MAX_ITERS = 90


class TannerGraph:
    """Immutable bipartite adjacency of an LDPC matrix.

    check_adj[i, k] is the k-th variable on check i, valid where check_mask
    holds; edge arrays flatten that layout row-major, so edge order is
    (check, then column) and stable across calls.
    """

    def __init__(self, matrix: BitMatrix):
        self.matrix = matrix
        self.m = matrix.rows
        self.n = matrix.cols
        dense = matrix.to_dense()
        degrees = dense.sum(axis=1).astype(np.int64)
        dmax = int(degrees.max(initial=0))
        self.check_adj = np.zeros((self.m, max(dmax, 1)), dtype=np.int64)
        self.check_mask = np.zeros((self.m, max(dmax, 1)), dtype=bool)
        for i in range(self.m):
            cols = np.flatnonzero(dense[i])
            self.check_adj[i, : cols.size] = cols
            self.check_mask[i, : cols.size] = True
        self.edge_var = self.check_adj[self.check_mask]
        self.edge_check = np.repeat(np.arange(self.m), degrees)
        self.edge_count = int(self.edge_var.size)
        self.var_degrees = np.bincount(self.edge_var, minlength=self.n)
        for arr in (self.check_adj, self.check_mask, self.edge_var,
                    self.edge_check, self.var_degrees):
            arr.flags.writeable = False


@dataclass(frozen=True)
class DecodeResult:
    error_estimate: BitVector
    converged: bool
    iterations_used: int


def build_tanner(h: BitMatrix) -> TannerGraph:
    return TannerGraph(h)


def sum_product_decode(
    graph: TannerGraph,
    s: BitVector,
    prior_p: float,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> DecodeResult:
    """Infer the error pattern behind syndrome s under a BSC(prior_p) prior.

    Stops early once the hard decision reproduces s and is stable, meaning
    it equals the previous iteration's decision (the all-zero prior decision
    seeds the comparison). Matching alone is not enough: when every check is
    unsatisfied, the first iteration flips all variables of degree >= 2 at
    once, which can reproduce s transiently with far more flips than needed
    before the messages settle. After max_iters, converged reports whether
    the final decision reproduces s. Deterministic; ties at LLR 0 decide
    bit 0.
    """
    if s.length != graph.m:
        raise ValueError(f"syndrome length {s.length} does not match {graph.m} checks")
    if not 0.0 < prior_p < 0.5:
        raise ValueError("prior_p must satisfy 0 < prior_p < 1/2")
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")

    s_bits = s.to_bits().astype(np.int64)
    sign = (1.0 - 2.0 * s_bits)[:, None]
    prior = math.log((1.0 - prior_p) / prior_p)
    mask = graph.check_mask
    edge_var = graph.edge_var
    edge_check = graph.edge_check

    v2c = np.full(graph.edge_count, prior)
    tanh_buf = np.ones_like(mask, dtype=np.float64)
    prefix = np.empty_like(tanh_buf)
    suffix = np.empty_like(tanh_buf)

    prev_decision = np.zeros(graph.n, dtype=bool)
    matched = False
    for iteration in range(1, max_iters + 1):
        # check update: signed product of tanh(v2c/2) excluding each edge,
        # via exclusive prefix/suffix products along the padded rows
        tanh_buf[mask] = np.tanh(np.clip(v2c, -LLR_CLAMP, LLR_CLAMP) / 2.0)
        prefix[:, 0] = 1.0
        np.cumprod(tanh_buf[:, :-1], axis=1, out=prefix[:, 1:])
        suffix[:, -1] = 1.0
        np.cumprod(tanh_buf[:, :0:-1], axis=1, out=suffix[:, -2::-1])
        excl = (sign * prefix * suffix)[mask]
        c2v = 2.0 * np.arctanh(np.clip(excl, -1.0 + 1e-15, 1.0 - 1e-15))
        np.clip(c2v, -LLR_CLAMP, LLR_CLAMP, out=c2v)

        # variable update and hard decision
        posterior = prior + np.bincount(edge_var, weights=c2v, minlength=graph.n)
        v2c = posterior[edge_var] - c2v
        e_hat = posterior < 0.0

        parity = np.bincount(
            edge_check, weights=e_hat[edge_var], minlength=graph.m
        ).astype(np.int64) & 1
        matched = np.array_equal(parity, s_bits)
        if matched and np.array_equal(e_hat, prev_decision):
            return DecodeResult(
                BitVector.from_bits(e_hat.astype(np.uint8)), True, iteration
            )
        prev_decision = e_hat
    return DecodeResult(BitVector.from_bits(e_hat.astype(np.uint8)), matched, max_iters)
