"""Construction, diagnostics, and serialization of dual-containing LDPC codes.

The construction builds H0 = [C | C^T] from an M x M circulant C (M = n/2)
whose first row has weight r/2. Circulants are polynomials in the cyclic
shift, so C C^T = C^T C and H0 H0^T = 2 C C^T = 0 over GF(2) for any choice
of first row; dual-containment survives row deletion, which brings the row
count down to the requested syndrome length.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2core import BitMatrix, gf2_rank, is_self_orthogonal

MAX_CONSTRUCTION_ATTEMPTS = 32


class ConstructionError(RuntimeError):
    """No full-rank matrix found within the retry budget."""


class AlistFormatError(ValueError):
    """Malformed alist input; the message names the offending line."""


@dataclass(frozen=True)
class CodeSpec:
    """Parameters of a dual-containing parity-check matrix."""

    n: int
    m_target: int
    row_weight: int
    seed: int

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError("n must be an even integer >= 2")
        if self.row_weight < 2 or self.row_weight % 2 != 0:
            # odd row weight has odd self-overlap, so H H^T = 0 is impossible
            raise ValueError("row_weight must be an even integer >= 2")
        if self.row_weight // 2 > self.n // 2:
            raise ValueError("row_weight/2 cannot exceed n/2 distinct positions")
        if not 1 <= self.m_target <= self.n // 2:
            raise ValueError("m_target must satisfy 1 <= m_target < n/2 + 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class MatrixDiagnostics:
    row_weights: dict
    col_weights: dict
    mean_col_weight: float
    max_pairwise_row_overlap: int
    num_overlapping_row_pairs: int
    rank: int
    self_orthogonal: bool


def _pick_circulant_positions(rng: np.random.Generator, m_circ: int, count: int):
    """Choose `count` distinct shifts whose pairwise differences repeat as
    little as possible (repeated differences become row overlaps above 2)."""
    positions: list[int] = []
    used_diffs: set[int] = set()
    leftovers: list[int] = []
    for cand in rng.permutation(m_circ):
        cand = int(cand)
        new_diffs = []
        for x in positions:
            new_diffs.append((cand - x) % m_circ)
            new_diffs.append((x - cand) % m_circ)
        if len(set(new_diffs)) == len(new_diffs) and not used_diffs.intersection(
            new_diffs
        ):
            positions.append(cand)
            used_diffs.update(new_diffs)
            if len(positions) == count:
                return positions
        else:
            leftovers.append(cand)
    # difference-free placement impossible; fill with remaining shifts
    positions.extend(leftovers[: count - len(positions)])
    return positions


def _evenly_spaced_deletions(m_circ: int, delete_count: int) -> set:
    return {(k * m_circ) // delete_count for k in range(delete_count)}


def construct_dual_containing_ldpc(spec: CodeSpec) -> BitMatrix:
    """Build an m_target x n matrix with uniform row weight, H H^T = 0, and
    full row rank. Retries with derived seeds on rank deficiency.

    Raises ConstructionError after MAX_CONSTRUCTION_ATTEMPTS failures.
    """
    m_circ = spec.n // 2
    half_weight = spec.row_weight // 2
    delete_count = m_circ - spec.m_target
    if delete_count:
        keep = np.array(
            sorted(set(range(m_circ)) - _evenly_spaced_deletions(m_circ, delete_count))
        )
    else:
        keep = np.arange(m_circ)

    for attempt in range(MAX_CONSTRUCTION_ATTEMPTS):
        rng = np.random.default_rng(np.random.SeedSequence([spec.seed, attempt]))
        positions = np.array(_pick_circulant_positions(rng, m_circ, half_weight))
        dense = np.zeros((spec.m_target, spec.n), dtype=np.uint8)
        for out_row, shift in enumerate(keep):
            dense[out_row, (positions + shift) % m_circ] = 1
            dense[out_row, m_circ + ((shift - positions) % m_circ)] = 1
        h = BitMatrix.from_dense(dense)
        if gf2_rank(h) == spec.m_target:
            return h
    raise ConstructionError(
        f"no full-rank matrix for {spec} after {MAX_CONSTRUCTION_ATTEMPTS} attempts"
    )


def matrix_diagnostics(h: BitMatrix) -> MatrixDiagnostics:
    """Structural counts governing estimator and decoder quality."""
    row_w = np.bitwise_count(h.words).sum(axis=1).astype(int)
    col_w = h.to_dense().sum(axis=0).astype(int)
    max_overlap = 0
    overlapping_pairs = 0
    for i in range(h.rows - 1):
        overlaps = np.bitwise_count(h.words[i + 1 :] & h.words[i]).sum(axis=1)
        if overlaps.size:
            max_overlap = max(max_overlap, int(overlaps.max()))
            overlapping_pairs += int((overlaps > 0).sum())
    return MatrixDiagnostics(
        row_weights=_histogram(row_w),
        col_weights=_histogram(col_w),
        mean_col_weight=float(col_w.mean()),
        max_pairwise_row_overlap=max_overlap,
        num_overlapping_row_pairs=overlapping_pairs,
        rank=gf2_rank(h),
        self_orthogonal=is_self_orthogonal(h),
    )


def _histogram(values) -> dict:
    keys, counts = np.unique(values, return_counts=True)
    return {int(k): int(c) for k, c in zip(keys, counts)}


def write_alist(h: BitMatrix, path) -> None:
    """Write the matrix as an alist text file.

    Layout: "n m", "max_col_weight max_row_weight", the n column weights, the
    m row weights, then n lines of 1-based row indices (one line per column)
    and m lines of 1-based column indices (one line per row), unpadded.
    """
    dense = h.to_dense()
    cols = [np.flatnonzero(dense[:, j]) + 1 for j in range(h.cols)]
    rows = [np.flatnonzero(dense[i]) + 1 for i in range(h.rows)]
    col_w = [c.size for c in cols]
    row_w = [r.size for r in rows]
    lines = [
        f"{h.cols} {h.rows}",
        f"{max(col_w)} {max(row_w)}",
        " ".join(map(str, col_w)),
        " ".join(map(str, row_w)),
    ]
    lines.extend(" ".join(map(str, c)) for c in cols)
    lines.extend(" ".join(map(str, r)) for r in rows)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_ints(line: str, lineno: int, what: str) -> list:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise AlistFormatError(f"line {lineno}: {what} must be integers") from None


def read_alist(path) -> BitMatrix:
    """Parse an alist file written by write_alist; inverse of it exactly."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if len(lines) < 4:
        raise AlistFormatError("line 1: file truncated, expected header lines")
    header = _parse_ints(lines[0], 1, "dimensions")
    if len(header) != 2:
        raise AlistFormatError("line 1: expected exactly 'n m'")
    n, m = header
    if n < 1 or m < 1:
        raise AlistFormatError("line 1: dimensions must be >= 1")
    maxes = _parse_ints(lines[1], 2, "max weights")
    if len(maxes) != 2:
        raise AlistFormatError("line 2: expected exactly 'max_col max_row'")
    col_w = _parse_ints(lines[2], 3, "column weights")
    if len(col_w) != n:
        raise AlistFormatError(f"line 3: expected {n} column weights, got {len(col_w)}")
    row_w = _parse_ints(lines[3], 4, "row weights")
    if len(row_w) != m:
        raise AlistFormatError(f"line 4: expected {m} row weights, got {len(row_w)}")
    if any(w < 0 or w > m for w in col_w):
        raise AlistFormatError("line 3: column weight out of range")
    if any(w < 0 or w > n for w in row_w):
        raise AlistFormatError("line 4: row weight out of range")
    if sum(col_w) != sum(row_w):
        raise AlistFormatError("line 4: row weights and column weights disagree in total")
    if maxes[0] != max(col_w) or maxes[1] != max(row_w):
        raise AlistFormatError("line 2: declared max weights do not match weight lists")
    expected = 4 + n + m
    if len(lines) != expected:
        if len(lines) < expected:
            raise AlistFormatError(f"line {len(lines) + 1}: file truncated, expected {expected} lines")
        raise AlistFormatError(f"line {expected + 1}: unexpected trailing content")

    dense = np.zeros((m, n), dtype=np.uint8)
    for j in range(n):
        lineno = 5 + j
        idx = _parse_ints(lines[4 + j], lineno, "row indices")
        if len(idx) != col_w[j]:
            raise AlistFormatError(
                f"line {lineno}: column {j + 1} declares weight {col_w[j]} "
                f"but lists {len(idx)} indices"
            )
        if len(set(idx)) != len(idx):
            raise AlistFormatError(f"line {lineno}: duplicate index")
        for i in idx:
            if not 1 <= i <= m:
                raise AlistFormatError(f"line {lineno}: row index {i} out of range")
            dense[i - 1, j] = 1
    for i in range(m):
        lineno = 5 + n + i
        idx = _parse_ints(lines[4 + n + i], lineno, "column indices")
        if len(idx) != row_w[i]:
            raise AlistFormatError(
                f"line {lineno}: row {i + 1} declares weight {row_w[i]} "
                f"but lists {len(idx)} indices"
            )
        if any(not 1 <= j <= n for j in idx):
            raise AlistFormatError(f"line {lineno}: column index out of range")
        listed = np.zeros(n, dtype=np.uint8)
        listed[[j - 1 for j in idx]] = 1
        if not np.array_equal(listed, dense[i]):
            raise AlistFormatError(
                f"line {lineno}: row {i + 1} disagrees with the column lists"
            )
    return BitMatrix.from_dense(dense)
