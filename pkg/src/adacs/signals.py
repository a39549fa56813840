"""Ground-truth signal type, head/tail decompositions and error metrics.

A signal is a dense float64 vector ``x`` of length ``n``.  Support sets are
sorted int64 arrays of unique coordinates in ``[0, n)``.  All operations here
are pure functions of their inputs and are safe to share across threads.

Norm accumulations switch to compensated summation (``math.fsum``) once the
vector is 2**20 entries or longer, so large scaling experiments reproduce
bit-for-bit instead of drifting with the reduction order.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

_FSUM_THRESHOLD = 1 << 20


def as_signal(values) -> np.ndarray:
    """Validate and return a dense float64 signal vector."""
    x = np.asarray(values, dtype=np.float64)
    if x.ndim != 1 or x.size < 1:
        raise ValueError("signal must be a 1-d vector with n >= 1")
    if not np.all(np.isfinite(x)):
        raise ValueError("signal entries must be finite")
    return x


def as_support(indices, n: int) -> np.ndarray:
    """Validate a coordinate set: unique, sorted, in [0, n)."""
    s = np.asarray(indices, dtype=np.int64).ravel()
    if s.size == 0:
        return s
    s = np.unique(s)
    if s[0] < 0 or s[-1] >= n:
        raise ValueError(f"support indices out of range [0, {n})")
    return s


def _stable_sum(a: np.ndarray) -> float:
    if a.size >= _FSUM_THRESHOLD:
        return math.fsum(a.tolist())
    return float(np.sum(a))


def pnorm(v: np.ndarray, p: float) -> float:
    """(sum |v_i|^p)^(1/p) with stable accumulation, p in (0, 2]."""
    if v.size == 0:
        return 0.0
    a = np.abs(np.asarray(v, dtype=np.float64))
    if p == 2.0:
        return math.sqrt(_stable_sum(a * a))
    if p == 1.0:
        return _stable_sum(a)
    return _stable_sum(a**p) ** (1.0 / p)


def pnorm_pow(v: np.ndarray, p: float) -> float:
    """sum |v_i|^p (the p-th power of pnorm)."""
    if v.size == 0:
        return 0.0
    a = np.abs(np.asarray(v, dtype=np.float64))
    return _stable_sum(a**p)


@dataclass(frozen=True)
class SparseEstimate:
    """Sparse estimate as (coordinates, values) over an ambient dimension n."""

    coords: np.ndarray
    values: np.ndarray
    n: int

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=np.int64).ravel()
        v = np.asarray(self.values, dtype=np.float64).ravel()
        if c.size != v.size:
            raise ValueError("coords and values must align")
        if c.size:
            order = np.argsort(c, kind="stable")
            c = c[order]
            v = v[order]
            if np.any(np.diff(c) == 0):
                raise ValueError("duplicate coordinates in sparse estimate")
            if c[0] < 0 or c[-1] >= self.n:
                raise ValueError("coordinate out of range")
        object.__setattr__(self, "coords", c)
        object.__setattr__(self, "values", v)

    @staticmethod
    def empty(n: int) -> "SparseEstimate":
        return SparseEstimate(np.empty(0, np.int64), np.empty(0, np.float64), n)

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.float64)
        out[self.coords] = self.values
        return out

    def support(self) -> np.ndarray:
        return self.coords.copy()

    @property
    def nnz(self) -> int:
        return int(self.coords.size)


def top_k_support(x: np.ndarray, k: int) -> np.ndarray:
    """Indices of the k largest-magnitude coordinates, ties to lowest index.

    k > n clamps to n; the result is sorted ascending.
    """
    x = np.asarray(x, dtype=np.float64)
    k = max(0, min(int(k), x.size))
    if k == 0:
        return np.empty(0, dtype=np.int64)
    order = np.argsort(-np.abs(x), kind="stable")
    return np.sort(order[:k]).astype(np.int64)


def tail_norm(x: np.ndarray, k: int, p: float) -> float:
    """p-norm of x with its k largest-magnitude coordinates zeroed out."""
    if p <= 0:
        raise ValueError("p must be positive")
    x = np.asarray(x, dtype=np.float64)
    k = max(0, min(int(k), x.size))
    if k == x.size:
        return 0.0
    a = np.sort(np.abs(x))  # ascending; tail = all but the top k
    tail = a[: x.size - k]
    return pnorm(tail, p)


def head_tail_split(x: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """(head, tail) dense vectors: head keeps H_k(x), tail the rest."""
    head_idx = top_k_support(x, k)
    head = np.zeros_like(x)
    head[head_idx] = x[head_idx]
    return head, x - head


def heavy_set(x: np.ndarray, k: int, eps: float) -> np.ndarray:
    """All coordinates with x_i^2 >= (eps/k) * ||x_{-k}||_2^2.

    Squared-amplitude threshold; k = 0 uses the full energy as tail. When the
    tail is zero every nonzero coordinate qualifies.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    x = np.asarray(x, dtype=np.float64)
    k = max(0, min(int(k), x.size))
    t2 = tail_norm(x, k, 2.0) ** 2
    kk = max(k, 1)
    thr = (eps / kk) * t2
    if thr == 0.0:
        return np.flatnonzero(x != 0.0).astype(np.int64)
    return np.flatnonzero(x * x >= thr).astype(np.int64)


def error_ratio(x: np.ndarray, xhat: SparseEstimate, k: int, p: float) -> float:
    """||x - xhat||_p / ||x_{-k}||_p with 0/0 -> 0 and c/0 -> inf."""
    x = np.asarray(x, dtype=np.float64)
    num = pnorm(x - xhat.to_dense(), p)
    den = tail_norm(x, k, p)
    if den == 0.0:
        return 0.0 if num == 0.0 else math.inf
    return num / den


def linf_error(x: np.ndarray, xhat: SparseEstimate) -> float:
    diff = np.abs(x - xhat.to_dense())
    return float(diff.max()) if diff.size else 0.0


def subsample_indices(universe: np.ndarray, prob: float, rng: np.random.Generator) -> np.ndarray:
    """Independent Bernoulli(prob) subsample of a coordinate set.

    Deterministic given the generator state.  Dense mask for moderate rates,
    geometric gap-skipping for sparse rates (identical Bernoulli law, O(m)
    draws instead of O(|universe|)).
    """
    if not 0.0 <= prob <= 1.0:
        raise ValueError("prob must lie in [0, 1]")
    universe = np.asarray(universe, dtype=np.int64)
    m = universe.size
    if m == 0 or prob == 0.0:
        return np.empty(0, dtype=np.int64)
    if prob == 1.0:
        return universe.copy()
    if prob >= 0.02:
        mask = rng.random(m) < prob
        return universe[mask]
    # gap sampling: positions are cumulative geometric(prob) jumps
    picked = []
    pos = -1
    # expected picks ~ m * prob; draw in blocks to stay vectorized
    block = max(16, int(m * prob * 1.5) + 16)
    while True:
        gaps = rng.geometric(prob, size=block)
        steps = np.cumsum(gaps)
        hits = pos + steps
        inside = hits[hits < m]
        picked.append(inside)
        if inside.size < hits.size:
            break
        pos = int(hits[-1])
    idx = np.concatenate(picked) if picked else np.empty(0, np.int64)
    return universe[idx]


# ---------------------------------------------------------------------------
# serialization: flat little-endian float64 with an 8-byte length header,
# plus a one-value-per-line text format for small fixtures.

_HEADER = struct.Struct("<Q")


def save_signal(x: np.ndarray, path: str) -> None:
    x = as_signal(x)
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(x.size))
        fh.write(x.astype("<f8").tobytes())


def load_signal(path: str) -> np.ndarray:
    with open(path, "rb") as fh:
        raw = fh.read(_HEADER.size)
        if len(raw) != _HEADER.size:
            raise ValueError("truncated signal header")
        (n,) = _HEADER.unpack(raw)
        body = fh.read(8 * n)
        if len(body) != 8 * n:
            raise ValueError("truncated signal body")
        return np.frombuffer(body, dtype="<f8").astype(np.float64)


def save_signal_text(x: np.ndarray, path: str) -> None:
    x = as_signal(x)
    with open(path, "w") as fh:
        for v in x:
            fh.write(repr(float(v)) + "\n")


def load_signal_text(path: str) -> np.ndarray:
    with open(path) as fh:
        vals = [float(line) for line in fh if line.strip()]
    return as_signal(vals)
