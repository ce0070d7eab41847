"""Exact N-form coefficients of matchstick minimal networks.

``N_k`` counts the k-subsets of closed devices that connect S to T.  The
ground truth comes from exhaustive enumeration of all ``2**n`` device
states; closed formulas cover parallel-of-series and series-of-parallel
networks, and complementarity gives the coefficients of the dual.
All arithmetic is on Python integers.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .network import DeviceGraph, MatchstickNetwork, to_device_graph

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapExceeded",
    "CoefficientVector",
    "binomial_row",
    "is_connected",
    "brute_force_coefficients",
    "pos_coefficients",
    "sop_coefficients",
    "dual_coefficients",
    "coefficient_bounds",
    "coefficients_to_json",
    "coefficients_from_json",
    "coefficients_to_csv",
    "coefficients_from_csv",
]

DEFAULT_CAP = 26


class EnumerationCapExceeded(ValueError):
    """Raised instead of silently approximating a network that is too large."""


@lru_cache(maxsize=None)
def binomial_row(n: int) -> tuple[int, ...]:
    """C(n, 0..n) by the Pascal recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for _ in range(n):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return tuple(row)


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return binomial_row(n)[k]


@dataclass(frozen=True)
class CoefficientVector:
    """Exact coefficients N_0..N_n, optionally tagged with the (l, w) type."""

    N: tuple[int, ...]
    dims: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "N", tuple(int(x) for x in self.N))
        if not self.N:
            raise ValueError("coefficient vector must have at least one entry")
        if self.dims is not None:
            l, w = self.dims
            if l * w != self.n:
                raise ValueError(f"dims {self.dims} do not match size n={self.n}")

    @property
    def n(self) -> int:
        return len(self.N) - 1

    def __getitem__(self, k):
        return self.N[k]

    def __len__(self):
        return len(self.N)

    def __iter__(self):
        return iter(self.N)

    def a(self, k: int):
        """Normalised Bernstein coefficient N_k / C(n, k)."""
        return Fraction(self.N[k], _binom(self.n, k))

    def violations(self) -> list[str]:
        """Range violations (empty list when the vector is consistent)."""
        out = []
        row = binomial_row(self.n)
        for k, v in enumerate(self.N):
            if not 0 <= v <= row[k]:
                out.append(f"N_{k}={v} outside [0, C({self.n},{k})={row[k]}]")
        if self.dims is not None:
            l, w = self.dims
            for k in range(0, min(l, self.n + 1)):
                if self.N[k] != 0:
                    out.append(f"N_{k}={self.N[k]} but must be 0 for k <= l-1")
            for k in range(max(self.n - w + 1, 0), self.n + 1):
                if self.N[k] != row[k]:
                    out.append(f"N_{k}={self.N[k]} but must equal C(n,k) for k >= n-w+1")
        return out


# -- connectivity -----------------------------------------------------------

def is_connected(graph: DeviceGraph, closed: Iterable[int]) -> bool:
    """Whether S and T are joined by perfect edges plus the closed devices."""
    parent = list(range(graph.node_count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for a, b in graph.perfect_edges:
        union(a, b)
    for d in closed:
        if not 0 <= d < graph.n:
            raise IndexError(f"device index {d} out of range 0..{graph.n - 1}")
        union(*graph.device_edges[d])
    return find(graph.source) == find(graph.terminus)


def _unionfind_tally(graph: DeviceGraph) -> list[int]:
    """Per-state union-find over all 2**n states (slow reference path)."""
    n = graph.n
    counts = [0] * (n + 1)
    for state in range(1 << n):
        closed = [d for d in range(n) if state >> d & 1]
        if is_connected(graph, closed):
            counts[len(closed)] += 1
    return counts


# -- bit-sliced enumeration ---------------------------------------------------
#
# State x (bit d set <=> device d closed) lives in lane x & 63 of word x >> 6.
# Reachability from S is propagated over the contracted device graph with
# word-wide AND/OR until a fixed point, 64 states at a time.

_LANE_BITS = 6


def _lane_constants(low: int) -> tuple[list[int], list[int], int]:
    lanes = 1 << low
    closed = [sum(1 << x for x in range(lanes) if x >> d & 1) for d in range(low)]
    by_pop = [sum(1 << x for x in range(lanes) if bin(x).count("1") == j) for j in range(low + 1)]
    return closed, by_pop, (1 << lanes) - 1


def _tally_range(task) -> list[int]:
    edges, s, t, n, start, stop = task
    low = min(n, _LANE_BITS)
    lane_closed, lane_pop, full = _lane_constants(low)
    words = np.arange(start, stop, dtype=np.uint64)
    closed = []
    for d in range(n):
        if d < low:
            closed.append(np.uint64(lane_closed[d]))
        else:
            bit = (words >> np.uint64(d - low)) & np.uint64(1)
            closed.append(np.uint64(0) - bit)
    nodes = {u for e in edges for u in e} | {s, t}
    reach = {u: np.zeros(len(words), dtype=np.uint64) for u in nodes}
    reach[s][:] = np.uint64(full)
    order = list(enumerate(edges))
    changed = True
    while changed:
        changed = False
        for sweep in (order, order[::-1]):
            for d, (u, v) in sweep:
                c = closed[d]
                for a, b in ((u, v), (v, u)):
                    new = reach[b] | (reach[a] & c)
                    if not changed and not np.array_equal(new, reach[b]):
                        changed = True
                    reach[b] = new
    hit = reach[t]
    high_pop = np.bitwise_count(words).astype(np.int64)
    counts = [0] * (n + 1)
    for j, mask in enumerate(lane_pop):
        per_word = np.bitwise_count(hit & np.uint64(mask)).astype(np.int64)
        sums = np.bincount(high_pop, weights=per_word, minlength=n - low + 1)
        for hp, total in enumerate(sums):
            if total:
                counts[hp + j] += int(round(total))
    return counts


def _bitslice_tally(graph: DeviceGraph, workers: int, chunk_words: int) -> list[int]:
    n = graph.n
    edges, s, t = graph.contracted()
    if s == t:
        return list(binomial_row(n))
    low = min(n, _LANE_BITS)
    total_words = 1 << (n - low)
    tasks = [
        (edges, s, t, n, start, min(start + chunk_words, total_words))
        for start in range(0, total_words, chunk_words)
    ]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_tally_range, tasks))
    else:
        parts = [_tally_range(task) for task in tasks]
    counts = [0] * (n + 1)
    for part in parts:
        for k, c in enumerate(part):
            counts[k] += c
    return counts


def brute_force_coefficients(
    net: MatchstickNetwork,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    method: str = "bitslice",
    chunk_words: int = 1 << 15,
) -> CoefficientVector:
    """Exact N_k by enumerating every one of the 2**n device states.

    ``method="unionfind"`` runs a per-state union-find (practical for
    n <= 14 or so); ``"bitslice"`` evaluates 64 states per machine word.
    The state space is split into contiguous ranges that may be tallied by
    ``workers`` processes; the result does not depend on the split.
    """
    n = net.n
    if n > cap:
        raise EnumerationCapExceeded(
            f"network has n={n} devices; exhaustive enumeration is capped at {cap}"
        )
    graph = to_device_graph(net)
    if method == "unionfind":
        counts = _unionfind_tally(graph)
    elif method == "bitslice":
        counts = _bitslice_tally(graph, workers, chunk_words)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CoefficientVector(tuple(counts), (net.l, net.w))


# -- closed forms -----------------------------------------------------------

def pos_coefficients(l: int, w: int) -> CoefficientVector:
    """Parallel-of-series: N_k = sum_{j=1}^{k//l} (-1)^(j+1) C(w,j) C(n-jl, n-k)."""
    if l < 1 or w < 1:
        raise ValueError("l and w must be >= 1")
    n = l * w
    N = []
    for k in range(n + 1):
        total = 0
        for j in range(1, k // l + 1):
            term = _binom(w, j) * _binom(n - j * l, n - k)
            total += term if j % 2 else -term
        N.append(total)
    return CoefficientVector(tuple(N), (l, w))


def dual_coefficients(cv: CoefficientVector) -> CoefficientVector:
    """N^perp_k = C(n, n-k) - N_{n-k}."""
    n = cv.n
    row = binomial_row(n)
    N = tuple(row[n - k] - cv.N[n - k] for k in range(n + 1))
    bad = [k for k, v in enumerate(N) if v < 0]
    if bad:
        raise ValueError(f"input violates N_k <= C(n,k); negative dual entries at k={bad}")
    dims = (cv.dims[1], cv.dims[0]) if cv.dims is not None else None
    return CoefficientVector(N, dims)


def sop_coefficients(l: int, w: int) -> CoefficientVector:
    """Series-of-parallel, as the dual of the (w, l) parallel-of-series."""
    return dual_coefficients(pos_coefficients(w, l))


def coefficient_bounds(l: int, w: int, k: int) -> tuple[int, int]:
    """Range of N_k over every (l, w) network: (PoS value, SoP value)."""
    n = l * w
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    lower = sum(
        (-1) ** (j + 1) * _binom(w, j) * _binom(n - j * l, n - k) for j in range(1, k // l + 1)
    )
    upper = sum(
        (-1) ** j * _binom(l, j) * _binom(n - j * w, k) for j in range(0, (n - k) // w + 1)
    )
    return lower, upper


# -- serialization ------------------------------------------------------------

def coefficients_to_json(cv: CoefficientVector) -> str:
    return json.dumps([str(v) for v in cv.N])


def coefficients_from_json(text: str, dims=None) -> CoefficientVector:
    data = json.loads(text)
    if isinstance(data, dict):
        dims = dims or (tuple(data["dims"]) if data.get("dims") else None)
        data = data["N"]
    return CoefficientVector(tuple(int(v) for v in data), dims)


def coefficients_to_csv(cv: CoefficientVector) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "N_k"])
    for k, v in enumerate(cv.N):
        writer.writerow([k, v])
    return buf.getvalue()


def coefficients_from_csv(text: str, dims=None) -> CoefficientVector:
    rows = list(csv.reader(io.StringIO(text)))
    if rows and rows[0] and rows[0][0].strip() == "k":
        rows = rows[1:]
    values: dict[int, int] = {int(k): int(v) for k, v in rows if k.strip()}
    if sorted(values) != list(range(len(values))):
        raise ValueError("CSV must list k = 0..n exactly once")
    return CoefficientVector(tuple(values[k] for k in range(len(values))), dims)


def as_vector(values: Sequence[int] | CoefficientVector, dims=None) -> CoefficientVector:
    if isinstance(values, CoefficientVector):
        return values
    return CoefficientVector(tuple(values), dims)
