"""Matchstick minimal two-terminal networks.

A network of length ``l`` and width ``w`` has ``w`` parallel wires of ``l``
devices each, joined by full-height perfect bars at both ends.  Vertical
matchsticks may connect adjacent wires at the ``l - 1`` internal positions;
the layout is encoded by a binary ``(l-1) x (w-1)`` matrix where entry
``(i, j)`` (1-based) marks a matchstick at internal column ``i`` between
wires ``j`` and ``j + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "Dims",
    "MatchstickNetwork",
    "DeviceGraph",
    "make_pos",
    "make_sop",
    "make_hammock",
    "from_matrix",
    "dual",
    "to_device_graph",
    "read_network",
    "write_network",
    "format_network",
    "parse_network",
]


@dataclass(frozen=True)
class Dims:
    l: int
    w: int

    def __post_init__(self):
        for name, v in (("l", self.l), ("w", self.w)):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an integer, got {v!r}")
            if v < 1:
                raise ValueError(f"{name} must be >= 1, got {v}")

    @property
    def n(self) -> int:
        return self.l * self.w


@dataclass(frozen=True)
class MatchstickNetwork:
    """An (l, w) network; ``bits[i-1][j-1]`` is the matchstick at (i, j).

    ``label`` is a free-form tag and does not take part in equality.
    """

    dims: Dims
    bits: tuple[tuple[int, ...], ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        l, w = self.dims.l, self.dims.w
        if len(self.bits) != l - 1:
            raise ValueError(f"matrix must have {l - 1} rows, got {len(self.bits)}")
        for row in self.bits:
            if len(row) != w - 1:
                raise ValueError(f"matrix rows must have {w - 1} entries, got {len(row)}")
            for b in row:
                if b not in (0, 1) or isinstance(b, bool):
                    raise ValueError(f"matchstick entries must be 0 or 1, got {b!r}")

    @property
    def l(self) -> int:
        return self.dims.l

    @property
    def w(self) -> int:
        return self.dims.w

    @property
    def n(self) -> int:
        return self.dims.n

    def matchstick(self, i: int, j: int) -> int:
        """Entry M(i, j), 1-based."""
        return self.bits[i - 1][j - 1]

    def flat_bits(self) -> list[int]:
        return [b for row in self.bits for b in row]

    def __repr__(self):
        tag = f", label={self.label!r}" if self.label else ""
        return f"MatchstickNetwork(l={self.l}, w={self.w}, bits={self.bits}{tag})"


def _filled(l: int, w: int, value) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(value(i, j) for j in range(1, w)) for i in range(1, l))


def make_pos(l: int, w: int) -> MatchstickNetwork:
    """Parallel-of-series: no matchsticks."""
    return MatchstickNetwork(Dims(l, w), _filled(l, w, lambda i, j: 0), "PoS")


def make_sop(l: int, w: int) -> MatchstickNetwork:
    """Series-of-parallel: every internal position carries a matchstick."""
    return MatchstickNetwork(Dims(l, w), _filled(l, w, lambda i, j: 1), "SoP")


# H puts a matchstick where i + j is odd; this is the brick-wall layout of the
# 4x4 H drawing and it reproduces the reference 3x5 coefficients.  Hplus is
# the complementary brick wall, which is a distinct hammock only when both
# dimensions are even.
_HAMMOCK_PARITY = {"H": 1, "Hplus": 0}


def make_hammock(l: int, w: int, variant: str = "H") -> MatchstickNetwork:
    """Brick-wall hammock network.

    ``variant`` is ``"H"`` or ``"Hplus"``; the latter requires even ``l`` and
    even ``w``.
    """
    if variant not in _HAMMOCK_PARITY:
        raise ValueError(f"unknown hammock variant {variant!r}; expected 'H' or 'Hplus'")
    dims = Dims(l, w)
    if variant == "Hplus" and (l % 2 or w % 2):
        raise ValueError(f"Hplus hammock needs even l and w, got ({l}, {w})")
    parity = _HAMMOCK_PARITY[variant]
    bits = _filled(l, w, lambda i, j: 1 if (i + j) % 2 == parity else 0)
    return MatchstickNetwork(dims, bits, "hammock-" + variant)


def from_matrix(l: int, w: int, bits: Iterable, label: str = "") -> MatchstickNetwork:
    """Build a network from a nested (l-1) x (w-1) matrix or a flat row-major list."""
    dims = Dims(l, w)
    items = list(bits)
    if items and all(isinstance(r, (list, tuple)) for r in items):
        rows = tuple(tuple(int(b) if _is_bit(b) else b for b in r) for r in items)
    else:
        if len(items) != (l - 1) * (w - 1):
            raise ValueError(
                f"expected {(l - 1) * (w - 1)} matchstick entries for ({l}, {w}), got {len(items)}"
            )
        flat = [int(b) if _is_bit(b) else b for b in items]
        rows = tuple(tuple(flat[r * (w - 1):(r + 1) * (w - 1)]) for r in range(l - 1))
    return MatchstickNetwork(dims, rows, label)


def _is_bit(b) -> bool:
    return isinstance(b, bool) or (isinstance(b, int) and b in (0, 1))


def dual(net: MatchstickNetwork) -> MatchstickNetwork:
    """Dual network: complement the matchstick matrix and transpose it.

    The result has dimensions (w, l).  For l = 1 this maps the all-parallel
    network to the all-series one (both matrices are empty).
    """
    l, w = net.l, net.w
    bits = tuple(tuple(1 - net.bits[i][j] for i in range(l - 1)) for j in range(w - 1))
    label = net.label[:-5] if net.label.endswith("-dual") else (net.label + "-dual" if net.label else "")
    return MatchstickNetwork(Dims(w, l), bits, label)


@dataclass(frozen=True)
class DeviceGraph:
    """Explicit graph of a network.

    Grid node ``(c, j)`` (column ``c`` in 0..l, wire ``j`` in 0..w-1) has id
    ``c * w + j``; ``source`` and ``terminus`` follow the grid ids.  Device
    ``d = j * l + (i - 1)`` spans columns ``i - 1 -> i`` on wire ``j``.
    """

    node_count: int
    perfect_edges: tuple[tuple[int, int], ...]
    device_edges: tuple[tuple[int, int], ...]
    source: int
    terminus: int

    @property
    def n(self) -> int:
        return len(self.device_edges)

    def contracted(self) -> tuple[list[tuple[int, int]], int, int]:
        """Device edges after merging nodes joined by perfect edges.

        Returns ``(edges, s, t)`` with nodes relabelled to component roots.
        """
        parent = list(range(self.node_count))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.perfect_edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
        edges = [(find(a), find(b)) for a, b in self.device_edges]
        return edges, find(self.source), find(self.terminus)


def to_device_graph(net: MatchstickNetwork) -> DeviceGraph:
    l, w = net.l, net.w
    grid = (l + 1) * w
    s, t = grid, grid + 1

    def node(c, j):
        return c * w + j

    perfect = [(s, node(0, j)) for j in range(w)]
    perfect += [(node(l, j), t) for j in range(w)]
    for i in range(1, l):
        for j in range(1, w):
            if net.bits[i - 1][j - 1]:
                perfect.append((node(i, j - 1), node(i, j)))
    devices = [(node(i - 1, j), node(i, j)) for j in range(w) for i in range(1, l + 1)]
    return DeviceGraph(grid + 2, tuple(perfect), tuple(devices), s, t)


# -- text format: "l w" then l-1 lines of w-1 bits --------------------------

def format_network(net: MatchstickNetwork) -> str:
    lines = [f"{net.l} {net.w}"]
    lines += [" ".join(str(b) for b in row) for row in net.bits]
    return "\n".join(lines) + "\n"


def parse_network(text: str, label: str = "") -> MatchstickNetwork:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty network description")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"first line must be 'l w', got {lines[0]!r}")
    l, w = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != max(l - 1, 0) and not (w == 1 and not body):
        raise ValueError(f"expected {l - 1} matrix lines, got {len(body)}")
    rows: list[Sequence[int]] = []
    for ln in body:
        tokens = ln.split() if " " in ln or "\t" in ln else list(ln)
        try:
            rows.append([int(tok) for tok in tokens])
        except ValueError:
            raise ValueError(f"non-binary entry in line {ln!r}") from None
    if w == 1:
        rows = [[] for _ in range(l - 1)]
    return MatchstickNetwork(Dims(l, w), tuple(tuple(r) for r in rows), label)


def read_network(path) -> MatchstickNetwork:
    p = Path(path)
    return parse_network(p.read_text(), label=p.stem)


def write_network(net: MatchstickNetwork, path) -> None:
    Path(path).write_text(format_network(net))
