"""Deterministic constructors for test and demo graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, build_graph

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 pseudorandom generator, fully specified for portability.

    State transition: state = (state + 0x9E3779B97F4A7C15) mod 2^64.
    Output: z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64; return z ^ (z >> 31).
    Floats take the top 53 bits over 2^53, uniform in [0, 1). Any
    implementation of this recurrence reproduces identical graphs from the
    same seed.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53


def complete(n: int) -> Graph:
    """K_n."""
    if n < 0:
        raise GraphError(f"size must be >= 0, got {n}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, edges)[0]


def path(n: int) -> Graph:
    """Path on n nodes (n - 1 edges)."""
    if n < 0:
        raise GraphError(f"size must be >= 0, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])[0]


def cycle(n: int) -> Graph:
    """Cycle on n nodes; requires n >= 3."""
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 nodes, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return build_graph(n, edges)[0]


def star(leaves: int) -> Graph:
    """Star with the center at node 0 and the given number of leaves."""
    if leaves < 0:
        raise GraphError(f"leaf count must be >= 0, got {leaves}")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])[0]


def t_pattern(a: int, t: int, b: int) -> Graph:
    """The two-hub edge-neighborhood pattern.

    Nodes 0 and 1 are joined by an edge and share t common neighbors;
    a further nodes attach only to 0 and b only to 1; no other edges.
    So deg(0) = a + t + 1, deg(1) = b + t + 1, and the central edge lies in
    exactly t triangles.
    """
    if a < 0 or t < 0 or b < 0:
        raise GraphError(f"pattern parameters must be >= 0, got ({a}, {t}, {b})")
    edges = [(0, 1)]
    nxt = 2
    for _ in range(t):
        edges.append((0, nxt))
        edges.append((1, nxt))
        nxt += 1
    for _ in range(a):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(b):
        edges.append((1, nxt))
        nxt += 1
    return build_graph(nxt, edges)[0]


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Include each unordered pair independently with probability p.

    Pairs are visited in ascending (u, v) order with one splitmix64 draw
    per pair, so identical (n, p, seed) always rebuilds the same graph.
    """
    if n < 0:
        raise GraphError(f"size must be >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_float() < p:
                edges.append((u, v))
    return build_graph(n, edges)[0]


@dataclass(frozen=True)
class GenSpec:
    """A graph family plus its parameters; same spec + seed, same graph."""

    family: str
    args: tuple[float, ...] = ()
    seed: int = 0


_FAMILY_ALIASES = {
    "t": "T_pattern",
    "t_pattern": "T_pattern",
    "er": "erdos_renyi",
    "erdos_renyi": "erdos_renyi",
    "complete": "complete",
    "path": "path",
    "cycle": "cycle",
    "star": "star",
}


def _int_args(spec: GenSpec, count: int) -> list[int]:
    if len(spec.args) != count:
        raise GraphError(
            f"family {spec.family!r} takes {count} parameter(s), got {len(spec.args)}"
        )
    out = []
    for x in spec.args:
        if float(x) != int(x):
            raise GraphError(f"family {spec.family!r} takes integer parameters, got {x}")
        out.append(int(x))
    return out


def make(spec: GenSpec) -> Graph:
    """Build the graph described by a GenSpec."""
    family = _FAMILY_ALIASES.get(spec.family.lower())
    if family is None:
        raise GraphError(
            f"unknown family {spec.family!r}; valid: complete, path, cycle, star, T, er"
        )
    if family == "complete":
        return complete(*_int_args(spec, 1))
    if family == "path":
        return path(*_int_args(spec, 1))
    if family == "cycle":
        return cycle(*_int_args(spec, 1))
    if family == "star":
        return star(*_int_args(spec, 1))
    if family == "T_pattern":
        return t_pattern(*_int_args(spec, 3))
    if len(spec.args) != 2:
        raise GraphError(f"family 'er' takes n and p, got {len(spec.args)} parameter(s)")
    n_raw, p = spec.args
    if float(n_raw) != int(n_raw):
        raise GraphError(f"node count must be an integer, got {n_raw}")
    return random_graph(int(n_raw), float(p), spec.seed)
