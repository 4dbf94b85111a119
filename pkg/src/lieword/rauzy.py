"""Rauzy graphs, elementary circuits, and their classification.

The level-n graph of a word has the length-n factors as vertices and the
length-(n+1) factors as edges; edge e runs from its length-n prefix to
its length-n suffix.  Every elementary circuit is determined, up to
starting point, by a primitive root word: reading the last letters of
its edges in order spells a rotation of that root, the vertex set is the
root's length-n fractional-power class and the edge set the length-(n+1)
one.  Circuits are *small* (size <= level), *primitive* (size = level+1),
or neither; small and primitive together are the quasi-small circuits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    FactorSet,
    canonical_rotation,
    class_power_set,
    factor_set,
    is_primitive,
)
from .errors import CircuitExplosion, NotACircuit
from .words import (
    DEFAULT_FLOOR,
    DEFAULT_MULTIPLIER,
    Horizon,
    WordSpec,
    choose_horizon,
    prefix_for,
    symbol_rank,
)

KIND_SMALL = "small"
KIND_PRIMITIVE = "primitive"
KIND_NOT_QUASI_SMALL = "not_quasi_small"

DEFAULT_CIRCUIT_CAP = 10**6


@dataclass(frozen=True)
class RauzyGraph:
    level: int
    vertices: FactorSet
    edges: FactorSet

    def __post_init__(self):
        if self.vertices.n != self.level or self.edges.n != self.level + 1:
            raise ValueError("factor-set lengths do not match the level")
        vs = self.vertices.members
        for e in self.edges.members:
            if e[:-1] not in vs or e[1:] not in vs:
                raise ValueError(f"edge {e!r} has an endpoint outside the vertex set")

    def endpoints(self, edge: str) -> tuple[str, str]:
        return edge[:-1], edge[1:]

    def successors(self) -> dict[str, list[str]]:
        """Vertex -> sorted successor vertices (level 0 collapses to loops)."""
        adj: dict[str, list[str]] = {v: [] for v in self.vertices.members}
        for e in self.edges.members:
            u, v = self.endpoints(e)
            adj[u].append(v)
        return {u: sorted(set(vs)) for u, vs in adj.items()}


def graph_from_factor_sets(vertices: FactorSet, edges: FactorSet) -> RauzyGraph:
    return RauzyGraph(vertices.n, vertices, edges)


def build_rauzy_graph(
    spec: WordSpec,
    n: int,
    horizon: Horizon | None = None,
    floor: int = DEFAULT_FLOOR,
    multiplier: int = DEFAULT_MULTIPLIER,
) -> RauzyGraph:
    """The level-n graph of the word, collected at the given horizon.

    Level 0 (vertex ε, one self-loop per letter) is allowed so that
    circuit counts can be tabulated from n = 0.
    """
    if n < 0:
        raise ValueError("level must be >= 0")
    if horizon is None:
        horizon = choose_horizon(spec, n + 1, floor, multiplier)
    prefix = prefix_for(spec, horizon, n + 1)
    if len(prefix) <= n:  # finite word too short for any edge
        vs = (
            factor_set(prefix, n, horizon)
            if n <= len(prefix)
            else FactorSet(n, frozenset(), horizon)
        )
        return RauzyGraph(n, vs, FactorSet(n + 1, frozenset(), horizon))
    return RauzyGraph(
        n, factor_set(prefix, n, horizon), factor_set(prefix, n + 1, horizon)
    )


def is_weakly_connected(g: RauzyGraph) -> bool:
    """One component when edge directions are ignored (empty graph: yes)."""
    verts = g.vertices.members
    if len(verts) <= 1:
        return True
    neighbours: dict[str, set[str]] = {v: set() for v in verts}
    for e in g.edges.members:
        u, v = g.endpoints(e)
        neighbours[u].add(v)
        neighbours[v].add(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        for w in neighbours[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


@dataclass(frozen=True)
class Circuit:
    """An elementary circuit reduced to its identity (root word, level)."""

    root: str
    level: int
    kind: str

    @property
    def size(self) -> int:
        return len(self.root)

    def vertex_set(self) -> frozenset[str]:
        return class_power_set(self.root, self.level)

    def edge_set(self) -> frozenset[str]:
        return class_power_set(self.root, self.level + 1)


def classify_circuit(size: int, level: int) -> str:
    if size <= level:
        return KIND_SMALL
    if size == level + 1:
        return KIND_PRIMITIVE
    return KIND_NOT_QUASI_SMALL


def circuit_root(
    vertices: Sequence[str],
    edges: Sequence[str],
    level: int,
    rank: dict[str, int] | None = None,
) -> str:
    """Primitive root of an elementary circuit, in canonical rotation.

    ``vertices`` and ``edges`` alternate around the circuit: edges[i] runs
    from vertices[i] to vertices[(i+1) % size].  The root is spelled by
    the last letters of the edges; the result is checked against the
    fractional-power characterization of circuit vertex/edge sets.
    """
    k = len(vertices)
    if k == 0 or len(edges) != k:
        raise NotACircuit("need equally many vertices and edges, at least one each")
    if len(set(vertices)) != k:
        raise NotACircuit("vertices of an elementary circuit must be distinct")
    for i, e in enumerate(edges):
        u, v = vertices[i], vertices[(i + 1) % k]
        if e[: len(u)] != u or e[1:] != v:
            raise NotACircuit(f"edge {e!r} does not run {u!r} -> {v!r}")
    root = "".join(e[-1] for e in edges)
    if not is_primitive(root):
        raise NotACircuit(f"spelled root {root!r} is not primitive")
    if class_power_set(root, level) != frozenset(vertices):
        raise NotACircuit("vertex set is not the root's power class")
    if class_power_set(root, level + 1) != frozenset(edges):
        raise NotACircuit("edge set is not the root's power class")
    return canonical_rotation(root, rank)


def _tarjan_sccs(adj: dict[str, list[str]], nodes: list[str]) -> list[list[str]]:
    """Strongly connected components, iterative, deterministic order."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    sccs: list[list[str]] = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            advanced = False
            succs = adj.get(v, [])
            for j in range(pi, len(succs)):
                w = succs[j]
                if w not in index:
                    work[-1] = (v, j + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sccs


def _johnson_search(adj: dict[str, list[str]], start: str) -> Iterator[list[str]]:
    """All elementary circuits through ``start`` in its strongly connected part."""
    blocked = {start}
    blocked_by: dict[str, set[str]] = {}
    path = [start]
    stack = [iter(adj[start])]
    closed = [False]
    while stack:
        advanced = False
        for w in stack[-1]:
            if w == start:
                yield path[:]
                closed[-1] = True
            elif w not in blocked:
                path.append(w)
                closed.append(False)
                blocked.add(w)
                stack.append(iter(adj[w]))
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        v = path.pop()
        if closed.pop():
            if closed:
                closed[-1] = True
            unblock = [v]
            while unblock:
                u = unblock.pop()
                if u in blocked:
                    blocked.remove(u)
                    unblock.extend(blocked_by.pop(u, ()))
        else:
            for w in adj[v]:
                blocked_by.setdefault(w, set()).add(v)


def _vertex_cycles(g: RauzyGraph, cap: int) -> Iterator[list[str]]:
    """Vertex sequences of all elementary circuits of size >= 2."""
    adj = g.successors()
    loop_free = {u: [v for v in vs if v != u] for u, vs in adj.items()}
    count = 0
    components = [c for c in _tarjan_sccs(loop_free, sorted(loop_free)) if len(c) >= 2]
    while components:
        comp = components.pop()
        comp_set = set(comp)
        sub = {u: [v for v in loop_free[u] if v in comp_set] for u in comp}
        start = comp[0]
        for cycle in _johnson_search(sub, start):
            count += 1
            if count > cap:
                raise CircuitExplosion(f"more than {cap} elementary circuits")
            yield cycle
        del sub[start]
        remaining = [u for u in comp if u != start]
        for u in remaining:
            sub[u] = [v for v in sub[u] if v != start]
        components.extend(c for c in _tarjan_sccs(sub, remaining) if len(c) >= 2)


def elementary_circuits(
    g: RauzyGraph,
    cap: int = DEFAULT_CIRCUIT_CAP,
    rank: dict[str, int] | None = None,
) -> list[Circuit]:
    """Every elementary circuit of the graph, ordered by (size, root).

    Raises CircuitExplosion past ``cap`` circuits — a sign the input graph
    is not the kind this library is meant for, never silent truncation.
    """
    found: list[Circuit] = []
    # self-loops: one size-1 circuit per loop edge (level 0 has parallels)
    loops = sorted(e for e in g.edges.members if e[:-1] == e[1:])
    if len(loops) > cap:
        raise CircuitExplosion(f"more than {cap} elementary circuits")
    for e in loops:
        root = circuit_root([e[:-1]], [e], g.level, rank)
        found.append(Circuit(root, g.level, classify_circuit(1, g.level)))
    for cycle in _vertex_cycles(g, cap - len(loops)):
        k = len(cycle)
        edges = [cycle[i] + cycle[(i + 1) % k][-1] for i in range(k)]
        root = circuit_root(cycle, edges, g.level, rank)
        found.append(Circuit(root, g.level, classify_circuit(k, g.level)))
    found.sort(key=lambda c: (c.size, c.root))
    return found


def quasi_small_count(
    spec: WordSpec,
    n: int,
    horizon: Horizon | None = None,
    floor: int = DEFAULT_FLOOR,
    multiplier: int = DEFAULT_MULTIPLIER,
    cap: int = DEFAULT_CIRCUIT_CAP,
) -> int:
    """Number of quasi-small circuits in the level-n graph."""
    g = build_rauzy_graph(spec, n, horizon, floor, multiplier)
    circuits = elementary_circuits(g, cap, symbol_rank(spec))
    return sum(1 for c in circuits if c.kind != KIND_NOT_QUASI_SMALL)


def to_dot(g: RauzyGraph, rank: dict[str, int] | None = None) -> str:
    """Graphviz text with stable ordering; arcs carry the length-(n+1) factor."""
    lines = [f"digraph rauzy_{g.level} {{"]
    for v in g.vertices.sorted_members(rank):
        lines.append(f'  "{v or "ε"}";')
    for e in g.edges.sorted_members(rank):
        u, v = g.endpoints(e)
        lines.append(f'  "{u or "ε"}" -> "{v or "ε"}" [label="{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
