"""Zero-divisor and nilpotent graphs with exact metrics.

Graphs over a finite ring are exact: vertices are the nonzero elements of
the relevant distinguished set and edges come from exhaustive pair tests.
Graphs over a skew extension are induced subgraphs on a deterministic
bounded sample of normal-form elements; adjacency inside the sample is
still exact (it routes through the coefficient nilpotency criterion), so
edges, non-edges, and any cycles found are true of the full graph, while
distances can only shrink when more vertices are added.

Metrics: diameter by all-pairs breadth-first search, girth by per-edge
deletion search (remove an edge, measure the shortest remaining path
between its ends), completeness, connectivity, plus witness paths for the
extremal pair and a shortest cycle.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field

from .errors import PreconditionUnverified, UnknownVertexError
from .rings import ElementSets, FiniteRing, element_sets
from .skew import SkewPoly, SPBWSpec, deglex_key, multiply, nil_adjacent, nil_criterion_flags

INFINITY = math.inf

KIND_ZERO_DIVISOR = "zero_divisor"
KIND_NILPOTENT = "nilpotent"
KIND_NILPOTENT_SAMPLED = "nilpotent_sampled"


@dataclass(frozen=True)
class GraphMetrics:
    """Exact metrics of a built graph.

    diameter is None for graphs with fewer than two vertices (the
    supremum ranges over an empty set), math.inf when disconnected.
    girth is math.inf for acyclic graphs.
    """

    connected: bool
    diameter: int | float | None
    girth: int | float
    complete: bool
    witness_paths: dict = field(default_factory=dict)


class NilGraph:
    """A finite simple graph with labeled vertices."""

    __slots__ = ("kind", "labels", "adjacency", "payloads", "truncated",
                 "vertex_witnesses", "metrics", "_index")

    def __init__(self, kind: str, labels, adjacency, payloads=None,
                 truncated: bool = False, vertex_witnesses=None):
        self.kind = kind
        self.labels = tuple(labels)
        adj = tuple(frozenset(a) for a in adjacency)
        if len(adj) != len(self.labels):
            raise ValueError("adjacency size does not match vertex count")
        for u, nbrs in enumerate(adj):
            if u in nbrs:
                raise ValueError(f"self-loop at vertex {u}")
            for v in nbrs:
                if u not in adj[v]:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        self.adjacency = adj
        self.payloads = tuple(payloads) if payloads is not None else self.labels
        self.truncated = truncated
        self.vertex_witnesses = tuple(vertex_witnesses) if vertex_witnesses else None
        self.metrics = None
        self._index = {s: i for i, s in enumerate(self.labels)}

    def __repr__(self) -> str:
        return f"NilGraph({self.kind}, {self.vertex_count} vertices, {self.edge_count} edges)"

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexError(f"no vertex labeled {label!r}") from None


def build_nilpotent_graph(ring: FiniteRing, sets: ElementSets | None = None) -> NilGraph:
    """Exact nilpotent graph: vertices x with some nonzero y making x*y
    nilpotent; edges where the pairwise product is nilpotent."""
    if sets is None:
        sets = element_sets(ring)
    nil = sets.nil
    vertices = sorted(x for x in sets.z_nil if x != 0)
    pos = {x: k for k, x in enumerate(vertices)}
    adjacency = [set() for _ in vertices]
    for a_i, a in enumerate(vertices):
        for b in vertices[a_i + 1:]:
            forward = ring.mul(a, b) in nil
            # A product is nilpotent exactly when its reverse is.
            assert forward == (ring.mul(b, a) in nil), (a, b)
            if forward:
                adjacency[a_i].add(pos[b])
                adjacency[pos[b]].add(a_i)
    return NilGraph(KIND_NILPOTENT, [ring.label_of(v) for v in vertices], adjacency,
                    payloads=vertices)


def build_zero_divisor_graph(ring: FiniteRing, sets: ElementSets | None = None) -> NilGraph:
    """Exact zero-divisor graph: vertices are nonzero one-sided zero
    divisors; edges where either ordered product vanishes."""
    if sets is None:
        sets = element_sets(ring)
    vertices = sorted(sets.zd_star)
    pos = {x: k for k, x in enumerate(vertices)}
    adjacency = [set() for _ in vertices]
    for a_i, a in enumerate(vertices):
        for b in vertices[a_i + 1:]:
            if ring.mul(a, b) == 0 or ring.mul(b, a) == 0:
                adjacency[a_i].add(pos[b])
                adjacency[pos[b]].add(a_i)
    return NilGraph(KIND_ZERO_DIVISOR, [ring.label_of(v) for v in vertices], adjacency,
                    payloads=vertices)


@dataclass(frozen=True)
class SamplerParams:
    """Bounds for sampled extension graphs."""

    max_degree: int = 2
    max_vertices: int = 96
    include_witnesses: bool = True


def _ascending_monomials(n: int, max_degree: int) -> list[tuple[int, ...]]:
    monos = []

    def rec(prefix, remaining, pos):
        if pos == n:
            monos.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, pos + 1)

    rec([], max_degree, 0)
    return sorted(monos, key=deglex_key)


def _candidate_polys(spec: SPBWSpec, max_degree: int):
    """Deterministic enumeration of all nonzero polynomials of bounded degree.

    Coefficient vectors over the ascending monomial list are counted like
    little-endian base-(ring order) integers, constant digit first.
    """
    monos = _ascending_monomials(spec.n, max_degree)
    base = spec.base.order
    total = base ** len(monos)
    for counter in range(1, total):
        digits = []
        c = counter
        for _ in monos:
            c, r = divmod(c, base)
            digits.append(r)
        yield SkewPoly(spec, {m: d for m, d in zip(monos, digits) if d != 0})


def _forced_witnesses(spec: SPBWSpec, max_degree: int) -> list[SkewPoly]:
    """Constants and nilpotent-coefficient monomial multiples, small first."""
    out = [SkewPoly.constant(spec, r) for r in spec.base.elements() if r != 0]
    nil = sorted(spec.base_sets().nil - {0})
    for alpha in _ascending_monomials(spec.n, max_degree):
        if not any(alpha):
            continue
        for a in nil:
            out.append(SkewPoly.monomial(spec, alpha, a))
    return out


def sample_spbw_graph(spec: SPBWSpec, sampler: SamplerParams | None = None) -> NilGraph:
    """Bounded induced subgraph of the extension's nilpotent graph.

    Vertex membership uses the defining condition (some nonzero partner
    with nilpotent product) decided by witness search over the forced
    witnesses, the candidate pool, and the vertices already collected, so
    the vertex set is a sound under-approximation; each vertex records
    the witness that admitted it.  With ``include_witnesses`` the forced
    elements are placed first so theorem-prescribed paths and cycles
    survive truncation, and ``truncated`` reports whether the candidate
    space was cut at ``max_vertices``.
    """
    if sampler is None:
        sampler = SamplerParams()
    ok, reason = nil_criterion_flags(spec)
    if not ok:
        raise PreconditionUnverified(reason)
    nil = spec.base_sets().nil

    def product_nilpotent(f, g):
        return all(c in nil for c in multiply(spec, f, g).coefficients())

    witness_pool = _forced_witnesses(spec, sampler.max_degree)

    def membership_witness(f):
        for g in witness_pool:
            if f != g and (product_nilpotent(f, g) or product_nilpotent(g, f)):
                return g
        return None

    members: list[tuple[SkewPoly, SkewPoly]] = []
    seen: set = set()
    truncated = False

    def consider(f) -> bool:
        # Returns False once the vertex budget is full.
        nonlocal truncated
        if f.key() in seen:
            return True
        g = membership_witness(f)
        if g is None:
            return True
        if len(members) >= sampler.max_vertices:
            truncated = True
            return False
        seen.add(f.key())
        members.append((f, g))
        return True

    room = True
    if sampler.include_witnesses:
        for f in witness_pool:
            if not consider(f):
                room = False
                break
    if room:
        rejected = []
        for f in _candidate_polys(spec, sampler.max_degree):
            if f.key() in seen:
                continue
            g = membership_witness(f)
            if g is None:
                rejected.append(f)
                continue
            if len(members) >= sampler.max_vertices:
                truncated = True
                room = False
                break
            seen.add(f.key())
            members.append((f, g))
        # Second pass: rejected candidates may be witnessed by collected vertices.
        if room:
            for f in rejected:
                if len(members) >= sampler.max_vertices:
                    truncated = True
                    break
                for g, _ in members:
                    if f != g and (product_nilpotent(f, g) or product_nilpotent(g, f)):
                        seen.add(f.key())
                        members.append((f, g))
                        break

    vertices = [f for f, _ in members]
    witnesses = [repr(g) for _, g in members]
    adjacency = [set() for _ in vertices]
    for i, f in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if nil_adjacent(spec, f, vertices[j]):
                adjacency[i].add(j)
                adjacency[j].add(i)
    return NilGraph(KIND_NILPOTENT_SAMPLED, [repr(f) for f in vertices], adjacency,
                    payloads=vertices, truncated=truncated, vertex_witnesses=witnesses)


# ---------------------------------------------------------------------------
# Metrics
# ---------------------------------------------------------------------------

def _bfs(adjacency, source: int, skip_edge: tuple[int, int] | None = None) -> list:
    dist = [INFINITY] * len(adjacency)
    parent = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if skip_edge and {u, v} == set(skip_edge):
                continue
            if dist[v] == INFINITY:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def _path_from_parents(parent, source, target) -> tuple[int, ...]:
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def distance(graph: NilGraph, u, v) -> int | float:
    """Shortest-path length between two distinct vertices, math.inf if none."""
    if isinstance(u, str):
        u = graph.index_of(u)
    if isinstance(v, str):
        v = graph.index_of(v)
    n = graph.vertex_count
    if not (0 <= u < n) or not (0 <= v < n):
        raise UnknownVertexError(f"vertex index out of range for graph with {n} vertices")
    if u == v:
        raise ValueError("distance is defined for distinct vertices")
    dist, _ = _bfs(graph.adjacency, u)
    return dist[v]


def graph_metrics(graph: NilGraph) -> GraphMetrics:
    """Compute and cache exact metrics."""
    if graph.metrics is not None:
        return graph.metrics
    n = graph.vertex_count
    adjacency = graph.adjacency
    witness_paths: dict = {}

    if n == 0:
        metrics = GraphMetrics(connected=True, diameter=None, girth=INFINITY, complete=False)
        graph.metrics = metrics
        return metrics

    diameter: int | float | None = 0
    extremal = None
    connected = True
    for u in range(n):
        dist, parent = _bfs(adjacency, u)
        if any(d == INFINITY for d in dist):
            connected = False
            break
        far = max(range(n), key=lambda v: dist[v])
        if dist[far] > diameter:
            diameter = dist[far]
            extremal = (u, far, _path_from_parents(parent, u, far))
    if n < 2:
        diameter = None
    elif not connected:
        diameter = INFINITY
    elif extremal:
        u, v, path = extremal
        witness_paths["diameter"] = tuple(graph.labels[w] for w in path)

    girth: int | float = INFINITY
    girth_edge = None
    for (u, v) in graph.edges():
        if girth == 3:
            break
        dist, parent = _bfs(adjacency, u, skip_edge=(u, v))
        if dist[v] != INFINITY and dist[v] + 1 < girth:
            girth = dist[v] + 1
            girth_edge = (u, v, _path_from_parents(parent, u, v))
    if girth_edge:
        u, v, path = girth_edge
        witness_paths["girth_cycle"] = tuple(graph.labels[w] for w in path)

    complete = n >= 2 and all(len(adjacency[u]) == n - 1 for u in range(n))
    metrics = GraphMetrics(connected=connected, diameter=diameter, girth=girth,
                           complete=complete, witness_paths=witness_paths)
    graph.metrics = metrics
    return metrics


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------

def _metric_json(value):
    if value is None:
        return None
    if value == INFINITY:
        return "inf"
    return int(value)


def export_graph(graph: NilGraph, fmt: str) -> str:
    """Serialize to DOT or JSON with stable vertex order and metrics included."""
    metrics = graph_metrics(graph)
    if fmt == "dot":
        lines = ["graph {"]
        for label in graph.labels:
            lines.append(f'  "{label}";')
        for u, v in graph.edges():
            lines.append(f'  "{graph.labels[u]}" -- "{graph.labels[v]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "kind": graph.kind,
            "vertices": list(graph.labels),
            "edges": [[u, v] for u, v in graph.edges()],
            "truncated": graph.truncated,
            "metrics": {
                "connected": metrics.connected,
                "diameter": _metric_json(metrics.diameter),
                "girth": _metric_json(metrics.girth),
                "complete": metrics.complete,
            },
        }
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown export format {fmt!r}; use 'dot' or 'json'")
