"""Finite simple graphs and the graph side of the dual-graph toolkit.

Covers dual graphs of pure complexes, BFS diameters, Menger-style vertex and
edge connectivity by unit-capacity max-flow (with re-verified cut
witnesses), diameter bounds, Hirsch verdicts, non-revisiting dual paths,
the 6-vertex forbidden induced pattern for line-arrangement dual graphs,
and the named graph families used throughout the suite.

Graphs are immutable after construction. Disconnected diameters are the
float infinity, never a sentinel integer.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from math import comb, inf

from .complexes import SimplicialComplex
from .errors import (
    EmptyGraphError,
    InputError,
    NonPureComplexError,
    ParseError,
    UnknownFamilyError,
)


class Graph:
    """Simple graph: ordered vertex labels, symmetric edge set, no loops."""

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise InputError("duplicate vertex labels")
        adj: dict = {v: set() for v in self.vertices}
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"loop at {u!r} not allowed")
            if u not in self._index or v not in self._index:
                raise InputError(f"edge ({u!r}, {v!r}) uses an unlisted vertex")
            a, b = sorted((u, v), key=self._index.__getitem__)
            normalized.add((a, b))
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self.edges = tuple(
            sorted(normalized, key=lambda e: (self._index[e[0]], self._index[e[1]]))
        )

    @classmethod
    def from_edges(cls, edges, isolated=()) -> "Graph":
        seen: list = []
        index: dict = {}
        for u, v in edges:
            for w in (u, v):
                if w not in index:
                    index[w] = len(seen)
                    seen.append(w)
        for w in isolated:
            if w not in index:
                index[w] = len(seen)
                seen.append(w)
        return cls(seen, edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v):
        return sorted(self._adj[v], key=self._index.__getitem__)

    def degree(self, v) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        if not self.vertices:
            raise EmptyGraphError("empty graph")
        return min(len(ns) for ns in self._adj.values())

    def has_edge(self, u, v) -> bool:
        return v in self._adj.get(u, frozenset())

    def is_complete(self) -> bool:
        return all(len(self._adj[v]) == self.n - 1 for v in self.vertices)

    def without_vertices(self, drop) -> "Graph":
        drop = set(drop)
        vertices = [v for v in self.vertices if v not in drop]
        edges = [e for e in self.edges if e[0] not in drop and e[1] not in drop]
        return Graph(vertices, edges)

    def without_edges(self, drop) -> "Graph":
        dropped = {frozenset(e) for e in drop}
        edges = [e for e in self.edges if frozenset(e) not in dropped]
        return Graph(self.vertices, edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and set(self.edges) == set(other.edges)
        )

    def __hash__(self):
        return hash((self.vertices, frozenset(self.edges)))

    def __repr__(self):
        return f"Graph({self.n} vertices, {self.m} edges)"

    # -- adjacency in index form, used by the algorithms below --------------

    def _adj_lists(self) -> list[list[int]]:
        idx = self._index
        out: list[list[int]] = [[] for _ in self.vertices]
        for u, v in self.edges:
            out[idx[u]].append(idx[v])
            out[idx[v]].append(idx[u])
        return [sorted(ns) for ns in out]


def bfs_distances(g: Graph, source) -> dict:
    """Distances from source; unreachable vertices are absent."""
    adj = g._adj
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise EmptyGraphError("empty graph")
    return len(bfs_distances(g, g.vertices[0])) == g.n


def diameter(g: Graph) -> int | float:
    """Largest BFS eccentricity; infinity when disconnected, 0 for K1."""
    if g.n == 0:
        raise EmptyGraphError("the empty graph has no diameter")
    best = 0
    for v in g.vertices:
        dist = bfs_distances(g, v)
        if len(dist) != g.n:
            return inf
        best = max(best, max(dist.values()))
    return best


# -- unit-capacity max-flow (Edmonds-Karp on small dict networks) -----------


def _max_flow(n_nodes: int, arcs: dict[int, dict[int, int]], s: int, t: int):
    """Max flow and the source-side residual reachable set."""
    cap = {u: dict(vs) for u, vs in arcs.items()}
    for u, vs in arcs.items():
        for v in vs:
            cap.setdefault(v, {}).setdefault(u, 0)
    flow = 0
    while True:
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for v, c in cap.get(u, {}).items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            return flow, set(parent)
        v = t
        while parent[v] is not None:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] = cap[v].get(u, 0) + 1
            v = u
        flow += 1


def _vertex_flow(g: Graph, s_idx: int, t_idx: int):
    """Local vertex connectivity kappa(s, t) for nonadjacent s, t.

    Standard vertex-splitting: w_in = 2w, w_out = 2w+1, internal arc of
    capacity 1, edge arcs effectively unbounded. Returns (value, cut) where
    cut is a tuple of vertex indices separating s from t.
    """
    big = g.n + 1
    arcs: dict[int, dict[int, int]] = {}
    adj = g._adj_lists()
    for w in range(g.n):
        arcs.setdefault(2 * w, {})[2 * w + 1] = 1 if w not in (s_idx, t_idx) else big
        for x in adj[w]:
            arcs.setdefault(2 * w + 1, {})[2 * x] = big
    value, reach = _max_flow(2 * g.n, arcs, 2 * s_idx + 1, 2 * t_idx)
    cut = tuple(
        w for w in range(g.n) if 2 * w in reach and 2 * w + 1 not in reach
    )
    return value, cut


def vertex_connectivity(g: Graph):
    """Global vertex connectivity with a minimum vertex cut witness.

    Complete graphs have connectivity n-1 and no cut (witness None).
    Schedule: a fixed minimum-degree vertex against all its non-neighbors,
    plus all nonadjacent pairs among its neighbors.
    """
    if g.n < 2:
        raise EmptyGraphError("vertex connectivity needs at least 2 vertices")
    if g.is_complete():
        return g.n - 1, None
    idx = g._index
    v = min(g.vertices, key=lambda u: (g.degree(u), idx[u]))
    vi = idx[v]
    pairs = []
    neigh = set(g._adj[v])
    for u in g.vertices:
        if u != v and u not in neigh:
            pairs.append((vi, idx[u]))
    nb = sorted(neigh, key=idx.__getitem__)
    for a, b in itertools.combinations(nb, 2):
        if not g.has_edge(a, b):
            pairs.append((idx[a], idx[b]))
    best = None
    best_cut = None
    for s, t in pairs:
        value, cut = _vertex_flow(g, s, t)
        if best is None or value < best:
            best, best_cut = value, cut
    cut_labels = tuple(g.vertices[i] for i in best_cut)
    remaining = g.without_vertices(cut_labels)
    if remaining.n and is_connected(remaining):
        raise AssertionError("vertex cut witness failed re-verification")
    return best, cut_labels


def _edge_flow(g: Graph, s_idx: int, t_idx: int):
    arcs: dict[int, dict[int, int]] = {}
    adj = g._adj_lists()
    for w in range(g.n):
        arcs[w] = {x: 1 for x in adj[w]}
    value, reach = _max_flow(g.n, arcs, s_idx, t_idx)
    idx = g._index
    cut = tuple(
        e for e in g.edges if (idx[e[0]] in reach) != (idx[e[1]] in reach)
    )
    return value, cut


def edge_connectivity(g: Graph):
    """Global edge connectivity with a minimum edge cut witness."""
    if g.n < 2:
        raise EmptyGraphError("edge connectivity needs at least 2 vertices")
    best = None
    best_cut = None
    for t in range(1, g.n):
        value, cut = _edge_flow(g, 0, t)
        if best is None or value < best:
            best, best_cut = value, cut
    remaining = g.without_edges(best_cut)
    if is_connected(remaining) and best > 0:
        raise AssertionError("edge cut witness failed re-verification")
    return best, best_cut


def is_k_connected(g: Graph, k: int) -> bool:
    """At least k+1 vertices and no vertex cut smaller than k.

    The vertex-count clause is enforced literally, so K_k is never
    k-connected.
    """
    if k < 0:
        raise InputError("connectivity level must be >= 0")
    if g.n < k + 1:
        return False
    if k == 0:
        return True
    if k == 1:
        return is_connected(g)
    kappa, _ = vertex_connectivity(g)
    return kappa >= k


def menger_diameter_bounds(s: int, t: int, k: int) -> tuple[int, int]:
    """Diameter bounds from connectivity: a k-connected graph on s vertices
    has diameter at most floor((s-2)/k) + 1; a k-edge-connected graph with
    t edges has diameter at most floor(t/k)."""
    if k < 1:
        raise InputError("connectivity k must be >= 1")
    if s < k + 1:
        raise InputError("a k-connected graph needs at least k+1 vertices")
    if t < 0:
        raise InputError("edge count must be >= 0")
    return (s - 2) // k + 1, t // k


class HirschVerdict(enum.Enum):
    HIRSCH = "hirsch"
    NOT_HIRSCH = "not_hirsch"
    DISCONNECTED = "disconnected"


def hirsch_verdict(diam, height: int) -> HirschVerdict:
    """Hirsch when the diameter is finite and bounded by the height."""
    if height < 0:
        raise InputError("height must be >= 0")
    if diam == inf:
        return HirschVerdict.DISCONNECTED
    return HirschVerdict.HIRSCH if diam <= height else HirschVerdict.NOT_HIRSCH


# -- dual graphs -------------------------------------------------------------


def facet_label(facet) -> str:
    return ",".join(str(v) for v in facet)


def dual_adjacency(cx: SimplicialComplex) -> set[tuple[int, int]]:
    """Dual edges as facet-index pairs: facets sharing a ridge."""
    if cx.is_void:
        raise EmptyGraphError("the void complex has no dual graph")
    if not cx.is_pure:
        raise NonPureComplexError("the dual graph requires a pure complex")
    facets = cx.facets
    out = set()
    for i in range(len(facets)):
        fi = facets[i]
        for j in range(i + 1, len(facets)):
            if bin(fi ^ facets[j]).count("1") == 2:
                out.add((i, j))
    return out

def dual_graph(cx: SimplicialComplex) -> Graph:
    """Graph on the facets; edges join facets sharing a codimension-1 face."""
    edges_idx = dual_adjacency(cx)
    labels = [facet_label(f) for f in cx.facet_labels()]
    if len(set(labels)) != len(labels):
        labels = [f"{i}:{lab}" for i, lab in enumerate(labels, start=1)]
    return Graph(labels, [(labels[i], labels[j]) for i, j in edges_idx])


def non_revisiting_path(cx: SimplicialComplex, start_facet, goal_facet):
    """A dual path that never reenters the star of an abandoned vertex.

    Breadth-first over (facet, abandoned-set) states, so the result is a
    shortest non-revisiting path and ``None`` is a proof that none exists.
    Returns the path as a tuple of facet label tuples.
    """
    if not cx.is_pure:
        raise NonPureComplexError("non-revisiting search requires a pure complex")
    sm = cx.mask_of(start_facet)
    gm = cx.mask_of(goal_facet)
    facets = cx.facets
    try:
        si = facets.index(sm)
        gi = facets.index(gm)
    except ValueError:
        raise InputError("endpoints must be facets") from None
    if si == gi:
        return (cx.labels_of(facets[si]),)
    adj: dict[int, list[int]] = {i: [] for i in range(len(facets))}
    for i, j in sorted(dual_adjacency(cx)):
        adj[i].append(j)
        adj[j].append(i)
    start = (si, 0)
    parent: dict[tuple[int, int], tuple[int, int] | None] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        fi, abandoned = state
        if fi == gi:
            path = []
            cur: tuple[int, int] | None = state
            while cur is not None:
                path.append(cx.labels_of(facets[cur[0]]))
                cur = parent[cur]
            return tuple(reversed(path))
        for j in adj[fi]:
            fj = facets[j]
            if fj & abandoned:
                continue
            nxt = (j, abandoned | (facets[fi] & ~fj))
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    return None


# -- forbidden induced pattern ------------------------------------------------

#: K6 minus two disjoint edges; no line arrangement (and hence no pure
#: simplicial complex) has a dual graph containing it as an induced subgraph.
FORBIDDEN_PATTERN_EDGES = (
    ("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"), ("1", "6"),
    ("2", "3"), ("2", "4"), ("2", "6"),
    ("3", "5"), ("3", "6"),
    ("4", "5"), ("4", "6"),
    ("5", "6"),
)


def forbidden_pattern() -> Graph:
    return Graph([str(i) for i in range(1, 7)], FORBIDDEN_PATTERN_EDGES)


def contains_forbidden_line_graph(g: Graph):
    """Search for the forbidden 6-vertex pattern as an induced subgraph.

    Returns the embedding (pattern label -> host label) or None. A witness
    certifies that the graph is not the dual graph of any arrangement of
    projective lines, nor of any pure simplicial complex.
    """
    pattern = forbidden_pattern()
    if g.n < pattern.n:
        return None
    # Most-constrained first: pattern vertices by descending degree.
    order = sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v))
    host_vertices = list(g.vertices)

    def extend(pos: int, mapping: dict):
        if pos == len(order):
            return dict(mapping)
        p = order[pos]
        for h in host_vertices:
            if h in mapping.values():
                continue
            if g.degree(h) < pattern.degree(p):
                continue
            ok = True
            for q, hq in mapping.items():
                if pattern.has_edge(p, q) != g.has_edge(h, hq):
                    ok = False
                    break
            if ok:
                mapping[p] = h
                found = extend(pos + 1, mapping)
                if found:
                    return found
                del mapping[p]
        return None

    witness = extend(0, {})
    if witness is None:
        return None
    for a, b in itertools.combinations(pattern.vertices, 2):
        if pattern.has_edge(a, b) != g.has_edge(witness[a], witness[b]):
            raise AssertionError("induced-subgraph witness failed re-verification")
    return witness


# -- bound calculators ---------------------------------------------------------


def degree_vertex_bound(k: int, c: int) -> int:
    """Vertex bound k^c for height-c ideals generated in degree <= k."""
    if k < 1 or c < 1:
        raise InputError("degree and height must be >= 1")
    return k**c


def regularity_vertex_bound(c: int, r: int) -> int:
    """Vertex bound sum_{i=0}^{r} C(c+i-1, i) for CM quotients of height c
    and regularity r."""
    if c < 1 or r < 0:
        raise InputError("need height >= 1 and regularity >= 0")
    return sum(comb(c + i - 1, i) for i in range(r + 1))


def larman_diameter_bound(n: int, c: int) -> int:
    """Diameter bound 2^(n-c-3) * n for CM monomial ideals of height c in
    n variables."""
    if n < 1 or c < 1:
        raise InputError("need n >= 1 and c >= 1")
    if n - c - 3 < 0:
        raise InputError(f"bound undefined: n-c-3 = {n - c - 3} < 0")
    return 2 ** (n - c - 3) * n


def degree_diameter_bound(d: int, c: int) -> int:
    """Diameter bound d^c - 2 for connected height-c ideals generated in
    degree <= d (c >= 2)."""
    if d < 1 or c < 2:
        raise InputError("need degree >= 1 and height >= 2")
    return d**c - 2


BOUND_NAMES = {
    "degree_vertex": (degree_vertex_bound, ("k", "c")),
    "regularity_vertex": (regularity_vertex_bound, ("c", "r")),
    "larman_diameter": (larman_diameter_bound, ("n", "c")),
    "degree_diameter": (degree_diameter_bound, ("d", "c")),
}


def compute_bound(name: str, params: dict) -> int:
    """Dispatch a named bound calculator on keyword parameters."""
    try:
        func, keys = BOUND_NAMES[name]
    except KeyError:
        raise UnknownFamilyError(f"unknown bound {name!r}") from None
    missing = [k for k in keys if k not in params]
    if missing:
        raise InputError(f"bound {name!r} needs parameters {keys}")
    return func(*(params[k] for k in keys))


# -- graph families --------------------------------------------------------------


def hypercube_graph(n: int) -> Graph:
    """1-skeleton of the n-cube: binary strings, edges flip one bit."""
    if n < 1:
        raise InputError("hypercube dimension must be >= 1")
    labels = [format(i, f"0{n}b") for i in range(1 << n)]
    edges = []
    for i in range(1 << n):
        for b in range(n):
            j = i ^ (1 << b)
            if i < j:
                edges.append((labels[i], labels[j]))
    return Graph(labels, edges)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("path length must be >= 1 vertex")
    labels = [str(i) for i in range(1, n + 1)]
    return Graph(labels, list(zip(labels, labels[1:])))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs >= 1 vertex")
    labels = [str(i) for i in range(1, n + 1)]
    return Graph(labels, list(itertools.combinations(labels, 2)))


GRAPH_FAMILIES = ("hypercube", "path", "complete", "forbidden6")


def generate_graph(family: str, parameter: int | None = None) -> Graph:
    if family == "hypercube":
        if parameter is None:
            raise InputError("hypercube needs a parameter n >= 1")
        return hypercube_graph(parameter)
    if family == "path":
        if parameter is None:
            raise InputError("path needs a parameter n >= 1")
        return path_graph(parameter)
    if family == "complete":
        if parameter is None:
            raise InputError("complete needs a parameter n >= 1")
        return complete_graph(parameter)
    if family == "forbidden6":
        return forbidden_pattern()
    raise UnknownFamilyError(
        f"unknown graph family {family!r} (choose from {', '.join(GRAPH_FAMILIES)})"
    )


# -- graph file format ------------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """One edge per line ("u v"); isolated vertices on lines "v X";
    lines starting with '#' are comments."""
    edges = []
    isolated = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two tokens, got {len(tokens)}", line=lineno)
        if tokens[0] == "v":
            isolated.append(tokens[1])
        else:
            if tokens[0] == tokens[1]:
                raise ParseError("loops are not allowed", line=lineno)
            edges.append((tokens[0], tokens[1]))
    return Graph.from_edges(edges, isolated=isolated)


def format_graph_text(g: Graph) -> str:
    lines = []
    for u, v in g.edges:
        if str(u) == "v":  # avoid colliding with the isolated-vertex marker
            u, v = v, u
        lines.append(f"{u} {v}")
    covered = {w for e in g.edges for w in e}
    for w in g.vertices:
        if w not in covered:
            lines.append(f"v {w}")
    return "\n".join(str(x) for x in lines) + ("\n" if lines else "")


def read_graph_file(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def write_graph_file(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph_text(g))
