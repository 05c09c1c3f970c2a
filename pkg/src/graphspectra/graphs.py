"""Finite multigraphs, oriented edges, and directed edge matrices.

A :class:`FiniteGraph` is an undirected multigraph (loops and parallel
edges allowed) that is required to be connected.  Its oriented-edge view
doubles each edge into two directed copies related by a fixed-point-free
reversal involution; a loop still contributes two distinct orientations.

The directed edge matrix is the 0/1 matrix on oriented edges with entry
(e, e') = 1 exactly when e' continues e without backtracking, i.e.
target(e) = source(e') and e' is not the reversal of e.  Index order is
deterministic: edges sorted by id, forward orientation before backward.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidGraph, InvalidRank


@dataclass(frozen=True)
class FiniteGraph:
    """Connected undirected multigraph with explicit edge identifiers."""

    vertices: tuple
    edges: tuple  # (edge_id, src, dst) triples

    def __post_init__(self):
        if not self.vertices:
            raise InvalidGraph("graph has no vertices")
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise InvalidGraph("duplicate vertex ids", witness=self.vertices)
        seen = set()
        for eid, src, dst in self.edges:
            if eid in seen:
                raise InvalidGraph("duplicate edge id", witness=eid)
            seen.add(eid)
            if src not in vset or dst not in vset:
                raise InvalidGraph("edge endpoint not a vertex", witness=(eid, src, dst))
        if not self._connected():
            raise InvalidGraph("graph is not connected")

    def _connected(self) -> bool:
        adj: dict = {v: [] for v in self.vertices}
        for _, src, dst in self.edges:
            adj[src].append(dst)
            adj[dst].append(src)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def degree(self, v) -> int:
        # a loop at v counts twice
        return sum((src == v) + (dst == v) for _, src, dst in self.edges)

    def betti_number(self) -> int:
        """First Betti number #edges - #vertices + 1 (graph is connected)."""
        return len(self.edges) - len(self.vertices) + 1

    def oriented_edges(self) -> list["OrientedEdge"]:
        """All 2#edges orientations, edges by ascending id, forward first."""
        out = []
        for eid, src, dst in sorted(self.edges, key=lambda e: _sort_key(e[0])):
            out.append(OrientedEdge(eid, True, src, dst))
            out.append(OrientedEdge(eid, False, dst, src))
        return out


def _sort_key(value):
    # stable order for mixed int/str ids
    return (isinstance(value, str), value)


@dataclass(frozen=True)
class OrientedEdge:
    edge_id: object
    forward: bool
    source: object
    target: object

    def reversal(self) -> "OrientedEdge":
        return OrientedEdge(self.edge_id, not self.forward, self.target, self.source)

    @property
    def label(self) -> str:
        return f"{self.edge_id}{'+' if self.forward else '-'}"


@dataclass(frozen=True)
class EdgeMatrix:
    """Square 0/1 matrix indexed by oriented edges (or abstract letters)."""

    matrix: tuple  # tuple of tuples of 0/1 ints
    labels: tuple  # one label per index

    def __post_init__(self):
        n = len(self.matrix)
        if len(self.labels) != n:
            raise InvalidGraph("label count does not match matrix size")
        for row in self.matrix:
            if len(row) != n:
                raise InvalidGraph("matrix is not square")
            if any(x not in (0, 1) for x in row):
                raise InvalidGraph("matrix entries must be 0/1")

    @property
    def size(self) -> int:
        return len(self.matrix)

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.matrix]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.matrix]


def directed_edge_matrix(g: FiniteGraph) -> EdgeMatrix:
    """Directed edge matrix of a finite graph on its 2#edges oriented edges.

    Entry (e, e') is 1 iff target(e) = source(e') and e' != reversal(e).
    Raises InvalidGraph on an edgeless graph.
    """
    if not g.edges:
        raise InvalidGraph("graph has no edges")
    oriented = g.oriented_edges()
    n = len(oriented)
    rows = []
    for e in oriented:
        rev = e.reversal()
        rows.append(tuple(
            1 if (e.target == f.source and f != rev) else 0
            for f in oriented
        ))
    return EdgeMatrix(tuple(rows), tuple(e.label for e in oriented))


def cayley_schottky_matrix(g: int) -> EdgeMatrix:
    """Transition matrix of the full rank-g free group shift.

    Letters 1..2g stand for g generators followed by their inverses;
    entry (i, j) is 1 iff |i - j| != g, so a letter may be followed by
    anything except its inverse.
    """
    if g < 1:
        raise InvalidRank("rank must be a positive integer", witness=g)
    n = 2 * g
    rows = tuple(
        tuple(1 if abs(i - j) != g else 0 for j in range(n))
        for i in range(n)
    )
    labels = tuple(
        f"a{i + 1}" if i < g else f"A{i - g + 1}"
        for i in range(n)
    )
    return EdgeMatrix(rows, labels)


def wedge_of_two_loops() -> FiniteGraph:
    return FiniteGraph(("v",), (("x", "v", "v"), ("y", "v", "v")))


def theta_graph() -> FiniteGraph:
    return FiniteGraph(("u", "v"), (("a", "u", "v"), ("b", "u", "v"), ("c", "u", "v")))


def dumbbell_graph() -> FiniteGraph:
    return FiniteGraph(
        ("u", "v"),
        (("p", "u", "u"), ("b", "u", "v"), ("q", "v", "v")),
    )


def genus2_catalog() -> list[FiniteGraph]:
    """The three combinatorial types of connected genus-2 dual graphs."""
    return [wedge_of_two_loops(), theta_graph(), dumbbell_graph()]


def kato_graph(r: int) -> FiniteGraph:
    """Theta graph with 2r+1 extra vertices inserted on each of its three edges.

    For r >= 1 the result has 2 + 3(2r+1) vertices and 3(2r+2) edges and
    first Betti number 2.  The boundary value r = 0 returns the plain theta
    graph (documented behavior, not an error).
    """
    if r < 0:
        raise InvalidRank("subdivision parameter must be >= 0", witness=r)
    if r == 0:
        return theta_graph()
    vertices = ["u", "v"]
    edges = []
    for line in ("a", "b", "c"):
        chain = ["u"] + [f"{line}{k}" for k in range(2 * r + 1)] + ["v"]
        vertices.extend(chain[1:-1])
        for k in range(len(chain) - 1):
            edges.append((f"{line}e{k}", chain[k], chain[k + 1]))
    return FiniteGraph(tuple(vertices), tuple(edges))


def permutation_equivalent(a: EdgeMatrix | list, b: EdgeMatrix | list,
                           cap: int = 8) -> tuple | None:
    """Search for a simultaneous row/column permutation carrying a onto b.

    Brute force over index bijections with degree-sequence pruning;
    intended for matrices of size <= cap (<= 8 oriented edges).  Returns
    the permutation as a tuple (image of each index) or None.
    """
    ra = a.rows() if isinstance(a, EdgeMatrix) else [list(r) for r in a]
    rb = b.rows() if isinstance(b, EdgeMatrix) else [list(r) for r in b]
    n = len(ra)
    if len(rb) != n:
        return None
    if n > cap:
        raise InvalidGraph(f"brute-force permutation search capped at {cap}", witness=n)
    cols_a = [[ra[i][j] for i in range(n)] for j in range(n)]
    cols_b = [[rb[i][j] for i in range(n)] for j in range(n)]
    sig_a = [(sum(ra[i]), sum(cols_a[i]), ra[i][i]) for i in range(n)]
    sig_b = [(sum(rb[i]), sum(cols_b[i]), rb[i][i]) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None

    perm = [None] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or sig_a[i] != sig_b[j]:
                continue
            ok = True
            for k in range(i):
                if ra[i][k] != rb[j][perm[k]] or ra[k][i] != rb[perm[k]][j]:
                    ok = False
                    break
            if ok and ra[i][i] == rb[j][j]:
                perm[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                used[j] = False
                perm[i] = None
        return False

    return tuple(perm) if extend(0) else None
