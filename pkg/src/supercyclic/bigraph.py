"""Core data model: bigraphs, hypergraphs, vertex subsets, neighborhoods.

A bigraph here is a bipartite graph whose bipartition (X, Y) is part of the
data: (X, Y) and (Y, X) versions of the same underlying graph are different
objects, and every notion downstream (based cycles, the neighborhood
condition, criticality) is stated relative to the X side.

Conventions:

* Vertices are 1-indexed on each side.  A subset of one side is an integer
  bitmask, bit ``i`` standing for vertex ``i`` (bit 0 unused).
* Both sides are capped at 64 vertices, which keeps every set operation a
  handful of machine words.  The cap is enforced at construction.
* ``Bigraph`` and ``Hypergraph`` are immutable.  "Mutators" such as
  ``with_edge`` return new graphs, so derived statistics can never go stale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .bitset import bit, full_mask, indices_of, iter_bits, mask_of
from .errors import InputError

SIDE_X = "X"
SIDE_Y = "Y"
MAX_SIDE = 64


@dataclass(frozen=True)
class VertexSet:
    """A subset of one side's vertices, stored as a bitmask."""

    side: str
    mask: int = 0

    def __post_init__(self) -> None:
        if self.side not in (SIDE_X, SIDE_Y):
            raise InputError(f"side must be {SIDE_X!r} or {SIDE_Y!r}, got {self.side!r}")
        if self.mask < 0 or self.mask & 1:
            raise InputError("vertex masks are 1-indexed; bit 0 must be clear")

    @classmethod
    def of(cls, side: str, indices: Iterable[int]) -> "VertexSet":
        return cls(side, mask_of(indices))

    @property
    def members(self) -> tuple[int, ...]:
        return indices_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, i: int) -> bool:
        return i >= 0 and bool(self.mask >> i & 1)

    def issubset(self, other: "VertexSet") -> bool:
        if self.side != other.side:
            raise InputError("cannot compare subsets of different sides")
        return self.mask & ~other.mask == 0

    def __str__(self) -> str:
        return f"{self.side}{{{','.join(map(str, self.members))}}}"


class InducedSubgraph(NamedTuple):
    """An induced subgraph plus the index remapping back into the host.

    ``x_map[i - 1]`` is the host X-index of the subgraph's x_i, and likewise
    for ``y_map``.
    """

    graph: "Bigraph"
    x_map: tuple[int, ...]
    y_map: tuple[int, ...]


class Bigraph:
    """Immutable bipartite graph with an ordered bipartition (X, Y)."""

    __slots__ = ("x_count", "y_count", "x_adj", "y_adj")

    def __init__(self, x_count: int, y_count: int,
                 edges: Iterable[tuple[int, int]] = ()) -> None:
        if not 0 <= x_count <= MAX_SIDE or not 0 <= y_count <= MAX_SIDE:
            raise InputError(f"side sizes must be in 0..{MAX_SIDE}, "
                             f"got ({x_count}, {y_count})")
        x_adj = [0] * (x_count + 1)
        y_adj = [0] * (y_count + 1)
        for x, y in edges:
            if not 1 <= x <= x_count or not 1 <= y <= y_count:
                raise InputError(f"edge ({x}, {y}) out of range for "
                                 f"({x_count}, {y_count})")
            x_adj[x] |= bit(y)
            y_adj[y] |= bit(x)
        self.x_count = x_count
        self.y_count = y_count
        self.x_adj = tuple(x_adj)
        self.y_adj = tuple(y_adj)

    # -- basic queries ----------------------------------------------------

    def x_indices(self) -> range:
        return range(1, self.x_count + 1)

    def y_indices(self) -> range:
        return range(1, self.y_count + 1)

    @property
    def x_full(self) -> VertexSet:
        return VertexSet(SIDE_X, full_mask(self.x_count))

    @property
    def y_full(self) -> VertexSet:
        return VertexSet(SIDE_Y, full_mask(self.y_count))

    def neighbors_mask(self, side: str, i: int) -> int:
        """Bitmask of the neighbors of vertex ``i`` on side ``side``."""
        adj = self._adj(side)
        if not 1 <= i < len(adj):
            raise InputError(f"no vertex {i} on side {side}")
        return adj[i]

    def degree(self, side: str, i: int) -> int:
        return self.neighbors_mask(side, i).bit_count()

    def has_edge(self, x: int, y: int) -> bool:
        if not 1 <= x <= self.x_count or not 1 <= y <= self.y_count:
            raise InputError(f"edge ({x}, {y}) out of range")
        return bool(self.x_adj[x] >> y & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for x in self.x_indices():
            for y in iter_bits(self.x_adj[x]):
                yield (x, y)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.x_adj)

    @property
    def min_x_degree(self) -> int:
        """Smallest X-side degree; 0 when X is empty."""
        if self.x_count == 0:
            return 0
        return min(m.bit_count() for m in self.x_adj[1:])

    @property
    def min_y_degree(self) -> int:
        if self.y_count == 0:
            return 0
        return min(m.bit_count() for m in self.y_adj[1:])

    # -- derived graphs ---------------------------------------------------

    def with_edge(self, x: int, y: int) -> "Bigraph":
        if self.has_edge(x, y):
            raise InputError(f"edge ({x}, {y}) already present")
        return Bigraph(self.x_count, self.y_count,
                       list(self.edges()) + [(x, y)])

    def without_edge(self, x: int, y: int) -> "Bigraph":
        if not self.has_edge(x, y):
            raise InputError(f"edge ({x}, {y}) not present")
        return Bigraph(self.x_count, self.y_count,
                       (e for e in self.edges() if e != (x, y)))

    def induced(self, x_mask: int, y_mask: int) -> InducedSubgraph:
        """Induced subgraph on the given masks, vertices renumbered 1..k."""
        if x_mask & ~full_mask(self.x_count) or y_mask & ~full_mask(self.y_count):
            raise InputError("induced masks contain out-of-range vertices")
        x_map = indices_of(x_mask)
        y_map = indices_of(y_mask)
        y_new = {old: new for new, old in enumerate(y_map, start=1)}
        edges = []
        for new_x, old_x in enumerate(x_map, start=1):
            for old_y in iter_bits(self.x_adj[old_x] & y_mask):
                edges.append((new_x, y_new[old_y]))
        return InducedSubgraph(Bigraph(len(x_map), len(y_map), edges),
                               x_map, y_map)

    # -- dunder -----------------------------------------------------------

    def _adj(self, side: str) -> tuple[int, ...]:
        if side == SIDE_X:
            return self.x_adj
        if side == SIDE_Y:
            return self.y_adj
        raise InputError(f"unknown side {side!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bigraph):
            return NotImplemented
        return (self.x_count, self.y_count, self.x_adj) == \
               (other.x_count, other.y_count, other.x_adj)

    def __hash__(self) -> int:
        return hash((self.x_count, self.y_count, self.x_adj))

    def __repr__(self) -> str:
        return (f"Bigraph({self.x_count}, {self.y_count}, "
                f"{sorted(self.edges())!r})")


class Hypergraph:
    """Immutable hypergraph on 1-indexed vertices; edges may repeat or be empty."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int,
                 edges: Iterable[Iterable[int]] = ()) -> None:
        if not 0 <= vertex_count <= MAX_SIDE:
            raise InputError(f"vertex count must be in 0..{MAX_SIDE}")
        frozen = []
        for e in edges:
            fe = frozenset(e)
            for v in fe:
                if not 1 <= v <= vertex_count:
                    raise InputError(f"edge vertex {v} out of range")
            frozen.append(fe)
        self.vertex_count = vertex_count
        self.edges = tuple(frozen)

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.vertex_count:
            raise InputError(f"no vertex {v}")
        return sum(1 for e in self.edges if v in e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.vertex_count, self.edges) == \
               (other.vertex_count, other.edges)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph({self.vertex_count}, {[sorted(e) for e in self.edges]!r})"


# -- neighborhood machinery ------------------------------------------------

def super_neighborhood(g: Bigraph, a: VertexSet) -> VertexSet:
    """Y-vertices with at least two neighbors inside ``a`` (an X-subset)."""
    _require_x_subset(g, a)
    m = 0
    for j in g.y_indices():
        if (g.y_adj[j] & a.mask).bit_count() >= 2:
            m |= bit(j)
    return VertexSet(SIDE_Y, m)


def induced_with_superneighborhood(g: Bigraph, a: VertexSet) -> InducedSubgraph:
    """Induced subgraph on ``a`` plus its super-neighborhood, with remapping."""
    nh = super_neighborhood(g, a)
    return g.induced(a.mask, nh.mask)


def reduce_to_superneighborhood(g: Bigraph) -> InducedSubgraph:
    """Drop exactly the Y-vertices of degree <= 1 (keeps X plus N^(X)).

    Cycle existence questions are unchanged by this reduction, but the
    neighborhood condition is not: callers that care about the condition
    must decide explicitly whether to test the host or the reduced graph.
    """
    return induced_with_superneighborhood(g, g.x_full)


def is_two_connected(g: Bigraph) -> bool:
    """True iff the whole graph is 2-connected (>= 3 vertices, no cutvertex)."""
    return _is_two_connected_induced(g, full_mask(g.x_count),
                                     full_mask(g.y_count))


def _is_two_connected_induced(g: Bigraph, x_mask: int, y_mask: int) -> bool:
    """2-connectivity of the induced subgraph, without building it."""
    nx = x_mask.bit_count()
    ny = y_mask.bit_count()
    n = nx + ny
    if n < 3:
        return False
    # cheap reject: 2-connected needs minimum degree >= 2 inside the subgraph
    for x in iter_bits(x_mask):
        if (g.x_adj[x] & y_mask).bit_count() < 2:
            return False
    for y in iter_bits(y_mask):
        if (g.y_adj[y] & x_mask).bit_count() < 2:
            return False

    xs = indices_of(x_mask)
    ys = indices_of(y_mask)
    y_local = {old: nx + k for k, old in enumerate(ys)}
    adj: list[list[int]] = [[] for _ in range(n)]
    for k, x in enumerate(xs):
        for y in iter_bits(g.x_adj[x] & y_mask):
            j = y_local[y]
            adj[k].append(j)
            adj[j].append(k)

    disc = [0] * n
    low = [0] * n
    visited = [False] * n
    timer = 1
    root_children = 0
    has_cut = False
    visited[0] = True
    disc[0] = low[0] = timer
    timer += 1
    stack: list[tuple[int, int, Iterator[int]]] = [(0, -1, iter(adj[0]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if visited[w]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                visited[w] = True
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
        if not advanced:
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if parent != 0 and low[v] >= disc[parent]:
                    has_cut = True
    if not all(visited):
        return False
    return not has_cut and root_children <= 1


def _require_x_subset(g: Bigraph, a: VertexSet) -> None:
    if a.side != SIDE_X:
        raise InputError(f"expected an X-side subset, got side {a.side!r}")
    if a.mask & ~full_mask(g.x_count):
        raise InputError("subset contains vertices outside the graph")


# -- hypergraph correspondence ----------------------------------------------

def incidence_graph(h: Hypergraph) -> Bigraph:
    """Bigraph with X = vertices of ``h`` and Y = its edge slots.

    x_v is adjacent to y_j exactly when vertex v lies in the j-th edge.  A
    cycle based on A in the result corresponds to a Berge cycle of ``h``
    whose base vertex set is A, so cycle questions on hypergraphs reduce to
    based-cycle questions here.
    """
    edges = [(v, j) for j, e in enumerate(h.edges, start=1) for v in sorted(e)]
    return Bigraph(h.vertex_count, len(h.edges), edges)


def hypergraph_of(g: Bigraph) -> Hypergraph:
    """Inverse view of :func:`incidence_graph`: Y-vertices become edges."""
    return Hypergraph(g.x_count,
                      (indices_of(g.y_adj[j]) for j in g.y_indices()))
