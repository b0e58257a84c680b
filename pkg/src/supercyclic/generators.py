"""Graph sources: the three-part extremal construction, exhaustive
enumeration of bigraphs up to isomorphism, and seeded random graphs.

The enumerator is orderly: a graph is represented by the nondecreasing
tuple of its Y-columns (each column is the bitmask of the y's X-neighbors),
and the canonical form is the lexicographically least such tuple over all
X-permutations.  Every prefix of a canonical tuple is canonical, so the
depth-first extension can prune non-canonical prefixes and still emit each
isomorphism class exactly once.
"""

from __future__ import annotations

import random
from itertools import permutations
from typing import Callable, Iterator

from .bigraph import Bigraph
from .condition import check_condition
from .errors import CapacityError, InputError

#: enumeration caps: isomorphism classes explode combinatorially past these
ENUM_MAX_X = 6
ENUM_MAX_Y = 8


def construct_g3(n1: int, n2: int, n3: int, delta: int) -> Bigraph:
    """Three-part construction with minimum X-degree exactly ``delta``.

    X splits into parts of sizes n1 >= n2 >= n3 >= 1; Y consists of three
    groups of delta - 2 vertices, group k complete to part k, plus two
    vertices a and b adjacent to all of X.  A base picking one vertex per
    part has super-neighborhood {a, b} only, so such triples witness both
    the failure of the neighborhood condition and the absence of a based
    cycle; the longest cycle has 2(n1 + n2) vertices once delta >= n1 + 1.

    Y-layout: group 1 is y_1..y_{delta-2}, group 2 and 3 follow, then
    a = y_{3 delta - 5}, b = y_{3 delta - 4}.
    """
    if not n1 >= n2 >= n3 >= 1:
        raise InputError(f"part sizes must satisfy n1 >= n2 >= n3 >= 1, "
                         f"got ({n1}, {n2}, {n3})")
    if delta < 3:
        raise InputError(f"the construction needs delta >= 3, got {delta}")
    nx = n1 + n2 + n3
    d2 = delta - 2
    ny = 3 * d2 + 2
    if nx > 64 or ny > 64:
        raise InputError(f"sizes ({nx}, {ny}) exceed the 64-vertex cap")
    part_of = [None] + [0] * n1 + [1] * n2 + [2] * n3  # 1-indexed
    edges = []
    for x in range(1, nx + 1):
        k = part_of[x]
        for y in range(k * d2 + 1, (k + 1) * d2 + 1):
            edges.append((x, y))
        edges.append((x, ny - 1))  # a
        edges.append((x, ny))      # b
    return Bigraph(nx, ny, edges)


def complete_bipartite(nx: int, ny: int) -> Bigraph:
    return Bigraph(nx, ny, ((x, y) for x in range(1, nx + 1)
                            for y in range(1, ny + 1)))


def enumerate_bigraphs(nx: int, ny_max: int, *,
                       min_x_degree: int | None = None,
                       min_y_degree: int | None = None,
                       require_condition: bool = False,
                       predicate: Callable[[Bigraph], bool] | None = None,
                       ) -> Iterator[Bigraph]:
    """All bigraphs with |X| = nx and |Y| <= ny_max, one per isomorphism
    class (isomorphism respects the bipartition and may permute both sides).

    Deterministic order: depth-first by appending Y-columns in nondecreasing
    bitmask order, emitting a graph at every canonical node, smallest |Y|
    first along each branch.  Filters gate emission only, never recursion,
    since none of them are monotone under adding columns.
    """
    if nx < 0 or ny_max < 0:
        raise InputError("sizes must be nonnegative")
    if nx > ENUM_MAX_X or ny_max > ENUM_MAX_Y:
        raise CapacityError(
            f"enumeration caps are |X| <= {ENUM_MAX_X}, |Y| <= {ENUM_MAX_Y}; "
            f"got ({nx}, {ny_max})")
    tables = _perm_tables(nx)
    ncols = 1 << nx

    def emit(cols: tuple[int, ...]) -> Bigraph | None:
        g = _bigraph_from_columns(nx, cols)
        if min_x_degree is not None and g.min_x_degree < min_x_degree:
            return None
        if min_y_degree is not None and g.y_count and \
                g.min_y_degree < min_y_degree:
            return None
        if require_condition and not check_condition(g, "kim").passed:
            return None
        if predicate is not None and not predicate(g):
            return None
        return g

    def walk(cols: tuple[int, ...], last: int) -> Iterator[Bigraph]:
        g = emit(cols)
        if g is not None:
            yield g
        if len(cols) == ny_max:
            return
        for c in range(last, ncols):
            nxt = cols + (c,)
            if _is_canonical(nxt, tables):
                yield from walk(nxt, c)

    yield from walk((), 0)


def _perm_tables(nx: int) -> list[list[int]]:
    """Column-relabeling table per nontrivial X-permutation."""
    tables = []
    for sigma in permutations(range(nx)):
        if sigma == tuple(range(nx)):
            continue
        table = [0] * (1 << nx)
        for code in range(1 << nx):
            out = 0
            for i in range(nx):
                if code >> i & 1:
                    out |= 1 << sigma[i]
            table[code] = out
        tables.append(table)
    return tables


def _is_canonical(cols: tuple[int, ...], tables: list[list[int]]) -> bool:
    for table in tables:
        if tuple(sorted(table[c] for c in cols)) < cols:
            return False
    return True


def _bigraph_from_columns(nx: int, cols: tuple[int, ...]) -> Bigraph:
    edges = []
    for j, code in enumerate(cols, start=1):
        for i in range(nx):
            if code >> i & 1:
                edges.append((i + 1, j))
    return Bigraph(nx, len(cols), edges)


def random_bigraph(nx: int, ny: int, min_x_degree: int = 0,
                   seed: int = 0) -> Bigraph:
    """Seeded uniform-ish bigraph: each edge with probability 1/2, then the
    lightest X-vertices are padded up to the requested minimum degree.

    Same (nx, ny, min_x_degree, seed) always yields the same graph.
    """
    if not 0 <= nx <= 64 or not 0 <= ny <= 64:
        raise InputError("sizes must be in 0..64")
    if min_x_degree > ny:
        raise InputError(f"min_x_degree={min_x_degree} is impossible "
                         f"with |Y|={ny}")
    rng = random.Random(seed)
    edges = []
    for x in range(1, nx + 1):
        mask = rng.getrandbits(ny) if ny else 0
        have = [y for y in range(1, ny + 1) if mask >> (y - 1) & 1]
        missing = [y for y in range(1, ny + 1) if not mask >> (y - 1) & 1]
        while len(have) < min_x_degree:
            pick = rng.randrange(len(missing))
            have.append(missing.pop(pick))
        edges.extend((x, y) for y in have)
    return Bigraph(nx, ny, edges)
