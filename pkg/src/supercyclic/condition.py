"""The neighborhood condition necessary for super-cyclicity, plus degree bounds.

The condition: for every A subset of X with |A| >= 3,

    |N^(A)| >= |A|   and   the induced graph on A union N^(A) is 2-connected,

where N^(A) is the super-neighborhood (Y-vertices with two neighbors in A).
The ``kim`` mode tests the 2-connectivity clause only on triples, which
accepts exactly the same graphs; both modes are exposed so the equivalence
stays testable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraph import (Bigraph, VertexSet, SIDE_X,
                      _is_two_connected_induced)
from .bitset import bit
from .errors import InputError

MODES = ("full", "kim")


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the neighborhood condition on one graph.

    At most one witness is set; the scan goes by ascending subset size and
    lexicographic order within a size, and stops at the first failure, so
    a witness is always a minimal failing subset in that order.
    """

    passed: bool
    mode: str
    size_witness: VertexSet | None = None
    connectivity_witness: VertexSet | None = None

    def __post_init__(self) -> None:
        both_absent = self.size_witness is None and \
            self.connectivity_witness is None
        if self.passed != both_absent:
            raise InputError("passed iff no witness is set")

    def describe(self) -> str:
        if self.passed:
            return f"neighborhood condition: PASS [mode={self.mode}]"
        if self.size_witness is not None:
            a = self.size_witness
            return (f"neighborhood condition: FAIL [mode={self.mode}]; "
                    f"|N^({a})| < {len(a)}")
        a = self.connectivity_witness
        return (f"neighborhood condition: FAIL [mode={self.mode}]; "
                f"graph on {a} union N^({a}) is not 2-connected")


def check_condition(g: Bigraph, mode: str = "full") -> ConditionReport:
    """Test the neighborhood condition; vacuously true when |X| < 3."""
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}, got {mode!r}")
    nx = g.x_count
    if nx < 3:
        return ConditionReport(True, mode)
    for size in range(3, nx + 1):
        check_conn = mode == "full" or size == 3
        hit = _scan_size(g, size, check_conn)
        if hit is not None:
            kind, amask = hit
            a = VertexSet(SIDE_X, amask)
            if kind == "size":
                return ConditionReport(False, mode, size_witness=a)
            return ConditionReport(False, mode, connectivity_witness=a)
    return ConditionReport(True, mode)


def _scan_size(g: Bigraph, size: int,
               check_conn: bool) -> tuple[str, int] | None:
    """First failing subset of the given size, in lexicographic order."""
    nx = g.x_count
    x_adj = g.x_adj

    def rec(start: int, count: int, amask: int,
            once: int, twice: int) -> tuple[str, int] | None:
        if count == size:
            if twice.bit_count() < size:
                return ("size", amask)
            if check_conn and not _is_two_connected_induced(g, amask, twice):
                return ("conn", amask)
            return None
        for i in range(start, nx - (size - count) + 2):
            nbr = x_adj[i]
            hit = rec(i + 1, count + 1, amask | bit(i),
                      once | nbr, twice | (once & nbr))
            if hit is not None:
                return hit
        return None

    return rec(1, 0, 0, 0, 0)


def min_deficiency(g: Bigraph) -> tuple[int, VertexSet]:
    """min over A of |N^(A)| - |A|, with a subset attaining it.

    Ties break to the smallest subset, then lexicographically.  Negative
    means the size clause of the condition fails; 0 means the graph sits on
    its boundary.  Defined only for |X| >= 3.
    """
    nx = g.x_count
    if nx < 3:
        raise InputError("deficiency is defined for graphs with |X| >= 3")
    x_adj = g.x_adj
    best: tuple[int, int] | None = None  # (deficiency, mask)

    def rec(start: int, count: int, amask: int, once: int, twice: int) -> None:
        nonlocal best
        if count == size:
            d = twice.bit_count() - size
            if best is None or d < best[0]:
                best = (d, amask)
            return
        for i in range(start, nx - (size - count) + 2):
            nbr = x_adj[i]
            rec(i + 1, count + 1, amask | bit(i),
                once | nbr, twice | (once & nbr))

    for size in range(3, nx + 1):
        rec(1, 0, 0, 0, 0)
    assert best is not None
    return best[0], VertexSet(SIDE_X, best[1])


@dataclass(frozen=True)
class DegreeThresholds:
    """Exact integer tests of the minimum-X-degree hypotheses.

    With n = |X|, m = |Y| and d the minimum X-side degree, the three bounds
    are d >= max(n, (m+2)/2), d >= max(n, (m+5)/3) and
    d >= max(n, (m+10)/4), decided as 2d >= m+2 and so on, never through
    floating point.
    """

    x_count: int
    y_count: int
    min_x_degree: int
    meets_half_bound: bool
    meets_third_bound: bool
    meets_quarter_bound: bool

    def describe(self) -> str:
        def mark(b: bool) -> str:
            return "yes" if b else "no"
        return (f"n={self.x_count} m={self.y_count} delta={self.min_x_degree}; "
                f"delta >= max(n,(m+2)/2): {mark(self.meets_half_bound)}; "
                f">= max(n,(m+5)/3): {mark(self.meets_third_bound)}; "
                f">= max(n,(m+10)/4): {mark(self.meets_quarter_bound)}")


def degree_hypothesis(g: Bigraph) -> DegreeThresholds:
    n = g.x_count
    m = g.y_count
    d = g.min_x_degree
    return DegreeThresholds(
        x_count=n,
        y_count=m,
        min_x_degree=d,
        meets_half_bound=d >= n and 2 * d >= m + 2,
        meets_third_bound=d >= n and 3 * d >= m + 5,
        meets_quarter_bound=d >= n and 4 * d >= m + 10,
    )
