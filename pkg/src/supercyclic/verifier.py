"""Verification campaigns: exhaustive theorem reproduction at desk scale,
the counterexample hunt, and the lemma audit for candidate critical graphs.

Reports are deterministic: the machine serialization excludes timing and
worker counts, campaigns consume the enumeration stream in its canonical
order, and random hunts seed each trial as seed + trial index, so the same
parameters always produce byte-identical machine reports, with any number
of workers.
"""

from __future__ import annotations

import multiprocessing
import random
import time
from dataclasses import dataclass
from functools import partial
from itertools import islice
from typing import Callable, Iterable, Iterator

from .bigraph import (Bigraph, VertexSet, SIDE_X, SIDE_Y, is_two_connected,
                      reduce_to_superneighborhood, super_neighborhood)
from .bitset import bit, full_mask, iter_bits, mask_of
from .classify import find_critical_core, is_critical, is_saturated, is_y_minimal
from .condition import check_condition, degree_hypothesis, min_deficiency
from .cycles import BaseCycle, find_based_cycle, is_k_cyclic, is_super_cyclic
from .errors import InputError, SupercyclicError
from .formats import serialize_bigraph
from .generators import enumerate_bigraphs, random_bigraph
from .reports import machine_lines
from .structure import max_fan
from .verifier_checkpoint import (CheckpointConfig, CheckpointState,
                                  load_checkpoint, save_checkpoint)

Progress = Callable[[str], None]


@dataclass(frozen=True)
class Violation:
    """One graph that refutes the claim a campaign tests."""

    check: str
    graph_text: str
    witness: str
    extra: str = ""


@dataclass(frozen=True)
class VerificationReport:
    campaign: str
    parameters: tuple[tuple[str, str], ...]
    graphs_examined: int
    graphs_checked: int
    violations: tuple[Violation, ...]
    deterministic: bool
    elapsed_seconds: float
    notes: tuple[str, ...] = ()

    @property
    def confirmed(self) -> bool:
        return not self.violations

    def to_machine(self) -> str:
        """Stable serialization: excludes timing so reruns compare equal."""
        pairs = [("report", self.campaign)]
        pairs.extend((f"param.{k}", v) for k, v in self.parameters)
        pairs.append(("graphs_examined", str(self.graphs_examined)))
        pairs.append(("graphs_checked", str(self.graphs_checked)))
        pairs.append(("deterministic", str(self.deterministic).lower()))
        pairs.append(("violations", str(len(self.violations))))
        for i, v in enumerate(self.violations):
            pairs.append((f"violation.{i}.check", v.check))
            pairs.append((f"violation.{i}.witness", v.witness))
            pairs.append((f"violation.{i}.graph", v.graph_text))
            if v.extra:
                pairs.append((f"violation.{i}.extra", v.extra))
        for i, n in enumerate(self.notes):
            pairs.append((f"note.{i}", n))
        pairs.append(("result", "confirmed" if self.confirmed else "refuted"))
        return machine_lines(pairs)

    def to_text(self) -> str:
        lines = [f"campaign: {self.campaign}"]
        lines.append("parameters: " +
                     " ".join(f"{k}={v}" for k, v in self.parameters))
        lines.append(f"graphs examined: {self.graphs_examined}")
        lines.append(f"graphs checked (hypotheses held): {self.graphs_checked}")
        lines.append(f"violations: {len(self.violations)}")
        for i, v in enumerate(self.violations):
            lines.append(f"  [{i}] {v.check}: witness {v.witness}")
            for gl in v.graph_text.strip().split("\n"):
                lines.append(f"      {gl}")
            if v.extra:
                for el in v.extra.strip().split("\n"):
                    lines.append(f"      | {el}")
        for n in self.notes:
            lines.append(f"note: {n}")
        lines.append(f"result: {'CONFIRMED' if self.confirmed else 'REFUTED'}")
        lines.append(f"elapsed: {self.elapsed_seconds:.2f} s")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class HuntConfig:
    """Parameters of a counterexample hunt.

    Exhaustive mode walks the canonical enumeration (generator caps apply).
    Random mode runs ``trials`` independent seeded attempts: a random graph
    with the requested minimum X-degree is pushed toward the boundary of
    the neighborhood condition (deficiency 0) by local edge repairs, then
    tested.  Trial i uses seed + i, so reports do not depend on --jobs.
    """

    nx: int
    ny_max: int
    mode: str = "exhaustive"
    seed: int = 0
    trials: int = 0
    min_x_degree: int = 2

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise InputError(f"hunt mode must be exhaustive or random, "
                             f"got {self.mode!r}")
        if self.mode == "random" and self.trials < 1:
            raise InputError("random mode needs trials >= 1")

    def parameters(self) -> tuple[tuple[str, str], ...]:
        out = [("mode", self.mode), ("nx", str(self.nx)),
               ("ny_max", str(self.ny_max))]
        if self.mode == "random":
            out += [("seed", str(self.seed)), ("trials", str(self.trials)),
                    ("min_x_degree", str(self.min_x_degree))]
        return tuple(out)


# -- campaign drivers --------------------------------------------------------

def verify_k_cyclic(nx: int, ny_max: int, k: int, *, jobs: int = 1,
                    checkpoint: CheckpointConfig | None = None,
                    progress: Progress | None = None) -> VerificationReport:
    """Every enumerated condition-satisfying graph must be k-cyclic."""
    if not 3 <= k <= nx:
        raise InputError(f"need 3 <= k <= nx, got k={k}, nx={nx}")
    params = (("nx", str(nx)), ("ny_max", str(ny_max)), ("k", str(k)))
    return _drive("verify-k-cyclic", params,
                  lambda: enumerate_bigraphs(nx, ny_max),
                  partial(_eval_k_cyclic, k),
                  jobs=jobs, checkpoint=checkpoint, progress=progress)


def verify_degree_theorem(nx: int, ny_max: int, *, jobs: int = 1,
                          checkpoint: CheckpointConfig | None = None,
                          progress: Progress | None = None) -> VerificationReport:
    """Condition plus the quarter degree bound must force super-cyclicity."""
    params = (("nx", str(nx)), ("ny_max", str(ny_max)))
    return _drive("verify-degree-theorem", params,
                  lambda: enumerate_bigraphs(nx, ny_max),
                  _eval_degree,
                  jobs=jobs, checkpoint=checkpoint, progress=progress)


def hunt_counterexample(config: HuntConfig, *, jobs: int = 1,
                        checkpoint: CheckpointConfig | None = None,
                        progress: Progress | None = None) -> VerificationReport:
    """Search for a condition-satisfying graph that is not super-cyclic.

    A hit is a finding, not an error: the report carries the graph, the
    failing base, the extracted critical core, and labeled audits of the
    hit graph, its degree-reduced form, and the core.
    """
    if config.mode == "exhaustive":
        return _drive("hunt", config.parameters(),
                      lambda: enumerate_bigraphs(config.nx, config.ny_max),
                      _eval_hunt_graph,
                      jobs=jobs, checkpoint=checkpoint, progress=progress)
    return _drive("hunt", config.parameters(),
                  lambda: iter(range(config.trials)),
                  partial(_hunt_trial, config),
                  jobs=jobs, checkpoint=checkpoint, progress=progress)


def _drive(campaign: str, parameters: tuple[tuple[str, str], ...],
           items_factory: Callable[[], Iterator], evaluate,
           *, jobs: int, checkpoint: CheckpointConfig | None,
           progress: Progress | None) -> VerificationReport:
    start = time.perf_counter()
    key = ";".join(f"{k}={v}" for k, v in parameters)
    examined = 0
    checked = 0
    violations: list[Violation] = []
    if checkpoint is not None:
        state = load_checkpoint(checkpoint.path, campaign, key)
        if state is not None:
            examined, checked = state.examined, state.checked
            violations = [Violation(*v) for v in state.violations]
            if state.complete:
                return _assemble(campaign, parameters, examined, checked,
                                 violations, start)
            if progress:
                progress(f"resuming after {examined} graphs")
    items = items_factory()
    if examined:
        items = islice(items, examined, None)

    def consume(results: Iterable[tuple[bool, Violation | None]]) -> None:
        nonlocal examined, checked
        for was_checked, viol in results:
            examined += 1
            if was_checked:
                checked += 1
            if viol is not None:
                violations.append(viol)
            if progress and examined % 2000 == 0:
                progress(f"{examined} examined, {checked} checked, "
                         f"{len(violations)} violations")
            if checkpoint is not None and examined % checkpoint.every == 0:
                save_checkpoint(checkpoint.path, CheckpointState(
                    campaign, key, examined, checked, False,
                    tuple((v.check, v.graph_text, v.witness, v.extra)
                          for v in violations)))

    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            consume(pool.imap(evaluate, items, chunksize=16))
    else:
        consume(map(evaluate, items))
    if checkpoint is not None:
        save_checkpoint(checkpoint.path, CheckpointState(
            campaign, key, examined, checked, True,
            tuple((v.check, v.graph_text, v.witness, v.extra)
                  for v in violations)))
    return _assemble(campaign, parameters, examined, checked, violations, start)


def _assemble(campaign, parameters, examined, checked, violations, start):
    return VerificationReport(
        campaign=campaign, parameters=tuple(parameters),
        graphs_examined=examined, graphs_checked=checked,
        violations=tuple(violations), deterministic=True,
        elapsed_seconds=time.perf_counter() - start)


# -- per-graph evaluators (module level: workers must pickle them) ----------

def _eval_k_cyclic(k: int, g: Bigraph) -> tuple[bool, Violation | None]:
    if not check_condition(g, "kim").passed:
        return False, None
    rep = is_k_cyclic(g, k)
    if rep.passed:
        return True, None
    return True, Violation("k_cyclic", serialize_bigraph(g),
                           str(rep.witness))


def _eval_degree(g: Bigraph) -> tuple[bool, Violation | None]:
    if not degree_hypothesis(g).meets_quarter_bound:
        return False, None
    if not check_condition(g, "kim").passed:
        return False, None
    rep = is_super_cyclic(g)
    if rep.passed:
        return True, None
    return True, Violation("degree_theorem", serialize_bigraph(g),
                           str(rep.witness))


def _eval_hunt_graph(g: Bigraph) -> tuple[bool, Violation | None]:
    if not check_condition(g, "kim").passed:
        return False, None
    sc = is_super_cyclic(g)
    if sc.passed:
        return True, None
    return True, _hit_dossier(g, sc.witness)


def _hunt_trial(config: HuntConfig, i: int) -> tuple[bool, Violation | None]:
    rng = random.Random(config.seed + i)
    ny = rng.randint(min(3, config.ny_max), config.ny_max) if config.ny_max \
        else 0
    g = random_bigraph(config.nx, ny, min(config.min_x_degree, ny),
                       rng.randrange(1 << 30))
    g = _repair_to_boundary(g, rng)
    if g is None:
        return False, None
    return _eval_hunt_graph(g)


def _repair_to_boundary(g: Bigraph, rng: random.Random) -> Bigraph | None:
    """Nudge a random graph onto the condition's boundary (deficiency 0).

    Alternates between repairing a failed clause by adding one helpful edge
    and thinning a comfortably-passing graph by deleting one edge.  Bounded;
    returns the last condition-satisfying state, or None if never reached.
    """
    if g.x_count < 3:
        return None
    last_good: Bigraph | None = None
    for _ in range(4 * max(1, g.x_count) * max(1, g.y_count)):
        rep = check_condition(g, "kim")
        if rep.passed:
            d, _a = min_deficiency(g)
            if d == 0:
                return g
            last_good = g
            edges = sorted(g.edges())
            heavy = [e for e in edges
                     if g.degree(SIDE_X, e[0]) > 2 and g.degree(SIDE_Y, e[1]) > 2]
            pool = heavy or edges
            if not pool:
                return g
            x, y = pool[rng.randrange(len(pool))]
            g = g.without_edge(x, y)
            continue
        if rep.size_witness is not None:
            amask = rep.size_witness.mask
            ones = [j for j in g.y_indices()
                    if (g.y_adj[j] & amask).bit_count() == 1]
            zeros = [j for j in g.y_indices()
                     if (g.y_adj[j] & amask).bit_count() == 0]
            cands = ones or zeros
            if not cands:
                return last_good
            j = cands[rng.randrange(len(cands))]
            missing = [x for x in rep.size_witness.members
                       if not g.has_edge(x, j)]
            if not missing:
                return last_good
            g = g.with_edge(missing[rng.randrange(len(missing))], j)
        else:
            a = rep.connectivity_witness
            nh = super_neighborhood(g, a)
            pairs = [(x, j) for x in a.members for j in nh.members
                     if not g.has_edge(x, j)]
            if not pairs:
                pairs = [(x, j) for x in a.members for j in g.y_indices()
                         if not g.has_edge(x, j)]
            if not pairs:
                return last_good
            x, j = pairs[rng.randrange(len(pairs))]
            g = g.with_edge(x, j)
    return last_good


def _hit_dossier(g: Bigraph, witness: VertexSet) -> Violation:
    """Full workup of a hunt hit: core extraction plus labeled audits."""
    sections = []
    try:
        core = find_critical_core(g)
        assert core is not None
        sections.append("core graph:\n" + serialize_bigraph(core))
        sections.append("audit[core]:\n" +
                        audit_critical_properties(core).to_machine())
    except SupercyclicError as exc:
        sections.append(f"core extraction inconsistency: {exc}")
    # which graph the audit morally applies to is ambiguous, so label both
    # the hit graph and its reduced form alongside the core
    sections.append("audit[hit graph]:\n" +
                    audit_critical_properties(g).to_machine())
    reduced = reduce_to_superneighborhood(g).graph
    if reduced != g:
        sections.append("audit[reduced hit graph]:\n" +
                        audit_critical_properties(reduced).to_machine())
    return Violation("counterexample", serialize_bigraph(g), str(witness),
                     extra="\n".join(sections))


# -- the lemma audit ---------------------------------------------------------

def audit_critical_properties(g: Bigraph) -> VerificationReport:
    """Check every structural consequence of criticality against ``g``.

    Vacuous (checked = 0) when the graph is not critical.  Otherwise each
    conclusion below must hold, gated on its hypotheses; a violation means
    either a classification bug or a genuine mathematical finding, and the
    report says exactly which conclusion broke.
    """
    start = time.perf_counter()
    params = (("x_count", str(g.x_count)), ("y_count", str(g.y_count)),
              ("edge_count", str(g.edge_count)))
    crit = is_critical(g)
    if not crit.passed:
        return VerificationReport(
            "audit-critical", params, 1, 0, (), True,
            time.perf_counter() - start,
            notes=(f"vacuous: not critical ({crit.detail})",))

    gtxt = serialize_bigraph(g)
    violations: list[Violation] = []

    def viol(check: str, witness: str) -> None:
        violations.append(Violation(check, gtxt, witness))

    sat = is_saturated(g)
    ym = is_y_minimal(g, "exhaustive" if g.edge_count <= 20
                      else "one_deletion")
    notes = [f"gate saturated: {str(sat.passed).lower()}",
             f"gate y_minimal: {str(ym.passed).lower()}"
             + (" (one-deletion scan only)" if ym.approximate else "")]

    nx = g.x_count
    full_x = full_mask(nx)

    # consequences of the condition alone
    for x1 in g.x_indices():
        for x2 in range(x1 + 1, nx + 1):
            if not g.x_adj[x1] & g.x_adj[x2]:
                viol("pairwise_common_neighbor", f"x{x1},x{x2}")
    if not is_two_connected(g):
        viol("two_connected", "whole graph")

    # consequences of criticality, relative to a cycle based on X minus x0
    cycles: dict[int, BaseCycle] = {}
    for x0 in g.x_indices():
        if nx - 1 < 3:
            break
        a = VertexSet(SIDE_X, full_x & ~bit(x0))
        c = find_based_cycle(g, a)
        if c is None:
            viol("proper_restriction_cycle", f"no cycle based on {a}")
            continue
        cycles[x0] = c
        _audit_detours(g, x0, c, viol)
        fan = max_fan(g, x0, c)
        if fan.size > c.half_length - 2:
            viol("fan_contact_bound",
                 f"x{x0}: fan size {fan.size} > {c.half_length - 2}")

    if sat.passed:
        for j in g.y_indices():
            dj = g.degree(SIDE_Y, j)
            if dj == nx - 1:
                viol("y_degree_not_x_minus_1", f"y{j}")
            if dj == nx - 2:
                viol("y_degree_not_x_minus_2", f"y{j}")
        deg2 = [x for x in g.x_indices() if g.degree(SIDE_X, x) == 2]
        if len(deg2) > 1:
            viol("degree_two_x_unique",
                 ",".join(f"x{x}" for x in deg2))
        for x in deg2:
            for j in iter_bits(g.x_adj[x]):
                if g.y_adj[j] != full_x:
                    viol("degree_two_x_neighbors_complete",
                         f"x{x}: y{j} misses part of X")
            for other in g.x_indices():
                if other != x and g.degree(SIDE_X, other) < 4:
                    viol("degree_two_x_forces_degree_four",
                         f"x{x} has degree 2 but x{other} has degree "
                         f"{g.degree(SIDE_X, other)}")
        if nx == 6 and max(g.degree(SIDE_X, x) for x in g.x_indices()) < 4:
            viol("x_max_degree_at_least_4", "all X-degrees <= 3")

    if sat.passed and ym.passed:
        deg2y = [j for j in g.y_indices() if g.degree(SIDE_Y, j) == 2]
        for i, j1 in enumerate(deg2y):
            for j2 in deg2y[i + 1:]:
                if g.y_adj[j1] == g.y_adj[j2]:
                    viol("degree_two_y_neighborhoods_distinct",
                         f"y{j1},y{j2}")
        for x0, c in cycles.items():
            nonneighbors = sum(1 for y in c.ys if not g.has_edge(x0, y))
            if nonneighbors < 2:
                viol("offcycle_x_two_cycle_nonneighbors",
                     f"x{x0}: only {nonneighbors} non-neighbors on the "
                     f"cycle based on X-{{x{x0}}}")

    return VerificationReport(
        "audit-critical", params, 1, 1, tuple(violations), True,
        time.perf_counter() - start, notes=tuple(notes))


def _audit_detours(g: Bigraph, x0: int, c: BaseCycle,
                   viol: Callable[[str, str], None]) -> None:
    """Shared-neighbor exclusions around a cycle based on X minus x0."""
    l = c.half_length
    y_mask = mask_of(c.ys)
    nbr_pos = [i for i, y in enumerate(c.ys) if g.has_edge(x0, y)]

    if len(nbr_pos) < 2:
        viol("offcycle_x_min_cycle_neighbors",
             f"x{x0} has {len(nbr_pos)} neighbors on the cycle")

    # two cycle neighbors of x0: the flanking xs share no off-cycle y
    for ii, i in enumerate(nbr_pos):
        for j in nbr_pos[ii + 1:]:
            for (xa, xb) in ((c.xs[i], c.xs[j]),
                             (c.xs[(i + 1) % l], c.xs[(j + 1) % l])):
                shared = g.x_adj[xa] & g.x_adj[xb] & ~y_mask
                if shared:
                    viol("cycle_pair_no_shared_offcycle_y",
                         f"x0=x{x0}: x{xa},x{xb} share off-cycle "
                         f"y{next(iter_bits(shared))}")
        # the flanking xs share no off-cycle y with x0 itself
        for xa in (c.xs[i], c.xs[(i + 1) % l]):
            shared = g.x_adj[xa] & g.x_adj[x0] & ~y_mask
            if shared:
                viol("offcycle_x_no_shared_offcycle_y",
                     f"x0=x{x0}: x{xa} shares off-cycle "
                     f"y{next(iter_bits(shared))} with x0")

    # consecutive xs can share at most one common off-cycle y with x0
    for i in range(l):
        out_i = g.x_adj[c.xs[i]] & g.x_adj[x0] & ~y_mask
        out_j = g.x_adj[c.xs[(i + 1) % l]] & g.x_adj[x0] & ~y_mask
        if out_i and out_j and \
                (out_i != out_j or out_i.bit_count() != 1):
            viol("consecutive_xs_shared_y",
                 f"x0=x{x0}: x{c.xs[i]} and x{c.xs[(i + 1) % l]} both "
                 f"share off-cycle ys with x0, not a single common one")
