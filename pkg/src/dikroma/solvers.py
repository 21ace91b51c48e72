"""Exact solvers for the dichromatic and diachromatic numbers.

Both problems are NP-hard, so everything here is explicit backtracking over
vertex assignments with sound pruning only (no heuristic shortcuts), and a
"budget exhausted" outcome (an exception) kept strictly distinct from a
"no" answer.

Search design, shared by both engines:

  * vertices are assigned in descending total-degree order (ties by index);
  * color symmetry is broken canonically: a vertex may reuse any color seen
    so far or open exactly the next fresh one, so each set partition is
    visited once;
  * class acyclicity is checked incrementally on insertion by a bitmask
    reachability sweep (adding v to class S creates a cycle iff some
    in-neighbor of v in S is reachable from an out-neighbor of v inside S).

The minimization engine additionally refuses any color count below the size
of a greedily found set of pairwise-digon vertices, which must be rainbow
in every acyclic coloring. The maximization engine prunes on an exact arc
budget: a complete k-coloring must cover k(k-1) ordered color pairs with
distinct arcs, so once the arcs "wasted" on same-class pairs or repeated
color pairs exceed m - k(k-1), the branch is dead. Witnesses found by
either engine are re-verified with the public predicates before they are
returned.

Solves are single-threaded; results are therefore trivially independent of
any requested worker count.
"""

import time
from dataclasses import dataclass, field

from .core import Digraph, has_directed_cycle, delete_vertex
from .coloring import Coloring, is_acyclic_coloring, is_complete_coloring


class BudgetExhausted(Exception):
    """Raised when a search hits its node or wall-clock limit; means
    "unknown", never "no"."""

    def __init__(self, reason: str, nodes: int):
        super().__init__(f"search budget exhausted ({reason}) after {nodes} nodes")
        self.reason = reason
        self.nodes = nodes


class InterpolationGap(Exception):
    """No complete acyclic coloring at some level between the dichromatic
    and diachromatic numbers. Mathematically this should be impossible;
    raising loudly beats silently skipping a level."""

    def __init__(self, level: int, dc: int, dac: int):
        super().__init__(
            f"no complete acyclic coloring with {level} colors although "
            f"dc={dc} <= {level} <= dac={dac}")
        self.level = level


@dataclass
class Budget:
    """Shared node/wall-clock limits for one logical solve.

    tick() is called once per search node; the wall clock is polled every
    1024 nodes to keep overhead negligible.
    """

    max_nodes: int | None = None
    max_seconds: float | None = None
    nodes: int = 0
    _deadline: float | None = field(default=None, repr=False)

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted("node limit", self.nodes)
        if self.max_seconds is not None and not (self.nodes & 1023):
            if self._deadline is None:
                self._deadline = time.perf_counter() + self.max_seconds
            elif time.perf_counter() > self._deadline:
                raise BudgetExhausted("time limit", self.nodes)

    def start_clock(self) -> None:
        if self.max_seconds is not None and self._deadline is None:
            self._deadline = time.perf_counter() + self.max_seconds


@dataclass(frozen=True)
class SolveStats:
    nodes_explored: int
    elapsed: float


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Coloring
    stats: SolveStats


def _class_stays_acyclic(out_masks, in_masks, v: int, class_mask: int) -> bool:
    """Adding v to the (acyclic) class can only create a cycle through v."""
    starts = out_masks[v] & class_mask
    targets = in_masks[v] & class_mask
    if not starts or not targets:
        return True
    if starts & targets:
        return False  # digon with a class member
    seen = starts
    frontier = starts
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= out_masks[b.bit_length() - 1]
        nxt &= class_mask
        if nxt & targets:
            return False
        frontier = nxt & ~seen
        seen |= frontier
    return True


def _degree_order(d: Digraph) -> list[int]:
    return sorted(
        range(d.n),
        key=lambda v: (-(d.out_masks[v].bit_count() + d.in_masks[v].bit_count()), v),
    )


def _greedy_digon_clique(d: Digraph) -> int:
    """Size of a greedily grown set of pairwise-digon vertices; a sound
    lower bound on the dichromatic number."""
    digon = [d.out_masks[v] & d.in_masks[v] for v in range(d.n)]
    order = sorted(range(d.n), key=lambda v: (-digon[v].bit_count(), v))
    size = 0
    cand = (1 << d.n) - 1
    for v in order:
        if (cand >> v) & 1:
            size += 1
            cand &= digon[v]
    return size


def _search_acyclic(d: Digraph, k: int, budget: Budget) -> list[int] | None:
    """Any acyclic coloring with at most k colors (0-based, canonical), or
    None. Surjectivity is restored afterwards by class splitting."""
    n = d.n
    out_masks, in_masks = d.out_masks, d.in_masks
    order = _degree_order(d)
    assign = [-1] * n
    classes = [0] * k

    def dfs(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        bit = 1 << v
        for c in range(min(used + 1, k)):
            budget.tick()
            if _class_stays_acyclic(out_masks, in_masks, v, classes[c]):
                classes[c] |= bit
                assign[v] = c
                if dfs(idx + 1, used + (1 if c == used else 0)):
                    return True
                classes[c] &= ~bit
        assign[v] = -1
        return False

    return assign if dfs(0, 0) else None


def _split_to_exactly(assign: list[int], k: int) -> list[int]:
    """Refine a canonical coloring until it uses exactly k colors.

    Sound because splitting a class can never create a class cycle.
    """
    used = max(assign) + 1 if assign else 0
    while used < k:
        sizes: dict[int, int] = {}
        for c in assign:
            sizes[c] = sizes.get(c, 0) + 1
        donor = max(sizes, key=lambda c: (sizes[c], -c))
        mover = max(v for v, c in enumerate(assign) if c == donor)
        assign[mover] = used
        used += 1
    return assign


def exists_acyclic_k_coloring(d: Digraph, k: int,
                              budget: Budget | None = None) -> Coloring | None:
    """A surjective acyclic k-coloring of d, or None if none exists.

    The negative answer may be established without search when k is below
    the pairwise-digon lower bound; that refusal is a proof, not a guess.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    budget = budget or Budget()
    if k > d.n:
        return None
    if _greedy_digon_clique(d) > k:
        return None
    assign = _search_acyclic(d, k, budget)
    if assign is None:
        return None
    witness = Coloring(tuple(c + 1 for c in _split_to_exactly(assign, k)), k)
    if not is_acyclic_coloring(d, witness):
        raise RuntimeError("internal: witness failed acyclicity re-verification")
    return witness


def dichromatic_number(d: Digraph, budget: Budget | None = None) -> SolveResult:
    """Minimum color count over acyclic colorings, with a witness.

    Ascends from a sound lower bound, so the first success also proves
    every smaller count infeasible.
    """
    budget = budget or Budget()
    budget.start_clock()
    t0 = time.perf_counter()
    nodes0 = budget.nodes
    if d.n == 0:
        return SolveResult(0, Coloring((), 0), SolveStats(0, 0.0))
    lower = max(1, _greedy_digon_clique(d))
    if lower == 1 and has_directed_cycle(d, range(d.n)):
        lower = 2
    for k in range(lower, d.n + 1):
        witness = exists_acyclic_k_coloring(d, k, budget)
        if witness is not None:
            return SolveResult(
                k, witness,
                SolveStats(budget.nodes - nodes0, time.perf_counter() - t0))
    raise AssertionError("unreachable: singleton classes are always acyclic")


def dac_upper_bound(d: Digraph) -> int:
    """Largest k with k(k-1) <= m, capped at n: a complete coloring needs a
    distinct arc per ordered color pair."""
    k = 0
    while (k + 1) * k <= d.m:
        k += 1
    return min(k, d.n)


def _search_complete_acyclic(d: Digraph, k: int, budget: Budget) -> list[int] | None:
    """A surjective acyclic complete k-coloring (0-based), or None."""
    n, m = d.n, d.m
    if k > n:
        return None
    need = k * (k - 1)
    slack = m - need
    if slack < 0:
        return None
    out_masks, in_masks = d.out_masks, d.in_masks
    order = _degree_order(d)
    assign = [-1] * n
    classes = [0] * k
    # Ordered color pairs as bits of a k*k square; the diagonal is preset so
    # same-class arcs register as waste, not coverage.
    full = (1 << (k * k)) - 1
    diagonal = 0
    for c in range(k):
        diagonal |= 1 << (c * k + c)
    found: list[int] | None = None

    def dfs(idx: int, used: int, colored: int, covered: int, waste: int) -> bool:
        nonlocal found
        if idx == n:
            if used == k and covered == full:
                found = assign.copy()
                return True
            return False
        if k - used > n - idx:
            return False  # cannot open the remaining colors
        v = order[idx]
        bit = 1 << v
        out_here = out_masks[v] & colored
        in_here = in_masks[v] & colored
        touched = out_here.bit_count() + in_here.bit_count()
        for c in range(min(used + 1, k)):
            budget.tick()
            if not _class_stays_acyclic(out_masks, in_masks, v, classes[c]):
                continue
            newbits = 0
            f = out_here
            while f:
                b = f & -f
                f ^= b
                newbits |= 1 << (c * k + assign[b.bit_length() - 1])
            f = in_here
            while f:
                b = f & -f
                f ^= b
                newbits |= 1 << (assign[b.bit_length() - 1] * k + c)
            next_waste = waste + touched - (newbits & ~covered).bit_count()
            if next_waste > slack:
                continue
            classes[c] |= bit
            assign[v] = c
            if dfs(idx + 1, used + (1 if c == used else 0), colored | bit,
                   covered | newbits, next_waste):
                return True
            classes[c] &= ~bit
        assign[v] = -1
        return False

    return found if dfs(0, 0, 0, diagonal, 0) else None


def exists_complete_acyclic_k_coloring(d: Digraph, k: int,
                                       budget: Budget | None = None) -> Coloring | None:
    """A surjective, acyclic, complete k-coloring of d, or None."""
    if k < 1:
        raise ValueError("k must be >= 1")
    budget = budget or Budget()
    if k > d.n:
        return None
    assign = _search_complete_acyclic(d, k, budget)
    if assign is None:
        return None
    witness = Coloring(tuple(c + 1 for c in assign), k)
    if not (is_acyclic_coloring(d, witness) and is_complete_coloring(d, witness)):
        raise RuntimeError("internal: witness failed re-verification")
    return witness


def diachromatic_number(d: Digraph, budget: Budget | None = None) -> SolveResult:
    """Maximum color count over complete acyclic colorings, with a witness.

    Descends from the arc-count bound; every failed level above the answer
    is an exhaustive "no", so the returned value is proved, not assumed
    from interpolation.
    """
    budget = budget or Budget()
    budget.start_clock()
    t0 = time.perf_counter()
    nodes0 = budget.nodes
    if d.n == 0:
        return SolveResult(0, Coloring((), 0), SolveStats(0, 0.0))
    for k in range(dac_upper_bound(d), 0, -1):
        witness = exists_complete_acyclic_k_coloring(d, k, budget)
        if witness is not None:
            return SolveResult(
                k, witness,
                SolveStats(budget.nodes - nodes0, time.perf_counter() - t0))
    raise AssertionError(
        "no complete acyclic coloring at any level; coloring theory falsified")


def interpolation_spectrum(d: Digraph,
                           budget: Budget | None = None) -> list[tuple[int, Coloring]]:
    """A complete acyclic coloring for every level between the dichromatic
    and diachromatic numbers. A missing level raises InterpolationGap."""
    budget = budget or Budget()
    lo = dichromatic_number(d, budget)
    hi = diachromatic_number(d, budget)
    spectrum: list[tuple[int, Coloring]] = []
    for level in range(lo.value, hi.value + 1):
        if level == hi.value:
            spectrum.append((level, hi.witness))
            continue
        witness = exists_complete_acyclic_k_coloring(d, level, budget)
        if witness is None:
            raise InterpolationGap(level, lo.value, hi.value)
        spectrum.append((level, witness))
    return spectrum


def is_vertex_critical(d: Digraph, budget: Budget | None = None) -> bool:
    """True iff deleting any single vertex lowers the dichromatic number."""
    if d.n < 2:
        raise ValueError("vertex criticality needs at least 2 vertices")
    budget = budget or Budget()
    r = dichromatic_number(d, budget).value
    if r == 1:
        return False  # deletion cannot go below one color
    return all(
        exists_acyclic_k_coloring(delete_vertex(d, v), r - 1, budget) is not None
        for v in range(d.n)
    )


def singleton_optimal_coloring(d: Digraph,
                               budget: Budget | None = None) -> tuple[Coloring, int] | None:
    """An acyclic coloring with exactly dc(d) colors in which some class is
    the singleton {u}; returns (coloring, u), or None if no vertex works.

    {u} can be a singleton class iff the rest admits an acyclic coloring
    with one color fewer, so scanning vertices in index order is complete.
    """
    if d.n < 1:
        raise ValueError("needs at least 1 vertex")
    budget = budget or Budget()
    if d.n == 1:
        return Coloring((1,), 1), 0
    r = dichromatic_number(d, budget).value
    if r == 1:
        return None
    for u in range(d.n):
        rest = exists_acyclic_k_coloring(delete_vertex(d, u), r - 1, budget)
        if rest is None:
            continue
        colors = list(rest.colors[:u]) + [r] + list(rest.colors[u:])
        witness = Coloring(tuple(colors), r)
        if not is_acyclic_coloring(d, witness):
            raise RuntimeError("internal: witness failed acyclicity re-verification")
        return witness, u
    return None
