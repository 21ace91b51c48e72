"""Vertex colorings and the two verification predicates.

A coloring assigns every vertex one color from 1..k and must be surjective
(every color class nonempty). It is *acyclic* when no class induces a
directed cycle, and *complete* when for every ordered pair of distinct
colors (i, j) some arc runs from a vertex of color i to one of color j.
"""

from dataclasses import dataclass

from .core import Digraph, has_directed_cycle


@dataclass(frozen=True)
class Coloring:
    """colors[v] is the color of vertex v, in 1..k; surjective onto 1..k."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.k == 0:
            if self.colors:
                raise ValueError("k=0 only valid for the empty vertex set")
            return
        seen = set()
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.k}")
            seen.add(c)
        if len(seen) != self.k:
            missing = sorted(set(range(1, self.k + 1)) - seen)
            raise ValueError(f"coloring not surjective: colors {missing} unused")

    @property
    def n(self) -> int:
        return len(self.colors)

    def class_of(self, i: int) -> frozenset[int]:
        """Vertices of color i (nonempty by the surjectivity invariant)."""
        if not 1 <= i <= self.k:
            raise ValueError(f"color {i} out of range 1..{self.k}")
        return frozenset(v for v, c in enumerate(self.colors) if c == i)

    def classes(self) -> list[frozenset[int]]:
        return [self.class_of(i) for i in range(1, self.k + 1)]


def class_of(coloring: Coloring, i: int) -> frozenset[int]:
    return coloring.class_of(i)


def _check_sizes(d: Digraph, coloring: Coloring) -> None:
    if coloring.n != d.n:
        raise ValueError(
            f"coloring covers {coloring.n} vertices but digraph has {d.n}")


def is_acyclic_coloring(d: Digraph, coloring: Coloring) -> bool:
    """No color class induces a directed cycle."""
    _check_sizes(d, coloring)
    return all(
        not has_directed_cycle(d, coloring.class_of(i))
        for i in range(1, coloring.k + 1)
    )


def is_complete_coloring(d: Digraph, coloring: Coloring) -> bool:
    """Every ordered pair of distinct colors is hit by some arc.

    Vacuously true for k <= 1.
    """
    _check_sizes(d, coloring)
    k = coloring.k
    if k <= 1:
        return True
    covered = set()
    for u, v in d.arcs():
        cu, cv = coloring.colors[u], coloring.colors[v]
        if cu != cv:
            covered.add((cu, cv))
    return len(covered) == k * (k - 1)


def coloring_to_json(coloring: Coloring) -> dict:
    return {"k": coloring.k, "colors": list(coloring.colors)}


def coloring_from_json(obj: dict) -> Coloring:
    return Coloring(tuple(int(c) for c in obj["colors"]), int(obj["k"]))
