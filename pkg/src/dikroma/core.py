"""Finite digraphs with bitmask adjacency.

Vertices are the integers 0..n-1. Arcs are ordered pairs (u, v) with u != v;
a digon, i.e. both (u, v) and (v, u), is allowed and counts as a directed
2-cycle everywhere in this package. Digraph values are immutable after
construction and safe to share across threads.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

SYMMETRIC = "symmetric"
ASYMMETRIC = "asymmetric"
MIXED = "mixed"


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph; out_masks[v]/in_masks[v] are neighbor bitmasks."""

    n: int
    out_masks: tuple[int, ...]
    in_masks: tuple[int, ...]
    m: int
    # Original vertex names after relabeling operations (delete_vertex);
    # purely cosmetic, excluded from equality.
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out_masks[u] >> v) & 1)

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.out_masks[v]))

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.in_masks[v]))

    def vertices(self) -> range:
        return range(self.n)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs in (u, v) lexicographic order."""
        for u in range(self.n):
            for v in bits(self.out_masks[u]):
                yield (u, v)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class TournamentCheck(NamedTuple):
    is_tournament: bool
    is_regular: bool


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def vertex_mask(n: int, vertices: Iterable[int]) -> int:
    """Bitmask for a vertex subset; rejects out-of-range elements."""
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range 0..{n - 1}")
        mask |= 1 << v
    return mask


def build(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Construct a digraph from an arc list; duplicate pairs collapse.

    Raises ValueError for loops or out-of-range endpoints.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    out = [0] * n
    inn = [0] * n
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc ({u}, {v}) has endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop arc ({u}, {v}) not allowed")
        out[u] |= 1 << v
        inn[v] |= 1 << u
    m = sum(x.bit_count() for x in out)
    return Digraph(n, tuple(out), tuple(inn), m)


def classify_symmetry(d: Digraph) -> str:
    """SYMMETRIC if every arc has its reverse, ASYMMETRIC if none does,
    MIXED otherwise. A digraph with no arcs is vacuously symmetric."""
    any_digon = False
    any_single = False
    for v in range(d.n):
        both = d.out_masks[v] & d.in_masks[v]
        if both:
            any_digon = True
        if d.out_masks[v] & ~both:
            any_single = True
    if not any_single:
        return SYMMETRIC
    return MIXED if any_digon else ASYMMETRIC


def arcs_between(d: Digraph, xs: Iterable[int], ys: Iterable[int]) -> set[tuple[int, int]]:
    """{(x, y) in A : x in xs, y in ys}."""
    x_mask = vertex_mask(d.n, xs)
    y_mask = vertex_mask(d.n, ys)
    found = set()
    for x in bits(x_mask):
        for y in bits(d.out_masks[x] & y_mask):
            found.add((x, y))
    return found


def has_directed_cycle(d: Digraph, subset: Iterable[int]) -> bool:
    """True iff the subdigraph induced by `subset` contains a directed cycle
    (length >= 2; digons count). Decided by peeling in-degree-zero vertices."""
    rem = vertex_mask(d.n, subset)
    return bool(_cyclic_core(d.in_masks, rem))


def _cyclic_core(in_masks: tuple[int, ...], rem: int) -> int:
    """Peel vertices with no in-arc inside `rem`; the fixpoint is nonzero
    exactly when a directed cycle survives."""
    while rem:
        peeled = 0
        for v in bits(rem):
            if not (in_masks[v] & rem):
                peeled |= 1 << v
        if not peeled:
            return rem
        rem &= ~peeled
    return 0


def delete_vertex(d: Digraph, v: int) -> Digraph:
    """Remove v and relabel the remaining vertices contiguously.

    The returned digraph's `labels` records each new vertex's original name.
    """
    if not 0 <= v < d.n:
        raise ValueError(f"vertex {v} out of range 0..{d.n - 1}")
    keep = [u for u in range(d.n) if u != v]
    relabel = {u: i for i, u in enumerate(keep)}
    arcs = [
        (relabel[u], relabel[w])
        for u in keep
        for w in bits(d.out_masks[u] & ~(1 << v))
    ]
    old = d.labels or tuple(range(d.n))
    out = build(d.n - 1, arcs)
    return Digraph(out.n, out.out_masks, out.in_masks, out.m,
                   labels=tuple(old[u] for u in keep))


def tournament_predicates(d: Digraph) -> TournamentCheck:
    """is_tournament: exactly one arc between every unordered pair.
    is_regular: tournament with all out-degrees equal to (n-1)/2."""
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if d.has_arc(u, v) == d.has_arc(v, u):
                return TournamentCheck(False, False)
    if d.n == 0:
        return TournamentCheck(True, False)
    half, rem = divmod(d.n - 1, 2)
    regular = rem == 0 and all(d.out_degree(v) == half for v in range(d.n))
    return TournamentCheck(True, regular)


# Edge-list text format, canonical for all file I/O:
#   line 1: "n m"; then m lines "u v"; '#' starts a comment line.

def parse_edge_list(text: str) -> Digraph:
    rows = [
        line.split()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty edge-list input")
    header = rows[0]
    if len(header) != 2:
        raise ValueError(f"malformed header {' '.join(header)!r}: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"malformed header {' '.join(header)!r}: expected two integers") from None
    if n < 0 or m < 0:
        raise ValueError("header counts must be non-negative")
    if len(rows) - 1 != m:
        raise ValueError(f"arc count mismatch: header says {m}, found {len(rows) - 1} arc lines")
    arcs = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"malformed arc line {' '.join(row)!r}")
        try:
            arcs.append((int(row[0]), int(row[1])))
        except ValueError:
            raise ValueError(f"malformed arc line {' '.join(row)!r}") from None
    if len(set(arcs)) != len(arcs):
        raise ValueError("duplicate arc in edge list")
    return build(n, arcs)


def format_edge_list(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"


def digraph_to_json(d: Digraph) -> dict:
    return {"n": d.n, "arcs": [[u, v] for u, v in d.arcs()]}


def digraph_from_json(obj: dict) -> Digraph:
    return build(int(obj["n"]), [(int(u), int(v)) for u, v in obj["arcs"]])
