"""Generators for the digraph families the toolkit studies.

Circulant digraphs C_m(J), full circulant tournaments, complete symmetric
digraphs, transitive tournaments, and the vertex-critical circulant
tournament family parameterized by a target dichromatic number r and a
stretch s. Also the closed-form diachromatic value of that family and the
best known threshold t above which asymmetric (r, t) pairs are realizable.

All generators are pure and emit vertices 0..m-1 in the natural labeling,
so regenerating with the same parameters reproduces certificates exactly.
"""

from dataclasses import dataclass

from .core import Digraph, build


@dataclass(frozen=True)
class CirculantSpec:
    """Modulus m and connection set J defining the circulant digraph with
    arc (i, j) iff (j - i) mod m lies in J.

    J must contain exactly one of {w, m-w} for every residue w in 1..m-1;
    this makes the circulant a tournament on odd m.
    """

    m: int
    connection: frozenset[int]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(self, "connection", frozenset(self.connection))
        for w in self.connection:
            if not 1 <= w <= self.m - 1:
                raise ValueError(f"residue {w} outside 1..{self.m - 1}")
        for w in range(1, self.m):
            if (w in self.connection) == ((self.m - w) in self.connection):
                raise ValueError(
                    f"antisymmetry violated at residue {w}: need exactly one of "
                    f"{w} and {self.m - w} in the connection set")


def circulant(spec: CirculantSpec) -> Digraph:
    """The circulant digraph of `spec`; a tournament whenever m is odd."""
    arcs = [
        (i, (i + w) % spec.m)
        for i in range(spec.m)
        for w in spec.connection
    ]
    return build(spec.m, arcs)


def full_circulant_tournament(m: int) -> Digraph:
    """C_m(1, ..., (m-1)/2) for odd m >= 3: the regular tournament whose
    dichromatic number is 2."""
    if m < 3 or m % 2 == 0:
        raise ValueError("order must be odd and >= 3")
    return circulant(CirculantSpec(m, frozenset(range(1, (m - 1) // 2 + 1))))


@dataclass(frozen=True)
class CriticalTournamentParams:
    """Parameters of the vertex-critical circulant tournament family.

    r is the target dichromatic number (>= 3), s the stretch (>= 0).
    Derived: block width p = (r-2)(s+1) + 1 and order m = (r-1)(p+1) + 1.
    """

    r: int
    s: int

    def __post_init__(self):
        if self.r < 3:
            raise ValueError("r must be >= 3")
        if self.s < 0:
            raise ValueError("s must be >= 0")

    @property
    def p(self) -> int:
        return (self.r - 2) * (self.s + 1) + 1

    @property
    def order(self) -> int:
        return (self.r - 1) * (self.p + 1) + 1

    def blocks(self) -> list[range]:
        """Connection-set blocks: block i is {i*p+i+1, ..., (i+1)*p - i*s},
        of size p - i(s+1); the last block is a singleton."""
        p, s = self.p, self.s
        return [
            range(i * p + i + 1, (i + 1) * p - i * s + 1)
            for i in range(self.r - 1)
        ]

    def connection(self) -> frozenset[int]:
        residues: set[int] = set()
        for block in self.blocks():
            if len(block) <= 0:
                raise RuntimeError(
                    f"connection block formula broke down at r={self.r}, s={self.s}: "
                    f"empty block {block}")
            if residues & set(block):
                raise RuntimeError(
                    f"connection block formula broke down at r={self.r}, s={self.s}: "
                    f"overlapping block {block}")
            residues.update(block)
        if len(residues) != (self.order - 1) // 2:
            raise RuntimeError(
                f"connection block formula broke down at r={self.r}, s={self.s}: "
                f"|J|={len(residues)} != (m-1)/2={(self.order - 1) // 2}")
        return frozenset(residues)


def critical_tournament(r: int, s: int = 0) -> Digraph:
    """The vertex-critical circulant tournament with dichromatic number r
    and stretch s, on (r-1)((r-2)(s+1)+2) + 1 vertices."""
    params = CriticalTournamentParams(r, s)
    try:
        spec = CirculantSpec(params.order, params.connection())
    except ValueError as exc:
        # Parameters were validated, so a rejection here is a formula defect.
        raise RuntimeError(
            f"connection set invalid at r={r}, s={s}: {exc}") from exc
    return circulant(spec)


def critical_tournament_dac(r: int, s: int = 0) -> int:
    """Closed-form diachromatic number of critical_tournament(r, s):
    s(r-1)(r-2)/2 + (r^2 - r + 2)/2. Always equals ceil(m/2) for the
    family's order m."""
    if r < 3:
        raise ValueError("r must be >= 3")
    if s < 0:
        raise ValueError("s must be >= 0")
    return (r * r - 3 * r + 2) * s // 2 + (r * r - r + 2) // 2


def complete_symmetric(n: int) -> Digraph:
    """All n(n-1) ordered pairs; dichromatic = diachromatic = n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return build(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def transitive_tournament(n: int) -> Digraph:
    """Arcs (i, j) for all i < j; acyclic, diachromatic number ceil(n/2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def asymmetric_threshold(r: int) -> int:
    """Best known threshold b(r): for every t >= b(r) an asymmetric digraph
    with dichromatic number r and diachromatic number t exists.

    (r^2 - r + 2)/2 in general; sharper known values at r = 4 (order-11
    tournament) and r = 5 (order-19 tournament) whose explicit arc sets are
    not available to this toolkit.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    special = {2: 2, 3: 4, 4: 6, 5: 10}
    if r in special:
        return special[r]
    return (r * r - r + 2) // 2
