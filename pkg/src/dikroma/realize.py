"""Certified digraphs realizing a prescribed (dichromatic, diachromatic) pair.

realize_nonsymmetric covers every pair 1 <= r <= t by attaching paths to a
complete symmetric core (transitive tournaments handle the acyclic r = 1
row). realize_asymmetric covers r = 2 with full circulant tournaments and
r >= 3 by attaching even paths to the vertex-critical circulant family,
anchored away from a singleton optimal class so the dichromatic number is
preserved while each attached path pair raises the diachromatic number.

Every certificate is re-proved by the exact solvers rather than trusted
from the construction; the negative direction (no smaller acyclic
coloring, no larger complete acyclic coloring) is marked "proved" only
when the corresponding searches finished within budget, and "witness-only"
otherwise.
"""

import random
from dataclasses import dataclass, field

from .core import (ASYMMETRIC, SYMMETRIC, Digraph, classify_symmetry,
                   digraph_from_json, digraph_to_json)
from .coloring import (Coloring, coloring_from_json, coloring_to_json,
                       is_acyclic_coloring, is_complete_coloring)
from .construct import attach_path
from .families import (asymmetric_threshold, complete_symmetric,
                       critical_tournament, critical_tournament_dac,
                       full_circulant_tournament, transitive_tournament)
from .solvers import (Budget, BudgetExhausted, dac_upper_bound,
                      diachromatic_number, dichromatic_number,
                      exists_acyclic_k_coloring,
                      exists_complete_acyclic_k_coloring,
                      singleton_optimal_coloring)

PROVED = "proved"
WITNESS_ONLY = "witness-only"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Certificate:
    digraph: Digraph
    claimed_r: int
    claimed_t: int
    dc_witness: Coloring
    dac_witness: Coloring
    dc_verified: str
    dac_verified: str
    symmetry: str
    construction_trace: str


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "digraph": digraph_to_json(cert.digraph),
        "claimed_r": cert.claimed_r,
        "claimed_t": cert.claimed_t,
        "dc_witness": coloring_to_json(cert.dc_witness),
        "dac_witness": coloring_to_json(cert.dac_witness),
        "dc_verified": cert.dc_verified,
        "dac_verified": cert.dac_verified,
        "symmetry": cert.symmetry,
        "construction_trace": cert.construction_trace,
    }


def certificate_from_json(obj: dict) -> Certificate:
    return Certificate(
        digraph=digraph_from_json(obj["digraph"]),
        claimed_r=int(obj["claimed_r"]),
        claimed_t=int(obj["claimed_t"]),
        dc_witness=coloring_from_json(obj["dc_witness"]),
        dac_witness=coloring_from_json(obj["dac_witness"]),
        dc_verified=str(obj["dc_verified"]),
        dac_verified=str(obj["dac_verified"]),
        symmetry=str(obj["symmetry"]),
        construction_trace=str(obj["construction_trace"]),
    )


def certify(d: Digraph, r: int, t: int, trace: str,
            budget: Budget | None = None) -> Certificate:
    """Prove dc(d) = r and dac(d) = t as far as the budget allows.

    Witness searches must finish (an exhausted budget there propagates).
    Negative searches downgrade the status to witness-only on exhaustion; a
    negative search that *succeeds* means the claim is wrong and raises.
    """
    budget = budget or Budget()
    budget.start_clock()
    dc_wit = exists_acyclic_k_coloring(d, r, budget)
    if dc_wit is None:
        raise RuntimeError(f"claim dc={r} has no witness for {trace}")
    dac_wit = exists_complete_acyclic_k_coloring(d, t, budget)
    if dac_wit is None:
        raise RuntimeError(f"claim dac={t} has no witness for {trace}")
    dc_status = WITNESS_ONLY
    dac_status = WITNESS_ONLY
    try:
        if r == 1 or exists_acyclic_k_coloring(d, r - 1, budget) is None:
            dc_status = PROVED
        else:
            raise RuntimeError(f"claim dc={r} falsified for {trace}")
        for k in range(dac_upper_bound(d), t, -1):
            if exists_complete_acyclic_k_coloring(d, k, budget) is not None:
                raise RuntimeError(f"claim dac={t} falsified at k={k} for {trace}")
        dac_status = PROVED
    except BudgetExhausted:
        pass
    return Certificate(d, r, t, dc_wit, dac_wit, dc_status, dac_status,
                       classify_symmetry(d), trace)


def realize_nonsymmetric(r: int, t: int, budget: Budget | None = None) -> Certificate:
    """A certified non-symmetric digraph with dichromatic number r and
    diachromatic number t, for any 1 <= r <= t.

    r >= 2 attaches a path to the complete symmetric digraph on r vertices:
    a single pendant vertex for t = r, an even path of length 2(t-r)
    otherwise. The r = 1 row needs an acyclic digraph, which the path
    tournament is not, so it uses the transitive tournament on 2t-1
    vertices instead (pendant-arc digraph for t = 1).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if t < r:
        raise ValueError("t must be >= r")
    if r == 1:
        if t == 1:
            d = attach_path(complete_symmetric(1), 0, 1)
            trace = "complete_symmetric(1) + attach_path(anchor=0, length=1)"
        else:
            d = transitive_tournament(2 * t - 1)
            trace = f"transitive_tournament({2 * t - 1})"
    elif t == r:
        d = attach_path(complete_symmetric(r), 0, 1)
        trace = f"complete_symmetric({r}) + attach_path(anchor=0, length=1)"
    else:
        d = attach_path(complete_symmetric(r), 0, 2 * (t - r))
        trace = (f"complete_symmetric({r}) + "
                 f"attach_path(anchor=0, length={2 * (t - r)})")
    cert = certify(d, r, t, trace, budget)
    if cert.symmetry == SYMMETRIC:
        raise RuntimeError(f"construction for ({r}, {t}) came out symmetric")
    return cert


def realize_asymmetric(r: int, t: int, budget: Budget | None = None) -> Certificate:
    """A certified asymmetric digraph with dichromatic number r and
    diachromatic number t, for r >= 2 and t >= (r^2 - r + 2)/2.

    r = 2 uses the full circulant tournament on 2t-1 vertices. r >= 3
    starts from the vertex-critical circulant tournament for r, finds a
    singleton optimal class {u}, and attaches an even path at the smallest
    anchor != u.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    constructive = (r * r - r + 2) // 2
    if t < constructive:
        threshold = asymmetric_threshold(r)
        if threshold <= t:
            raise ValueError(
                f"pairs ({r}, t) with {threshold} <= t < {constructive} are known "
                f"to be realizable, but the witnessing tournaments are not "
                f"available in explicit form; this builder needs t >= {constructive}")
        raise ValueError(f"r={r} requires t >= {constructive} (got {t})")
    if r == 2:
        d = full_circulant_tournament(2 * t - 1)
        trace = f"full_circulant_tournament({2 * t - 1})"
    else:
        base = critical_tournament(r, 0)
        base_dac = critical_tournament_dac(r, 0)
        single = singleton_optimal_coloring(base, budget)
        if single is None:
            raise RuntimeError(
                f"critical_tournament({r}, 0) has no singleton optimal class")
        _, u = single
        anchor = 0 if u != 0 else 1
        d = attach_path(base, anchor, 2 * (t - base_dac))
        trace = (f"critical_tournament({r}, 0) + attach_path(anchor={anchor}, "
                 f"length={2 * (t - base_dac)}) [singleton class at u={u}]")
    cert = certify(d, r, t, trace, budget)
    if cert.symmetry != ASYMMETRIC:
        raise RuntimeError(f"construction for ({r}, {t}) is not asymmetric")
    return cert


def verify_certificate(cert: Certificate,
                       budget: Budget | None = None) -> CertificateCheck:
    """Re-run every check a certificate asserts; collects violations rather
    than raising. "proved" statuses re-run the negative searches, so a
    tampered claim fails even when its witnesses are intact."""
    budget = budget or Budget()
    d = cert.digraph
    violations: list[str] = []

    for name, status in (("dc_verified", cert.dc_verified),
                         ("dac_verified", cert.dac_verified)):
        if status not in (PROVED, WITNESS_ONLY, UNKNOWN):
            violations.append(f"{name} has unknown status {status!r}")
    if cert.claimed_r < 1 or cert.claimed_t < cert.claimed_r:
        violations.append(
            f"claimed pair ({cert.claimed_r}, {cert.claimed_t}) is not ordered 1 <= r <= t")

    if cert.dc_witness.k != cert.claimed_r:
        violations.append(
            f"dc witness uses {cert.dc_witness.k} colors, claimed {cert.claimed_r}")
    if cert.dac_witness.k != cert.claimed_t:
        violations.append(
            f"dac witness uses {cert.dac_witness.k} colors, claimed {cert.claimed_t}")
    try:
        if not is_acyclic_coloring(d, cert.dc_witness):
            violations.append("dc witness is not acyclic")
    except ValueError as exc:
        violations.append(f"dc witness invalid: {exc}")
    try:
        if not is_acyclic_coloring(d, cert.dac_witness):
            violations.append("dac witness is not acyclic")
        elif not is_complete_coloring(d, cert.dac_witness):
            violations.append("dac witness is not complete")
    except ValueError as exc:
        violations.append(f"dac witness invalid: {exc}")

    if classify_symmetry(d) != cert.symmetry:
        violations.append(
            f"symmetry recorded as {cert.symmetry}, actual {classify_symmetry(d)}")

    if cert.dc_verified == PROVED and cert.claimed_r > 1:
        if exists_acyclic_k_coloring(d, cert.claimed_r - 1, budget) is not None:
            violations.append(
                f"an acyclic {cert.claimed_r - 1}-coloring exists; dc claim is wrong")
    if cert.dac_verified == PROVED:
        for k in range(dac_upper_bound(d), cert.claimed_t, -1):
            if exists_complete_acyclic_k_coloring(d, k, budget) is not None:
                violations.append(
                    f"a complete acyclic {k}-coloring exists; dac claim is wrong")
                break

    return CertificateCheck(not violations, tuple(violations))


@dataclass(frozen=True)
class ProbeReport:
    """Census of a search for asymmetric digraphs with equal dichromatic
    and diachromatic number r. Evidence only: a clean census never proves
    nonexistence."""

    r: int
    n_max: int
    seed: int
    samples_per_n: int
    examined: dict[int, int]
    budget_exhausted: bool
    counterexample: Certificate | None = field(default=None)

    @property
    def none_found(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n_max": self.n_max,
            "seed": self.seed,
            "samples_per_n": self.samples_per_n,
            "examined": {str(n): c for n, c in sorted(self.examined.items())},
            "total_examined": sum(self.examined.values()),
            "budget_exhausted": self.budget_exhausted,
            "counterexample": (None if self.counterexample is None
                               else certificate_to_json(self.counterexample)),
        }


EXHAUSTIVE_MAX = 5  # all tournaments up to this order; sampling beyond


def _all_tournaments(n: int):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for code in range(1 << len(pairs)):
        yield [
            (u, v) if (code >> i) & 1 else (v, u)
            for i, (u, v) in enumerate(pairs)
        ]


def _sample_oriented(n: int, rng: random.Random) -> list[tuple[int, int]]:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            pick = rng.randrange(3)
            if pick == 1:
                arcs.append((u, v))
            elif pick == 2:
                arcs.append((v, u))
    return arcs


def conjecture_probe(r: int, n_max: int, samples_per_n: int = 200,
                     seed: int = 0, budget: Budget | None = None) -> ProbeReport:
    """Search asymmetric digraphs for dc = dac = r: exhaustively over all
    tournaments up to 5 vertices, then seeded random oriented graphs up to
    n_max. Stops at the first counterexample (returned fully certified).
    """
    if r < 3:
        raise ValueError("r must be >= 3")
    budget = budget or Budget()
    budget.start_clock()
    examined: dict[int, int] = {}
    counterexample: Certificate | None = None
    exhausted = False

    def consider(d: Digraph, origin: str) -> Certificate | None:
        if dac_upper_bound(d) < r:
            return None
        if dichromatic_number(d, budget).value != r:
            return None
        if diachromatic_number(d, budget).value != r:
            return None
        return certify(d, r, r, origin, budget)

    try:
        from .core import build
        for n in range(1, min(n_max, EXHAUSTIVE_MAX) + 1):
            examined[n] = 0
            for arcs in _all_tournaments(n):
                d = build(n, arcs)
                examined[n] += 1
                counterexample = consider(d, f"tournament on {n} vertices (exhaustive)")
                if counterexample is not None:
                    raise StopIteration
        for n in range(EXHAUSTIVE_MAX + 1, n_max + 1):
            examined[n] = 0
            rng = random.Random(f"{seed}:{n}")
            for i in range(samples_per_n):
                d = build(n, _sample_oriented(n, rng))
                examined[n] += 1
                counterexample = consider(
                    d, f"sampled oriented graph on {n} vertices (seed={seed}, index={i})")
                if counterexample is not None:
                    raise StopIteration
    except StopIteration:
        pass
    except BudgetExhausted:
        exhausted = True

    return ProbeReport(r, n_max, seed, samples_per_n, examined, exhausted,
                       counterexample)
