"""Path attachment: grow a digraph by an alternating path tournament.

Given a base digraph, an anchor vertex v0 and a length s >= 0, add new
vertices v1..vs (indexed n_base..n_base+s-1) and:

  * on {v0, v1, ..., vs}, for every index pair i < j, the arc (v_j, v_i)
    when j - i is even and (v_i, v_j) when j - i is odd: a tournament in
    which the even-indexed vertices form a transitive subtournament with
    v0 as sink, and the odd-indexed ones form one with v1 as sink;
  * cross arcs tying every path vertex to the anchor's neighborhood: each
    out-neighbor x of v0 gets (v_j, x) for even j and (x, v_j) for odd j;
    each strict in-neighbor (in but not out) gets the reverse pattern.
    Vertices not adjacent to v0 get no cross arcs.

With s = 0 the base is returned unchanged. Attaching an even-length path
raises the diachromatic number by exactly s/2 while an anchor chosen
outside a singleton optimal class preserves the dichromatic number; the
realization routines rely on both effects.
"""

from .core import Digraph, bits, build


def path_vertex(base_n: int, j: int) -> int:
    """Vertex id of path vertex v_j (j >= 1) in the extended digraph."""
    if j < 1:
        raise ValueError("path vertices are numbered from 1")
    return base_n + j - 1


def attach_path(base: Digraph, anchor: int, length: int) -> Digraph:
    """Attach an alternating path of `length` new vertices at `anchor`."""
    if not 0 <= anchor < base.n:
        raise ValueError(f"anchor {anchor} out of range 0..{base.n - 1}")
    if length < 0:
        raise ValueError("length must be >= 0")
    if length == 0:
        return base

    n0 = base.n
    ids = [anchor] + [path_vertex(n0, j) for j in range(1, length + 1)]
    arcs = list(base.arcs())

    for i in range(length + 1):
        for j in range(i + 1, length + 1):
            if (j - i) % 2 == 0:
                arcs.append((ids[j], ids[i]))
            else:
                arcs.append((ids[i], ids[j]))

    out0 = base.out_masks[anchor]
    strict_in0 = base.in_masks[anchor] & ~out0
    for j in range(1, length + 1):
        vj = ids[j]
        if j % 2 == 0:
            arcs.extend((vj, x) for x in bits(out0))
            arcs.extend((x, vj) for x in bits(strict_in0))
        else:
            arcs.extend((x, vj) for x in bits(out0))
            arcs.extend((vj, x) for x in bits(strict_in0))

    return build(n0 + length, arcs)


def mimicry_violations(extended: Digraph, base: Digraph, anchor: int,
                       length: int) -> list[str]:
    """Check that every even path vertex copies the anchor's neighborhoods.

    For each even j >= 2, within the base vertices minus the anchor, v_j
    must have exactly the anchor's out-neighbors as out-neighbors and the
    anchor's strict in-neighbors as in-neighbors. Returns a list of
    violation descriptions; empty for any attach_path output.
    """
    violations: list[str] = []
    others = ((1 << base.n) - 1) & ~(1 << anchor)
    expect_out = base.out_masks[anchor]
    expect_in = base.in_masks[anchor] & ~expect_out
    for j in range(2, length + 1, 2):
        vj = path_vertex(base.n, j)
        got_out = extended.out_masks[vj] & others
        got_in = extended.in_masks[vj] & others
        if got_out != expect_out:
            violations.append(
                f"v{j}: out-neighbors {sorted(bits(got_out))} != "
                f"anchor out-neighbors {sorted(bits(expect_out))}")
        if got_in != expect_in:
            violations.append(
                f"v{j}: in-neighbors {sorted(bits(got_in))} != "
                f"anchor strict in-neighbors {sorted(bits(expect_in))}")
    return violations
