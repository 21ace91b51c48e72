"""Anatomy of the path attachment: the alternating path tournament, how even
path vertices mimic the anchor, and the exact growth law it gives the
diachromatic number."""

from dikroma import (attach_path, build, complete_symmetric,
                     diachromatic_number, dichromatic_number,
                     mimicry_violations, path_vertex,
                     singleton_optimal_coloring, critical_tournament,
                     transitive_tournament)

k3 = complete_symmetric(3)
anchor, length = 0, 4
d = attach_path(k3, anchor, length)
ids = [anchor] + [path_vertex(k3.n, j) for j in range(1, length + 1)]
print(f"K3 with a length-{length} path attached at vertex {anchor}: "
      f"n={d.n}, m={d.m}")
print(f"  path vertex ids: v0={ids[0]} (the anchor), " +
      ", ".join(f"v{j}={ids[j]}" for j in range(1, length + 1)))
print("  arcs among path vertices (even index differences point backwards):")
for i in range(length + 1):
    for j in range(i + 1, length + 1):
        u, v = ids[i], ids[j]
        arc = (v, u) if d.has_arc(v, u) else (u, v)
        print(f"    v{i} vs v{j}: {arc}")

print()
print("even path vertices copy the anchor's neighborhoods exactly:")
violations = mimicry_violations(d, k3, anchor, length)
print("  violations:", violations if violations else "none")

print()
print("growth law: attaching an even path of length 2k raises dac by k")
for base_name, base in [("K2 with digon", build(2, [(0, 1), (1, 0)])),
                        ("directed triangle", build(3, [(0, 1), (1, 2), (2, 0)])),
                        ("transitive tournament on 4", transitive_tournament(4))]:
    base_dac = diachromatic_number(base).value
    grown = [diachromatic_number(attach_path(base, 0, 2 * k)).value
             for k in (1, 2, 3)]
    print(f"  {base_name}: dac {base_dac} -> {grown} for 2k = 2, 4, 6")

print()
print("and anchoring away from a singleton optimal class keeps dc fixed")
h3 = critical_tournament(3, 0)
witness, u = singleton_optimal_coloring(h3)
print(f"  order-7 critical tournament: dc=3 with singleton class {{{u}}}")
anchor = 1 if u == 0 else 0
for s in (1, 2, 3, 4):
    value = dichromatic_number(attach_path(h3, anchor, s)).value
    print(f"  after attaching s={s} at anchor {anchor}: dc = {value}")
