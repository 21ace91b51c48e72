"""Digraph basics: building, symmetry classes, induced cycles, and the two
coloring predicates everything else rests on."""

from dikroma import (Coloring, build, classify_symmetry, complete_symmetric,
                     delete_vertex, has_directed_cycle, is_acyclic_coloring,
                     is_complete_coloring, tournament_predicates)

triangle = build(3, [(0, 1), (1, 2), (2, 0)])
k3 = complete_symmetric(3)
mixed = build(3, [(0, 1), (1, 0), (1, 2)])

print("three small digraphs")
for name, d in [("directed triangle", triangle), ("complete symmetric K3", k3),
                ("digon plus arc", mixed)]:
    print(f"  {name}: n={d.n}, m={d.m}, {classify_symmetry(d)}, "
          f"tournament={tournament_predicates(d).is_tournament}")

print()
print("induced cycles (a digon counts as a 2-cycle)")
print("  triangle on all vertices ->", has_directed_cycle(triangle, {0, 1, 2}))
print("  triangle on {0,1}        ->", has_directed_cycle(triangle, {0, 1}))
print("  K3 on {0,1}              ->", has_directed_cycle(k3, {0, 1}))

print()
print("deleting vertex 2 of the triangle leaves", list(delete_vertex(triangle, 2).arcs()),
      "with original labels", delete_vertex(triangle, 2).labels)

print()
print("colorings: acyclic = no class holds a cycle; complete = every ordered")
print("color pair (i, j) is hit by an arc")
two = Coloring((1, 1, 2), 2)
print(f"  triangle with classes {{0,1}},{{2}}: acyclic={is_acyclic_coloring(triangle, two)}, "
      f"complete={is_complete_coloring(triangle, two)}")
constant = Coloring((1, 1, 1), 1)
print(f"  triangle in one class: acyclic={is_acyclic_coloring(triangle, constant)} "
      f"(the triangle itself is the cycle)")
identity = Coloring((1, 2, 3), 3)
print(f"  K3 all singletons: acyclic={is_acyclic_coloring(k3, identity)}, "
      f"complete={is_complete_coloring(k3, identity)} (digons cover both directions)")
