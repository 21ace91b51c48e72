"""Hunting for an asymmetric digraph whose dichromatic and diachromatic
numbers coincide at r >= 3. None is known; the probe gathers seeded,
reproducible evidence without ever claiming a proof."""

import json

from dikroma import Budget, conjecture_probe

report = conjecture_probe(3, 7, samples_per_n=150, seed=42)
print("probe for dc = dac = 3 over asymmetric digraphs")
print(f"  exhaustive: all tournaments up to 5 vertices; "
      f"sampled: 150 oriented graphs each at n = 6, 7 (seed 42)")
print(f"  census: {report.examined}")
print(f"  counterexample found: {not report.none_found}")

again = conjecture_probe(3, 7, samples_per_n=150, seed=42)
print(f"  same seed reproduces the census exactly: "
      f"{report.to_json() == again.to_json()}")

print()
limited = conjecture_probe(4, 8, samples_per_n=500, seed=7,
                           budget=Budget(max_nodes=200_000))
print("probe for dc = dac = 4 under a 200k-node budget")
print(json.dumps(limited.to_json(), indent=2))
