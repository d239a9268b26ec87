"""Clique energies and the 0-coloured part of a 13-vertex class member.

Every k-clique of a member has minimum Hamiltonian-cycle weight m+2-k,
so exactly the (m+2)-cliques carry an all-zero cycle; consequently the
colour-0 subquiver admits only cycles of length m+2 and in/out degree
at most two everywhere.
"""
import json
from pathlib import Path

from cquivers import (
    all_cliques,
    clique_energy,
    clique_number,
    quiver_from_json,
    verify_energy,
    zero_part,
    zero_part_cycles,
    zero_part_valency,
)

q = quiver_from_json(json.loads((Path(__file__).parent.parent / "data" / "fig4.json").read_text()))
print("quiver:", q)
print("clique number:", clique_number(q), f"(= m + 2 = {q.m + 2})")
print()

print("clique energies (minimum Hamiltonian-cycle weights):")
for clique in all_cliques(q, min_size=3):
    e = clique_energy(q, clique)
    witness = " -> ".join(str(v + 1) for v in e.witness)
    print(f"  {[v + 1 for v in clique]}: delta = {e.delta}  (cycle {witness})")
print("theorem check over all cliques:", verify_energy(q).ok)
print()

zp = zero_part(q)
print(f"zero part: {len(zp.arrows)} colour-0 arrows")
cycles = zero_part_cycles(q)
for cyc in cycles.cycles:
    print("  cycle:", " -> ".join(str(v + 1) for v in cyc), f"(length {len(cyc)})")
val = zero_part_valency(q)
print("all cycle lengths equal m + 2:", cycles.ok)
print("in/out degree bounded by 2:", val.ok)
print()
print("DOT of the zero part (pipe into graphviz to draw):")
print(zp.to_dot())
