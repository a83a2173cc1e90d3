"""Tour of topology construction: bases, generatrices, ports, neighbours.

Run:  python3 demos/01_build_topologies.py
"""

import json

from mcnoc import (
    make_circulant,
    make_multiplicative,
    neighbors,
    port_count,
    port_table,
    topology_document,
)

# A multiplicative circulant is fixed by two numbers: base s and dimension k.
# Nodes are 0..s**k-1 and every node connects to v +- s**j for each j.
spec = make_multiplicative(4, 3)
print(f"{spec.label}: n={spec.n}, generatrices={spec.generatrices}")

# Ports are numbered from the largest generatrix down, minus direction first.
# Code 0 is reserved as the path terminator, so codes start at 1.
print(f"\n{port_count(spec)} ports per node:")
for code, action in enumerate(port_table(spec).actions, start=1):
    offset = action.sign * spec.generatrices[action.gen_index]
    print(f"  port {code}: {offset:+d}")

print("\nneighbours of node 0, in port order:")
print(" ", [v for v, _ in neighbors(spec, 0)])

# When a generatrix g satisfies 2*g == n, both directions reach the same
# node, so that generatrix collapses to a single port.  MC(2,k) always has
# this: its largest generatrix is exactly n/2.
even = make_multiplicative(2, 4)
print(f"\n{even.label}: n={even.n}, ports={port_count(even)} (not {2 * even.k})")
print("neighbours of node 0:", [v for v, _ in neighbors(even, 0)])

# General circulants work too; the constructor recognises the power ladder
# and records the base, which the greedy router later requires.
ring = make_circulant(9, [1])
loose = make_circulant(12, [1, 3])
print(f"\n{ring.label} has base {ring.s} (a ring is the k=1 case)")
print(f"{loose.label} has base {loose.s} (12 != 3**2, so no base)")

# Everything above is also available as one JSON document.
print("\ntopology document for MC(3,2):")
print(json.dumps(topology_document(make_multiplicative(3, 2)), indent=2))
