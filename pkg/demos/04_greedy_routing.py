"""Greedy routing: local decisions, and how close they land to optimal.

Run:  python3 demos/04_greedy_routing.py
"""

from mcnoc import (
    greedy_path,
    make_multiplicative,
    next_hop,
    relative_dest,
    shortest_path,
    stretch_report,
)

spec = make_multiplicative(4, 3)
src, dst = 5, 17

# A greedy router holds no routing table.  It sees the destination in the
# packet, computes the cyclic offset, and jumps by whichever generatrix is
# closest to the distance still to cover, in the shorter direction.
print(f"{spec.label}: greedy walk {src} -> {dst}")
node = src
while node != dst:
    d = next_hop(spec, node, dst)
    print(
        f"  at {node}: offset {relative_dest(spec, node, dst)}, direction {d.direction:+d}, "
        f"remaining {d.distance_in_direction} between {d.g_lo} and {d.g_hi}"
        f" -> jump {d.chosen} to {d.next_node}"
    )
    node = d.next_node

# Overshooting is allowed (16 > 12 above) because stepping past the target
# still shrinks the cyclic distance; that is what guarantees termination.
print("\ngreedy vs shortest:")
for a, b in [(5, 17), (0, 42), (63, 1), (10, 43)]:
    g = greedy_path(spec, a, b)
    s = shortest_path(spec, a, b)
    print(f"  {a:>2} -> {b:<2}  greedy {g}  shortest {len(s) - 1} hops")

# Across every ordered pair of these instances the greedy walk is exactly
# as short as breadth-first search: stretch 1.0, no exceptions.
print("\nstretch over all ordered pairs:")
for s_, k_ in [(2, 4), (2, 6), (3, 3), (4, 3), (3, 4)]:
    report = stretch_report(make_multiplicative(s_, k_))
    print(
        f"  {report.label}: max {report.max_stretch:.3f}, avg {report.avg_stretch:.3f}, "
        f"pairs over optimum: {len(report.worst_pairs)} of {report.pairs}"
    )
