"""Distance metrics of circulants against equal-size square meshes.

Run:  python3 demos/02_metrics_vs_mesh.py
"""

from mcnoc import (
    analytic_avg_mc2,
    analytic_diameter_mc2,
    average_distance,
    compare_row,
    make_multiplicative,
    memory_bits,
    metrics_csv_row,
)
from mcnoc.metrics import METRICS_CSV_HEADER

# The headline comparison: for the same node count, a multiplicative
# circulant has a far smaller diameter and average distance than the mesh.
print(METRICS_CSV_HEADER)
for s, k in [(2, 4), (2, 6), (3, 4), (5, 4), (3, 6), (6, 4), (7, 4)]:
    print(metrics_csv_row(compare_row(make_multiplicative(s, k))))

# For s = 2 there are closed forms: diameter ceil(k/2), average roughly k/3.
# The average is an estimate; watch it converge as k grows.
print("\nMC(2,k) closed forms vs brute force:")
print("k   diameter  brute_avg  k/3    rel_err")
for k in range(4, 11):
    spec = make_multiplicative(2, k)
    brute = average_distance(spec)
    est = analytic_avg_mc2(k)
    print(
        f"{k:<3d} {analytic_diameter_mc2(k):<9d} {brute:<10.4f} {est:<6.4f} "
        f"{abs(est - brute) / brute:.3f}"
    )

# Greedy routing state is tiny: two address registers, the generatrix
# ladder, a couple of counters.  Whole-network budgets in bits:
print("\nrouter memory budgets:")
for s, k in [(2, 4), (3, 2), (4, 3), (2, 6)]:
    spec = make_multiplicative(s, k)
    est = memory_bits(spec)
    print(
        f"  {spec.label}: {est.per_node_bits} bits/node x {spec.n} nodes"
        f" = {est.total_bits} bits (addresses are {est.address_bits} bits)"
    )
