"""Network-on-chip toolkit for multiplicative circulant topologies.

Construction and validation of circulant graphs, two routing schemes
(static source routing with port-coded path fields, and greedy routing that
needs only node-local state), distance and memory metrics with square-mesh
reference formulas, and a deterministic forwarding simulator.
"""

from .errors import CorruptPacketError, GuardLimitError, RoutingError
from .greedy_route import (
    GreedyDecision,
    StretchReport,
    greedy_path,
    next_hop,
    relative_dest,
    stretch_report,
)
from .metrics import (
    MemoryEstimate,
    MetricsRow,
    analytic_avg_mc2,
    analytic_diameter_mc2,
    average_distance,
    bfs_distances,
    ceil_log2,
    compare_row,
    diameter,
    memory_bits,
    mesh_avg,
    mesh_diameter,
    metrics_csv_row,
)
from .simulator import (
    SimReport,
    TrafficPattern,
    bench_route_computation,
    run,
    sim_report_csv,
    sim_report_document,
)
from .static_route import (
    SourceRoutedPacket,
    bits_per_hop,
    build_packet,
    consume_step,
    encode_path,
    path_to_actions,
    shortest_path,
)
from .topology import (
    CirculantSpec,
    HopAction,
    PortCode,
    apply_action,
    make_circulant,
    make_multiplicative,
    neighbor_offsets,
    neighbors,
    port_count,
    port_table,
    topology_document,
)

__version__ = "0.1.0"

__all__ = [
    "CirculantSpec",
    "CorruptPacketError",
    "GreedyDecision",
    "GuardLimitError",
    "HopAction",
    "MemoryEstimate",
    "MetricsRow",
    "PortCode",
    "RoutingError",
    "SimReport",
    "SourceRoutedPacket",
    "StretchReport",
    "TrafficPattern",
    "analytic_avg_mc2",
    "analytic_diameter_mc2",
    "apply_action",
    "average_distance",
    "bench_route_computation",
    "bfs_distances",
    "bits_per_hop",
    "build_packet",
    "ceil_log2",
    "compare_row",
    "consume_step",
    "diameter",
    "encode_path",
    "greedy_path",
    "make_circulant",
    "make_multiplicative",
    "memory_bits",
    "mesh_avg",
    "mesh_diameter",
    "metrics_csv_row",
    "neighbor_offsets",
    "neighbors",
    "next_hop",
    "path_to_actions",
    "port_count",
    "port_table",
    "relative_dest",
    "run",
    "shortest_path",
    "sim_report_csv",
    "sim_report_document",
    "stretch_report",
    "topology_document",
]
