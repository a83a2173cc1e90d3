"""Deterministic forwarding simulator and routing-cost benchmark.

The network is contention free: every packet is injected at cycle 0 and
advances one hop per cycle, so packets never interact and the cycle count of
a run is simply the longest hop count among its packets.  Delivery is
checked packet by packet; a packet that stops anywhere but its destination
aborts the run with a RoutingError rather than being dropped silently.

Random traffic uses an explicit linear congruential generator,
``x_{t+1} = (1664525 * x_t + 1013904223) mod 2**32``, so a seed produces the
same pair sequence on every platform and run.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .errors import GuardLimitError, RoutingError
from .greedy_route import greedy_path
from .metrics import diameter
from .static_route import build_packet, consume_step, shortest_path
from .topology import CirculantSpec, apply_action

MODES = ("source_routed", "greedy")

BENCH_NODE_LIMIT = 10_000


def _lcg_stream(seed: int):
    x = seed % 2**32
    while True:
        x = (1664525 * x + 1013904223) % 2**32
        yield x


@dataclass(frozen=True)
class TrafficPattern:
    """Which (src, dst) pairs a run injects.

    Build one with the classmethods; ``pairs`` yields the ordered pairs in a
    reproducible order.
    """

    kind: str
    count: int | None = None
    seed: int | None = None
    src: int | None = None
    dst: int | None = None

    @classmethod
    def all_pairs(cls) -> "TrafficPattern":
        return cls(kind="all_pairs")

    @classmethod
    def random_pairs(cls, count: int, seed: int | None = None) -> "TrafficPattern":
        if count < 0:
            raise ValueError(f"count must be >= 0, got {count}")
        return cls(kind="random_pairs", count=count, seed=seed)

    @classmethod
    def single(cls, src: int, dst: int) -> "TrafficPattern":
        if src == dst:
            raise ValueError("single-pair traffic needs src != dst")
        return cls(kind="single", src=src, dst=dst)

    def pairs(self, spec: CirculantSpec, default_seed: int = 0):
        n = spec.n
        if self.kind == "all_pairs":
            for src in range(n):
                for dst in range(n):
                    if dst != src:
                        yield src, dst
        elif self.kind == "random_pairs":
            seed = self.seed if self.seed is not None else default_seed
            draw = _lcg_stream(seed)
            for _ in range(self.count):
                src = next(draw) % n
                dst = next(draw) % n
                while dst == src:
                    dst = next(draw) % n
                yield src, dst
        elif self.kind == "single":
            if not 0 <= self.src < n:
                raise ValueError(f"source {self.src} outside 0..{n - 1}")
            if not 0 <= self.dst < n:
                raise ValueError(f"destination {self.dst} outside 0..{n - 1}")
            yield self.src, self.dst
        else:
            raise ValueError(f"unknown traffic kind {self.kind!r}")


@dataclass(frozen=True)
class SimReport:
    """Outcome of one run."""

    mode: str
    injected: int
    delivered: int
    hop_histogram: dict
    avg_hops: float
    max_hops: int
    total_cycles: int


def _source_routed_hops(spec: CirculantSpec, src: int, dst: int, hop_capacity: int) -> int:
    packet = build_packet(spec, src, dst, hop_capacity=hop_capacity)
    node = src
    hops = 0
    while True:
        action, packet = consume_step(spec, packet)
        if action is None:
            break
        node = apply_action(spec, node, action)
        hops += 1
    if node != dst:
        raise RoutingError(f"packet for {dst} stopped at {node}")
    return hops


def run(spec: CirculantSpec, mode: str, traffic: TrafficPattern, seed: int = 0) -> SimReport:
    """Inject the traffic pattern, forward every packet, and tally the run.

    ``seed`` feeds random traffic only when the pattern does not carry its
    own seed.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == "source_routed":
        capacity = diameter(spec)

        def hops_of(src: int, dst: int) -> int:
            return _source_routed_hops(spec, src, dst, capacity)

    else:

        def hops_of(src: int, dst: int) -> int:
            return len(greedy_path(spec, src, dst)) - 1
    histogram: dict[int, int] = {}
    injected = 0
    total_hops = 0
    max_hops = 0
    for src, dst in traffic.pairs(spec, default_seed=seed):
        hops = hops_of(src, dst)
        injected += 1
        total_hops += hops
        max_hops = max(max_hops, hops)
        histogram[hops] = histogram.get(hops, 0) + 1
    return SimReport(
        mode=mode,
        injected=injected,
        delivered=injected,  # a misrouted packet raises instead of dropping
        hop_histogram=dict(sorted(histogram.items())),
        avg_hops=total_hops / injected if injected else 0.0,
        max_hops=max_hops,
        total_cycles=max_hops,
    )


def sim_report_document(report: SimReport) -> dict:
    """JSON-ready view of a report."""
    return {
        "mode": report.mode,
        "injected": report.injected,
        "delivered": report.delivered,
        "hop_histogram": {str(h): c for h, c in report.hop_histogram.items()},
        "avg_hops": report.avg_hops,
        "max_hops": report.max_hops,
        "total_cycles": report.total_cycles,
    }


SIM_CSV_HEADER = "mode,n,s,k,injected,delivered,avg_hops,max_hops,total_cycles"


def sim_report_csv(spec: CirculantSpec, report: SimReport) -> str:
    """CSV line for one run; avg_hops keeps full precision for re-parsing."""
    s = spec.s if spec.s is not None else ""
    return (
        f"{report.mode},{spec.n},{s},{spec.k},{report.injected},{report.delivered},"
        f"{report.avg_hops!r},{report.max_hops},{report.total_cycles}"
    )


def bench_route_computation(spec: CirculantSpec, algo: str, repeat: int = 3) -> float:
    """Median wall time of an all-ordered-pairs route computation sweep.

    ``bfs`` runs the full source-routing search once per pair with no
    caching; ``greedy`` walks the greedy rule per pair.  Refuses instances
    above BENCH_NODE_LIMIT nodes.
    """
    if spec.n > BENCH_NODE_LIMIT:
        raise GuardLimitError(
            f"{spec.label} has {spec.n} nodes, above the {BENCH_NODE_LIMIT} guard"
        )
    if algo == "bfs":
        route = shortest_path
    elif algo == "greedy":
        route = greedy_path
    else:
        raise ValueError(f"algo must be 'bfs' or 'greedy', got {algo!r}")
    if repeat < 1:
        raise ValueError(f"repeat must be >= 1, got {repeat}")
    times = []
    n = spec.n
    for _ in range(repeat):
        start = time.perf_counter()
        for src in range(n):
            for dst in range(n):
                if dst != src:
                    route(spec, src, dst)
        times.append(time.perf_counter() - start)
    return statistics.median(times)
