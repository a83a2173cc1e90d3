"""Hop-by-hop anatomy of a source-routed packet.

Run:  python3 demos/03_source_routing_walkthrough.py
"""

from mcnoc import (
    apply_action,
    bits_per_hop,
    build_packet,
    consume_step,
    make_multiplicative,
    path_to_actions,
    port_count,
    port_table,
    shortest_path,
)

spec = make_multiplicative(4, 3)
src, dst = 5, 17

# The sender computes the whole route up front...
path = shortest_path(spec, src, dst)
print(f"{spec.label}: route {src} -> {dst} is {path}")

# ...translates it into port codes...
actions = path_to_actions(spec, path)
table = port_table(spec)
for action in actions:
    offset = action.sign * spec.generatrices[action.gen_index]
    print(f"  hop {offset:+d} leaves through port {table.code(action)}")

# ...and packs the codes into one bit field, first hop in the low bits.
# Each slot is bits_per_hop wide: enough for codes 0..port_count.
packet = build_packet(spec, src, dst)
print(f"\n{port_count(spec)} ports -> {bits_per_hop(spec)} bits per hop")
print(f"path field: {packet.bits()}  (dst={packet.dst}, {packet.hops_encoded} hops)")

# Routers along the way never look anything up: extract low bits, move,
# shift.  A field of all zeros means the packet is home.
node = src
while True:
    action, packet = consume_step(spec, packet)
    if action is None:
        print(f"at {node}: field {packet.bits()} is zero, deliver")
        break
    nxt = apply_action(spec, node, action)
    print(f"at {node}: consume {table.code(action)}, go to {nxt}, keep {packet.bits()}")
    node = nxt

# One more, through a diametral port: in MC(2,6) the generatrix 32 is n/2,
# and node 63 is a single -1 hop away from node 0.
wide = make_multiplicative(2, 6)
packet = build_packet(wide, 0, 63)
print(f"\n{wide.label}: route 0 -> 63 encodes as {packet.bits()} "
      f"({packet.bits_per_hop} bits/hop, {packet.hops_encoded} hop)")
