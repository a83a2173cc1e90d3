"""Shared helpers: an independent graph model built with networkx.

The library never imports networkx; tests use it as a second opinion on
adjacency, distances, and shortest-path lengths.
"""

import networkx as nx

from mcnoc import CirculantSpec


def nx_circulant(spec: CirculantSpec) -> nx.Graph:
    return nx.circulant_graph(spec.n, list(spec.generatrices))
