"""Exact enumeration of sinks in acyclic orientations of multigraphs.

Chromatic polynomials, acyclic and unique-sink orientations, broken circuit
complexes, a bijection between unique-sink orientations and NBC spanning
trees, and chromatic symmetric functions in noncommuting variables.
"""

from .chromatic import IntPolynomial, chromatic_bruteforce, chromatic_delcon, chromatic_whitney, coefficient
from .graph import (
    GraphError,
    MixedDigraph,
    Multigraph,
    State,
    contract_edge,
    contract_unoriented,
    delete_edge,
    is_acyclic,
    orientation,
    parse_graph,
    sinks,
)
from .nbc import broken_circuits, circuits, nbc_sets, nbc_trees
from .ncsf import (
    NCSym,
    SetPartition,
    Y_delcon,
    Y_stable_oracle,
    commutativize,
    specialize_ones,
    to_e_basis,
    unique_sink_count_via_c,
)
from .orientations import all_acyclic, delcon_bijection, delcon_inverse, sink_distribution, unique_sink
from .sink_bijection import forward, inverse

__version__ = "0.1.0"
