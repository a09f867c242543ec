"""Zero forcing: exact solver, girth/degree bound, and the forcing-chronology apparatus."""

from .bounds import abajo_dianez_ex, davila_kenter_bound, extremal_bruteforce, mantel_ex, min_order_bound
from .errors import (
    AcyclicGraphError,
    BoundDomainError,
    Graph6Error,
    GraphError,
    MachineryError,
    OracleRefused,
)
from .forcing import Chronology, ColorState, ForceEvent, derived_set, eligible_forces, is_zero_forcing_set
from .graph import (
    ACYCLIC,
    Girth,
    Graph,
    common_neighbors,
    connected_components,
    from_edges,
    girth,
    induced_subgraph,
    min_degree,
)
from .graph6 import parse_graph6, parse_line, parse_sparse6, write_graph6
from .machinery import (
    LemmaReport,
    Machinery,
    build_machinery,
    check_component_identity,
    check_si_identity,
    check_star,
    hypothesis_report,
    lift_cycle,
    run_all_checks,
)
from .named import named_graph
from .solver import (
    SolverConfig,
    SolveResult,
    brute_force_oracle,
    minimum_zero_forcing_sets,
    verify_witness,
    zero_forcing_number,
)

__version__ = "0.1.0"
