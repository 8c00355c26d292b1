"""Hamiltonian-cycle-to-Ising compiler with a QAOA statevector solver."""

__version__ = "0.1.0"

from .circuit import Gate, Param, ParamCircuit, bind, build_ansatz
from .engine import (
    DEFAULT_SHOTS,
    Distribution,
    NoiseModel,
    Statevector,
    expectation,
    qaoa_state,
    sample,
    simulate,
    simulate_noisy,
)
from .graph import (
    DecodedTour,
    Graph,
    decode,
    encode_tour,
    make_graph,
    non_edges,
    parse_graph,
    qubit_index,
    qubit_pair,
)
from .hamiltonian import (
    DiagonalHamiltonian,
    Spectrum,
    energy_of,
    full_spectrum,
    qubo_oracle,
)
from .optimizer import (
    OptimizationResult,
    OptimizerConfig,
    SolveReport,
    minimize,
    qaoa_solve,
)
from .qubo import (
    IsingModel,
    QuboPolynomial,
    assemble,
    edge_validity,
    from_term_list,
    maxcut_ising,
    position_uniqueness,
    strip_constant,
    to_ising,
    to_term_list,
    vertex_uniqueness,
)

__all__ = [
    "DEFAULT_SHOTS",
    "DecodedTour",
    "DiagonalHamiltonian",
    "Distribution",
    "Gate",
    "Graph",
    "IsingModel",
    "NoiseModel",
    "OptimizationResult",
    "OptimizerConfig",
    "Param",
    "ParamCircuit",
    "QuboPolynomial",
    "SolveReport",
    "Spectrum",
    "Statevector",
    "assemble",
    "bind",
    "build_ansatz",
    "decode",
    "edge_validity",
    "encode_tour",
    "energy_of",
    "expectation",
    "from_term_list",
    "full_spectrum",
    "make_graph",
    "maxcut_ising",
    "minimize",
    "non_edges",
    "parse_graph",
    "position_uniqueness",
    "qaoa_solve",
    "qaoa_state",
    "qubit_index",
    "qubit_pair",
    "qubo_oracle",
    "sample",
    "simulate",
    "simulate_noisy",
    "strip_constant",
    "to_ising",
    "to_term_list",
    "vertex_uniqueness",
]
