"""Post normal systems, reductions of their assertion problem to the PCP, and bounded solvers."""

from .bridge import (
    MalformedSolutionError,
    embed_derivation,
    equivalence_experiment,
    extract_derivation,
    split_marker_blocks,
    verify_post_reduction,
)
from .normal_system import (
    Derivation,
    NormalRule,
    NormalSystem,
    ParseError,
    assertion_bounded,
    check_derivation,
    check_post_conditions,
    derivation_from_indices,
    derive_bounded,
    indices_from_derivation,
    successors,
)
from .pcp import PcpInstance, PcpSolution, enumerate_solutions, solve_bounded, verify_solution
from .reductions import PairRole, ReductionArtifact, build_s1, reduce_new, reduce_post, size_report
from .words import IndexedWord, ell_d, phi_encode, phi_encode_instance, r_d, reverse

__version__ = "0.1.0"
