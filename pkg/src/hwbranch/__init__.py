"""Exact branching laws for highest weight modules of Hermitian type, with a
finite-dimensional character oracle and classification tables."""

from .rootsys import (
    DominanceError,
    FormalCharacter,
    InvalidTypeError,
    RootSystemSpec,
    Weight,
    build_root_system,
    dominant_part,
    freudenthal_char,
    highest_root,
    highest_root_coefficients,
    is_dominant,
    weyl_dim,
)
from .charoracle import (
    Decomposition,
    PeelError,
    ProjectionMap,
    ReductiveSystem,
    branch_by_projection,
    gl_tensor,
    is_multiplicity_free,
    pieri_rule,
    shipped_projection,
    tensor_decompose,
)
from .sympairs import (
    PanNode,
    SymmetricPairRecord,
    antiholomorphic_pairs,
    holomorphic_pairs,
    mf_restriction_table,
    pan_nodes,
    rank_equal_pairs,
)
from .hermitian import (
    HermitianData,
    NotHermitianError,
    StrongOrthSequence,
    UnsupportedExceptionalError,
    hermitian_data,
    is_holomorphic_ds,
    is_scalar_type,
    strongly_orthogonal_sequence,
)
from .branching import (
    BranchingExpansion,
    InvalidHWError,
    NotHoloDSError,
    NotScalarTypeError,
    ParameterError,
    c_count,
    discrete_part_spc,
    hks_expansion,
    sl2_formula,
    sp2_holo_ktype_mult,
    sp2_nonholo_ktype_mult,
    tensor_hwm_expansion,
    upq_restriction,
)
from .verify import (
    NonPanError,
    VerificationReport,
    check_hks_grading,
    check_theorem_E,
    check_theorem_F,
    check_upq_consistency,
    run_suite,
)

__version__ = "0.1.0"
