"""spinfactor: tri-product calculus on the complex spin factor.

Vectors carry the triple product {a,b,c} = <a|b>c + <c|b>a - <a|conj(c)>conj(b);
the package provides the operator calculus built on it (D, wedge, Q, Bergman),
tripotent classification and singular decomposition, the predual trace norm,
TCAR bases and spin grids, spin-1 and spin-1/2 Lorentz representations, and
the hyperbolic geometry of the unit ball.
"""
from ._backend import BACKEND
from .config import DEFAULT_TOL
from .core import (
    DimensionMismatch,
    DomainError,
    SpinVector,
    StructuralError,
    conjugate,
    det,
    euclid_norm,
    inner,
)
from .triple import (
    ConjugateLinearOperator,
    LinearOperator,
    bergman,
    d_operator,
    is_triple_automorphism,
    make_automorphism,
    q_operator,
    rotate_in_plane,
    triple_product,
    wedge,
)
from .tripotent import (
    PeirceProjections,
    SingularDecomposition,
    TripotentClass,
    apply_odd_function,
    classify,
    decompose_minimal,
    is_algebraically_orthogonal,
    maximal_phase,
    operator_norm,
    peirce_projections,
    singular_decomposition,
    singular_values,
)
from .dual import Functional, hat, check, state_decomposition, trace_norm
from .basis import (
    Report,
    SpinGrid4,
    TcarBasis,
    canonical_grid,
    matrix_rep,
    pauli_table,
    random_tcar,
    s6_grid,
    verify_spin_grid,
    verify_tcar,
)
from .geometry import (
    FlowConfig,
    curvature_zero,
    flow,
    in_unit_ball,
    invariant_metric,
    sample_section_d1,
    sample_section_dual,
    translation_field,
    transvection_to,
)
from . import lorentz

__version__ = "0.1.0"
