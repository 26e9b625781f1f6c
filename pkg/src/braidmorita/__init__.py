"""Exact computations with quasitriangular Hopf algebras, comodule algebras and K-matrices."""

from .linalg import Matrix, SingularMatrix, TensorElement, embed_element, flip, invert_matrix, kron
from .hopf import (
    AlgebraData,
    HopfData,
    VerificationReport,
    antipode_inverse,
    check_algebra,
    check_augmentation,
    check_hopf,
    dual_hopf,
    regular_action,
    semisimple_via_trace_form,
)
from .quasitriangular import (
    ConstructionFailed,
    ModuleAction,
    RMatrix,
    braiding_c,
    check_r_matrix,
    drinfeld_double,
    is_triangular_r,
    regular_module,
    yang_baxter_verify,
)
from .comodule import (
    ComoduleAlgebraData,
    KMatrix,
    NotClosed,
    NotCoideal,
    NotTriangular,
    braided_module_verify,
    braiding_e,
    check_comodule_algebra,
    check_k_matrix,
    coideal_subalgebra,
    h_simplicity_certificate,
    is_triangular_k,
    reflective_algebra_mult,
    reflective_augmentation,
)
from .braidrep import (
    BraidWord,
    presentation,
    rep_type_a,
    rep_type_bc,
    rep_type_d,
    signature,
    trace_word,
    verify_relations,
)
from .groups import GroupTable, builtin_groups, enumerate_subgroups
from .classify import (
    HostMismatch,
    NotCentral,
    NotInvolution,
    distinguish,
    group_algebra,
    kG_k_matrices,
    pair_conjugacy_classes,
    r_u,
    solve_k,
)
from .catalog import CatalogEntry, group_entry, sweedler

__version__ = "0.1.0"
