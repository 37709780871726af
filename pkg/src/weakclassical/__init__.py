"""Decision procedures for weakly classical prime submodules over finite rings.

Rings are Z_n, finite products and quotients of them, or the integers acting
on finite abelian groups. Modules are finite. Everything is decided by
exhaustive scans over explicit tables, so every answer comes with a witness.
"""

from .decision import Decision
from .errors import (
    AlgebraError,
    HypothesisFailed,
    InvalidParameter,
    InvalidSubmodule,
    NotAHomomorphism,
    NotApplicable,
    NotMultiplicationModule,
    NotProper,
    NotWCP,
    RingMismatch,
    SpecSyntaxError,
    TooLarge,
    UnknownGoal,
    UnknownTheorem,
    Unsupported,
)
from ._sets import format_label
from .grammar import parse_elements, parse_module, parse_ring
from .modules import (
    Localization,
    Module,
    ModuleFlags,
    ModuleHom,
    Submodule,
    act,
    act_elem,
    act_span,
    annihilator,
    colon_module,
    colon_ring,
    enumerate_submodules,
    hom_image,
    hom_preimage,
    localize_module,
    make_hom,
    make_inclusion,
    make_module_abelian,
    make_module_cyclic,
    make_module_direct_sum,
    make_module_free,
    make_module_over_product,
    make_module_quotient,
    make_projection,
    module_flags,
    submodule_as_module,
    submodule_generate,
)
from .multiplication import (
    MRadicalResult,
    NilResult,
    is_multiplication,
    is_nilpotent_submodule,
    m_radical,
    nil_set,
    presentation_independence_check,
    radical_formula,
    submodule_product,
)
from .predicates import (
    CLASSES,
    ClassificationReport,
    Conditions,
    TripleZero,
    classical_triple_zeros,
    classify,
    is_classical_prime,
    is_free_triple_zero,
    is_prime_submodule,
    is_weakly_classical_prime,
    main2_conditions,
    main_conditions,
    witness_violates,
)
from .rings import (
    INTEGERS,
    Ideal,
    MultiplicativeSet,
    Ring,
    RingMap,
    ideal_arith,
    ideal_colon,
    ideal_from_generators,
    ideal_radical,
    is_prime_ideal,
    is_principal_ring,
    is_weakly_prime_ideal,
    localize_ring,
    make_ring_product,
    make_ring_quotient,
    make_ring_zn,
)

__version__ = "0.1.0"
