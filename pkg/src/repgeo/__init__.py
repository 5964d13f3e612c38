"""Computable algebraic geometry of finite group representations.

Finite prime fields, Cayley-table groups, representations as two-sorted
algebras, the free term model, closure operators, quasi-identity
checking, and certified equivalence deciders.
"""

from .config import DEFAULT_BOUNDS, DEFAULT_CAPS, EnumerationCaps, SearchBounds
from .errors import (
    ContextMismatch,
    DimensionMismatch,
    EnumerationCapExceeded,
    FieldMismatch,
    InvalidInput,
    NotAGroup,
    NotAnAction,
    NotNormal,
    ParseError,
    RepGeoError,
    SearchSpaceCapExceeded,
    UnknownVariable,
)
from .freemod import (
    Assignment,
    Atom,
    EquationSystem,
    FreeContext,
    GroupAtom,
    GroupWord,
    ModuleAtom,
    ModuleElement,
    QuasiIdentity,
    RingElement,
    equation_system,
    eval_atom,
    eval_module,
    eval_word,
    identity_word,
    invert_word,
    module_act,
    module_add,
    module_scale,
    module_term,
    module_zero,
    multiply_words,
    reduce_word,
    ring_add,
    ring_from_terms,
    ring_mul,
    ring_one,
    ring_scale,
    ring_zero,
    xgen,
    ygen,
)
from .geometry import (
    AtChainCertificate,
    AtWitness,
    Equivalent,
    GeoCertificate,
    NotEquivalent,
    SeparationCertificate,
    SolutionSet,
    Unknown,
    at_equivalent,
    bounded_atoms,
    bounded_module_elements,
    bounded_words,
    enumerate_assignments,
    find_at_witness,
    find_separating_qid,
    fulfills_qid,
    geo_equivalent,
    in_at_closure,
    in_closure,
    paper_witness_qid,
    separates_points,
    solution_set,
    validate_at_witness,
    validate_separation_certificate,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    cyclic_group,
    enumerate_group_homs,
    group_from_table,
    group_hom,
    product_group,
    quotient_group,
    subgroup,
    trivial_group,
)
from .linalg import Matrix, PrimeField, Vector
from .reps import (
    FaithfulImage,
    RepHom,
    Representation,
    check_rep_hom,
    compose_rep_homs,
    enumerate_rep_homs,
    faithful_image,
    make_representation,
    rep_isomorphic,
    rep_kernel,
    stabilizer,
)
from .textio import (
    SourceSpan,
    infer_context,
    parse_atom,
    parse_group_file,
    parse_qid,
    parse_rep_file,
    parse_system_file,
    parse_term,
    parse_word,
    serialize,
    serialize_atom,
    serialize_group,
    serialize_module,
    serialize_qid,
    serialize_rep,
    serialize_ring,
    serialize_system,
    serialize_word,
)
