"""Equivariant ideal membership over well-structured and rational-order variables."""

from .domain import (
    Eq,
    Fin,
    Lex,
    LocalEmbedding,
    Ord,
    Rat,
    ca1_extends,
    ca2_presentation,
    canonical_tuple,
    extend_local,
    tuple_orbit_reps,
)
from .errors import (
    DomainError,
    EqIdealError,
    InternalInvariantError,
    NoExtensionError,
    ParseError,
    ResourceError,
    ShapeError,
    ValidationError,
)
from .field import GF, QQ, PrimeField, field_from_name
from .frontends import (
    PetriNet,
    VectorFamily,
    encode_tuple,
    encode_vector,
    linsolve,
    member_any,
    petri_reach,
    petri_validate,
    reduce_instance,
    symmetrize_equality,
    validate_family,
)
from .gb import (
    Basis,
    Certificate,
    DivisionStep,
    autoreduce,
    buchberger,
    classical_member,
    decompose,
    divide_step,
    member,
    pres,
    reduce,
    spoly,
    verify_certificate,
)
from .kernels import BACKEND
from .ordinal import Ordinal, ord_add, ord_sub
from .poly import Polynomial, monomial, mono_wqo_leq, rename

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Basis",
    "Certificate",
    "DivisionStep",
    "DomainError",
    "Eq",
    "EqIdealError",
    "Fin",
    "GF",
    "InternalInvariantError",
    "Lex",
    "LocalEmbedding",
    "NoExtensionError",
    "Ord",
    "Ordinal",
    "ParseError",
    "PetriNet",
    "Polynomial",
    "PrimeField",
    "QQ",
    "Rat",
    "ResourceError",
    "ShapeError",
    "ValidationError",
    "VectorFamily",
    "autoreduce",
    "buchberger",
    "ca1_extends",
    "ca2_presentation",
    "canonical_tuple",
    "classical_member",
    "decompose",
    "divide_step",
    "encode_tuple",
    "encode_vector",
    "extend_local",
    "field_from_name",
    "linsolve",
    "member",
    "member_any",
    "mono_wqo_leq",
    "monomial",
    "ord_add",
    "ord_sub",
    "petri_reach",
    "petri_validate",
    "pres",
    "reduce",
    "reduce_instance",
    "rename",
    "spoly",
    "symmetrize_equality",
    "tuple_orbit_reps",
    "validate_family",
    "verify_certificate",
]
