"""Prismatic graph families and the operations that build them."""

from .families import (
    FAMILIES,
    MENAGERIE,
    FamilySpec,
    NotPrismaticError,
    always_prismatic,
    family_names,
    generate,
    lemma_bound,
    lemma_hitting_set,
)
from .operations import (
    Copy,
    ExponentiationSpec,
    MultiplicationSpec,
    exponentiate,
    multiply,
    replicate,
)
from .schlafli import SCHLAFLI_VERTICES, SchlafliVertex, schlafli_complement, schlafli_induced

__all__ = [
    "FAMILIES",
    "MENAGERIE",
    "SCHLAFLI_VERTICES",
    "Copy",
    "ExponentiationSpec",
    "FamilySpec",
    "MultiplicationSpec",
    "NotPrismaticError",
    "SchlafliVertex",
    "always_prismatic",
    "exponentiate",
    "family_names",
    "generate",
    "lemma_bound",
    "lemma_hitting_set",
    "multiply",
    "replicate",
    "schlafli_complement",
    "schlafli_induced",
]
