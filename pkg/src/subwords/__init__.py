"""Subword universality indexes of words and of SLP-compressed words."""

from ._kernels import BACKEND
from .core import (
    Alphabet,
    AlphabetError,
    ArchFactorization,
    CoarchFactorization,
    ForeignLetterError,
    Word,
    alpha,
    alpha_iter,
    alpha_table,
    arch_factorize,
    as_word,
    beta,
    beta_table,
    coarch_factorize,
    conjugate,
    first_occurrence_order,
    last_occurrence_order,
    mirror,
)
from .indexes import iota, iota_conjugate, zeta
from .signature import (
    Signature,
    compose,
    eval_signature,
    iota_from_signature,
    signature_of_word,
    zeta_from_signature,
)
from .slp import Slp, expand, expansion_length, parse_slp, slp_indexes

__version__ = "0.1.0"
