"""Exact computations in the two-parameter deformed algebra of labelled
bipartite diagrams and in its coding by words of monomials.
"""

from .kernel import (
    EMPTY, ONE, QC, QS, ZERO, Coeff, Lin, Monomial, Tensor, Word,
    coeff_eval, coeff_mul, max_index, mono_degree, mono_mul, pairing, translate, word_degree, x,
)
from .diagram import (
    DiagLin, Diagram, MultiIndex, ShsMap, act, bks, code, decode, diagram_concat, diagram_new,
    expand, fubini, mult, multiindex, shs_enumerate, shs_product,
)
from .law import (
    LawParams, infil, infil_lin, infil_shifted, shifted_concat, shifted_law_generic, word_class,
)
from .colour import ColourFactor, bicharacter_pow, coloured_mul, is_colour_factor
from .coalg import (
    AugmentedVec, LetterCoproductKind, delta, delta1, diag_deform_product, dual_product,
    extended_pairing, letter_coproduct, letter_dual_product, mono_factorizations,
)
from .structure import Factorization, factorize, filtration_length, is_irreducible, triangularity_check

__version__ = "0.1.0"

__all__ = [
    "EMPTY", "ONE", "QC", "QS", "ZERO", "Coeff", "Lin", "Monomial", "Tensor", "Word",
    "coeff_eval", "coeff_mul", "max_index", "mono_degree", "mono_mul", "pairing",
    "translate", "word_degree", "x", "DiagLin", "Diagram", "MultiIndex", "ShsMap", "act",
    "bks", "code", "decode", "diagram_concat", "diagram_new", "expand", "fubini", "mult",
    "multiindex", "shs_enumerate", "shs_product", "LawParams", "infil", "infil_lin",
    "infil_shifted", "shifted_concat", "shifted_law_generic", "word_class", "ColourFactor",
    "bicharacter_pow", "coloured_mul", "is_colour_factor", "AugmentedVec",
    "LetterCoproductKind", "delta", "delta1", "diag_deform_product", "dual_product",
    "extended_pairing", "letter_coproduct", "letter_dual_product", "mono_factorizations",
    "Factorization", "factorize", "filtration_length", "is_irreducible",
    "triangularity_check",
]
