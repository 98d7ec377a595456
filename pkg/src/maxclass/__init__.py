"""Graded Lie algebras of maximal class of type n, through their two-step centralizer sequences."""

from .algebra import (CentralizerSequence, ConsistencyReport, InsufficientPrefix, StructureTable,
                      bracket_coeff, build_table, check_consistency, lie_power_profile)
from .constituents import (ConstituentProfile, check_constituent_bounds, first_constituent_poly,
                           is_ordinary, split_constituents)
from .constructions import (exceptional_sequence, exceptional_simulate, metabelian_sequence,
                            reduce_mod, witt_sequence)
from .polyclass import (PolyModP, classify_lemma, classify_theorem, coeff_range_zero,
                        lemma_condition, s_component)
from .scalar import PrimePowerWitness, Scalar, binom_lucas, is_power_of_p
from .transforms import normalize, subalgebra_from_type1, translate, ugolini_extend

__version__ = "0.1.0"

__all__ = [
    "CentralizerSequence",
    "ConsistencyReport",
    "ConstituentProfile",
    "InsufficientPrefix",
    "PolyModP",
    "PrimePowerWitness",
    "Scalar",
    "StructureTable",
    "binom_lucas",
    "bracket_coeff",
    "build_table",
    "check_consistency",
    "check_constituent_bounds",
    "classify_lemma",
    "classify_theorem",
    "coeff_range_zero",
    "exceptional_sequence",
    "exceptional_simulate",
    "first_constituent_poly",
    "is_ordinary",
    "is_power_of_p",
    "lemma_condition",
    "lie_power_profile",
    "metabelian_sequence",
    "normalize",
    "reduce_mod",
    "s_component",
    "split_constituents",
    "subalgebra_from_type1",
    "translate",
    "ugolini_extend",
    "witt_sequence",
]
