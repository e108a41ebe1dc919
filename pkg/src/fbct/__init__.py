"""Differential and boomerang connectivity tables over GF(2^n)."""

from .analysis import (
    BoxedFunction,
    Spectrum,
    bct_entry,
    bct_table,
    ddt_entry,
    ddt_table,
    ddt_uniformity,
    fbct_entry,
    fbct_ratio_counts,
    fbct_spectrum_bruteforce,
    fbct_spectrum_power,
    fbct_table,
    fbct_uniformity,
)
from .closedform import (
    FbctPrediction,
    SpectrumPrediction,
    kloosterman_carlitz,
    kloosterman_direct,
    lemma4_sum_direct,
    lemma4_sum_formula,
    predict_fbct_entry,
    predict_spectrum,
    verify_theorem,
)
from .errors import CapacityError, ConsistencyError, UsageError
from .field import FieldElement, FieldSpec, default_modulus, get_field

__version__ = "0.1.0"
