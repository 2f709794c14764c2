"""
Factorization of family members into elementary and affine factors, and the inverse maps built from it.
"""
from njt.inverter.factors import AffineFactor, ElementaryFactor, Factor, FactorSequence
from njt.inverter.factors import compose_factors, factor_from_json, invert_factor_sequence
from njt.inverter.decompose import DecompositionState, decompose
from njt.inverter.formal_inverse import FormalInverse, formal_inverse, linear_matrix, verify_inverse
