"""
Classified families of structured maps with nilpotent Jacobian matrix: parameters, builders, recovery, sampling and
the exact identities their members satisfy.
"""
from njt.family.params import DerivedConstants, FamilyParams, Level, NicePoly, derive_coefficients, validate_params
from njt.family.builders import build, build_cor1, build_cor2, build_main, first_component
from njt.family.recovery import expand_in_powers, recover_cor1, recover_cor2, recover_family, recover_params
from njt.family.identities import bracket_term, closed_form_component, closed_form_holds, derivative_ladder
from njt.family.identities import family_identities_hold, gamma_identities_hold, ladder_holds
from njt.family.identities import taylor_expansion, taylor_identity_holds
from njt.family.sampling import perturb, random_map, random_polynomial, sample_corpus, sample_params
