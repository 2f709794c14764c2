"""
Jacobian matrices of polynomial maps, nilpotency tests and linear dependence checks.
"""
from njt.jacobian.polymap import PolyMatrix, PolynomialMap
from njt.jacobian.shape import StructuredShape, allowed_variables, validate_structured_shape
from njt.jacobian.nilpotency import CharacteristicCheck, EquationCheck, MatrixPowerCheck, NilpotencyCheck
from njt.jacobian.nilpotency import char_coefficients, characteristic_determinant, check_nilpotent, get_checker
from njt.jacobian.nilpotency import is_nilpotent_power, jacobian_matrix, keller_determinant, nilpotency_equations
from njt.jacobian.nilpotency import nilpotency_index, structured_char_recursion, supported_methods
from njt.jacobian.dependence import jacobian_row_dependence, linear_dependence_rank, vector_dependence_rank
