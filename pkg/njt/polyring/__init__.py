"""
Exact sparse multivariate polynomial arithmetic over the rationals and the expression language.
"""
from njt.polyring.polynomial import LexTerm, NEG_INFINITY, Polynomial, Substitution, order_key, variable_name
from njt.polyring.parser import format_polynomial, format_univariate, parse_polynomial, parse_univariate
