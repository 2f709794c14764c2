# MIT License
#
# Copyright (C) IBM Corporation 2018
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
# documentation files (the "Software"), to deal in the Software without restriction, including without limitation the
# rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software, and to permit
# persons to whom the Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all copies or substantial portions of the
# Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE
# WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT,
# TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
"""
Hypothesis strategies generating random polynomials, used by the property-based test suites.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from fractions import Fraction

from hypothesis import strategies as st

from njt.polyring.polynomial import Polynomial, order_key

INT64 = st.integers(min_value=-2 ** 63, max_value=2 ** 63 - 1)
SMALL_FRACTIONS = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def coefficients():
    return st.one_of(INT64, SMALL_FRACTIONS)


def monomials(n, max_degree):
    """
    Exponent tuples of length `n` and total degree at most `max_degree`.
    """
    return st.lists(st.integers(0, n - 1), max_size=max_degree).map(
        lambda indices: tuple(indices.count(i) for i in range(n)))


def polynomials(n, max_degree=4, max_terms=6, coefficient_strategy=None):
    if coefficient_strategy is None:
        coefficient_strategy = coefficients()
    return st.dictionaries(monomials(n, max_degree), coefficient_strategy, max_size=max_terms).map(
        lambda terms: Polynomial(n, terms))


def polynomials_any_dimension(max_n=4, max_degree=4, max_terms=6):
    return st.integers(1, max_n).flatmap(lambda n: polynomials(n, max_degree, max_terms))


@st.composite
def dominated_pairs(draw):
    """
    Pairs `(u, v)` in `Q[x, y]` whose leading terms are `c1 x^i1 y^j1` and `c2 x^i2 y^j2` with `i1, j1, j2 >= 1`,
    `i2 >= 0` and `i1 j2 - i2 j1 != 0`. Returned with the expected leading exponents and coefficient.
    """
    i1 = draw(st.integers(1, 4))
    j1 = draw(st.integers(1, 4))
    i2 = draw(st.integers(0, 4))
    j2 = draw(st.integers(1, 4))
    if i1 * j2 - i2 * j1 == 0:
        j2 += 1
    c1 = draw(st.integers(-9, 9).filter(lambda c: c != 0))
    c2 = draw(st.integers(-9, 9).filter(lambda c: c != 0))

    def _with_lower_terms(i, j, c):
        lead = (i, j)
        extra = draw(st.dictionaries(monomials(2, i + j), st.integers(-9, 9), max_size=4))
        terms = {e: v for e, v in extra.items() if order_key(e) < order_key(lead)}
        terms[lead] = c
        return Polynomial(2, terms)

    u = _with_lower_terms(i1, j1, c1)
    v = _with_lower_terms(i2, j2, c2)
    expected = (i1 + i2 - 1, j1 + j2 - 1, Fraction(c1 * c2 * (i1 * j2 - i2 * j1)))
    return u, v, expected
