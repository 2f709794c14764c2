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
Reference maps and parameters: the three-dimensional map `H = (y - x^2, z + 2x(y - x^2), -(y - x^2)^2)` whose
Jacobian matrix is nilpotent while its components are linearly independent, together with worked members of every
family case.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from njt.family.params import FamilyParams, Level, NicePoly
from njt.jacobian.polymap import PolynomialMap
from njt.polyring import Polynomial, parse_polynomial, parse_univariate

EXAMPLE_COMPONENTS = ['y - x^2', 'z + 2*x*(y - x^2)', '-(y - x^2)^2']


def example_map():
    """
    The three-dimensional example `H`.

    :rtype: `PolynomialMap`
    """
    return PolynomialMap.from_strings(EXAMPLE_COMPONENTS)


def example_params():
    """
    Parameters reproducing `example_map`: `p = T`, `a = -x^2`, `P2 = T`, `b2 = 0`, `b3 = 0`.

    :rtype: `FamilyParams`
    """
    return FamilyParams.main(3, parse_univariate('T'), parse_polynomial('-x^2', 1), 3,
                             [Level(2, NicePoly([0, 1]), Polynomial.zero(1))], 0)


def five_dimensional_params():
    """
    A member with non-linear levels 2 and 4: `p = T^2 + T`, `a = -3x`, `P2 = T^3`, `P3 = T`, `P4 = T^2`.
    """
    levels = [Level(2, NicePoly([0, 0, 0, 1]), parse_polynomial('x', 1)),
              Level(3, NicePoly([0, 1]), parse_polynomial('2*x', 1)),
              Level(4, NicePoly([0, 0, 1]), parse_polynomial('-x', 1))]
    return FamilyParams.main(5, parse_univariate('T^2 + T'), parse_polynomial('-3*x', 1), 5, levels, 1)


def shift_params(n):
    """
    `p = T`, `a = 0`, every `P_i = T` and every shift zero: `H = (y, x3, ..., x_n, 0)`.
    """
    levels = [Level(i, NicePoly([0, 1]), Polynomial.zero(1)) for i in range(2, n)]
    return FamilyParams.main(n, parse_univariate('T'), Polynomial.zero(1), n, levels, 0)


def cor1_params():
    """
    `l1 = l2 = 1`, `c1 = c2 = 0`, `f = T^2` in dimension 3: `H = ((x + y)^2, -(x + y)^2, 0)`.
    """
    return FamilyParams.cor1(3, 1, 1, 0, 0, parse_univariate('T^2'))


def cor2_params():
    """
    `u = 5`, `u2 = x + x3^2`, `u3 = x^3` in dimension 3.
    """
    return FamilyParams.cor2(3, 5, 3, {2: parse_polynomial('x + x3^2', 3), 3: parse_polynomial('x^3', 3)})


def cor2_params_with_free():
    """
    Dimension 4 with `r = 3` and the free component `u4 = x y`.
    """
    return FamilyParams.cor2(4, 5, 3, {2: parse_polynomial('x + x3^2', 4), 3: parse_polynomial('x^3', 4)},
                             {4: parse_polynomial('x*y', 4)})
