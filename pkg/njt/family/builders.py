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
Constructors of structured maps from validated family parameters.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from njt.family.params import validate_params
from njt.jacobian.polymap import PolynomialMap
from njt.polyring import Polynomial

logger = logging.getLogger(__name__)


class _PowerSeries(object):
    """
    Evaluates `sum_j c_j(x) u^j` for univariate coefficients `c_j`, caching the powers of `u`.
    """
    def __init__(self, u):
        self.u = u
        self.powers = [Polynomial.one(u.n), u]

    def power(self, j):
        while len(self.powers) <= j:
            self.powers.append(self.powers[-1] * self.u)
        return self.powers[j]

    def __call__(self, coefficients, start=1):
        total = Polynomial.zero(self.u.n)
        for j, c in enumerate(coefficients, start=start):
            if not c.is_zero():
                total = total + c.with_ambient(self.u.n) * self.power(j)
        return total


def first_component(params):
    """
    `u = p(y + a(x))` of a main-case member.
    """
    n = params.n
    z = Polynomial.variable(n, 2) + params.a.with_ambient(n)
    return params.p.substitute({1: z})


def build_main(params, derived=None):
    """
    Structured map of a main-case family member:

    - `u = p(y + a(x))`,
    - `u_i = sum_j c_{i,j}(x) u^j + P_i(x_{i+1} + b_i(x) / (d_i p_{d_i}))` for `2 <= i <= r-1`,
    - `u_r = sum_j c_{r,j}(x) u^j + b_r`,
    - free components beyond `r` (zero when not given).

    :param params: Main-case parameters.
    :type params: `FamilyParams`
    :param derived: Constants from `validate_params`, computed when omitted.
    :type derived: `DerivedConstants`
    :rtype: `PolynomialMap`
    :raises ParamsError: if the parameters are invalid.
    """
    if derived is None:
        derived = validate_params(params)
    n = params.n
    u = first_component(params)
    series = _PowerSeries(u)
    components = [u]
    for level in params.levels:
        i = level.index
        inner = Polynomial.variable(n, i + 1) + level.shift.with_ambient(n) / derived.L[i]
        components.append(series(derived.c[i]) + level.nice.as_polynomial().substitute({1: inner}))
    components.append(series(derived.c[params.r]) + params.b_r)
    for i in range(params.r + 1, n + 1):
        components.append(params.free.get(i, Polynomial.zero(n)))
    return PolynomialMap(components)


def build_cor1(params, derived=None):
    """
    `u = l2 f(l1 x + l2 y) + c1`, `u2 = -l1 f(l1 x + l2 y) + c2`, then the free components `u3, ..., un`.
    """
    if derived is None:
        validate_params(params)
    n = params.n
    w = Polynomial.variable(n, 1) * params.lambda1 + Polynomial.variable(n, 2) * params.lambda2
    fw = params.f.substitute({1: w})
    components = [fw * params.lambda2 + params.c1, fw * (-params.lambda1) + params.c2]
    for i in range(3, n + 1):
        components.append(params.free.get(i, Polynomial.zero(n)))
    return PolynomialMap(components)


def build_cor2(params, derived=None):
    """
    Constant `u`, the chain `u_2(x, x3), ..., u_r(x)` and the free components beyond `r`.
    """
    if derived is None:
        validate_params(params)
    n = params.n
    components = [Polynomial.constant(n, params.u)]
    for i in range(2, n + 1):
        source = params.chain if i <= params.r else params.free
        components.append(source.get(i, Polynomial.zero(n)))
    return PolynomialMap(components)


builders = {
    'main': build_main,
    'cor1': build_cor1,
    'cor2': build_cor2
}


def build(params, derived=None):
    """
    Build the map of any family case.

    :type params: `FamilyParams`
    :rtype: `PolynomialMap`
    """
    return builders[params.case](params, derived)
