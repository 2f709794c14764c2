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
Recovery of family parameters from a concrete structured map. Every recovery ends with an exact rebuild of the map;
a map that cannot be reproduced is reported as lying outside the classified family.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from njt.exceptions import ParamsError, RecoveryError
from njt.family.builders import build
from njt.family.params import FamilyParams, Level, NicePoly
from njt.jacobian.shape import validate_structured_shape
from njt.polyring import Polynomial

logger = logging.getLogger(__name__)


def expand_in_powers(poly, p, a, component=None):
    """
    Write a polynomial of `Q[x, y]` as `sum_j e_j(x) u^j` with `u = p(y + a(x))`.

    :param poly: Polynomial in `x` and `y` only.
    :type poly: `Polynomial`
    :param p: Univariate polynomial of degree at least 1.
    :type p: `Polynomial`
    :param a: Univariate polynomial in `x`.
    :type a: `Polynomial`
    :param component: Component index reported in errors.
    :type component: `int`
    :return: Mapping `j -> e_j` of univariate polynomials in `x`, zero coefficients omitted.
    :rtype: `dict`
    :raises RecoveryError: if no such expansion exists.
    """
    n = poly.n
    if any(v > 2 for v in poly.variables()):
        raise RecoveryError('Component %s is not a polynomial in x and u.' % component, component=component)
    degree_p = int(p.degree())
    top = p.coefficient((degree_p,))
    y = Polynomial.variable(n, 2)
    p_of_y = p.substitute({1: y})
    shifted = poly.substitute({2: y - a.with_ambient(n)})
    expansion = {}
    powers = {0: Polynomial.one(n)}
    while not shifted.is_zero():
        degree = int(shifted.degree_in(2))
        j, rest = divmod(degree, degree_p)
        if rest:
            raise RecoveryError('Component %s is not a polynomial in u over k[x] (y-degree %d).' % (component, degree),
                                component=component)
        if j not in powers:
            powers[j] = p_of_y.power(j)
        coefficient = shifted.coeff_in_var(2, degree) / top ** j
        expansion[j] = coefficient.with_ambient(1)
        shifted = shifted - coefficient * powers[j]
    return expansion


def _constant(poly, what, component):
    if not poly.is_constant():
        raise RecoveryError('%s of component %d is not constant: %s.' % (what, component, poly), component=component)
    return poly.constant_term()


def _free_components(hmap, first, stop):
    # zero components are left implicit
    return {i: hmap.component(i) for i in range(first, stop) if not hmap.component(i).is_zero()}


def _rebuild(params, hmap):
    try:
        rebuilt = build(params)
    except ParamsError as e:
        raise RecoveryError('Recovered parameters are invalid: %s' % e)
    for i, (expected, actual) in enumerate(zip(hmap, rebuilt), start=1):
        if expected != actual:
            raise RecoveryError('Rebuild mismatch at component %d: expected %s, rebuilt %s.' % (i, expected, actual),
                                component=i)
    logger.info('Recovered %s parameters and rebuilt the map exactly.', params.case)
    return params


def _recover_level(component, index, p, a):
    n = component.n
    variable = index + 1
    degree = int(component.degree_in(variable))
    leading = _constant(component.coeff_in_var(variable, degree), 'Top coefficient', index)
    if degree >= 2:
        shift = component.coeff_in_var(variable, degree - 1)
        if any(v != 1 for v in shift.variables()):
            raise RecoveryError('Shift of component %d depends on more than x: %s.' % (index, shift), component=index)
        shift = shift.with_ambient(1)
    else:
        shift = expand_in_powers(component.coeff_in_var(variable, 0), p, a, index).get(0, Polynomial.zero(1))

    beta = shift.with_ambient(n) / (degree * leading)
    reduced = component.substitute({variable: Polynomial.variable(n, variable) - beta})
    coefficients = [None] + [_constant(reduced.coeff_in_var(variable, k), 'Coefficient of x%d^%d' % (variable, k),
                                       index) for k in range(1, degree + 1)]
    expansion = expand_in_powers(reduced.coeff_in_var(variable, 0), p, a, index)
    coefficients[0] = _constant(expansion.get(0, Polynomial.zero(1)), 'Constant term', index)
    try:
        nice = NicePoly(coefficients)
    except ParamsError as e:
        raise RecoveryError('Level %d does not carry a nice polynomial: %s' % (index, e), component=index)
    return Level(index, nice, shift)


def recover_params(hmap):
    """
    Recover main-case parameters `p, a, P_i, b_i, b_r` and the free components from a structured map, normalised by
    `a(0) = 0`.

    :param hmap: Structured map with `u_y != 0` and `u2_{x3} != 0`.
    :type hmap: `PolynomialMap`
    :return: Parameters with `build_main(params) == hmap`.
    :rtype: `FamilyParams`
    :raises RecoveryError: if the map is outside the family, naming the first component that cannot be reproduced.
    """
    shape = validate_structured_shape(hmap)
    if shape.u_y_zero:
        raise RecoveryError('The first component does not depend on y.', component=1)
    if shape.u2_x3_zero:
        raise RecoveryError('The second component does not depend on x3.', component=2)
    n, r = hmap.n, shape.r
    u = hmap.component(1)

    degree_u = int(u.degree_in(2))
    top = _constant(u.coeff_in_var(2, degree_u), 'Top y-coefficient', 1)
    q = u.coeff_in_var(2, degree_u - 1)
    if any(v != 1 for v in q.variables()):
        raise RecoveryError('Component 1 is not of the form p(y + a(x)).', component=1)
    a = ((q - q.constant_term()) / (degree_u * top)).with_ambient(1)
    p = u.substitute({1: Polynomial.zero(1), 2: Polynomial.variable(1, 1)})

    levels = [_recover_level(hmap.component(i), i, p, a) for i in range(2, r)]
    terminal = expand_in_powers(hmap.component(r), p, a, r)
    b_r = _constant(terminal.get(0, Polynomial.zero(1)), 'Constant term', r)
    free = _free_components(hmap, r + 1, n + 1)
    return _rebuild(FamilyParams.main(n, p, a, r, levels, b_r, free), hmap)


def recover_cor1(hmap):
    """
    Recover `l1, l2, c1, c2, f` of a map whose second component is free of `x3`, normalised by `f(0) = 0` and
    `l2 in {0, 1}`.

    :raises RecoveryError: if the map is not of that form.
    """
    shape = validate_structured_shape(hmap)
    if not shape.u2_x3_zero:
        raise RecoveryError('The second component depends on x3.', component=2)
    n = hmap.n
    u, u2 = hmap.component(1), hmap.component(2)
    c1, c2 = u.constant_term(), u2.constant_term()
    big_u, big_v = u - c1, u2 - c2
    t = Polynomial.variable(1, 1)
    zero = Polynomial.zero(1)
    if not big_u.is_zero():
        lambda2 = 1
        lambda1 = 0
        if not big_v.is_zero():
            lambda1 = -big_v.terms()[0][1] / big_u.terms()[0][1]
        f = big_u.substitute({1: zero, 2: t})
    elif not big_v.is_zero():
        lambda1, lambda2 = 1, 0
        f = -big_v.substitute({1: t, 2: zero})
    else:
        lambda1, lambda2 = 0, 0
        f = zero
    free = _free_components(hmap, 3, n + 1)
    return _rebuild(FamilyParams.cor1(n, lambda1, lambda2, c1, c2, f, free), hmap)


def recover_cor2(hmap):
    """
    Recover the data of a map with constant first component.

    :raises RecoveryError: if the map is not of that form.
    """
    shape = validate_structured_shape(hmap)
    u = hmap.component(1)
    if not u.is_constant():
        raise RecoveryError('The first component is not constant: %s.' % u, component=1)
    n, r = hmap.n, shape.r
    chain = {i: hmap.component(i) for i in range(2, r + 1)}
    free = _free_components(hmap, r + 1, n + 1)
    return _rebuild(FamilyParams.cor2(n, u.constant_term(), r, chain, free), hmap)


def recover_family(hmap):
    """
    Classify a structured map into one of the family cases and recover its parameters.

    :param hmap: Structured map.
    :type hmap: `PolynomialMap`
    :rtype: `FamilyParams`
    :raises RecoveryError: if the map is outside the classified family.
    """
    case = validate_structured_shape(hmap).case
    if case == 'cor1':
        return recover_cor1(hmap)
    if case == 'cor2':
        return recover_cor2(hmap)
    return recover_params(hmap)
