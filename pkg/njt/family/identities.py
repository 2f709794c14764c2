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
Exact identities satisfied by main-case family members: the closed form of the components of levels `s..r`, the
vanishing derivatives of the shifts `b_i`, the gamma relations and the bracket terms `[u_m]` that appear while a map
is reduced to the identity.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from njt.family.builders import build_main, first_component
from njt.family.params import validate_params
from njt.polyring import Polynomial
from njt.utils import inverse_factorial

logger = logging.getLogger(__name__)


def gamma_identities_hold(derived):
    """
    Check `gamma_{1,t} = 1 / L_{s+t-2}` and `gamma_{k,t-1} = L_{s+t-2} gamma_{k+1,t}` for all admissible `k, t`.

    :type derived: `DerivedConstants`
    :rtype: `bool`
    """
    s, r = derived.s, derived.r
    for t in range(1, r - s + 2):
        if derived.gamma(1, t) != 1 / derived.L[s + t - 2]:
            return False
        for k in range(1, t):
            if derived.gamma(k, t - 1) != derived.L[s + t - 2] * derived.gamma(k + 1, t):
                return False
    return True


def closed_form_component(derived, u, t):
    """
    Closed form of component `m = s - 1 + t` (`1 <= t <= r - s + 1`):

    `sum_{k=1}^{t} (-1)^k / k! gamma_{k,t} b^{(k)}_{m-k}(x) u^k + l_m x_{m+1} + b_m(x)`.

    :param derived: Derived constants of the member.
    :type derived: `DerivedConstants`
    :param u: The first component `u` of the map.
    :type u: `Polynomial`
    :param t: Offset from `s - 1`.
    :type t: `int`
    :rtype: `Polynomial`
    """
    n = u.n
    m = derived.s - 1 + t
    total = derived.b[m].with_ambient(n)
    if derived.l[m] != 0:
        total = total + Polynomial.variable(n, m + 1) * derived.l[m]
    for k in range(1, t + 1):
        coefficient = (-1) ** k * inverse_factorial(k) * derived.gamma(k, t)
        total = total + derived.b[m - k].derive(1, k).with_ambient(n) * u ** k * coefficient
    return total


def closed_form_holds(params, derived=None, hmap=None):
    """
    Compare every component of levels `s..r` with `closed_form_component`.
    """
    if derived is None:
        derived = validate_params(params)
    if hmap is None:
        hmap = build_main(params, derived)
    u = hmap.component(1)
    for t in range(1, derived.r - derived.s + 2):
        if hmap.component(derived.s - 1 + t) != closed_form_component(derived, u, t):
            logger.info('Closed form fails at component %d.', derived.s - 1 + t)
            return False
    return True


def derivative_ladder(derived):
    """
    The derivatives `b_{s-1}^{(r-s+2)}, ..., b_{r-1}^{(2)}, b_r^{(1)}`, which all vanish for a valid member.

    :return: List of `(level, order, derivative)` triples.
    :rtype: `list`
    """
    r = derived.r
    return [(m, r - m + 1, derived.b[m].derive(1, r - m + 1)) for m in range(derived.s - 1, r + 1)]


def ladder_holds(derived):
    return all(poly.is_zero() for _, _, poly in derivative_ladder(derived))


def bracket_term(derived, u, m):
    """
    Bracket term `[u_m]` for a level `s <= m <= r`, with `K = m - s + 1` and `t = r - m`:

    `[u_m] = sum_{k=1}^{K} (-1)^k gamma_{k,K} sum_{j=k}^{k+t} b^{(j)}_{m-k}(x) u^j / j!`.

    It lies in `Q[x, y]`.

    :type derived: `DerivedConstants`
    :param u: The first component of the map.
    :type u: `Polynomial`
    :param m: Level.
    :type m: `int`
    :rtype: `Polynomial`
    """
    n = u.n
    big_k = m - derived.s + 1
    t = derived.r - m
    total = Polynomial.zero(n)
    for k in range(1, big_k + 1):
        weight = (-1) ** k * derived.gamma(k, big_k)
        for j in range(k, k + t + 1):
            derivative = derived.b[m - k].derive(1, j)
            if not derivative.is_zero():
                total = total + derivative.with_ambient(n) * u ** j * (weight * inverse_factorial(j))
    return total


def taylor_expansion(b, u, order):
    """
    `sum_{k=0}^{order} b^{(k)}(x) u^k / k!` for a univariate `b` in `x`, in the ring of `u`.
    """
    n = u.n
    total = Polynomial.zero(n)
    for k in range(order + 1):
        total = total + b.derive(1, k).with_ambient(n) * u ** k * inverse_factorial(k)
    return total


def taylor_identity_holds(b, u, order):
    """
    Check `b(x + u) = sum_{k=0}^{order} b^{(k)}(x) u^k / k!` exactly.
    """
    n = u.n
    shifted = b.substitute({1: Polynomial.variable(n, 1) + u})
    return shifted == taylor_expansion(b, u, order)


def family_identities_hold(params):
    """
    All identities of this module for one main-case member.

    :type params: `FamilyParams`
    :rtype: `bool`
    """
    derived = validate_params(params)
    u = first_component(params)
    return (gamma_identities_hold(derived) and ladder_holds(derived) and closed_form_holds(params, derived)
            and taylor_identity_holds(derived.b[derived.s - 1], u, derived.r - derived.s + 1))
