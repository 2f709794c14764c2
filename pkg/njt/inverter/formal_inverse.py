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
Inverse of a polynomial automorphism by graded power-series inversion, used as an independent check of the
factorization.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from collections import namedtuple

from njt.inverter.factors import compose_factors
from njt.jacobian.polymap import PolynomialMap
from njt.polyring import Polynomial
from njt.utils import inverse, rational_matrix

logger = logging.getLogger(__name__)

FormalInverse = namedtuple('FormalInverse', ['inverse', 'exact', 'degree_bound'])


def linear_matrix(fmap):
    """
    Matrix of the degree-one part of `fmap`, entry `(i, j)` the coefficient of `x_j` in the `i`-th component.
    """
    n = fmap.n
    unit = [[int(i == j) for i in range(n)] for j in range(n)]
    return rational_matrix([[f.coefficient(unit[j]) for j in range(n)] for f in fmap])


def _apply_matrix(matrix, pmap):
    n = pmap.n
    components = []
    for i in range(n):
        total = Polynomial.zero(n)
        for j in range(n):
            if matrix[i, j] != 0:
                total = total + pmap[j] * matrix[i, j]
        components.append(total)
    return PolynomialMap(components)


def verify_inverse(fmap, gmap, factors=None):
    """
    Check `F o G = X` and `G o F = X` exactly.

    Given a factor sequence `[f1, ..., fk]` of `F`, both compositions are evaluated one factor at a time:
    `f1 o (... o (fk o G))` and `((G o f1) o ...) o fk`. When `G` inverts `F` the intermediate maps are partial
    inverses, so no full-size composition is ever expanded.

    :param fmap: The map `F`.
    :type fmap: `PolynomialMap`
    :param gmap: The candidate inverse `G`.
    :type gmap: `PolynomialMap`
    :param factors: Optional factors of `F`.
    :type factors: `FactorSequence`
    :rtype: `bool`
    :raises ValueError: if `factors` does not compose to `F`.
    """
    if factors is None:
        return fmap.compose(gmap).is_identity() and gmap.compose(fmap).is_identity()
    if compose_factors(factors) != fmap:
        raise ValueError('The factor sequence does not compose to the map.')
    left = gmap
    for factor in reversed(factors.factors):
        left = factor.apply_left(left)
    if not left.is_identity():
        return False
    right = gmap
    for factor in factors:
        right = factor.apply_right(right)
    return right.is_identity()


def formal_inverse(fmap, degree_bound=None, factors=None):
    """
    Compute the inverse of `F` degree by degree: with `F(0) = c`, `A` the linear part and `N` the part of degree two and
    higher of `F - c`, the inverse `G` of `F - c` has `G_1 = A^{-1} X` and `G_k = -A^{-1} [N(G_1 + ... + G_{k-1})]_k`.
    The inverse of `F` is `G o (X - c)`.

    A candidate of degree `d` is tested with `verify_inverse` once its residual has vanished through degree `2d`, and
    the loop stops at the first candidate that passes. Otherwise the candidate reached at `degree_bound` is tested.

    :param fmap: Map with invertible linear part.
    :type fmap: `PolynomialMap`
    :param degree_bound: Largest degree computed, defaults to `deg(F)^(n-1)`.
    :type degree_bound: `int`
    :param factors: Optional factors of `F`, only used to evaluate the final exact check.
    :type factors: `FactorSequence`
    :return: The inverse, whether it is exact and the bound used.
    :rtype: `FormalInverse`
    :raises SingularMatrixError: if the linear part is singular.
    """
    n = fmap.n
    constants = fmap.constant_part()
    variables = [Polynomial.variable(n, i) for i in range(1, n + 1)]
    shifted = PolynomialMap([f - c for f, c in zip(fmap, constants)])
    matrix = linear_matrix(shifted)
    matrix_inv = inverse(matrix)
    if degree_bound is None:
        degree_bound = max(1, int(fmap.degree())) ** (n - 1)
    degree_bound = max(1, int(degree_bound))
    translation = PolynomialMap([x - c for x, c in zip(variables, constants)])

    def _translated(candidate):
        return candidate.compose(translation) if any(constants) else candidate

    nonlinear = shifted - shifted.homogeneous_part(1)
    result = _apply_matrix(matrix_inv, PolynomialMap(variables))
    vanishing_from = None
    checked = False
    exact = False
    for k in range(2, degree_bound + 1):
        residual = nonlinear.compose(result, max_degree=k).homogeneous_part(k)
        if not all(r.is_zero() for r in residual):
            result = result - _apply_matrix(matrix_inv, residual)
            vanishing_from = None
            checked = False
            continue
        if vanishing_from is None:
            vanishing_from = k
        if not checked and k >= 2 * (vanishing_from - 1):
            checked = True
            candidate = _translated(result)
            exact = verify_inverse(fmap, candidate, factors)
            if exact:
                logger.debug('Formal inverse closed at degree %d.', vanishing_from - 1)
                break
    if not checked:
        candidate = _translated(result)
        exact = verify_inverse(fmap, candidate, factors)
    if not exact:
        logger.warning('Formal inverse truncated at degree %d is not exact.', degree_bound)
    return FormalInverse(candidate, exact, degree_bound)
