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
Nilpotency of Jacobian matrices, decided three independent ways: by the `n`-th matrix power, by the coefficients of
`det(I + T J)` and, for structured maps, by an explicit system of polynomial equations in the components.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import abc
import logging
import numbers
import sys

from njt.exceptions import InconsistencyError
from njt.jacobian.polymap import PolyMatrix
from njt.jacobian.shape import validate_structured_shape
from njt.polyring import Polynomial

logger = logging.getLogger(__name__)


def jacobian_matrix(hmap):
    """
    :param hmap: A polynomial map.
    :type hmap: `PolynomialMap`
    :return: Its Jacobian matrix.
    :rtype: `PolyMatrix`
    """
    return hmap.jacobian()


def is_nilpotent_power(jac):
    """
    `True` iff `J^n = 0`, where `n` is the size of `J`.

    :type jac: `PolyMatrix`
    :rtype: `bool`
    """
    return jac.power(jac.size).is_zero()


def nilpotency_index(jac):
    """
    Least `k >= 1` with `J^k = 0`, or `None` when `J^n != 0`.
    """
    current = PolyMatrix.identity(jac.size, jac.ambient_n)
    for k in range(1, jac.size + 1):
        current = current * jac
        if current.is_zero():
            return k
    return None


def characteristic_determinant(jac):
    """
    The polynomial `det(I + T J)` in `n + 1` variables, `T` being the last one.

    :type jac: `PolyMatrix`
    :rtype: `Polynomial`
    """
    m = jac.ambient_n + 1
    t = Polynomial.variable(m, m)
    shifted = PolyMatrix.identity(jac.size, m) + jac.with_ambient(m).scale(t)
    return shifted.determinant()


def char_coefficients(jac):
    """
    Coefficients of `T^1, ..., T^n` in `det(I + T J)`. `J` is nilpotent iff they all vanish.

    :type jac: `PolyMatrix`
    :return: List of `n` polynomials in the ring of the entries of `J`.
    :rtype: `list`
    """
    n = jac.ambient_n
    det = characteristic_determinant(jac)
    return [det.coeff_in_var(n + 1, k).with_ambient(n) for k in range(1, jac.size + 1)]


def keller_determinant(hmap):
    """
    `det J(X + H)`; equal to 1 whenever `JH` is nilpotent.
    """
    jac = hmap.jacobian()
    return (PolyMatrix.identity(jac.size, jac.ambient_n) + jac).determinant()


def structured_char_recursion(hmap):
    """
    `det(I + T JH)` for a structured map through the closed expansion

    `d_n = a1 b2 - a2 b1 + sum_{k=2}^{n-1} (-c2)...(-ck) (a1 b_{k+1} - b1 a_{k+1})`

    with `a1 = 1 + T u_x`, `ai = T ui_x`, `b1 = T u_y`, `b2 = 1 + T u2_y`, `bi = T ui_y` and `ci = T ui_{x_{i+1}}`.

    :param hmap: A map with structured shape.
    :type hmap: `PolynomialMap`
    :return: The determinant as a polynomial in `n + 1` variables, `T` being the last one.
    :rtype: `Polynomial`
    :raises ShapeError: if the map is not structured.
    """
    validate_structured_shape(hmap)
    n = hmap.n
    m = n + 1
    t = Polynomial.variable(m, m)
    comps = [h.with_ambient(m) for h in hmap]

    a = [None] + [t * comps[i].derive(1) for i in range(n)]
    b = [None] + [t * comps[i].derive(2) for i in range(n)]
    a[1] = a[1] + 1
    b[2] = b[2] + 1

    det = a[1] * b[2] - a[2] * b[1]
    prefix = Polynomial.one(m)
    for k in range(2, n):
        c_k = t * comps[k - 1].derive(k + 1)
        prefix = -(prefix * c_k)
        if prefix.is_zero():
            break
        det = det + prefix * (a[1] * b[k + 1] - b[1] * a[k + 1])
    return det


def nilpotency_equations(hmap):
    """
    Residuals of the polynomial system characterising nilpotency of `JH` for a structured map
    `H = (u, u2, ..., un)`:

    - `u_x + u2_y`,
    - `u_x ui_y - u_y ui_x - ui_{x_{i+1}} u_{i+1,y}` multiplied by `u2_{x3} ... u_{i-1,x_i}` for `i = 2..n`, with
      `u_{n+1} = 0`.

    :param hmap: A map with structured shape.
    :type hmap: `PolynomialMap`
    :return: The `n` residuals; `JH` is nilpotent iff all are zero.
    :rtype: `list`
    :raises ShapeError: if the map is not structured.
    """
    validate_structured_shape(hmap)
    n = hmap.n
    u = hmap.component(1)
    u_x, u_y = u.derive(1), u.derive(2)
    zero = Polynomial.zero(n)

    def _chain(i):
        # d u_i / d x_{i+1}; the last component has no successor
        return hmap.component(i).derive(i + 1) if i < n else zero

    residuals = [u_x + hmap.component(2).derive(2)]
    prefix = Polynomial.one(n)
    for i in range(2, n + 1):
        u_i = hmap.component(i)
        successor_y = hmap.component(i + 1).derive(2) if i < n else zero
        inner = u_x * u_i.derive(2) - u_y * u_i.derive(1) - _chain(i) * successor_y
        residuals.append(prefix * inner)
        prefix = prefix * _chain(i)
    return residuals


# Ensure compatibility with Python 2 and 3 when using ABCMeta
if sys.version_info >= (3, 4):
    ABC = abc.ABC
else:
    ABC = abc.ABCMeta(str('ABC'), (), {})


class NilpotencyCheck(ABC):
    """
    Abstract base class of the nilpotency tests. A test reduces a map to residual polynomials that all vanish exactly
    when its Jacobian matrix is nilpotent.
    """
    check_params = []
    name = None

    def __init__(self, **kwargs):
        self.set_params(**kwargs)

    @abc.abstractmethod
    def residuals(self, hmap):
        """
        :param hmap: The map `H`.
        :type hmap: `PolynomialMap`
        :return: Residual polynomials.
        :rtype: `list`
        """
        raise NotImplementedError

    def is_nilpotent(self, hmap):
        verdict = all(residual.is_zero() for residual in self.residuals(hmap))
        logger.debug('Method %s: nilpotent=%s', self.name, verdict)
        return verdict

    def set_params(self, **kwargs):
        """
        Take in a dictionary of parameters and apply checks before saving them as attributes.

        :return: `True` when parsing was successful
        """
        for key, value in kwargs.items():
            if key not in self.check_params:
                raise ValueError('Unknown parameter %r for method %s.' % (key, self.name))
            setattr(self, key, value)
        return True


class MatrixPowerCheck(NilpotencyCheck):
    """
    Residuals are the entries of `(JH)^k`, `k` defaulting to `n`.
    """
    check_params = ['exponent']
    name = 'power'

    def __init__(self, exponent=None):
        super(MatrixPowerCheck, self).__init__(exponent=exponent)

    def set_params(self, **kwargs):
        super(MatrixPowerCheck, self).set_params(**kwargs)
        if self.exponent is not None and (not isinstance(self.exponent, numbers.Integral) or self.exponent < 1):
            raise ValueError('The exponent must be a positive integer.')
        return True

    def residuals(self, hmap):
        jac = hmap.jacobian()
        power = jac.power(self.exponent or jac.size)
        return [entry for row in power.rows for entry in row]


class CharacteristicCheck(NilpotencyCheck):
    """
    Residuals are the coefficients of `T^1..T^n` in `det(I + T JH)`.
    """
    name = 'char'

    def residuals(self, hmap):
        return char_coefficients(hmap.jacobian())


class EquationCheck(NilpotencyCheck):
    """
    Residuals of the equation system of structured maps, see `nilpotency_equations`.
    """
    name = 'equations'

    def residuals(self, hmap):
        return nilpotency_equations(hmap)


supported_methods = {
    'power': MatrixPowerCheck,
    'char': CharacteristicCheck,
    'equations': EquationCheck
}


def get_checker(method, params=None):
    """
    Instantiate the nilpotency test registered under `method`.

    :param method: One of `power`, `char` or `equations`.
    :type method: `str`
    :param params: Optional parameters passed to `set_params`.
    :type params: `dict`
    :rtype: `NilpotencyCheck`
    """
    try:
        checker = supported_methods[method]()
    except KeyError:
        raise NotImplementedError('{} nilpotency method not supported.'.format(method))

    if params:
        checker.set_params(**params)

    return checker


def check_nilpotent(hmap, methods=('power', 'char', 'equations')):
    """
    Run several tests on the same map and require them to agree.

    :param hmap: The map `H`.
    :type hmap: `PolynomialMap`
    :param methods: Names of the tests to run.
    :type methods: `tuple`
    :return: Verdict per method.
    :rtype: `dict`
    :raises InconsistencyError: if two tests disagree.
    """
    verdicts = {method: get_checker(method).is_nilpotent(hmap) for method in methods}
    if len(set(verdicts.values())) > 1:
        raise InconsistencyError('Nilpotency tests disagree: %s' % verdicts)
    return verdicts
