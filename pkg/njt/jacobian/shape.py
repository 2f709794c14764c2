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
Validation of the structured shape `H = (u(x, y), u2(x, y, x3), ..., u_{n-1}(x, y, x_n), u_n(x, y))`.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from njt.exceptions import ShapeError

logger = logging.getLogger(__name__)


class StructuredShape(object):
    """
    Shape metadata of a structured map.

    `r` is the first index `i >= 3` whose component is free of `x_{i+1}` (`r = n` when there is none before).
    """
    def __init__(self, n, r, u_y_zero, u2_x3_zero):
        self.n = n
        self.r = r
        self.u_y_zero = u_y_zero
        self.u2_x3_zero = u2_x3_zero

    @property
    def case(self):
        """
        Family case suggested by the flags: `cor1` (u2 free of x3), `cor2` (u free of y) or `main`.
        """
        if self.u2_x3_zero:
            return 'cor1'
        if self.u_y_zero:
            return 'cor2'
        return 'main'

    def __repr__(self):
        return 'StructuredShape(n=%d, r=%d, u_y_zero=%s, u2_x3_zero=%s)' % (self.n, self.r, self.u_y_zero,
                                                                           self.u2_x3_zero)


def allowed_variables(n, component):
    """
    Variables (1-based) component `component` of a structured map in dimension `n` may depend on.
    """
    if component == 1 or component == n:
        return {1, 2}
    return {1, 2, component + 1}


def validate_structured_shape(hmap):
    """
    Check that a map has the structured shape and compute its metadata.

    :param hmap: The map `H`.
    :type hmap: `PolynomialMap`
    :return: The shape metadata.
    :rtype: `StructuredShape`
    :raises ShapeError: if `n < 3` or a component depends on a forbidden variable; the error names both.
    """
    n = hmap.n
    if n < 3:
        raise ShapeError('Structured maps need n >= 3, got n = %d.' % n)
    for i, component in enumerate(hmap, start=1):
        allowed = allowed_variables(n, i)
        for variable in component.variables():
            if variable not in allowed:
                raise ShapeError('Component %d depends on the forbidden variable x%d.' % (i, variable),
                                 component=i, variable=variable)

    r = n
    for i in range(3, n):
        if not hmap.component(i).depends_on(i + 1):
            r = i
            break
    u = hmap.component(1)
    shape = StructuredShape(n, r, u_y_zero=not u.depends_on(2), u2_x3_zero=not hmap.component(2).depends_on(3))
    logger.debug('Validated %r', shape)
    return shape
