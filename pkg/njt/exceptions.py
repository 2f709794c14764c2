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
Exception hierarchy of the toolbox. Every error raised on bad input derives from `ValueError`, so callers that only care
about invalid data can keep catching that.
"""
from __future__ import absolute_import, division, print_function, unicode_literals


class NJTError(ValueError):
    """
    Base class of all toolbox errors.
    """
    pass


class DimensionError(NJTError):
    """
    Raised when polynomials, maps or matrices with different ambient dimensions are combined, or when a variable index
    is out of range.
    """
    pass


class ParseError(NJTError):
    """
    Raised by the expression parser. `position` is the 0-based character offset of the offending token.
    """
    def __init__(self, message, position=None):
        if position is not None:
            message = '%s (at position %d)' % (message, position)
        super(ParseError, self).__init__(message)
        self.position = position


class ShapeError(NJTError):
    """
    Raised when a map does not have the structured shape. `component` and `variable` are 1-based indices.
    """
    def __init__(self, message, component=None, variable=None):
        super(ShapeError, self).__init__(message)
        self.component = component
        self.variable = variable


class ParamsError(NJTError):
    """
    Raised when family parameters violate a condition. `condition` is one of `nice`, `(a)`, `(b)`, `(c)`, `(d)`,
    `range`, `degree` or `schema`.
    """
    def __init__(self, message, condition=None):
        if condition is not None:
            message = 'condition %s violated: %s' % (condition, message)
        super(ParamsError, self).__init__(message)
        self.condition = condition


class RecoveryError(NJTError):
    """
    Raised when a map cannot be matched against the classified family. `component` is the first component (1-based)
    that could not be reproduced, when known.
    """
    def __init__(self, message, component=None):
        super(RecoveryError, self).__init__(message)
        self.component = component


class NotNilpotentError(NJTError):
    pass


class SingularMatrixError(NJTError):
    pass


class InconsistencyError(NJTError):
    """
    Raised when independent nilpotency tests disagree on the same map, or when a computed result fails its own exact
    verification.
    """
    pass
