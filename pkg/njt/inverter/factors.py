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
Atomic invertible polynomial maps and ordered sequences of them.

An elementary factor changes one coordinate, `x_i -> x_i + a` with `a` free of `x_i`. Affine factors are translations
`X -> X + c` and invertible linear maps `X -> M X`. A `FactorSequence` `[f1, ..., fk]` stands for `f1 o ... o fk`.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import abc
import logging
import sys

from njt.exceptions import DimensionError, ParseError, SingularMatrixError
from njt.jacobian.polymap import PolynomialMap
from njt.polyring import Polynomial, Substitution, parse_polynomial
from njt.utils import determinant, inverse, rational_matrix, rational_str, to_rational

logger = logging.getLogger(__name__)

# Ensure compatibility with Python 2 and 3 when using ABCMeta
if sys.version_info >= (3, 4):
    ABC = abc.ABC
else:
    ABC = abc.ABCMeta(str('ABC'), (), {})


class Factor(ABC):
    """
    Abstract base class of the atomic invertible maps.
    """
    kind = None

    def __init__(self, n):
        self.n = n

    @abc.abstractmethod
    def as_map(self):
        """
        :return: The factor as a polynomial map.
        :rtype: `PolynomialMap`
        """
        raise NotImplementedError

    @abc.abstractmethod
    def inverse(self):
        """
        :return: The inverse factor.
        :rtype: `Factor`
        """
        raise NotImplementedError

    @abc.abstractmethod
    def to_json(self):
        raise NotImplementedError

    def _check(self, gmap):
        if gmap.n != self.n:
            raise DimensionError('Factor of dimension %d applied to a map of dimension %d.' % (self.n, gmap.n))

    def apply_left(self, gmap):
        """
        :return: `self o gmap`.
        :rtype: `PolynomialMap`
        """
        self._check(gmap)
        return self.as_map().compose(gmap)

    def apply_right(self, gmap):
        """
        :return: `gmap o self`.
        :rtype: `PolynomialMap`
        """
        self._check(gmap)
        return gmap.compose(self.as_map())

    def __eq__(self, other):
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(repr(self.to_json()))

    def __repr__(self):
        return '%s(%r)' % (type(self).__name__, self.to_json())


class ElementaryFactor(Factor):
    """
    `(x1, ..., x_{i-1}, x_i + a, x_{i+1}, ..., x_n)` with `a` not containing `x_i`.
    """
    kind = 'elementary'

    def __init__(self, index, shift):
        """
        :param index: Target coordinate `i` (1-based).
        :type index: `int`
        :param shift: The polynomial `a`.
        :type shift: `Polynomial`
        :raises ValueError: if `a` contains `x_i`.
        """
        super(ElementaryFactor, self).__init__(shift.n)
        if not 1 <= index <= shift.n:
            raise DimensionError('Elementary factor index %d out of range 1..%d.' % (index, shift.n))
        if shift.depends_on(index):
            raise ValueError('The shift of an elementary factor on x%d must not contain x%d: %s.'
                             % (index, index, shift))
        self.index = index
        self.shift = shift

    def as_map(self):
        identity = PolynomialMap.identity(self.n)
        return identity.replace(self.index, identity.component(self.index) + self.shift)

    def inverse(self):
        return ElementaryFactor(self.index, -self.shift)

    def apply_left(self, gmap):
        self._check(gmap)
        images = {i + 1: g for i, g in enumerate(gmap)}
        return gmap.replace(self.index, gmap.component(self.index) + self.shift.substitute(images))

    def apply_right(self, gmap):
        self._check(gmap)
        substitution = Substitution(self.n, {self.index: Polynomial.variable(self.n, self.index) + self.shift})
        return PolynomialMap([substitution.apply(g) for g in gmap])

    def to_json(self):
        return {'kind': self.kind, 'i': self.index, 'a': str(self.shift)}


class AffineFactor(Factor):
    """
    Translation `X + c` or invertible linear map `M X` with rational data.
    """
    def __init__(self, kind, data):
        """
        :param kind: `translation` or `linear`.
        :type kind: `str`
        :param data: Translation vector, or square matrix given as nested lists.
        :raises SingularMatrixError: if a linear factor is not invertible.
        """
        if kind == 'translation':
            self.vector = [to_rational(c) for c in data]
            n = len(self.vector)
        elif kind == 'linear':
            self.matrix = rational_matrix(data)
            n = self.matrix.shape[0]
            if self.matrix.shape != (n, n):
                raise DimensionError('A linear factor needs a square matrix.')
            if determinant(self.matrix) == 0:
                raise SingularMatrixError('Linear factor with zero determinant.')
        else:
            raise ValueError('Unknown affine factor kind %r.' % (kind,))
        super(AffineFactor, self).__init__(n)
        self.kind = kind

    @classmethod
    def translation(cls, vector):
        return cls('translation', vector)

    @classmethod
    def linear(cls, matrix):
        return cls('linear', matrix)

    def as_map(self):
        n = self.n
        variables = [Polynomial.variable(n, j) for j in range(1, n + 1)]
        if self.kind == 'translation':
            return PolynomialMap([x + c for x, c in zip(variables, self.vector)])
        components = []
        for i in range(n):
            total = Polynomial.zero(n)
            for j in range(n):
                total = total + variables[j] * self.matrix[i, j]
            components.append(total)
        return PolynomialMap(components)

    def inverse(self):
        if self.kind == 'translation':
            return AffineFactor.translation([-c for c in self.vector])
        return AffineFactor.linear(inverse(self.matrix).tolist())

    def to_json(self):
        if self.kind == 'translation':
            return {'kind': self.kind, 'c': [rational_str(c) for c in self.vector]}
        return {'kind': self.kind, 'm': [[rational_str(v) for v in row] for row in self.matrix.tolist()]}


def factor_from_json(content, n):
    """
    Read one factor from its JSON form.

    :raises ParseError: for malformed content.
    """
    try:
        kind = content['kind']
        if kind == 'elementary':
            return ElementaryFactor(int(content['i']), parse_polynomial(content['a'], n))
        if kind in ('translation', 'linear'):
            factor = AffineFactor(kind, content['c'] if kind == 'translation' else content['m'])
            if factor.n != n:
                raise DimensionError('Factor of dimension %d in a sequence of dimension %d.' % (factor.n, n))
            return factor
    except (KeyError, TypeError) as e:
        raise ParseError('Malformed factor %r (%s).' % (content, e))
    raise ParseError('Unknown factor kind %r.' % (kind,))


class FactorSequence(object):
    """
    Ordered list of factors `[f1, ..., fk]` standing for the composition `f1 o ... o fk`.
    """
    def __init__(self, n, factors=None):
        self.n = n
        self.factors = []
        for factor in factors or []:
            self.append(factor)

    def append(self, factor):
        if factor.n != self.n:
            raise DimensionError('Factor of dimension %d in a sequence of dimension %d.' % (factor.n, self.n))
        self.factors.append(factor)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, index):
        return self.factors[index]

    def __eq__(self, other):
        return isinstance(other, FactorSequence) and self.n == other.n and self.factors == other.factors

    def __ne__(self, other):
        return not self.__eq__(other)

    @property
    def elementary_only(self):
        return all(isinstance(factor, ElementaryFactor) for factor in self.factors)

    def compose(self):
        return compose_factors(self)

    def inverse(self):
        return invert_factor_sequence(self)

    def to_json(self):
        return {'n': self.n, 'factors': [factor.to_json() for factor in self.factors],
                'elementary_only': self.elementary_only}

    @classmethod
    def from_json(cls, content):
        try:
            n = int(content['n'])
            return cls(n, [factor_from_json(entry, n) for entry in content['factors']])
        except (KeyError, TypeError) as e:
            raise ParseError('Malformed factor file (%s).' % e)

    def __repr__(self):
        return 'FactorSequence(n=%d, %r)' % (self.n, self.factors)


def compose_factors(sequence):
    """
    Exact composition of a factor sequence; the identity for an empty one.

    :type sequence: `FactorSequence`
    :rtype: `PolynomialMap`
    """
    result = PolynomialMap.identity(sequence.n)
    for factor in sequence:
        result = factor.apply_right(result)
    return result


def invert_factor_sequence(sequence):
    """
    Inverse sequence: reversed order, every factor inverted.

    :type sequence: `FactorSequence`
    :rtype: `FactorSequence`
    :raises SingularMatrixError: if a linear factor is singular.
    """
    return FactorSequence(sequence.n, [factor.inverse() for factor in reversed(sequence.factors)])
