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
Polynomial maps `F = (F1, ..., Fn)` and square matrices with polynomial entries.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from njt.exceptions import DimensionError, ParseError
from njt.polyring import Polynomial, Substitution, parse_polynomial

logger = logging.getLogger(__name__)


class PolynomialMap(object):
    """
    Ordered sequence of `n` polynomials in `n` variables. Composition follows `(F o G)(X) = F(G(X))`.
    """
    __slots__ = ('_components',)

    def __init__(self, components):
        """
        :param components: Polynomials, all with ambient dimension equal to their number.
        :type components: `list`
        """
        components = tuple(components)
        if not components:
            raise DimensionError('A polynomial map needs at least one component.')
        n = len(components)
        for i, component in enumerate(components):
            if not isinstance(component, Polynomial):
                raise TypeError('Component %d is not a Polynomial.' % (i + 1))
            if component.n != n:
                raise DimensionError('Component %d lives in %d variables, expected %d.' % (i + 1, component.n, n))
        self._components = components

    @classmethod
    def identity(cls, n):
        return cls([Polynomial.variable(n, i) for i in range(1, n + 1)])

    @classmethod
    def zero(cls, n):
        return cls([Polynomial.zero(n)] * n)

    @property
    def n(self):
        return len(self._components)

    @property
    def components(self):
        return self._components

    def __getitem__(self, index):
        # 0-based, like a tuple
        return self._components[index]

    def __iter__(self):
        return iter(self._components)

    def __len__(self):
        return len(self._components)

    def component(self, index):
        """
        Component `F_index` with a 1-based index.
        """
        if not 1 <= index <= self.n:
            raise DimensionError('Component index %d out of range 1..%d.' % (index, self.n))
        return self._components[index - 1]

    def replace(self, index, polynomial):
        """
        Copy of the map with component `index` (1-based) replaced.
        """
        components = list(self._components)
        components[index - 1] = polynomial
        return PolynomialMap(components)

    def _check(self, other):
        if not isinstance(other, PolynomialMap):
            raise TypeError('Expected a PolynomialMap.')
        if other.n != self.n:
            raise DimensionError('Map dimensions differ: %d and %d.' % (self.n, other.n))

    def __add__(self, other):
        self._check(other)
        return PolynomialMap([f + g for f, g in zip(self, other)])

    def __sub__(self, other):
        self._check(other)
        return PolynomialMap([f - g for f, g in zip(self, other)])

    def __eq__(self, other):
        if not isinstance(other, PolynomialMap):
            return NotImplemented
        return self._components == other._components

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._components)

    def compose(self, other, max_degree=None):
        """
        The map `self o other`, i.e. `other` substituted into every component of `self`.

        :param other: Inner map.
        :type other: `PolynomialMap`
        :param max_degree: Optional truncation degree.
        :type max_degree: `int`
        :rtype: `PolynomialMap`
        """
        self._check(other)
        substitution = Substitution(self.n, {i + 1: g for i, g in enumerate(other)}, max_degree)
        return PolynomialMap([substitution.apply(f) for f in self])

    def is_identity(self):
        return self == PolynomialMap.identity(self.n)

    def degree(self):
        return max(f.degree() for f in self)

    def constant_part(self):
        return [f.constant_term() for f in self]

    def truncate(self, max_degree):
        return PolynomialMap([f.truncate(max_degree) for f in self])

    def homogeneous_part(self, degree):
        return PolynomialMap([f.homogeneous_part(degree) for f in self])

    def evaluate(self, point):
        return [f.evaluate(point) for f in self]

    def jacobian(self):
        """
        Jacobian matrix with entry `(i, j) = dF_i / dx_j`.

        :rtype: `PolyMatrix`
        """
        return PolyMatrix([[f.derive(j) for j in range(1, self.n + 1)] for f in self])

    def to_strings(self):
        return [str(f) for f in self]

    def to_json(self):
        return {'n': self.n, 'components': self.to_strings()}

    @classmethod
    def from_json(cls, content):
        """
        Read a map from its JSON form `{"n": ..., "components": [...]}`.

        :raises ParseError: for malformed content or expressions.
        """
        if not isinstance(content, dict) or 'n' not in content or 'components' not in content:
            raise ParseError('A map file needs the keys "n" and "components".')
        n = content['n']
        components = content['components']
        if not isinstance(n, int) or n < 1 or not isinstance(components, list) or len(components) != n:
            raise ParseError('A map file needs a positive "n" and exactly n components.')
        return cls([parse_polynomial(text, n) for text in components])

    @classmethod
    def from_strings(cls, texts):
        n = len(texts)
        return cls([parse_polynomial(text, n) for text in texts])

    def __repr__(self):
        return 'PolynomialMap(%r)' % (self.to_strings(),)


class PolyMatrix(object):
    """
    Square matrix of polynomials sharing one ambient dimension.
    """
    __slots__ = ('_rows',)

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        size = len(rows)
        if size == 0 or any(len(row) != size for row in rows):
            raise DimensionError('A PolyMatrix must be square and non-empty.')
        ambient = set(entry.n for row in rows for entry in row)
        if len(ambient) != 1:
            raise DimensionError('Matrix entries live in different rings: %s.' % sorted(ambient))
        self._rows = rows

    @classmethod
    def identity(cls, size, ambient_n):
        one = Polynomial.one(ambient_n)
        zero = Polynomial.zero(ambient_n)
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])

    @property
    def size(self):
        return len(self._rows)

    @property
    def ambient_n(self):
        return self._rows[0][0].n

    @property
    def rows(self):
        return self._rows

    def entry(self, i, j):
        # 0-based
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._rows)

    def is_zero(self):
        return all(entry.is_zero() for row in self._rows for entry in row)

    def __add__(self, other):
        if other.size != self.size:
            raise DimensionError('Matrix sizes differ.')
        return PolyMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)])

    def scale(self, factor):
        """
        Multiply every entry by a polynomial or a rational.
        """
        return PolyMatrix([[entry * factor for entry in row] for row in self._rows])

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if other.size != self.size:
            raise DimensionError('Matrix sizes differ.')
        size = self.size
        columns = [[other._rows[k][j] for k in range(size)] for j in range(size)]
        zero = Polynomial.zero(self.ambient_n)
        product = []
        for row in self._rows:
            product_row = []
            for column in columns:
                total = zero
                for a, b in zip(row, column):
                    if a and b:
                        total = total + a * b
                product_row.append(total)
            product.append(product_row)
        return PolyMatrix(product)

    def power(self, k):
        if k < 0:
            raise ValueError('Matrix power must be non-negative.')
        result = PolyMatrix.identity(self.size, self.ambient_n)
        for _ in range(k):
            result = result * self
        return result

    def trace(self):
        total = Polynomial.zero(self.ambient_n)
        for i in range(self.size):
            total = total + self._rows[i][i]
        return total

    def substitute(self, assignments):
        """
        Substitute into every entry, see `Polynomial.substitute`.
        """
        substitution = Substitution(self.ambient_n, assignments)
        return PolyMatrix([[substitution.apply(entry) for entry in row] for row in self._rows])

    def with_ambient(self, m):
        return PolyMatrix([[entry.with_ambient(m) for entry in row] for row in self._rows])

    def determinant(self):
        """
        Determinant by Laplace expansion along the rows, memoized over the subsets of remaining columns.

        :rtype: `Polynomial`
        """
        size = self.size
        rows = self._rows
        memo = {}

        def _minor(row, columns):
            # `columns` is a bit mask of the columns still available for rows `row..size-1`
            if row == size:
                return Polynomial.one(self.ambient_n)
            if columns in memo:
                return memo[columns]
            total = Polynomial.zero(self.ambient_n)
            sign = 1
            for j in range(size):
                if not columns & (1 << j):
                    continue
                entry = rows[row][j]
                if entry:
                    term = entry * _minor(row + 1, columns & ~(1 << j))
                    total = total + term if sign > 0 else total - term
                sign = -sign
            memo[columns] = total
            return total

        return _minor(0, (1 << size) - 1)

    def to_strings(self):
        return [[str(entry) for entry in row] for row in self._rows]

    def __repr__(self):
        return 'PolyMatrix(%r)' % (self.to_strings(),)
