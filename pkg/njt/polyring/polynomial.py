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
Sparse multivariate polynomials with exact rational coefficients.

A `Polynomial` lives in an ambient ring `Q[x1, ..., xn]` and stores a mapping from exponent tuples to non-zero
`Fraction` coefficients. Values are immutable. Terms are enumerated in a fixed canonical order: compare the degree in
`x2` first, then in `x1`, then in `x3, ..., xn` from left to right. Restricted to two variables this is the ordering of
terms `x^i y^j` used by `leading_term_lex`.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import functools
import logging
import numbers
import sys
from fractions import Fraction

if sys.version_info >= (3, 5):
    from math import gcd
else:
    from fractions import gcd

from njt.exceptions import DimensionError
from njt.utils import rational_str, to_rational

logger = logging.getLogger(__name__)

NEG_INFINITY = float('-inf')
"""Degree of the zero polynomial."""

EXPONENT_BITS = 24
"""Width of one exponent field in a packed monomial key."""

_MASK = (1 << EXPONENT_BITS) - 1


def order_key(exponents):
    """
    Sort key of an exponent tuple under the canonical term order (larger key means larger term).
    """
    if len(exponents) < 2:
        return tuple(exponents)
    return (exponents[1], exponents[0]) + tuple(exponents[2:])


def variable_name(index):
    """
    Printed name of variable `index` (1-based): `x`, `y`, then `x3`, `x4`, ...
    """
    if index == 1:
        return 'x'
    if index == 2:
        return 'y'
    return 'x%d' % index


# A packed polynomial is a pair `(den, terms)` standing for `sum(num / den * X^key)`, where `terms` maps packed
# monomial keys to non-zero integer numerators. Exponent `i` sits in bits `[EXPONENT_BITS * i, EXPONENT_BITS * (i+1))`
# and the total degree above all of them, so the product of two monomials is the sum of their keys.

def pack_exponents(exponents):
    """
    Packed key of an exponent tuple.
    """
    key = sum(exponents) << (EXPONENT_BITS * len(exponents))
    for i, e in enumerate(exponents):
        key |= e << (EXPONENT_BITS * i)
    return key


def unpack_exponents(key, n):
    return tuple((key >> (EXPONENT_BITS * i)) & _MASK for i in range(n))


def _normalize(den, terms):
    terms = {k: c for k, c in terms.items() if c}
    if not terms:
        return 1, terms
    if den != 1:
        common = den
        for c in terms.values():
            common = gcd(common, abs(c))
            if common == 1:
                break
        if common != 1:
            den //= common
            terms = {k: c // common for k, c in terms.items()}
    return den, terms


def _add_packed(left, right):
    den1, a = left
    den2, b = right
    if not a:
        return right
    if not b:
        return left
    if den1 == den2:
        den = den1
        terms = dict(a)
        get = terms.get
        for k, c in b.items():
            terms[k] = get(k, 0) + c
    else:
        den = den1 // gcd(den1, den2) * den2
        s1, s2 = den // den1, den // den2
        terms = {k: c * s1 for k, c in a.items()}
        get = terms.get
        for k, c in b.items():
            terms[k] = get(k, 0) + c * s2
    return _normalize(den, terms)


def _multiply_packed(left, right, n, max_degree=None):
    den1, a = left
    den2, b = right
    if not a or not b:
        return 1, {}
    if len(a) < len(b):
        a, b = b, a
    terms = {}
    get = terms.get
    if max_degree is None:
        inner = list(b.items())
        for k1, c1 in a.items():
            for k2, c2 in inner:
                k = k1 + k2
                terms[k] = get(k, 0) + c1 * c2
    else:
        shift = EXPONENT_BITS * n
        inner = sorted((k2 >> shift, k2, c2) for k2, c2 in b.items())
        lowest = inner[0][0]
        for k1, c1 in a.items():
            room = max_degree - (k1 >> shift)
            if room < lowest:
                continue
            for d2, k2, c2 in inner:
                if d2 > room:
                    break
                k = k1 + k2
                terms[k] = get(k, 0) + c1 * c2
    return _normalize(den1 * den2, terms)


@functools.total_ordering
class LexTerm(object):
    """
    A term `x^i y^j` of `Q[x, y]`, ordered by y-degree first and x-degree second.
    """
    __slots__ = ('x_degree', 'y_degree')

    def __init__(self, x_degree, y_degree):
        if x_degree < 0 or y_degree < 0:
            raise ValueError('Term degrees must be non-negative.')
        self.x_degree = int(x_degree)
        self.y_degree = int(y_degree)

    def _key(self):
        return self.y_degree, self.x_degree

    def __eq__(self, other):
        if not isinstance(other, LexTerm):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        if not isinstance(other, LexTerm):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'LexTerm(x_degree=%d, y_degree=%d)' % (self.x_degree, self.y_degree)


class Polynomial(object):
    """
    Immutable sparse polynomial over the rationals.
    """
    __slots__ = ('_n', '_terms', '_hash', '_packed')

    def __init__(self, n, terms=None):
        """
        Create a polynomial.

        :param n: Number of variables of the ambient ring.
        :type n: `int`
        :param terms: Mapping (or iterable of pairs) from exponent tuples of length `n` to rational coefficients.
                      Repeated monomials are added up and zero coefficients dropped.
        :type terms: `dict`
        """
        if not isinstance(n, numbers.Integral) or isinstance(n, bool) or n < 1:
            raise DimensionError('Ambient dimension must be a positive integer, got %r.' % (n,))
        self._n = int(n)
        clean = {}
        if terms:
            items = terms.items() if hasattr(terms, 'items') else terms
            for exponents, coefficient in items:
                exponents = tuple(int(e) for e in exponents)
                if len(exponents) != self._n:
                    raise DimensionError('Monomial %r does not have %d exponents.' % (exponents, self._n))
                if any(e < 0 for e in exponents):
                    raise ValueError('Negative exponent in monomial %r.' % (exponents,))
                clean[exponents] = clean.get(exponents, 0) + to_rational(coefficient)
        self._terms = {e: c for e, c in clean.items() if c != 0}
        self._hash = None
        self._packed = None

    @classmethod
    def _raw(cls, n, terms):
        # `terms` must already be clean: exponent tuples of length n, non-zero Fraction values
        poly = cls.__new__(cls)
        poly._n = n
        poly._terms = terms
        poly._hash = None
        poly._packed = None
        return poly

    @classmethod
    def _from_packed(cls, n, packed):
        den, terms = packed
        poly = cls._raw(n, {unpack_exponents(k, n): Fraction(c, den) for k, c in terms.items()})
        poly._packed = packed
        return poly

    def _pack(self):
        if self._packed is None:
            den = 1
            for c in self._terms.values():
                den = den // gcd(den, c.denominator) * c.denominator
            self._packed = (den, {pack_exponents(e): c.numerator * (den // c.denominator)
                                  for e, c in self._terms.items()})
        return self._packed

    # ---------------------------------------------------------------------------------------------- CONSTRUCTORS

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls.constant(n, 1)

    @classmethod
    def constant(cls, n, value):
        """
        Constant polynomial `value` in `n` variables.
        """
        return cls(n, {(0,) * n: value})

    @classmethod
    def variable(cls, n, index):
        """
        The polynomial `x_index` in `n` variables.

        :param n: Number of variables.
        :type n: `int`
        :param index: 1-based index of the variable.
        :type index: `int`
        """
        if not 1 <= index <= n:
            raise DimensionError('Variable index %d out of range 1..%d.' % (index, n))
        exponents = [0] * n
        exponents[index - 1] = 1
        return cls._raw(n, {tuple(exponents): Fraction(1)})

    @classmethod
    def univariate(cls, coefficients):
        """
        Polynomial in one variable from its coefficients, lowest degree first.
        """
        return cls(1, {(k,): c for k, c in enumerate(coefficients)})

    # ---------------------------------------------------------------------------------------------- INSPECTION

    @property
    def n(self):
        """
        Number of variables of the ambient ring.
        """
        return self._n

    def terms(self):
        """
        Terms in canonical order, largest first.

        :return: List of `(exponents, coefficient)` pairs.
        :rtype: `list`
        """
        return sorted(self._terms.items(), key=lambda item: order_key(item[0]), reverse=True)

    def coefficient(self, exponents):
        """
        Coefficient of the monomial with the given exponents (zero when absent).
        """
        return self._terms.get(tuple(exponents), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * self._n, Fraction(0))

    def degree(self):
        """
        Total degree, or `NEG_INFINITY` for the zero polynomial.
        """
        if not self._terms:
            return NEG_INFINITY
        return max(sum(e) for e in self._terms)

    def degree_in(self, index):
        """
        Degree in the variable `x_index`, or `NEG_INFINITY` for the zero polynomial.
        """
        self._check_index(index)
        if not self._terms:
            return NEG_INFINITY
        return max(e[index - 1] for e in self._terms)

    def variables(self):
        """
        Sorted list of the (1-based) indices of the variables that occur.
        """
        return [i + 1 for i in range(self._n) if any(e[i] for e in self._terms)]

    def depends_on(self, index):
        self._check_index(index)
        return any(e[index - 1] for e in self._terms)

    def _check_index(self, index):
        if not isinstance(index, numbers.Integral) or not 1 <= index <= self._n:
            raise DimensionError('Variable index %r out of range 1..%d.' % (index, self._n))

    # ---------------------------------------------------------------------------------------------- ARITHMETIC

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other._n != self._n:
                raise DimensionError('Ambient dimension mismatch: %d and %d.' % (self._n, other._n))
            return other
        if isinstance(other, (numbers.Rational, str)) and not isinstance(other, bool):
            return Polynomial.constant(self._n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial._raw(self._n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self._n, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def multiply(self, other, max_degree=None):
        """
        Product with another polynomial, optionally dropping every term of total degree above `max_degree`.

        :param other: The other factor.
        :type other: `Polynomial`
        :param max_degree: Truncation degree, `None` for the exact product.
        :type max_degree: `int`
        :rtype: `Polynomial`
        """
        other = self._coerce(other)
        if other is None:
            raise TypeError('Cannot multiply a Polynomial by %r.' % (other,))
        if not self._terms or not other._terms:
            return Polynomial.zero(self._n)
        return Polynomial._from_packed(self._n, _multiply_packed(self._pack(), other._pack(), self._n, max_degree))

    def __mul__(self, other):
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.multiply(other)

    __rmul__ = __mul__

    def scale(self, factor):
        """
        Multiply every coefficient by the rational `factor`.
        """
        factor = to_rational(factor)
        if factor == 0:
            return Polynomial.zero(self._n)
        return Polynomial._raw(self._n, {e: c * factor for e, c in self._terms.items()})

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError('Polynomial division by zero.')
            return self.scale(Fraction(1) / to_rational(other))
        return NotImplemented

    __div__ = __truediv__

    def power(self, k, max_degree=None):
        """
        `k`-th power by repeated squaring, optionally truncated at `max_degree`.
        """
        if not isinstance(k, numbers.Integral) or k < 0:
            raise ValueError('Exponent must be a non-negative integer, got %r.' % (k,))
        result = Polynomial.one(self._n)
        base = self
        while k:
            if k & 1:
                result = result.multiply(base, max_degree)
            k >>= 1
            if k:
                base = base.multiply(base, max_degree)
        return result

    def __pow__(self, k):
        return self.power(k)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    # ---------------------------------------------------------------------------------------------- CALCULUS

    def derive(self, index, order=1):
        """
        Formal partial derivative with respect to `x_index`, applied `order` times.

        :param index: 1-based variable index.
        :type index: `int`
        :param order: Number of derivations.
        :type order: `int`
        :rtype: `Polynomial`
        """
        self._check_index(index)
        i = index - 1
        terms = {}
        for e, c in self._terms.items():
            k = e[i]
            if k < order:
                continue
            factor = 1
            for j in range(order):
                factor *= k - j
            new = e[:i] + (k - order,) + e[i + 1:]
            terms[new] = c * factor
        return Polynomial._raw(self._n, terms)

    def substitute(self, assignments, max_degree=None):
        """
        Replace variables by polynomials.

        All replacement polynomials must share one ambient dimension `m`, which becomes the ambient dimension of the
        result (`m = n` when every replacement is a rational). Unassigned variables map to themselves, so they must
        exist in the target ring.

        :param assignments: Mapping from 1-based variable indices to `Polynomial` or rational replacements.
        :type assignments: `dict`
        :param max_degree: Optional truncation degree of the result.
        :type max_degree: `int`
        :rtype: `Polynomial`
        """
        if not assignments:
            return self if max_degree is None else self.truncate(max_degree)
        return Substitution(self._n, assignments, max_degree).apply(self)

    def evaluate(self, point):
        """
        Value at a rational point given as a sequence of `n` coordinates.
        """
        if len(point) != self._n:
            raise DimensionError('Point has %d coordinates, expected %d.' % (len(point), self._n))
        point = [to_rational(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            value = c
            for v, k in zip(point, e):
                if k:
                    value *= v ** k
            total += value
        return total

    # ---------------------------------------------------------------------------------------------- STRUCTURE

    def coeff_in_var(self, index, k):
        """
        Coefficient of `x_index^k` when the polynomial is viewed as a polynomial in `x_index` over the other variables.
        The result does not contain `x_index`.
        """
        self._check_index(index)
        i = index - 1
        terms = {}
        for e, c in self._terms.items():
            if e[i] == k:
                terms[e[:i] + (0,) + e[i + 1:]] = c
        return Polynomial._raw(self._n, terms)

    def coefficients_in_var(self, index):
        """
        All coefficients in `x_index` as a dictionary `{k: coeff_in_var(index, k)}` over the occurring powers.
        """
        self._check_index(index)
        i = index - 1
        grouped = {}
        for e, c in self._terms.items():
            grouped.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Polynomial._raw(self._n, terms) for k, terms in grouped.items()}

    def truncate(self, max_degree):
        """
        Drop all terms of total degree above `max_degree`.
        """
        return Polynomial._raw(self._n, {e: c for e, c in self._terms.items() if sum(e) <= max_degree})

    def homogeneous_part(self, degree):
        return Polynomial._raw(self._n, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def with_ambient(self, m):
        """
        The same polynomial in `m` variables. Growing appends unused variables; shrinking requires the dropped
        trailing variables to be absent.
        """
        if m == self._n:
            return self
        if m > self._n:
            pad = (0,) * (m - self._n)
            return Polynomial._raw(m, {e + pad: c for e, c in self._terms.items()})
        for e in self._terms:
            if any(e[m:]):
                raise DimensionError('Cannot drop variables x%d..x%d: they occur in the polynomial.' % (m + 1, self._n))
        return Polynomial._raw(m, {e[:m]: c for e, c in self._terms.items()})

    def leading_term_lex(self):
        """
        Leading term and leading coefficient under the ordering of terms `x^i y^j` that looks at the y-degree first.

        :return: Tuple `(LexTerm, Fraction)`.
        :rtype: `tuple`
        :raises ValueError: for the zero polynomial.
        :raises DimensionError: when a variable other than `x`, `y` occurs.
        """
        if not self._terms:
            raise ValueError('The zero polynomial has no leading term.')
        if any(v > 2 for v in self.variables()):
            raise DimensionError('Leading term only defined for polynomials in x and y.')
        exponents, coefficient = self.terms()[0]
        y_degree = exponents[1] if self._n > 1 else 0
        return LexTerm(exponents[0], y_degree), coefficient

    # ---------------------------------------------------------------------------------------------- PRINTING

    def to_string(self, names=None):
        """
        Render the polynomial in the expression language read by `njt.polyring.parse_polynomial`.

        :param names: Optional variable names, one per variable; defaults to `x`, `y`, `x3`, ...
        :type names: `list`
        :rtype: `str`
        """
        if not self._terms:
            return '0'
        if names is None:
            names = [variable_name(i + 1) for i in range(self._n)]
        pieces = []
        for position, (e, c) in enumerate(self.terms()):
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append('%s^%d' % (name, k))
            magnitude = abs(c)
            if not factors:
                body = rational_str(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([rational_str(magnitude)] + factors)
            if position == 0:
                pieces.append('-' + body if c < 0 else body)
            else:
                pieces.append(('- ' if c < 0 else '+ ') + body)
        return ' '.join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return 'Polynomial(%d, %r)' % (self._n, self.to_string())


class Substitution(object):
    """
    Replacement of variables by polynomials, applied to any number of polynomials of one ambient ring. Powers of the
    replacements are computed once and shared, and every polynomial is evaluated by nested Horner schemes over the
    replaced variables that occur in it.
    """
    def __init__(self, n, assignments, max_degree=None):
        """
        :param n: Ambient dimension of the polynomials substituted into.
        :type n: `int`
        :param assignments: Mapping from 1-based variable indices to `Polynomial` or rational replacements.
        :type assignments: `dict`
        :param max_degree: Optional truncation degree of the results.
        :type max_degree: `int`
        """
        for index in assignments:
            if not isinstance(index, numbers.Integral) or not 1 <= index <= n:
                raise DimensionError('Variable index %r out of range 1..%d.' % (index, n))
        targets = set(p.n for p in assignments.values() if isinstance(p, Polynomial))
        if len(targets) > 1:
            raise DimensionError('Replacement polynomials have different ambient dimensions: %s.' % sorted(targets))
        self.n = n
        self.m = targets.pop() if targets else n
        self.max_degree = max_degree
        self._images = {}
        for index, value in assignments.items():
            if not isinstance(value, Polynomial):
                value = Polynomial.constant(self.m, value)
            self._images[index - 1] = value._pack()
        self._powers = {i: {1: image} for i, image in self._images.items()}

    def _multiply(self, left, right):
        return _multiply_packed(left, right, self.m, self.max_degree)

    def _power(self, i, k):
        cache = self._powers[i]
        if k not in cache:
            j = max(j for j in cache if j < k)
            value = cache[j]
            while j < k:
                value = self._multiply(value, self._images[i])
                j += 1
                cache[j] = value
        return cache[k]

    def _horner(self, entries, active, depth):
        # entries are (exponents, kept key, numerator); `active` lists the replaced variables still to evaluate
        if not entries:
            return 1, {}
        if depth == len(active):
            terms = {}
            for _, key, num in entries:
                terms[key] = terms.get(key, 0) + num
            return _normalize(1, terms)
        index = active[depth]
        groups = {}
        for entry in entries:
            groups.setdefault(entry[0][index], []).append(entry)
        result = None
        previous = 0
        for k in sorted(groups, reverse=True):
            value = self._horner(groups[k], active, depth + 1)
            if result is None:
                result = value
            else:
                result = _add_packed(self._multiply(result, self._power(index, previous - k)), value)
            previous = k
        if previous:
            result = self._multiply(result, self._power(index, previous))
        return result

    def apply(self, polynomial):
        """
        :param polynomial: Polynomial in `n` variables.
        :type polynomial: `Polynomial`
        :return: The polynomial with the replacements substituted, in `m` variables.
        :rtype: `Polynomial`
        :raises DimensionError: if an unassigned variable that occurs does not exist in the target ring.
        """
        if polynomial.n != self.n:
            raise DimensionError('Substitution over %d variables applied to a polynomial in %d.'
                                 % (self.n, polynomial.n))
        m = self.m
        occurring = polynomial.variables()
        active = [index - 1 for index in occurring if index - 1 in self._images]
        kept = [index - 1 for index in occurring if index - 1 not in self._images]
        for i in kept:
            if i >= m:
                raise DimensionError('Unassigned variable x%d does not exist in the target ring of dimension %d.'
                                     % (i + 1, m))
        den, _ = polynomial._pack()
        entries = []
        for e, c in polynomial._terms.items():
            kept_exponents = [0] * m
            for i in kept:
                kept_exponents[i] = e[i]
            if self.max_degree is not None and sum(kept_exponents) > self.max_degree:
                continue
            entries.append((e, pack_exponents(kept_exponents), c.numerator * (den // c.denominator)))
        result_den, terms = self._horner(entries, active, 0)
        return Polynomial._from_packed(m, (result_den * den, terms))
