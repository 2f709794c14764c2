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
Parameters of the classified families of structured maps with nilpotent Jacobian matrix, their JSON form and their
validation.

Three cases are supported:

- `main`: `u = p(y + a(x))` with a chain of levels `i = 2..r-1`, each carrying a nice polynomial `P_i` and a shift
  `b_i(x)`, a terminal scalar `b_r` and free components beyond `r`,
- `cor1`: `u2` free of `x3`; `u = l2 f(l1 x + l2 y) + c1`, `u2 = -l1 f(l1 x + l2 y) + c2`,
- `cor2`: `u` constant and `u_i` free of `y` for `i <= r`.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import numbers

from njt.exceptions import ParamsError
from njt.jacobian.shape import allowed_variables
from njt.polyring import Polynomial, format_polynomial, format_univariate, parse_polynomial, parse_univariate
from njt.utils import rational_str, to_rational

logger = logging.getLogger(__name__)

CASES = ('main', 'cor1', 'cor2')


def _strip(polys):
    polys = list(polys)
    while polys and polys[-1].is_zero():
        polys.pop()
    return polys


def _check_univariate(poly, what):
    if not isinstance(poly, Polynomial) or poly.n != 1:
        raise ParamsError('%s must be a univariate polynomial.' % what, condition='schema')
    return poly


class NicePoly(object):
    """
    Univariate polynomial `P(T)` of degree `d >= 1` whose `T^(d-1)` coefficient is zero.
    """
    def __init__(self, coefficients):
        """
        :param coefficients: Coefficients of `T^0, ..., T^d`, lowest degree first. Trailing zeros are ignored.
        :type coefficients: `list`
        :raises ParamsError: (condition `nice`) if the polynomial is not nice.
        """
        coefficients = [to_rational(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if len(coefficients) < 2:
            raise ParamsError('a nice polynomial has degree at least 1.', condition='nice')
        if coefficients[-2] != 0:
            raise ParamsError('coefficient of T^%d is %s, expected 0.'
                              % (len(coefficients) - 2, rational_str(coefficients[-2])), condition='nice')
        self.coefficients = tuple(coefficients)

    @classmethod
    def from_polynomial(cls, poly):
        poly = _check_univariate(poly, 'P')
        degree = poly.degree()
        if degree < 1:
            raise ParamsError('a nice polynomial has degree at least 1.', condition='nice')
        return cls([poly.coefficient((k,)) for k in range(int(degree) + 1)])

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1]

    def as_polynomial(self):
        return Polynomial.univariate(self.coefficients)

    def to_json(self):
        return [rational_str(c) for c in self.coefficients]

    def __eq__(self, other):
        return isinstance(other, NicePoly) and self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return 'NicePoly(%s)' % format_univariate(self.as_polynomial())


class Level(object):
    """
    Data of level `i` (`2 <= i <= r-1`) of a main-case family member:
    `u_i = sum_j c_{i,j}(x) u^j + P_i(x_{i+1} + b_i(x) / (d_i p_{d_i}))`.

    `coefficients`, when given, are the expected `c_{i,1}, c_{i,2}, ...`; they are checked against the values forced by
    the lower levels.
    """
    def __init__(self, index, nice, shift, coefficients=None):
        self.index = int(index)
        if not isinstance(nice, NicePoly):
            nice = NicePoly(nice)
        self.nice = nice
        self.shift = _check_univariate(shift, 'b_%d' % self.index)
        self.coefficients = None
        if coefficients is not None:
            self.coefficients = [_check_univariate(c, 'c_%d' % self.index) for c in coefficients]

    def to_json(self):
        content = {'i': self.index, 'P': self.nice.to_json(), 'b': format_polynomial(self.shift)}
        if self.coefficients is not None:
            content['c'] = [format_polynomial(c) for c in self.coefficients]
        return content

    def __repr__(self):
        return 'Level(%d, %r, b=%s)' % (self.index, self.nice, self.shift)


class FamilyParams(object):
    """
    Full parameter record of a classified family member. Use the `main`, `cor1` and `cor2` constructors.
    """
    def __init__(self, n, case):
        if case not in CASES:
            raise ParamsError('unknown case %r.' % (case,), condition='schema')
        if not isinstance(n, numbers.Integral) or n < 3:
            raise ParamsError('dimension must be at least 3, got %r.' % (n,), condition='range')
        self.n = int(n)
        self.case = case
        self.free = {}
        # main
        self.p = None
        self.a = None
        self.r = None
        self.levels = []
        self.b_r = None
        # cor1
        self.lambda1 = None
        self.lambda2 = None
        self.c1 = None
        self.c2 = None
        self.f = None
        # cor2
        self.u = None
        self.chain = {}

    @classmethod
    def main(cls, n, p, a, r, levels, b_r=0, free=None):
        """
        :param n: Dimension.
        :param p: Univariate polynomial of degree at least 1.
        :param a: Univariate polynomial in `x`.
        :param r: Terminal level, `3 <= r <= n`.
        :param levels: `Level` objects for `i = 2..r-1`.
        :param b_r: Terminal scalar.
        :param free: Mapping `i -> u_i` for `r < i <= n`.
        """
        params = cls(n, 'main')
        params.p = _check_univariate(p, 'p')
        params.a = _check_univariate(a, 'a')
        params.r = r
        params.levels = list(levels)
        params.b_r = to_rational(b_r)
        params.free = dict(free or {})
        return params

    @classmethod
    def cor1(cls, n, lambda1, lambda2, c1, c2, f, free=None):
        params = cls(n, 'cor1')
        params.lambda1 = to_rational(lambda1)
        params.lambda2 = to_rational(lambda2)
        params.c1 = to_rational(c1)
        params.c2 = to_rational(c2)
        params.f = _check_univariate(f, 'f')
        params.free = dict(free or {})
        return params

    @classmethod
    def cor2(cls, n, u, r, chain, free=None):
        """
        :param u: The constant first component.
        :param r: Index of the last chain component, `3 <= r <= n`.
        :param chain: Mapping `i -> u_i` for `2 <= i <= r`; `u_i` in `x, x_{i+1}` and `u_r` in `x` only.
        """
        params = cls(n, 'cor2')
        params.u = to_rational(u)
        params.r = r
        params.chain = dict(chain)
        params.free = dict(free or {})
        return params

    def level(self, index):
        for level in self.levels:
            if level.index == index:
                return level
        raise KeyError(index)

    # ---------------------------------------------------------------------------------------------- JSON

    def to_json(self):
        content = {'n': self.n, 'case': self.case,
                   'free': [{'i': i, 'u': format_polynomial(self.free[i])} for i in sorted(self.free)]}
        if self.case == 'main':
            content.update({'p': format_univariate(self.p), 'a': format_polynomial(self.a), 'r': self.r,
                            'levels': [level.to_json() for level in self.levels],
                            'terminal': {'b_r': rational_str(self.b_r)}})
        elif self.case == 'cor1':
            content.update({'lambda1': rational_str(self.lambda1), 'lambda2': rational_str(self.lambda2),
                            'c1': rational_str(self.c1), 'c2': rational_str(self.c2), 'f': format_univariate(self.f)})
        else:
            content.update({'u': rational_str(self.u), 'r': self.r,
                            'chain': [{'i': i, 'u': format_polynomial(self.chain[i])} for i in sorted(self.chain)]})
        return content

    @classmethod
    def from_json(cls, content):
        """
        Read parameters from their JSON form.

        :raises ParseError: for malformed expressions or rationals.
        :raises ParamsError: (condition `schema`) for missing or ill-typed keys.
        """
        try:
            n = content['n']
            case = content.get('case', 'main')
            free = {int(entry['i']): parse_polynomial(entry['u'], n) for entry in content.get('free', [])}
            if case == 'main':
                levels = []
                for entry in content.get('levels', []):
                    coefficients = None
                    if 'c' in entry:
                        coefficients = [parse_polynomial(c, 1) for c in entry['c']]
                    levels.append(Level(entry['i'], NicePoly(entry['P']), parse_polynomial(entry.get('b', '0'), 1),
                                        coefficients))
                b_r = content.get('terminal', {}).get('b_r', 0)
                return cls.main(n, parse_univariate(content['p']), parse_polynomial(content.get('a', '0'), 1),
                                int(content['r']), levels, b_r, free)
            if case == 'cor1':
                return cls.cor1(n, content['lambda1'], content['lambda2'], content.get('c1', 0), content.get('c2', 0),
                                parse_univariate(content['f']), free)
            if case == 'cor2':
                chain = {int(entry['i']): parse_polynomial(entry['u'], n) for entry in content.get('chain', [])}
                return cls.cor2(n, content['u'], int(content['r']), chain, free)
        except (KeyError, TypeError, AttributeError) as e:
            raise ParamsError('malformed parameter file (%s: %s).' % (type(e).__name__, e), condition='schema')
        raise ParamsError('unknown case %r.' % (case,), condition='schema')

    def __repr__(self):
        return 'FamilyParams(%r)' % (self.to_json(),)


class DerivedConstants(object):
    """
    Quantities derived from validated main-case parameters, indexed by level:

    - `d[i]`: degree of `P_i`, with `d[1] = 2`,
    - `l[i]`: leading coefficient of `P_i`, with `l[r] = 0`,
    - `L[i] = d[i] l[i]`, with `L[1] = 1`,
    - `b[i]`: the shifts, with `b[1] = a` and `b[r]` the terminal constant,
    - `c[i]`: coefficients `c_{i,1}, c_{i,2}, ...` of `u_i` in powers of `u`, for `i = 2..r`,
    - `s`: largest index `>= 2` with `d[s-1] >= 2`.

    The cor1 and cor2 cases only fill `case` and `r`.
    """
    def __init__(self, case, r=None, degrees=None, leading=None, shifts=None, coefficients=None):
        self.case = case
        self.r = r
        self.d = degrees or {}
        self.l = leading or {}
        self.b = shifts or {}
        self.c = coefficients or {}
        self.L = {}
        self.s = None
        if case == 'main':
            self.L = {i: self.d[i] * self.l[i] for i in range(2, r)}
            self.L[1] = to_rational(1)
            self.s = max(i for i in range(2, r + 1) if self.d[i - 1] >= 2)

    @property
    def n_h(self):
        """
        Number of levels `i < r` with `d_i >= 2` (counting `d_1 = 2`).
        """
        return sum(1 for i in range(1, self.r) if self.d[i] >= 2)

    def gamma(self, k, t):
        """
        `gamma_{k,t} = prod_{i=1}^{k} L_{s-1+t-i}^{-1}`, for `1 <= k <= t <= r-s+1`.
        """
        if not 1 <= k <= t <= self.r - self.s + 1:
            raise ValueError('gamma_{%d,%d} undefined for s=%d, r=%d.' % (k, t, self.s, self.r))
        value = to_rational(1)
        for i in range(1, k + 1):
            value /= self.L[self.s - 1 + t - i]
        return value

    def __repr__(self):
        return 'DerivedConstants(case=%s, r=%s, s=%s, d=%s)' % (self.case, self.r, self.s, self.d)


def derive_coefficients(params):
    """
    Coefficients `c_{i,j}` for `i = 2..r` forced by the lower levels:
    `c_{2,1} = -a'`, `c_{i,1} = -b'_{i-1} / L_{i-1}` and `c_{i,j+1} = -c'_{i-1,j} / ((j+1) L_{i-1})`.

    :param params: Main-case parameters with levels `2..r-1`.
    :type params: `FamilyParams`
    :return: Mapping from level to the list of coefficients, trailing zeros removed.
    :rtype: `dict`
    """
    coefficients = {2: _strip([-params.a.derive(1)])}
    for i in range(3, params.r + 1):
        previous = params.level(i - 1)
        big_l = previous.nice.degree * previous.nice.leading
        current = [-previous.shift.derive(1) / big_l]
        for j, c in enumerate(coefficients[i - 1], start=1):
            current.append(-c.derive(1) / ((j + 1) * big_l))
        coefficients[i] = _strip(current)
    return coefficients


def _validate_free(params, first):
    for i, component in params.free.items():
        if not first <= i <= params.n:
            raise ParamsError('free component index %d outside %d..%d.' % (i, first, params.n), condition='schema')
        if component.n != params.n:
            raise ParamsError('free component %d must live in %d variables.' % (i, params.n), condition='schema')
        allowed = allowed_variables(params.n, i)
        for variable in component.variables():
            if variable not in allowed:
                raise ParamsError('free component %d depends on x%d.' % (i, variable), condition='(d)')


def _validate_main(params):
    n, r = params.n, params.r
    if not isinstance(r, numbers.Integral) or not 3 <= r <= n:
        raise ParamsError('r = %r outside 3..%d.' % (r, n), condition='range')
    if params.p.degree() < 1:
        raise ParamsError('p must have degree at least 1.', condition='degree')
    if [level.index for level in params.levels] != list(range(2, r)):
        raise ParamsError('levels must be given for i = 2..%d in order.' % (r - 1), condition='schema')

    coefficients = derive_coefficients(params)
    for level in params.levels:
        m = level.index
        if level.nice.degree >= 2:
            for j, c in enumerate(coefficients[m], start=1):
                if not c.derive(1).is_zero():
                    condition = '(a)' if m == 2 else '(b)'
                    raise ParamsError("d_%d = %d but c_{%d,%d} = %s is not constant."
                                      % (m, level.nice.degree, m, j, format_polynomial(c)), condition=condition)
        if level.coefficients is not None and _strip(level.coefficients) != coefficients[m]:
            raise ParamsError('supplied c_%d = %s, expected %s.'
                              % (m, [str(c) for c in level.coefficients], [str(c) for c in coefficients[m]]),
                              condition='(b)')
    for j, c in enumerate(coefficients[r], start=1):
        if not c.derive(1).is_zero():
            raise ParamsError('terminal coefficient c_{%d,%d} = %s is not constant.' % (r, j, format_polynomial(c)),
                              condition='(c)')
    _validate_free(params, r + 1)

    degrees = {1: 2}
    leading = {r: to_rational(0)}
    shifts = {1: params.a, r: Polynomial.constant(1, params.b_r)}
    for level in params.levels:
        degrees[level.index] = level.nice.degree
        leading[level.index] = level.nice.leading
        shifts[level.index] = level.shift
    return DerivedConstants('main', r, degrees, leading, shifts, coefficients)


def _validate_cor2(params):
    n, r = params.n, params.r
    if not isinstance(r, numbers.Integral) or not 3 <= r <= n:
        raise ParamsError('r = %r outside 3..%d.' % (r, n), condition='range')
    if sorted(params.chain) != list(range(2, r + 1)):
        raise ParamsError('chain components must be given for i = 2..%d.' % r, condition='schema')
    for i in range(2, r + 1):
        component = params.chain[i]
        allowed = {1, i + 1} if i < r else {1}
        for variable in component.variables():
            if variable not in allowed:
                raise ParamsError('supplied u_%d depends on x%d.' % (i, variable), condition='cor2')
        if i < r and not component.depends_on(i + 1):
            raise ParamsError('u_%d must depend on x%d.' % (i, i + 1), condition='cor2')
    _validate_free(params, r + 1)
    return DerivedConstants('cor2', r)


def validate_params(params):
    """
    Check every condition of the parameter record and compute the derived constants.

    :param params: The parameters.
    :type params: `FamilyParams`
    :return: Derived constants.
    :rtype: `DerivedConstants`
    :raises ParamsError: naming the violated condition.
    """
    if params.case == 'main':
        derived = _validate_main(params)
    elif params.case == 'cor2':
        derived = _validate_cor2(params)
    else:
        _validate_free(params, 3)
        derived = DerivedConstants('cor1')
    logger.debug('Validated %s parameters: %r', params.case, derived)
    return derived
