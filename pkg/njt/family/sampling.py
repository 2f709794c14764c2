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
Random family members for corpora and the `nj gen --random` command. Coefficients are drawn uniformly from
`{-R, ..., R}` (`R = COEFFICIENT_RANGE`), degrees uniformly up to the caps; candidates are redrawn until they
validate.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from njt import COEFFICIENT_RANGE, MAX_RETRIES
from njt.exceptions import ParamsError
from njt.family.params import FamilyParams, Level, NicePoly, validate_params
from njt.jacobian.polymap import PolynomialMap
from njt.jacobian.shape import allowed_variables
from njt.polyring import Polynomial
from njt.utils import get_rng

logger = logging.getLogger(__name__)


def _coefficient(rng, coefficient_range, nonzero=False):
    if nonzero:
        value = int(rng.randint(1, coefficient_range + 1))
        return value if rng.randint(2) else -value
    return int(rng.randint(-coefficient_range, coefficient_range + 1))


def random_univariate(rng, max_degree, coefficient_range=COEFFICIENT_RANGE, min_degree=0):
    """
    Univariate polynomial of degree drawn uniformly in `min_degree..max_degree` (non-zero leading coefficient when
    the degree is positive).
    """
    degree = int(rng.randint(min_degree, max_degree + 1))
    coefficients = [_coefficient(rng, coefficient_range) for _ in range(degree)]
    coefficients.append(_coefficient(rng, coefficient_range, nonzero=degree > 0))
    return Polynomial.univariate(coefficients)


def random_nice(rng, degree, coefficient_range=COEFFICIENT_RANGE):
    """
    Nice polynomial of the given degree.
    """
    coefficients = [_coefficient(rng, coefficient_range) for _ in range(degree + 1)]
    coefficients[degree - 1] = 0
    coefficients[degree] = _coefficient(rng, coefficient_range, nonzero=True)
    return NicePoly(coefficients)


def random_polynomial(rng, n, variables, max_degree, nb_terms=3, coefficient_range=COEFFICIENT_RANGE):
    """
    Sparse polynomial in the given (1-based) variables with at most `nb_terms` terms of degree at most `max_degree`.
    """
    variables = sorted(variables)
    terms = {}
    for _ in range(int(rng.randint(0, nb_terms + 1))):
        exponents = [0] * n
        for _ in range(int(rng.randint(0, max_degree + 1))):
            exponents[variables[int(rng.randint(len(variables)))] - 1] += 1
        exponents = tuple(exponents)
        terms[exponents] = terms.get(exponents, 0) + _coefficient(rng, coefficient_range)
    return Polynomial(n, terms)


def _free_components(rng, n, first, max_degree, coefficient_range):
    return {i: random_polynomial(rng, n, allowed_variables(n, i), min(max_degree, 2),
                                 coefficient_range=coefficient_range) for i in range(first, n + 1)}


def _candidate_main(rng, n, max_degree, coefficient_range, r):
    if r is None:
        r = int(rng.randint(3, n + 1))
    p = random_univariate(rng, max_degree, coefficient_range, min_degree=1)
    a = random_univariate(rng, min(max_degree, r - 1), coefficient_range)
    levels = []
    for i in range(2, r):
        degree = int(rng.randint(1, min(max_degree, 3) + 1))
        shift = random_univariate(rng, min(max_degree, r - i), coefficient_range)
        levels.append(Level(i, random_nice(rng, degree, coefficient_range), shift))
    b_r = _coefficient(rng, coefficient_range)
    free = _free_components(rng, n, r + 1, max_degree, coefficient_range)
    return FamilyParams.main(n, p, a, r, levels, b_r, free)


def _candidate_cor1(rng, n, max_degree, coefficient_range, r):
    f = random_univariate(rng, max_degree, coefficient_range)
    return FamilyParams.cor1(n, _coefficient(rng, coefficient_range), _coefficient(rng, coefficient_range),
                             _coefficient(rng, coefficient_range), _coefficient(rng, coefficient_range), f,
                             _free_components(rng, n, 3, max_degree, coefficient_range))


def _candidate_cor2(rng, n, max_degree, coefficient_range, r):
    if r is None:
        r = int(rng.randint(3, n + 1))
    chain = {}
    for i in range(2, r):
        part = random_polynomial(rng, n, [1, i + 1], max_degree, coefficient_range=coefficient_range)
        link = Polynomial.variable(n, i + 1) ** int(rng.randint(1, max_degree + 1))
        chain[i] = part + link * _coefficient(rng, coefficient_range, nonzero=True)
    chain[r] = random_polynomial(rng, n, [1], max_degree, coefficient_range=coefficient_range)
    return FamilyParams.cor2(n, _coefficient(rng, coefficient_range), r, chain,
                             _free_components(rng, n, r + 1, max_degree, coefficient_range))


_candidates = {
    'main': _candidate_main,
    'cor1': _candidate_cor1,
    'cor2': _candidate_cor2
}


def sample_params(n, max_degree, rng=None, case='main', r=None, coefficient_range=COEFFICIENT_RANGE,
                  max_retries=MAX_RETRIES):
    """
    Draw random valid family parameters.

    :param n: Dimension, at least 3.
    :type n: `int`
    :param max_degree: Cap on the degrees of the univariate data (nice polynomials are capped at 3).
    :type max_degree: `int`
    :param rng: Random state; drawn from the global numpy generator when `None`.
    :type rng: `np.random.RandomState`
    :param case: `main`, `cor1` or `cor2`.
    :type case: `str`
    :param r: Fixed terminal level, random when `None`.
    :type r: `int`
    :param coefficient_range: Coefficients are drawn from `{-R..R}`.
    :type coefficient_range: `int`
    :param max_retries: Number of candidates drawn before giving up.
    :type max_retries: `int`
    :return: Validated parameters.
    :rtype: `FamilyParams`
    :raises ParamsError: if no valid candidate was found.
    """
    if n < 3:
        raise ParamsError('dimension must be at least 3, got %d.' % n, condition='range')
    if max_degree < 1:
        raise ParamsError('degree cap must be at least 1.', condition='degree')
    if case not in _candidates:
        raise ParamsError('unknown case %r.' % (case,), condition='schema')
    if rng is None:
        rng = get_rng()
    last_error = None
    for attempt in range(1, max_retries + 1):
        params = _candidates[case](rng, n, max_degree, coefficient_range, r)
        try:
            validate_params(params)
        except ParamsError as e:
            last_error = e
            continue
        logger.info('Sampled valid %s parameters (n=%d) after %d attempt(s).', case, n, attempt)
        return params
    raise ParamsError('no valid parameters after %d attempts, last error: %s' % (max_retries, last_error),
                      condition=getattr(last_error, 'condition', None))


def sample_corpus(size, max_degree=2, rng=None, dimensions=(3, 4, 5, 6), cases=('main', 'main', 'cor1', 'cor2')):
    """
    Validated parameters of `size` family members. Consecutive draws run through `cases`, and each full round of
    cases moves on to the next entry of `dimensions`, so every pair of dimension and case is represented.

    :param size: Number of members.
    :type size: `int`
    :param max_degree: Degree cap passed to `sample_params`.
    :type max_degree: `int`
    :param rng: Random state; drawn from the global numpy generator when `None`.
    :type rng: `np.random.RandomState`
    :rtype: `list`
    """
    if rng is None:
        rng = get_rng()
    corpus = []
    for k in range(size):
        n = dimensions[(k // len(cases)) % len(dimensions)]
        corpus.append(sample_params(n, max_degree, rng=rng, case=cases[k % len(cases)]))
    return corpus


def perturb(hmap, rng=None, coefficient_range=COEFFICIENT_RANGE, max_degree=2):
    """
    Add one random monomial to one random component, keeping the structured shape.

    :type hmap: `PolynomialMap`
    :rtype: `PolynomialMap`
    """
    if rng is None:
        rng = get_rng()
    n = hmap.n
    i = int(rng.randint(1, n + 1))
    variables = sorted(allowed_variables(n, i))
    exponents = [0] * n
    for _ in range(int(rng.randint(1, max_degree + 1))):
        exponents[variables[int(rng.randint(len(variables)))] - 1] += 1
    monomial = Polynomial(n, {tuple(exponents): _coefficient(rng, coefficient_range, nonzero=True)})
    return hmap.replace(i, hmap.component(i) + monomial)


def random_map(n, max_degree, rng=None):
    """
    Random polynomial map of degree at most `max_degree` without shape constraints.
    """
    if rng is None:
        rng = get_rng()
    return PolynomialMap([random_polynomial(rng, n, range(1, n + 1), max_degree) for _ in range(n)])
