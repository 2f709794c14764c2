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
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import time
import unittest

from njt.catalog import cor1_params, cor2_params, example_map, five_dimensional_params
from njt.exceptions import SingularMatrixError
from njt.family import build, sample_corpus
from njt.inverter import ElementaryFactor, FactorSequence, compose_factors, decompose, formal_inverse, \
    invert_factor_sequence, linear_matrix, verify_inverse
from njt.jacobian import PolynomialMap
from njt.polyring import parse_polynomial
from njt.utils import get_rng, master_seed

logger = logging.getLogger('testLogger')

NB_ROUND_TRIPS = 100
MAX_SECONDS = 120


def _with_identity(hmap):
    return hmap + PolynomialMap.identity(hmap.n)


class TestFormalInverse(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_triangular(self):
        fmap = PolynomialMap.from_strings(['x + y^2', 'y'])
        result = formal_inverse(fmap)
        self.assertTrue(result.exact)
        self.assertEqual(result.degree_bound, 2)
        self.assertEqual(result.inverse, PolynomialMap.from_strings(['x - y^2', 'y']))

    def test_identity(self):
        result = formal_inverse(PolynomialMap.identity(4))
        self.assertTrue(result.exact)
        self.assertTrue(result.inverse.is_identity())

    def test_stops_before_bound(self):
        fmap = PolynomialMap.from_strings(['x + y^2', 'y'])
        with self.assertLogs('njt.inverter.formal_inverse', level='DEBUG') as logs:
            result = formal_inverse(fmap, degree_bound=50)
        self.assertTrue(result.exact)
        self.assertEqual(result.degree_bound, 50)
        self.assertEqual(result.inverse, PolynomialMap.from_strings(['x - y^2', 'y']))
        self.assertTrue(any('closed at degree 2' in line for line in logs.output))

    def test_affine(self):
        fmap = PolynomialMap.from_strings(['2*x + 1', 'x + y - 3'])
        result = formal_inverse(fmap)
        self.assertTrue(result.exact)
        self.assertEqual(result.inverse, PolynomialMap.from_strings(['1/2*x - 1/2', '-1/2*x + y + 7/2']))

    def test_linear_matrix(self):
        matrix = linear_matrix(PolynomialMap.from_strings(['2*x + y^2 + 1', '3*y - x']))
        self.assertEqual(matrix.tolist(), [[2, 0], [-1, 3]])

    def test_singular(self):
        with self.assertRaises(SingularMatrixError):
            formal_inverse(PolynomialMap.from_strings(['x^2', 'y']))

    def test_not_invertible(self):
        fmap = PolynomialMap.from_strings(['x + y^2', 'y + x^2'])
        result = formal_inverse(fmap, degree_bound=6)
        self.assertFalse(result.exact)
        self.assertFalse(verify_inverse(fmap, result.inverse))

    def test_example(self):
        fmap = _with_identity(example_map())
        sequence = decompose(fmap)
        expected = compose_factors(invert_factor_sequence(sequence))
        result = formal_inverse(fmap, degree_bound=expected.degree())
        self.assertTrue(result.exact)
        self.assertEqual(result.inverse, expected)
        self.assertTrue(verify_inverse(fmap, expected))
        self.assertTrue(verify_inverse(fmap, expected, sequence))

        # default bound deg(F)^(n-1)
        result = formal_inverse(fmap, factors=sequence)
        self.assertTrue(result.exact)
        self.assertEqual(result.inverse, expected)

    def test_verify_along_factors(self):
        fmap = _with_identity(example_map())
        sequence = decompose(fmap)
        expected = compose_factors(invert_factor_sequence(sequence))
        self.assertFalse(verify_inverse(fmap, PolynomialMap.identity(3), sequence))
        # perturbed in the first component
        wrong = expected.replace(1, expected.component(1) + parse_polynomial('z^2', 3))
        self.assertFalse(verify_inverse(fmap, wrong, sequence))
        self.assertFalse(verify_inverse(fmap, wrong))

        other = FactorSequence(3, [ElementaryFactor(1, parse_polynomial('y', 3))])
        with self.assertRaises(ValueError):
            verify_inverse(fmap, expected, other)

    def test_fixtures(self):
        for params in [five_dimensional_params(), cor1_params(), cor2_params()]:
            fmap = _with_identity(build(params))
            sequence = decompose(fmap)
            expected = compose_factors(invert_factor_sequence(sequence))
            self.assertTrue(verify_inverse(fmap, expected, sequence))
            result = formal_inverse(fmap, degree_bound=expected.degree(), factors=sequence)
            self.assertTrue(result.exact)
            self.assertEqual(result.inverse, expected)

    def test_inversion_round_trip(self):
        start = time.time()
        corpus = sample_corpus(NB_ROUND_TRIPS, rng=get_rng(2))
        for params in corpus:
            fmap = _with_identity(build(params))
            sequence = decompose(fmap)
            self.assertEqual(compose_factors(sequence), fmap)
            expected = compose_factors(invert_factor_sequence(sequence))
            self.assertTrue(verify_inverse(fmap, expected, sequence), msg=str(params.to_json()))
            result = formal_inverse(fmap, degree_bound=max(1, int(expected.degree())), factors=sequence)
            self.assertTrue(result.exact)
            self.assertEqual(result.inverse, expected)
        elapsed = time.time() - start
        logger.info('Inverted %d members in %.1f s.', len(corpus), elapsed)
        self.assertEqual(set(params.n for params in corpus), {3, 4, 5, 6})
        self.assertLess(elapsed, MAX_SECONDS)


if __name__ == '__main__':
    unittest.main()
