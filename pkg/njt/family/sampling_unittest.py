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
import unittest

from njt.catalog import example_map
from njt.exceptions import ParamsError
from njt.family import build, perturb, random_map, random_polynomial, sample_corpus, sample_params, validate_params
from njt.family.sampling import random_nice, random_univariate
from njt.jacobian import validate_structured_shape
from njt.utils import get_rng, master_seed

logger = logging.getLogger('testLogger')


class TestSampling(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_deterministic(self):
        first = sample_params(5, 3, rng=get_rng(42))
        second = sample_params(5, 3, rng=get_rng(42))
        self.assertEqual(first.to_json(), second.to_json())
        self.assertEqual(build(first), build(second))

    def test_corpus(self):
        corpus = sample_corpus(16, rng=get_rng(5))
        self.assertEqual([params.n for params in corpus], [3] * 4 + [4] * 4 + [5] * 4 + [6] * 4)
        self.assertEqual([params.case for params in corpus[:4]], ['main', 'main', 'cor1', 'cor2'])
        for params in corpus:
            validate_params(params)

        corpus = sample_corpus(3, rng=get_rng(5), dimensions=(4,), cases=('cor2',))
        self.assertEqual([(params.n, params.case) for params in corpus], [(4, 'cor2')] * 3)
        self.assertEqual([p.to_json() for p in sample_corpus(8, rng=get_rng(9))],
                         [p.to_json() for p in sample_corpus(8, rng=get_rng(9))])

    def test_master_seed(self):
        master_seed(7)
        first = sample_params(4, 2).to_json()
        master_seed(7)
        self.assertEqual(sample_params(4, 2).to_json(), first)

    def test_valid_and_capped(self):
        rng = get_rng(3)
        for case in ['main', 'cor1', 'cor2']:
            for _ in range(20):
                params = sample_params(4, 3, rng=rng, case=case)
                validate_params(params)
                self.assertEqual(params.case, case)
                if case == 'main':
                    self.assertLessEqual(params.a.degree(), min(3, params.r - 1))
                    self.assertGreaterEqual(params.p.degree(), 1)
                    for level in params.levels:
                        self.assertLessEqual(level.nice.degree, 3)
                        self.assertLessEqual(level.shift.degree(), params.r - level.index)

    def test_fixed_terminal_level(self):
        params = sample_params(5, 2, rng=get_rng(8), r=4)
        self.assertEqual(params.r, 4)
        self.assertEqual(validate_structured_shape(build(params)).r, 4)

    def test_bad_arguments(self):
        with self.assertRaises(ParamsError) as context:
            sample_params(2, 2)
        self.assertEqual(context.exception.condition, 'range')
        with self.assertRaises(ParamsError) as context:
            sample_params(3, 0)
        self.assertEqual(context.exception.condition, 'degree')
        with self.assertRaises(ParamsError):
            sample_params(3, 2, case='other')

    def test_retries_exhausted(self):
        with self.assertRaises(ParamsError) as context:
            sample_params(4, 3, rng=get_rng(0), r=4, max_retries=0)
        self.assertIn('no valid parameters', str(context.exception))

    def test_random_pieces(self):
        rng = get_rng(5)
        for _ in range(50):
            poly = random_univariate(rng, 3, min_degree=1)
            self.assertTrue(1 <= poly.degree() <= 3)
            nice = random_nice(rng, 3)
            self.assertEqual(nice.degree, 3)
            self.assertEqual(nice.coefficients[2], 0)
            poly = random_polynomial(rng, 4, [1, 3], 2)
            self.assertTrue(set(poly.variables()) <= {1, 3})
            self.assertLessEqual(poly.degree(), 2)

    def test_perturb_keeps_shape(self):
        rng = get_rng(6)
        hmap = example_map()
        for _ in range(50):
            perturbed = perturb(hmap, rng)
            validate_structured_shape(perturbed)
            self.assertNotEqual(perturbed, hmap)
            self.assertEqual(sum(1 for f, g in zip(hmap, perturbed) if f != g), 1)

    def test_random_map(self):
        hmap = random_map(3, 2, get_rng(9))
        self.assertEqual(hmap.n, 3)
        self.assertLessEqual(hmap.degree(), 2)


if __name__ == '__main__':
    unittest.main()
