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

from njt.catalog import cor1_params, example_map
from njt.family import FamilyParams, build
from njt.jacobian import jacobian_row_dependence, linear_dependence_rank, vector_dependence_rank
from njt.polyring import Polynomial, parse_polynomial, parse_univariate
from njt.utils import master_seed

logger = logging.getLogger('testLogger')


class TestDependence(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_example_components_independent(self):
        rank, kernel = linear_dependence_rank(list(example_map()))
        self.assertEqual(rank, 3)
        self.assertEqual(kernel, [])

    def test_multiple(self):
        p = parse_polynomial('y - x^2', 3)
        rank, kernel = linear_dependence_rank([p, p * 2, Polynomial.zero(3)])
        self.assertEqual(rank, 1)
        self.assertEqual(kernel, [[2, -1, 0], [0, 0, 1]])

    def test_cor1_members_dependent(self):
        hmap = build(cor1_params())
        rank, kernel = linear_dependence_rank(list(hmap))
        self.assertEqual(rank, 1)
        self.assertIn([1, 1, 0], kernel)

    def test_affine_relation(self):
        params = FamilyParams.cor1(3, 1, 1, 1, 2, parse_univariate('T^2'))
        hmap = build(params)
        rank, _ = linear_dependence_rank(list(hmap))
        self.assertEqual(rank, 2)
        rank, kernel = linear_dependence_rank(list(hmap) + [Polynomial.one(3)])
        self.assertEqual(rank, 2)
        self.assertEqual(kernel, [[0, 0, 1, 0], [1, 1, 0, -3]])

    def test_jacobian_rows(self):
        rank, kernel = jacobian_row_dependence(example_map().jacobian())
        self.assertEqual(rank, 3)
        self.assertEqual(kernel, [])
        rank, kernel = jacobian_row_dependence(build(cor1_params()).jacobian())
        self.assertEqual(rank, 1)
        self.assertEqual(kernel, [[1, 1, 0], [0, 0, 1]])

    def test_degenerate(self):
        self.assertEqual(vector_dependence_rank([]), (0, []))
        zero = Polynomial.zero(2)
        self.assertEqual(vector_dependence_rank([[zero], [zero]]), (0, [[1, 0], [0, 1]]))


if __name__ == '__main__':
    unittest.main()
