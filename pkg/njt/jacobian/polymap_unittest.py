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

from hypothesis import given, settings
from hypothesis import strategies as st

from njt.catalog import example_map
from njt.exceptions import DimensionError, ParseError
from njt.jacobian import PolyMatrix, PolynomialMap
from njt.polyring import Polynomial, parse_polynomial
from njt.utils import master_seed
from tests.strategies import polynomials

logger = logging.getLogger('testLogger')


def _maps(n, max_degree=2):
    return st.lists(polynomials(n, max_degree, 4, st.integers(-5, 5)), min_size=n, max_size=n).map(PolynomialMap)


class TestPolynomialMap(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_identity(self):
        identity = PolynomialMap.identity(3)
        self.assertTrue(identity.is_identity())
        self.assertEqual(identity.to_strings(), ['x', 'y', 'x3'])
        hmap = example_map()
        self.assertEqual(hmap.compose(identity), hmap)
        self.assertEqual(identity.compose(hmap), hmap)

    def test_components(self):
        hmap = example_map()
        self.assertEqual(hmap.n, 3)
        self.assertEqual(hmap.component(1), parse_polynomial('y - x^2', 3))
        self.assertEqual(hmap[0], hmap.component(1))
        self.assertEqual(hmap.degree(), 4)
        replaced = hmap.replace(3, Polynomial.zero(3))
        self.assertTrue(replaced.component(3).is_zero())
        self.assertFalse(hmap.component(3).is_zero())

    def test_compose(self):
        f = PolynomialMap.from_strings(['x + y^2', 'y'])
        g = PolynomialMap.from_strings(['x - y^2', 'y'])
        self.assertTrue(f.compose(g).is_identity())
        shear = PolynomialMap.from_strings(['x', 'y + x'])
        self.assertEqual(f.compose(shear).to_strings(), ['y^2 + 2*x*y + x^2 + x', 'y + x'])

    def test_compose_truncated(self):
        f = PolynomialMap.from_strings(['x^3', 'y'])
        g = PolynomialMap.from_strings(['x + y', 'y'])
        self.assertEqual(f.compose(g, max_degree=2).component(1), 0)
        self.assertEqual(f.compose(g, max_degree=3), f.compose(g))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            PolynomialMap.identity(2).compose(PolynomialMap.identity(3))
        with self.assertRaises(DimensionError):
            _ = PolynomialMap.identity(2) + PolynomialMap.identity(3)

    def test_json(self):
        hmap = example_map()
        self.assertEqual(PolynomialMap.from_json(hmap.to_json()), hmap)
        for content in [{'n': 2}, {'n': 2, 'components': ['x']}, [], {'n': 0, 'components': []}]:
            with self.assertRaises(ParseError):
                PolynomialMap.from_json(content)
        with self.assertRaises(ParseError):
            PolynomialMap.from_json({'n': 2, 'components': ['x +', 'y']})

    def test_evaluate(self):
        self.assertEqual(example_map().evaluate([1, 2, 3]), [1, 5, -1])
        self.assertEqual(example_map().constant_part(), [0, 0, 0])

    def test_example_jacobian(self):
        jac = example_map().jacobian()
        expected = [['-2*x', '1', '0'],
                    ['2*y - 6*x^2', '2*x', '1'],
                    ['4*x*y - 4*x^3', '-2*y + 2*x^2', '0']]
        for i in range(3):
            for j in range(3):
                self.assertEqual(jac.entry(i, j), parse_polynomial(expected[i][j], 3))

    @given(_maps(2), _maps(2))
    @settings(max_examples=100, deadline=None)
    def test_chain_rule(self, f, g):
        # J(f o g) = (Jf o g) . Jg
        left = f.compose(g).jacobian()
        images = {i + 1: component for i, component in enumerate(g)}
        right = f.jacobian().substitute(images) * g.jacobian()
        self.assertEqual(left, right)

    @given(_maps(3, 1), _maps(3, 1), _maps(3, 1))
    @settings(max_examples=100, deadline=None)
    def test_compose_associative(self, f, g, h):
        self.assertEqual(f.compose(g).compose(h), f.compose(g.compose(h)))


class TestPolyMatrix(unittest.TestCase):
    def setUp(self):
        master_seed(1234)

    def test_identity_and_power(self):
        identity = PolyMatrix.identity(3, 3)
        self.assertEqual(identity.trace(), 3)
        self.assertEqual(identity.power(4), identity)
        self.assertEqual(example_map().jacobian().power(0), identity)

    def test_not_square(self):
        one = Polynomial.one(2)
        with self.assertRaises(DimensionError):
            PolyMatrix([[one, one]])
        with self.assertRaises(DimensionError):
            PolyMatrix([[one, Polynomial.one(3)], [one, one]])

    def test_determinant(self):
        x, y = Polynomial.variable(2, 1), Polynomial.variable(2, 2)
        matrix = PolyMatrix([[x, y], [y, x]])
        self.assertEqual(matrix.determinant(), x * x - y * y)
        self.assertEqual(PolyMatrix.identity(4, 2).determinant(), 1)

    def test_example_cube_vanishes(self):
        jac = example_map().jacobian()
        self.assertFalse(jac.power(2).is_zero())
        self.assertTrue(jac.power(3).is_zero())


if __name__ == '__main__':
    unittest.main()
