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

from njt.catalog import cor1_params, cor2_params, example_map, shift_params
from njt.exceptions import ShapeError
from njt.family import build
from njt.jacobian import PolynomialMap, allowed_variables, validate_structured_shape
from njt.utils import master_seed

logger = logging.getLogger('testLogger')


class TestStructuredShape(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_example(self):
        shape = validate_structured_shape(example_map())
        self.assertEqual(shape.n, 3)
        self.assertEqual(shape.r, 3)
        self.assertEqual(shape.case, 'main')
        self.assertFalse(shape.u_y_zero)
        self.assertFalse(shape.u2_x3_zero)

    def test_allowed_variables(self):
        self.assertEqual(allowed_variables(5, 1), {1, 2})
        self.assertEqual(allowed_variables(5, 3), {1, 2, 4})
        self.assertEqual(allowed_variables(5, 5), {1, 2})

    def test_forbidden_variable(self):
        hmap = PolynomialMap.from_strings(['y', 'x3', 'x4', 'x*x3'])
        with self.assertRaises(ShapeError) as context:
            validate_structured_shape(hmap)
        self.assertEqual(context.exception.component, 4)
        self.assertEqual(context.exception.variable, 3)

        hmap = PolynomialMap.from_strings(['z', 'x', '0'])
        with self.assertRaises(ShapeError) as context:
            validate_structured_shape(hmap)
        self.assertEqual(context.exception.component, 1)

    def test_small_dimension(self):
        with self.assertRaises(ShapeError):
            validate_structured_shape(PolynomialMap.from_strings(['y', '0']))

    def test_terminal_index(self):
        self.assertEqual(validate_structured_shape(build(shift_params(5))).r, 5)
        hmap = PolynomialMap.from_strings(['y', 'x3', 'x^2', 'x*y', '0'])
        self.assertEqual(validate_structured_shape(hmap).r, 3)
        hmap = PolynomialMap.from_strings(['y', 'x3', 'x4 + y', 'y^2', 'x'])
        self.assertEqual(validate_structured_shape(hmap).r, 4)

    def test_cases(self):
        self.assertEqual(validate_structured_shape(build(cor1_params())).case, 'cor1')
        shape = validate_structured_shape(build(cor2_params()))
        self.assertEqual(shape.case, 'cor2')
        self.assertTrue(shape.u_y_zero)


if __name__ == '__main__':
    unittest.main()
