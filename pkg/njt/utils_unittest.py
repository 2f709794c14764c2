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

import json
import logging
import os
import shutil
import tempfile
import unittest
from fractions import Fraction

import numpy as np

from njt.exceptions import ParseError, SingularMatrixError
from njt.utils import determinant, dumps_json, get_rng, inverse, inverse_factorial, master_seed, null_space, \
    primitive_integer_vector, rank, rational_matrix, rational_str, read_json, row_echelon, to_rational, \
    write_json_atomic

logger = logging.getLogger('testLogger')


class TestSeeding(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_master_seed_py(self):
        import random

        master_seed(1234)
        x = random.getrandbits(128)
        y = random.getrandbits(128)

        master_seed(1234)
        z = random.getrandbits(128)
        self.assertNotEqual(x, y)
        self.assertEqual(z, x)

    def test_master_seed_np(self):
        master_seed(1234)
        x = np.random.uniform(size=10)
        y = np.random.uniform(size=10)

        master_seed(1234)
        z = np.random.uniform(size=10)
        self.assertFalse((x == y).any())
        self.assertTrue((x == z).all())

    def test_master_seed_type(self):
        with self.assertRaises(TypeError):
            master_seed(1.2)

    def test_get_rng(self):
        x = get_rng(42).randint(0, 1000, size=10)
        y = get_rng(42).randint(0, 1000, size=10)
        self.assertTrue((x == y).all())

        master_seed(1234)
        a = get_rng().randint(0, 1000, size=10)
        master_seed(1234)
        b = get_rng().randint(0, 1000, size=10)
        self.assertTrue((a == b).all())


class TestRationals(unittest.TestCase):
    def setUp(self):
        master_seed(1234)

    def test_to_rational(self):
        self.assertEqual(to_rational(3), Fraction(3))
        self.assertEqual(to_rational('-3/2'), Fraction(-3, 2))
        self.assertEqual(to_rational(Fraction(1, 3)), Fraction(1, 3))
        for value in ['1/0', 'abc', True, 1.5]:
            with self.assertRaises(ParseError):
                to_rational(value)

    def test_rational_str(self):
        self.assertEqual(rational_str(Fraction(4, 2)), '2')
        self.assertEqual(rational_str(Fraction(-3, 6)), '-1/2')

    def test_inverse_factorial(self):
        self.assertEqual(inverse_factorial(0), 1)
        self.assertEqual(inverse_factorial(5), Fraction(1, 120))
        self.assertEqual(inverse_factorial(25) * 15511210043330985984000000, 1)


class TestLinearAlgebra(unittest.TestCase):
    def setUp(self):
        master_seed(1234)

    def test_row_echelon(self):
        matrix = rational_matrix([[2, 4, 2], [1, 2, 3], [0, 0, 1]])
        reduced, pivots = row_echelon(matrix)
        self.assertEqual(pivots, [0, 2])
        self.assertEqual(reduced.tolist(), [[1, 2, 0], [0, 0, 1], [0, 0, 0]])
        # input untouched
        self.assertEqual(matrix[0, 0], 2)

    def test_rank_and_null_space(self):
        matrix = rational_matrix([[1, 2, 3], [2, 4, 6]])
        self.assertEqual(rank(matrix), 1)
        kernel = null_space(matrix)
        self.assertEqual(len(kernel), 2)
        for vector in kernel:
            self.assertTrue(all(v == 0 for v in matrix.dot(np.array(vector, dtype=object))))
        self.assertEqual(rank(rational_matrix([])), 0)

    def test_primitive_integer_vector(self):
        self.assertEqual(primitive_integer_vector([Fraction(-1), Fraction(1, 2), 0]), [2, -1, 0])
        self.assertEqual(primitive_integer_vector([0, Fraction(4, 3), Fraction(-2, 3)]), [0, 2, -1])
        self.assertEqual(primitive_integer_vector([0, 0]), [0, 0])

    def test_determinant(self):
        self.assertEqual(determinant(rational_matrix([[0, 1], [1, 0]])), -1)
        self.assertEqual(determinant(rational_matrix([[Fraction(1, 2), 3], [1, 4]])), -1)
        self.assertEqual(determinant(rational_matrix([[1, 2], [2, 4]])), 0)

    def test_random_inverse(self):
        for _ in range(20):
            values = np.random.randint(-5, 6, size=(4, 4)).tolist()
            matrix = rational_matrix(values)
            if determinant(matrix) == 0:
                with self.assertRaises(SingularMatrixError):
                    inverse(matrix)
                continue
            product = matrix.dot(inverse(matrix))
            self.assertEqual(product.tolist(), np.eye(4, dtype=int).tolist())

    def test_singular(self):
        with self.assertRaises(SingularMatrixError):
            inverse(rational_matrix([[1, 2], [2, 4]]))


class TestFiles(unittest.TestCase):
    def setUp(self):
        master_seed(1234)
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)

    def test_write_and_read(self):
        path = os.path.join(self.folder, 'sub', 'content.json')
        write_json_atomic(path, {'b': 1, 'a': ['x']})
        self.assertEqual(read_json(path), {'a': ['x'], 'b': 1})
        with open(path) as f:
            self.assertEqual(f.read(), dumps_json({'a': ['x'], 'b': 1}) + '\n')
        self.assertEqual(os.listdir(os.path.dirname(path)), ['content.json'])

    def test_sorted_keys(self):
        self.assertEqual(json.loads(dumps_json({'b': 1, 'a': 2})), {'a': 2, 'b': 1})
        self.assertLess(dumps_json({'b': 1, 'a': 2}).index('"a"'), dumps_json({'b': 1, 'a': 2}).index('"b"'))

    def test_invalid_json(self):
        path = os.path.join(self.folder, 'broken.json')
        with open(path, 'w') as f:
            f.write('{"n": 3,')
        with self.assertRaises(ParseError):
            read_json(path)


if __name__ == '__main__':
    unittest.main()
