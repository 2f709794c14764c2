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
from fractions import Fraction

from hypothesis import given, settings

from njt.exceptions import ParseError
from njt.polyring import Polynomial, format_polynomial, parse_polynomial, parse_univariate
from tests.strategies import polynomials_any_dimension

logger = logging.getLogger('testLogger')


class TestParser(unittest.TestCase):
    def test_example_component(self):
        p = parse_polynomial('y - x^2', 3)
        self.assertEqual(p, Polynomial(3, {(0, 1, 0): 1, (2, 0, 0): -1}))

    def test_zero(self):
        self.assertTrue(parse_polynomial('0', 2).is_zero())

    def test_negated_square(self):
        self.assertEqual(parse_polynomial('-(y - x^2)^2', 3), parse_polynomial('-y^2 + 2*x^2*y - x^4', 3))

    def test_aliases(self):
        self.assertEqual(parse_polynomial('z', 3), parse_polynomial('x3', 3))
        self.assertEqual(parse_polynomial('x1 + x2', 2), parse_polynomial('x + y', 2))
        self.assertEqual(parse_univariate('T^3 - 2*T'), Polynomial.univariate([0, -2, 0, 1]))

    def test_rationals(self):
        p = parse_polynomial('3/2*x - 1/3', 1)
        self.assertEqual(p.coefficient((1,)), Fraction(3, 2))
        self.assertEqual(p.constant_term(), Fraction(-1, 3))
        self.assertEqual(parse_polynomial('4/2', 1), 2)

    def test_precedence(self):
        self.assertEqual(parse_polynomial('2*x^2', 1), Polynomial.univariate([0, 0, 2]))
        self.assertEqual(parse_polynomial('1 - x - x', 1), Polynomial.univariate([1, -2]))
        self.assertEqual(parse_polynomial(' ( x + 1 ) ^ 2 ', 1), Polynomial.univariate([1, 2, 1]))

    def test_syntax_errors(self):
        cases = {
            'x +': 3,
            'x y': 2,
            'x*-y': 2,
            '2x': 1,
            'x ^ -1': 4,
            '(x': 2,
            'x ? y': 2,
            '1/0': 2,
            'x/2': 1,
        }
        for text, position in cases.items():
            with self.assertRaises(ParseError) as context:
                parse_polynomial(text, 3)
            self.assertEqual(context.exception.position, position, text)

    def test_variable_out_of_range(self):
        with self.assertRaises(ParseError):
            parse_polynomial('x4', 3)
        with self.assertRaises(ParseError):
            parse_polynomial('x0', 3)
        with self.assertRaises(ParseError):
            parse_polynomial('w', 3)

    def test_printer_names(self):
        self.assertEqual(format_polynomial(parse_polynomial('x3*x4 - y', 4)), '-y + x3*x4')

    @settings(max_examples=1000, deadline=None)
    @given(polynomials_any_dimension())
    def test_round_trip(self, p):
        text = format_polynomial(p)
        parsed = parse_polynomial(text, p.n)
        self.assertEqual(parsed, p)
        self.assertEqual(format_polynomial(parsed), text)


if __name__ == '__main__':
    unittest.main()
