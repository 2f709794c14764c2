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

from njt.catalog import cor1_params, cor2_params, example_params, five_dimensional_params
from njt.exceptions import ParamsError, ParseError
from njt.family import DerivedConstants, FamilyParams, Level, NicePoly, build, derive_coefficients, validate_params
from njt.polyring import Polynomial, parse_polynomial, parse_univariate
from njt.utils import master_seed

logger = logging.getLogger('testLogger')


def _x(text):
    return parse_polynomial(text, 1)


def _main(a='-x^2', levels=None, r=3, n=3, p='T', b_r=0, free=None):
    if levels is None:
        levels = [Level(2, NicePoly([0, 1]), Polynomial.zero(1))]
    return FamilyParams.main(n, parse_univariate(p), _x(a), r, levels, b_r, free)


class TestNicePoly(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_nice(self):
        nice = NicePoly([1, 0, 3])
        self.assertEqual(nice.degree, 2)
        self.assertEqual(nice.leading, 3)
        self.assertEqual(nice.as_polynomial(), parse_univariate('3*T^2 + 1'))
        self.assertEqual(NicePoly([0, 1, 0, 0]).degree, 1)
        self.assertEqual(NicePoly.from_polynomial(parse_univariate('T^3 - 2*T')), NicePoly([0, -2, 0, 1]))

    def test_not_nice(self):
        for coefficients in [[0, 1, 1], [5], [], [1, 2, 3, 4]]:
            with self.assertRaises(ParamsError) as context:
                NicePoly(coefficients)
            self.assertEqual(context.exception.condition, 'nice')
            self.assertIn('condition nice violated', str(context.exception))


class TestValidation(unittest.TestCase):
    def setUp(self):
        master_seed(1234)

    def test_example_constants(self):
        derived = validate_params(example_params())
        self.assertIsInstance(derived, DerivedConstants)
        self.assertEqual(derived.r, 3)
        self.assertEqual(derived.s, 2)
        self.assertEqual(derived.d, {1: 2, 2: 1})
        self.assertEqual(derived.L, {1: 1, 2: 1})
        self.assertEqual(derived.c[2], [_x('2*x')])
        self.assertEqual(derived.c[3], [Polynomial.zero(1), Polynomial.constant(1, -1)])
        self.assertEqual(derived.n_h, 1)

    def test_derive_coefficients(self):
        coefficients = derive_coefficients(five_dimensional_params())
        self.assertEqual(coefficients[2], [_x('3')])
        self.assertEqual(coefficients[3], [_x('-1/3')])
        self.assertEqual(coefficients[4], [_x('-2')])
        self.assertEqual(coefficients[5], [_x('1/2')])

    def test_five_dimensional(self):
        derived = validate_params(five_dimensional_params())
        self.assertEqual(derived.s, 5)
        self.assertEqual(derived.r, 5)
        self.assertEqual(derived.n_h, 3)
        self.assertEqual(derived.L[4], 2)
        self.assertEqual(derived.gamma(1, 1), Fraction(1, 2))
        with self.assertRaises(ValueError):
            derived.gamma(2, 1)

    def test_condition_a(self):
        params = _main(levels=[Level(2, NicePoly([0, 0, 1]), Polynomial.zero(1))])
        with self.assertRaises(ParamsError) as context:
            validate_params(params)
        self.assertEqual(context.exception.condition, '(a)')

    def test_condition_b(self):
        levels = [Level(2, NicePoly([0, 1]), _x('x^2')), Level(3, NicePoly([0, 0, 1]), Polynomial.zero(1))]
        with self.assertRaises(ParamsError) as context:
            validate_params(_main(levels=levels, r=4, n=4))
        self.assertEqual(context.exception.condition, '(b)')

        levels = [Level(2, NicePoly([0, 1]), Polynomial.zero(1), coefficients=[_x('3*x')])]
        with self.assertRaises(ParamsError) as context:
            validate_params(_main(levels=levels))
        self.assertEqual(context.exception.condition, '(b)')

        levels = [Level(2, NicePoly([0, 1]), Polynomial.zero(1), coefficients=[_x('2*x'), _x('0')])]
        validate_params(_main(levels=levels))

    def test_condition_c(self):
        with self.assertRaises(ParamsError) as context:
            validate_params(_main(a='-x^3'))
        self.assertEqual(context.exception.condition, '(c)')

    def test_condition_d(self):
        with self.assertRaises(ParamsError) as context:
            validate_params(_main(n=4, free={4: parse_polynomial('z', 4)}))
        self.assertEqual(context.exception.condition, '(d)')
        validate_params(_main(n=4, free={4: parse_polynomial('x*y', 4)}))

    def test_range_and_schema(self):
        with self.assertRaises(ParamsError) as context:
            validate_params(_main(r=5, n=4))
        self.assertEqual(context.exception.condition, 'range')
        with self.assertRaises(ParamsError) as context:
            validate_params(_main(r=4, n=4))
        self.assertEqual(context.exception.condition, 'schema')
        with self.assertRaises(ParamsError) as context:
            validate_params(_main(p='3'))
        self.assertEqual(context.exception.condition, 'degree')
        with self.assertRaises(ParamsError) as context:
            FamilyParams(2, 'main')
        self.assertEqual(context.exception.condition, 'range')
        with self.assertRaises(ParamsError):
            FamilyParams(3, 'other')

    def test_cor2(self):
        self.assertEqual(validate_params(cor2_params()).case, 'cor2')
        params = FamilyParams.cor2(3, 1, 3, {2: parse_polynomial('x', 3), 3: parse_polynomial('x', 3)})
        with self.assertRaises(ParamsError) as context:
            validate_params(params)
        self.assertEqual(context.exception.condition, 'cor2')
        params = FamilyParams.cor2(3, 1, 3, {2: parse_polynomial('z', 3), 3: parse_polynomial('y', 3)})
        with self.assertRaises(ParamsError):
            validate_params(params)

    def test_cor1(self):
        self.assertEqual(validate_params(cor1_params()).case, 'cor1')


class TestParamsJson(unittest.TestCase):
    def setUp(self):
        master_seed(1234)

    def test_round_trip(self):
        for params in [example_params(), five_dimensional_params(), cor1_params(), cor2_params()]:
            again = FamilyParams.from_json(params.to_json())
            self.assertEqual(again.to_json(), params.to_json())
            self.assertEqual(build(again), build(params))

    def test_file_content(self):
        content = {'n': 3, 'p': 'T', 'a': '-x^2', 'r': 3, 'levels': [{'i': 2, 'P': ['0', '1'], 'b': '0'}],
                   'terminal': {'b_r': '0'}}
        self.assertEqual(build(FamilyParams.from_json(content)), build(example_params()))

    def test_malformed(self):
        with self.assertRaises(ParamsError) as context:
            FamilyParams.from_json({'n': 3, 'r': 3})
        self.assertEqual(context.exception.condition, 'schema')
        with self.assertRaises(ParamsError):
            FamilyParams.from_json({'n': 3, 'case': 'cor3'})
        with self.assertRaises(ParseError):
            FamilyParams.from_json({'n': 3, 'p': 'T +', 'r': 3})
        with self.assertRaises(ParamsError) as context:
            FamilyParams.from_json({'n': 3, 'p': 'T', 'r': 3, 'levels': [{'i': 2, 'P': ['0', '1', '1']}]})
        self.assertEqual(context.exception.condition, 'nice')


if __name__ == '__main__':
    unittest.main()
