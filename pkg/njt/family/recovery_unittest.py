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

from njt.catalog import cor1_params, cor2_params, cor2_params_with_free, example_map, five_dimensional_params
from njt.exceptions import RecoveryError, ShapeError
from njt.family import FamilyParams, build, expand_in_powers, recover_cor1, recover_cor2, recover_family, \
    recover_params, sample_params
from njt.jacobian import PolynomialMap
from njt.polyring import Polynomial, parse_polynomial, parse_univariate
from njt.utils import get_rng, master_seed

logger = logging.getLogger('testLogger')

NB_ROUND_TRIPS = 50


class TestExpansion(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_powers_of_u(self):
        p = parse_univariate('T^2 + T')
        a = parse_polynomial('-x', 1)
        u = parse_polynomial('(y - x)^2 + y - x', 3)
        poly = u * u * parse_polynomial('x', 3) + u * 3 + parse_polynomial('x^2', 3)
        expansion = expand_in_powers(poly, p, a)
        self.assertEqual(expansion, {0: parse_polynomial('x^2', 1), 1: Polynomial.constant(1, 3),
                                     2: parse_polynomial('x', 1)})

    def test_not_expandable(self):
        with self.assertRaises(RecoveryError):
            expand_in_powers(parse_polynomial('y', 3), parse_univariate('T^2'), Polynomial.zero(1), 2)
        with self.assertRaises(RecoveryError) as context:
            expand_in_powers(parse_polynomial('z', 3), parse_univariate('T'), Polynomial.zero(1), 3)
        self.assertEqual(context.exception.component, 3)


class TestRecovery(unittest.TestCase):
    def setUp(self):
        master_seed(1234)

    def test_example(self):
        params = recover_params(example_map())
        self.assertEqual(params.p, parse_univariate('T'))
        self.assertEqual(params.a, parse_polynomial('-x^2', 1))
        self.assertEqual(params.r, 3)
        self.assertEqual(params.level(2).nice.coefficients, (0, 1))
        self.assertTrue(params.level(2).shift.is_zero())
        self.assertEqual(params.b_r, 0)

    def test_five_dimensional(self):
        params = five_dimensional_params()
        recovered = recover_params(build(params))
        self.assertEqual(recovered.to_json(), params.to_json())

    def test_outside_family(self):
        hmap = PolynomialMap.from_strings(['y', 'z + y^2', '-y'])
        with self.assertRaises(RecoveryError) as context:
            recover_params(hmap)
        self.assertEqual(context.exception.component, 2)
        with self.assertRaises(RecoveryError):
            recover_family(hmap)

        # level 2 carries x*u instead of the derived 2*x*u
        hmap = PolynomialMap.from_strings(['y - x^2', 'z + x*(y - x^2)', '-(y - x^2)^2'])
        with self.assertRaises(RecoveryError) as context:
            recover_params(hmap)
        self.assertEqual(context.exception.component, 2)

        hmap = PolynomialMap.from_strings(['y - x^2', 'z + 2*x*(y - x^2)', '-(y - x^2)^2 + x'])
        with self.assertRaises(RecoveryError) as context:
            recover_params(hmap)
        self.assertEqual(context.exception.component, 3)

    def test_not_structured(self):
        with self.assertRaises(ShapeError):
            recover_family(PolynomialMap.from_strings(['z', 'x', '0']))

    def test_wrong_case(self):
        with self.assertRaises(RecoveryError):
            recover_params(build(cor2_params()))
        with self.assertRaises(RecoveryError):
            recover_cor1(example_map())
        with self.assertRaises(RecoveryError):
            recover_cor2(example_map())

    def test_cor1_normalisation(self):
        params = FamilyParams.cor1(3, 2, 2, 1, -1, parse_univariate('T^2'))
        hmap = build(params)
        recovered = recover_family(hmap)
        self.assertEqual(recovered.case, 'cor1')
        self.assertEqual((recovered.lambda1, recovered.lambda2), (1, 1))
        self.assertEqual((recovered.c1, recovered.c2), (1, -1))
        self.assertEqual(recovered.f, parse_univariate('8*T^2'))
        self.assertEqual(build(recovered), hmap)

        recovered = recover_cor1(build(cor1_params()))
        self.assertEqual(recovered.to_json(), cor1_params().to_json())

    def test_cor1_vertical(self):
        hmap = PolynomialMap.from_strings(['3', 'x^2 + 5', '0'])
        recovered = recover_family(hmap)
        self.assertEqual((recovered.lambda1, recovered.lambda2), (1, 0))
        self.assertEqual(recovered.f, parse_univariate('-T^2'))
        self.assertEqual(build(recovered), hmap)

    def test_cor2(self):
        for params in [cor2_params(), cor2_params_with_free()]:
            recovered = recover_family(build(params))
            self.assertEqual(recovered.to_json(), params.to_json())

    def test_round_trip(self):
        rng = get_rng(77)
        cases = ['main', 'main', 'cor1', 'cor2']
        for k in range(NB_ROUND_TRIPS):
            params = sample_params(int(rng.randint(3, 5)), 2, rng=rng, case=cases[k % 4])
            hmap = build(params)
            recovered = recover_family(hmap)
            self.assertEqual(recovered.case, params.case)
            self.assertEqual(build(recovered), hmap)
            if params.case == 'main' and params.a.constant_term() == 0:
                self.assertEqual(recovered.p, params.p)
                self.assertEqual(recovered.a, params.a)


if __name__ == '__main__':
    unittest.main()
