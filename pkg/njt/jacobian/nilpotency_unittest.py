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

from njt.catalog import cor1_params, cor2_params, example_map, five_dimensional_params
from njt.exceptions import InconsistencyError, ShapeError
from njt.family import build, perturb, random_map, sample_params
from njt.jacobian import CharacteristicCheck, EquationCheck, MatrixPowerCheck, PolyMatrix, PolynomialMap
from njt.jacobian import char_coefficients, characteristic_determinant, check_nilpotent, get_checker
from njt.jacobian import is_nilpotent_power, keller_determinant, nilpotency_equations, nilpotency_index
from njt.jacobian import structured_char_recursion, supported_methods
from njt.polyring import Polynomial
from njt.utils import get_rng, master_seed
from tests.strategies import polynomials

logger = logging.getLogger('testLogger')

NB_CORPUS = 100
ALL_METHODS = ('power', 'char', 'equations')


def _corpus(rng, size):
    maps = []
    cases = ['main', 'cor1', 'cor2']
    for k in range(size):
        n = int(rng.randint(3, 5))
        params = sample_params(n, 2, rng=rng, case=cases[k % 3])
        maps.append(build(params))
    return maps


class TestNilpotencyMethods(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_example(self):
        hmap = example_map()
        self.assertEqual(check_nilpotent(hmap), {'power': True, 'char': True, 'equations': True})
        self.assertEqual(nilpotency_index(hmap.jacobian()), 3)
        self.assertTrue(is_nilpotent_power(hmap.jacobian()))
        self.assertEqual(keller_determinant(hmap), 1)
        self.assertTrue(all(r.is_zero() for r in nilpotency_equations(hmap)))

    def test_identity_plus_square(self):
        hmap = PolynomialMap.from_strings(['x^2', '0', '0'])
        verdicts = check_nilpotent(hmap)
        self.assertFalse(any(verdicts.values()))
        self.assertEqual(char_coefficients(hmap.jacobian())[0], Polynomial.variable(3, 1) * 2)
        self.assertIsNone(nilpotency_index(hmap.jacobian()))

    def test_char_of_identity(self):
        coefficients = char_coefficients(PolyMatrix.identity(2, 1))
        self.assertEqual(coefficients, [2, 1])

    def test_characteristic_determinant_variables(self):
        det = characteristic_determinant(example_map().jacobian())
        self.assertEqual(det.n, 4)
        self.assertEqual(det, 1)

    def test_registry(self):
        self.assertEqual(sorted(supported_methods), ['char', 'equations', 'power'])
        self.assertIsInstance(get_checker('power'), MatrixPowerCheck)
        self.assertIsInstance(get_checker('char'), CharacteristicCheck)
        self.assertIsInstance(get_checker('equations'), EquationCheck)
        self.assertEqual(get_checker('power', {'exponent': 2}).exponent, 2)
        with self.assertRaises(NotImplementedError):
            get_checker('trace')

    def test_params(self):
        with self.assertRaises(ValueError):
            MatrixPowerCheck(exponent=0)
        with self.assertRaises(ValueError):
            CharacteristicCheck(exponent=2)
        # J^2 of the example does not vanish, J^3 does
        hmap = example_map()
        self.assertFalse(MatrixPowerCheck(exponent=2).is_nilpotent(hmap))
        self.assertTrue(MatrixPowerCheck(exponent=3).is_nilpotent(hmap))

    def test_equations_need_shape(self):
        hmap = PolynomialMap.from_strings(['z', '0', '0'])
        with self.assertRaises(ShapeError):
            EquationCheck().residuals(hmap)
        with self.assertRaises(ShapeError):
            check_nilpotent(hmap)
        self.assertEqual(check_nilpotent(hmap, ('power', 'char')), {'power': True, 'char': True})

    def test_disagreement(self):
        class _Liar(CharacteristicCheck):
            name = 'liar'

            def residuals(self, hmap):
                return [Polynomial.one(hmap.n)]

        supported_methods['liar'] = _Liar
        try:
            with self.assertRaises(InconsistencyError):
                check_nilpotent(example_map(), ('char', 'liar'))
        finally:
            del supported_methods['liar']

    @given(st.lists(polynomials(3, 2, 4, st.integers(-5, 5)), min_size=3, max_size=3))
    @settings(max_examples=100, deadline=None)
    def test_trace_is_first_coefficient(self, components):
        jac = PolynomialMap(components).jacobian()
        self.assertEqual(char_coefficients(jac)[0], jac.trace())

    def test_recursion_matches_determinant(self):
        fixtures = [example_map(), build(five_dimensional_params()), build(cor1_params()), build(cor2_params()),
                    PolynomialMap.from_strings(['x*y', 'x3^2 + y', 'x4*x', 'x^3 - y'])]
        rng = get_rng(5)
        fixtures += [perturb(hmap, rng) for hmap in _corpus(rng, 20)]
        for hmap in fixtures:
            self.assertEqual(structured_char_recursion(hmap), characteristic_determinant(hmap.jacobian()))

    def test_generated_maps_are_nilpotent(self):
        rng = get_rng(1234)
        for hmap in _corpus(rng, NB_CORPUS):
            self.assertEqual(check_nilpotent(hmap, ALL_METHODS), dict.fromkeys(ALL_METHODS, True))
            self.assertEqual(keller_determinant(hmap), 1)

    def test_methods_agree_on_perturbed_maps(self):
        rng = get_rng(4321)
        verdicts = []
        for hmap in _corpus(rng, NB_CORPUS):
            perturbed = perturb(hmap, rng)
            result = check_nilpotent(perturbed, ALL_METHODS)
            verdicts.append(result['char'])
        logger.info('%d of %d perturbed maps stayed nilpotent.', sum(verdicts), len(verdicts))
        self.assertLess(sum(verdicts), len(verdicts))

    def test_methods_agree_on_unstructured_maps(self):
        rng = get_rng(99)
        for _ in range(30):
            hmap = random_map(3, 2, rng)
            check_nilpotent(hmap, ('power', 'char'))


if __name__ == '__main__':
    unittest.main()
