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

from njt.exceptions import DimensionError, ParseError, SingularMatrixError
from njt.inverter import AffineFactor, ElementaryFactor, FactorSequence, compose_factors, factor_from_json, \
    invert_factor_sequence
from njt.jacobian import PolynomialMap
from njt.polyring import parse_polynomial
from njt.utils import master_seed

logger = logging.getLogger('testLogger')


def _p(text, n=3):
    return parse_polynomial(text, n)


class TestFactors(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_elementary(self):
        factor = ElementaryFactor(2, _p('x^2 + z'))
        self.assertEqual(factor.as_map(), PolynomialMap.from_strings(['x', 'y + x^2 + z', 'z']))
        self.assertTrue(factor.inverse().apply_left(factor.as_map()).is_identity())
        self.assertTrue(factor.apply_right(factor.inverse().as_map()).is_identity())
        with self.assertRaises(ValueError):
            ElementaryFactor(2, _p('x*y'))
        with self.assertRaises(DimensionError):
            ElementaryFactor(4, _p('x'))

    def test_left_and_right(self):
        gmap = PolynomialMap.from_strings(['x + y^2', 'y + z', 'z'])
        factor = ElementaryFactor(1, _p('-y^2'))
        self.assertEqual(factor.apply_left(gmap), factor.as_map().compose(gmap))
        self.assertEqual(factor.apply_right(gmap), gmap.compose(factor.as_map()))
        self.assertEqual(factor.apply_left(gmap), PolynomialMap.from_strings(['x - 2*y*z - z^2', 'y + z', 'z']))
        self.assertEqual(factor.apply_right(gmap), PolynomialMap.from_strings(['x', 'y + z', 'z']))

    def test_translation(self):
        factor = AffineFactor.translation([1, '-1/2', 0])
        self.assertEqual(factor.as_map(), PolynomialMap.from_strings(['x + 1', 'y - 1/2', 'z']))
        self.assertEqual(factor.inverse(), AffineFactor.translation([-1, '1/2', 0]))

    def test_linear(self):
        factor = AffineFactor.linear([[2, 1, 0], [0, 1, 0], [0, 0, 1]])
        self.assertEqual(factor.as_map(), PolynomialMap.from_strings(['2*x + y', 'y', 'z']))
        self.assertTrue(factor.inverse().apply_left(factor.as_map()).is_identity())
        self.assertEqual(factor.inverse().to_json()['m'][0], ['1/2', '-1/2', '0'])
        with self.assertRaises(SingularMatrixError):
            AffineFactor.linear([[1, 1], [1, 1]])
        with self.assertRaises(ValueError):
            AffineFactor('rotation', [])

    def test_json(self):
        factors = [ElementaryFactor(3, _p('x*y - 1')), AffineFactor.translation([0, 2, 0]),
                   AffineFactor.linear([[1, 0, 0], [3, 1, 0], [0, 0, -1]])]
        for factor in factors:
            self.assertEqual(factor_from_json(factor.to_json(), 3), factor)
        with self.assertRaises(ParseError):
            factor_from_json({'kind': 'elementary', 'i': 1}, 3)
        with self.assertRaises(ParseError):
            factor_from_json({'kind': 'shear'}, 3)
        with self.assertRaises(DimensionError):
            factor_from_json(AffineFactor.translation([1, 2]).to_json(), 3)


class TestFactorSequence(unittest.TestCase):
    def setUp(self):
        master_seed(1234)

    def test_empty(self):
        sequence = FactorSequence(3)
        self.assertEqual(len(sequence), 0)
        self.assertTrue(compose_factors(sequence).is_identity())
        self.assertTrue(sequence.elementary_only)

    def test_composition_order(self):
        shear_x = ElementaryFactor(1, _p('y^2'))
        shear_y = ElementaryFactor(2, _p('x'))
        sequence = FactorSequence(3, [shear_x, shear_y])
        # [f1, f2] is f1 o f2
        self.assertEqual(compose_factors(sequence), shear_x.as_map().compose(shear_y.as_map()))
        self.assertEqual(sequence.compose(), PolynomialMap.from_strings(['x + y^2 + 2*x*y + x^2', 'y + x', 'z']))

    def test_inverse(self):
        sequence = FactorSequence(3, [ElementaryFactor(1, _p('y^2')), AffineFactor.translation([1, 0, 0]),
                                      AffineFactor.linear([[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
                                      ElementaryFactor(3, _p('x - y'))])
        self.assertFalse(sequence.elementary_only)
        fmap = compose_factors(sequence)
        gmap = compose_factors(invert_factor_sequence(sequence))
        self.assertTrue(fmap.compose(gmap).is_identity())
        self.assertTrue(gmap.compose(fmap).is_identity())
        self.assertEqual(sequence.inverse().inverse(), sequence)

    def test_json(self):
        sequence = FactorSequence(3, [ElementaryFactor(1, _p('y^2')), AffineFactor.translation([1, 0, 0])])
        content = sequence.to_json()
        self.assertFalse(content['elementary_only'])
        self.assertEqual(FactorSequence.from_json(content), sequence)
        with self.assertRaises(ParseError):
            FactorSequence.from_json({'factors': []})

    def test_dimension(self):
        with self.assertRaises(DimensionError):
            FactorSequence(2, [ElementaryFactor(1, _p('y'))])


if __name__ == '__main__':
    unittest.main()
