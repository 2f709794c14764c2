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
import time
import unittest

from njt.catalog import cor1_params, cor2_params, cor2_params_with_free, example_map, example_params, \
    five_dimensional_params, shift_params
from njt.exceptions import ParamsError
from njt.family import Level, NicePoly, build, build_cor1, build_main, first_component, sample_corpus
from njt.family import FamilyParams
from njt.jacobian import CharacteristicCheck, PolynomialMap, keller_determinant, validate_structured_shape
from njt.polyring import Polynomial, parse_polynomial, parse_univariate
from njt.utils import get_rng, master_seed

logger = logging.getLogger('testLogger')

NB_SAMPLES = 100
MAX_SECONDS = 60


class TestBuilders(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_example(self):
        self.assertEqual(build(example_params()), example_map())
        self.assertEqual(build_main(example_params()), example_map())
        self.assertEqual(first_component(example_params()), parse_polynomial('y - x^2', 3))

    def test_shift_chain(self):
        self.assertEqual(build(shift_params(4)), PolynomialMap.from_strings(['y', 'x3', 'x4', '0']))

    def test_terminal_constant(self):
        params = FamilyParams.main(3, parse_univariate('T'), Polynomial.zero(1), 3,
                                   [Level(2, NicePoly([0, 1]), Polynomial.zero(1))], 7)
        self.assertEqual(build(params), PolynomialMap.from_strings(['y', 'z', '7']))

    def test_cor1(self):
        self.assertEqual(build(cor1_params()), PolynomialMap.from_strings(['(x + y)^2', '-(x + y)^2', '0']))
        params = FamilyParams.cor1(3, 0, 1, 2, -1, parse_univariate('T^3'))
        self.assertEqual(build_cor1(params), PolynomialMap.from_strings(['y^3 + 2', '-1', '0']))

    def test_cor2(self):
        self.assertEqual(build(cor2_params()), PolynomialMap.from_strings(['5', 'x + z^2', 'x^3']))
        self.assertEqual(build(cor2_params_with_free()), PolynomialMap.from_strings(['5', 'x + z^2', 'x^3', 'x*y']))

    def test_five_dimensional(self):
        params = five_dimensional_params()
        self.assertEqual([level.nice.degree for level in params.levels], [3, 1, 2])
        hmap = build(params)
        self.assertEqual(validate_structured_shape(hmap).r, 5)
        self.assertEqual(hmap.component(1), parse_polynomial('(y - 3*x)^2 + y - 3*x', 5))
        self.assertEqual(hmap.component(5), hmap.component(1) / 2 + 1)
        self.assertTrue(CharacteristicCheck().is_nilpotent(hmap))

    def test_invalid(self):
        params = FamilyParams.main(3, parse_univariate('T'), parse_polynomial('-x^2', 1), 3,
                                   [Level(2, NicePoly([0, 0, 1]), Polynomial.zero(1))])
        with self.assertRaises(ParamsError):
            build(params)

    def test_sampled_members_sound(self):
        start = time.time()
        corpus = sample_corpus(NB_SAMPLES, rng=get_rng(2019))
        for params in corpus:
            hmap = build(params)
            self.assertEqual(validate_structured_shape(hmap).case, params.case)
            self.assertTrue(CharacteristicCheck().is_nilpotent(hmap), msg=str(params.to_json()))
            self.assertEqual(keller_determinant(hmap), 1)
        elapsed = time.time() - start
        logger.info('Built and checked %d members in %.1f s.', len(corpus), elapsed)
        self.assertLess(elapsed, MAX_SECONDS)

        self.assertEqual(set(params.n for params in corpus), {3, 4, 5, 6})
        self.assertEqual(set(params.case for params in corpus), {'main', 'cor1', 'cor2'})
        multi_level = [params for params in corpus if params.case == 'main'
                       and sum(level.nice.degree >= 2 for level in params.levels) >= 2]
        self.assertTrue(multi_level)


if __name__ == '__main__':
    unittest.main()
