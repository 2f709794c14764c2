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

from njt.catalog import cor1_params, cor2_params, cor2_params_with_free, example_map, five_dimensional_params, \
    shift_params
from njt.exceptions import InconsistencyError, NotNilpotentError, RecoveryError
from njt.family import FamilyParams, build, sample_corpus
from njt.inverter import AffineFactor, DecompositionState, ElementaryFactor, compose_factors, decompose
from njt.jacobian import PolynomialMap
from njt.polyring import parse_polynomial, parse_univariate
from njt.utils import get_rng, master_seed

logger = logging.getLogger('testLogger')

NB_ROUND_TRIPS = 100


def _with_identity(hmap):
    return hmap + PolynomialMap.identity(hmap.n)


class TestDecompositionState(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_bookkeeping(self):
        fmap = _with_identity(example_map())
        state = DecompositionState(fmap, verify=True)
        state.push_left(ElementaryFactor(2, parse_polynomial('x^2', 3)))
        state.push_right(ElementaryFactor(3, parse_polynomial('y', 3)))
        state.push_left(AffineFactor.translation([1, 0, 0]))
        self.assertEqual(state.steps, 3)
        self.assertTrue(state.invariant_holds())
        self.assertEqual(state.reconstruct(), fmap)
        with self.assertRaises(InconsistencyError):
            state.factor_sequence()

    def test_step_count(self):
        state = DecompositionState(_with_identity(example_map()))
        self.assertIsNone(state.step_count)
        self.assertFalse(state.verify)


class TestDecompose(unittest.TestCase):
    def setUp(self):
        master_seed(1234)

    def _check(self, hmap, elementary_only=True, verify=True):
        fmap = _with_identity(hmap)
        sequence = decompose(fmap, verify=verify)
        self.assertEqual(compose_factors(sequence), fmap)
        self.assertEqual(sequence.elementary_only, elementary_only)
        return sequence

    def test_identity(self):
        sequence = decompose(PolynomialMap.identity(3))
        self.assertEqual(len(sequence), 0)

    def test_example(self):
        sequence = self._check(example_map())
        self.assertTrue(all(isinstance(factor, ElementaryFactor) for factor in sequence))
        logger.info('Example factors: %s', sequence.to_json())

    def test_example_steps(self):
        fmap = _with_identity(example_map())
        sequence = decompose(fmap)
        expected = [ElementaryFactor(2, parse_polynomial('x^2', 3)), ElementaryFactor(2, parse_polynomial('z', 3)),
                    ElementaryFactor(1, parse_polynomial('y', 3)), ElementaryFactor(2, parse_polynomial('-x^2', 3)),
                    ElementaryFactor(3, parse_polynomial('-(y - x^2)^2', 3))]
        self.assertEqual(list(sequence), expected)

    def test_five_dimensional(self):
        self._check(build(five_dimensional_params()))

    def test_shift_chain(self):
        self._check(build(shift_params(5)))

    def test_cor1(self):
        self._check(build(cor1_params()), elementary_only=False)
        params = FamilyParams.cor1(4, 0, 1, 0, 0, parse_univariate('T^3 - T'), {4: parse_polynomial('x*y', 4)})
        self._check(build(params))
        params = FamilyParams.cor1(3, 1, 0, 0, 0, parse_univariate('2*T^2'))
        self._check(build(params))
        params = FamilyParams.cor1(3, 1, 0, 3, 4, parse_univariate('2*T^2'))
        self._check(build(params), elementary_only=False)

    def test_cor2(self):
        self._check(build(cor2_params()))
        self._check(build(cor2_params_with_free()))

    def test_not_nilpotent(self):
        fmap = _with_identity(PolynomialMap.from_strings(['y^3', 'x^3', '0']))
        with self.assertRaises(NotNilpotentError):
            decompose(fmap)

    def test_not_structured(self):
        fmap = _with_identity(PolynomialMap.from_strings(['z', '0', '0']))
        with self.assertRaises(RecoveryError) as context:
            decompose(fmap)
        self.assertEqual(context.exception.component, 1)

        # the nilpotency verdict comes first
        fmap = _with_identity(PolynomialMap.from_strings(['z', 'x^2', 'x']))
        with self.assertRaises(NotNilpotentError):
            decompose(fmap)

    def test_sampled_round_trip(self):
        corpus = sample_corpus(NB_ROUND_TRIPS, rng=get_rng(31))
        for k, params in enumerate(corpus):
            hmap = build(params)
            sequence = self._check(hmap, elementary_only=sequence_is_elementary(hmap, params), verify=k % 2 == 0)
            logger.debug('%s member decomposed into %d factors.', params.case, len(sequence))


def sequence_is_elementary(hmap, params):
    # only maps with a shear w = l1 x + l2 y (both non-zero) or constants in the first two components need affine
    # factors
    if params.case != 'cor1':
        return True
    u, u2 = hmap.component(1), hmap.component(2)
    if u.constant_term() != 0 or u2.constant_term() != 0:
        return False
    return not (u.depends_on(1) and u.depends_on(2))


if __name__ == '__main__':
    unittest.main()
