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

from njt.catalog import example_params, five_dimensional_params
from njt.family import bracket_term, build, closed_form_component, closed_form_holds, derivative_ladder, \
    family_identities_hold, first_component, gamma_identities_hold, ladder_holds, sample_corpus, \
    taylor_expansion, taylor_identity_holds, validate_params
from njt.polyring import Polynomial, parse_polynomial
from njt.utils import get_rng, master_seed
from tests.strategies import polynomials

logger = logging.getLogger('testLogger')

NB_SAMPLES = 100


class TestIdentities(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_example(self):
        params = example_params()
        derived = validate_params(params)
        self.assertTrue(family_identities_hold(params))
        u = first_component(params)
        hmap = build(params)
        z = parse_polynomial('z', 3)
        self.assertEqual(closed_form_component(derived, u, 1), hmap.component(2))
        self.assertEqual(closed_form_component(derived, u, 2), hmap.component(3))
        bracket3 = bracket_term(derived, u, 3)
        self.assertEqual(bracket3, hmap.component(3))
        # x3 -> x3 - [u_3] leaves x3 + [u_2] in component 2
        reduced = hmap.component(2).substitute({3: z - bracket3})
        self.assertEqual(bracket_term(derived, u, 2), reduced - z)
        self.assertEqual(bracket_term(derived, u, 2), u * u + u * parse_polynomial('2*x', 3))

    def test_five_dimensional(self):
        params = five_dimensional_params()
        derived = validate_params(params)
        self.assertTrue(gamma_identities_hold(derived))
        self.assertTrue(ladder_holds(derived))
        self.assertTrue(closed_form_holds(params))
        self.assertEqual([(m, order) for m, order, _ in derivative_ladder(derived)], [(4, 2), (5, 1)])

    def test_ladder_detects_high_degree(self):
        derived = validate_params(example_params())
        derived.b[1] = parse_polynomial('x^3', 1)
        self.assertFalse(ladder_holds(derived))

    def test_sampled_members(self):
        corpus = sample_corpus(NB_SAMPLES, rng=get_rng(11), cases=('main',))
        self.assertEqual(set(params.n for params in corpus), {3, 4, 5, 6})
        for params in corpus:
            self.assertTrue(family_identities_hold(params), msg=str(params.to_json()))

    @given(polynomials(1, 4, 4, st.integers(-9, 9)), polynomials(3, 2, 4, st.integers(-9, 9)))
    @settings(max_examples=200, deadline=None)
    def test_taylor(self, b, u):
        self.assertTrue(taylor_identity_holds(b, u, 4))
        self.assertEqual(taylor_expansion(b, u, 0), b.with_ambient(3))

    def test_taylor_order_too_small(self):
        b = parse_polynomial('x^3', 1)
        u = parse_polynomial('y', 3)
        self.assertFalse(taylor_identity_holds(b, u, 2))
        self.assertTrue(taylor_identity_holds(b, u, 3))
        self.assertEqual(taylor_expansion(Polynomial.zero(1), u, 3), 0)


if __name__ == '__main__':
    unittest.main()
