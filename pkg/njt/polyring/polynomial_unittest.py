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
from hypothesis import strategies as st

from njt.exceptions import DimensionError
from njt.polyring import LexTerm, NEG_INFINITY, Polynomial, Substitution, parse_polynomial
from njt.polyring.polynomial import EXPONENT_BITS, pack_exponents, unpack_exponents
from njt.utils import master_seed
from tests.strategies import dominated_pairs, polynomials

logger = logging.getLogger('testLogger')

NB_EXAMPLES = 1000


def _p(text, n=3):
    return parse_polynomial(text, n)


class TestPolynomialArithmetic(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)

    def test_difference_of_squares(self):
        self.assertEqual(_p('x + y') * _p('x - y'), _p('x^2 - y^2'))

    def test_square_example(self):
        square = _p('y - x^2') ** 2
        self.assertEqual(square, _p('y^2 - 2*x^2*y + x^4'))
        self.assertEqual(str(square), 'y^2 - 2*x^2*y + x^4')

    def test_zero(self):
        zero = Polynomial.zero(3)
        self.assertTrue(zero.is_zero())
        self.assertEqual(zero.degree(), NEG_INFINITY)
        self.assertEqual(zero.degree_in(2), NEG_INFINITY)
        self.assertEqual(str(zero), '0')
        self.assertEqual(zero, 0)
        self.assertEqual(len(Polynomial(2, {(1, 0): 0})), 0)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            _ = Polynomial.variable(2, 1) + Polynomial.variable(3, 1)
        with self.assertRaises(DimensionError):
            Polynomial.variable(2, 3)
        with self.assertRaises(DimensionError):
            _p('x*y').derive(4)

    def test_power(self):
        p = _p('x + 1')
        self.assertEqual(p ** 0, 1)
        self.assertEqual(p ** 3, _p('x^3 + 3*x^2 + 3*x + 1'))
        with self.assertRaises(ValueError):
            p.power(-1)

    def test_rational_coefficients(self):
        p = _p('1/2*x') * 4
        self.assertEqual(p, _p('2*x'))
        self.assertEqual((p / 3).coefficient((1, 0, 0)), Fraction(2, 3))

    def test_truncated_product(self):
        p = _p('1 + x + y')
        self.assertEqual(p.multiply(p, max_degree=1), _p('1 + 2*x + 2*y'))
        self.assertEqual(p.power(3, max_degree=1), _p('1 + 3*x + 3*y'))

    def test_packed_monomials(self):
        a, b = (2, 0, 5), (1, 3, 0)
        self.assertEqual(unpack_exponents(pack_exponents(a), 3), a)
        self.assertEqual(pack_exponents(a) + pack_exponents(b), pack_exponents((3, 3, 5)))
        self.assertEqual(pack_exponents(a) >> (EXPONENT_BITS * 3), 7)

    def test_mixed_denominators(self):
        p = _p('1/2*x + 1/3*y') * _p('2/3*x - 3/4')
        self.assertEqual(p, _p('1/3*x^2 - 3/8*x + 2/9*x*y - 1/4*y'))
        self.assertEqual(p.coefficient((1, 1, 0)), Fraction(2, 9))
        self.assertTrue((_p('1/2*x - 1/3') * _p('1/2*x + 1/3') - _p('1/4*x^2 - 1/9')).is_zero())
        self.assertEqual(_p('1/6*x') * 0, 0)

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(polynomials(3), polynomials(3), st.integers(0, 6))
    def test_truncated_product_matches_exact(self, p, q, degree):
        self.assertEqual(p.multiply(q, max_degree=degree), (p * q).truncate(degree))

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(polynomials(3), polynomials(3), polynomials(3))
    def test_ring_axioms(self, p, q, r):
        self.assertEqual((p + q) + r, p + (q + r))
        self.assertEqual(p + q, q + p)
        self.assertEqual((p * q) * r, p * (q * r))
        self.assertEqual(p * q, q * p)
        self.assertEqual(p * (q + r), p * q + p * r)
        self.assertEqual(p + 0, p)
        self.assertEqual(p * 1, p)
        self.assertEqual(p - p, Polynomial.zero(3))

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(polynomials(4), polynomials(4))
    def test_ring_axioms_four_variables(self, p, q):
        self.assertEqual(p * q + q, (p + 1) * q)
        self.assertEqual((p + q) ** 2, p * p + 2 * p * q + q * q)


class TestPolynomialCalculus(unittest.TestCase):
    def test_derive(self):
        self.assertEqual(_p('x^2*y').derive(1), _p('2*x*y'))
        self.assertEqual(_p('y - x^2').derive(2), 1)
        self.assertEqual(_p('z + 2*x*(y - x^2)').derive(1), _p('2*y - 6*x^2'))
        self.assertEqual(_p('x^3').derive(1, order=2), _p('6*x'))
        self.assertEqual(_p('x^3').derive(1, order=4), 0)

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(polynomials(3), polynomials(3), st.integers(1, 3))
    def test_leibniz(self, p, q, i):
        self.assertEqual((p * q).derive(i), p * q.derive(i) + q * p.derive(i))

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(polynomials(4), st.integers(1, 4), st.integers(1, 4))
    def test_schwarz(self, p, i, j):
        self.assertEqual(p.derive(i).derive(j), p.derive(j).derive(i))

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(polynomials(2, max_degree=3, max_terms=4), polynomials(3, max_degree=2, max_terms=3),
           polynomials(3, max_degree=2, max_terms=3), st.integers(1, 3))
    def test_chain_rule(self, f, g1, g2, i):
        # d/dx_i f(g1, g2) = f_x(g) * g1_i + f_y(g) * g2_i
        images = {1: g1, 2: g2}
        lhs = f.substitute(images).derive(i)
        rhs = f.derive(1).substitute(images) * g1.derive(i) + f.derive(2).substitute(images) * g2.derive(i)
        self.assertEqual(lhs, rhs)


class TestPolynomialSubstitution(unittest.TestCase):
    def test_binomial(self):
        b = parse_polynomial('x^2', 2)
        self.assertEqual(b.substitute({1: parse_polynomial('x + y', 2)}), parse_polynomial('x^2 + 2*x*y + y^2', 2))

    def test_empty_assignment(self):
        p = _p('x*y + z')
        self.assertIs(p.substitute({}), p)

    def test_relabel_to_univariate(self):
        u = _p('y - x^2')
        t = Polynomial.variable(1, 1)
        self.assertEqual(u.substitute({1: Polynomial.zero(1), 2: t}), t)

    def test_unassigned_variable_missing_in_target(self):
        with self.assertRaises(DimensionError):
            _p('z + x').substitute({1: Polynomial.variable(2, 2)})

    def test_truncated_substitution(self):
        p = _p('x^2 + y')
        self.assertEqual(p.substitute({1: _p('1 + y')}, max_degree=1), _p('1 + 3*y'))

    def test_shared_substitution(self):
        images = {1: _p('x + y^2'), 2: Fraction(1, 2)}
        substitution = Substitution(3, images)
        for text in ['x^2*y + z', 'y^3 - x*z', '0', '5']:
            self.assertEqual(substitution.apply(_p(text)), _p(text).substitute(images))
        self.assertEqual(substitution.apply(_p('x*y + z')), _p('1/2*x + 1/2*y^2 + z'))
        with self.assertRaises(DimensionError):
            substitution.apply(Polynomial.variable(2, 1))
        with self.assertRaises(DimensionError):
            Substitution(3, {4: _p('x')})

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(polynomials(3, max_terms=5), polynomials(3, max_degree=2, max_terms=3),
           polynomials(3, max_degree=2, max_terms=3), st.integers(0, 5))
    def test_substitution_agrees_with_evaluation(self, p, g1, g2, degree):
        images = {1: g1, 2: g2}
        point = [Fraction(1, 2), Fraction(-2), Fraction(3, 5)]
        inner = [g1.evaluate(point), g2.evaluate(point), point[2]]
        self.assertEqual(p.substitute(images).evaluate(point), p.evaluate(inner))
        self.assertEqual(p.substitute(images, max_degree=degree), p.substitute(images).truncate(degree))

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(polynomials(3, max_terms=4), polynomials(3, max_terms=4), polynomials(3, max_degree=2, max_terms=3),
           polynomials(3, max_degree=2, max_terms=3))
    def test_homomorphism(self, p, q, g1, g3):
        images = {1: g1, 3: g3}
        self.assertEqual((p * q).substitute(images), p.substitute(images) * q.substitute(images))
        self.assertEqual((p + q).substitute(images), p.substitute(images) + q.substitute(images))


class TestPolynomialStructure(unittest.TestCase):
    def test_coeff_in_var(self):
        self.assertEqual(_p('z + 2*x*(y - x^2)').coeff_in_var(3, 1), 1)
        self.assertEqual(_p('y - x^2').coeff_in_var(2, 0), _p('-x^2'))

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(polynomials(3), st.integers(1, 3))
    def test_reconstruction(self, p, i):
        var = Polynomial.variable(3, i)
        total = Polynomial.zero(3)
        for k, coefficient in p.coefficients_in_var(i).items():
            self.assertFalse(coefficient.depends_on(i))
            self.assertEqual(coefficient, p.coeff_in_var(i, k))
            total = total + coefficient * var ** k
        self.assertEqual(total, p)

    def test_with_ambient(self):
        p = parse_polynomial('x^2 - 1', 1)
        self.assertEqual(p.with_ambient(3), _p('x^2 - 1'))
        self.assertEqual(_p('x^2 - 1').with_ambient(1), p)
        with self.assertRaises(DimensionError):
            _p('z').with_ambient(2)

    def test_evaluate(self):
        self.assertEqual(_p('y - x^2').evaluate([2, 1, 0]), -3)


class TestLeadingTerm(unittest.TestCase):
    def test_y_degree_first(self):
        term, coefficient = parse_polynomial('x^5*y^2 + x^2*y^3', 2).leading_term_lex()
        self.assertEqual(term, LexTerm(2, 3))
        self.assertEqual(coefficient, 1)

    def test_example_component(self):
        term, coefficient = parse_polynomial('y - x^2', 2).leading_term_lex()
        self.assertEqual(term, LexTerm(0, 1))
        self.assertEqual(coefficient, 1)

    def test_bracket_instance(self):
        u = parse_polynomial('x^3*y^2', 2)
        v = parse_polynomial('x*y^4', 2)
        bracket = u.derive(1) * v.derive(2) - u.derive(2) * v.derive(1)
        self.assertEqual(bracket.leading_term_lex(), (LexTerm(3, 5), Fraction(10)))

    def test_errors(self):
        with self.assertRaises(ValueError):
            Polynomial.zero(2).leading_term_lex()
        with self.assertRaises(DimensionError):
            _p('x + z').leading_term_lex()

    def test_ordering(self):
        self.assertTrue(LexTerm(0, 1) > LexTerm(7, 0))
        self.assertTrue(LexTerm(3, 1) > LexTerm(2, 1))

    @settings(max_examples=NB_EXAMPLES, deadline=None)
    @given(dominated_pairs())
    def test_bracket_leading_term(self, pair):
        u, v, (x_degree, y_degree, coefficient) = pair
        bracket = u.derive(1) * v.derive(2) - u.derive(2) * v.derive(1)
        self.assertEqual(bracket.leading_term_lex(), (LexTerm(x_degree, y_degree), coefficient))


if __name__ == '__main__':
    unittest.main()
