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
"""
Decomposition of `F = X + H`, `H` a classified structured map with nilpotent Jacobian matrix, into atomic invertible
factors. The map is reduced to the identity by composing with factors on the left and on the right; the factors of
`F` are then the inverses of the applied ones.

Main-case maps are reduced with elementary factors only:

1. components beyond `r` are removed from the right, from `x_n` downwards,
2. the bracket terms `[u_m]`, `m = r..s+1`, are removed from the right,
3. the shifts `b_m(F1)` and the linear terms `l_m x_{m+1}` of levels `s..r` are removed from the left,
4. either `s = 2` and two more factors reach the identity, or the level `s-1` is made linear and the reduced map,
   again a family member with terminal level `s-1` (or of the `cor1` kind when `s = 3`), is processed again.

Maps whose second component is free of `x3` use a translation and a linear change of coordinates; maps with constant
first component are peeled from the left.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from njt import VERIFY_STEPS
from njt.exceptions import InconsistencyError, NotNilpotentError, RecoveryError, ShapeError
from njt.family.identities import bracket_term, taylor_expansion
from njt.family.params import validate_params
from njt.family.recovery import recover_cor1, recover_family, recover_params
from njt.inverter.factors import AffineFactor, ElementaryFactor, FactorSequence, compose_factors
from njt.jacobian.nilpotency import CharacteristicCheck
from njt.jacobian.polymap import PolynomialMap
from njt.jacobian.shape import validate_structured_shape
from njt.polyring import Polynomial

logger = logging.getLogger(__name__)


class DecompositionState(object):
    """
    Bookkeeping of a reduction: `current = L_k o ... o L_1 o original o R_1 o ... o R_j` for the left factors `L` and
    right factors `R` applied so far.
    """
    def __init__(self, original, verify=None):
        """
        :param original: The map `F` being decomposed.
        :type original: `PolynomialMap`
        :param verify: Check the bookkeeping invariant after every step (defaults to `VERIFY_STEPS`).
        :type verify: `bool`
        """
        self.original = original
        self.n = original.n
        self.current = original
        self.left = []
        self.right = []
        self.params = None
        self.derived = None
        self.steps = 0
        self.verify = VERIFY_STEPS if verify is None else verify

    @property
    def step_count(self):
        """
        `n(H)` of the parameters currently being reduced, `None` outside the main case.
        """
        if self.derived is None or self.derived.case != 'main':
            return None
        return self.derived.n_h

    def push_left(self, factor):
        self.current = factor.apply_left(self.current)
        self.left.append(factor)
        self._after_step()

    def push_right(self, factor):
        self.current = factor.apply_right(self.current)
        self.right.append(factor)
        self._after_step()

    def _after_step(self):
        self.steps += 1
        if self.verify and not self.invariant_holds():
            raise InconsistencyError('Bookkeeping invariant broken after step %d.' % self.steps)

    def reconstruct(self):
        """
        `inverse(left) o current o inverse(right)`, which equals the original map.
        """
        result = self.current
        for factor in reversed(self.left):
            result = factor.inverse().apply_left(result)
        for factor in reversed(self.right):
            result = factor.inverse().apply_right(result)
        return result

    def invariant_holds(self):
        return self.reconstruct() == self.original

    def nonlinear_part(self):
        """
        `current - X`.
        """
        return self.current - PolynomialMap.identity(self.n)

    def factor_sequence(self):
        """
        Factors of the original map, available once `current` is the identity.

        :rtype: `FactorSequence`
        """
        if not self.current.is_identity():
            raise InconsistencyError('The reduction did not reach the identity.')
        factors = [factor.inverse() for factor in self.left]
        factors += [factor.inverse() for factor in reversed(self.right)]
        return FactorSequence(self.n, factors)


def _elementary(state, side, index, shift):
    # zero shifts are identities and are skipped
    if shift.is_zero():
        return
    factor = ElementaryFactor(index, shift)
    if side == 'left':
        state.push_left(factor)
    else:
        state.push_right(factor)


def _peel_right(state, first):
    """
    Make components `n, n-1, ..., first` equal to `x_i` by right composition.
    """
    for i in range(state.n, first - 1, -1):
        rest = state.current.component(i) - Polynomial.variable(state.n, i)
        _elementary(state, 'right', i, -rest)


def _reduce_cor1(state, affine=True):
    """
    Reduce `X + H` with `u = l2 f(w) + c1`, `u2 = -l1 f(w) + c2`, `w = l1 x + l2 y`.

    With `affine=True` the constants go through a translation and the shear `w` through a linear factor; otherwise
    elementary factors are used throughout.
    """
    n = state.n
    _peel_right(state, 3)
    params = recover_cor1(state.nonlinear_part())
    state.params = params
    lambda1, lambda2 = params.lambda1, params.lambda2
    x1, x2 = Polynomial.variable(n, 1), Polynomial.variable(n, 2)
    f = params.f

    if params.c1 != 0 or params.c2 != 0:
        if affine:
            state.push_left(AffineFactor.translation([-params.c1, -params.c2] + [0] * (n - 2)))
        else:
            _elementary(state, 'left', 1, Polynomial.constant(n, -params.c1))
            _elementary(state, 'left', 2, Polynomial.constant(n, -params.c2))

    if lambda1 != 0 and lambda2 != 0:
        if affine:
            matrix = [[int(i == j) for j in range(n)] for i in range(n)]
            matrix[0][0], matrix[0][1] = lambda1, 1
            shear = AffineFactor.linear(matrix)
            state.push_left(shear)
            state.push_right(shear.inverse())
            _elementary(state, 'left', 2, f.substitute({1: x1}) * lambda1)
        else:
            _elementary(state, 'left', 2, x1 * lambda1)
            _elementary(state, 'right', 2, x1 * (-lambda1))
            _elementary(state, 'left', 1, -f.substitute({1: x2}))
    elif lambda2 != 0:
        _elementary(state, 'left', 1, -f.substitute({1: x2}))
    elif lambda1 != 0:
        _elementary(state, 'left', 2, f.substitute({1: x1}))


def _reduce_cor2(state):
    """
    Reduce `X + H` with constant `u` by left composition: `x - u`, then `x_i - u_i` for `i = r..2`, then the free
    components from `x_n` downwards.
    """
    params = state.params
    n = state.n
    _elementary(state, 'left', 1, Polynomial.constant(n, -params.u))
    for i in range(params.r, 1, -1):
        _elementary(state, 'left', i, -params.chain[i])
    for i in range(n, params.r, -1):
        _elementary(state, 'left', i, -params.free.get(i, Polynomial.zero(n)))


def _check(condition, message):
    if not condition:
        raise InconsistencyError(message)


def _reduce_main(state):
    n = state.n
    x1 = Polynomial.variable(n, 1)
    while True:
        params = recover_params(state.nonlinear_part())
        derived = validate_params(params)
        state.params, state.derived = params, derived
        r, s = derived.r, derived.s
        logger.info('Reducing main-case map: r=%d, s=%d, n(H)=%d.', r, s, derived.n_h)

        _peel_right(state, r + 1)

        f1 = state.current.component(1)
        u = f1 - x1

        def _tail(m):
            # b_m(F1) + l_m x_{m+1}
            tail = derived.b[m].substitute({1: f1})
            if m < r and derived.l[m] != 0:
                tail = tail + Polynomial.variable(n, m + 1) * derived.l[m]
            return tail

        for m in range(r, s, -1):
            bracket = state.current.component(m) - Polynomial.variable(n, m) - _tail(m)
            _check(all(v <= 2 for v in bracket.variables()), 'Bracket [u_%d] is not in Q[x, y].' % m)
            if state.verify:
                _check(bracket == bracket_term(derived, u, m), 'Bracket [u_%d] differs from its closed form.' % m)
            _elementary(state, 'right', m, -bracket)

        if state.verify:
            bracket = state.current.component(s) - Polynomial.variable(n, s) - _tail(s)
            b_prev = derived.b[s - 1]
            expected = (b_prev.with_ambient(n) - taylor_expansion(b_prev, u, r - s + 1)) / derived.L[s - 1]
            _check(bracket == expected, 'Component %d does not satisfy the Taylor identity.' % s)
            _check(bracket == bracket_term(derived, u, s), 'Bracket [u_%d] differs from its closed form.' % s)

        shift_prev = derived.b[s - 1].with_ambient(n) / derived.L[s - 1]
        _elementary(state, 'left', s, shift_prev - derived.b[s].with_ambient(n))
        for m in range(s + 1, r + 1):
            _elementary(state, 'left', m, -derived.b[m].with_ambient(n))
        for m in range(r - 1, s - 1, -1):
            _elementary(state, 'left', m, Polynomial.variable(n, m + 1) * (-derived.l[m]))

        if s == 2:
            _elementary(state, 'right', 2, -derived.b[1].with_ambient(n))
            p_of_y = params.p.substitute({1: Polynomial.variable(n, 2)})
            _elementary(state, 'left', 1, -p_of_y)
            return

        _elementary(state, 'right', s, -shift_prev)
        nice = params.level(s - 1).nice.as_polynomial()
        _elementary(state, 'left', s - 1, -nice.substitute({1: Polynomial.variable(n, s)}))

        reduced = state.nonlinear_part()
        if state.verify:
            _check(CharacteristicCheck().is_nilpotent(reduced), 'Reduced map is not nilpotent.')
        if s == 3:
            _reduce_cor1(state, affine=False)
            return


def decompose(fmap, verify=None):
    """
    Factor `F = X + H` into elementary and affine factors.

    :param fmap: The map `F`.
    :type fmap: `PolynomialMap`
    :param verify: Check the bookkeeping invariant and the intermediate identities after every step.
    :type verify: `bool`
    :return: Factors whose composition is `F`.
    :rtype: `FactorSequence`
    :raises NotNilpotentError: if `JH` is not nilpotent.
    :raises RecoveryError: if `H` is not structured or outside the classified family.
    """
    n = fmap.n
    hmap = fmap - PolynomialMap.identity(n)
    if all(h.is_zero() for h in hmap):
        return FactorSequence(n)
    if not CharacteristicCheck().is_nilpotent(hmap):
        raise NotNilpotentError('The Jacobian matrix of H is not nilpotent.')
    try:
        validate_structured_shape(hmap)
    except ShapeError as e:
        raise RecoveryError('H is outside the classified family: %s' % e, component=e.component)

    state = DecompositionState(fmap, verify)
    params = recover_family(hmap)
    state.params = params
    if params.case == 'cor1':
        _reduce_cor1(state, affine=True)
    elif params.case == 'cor2':
        _reduce_cor2(state)
    else:
        _reduce_main(state)

    sequence = state.factor_sequence()
    _check(compose_factors(sequence) == fmap, 'The factors do not compose to the original map.')
    logger.info('Decomposed a %s-case map into %d factors (elementary only: %s).', params.case, len(sequence),
                sequence.elementary_only)
    return sequence
