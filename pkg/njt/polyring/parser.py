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
Recursive descent parser of the polynomial expression language::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ['^' nat]
    atom     := rational | variable | '(' expr ')'
    rational := nat ['/' nat]
    variable := 'x' | 'y' | 'z' | 'x' nat

Whitespace is ignored. `x`, `y` and `z` are aliases of `x1`, `x2` and `x3`.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import re
from fractions import Fraction

from njt.exceptions import ParseError
from njt.polyring.polynomial import Polynomial

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r'(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/()])')
_INDEXED = re.compile(r'x(\d+)$')
_ALIASES = {'x': 1, 'y': 2, 'z': 3}


def _tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN.match(text, position)
        if match is None:
            raise ParseError('Unexpected character %r' % text[position], position)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), position))
        position = match.end()
    tokens.append(('end', None, len(text)))
    return tokens


class _Parser(object):
    def __init__(self, text, n, aliases):
        self.tokens = _tokenize(text)
        self.index = 0
        self.n = n
        self.aliases = dict(_ALIASES)
        if aliases:
            self.aliases.update(aliases)

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def at_op(self, op):
        kind, value, _ = self.peek()
        return kind == 'op' and value == op

    def expect_op(self, op):
        kind, value, position = self.peek()
        if kind != 'op' or value != op:
            raise ParseError('Expected %r' % op, position)
        self.advance()

    def expect_number(self, what):
        kind, value, position = self.peek()
        if kind != 'number':
            raise ParseError('Expected %s' % what, position)
        self.advance()
        return int(value)

    def parse(self):
        result = self.expr()
        kind, value, position = self.peek()
        if kind != 'end':
            raise ParseError('Unexpected token %r' % value, position)
        return result

    def expr(self):
        negate = False
        if self.at_op('-'):
            self.advance()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.at_op('+') or self.at_op('-'):
            _, op, _ = self.advance()
            operand = self.term()
            result = result + operand if op == '+' else result - operand
        return result

    def term(self):
        result = self.factor()
        while self.at_op('*'):
            self.advance()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.atom()
        if self.at_op('^'):
            self.advance()
            base = base ** self.expect_number('a natural exponent')
        return base

    def atom(self):
        kind, value, position = self.peek()
        if kind == 'number':
            self.advance()
            numerator = int(value)
            if self.at_op('/'):
                self.advance()
                denominator_position = self.peek()[2]
                denominator = self.expect_number('a denominator')
                if denominator == 0:
                    raise ParseError('Malformed rational: zero denominator', denominator_position)
                return Polynomial.constant(self.n, Fraction(numerator, denominator))
            return Polynomial.constant(self.n, numerator)
        if kind == 'name':
            self.advance()
            return Polynomial.variable(self.n, self.variable_index(value, position))
        if kind == 'op' and value == '(':
            self.advance()
            inner = self.expr()
            self.expect_op(')')
            return inner
        if kind == 'end':
            raise ParseError('Unexpected end of expression', position)
        raise ParseError('Expected a number, a variable or "(" but found %r' % value, position)

    def variable_index(self, name, position):
        if name in self.aliases:
            index = self.aliases[name]
        else:
            match = _INDEXED.match(name)
            if match is None:
                raise ParseError('Unknown variable %r' % name, position)
            index = int(match.group(1))
            if index < 1:
                raise ParseError('Variable indices start at 1', position)
        if index > self.n:
            raise ParseError('Variable %s has index %d but the ring has %d variables' % (name, index, self.n),
                             position)
        return index


def parse_polynomial(text, n, aliases=None):
    """
    Parse an expression into a canonical `Polynomial`.

    :param text: The expression.
    :type text: `str`
    :param n: Number of variables of the ambient ring.
    :type n: `int`
    :param aliases: Extra variable names, mapped to 1-based indices (e.g. `{'T': 1}` for univariate input).
    :type aliases: `dict`
    :return: The parsed polynomial.
    :rtype: `Polynomial`
    :raises ParseError: on syntax errors, malformed rationals or out-of-range variables.
    """
    if not isinstance(text, str):
        raise ParseError('Expression must be a string, got %r' % (text,))
    return _Parser(text, n, aliases).parse()


def parse_univariate(text, name='T'):
    """
    Parse a polynomial in one variable written with the letter `name` (or `x`).
    """
    return parse_polynomial(text, 1, aliases={name: 1})


def format_polynomial(poly, names=None):
    """
    Print a polynomial so that `parse_polynomial(format_polynomial(p), p.n) == p`.
    """
    return poly.to_string(names)


def format_univariate(poly, name='T'):
    return poly.to_string([name])
