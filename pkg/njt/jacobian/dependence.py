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
Linear dependence over the rationals of polynomials and of symbolic vectors (such as Jacobian rows).
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from njt.polyring import order_key
from njt.utils import null_space, primitive_integer_vector, rank, rational_matrix

logger = logging.getLogger(__name__)


def _coefficient_matrix(vectors):
    """
    Rows are the flattened coefficient vectors; columns are `(position, monomial)` pairs in canonical term order.
    """
    columns = set()
    for vector in vectors:
        for position, poly in enumerate(vector):
            for exponents, _ in poly.terms():
                columns.add((position, exponents))
    columns = sorted(columns, key=lambda column: (column[0], tuple(-k for k in order_key(column[1]))))
    index = {column: j for j, column in enumerate(columns)}
    rows = []
    for vector in vectors:
        row = [0] * len(columns)
        for position, poly in enumerate(vector):
            for exponents, coefficient in poly.terms():
                row[index[(position, exponents)]] = coefficient
        rows.append(row)
    return rows, columns


def vector_dependence_rank(vectors):
    """
    Rank of a family of polynomial vectors and a basis of the linear relations between them.

    :param vectors: Sequence of equally long sequences of `Polynomial`.
    :type vectors: `list`
    :return: Tuple `(rank, kernel)`; each kernel vector `v` satisfies `sum_i v_i vectors[i] = 0` and is a primitive
             integer vector with positive first non-zero entry.
    :rtype: `tuple`
    """
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0, []
    rows, columns = _coefficient_matrix(vectors)
    if not columns:
        # every vector is zero
        kernel = [[int(i == j) for i in range(len(vectors))] for j in range(len(vectors))]
        return 0, [primitive_integer_vector(v) for v in kernel]
    matrix = rational_matrix(rows)
    matrix_rank = rank(matrix)
    kernel = [primitive_integer_vector(v) for v in null_space(matrix.T.copy())]
    logger.debug('Rank %d over %d vectors, %d monomial columns', matrix_rank, len(vectors), len(columns))
    return matrix_rank, kernel


def linear_dependence_rank(polys):
    """
    Rank of the coefficient matrix of `polys` (rows are polynomials, columns are monomials) and a basis of the exact
    dependence relations.

    :param polys: Sequence of polynomials in a common ring.
    :type polys: `list`
    :return: Tuple `(rank, kernel)`.
    :rtype: `tuple`
    """
    return vector_dependence_rank([[p] for p in polys])


def jacobian_row_dependence(jac):
    """
    Rank and relations of the rows of a polynomial matrix, each row flattened to its monomial coefficients.

    :type jac: `PolyMatrix`
    :rtype: `tuple`
    """
    return vector_dependence_rank(jac.rows)
