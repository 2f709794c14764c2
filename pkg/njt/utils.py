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
Module providing convenience functions: seeding, rational numbers, exact linear algebra over the rationals and JSON
file handling.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import json
import logging
import numbers
import os
import tempfile
from fractions import Fraction

import numpy as np
from scipy.special import factorial

from njt.exceptions import DimensionError, ParseError, SingularMatrixError

logger = logging.getLogger(__name__)

# -------------------------------------------------------------------------------------------- RANDOM NUMBER GENERATORS


def master_seed(seed):
    """
    Set the seed for all random number generators used in the library. This ensures experiments reproducibility and
    stable testing.

    :param seed: The value to be seeded in the random number generators.
    :type seed: `int`
    """
    import random

    if not isinstance(seed, numbers.Integral):
        raise TypeError('The seed for random number generators has to be an integer.')

    # Set Python seed
    random.seed(seed)

    # Set Numpy seed
    np.random.seed(seed)


def get_rng(seed=None):
    """
    Return a random state. With `seed=None` the seed is drawn from the global numpy generator, so results follow
    `master_seed`.

    :param seed: Optional seed for a private generator.
    :type seed: `int` or `None`
    :return: A numpy random state.
    :rtype: `np.random.RandomState`
    """
    if seed is None:
        seed = np.random.randint(2 ** 31 - 1)
    return np.random.RandomState(seed)

# ----------------------------------------------------------------------------------------------------------- RATIONALS


def to_rational(value):
    """
    Convert an integer, a `Fraction` or a string such as `'-3/2'` into a `Fraction`.

    :param value: Value to convert.
    :type value: `int`, `Fraction` or `str`
    :return: The exact rational value.
    :rtype: `Fraction`
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError('Booleans are not rational numbers.')
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError('Malformed rational number %r.' % value)
    raise ParseError('Cannot interpret %r as a rational number.' % (value,))


def rational_str(value):
    """
    Print a rational as `p` or `p/q`.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


def inverse_factorial(k):
    """
    Exact value of `1/k!`.

    :param k: Non-negative integer.
    :type k: `int`
    :rtype: `Fraction`
    """
    return Fraction(1, int(factorial(k, exact=True)))

# ---------------------------------------------------------------------------------------------- EXACT LINEAR ALGEBRA


def rational_matrix(rows):
    """
    Build an object-dtype numpy array holding `Fraction` entries.

    :param rows: Nested sequence of rationals, rectangular.
    :type rows: `list`
    :return: A 2D array of `Fraction`.
    :rtype: `np.ndarray`
    """
    rows = [[to_rational(v) for v in row] for row in rows]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise DimensionError('Matrix rows have different lengths.')
    n_cols = len(rows[0]) if rows else 0
    matrix = np.empty((len(rows), n_cols), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            matrix[i, j] = v
    return matrix


def row_echelon(matrix):
    """
    Reduced row echelon form over the rationals, computed exactly.

    :param matrix: A 2D array of `Fraction` (object dtype). It is not modified.
    :type matrix: `np.ndarray`
    :return: Tuple of the reduced matrix and the list of pivot columns.
    :rtype: `tuple(np.ndarray, list)`
    """
    m = matrix.copy()
    n_rows, n_cols = m.shape
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        nonzero = [i for i in range(piv_r, n_rows) if m[i, piv_c] != 0]
        if not nonzero:
            continue
        i_row = nonzero[0]
        if i_row != piv_r:
            m[[piv_r, i_row], :] = m[[i_row, piv_r], :]
        m[piv_r, :] = m[piv_r, :] / m[piv_r, piv_c]
        for r in range(n_rows):
            if r != piv_r and m[r, piv_c] != 0:
                m[r, :] = m[r, :] - m[piv_r, :] * m[r, piv_c]
        pivots.append(piv_c)
        piv_r += 1
    return m, pivots


def rank(matrix):
    """
    Exact rank of a rational matrix.
    """
    if matrix.size == 0:
        return 0
    return len(row_echelon(matrix)[1])


def null_space(matrix):
    """
    Basis of the right kernel `{v : matrix . v = 0}`, one exact vector per free column.

    :param matrix: A 2D array of `Fraction`.
    :type matrix: `np.ndarray`
    :return: List of kernel vectors, each a list of `Fraction`.
    :rtype: `list`
    """
    n_cols = matrix.shape[1]
    if matrix.shape[0] == 0:
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    reduced, pivots = row_echelon(matrix)
    basis = []
    for free in range(n_cols):
        if free in pivots:
            continue
        vector = [Fraction(0)] * n_cols
        vector[free] = Fraction(1)
        for row, piv_c in enumerate(pivots):
            vector[piv_c] = -reduced[row, free]
        basis.append(vector)
    return basis


def primitive_integer_vector(vector):
    """
    Scale a rational vector to the primitive integer vector on the same line whose first non-zero entry is positive.
    """
    from math import gcd

    vector = [Fraction(v) for v in vector]
    lcm = 1
    for v in vector:
        lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return [Fraction(0)] * len(vector)
    sign = 1
    for v in ints:
        if v != 0:
            sign = 1 if v > 0 else -1
            break
    return [Fraction(sign * v // g) for v in ints]


def determinant(matrix):
    """
    Exact determinant of a square rational matrix by Gaussian elimination.
    """
    n_rows, n_cols = matrix.shape
    if n_rows != n_cols:
        raise DimensionError('Determinant of a non-square matrix.')
    m = matrix.copy()
    det = Fraction(1)
    for c in range(n_cols):
        nonzero = [i for i in range(c, n_rows) if m[i, c] != 0]
        if not nonzero:
            return Fraction(0)
        i_row = nonzero[0]
        if i_row != c:
            m[[c, i_row], :] = m[[i_row, c], :]
            det = -det
        det *= m[c, c]
        for r in range(c + 1, n_rows):
            if m[r, c] != 0:
                m[r, :] = m[r, :] - m[c, :] * (m[r, c] / m[c, c])
    return det


def inverse(matrix):
    """
    Exact inverse of a square rational matrix by Gauss-Jordan elimination.

    :param matrix: A square 2D array of `Fraction`.
    :type matrix: `np.ndarray`
    :return: The inverse matrix.
    :rtype: `np.ndarray`
    :raises SingularMatrixError: if the matrix is not invertible.
    """
    n_rows, n_cols = matrix.shape
    if n_rows != n_cols:
        raise DimensionError('Inverse of a non-square matrix.')
    augmented = np.concatenate((matrix, rational_matrix(np.eye(n_rows, dtype=int).tolist())), axis=1)
    reduced, pivots = row_echelon(augmented)
    if pivots[:n_rows] != list(range(n_rows)):
        raise SingularMatrixError('Matrix is singular.')
    return reduced[:, n_rows:]

# ----------------------------------------------------------------------------------------------------------- FILE I/O


def read_json(path):
    """
    Load a UTF-8 JSON file.

    :raises ParseError: if the content is not valid JSON.
    """
    with open(path, 'r', encoding='utf-8') as f:
        try:
            return json.load(f)
        except ValueError as e:
            raise ParseError('Invalid JSON in %s: %s' % (path, e))


def dumps_json(content):
    """
    Deterministic JSON serialization used for every emitted file and report.
    """
    return json.dumps(content, indent=2, sort_keys=True)


def write_json_atomic(path, content):
    """
    Write `content` as JSON to `path` atomically: data goes to a temporary file in the same folder which then replaces
    the target.

    :param path: Destination file.
    :type path: `str`
    :param content: JSON-serializable object.
    """
    folder = os.path.dirname(os.path.abspath(path))
    make_directory(folder)
    fd, tmp_path = tempfile.mkstemp(dir=folder, prefix='.tmp-', suffix='.json')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            f.write(dumps_json(content))
            f.write('\n')
        os.replace(tmp_path, path)
    except Exception:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    logger.debug('Wrote %s', path)


def make_directory(dir_path):
    """
    Creates the specified tree of directories if needed.

    :param dir_path: (str) directory or file path
    :return: None
    """
    if not os.path.exists(dir_path):
        os.makedirs(dir_path)
