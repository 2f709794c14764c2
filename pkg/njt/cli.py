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
Command-line entry point `nj`. Every subcommand prints a JSON report on stdout; errors are reported on stderr and
mapped to the exit codes below.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import argparse
import logging
import os
import sys

from njt import DEFAULT_METHOD
from njt.exceptions import DimensionError, InconsistencyError, NotNilpotentError, ParamsError, ParseError, \
    RecoveryError, ShapeError, SingularMatrixError
from njt.family import FamilyParams, build, sample_params, validate_params
from njt.inverter import compose_factors, decompose, formal_inverse, invert_factor_sequence, verify_inverse
from njt.jacobian import PolynomialMap, check_nilpotent, get_checker, jacobian_row_dependence, \
    linear_dependence_rank, nilpotency_index, validate_structured_shape
from njt.polyring import Polynomial
from njt.utils import dumps_json, get_rng, rational_str, read_json, write_json_atomic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_NILPOTENT = 1
EXIT_PARSE = 2
EXIT_SHAPE = 3
EXIT_OUTSIDE_FAMILY = 4
EXIT_INCONSISTENT = 5

_exit_codes = [
    (ParseError, EXIT_PARSE),
    (ShapeError, EXIT_SHAPE),
    (ParamsError, EXIT_SHAPE),
    (DimensionError, EXIT_SHAPE),
    (NotNilpotentError, EXIT_NOT_NILPOTENT),
    (RecoveryError, EXIT_OUTSIDE_FAMILY),
    (InconsistencyError, EXIT_INCONSISTENT),
    (SingularMatrixError, EXIT_INCONSISTENT)
]

ALL_METHODS = ('power', 'char', 'equations')


def _emit(report):
    print(dumps_json(report))


def _load_map(path):
    return PolynomialMap.from_json(read_json(path))


def _relations(rank, kernel):
    return {'rank': rank, 'kernel': [[rational_str(v) for v in vector] for vector in kernel]}


def cmd_check(args):
    hmap = _load_map(args.file)
    if args.method == 'all':
        methods = list(ALL_METHODS)
        try:
            validate_structured_shape(hmap)
        except ShapeError as e:
            logger.info('Skipping the equation system: %s', e)
            methods.remove('equations')
    else:
        methods = [args.method]

    residuals = {}
    for method in methods:
        residuals[method] = [str(r) for r in get_checker(method).residuals(hmap) if not r.is_zero()]
    verdicts = {method: not residuals[method] for method in methods}
    if len(set(verdicts.values())) > 1:
        raise InconsistencyError('Nilpotency tests disagree: %s' % verdicts)
    if args.method == 'all' and 'equations' not in methods:
        verdicts['equations'] = None

    nilpotent = all(verdicts[method] for method in methods)
    report = {
        'nilpotent': nilpotent,
        'method': args.method,
        # with --method all every test agrees, the characteristic coefficients are reported
        'residuals': residuals['char' if args.method == 'all' else args.method],
        'verdicts': verdicts,
        'nilpotency_index': nilpotency_index(hmap.jacobian())
    }
    report.update(_relations(*linear_dependence_rank(list(hmap))))
    _emit(report)
    return EXIT_OK if nilpotent else EXIT_NOT_NILPOTENT


def _generated_map(params):
    hmap = build(params)
    # self-verification before anything is written
    verdicts = check_nilpotent(hmap, ALL_METHODS)
    if not all(verdicts.values()):
        raise InconsistencyError('Generated map is not nilpotent: %s' % verdicts)
    return hmap


def cmd_gen(args):
    if args.random is not None:
        n, max_degree = args.random
        rng = get_rng(args.seed)
        params_list = [sample_params(n, max_degree, rng=rng, case=args.case) for _ in range(args.count)]
    elif args.params is not None:
        params = FamilyParams.from_json(read_json(args.params))
        validate_params(params)
        params_list = [params]
    else:
        raise ParamsError('a params file or --random N D is required.', condition='schema')

    maps = [_generated_map(params) for params in params_list]
    if args.output:
        paths = []
        for i, hmap in enumerate(maps):
            path = os.path.join(args.output, 'map_%03d.json' % i)
            write_json_atomic(path, hmap.to_json())
            paths.append(path)
        _emit({'written': paths})
    elif len(maps) == 1:
        _emit(maps[0].to_json())
    else:
        _emit([hmap.to_json() for hmap in maps])
    return EXIT_OK


def cmd_invert(args):
    fmap = _load_map(args.file)
    if args.raw_h:
        fmap = fmap + PolynomialMap.identity(fmap.n)
    sequence = decompose(fmap)
    inverse = compose_factors(invert_factor_sequence(sequence))
    verified = verify_inverse(fmap, inverse, sequence)
    if not verified:
        raise InconsistencyError('The inverse built from the factors does not invert the map.')

    oracle = formal_inverse(fmap, degree_bound=max(1, int(inverse.degree())), factors=sequence)
    agreement = oracle.exact and oracle.inverse == inverse
    report = {
        'factors': sequence.to_json(),
        'inverse': inverse.to_strings(),
        'verified': verified,
        'elementary_only': sequence.elementary_only,
        'oracle_agreement': agreement
    }
    if args.output:
        write_json_atomic(os.path.join(args.output, 'factors.json'), sequence.to_json())
        write_json_atomic(os.path.join(args.output, 'inverse.json'),
                          {'inverse': inverse.to_strings(), 'verified': verified})
    _emit(report)
    return EXIT_OK if agreement else EXIT_INCONSISTENT


def cmd_deps(args):
    hmap = _load_map(args.file)
    components = list(hmap)
    with_constant = components + [Polynomial.one(hmap.n)]
    report = {
        'components': _relations(*linear_dependence_rank(components)),
        'affine': _relations(*linear_dependence_rank(with_constant)),
        'jacobian_rows': _relations(*jacobian_row_dependence(hmap.jacobian()))
    }
    _emit(report)
    return EXIT_OK


def selftest_results():
    """
    Run the built-in fixtures through the whole pipeline.

    :return: Outcome per named check.
    :rtype: `dict`
    """
    from njt import catalog
    from njt.family import family_identities_hold

    results = {}
    example = catalog.example_map()
    results['example_nilpotent'] = all(check_nilpotent(example, ALL_METHODS).values())
    results['example_rebuilt'] = build(catalog.example_params()) == example
    results['example_independent'] = linear_dependence_rank(list(example))[0] == 3
    results['identities'] = family_identities_hold(catalog.five_dimensional_params())
    fixtures = [('example', catalog.example_params()),
                ('five_dimensional', catalog.five_dimensional_params()),
                ('cor1', catalog.cor1_params()),
                ('cor2', catalog.cor2_params())]
    for name, params in fixtures:
        hmap = build(params)
        fmap = hmap + PolynomialMap.identity(hmap.n)
        sequence = decompose(fmap)
        inverse = compose_factors(invert_factor_sequence(sequence))
        results['invert_%s' % name] = verify_inverse(fmap, inverse, sequence)
    return results


def cmd_selftest(args):
    results = selftest_results()
    passed = all(results.values())
    _emit({'passed': passed, 'checks': results})
    return EXIT_OK if passed else EXIT_INCONSISTENT


def make_parser():
    parser = argparse.ArgumentParser(prog='nj', description='Polynomial maps with nilpotent Jacobian matrix.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='More log output on stderr (repeatable).')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    check = subparsers.add_parser('check', help='Test nilpotency of the Jacobian matrix of a map H.')
    check.add_argument('file', help='Map file.')
    check.add_argument('--method', choices=list(ALL_METHODS) + ['all'], default=DEFAULT_METHOD)
    check.set_defaults(func=cmd_check)

    gen = subparsers.add_parser('gen', help='Build family members from parameters or at random.')
    gen.add_argument('params', nargs='?', help='Parameter file.')
    gen.add_argument('--random', nargs=2, type=int, metavar=('N', 'D'), help='Dimension and degree cap.')
    gen.add_argument('--case', choices=['main', 'cor1', 'cor2'], default='main')
    gen.add_argument('--seed', type=int)
    gen.add_argument('--count', type=int, default=1)
    gen.add_argument('-o', '--output', help='Output folder.')
    gen.set_defaults(func=cmd_gen)

    invert = subparsers.add_parser('invert', help='Factor F = X + H and compute its inverse.')
    invert.add_argument('file', help='Map file holding F, or H with --raw-h.')
    invert.add_argument('--raw-h', action='store_true')
    invert.add_argument('-o', '--output', help='Output folder for factors.json and inverse.json.')
    invert.set_defaults(func=cmd_invert)

    deps = subparsers.add_parser('deps', help='Linear dependence of the components and of the Jacobian rows.')
    deps.add_argument('file', help='Map file.')
    deps.set_defaults(func=cmd_deps)

    selftest = subparsers.add_parser('selftest', help='Run the built-in fixtures.')
    selftest.set_defaults(func=cmd_selftest)
    return parser


def _configure_logging(verbosity):
    if verbosity <= 0:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('[%(levelname)s] %(name)s: %(message)s'))
    package_logger = logging.getLogger('njt')
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.INFO if verbosity == 1 else logging.DEBUG)


def main(argv=None):
    """
    Run `nj` with the given arguments and return the exit code.
    """
    args = make_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except tuple(error for error, _ in _exit_codes) as e:
        code = next(code for error, code in _exit_codes if isinstance(e, error))
        print('nj %s: %s' % (args.command, e), file=sys.stderr)
        return code
    except (IOError, OSError) as e:
        print('nj %s: %s' % (args.command, e), file=sys.stderr)
        return EXIT_PARSE


if __name__ == '__main__':
    sys.exit(main())
