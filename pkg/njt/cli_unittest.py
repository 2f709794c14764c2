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

import io
import json
import logging
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from njt.catalog import cor1_params, example_map, example_params
from njt.cli import EXIT_NOT_NILPOTENT, EXIT_OK, EXIT_OUTSIDE_FAMILY, EXIT_PARSE, EXIT_SHAPE, main
from njt.family import build
from njt.jacobian import PolynomialMap, check_nilpotent
from njt.utils import master_seed, read_json, write_json_atomic

logger = logging.getLogger('testLogger')


class TestCommandLine(unittest.TestCase):
    def setUp(self):
        # Set master seed
        master_seed(1234)
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)

    def _file(self, name, content):
        path = os.path.join(self.folder, name)
        write_json_atomic(path, content)
        return path

    def _map_file(self, name, components):
        return self._file(name, {'n': len(components), 'components': components})

    def _run(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(argv))
        output = out.getvalue()
        report = json.loads(output) if output.strip() else None
        return code, report, err.getvalue()

    def test_check_example(self):
        path = self._file('example.json', example_map().to_json())
        code, report, _ = self._run('check', path, '--method', 'all')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report['nilpotent'])
        self.assertEqual(report['verdicts'], {'power': True, 'char': True, 'equations': True})
        self.assertEqual(report['residuals'], [])
        self.assertEqual(report['nilpotency_index'], 3)
        self.assertEqual((report['rank'], report['kernel']), (3, []))

    def test_check_not_nilpotent(self):
        path = self._map_file('square.json', ['x^2', '0', '0'])
        code, report, _ = self._run('check', path)
        self.assertEqual(code, EXIT_NOT_NILPOTENT)
        self.assertFalse(report['nilpotent'])
        self.assertEqual(report['method'], 'char')
        self.assertEqual(report['residuals'], ['2*x'])
        self.assertIsNone(report['nilpotency_index'])
        self.assertEqual(report['rank'], 1)
        self.assertEqual(len(report['kernel']), 2)
        self.assertTrue(all(isinstance(v, str) for vector in report['kernel'] for v in vector))

        code, report, _ = self._run('check', path, '--method', 'power')
        self.assertEqual(code, EXIT_NOT_NILPOTENT)
        self.assertEqual(report['method'], 'power')
        self.assertTrue(all(isinstance(r, str) for r in report['residuals']))

    def test_check_parse_error(self):
        path = self._map_file('broken.json', ['x +* y', '0', '0'])
        code, report, err = self._run('check', path)
        self.assertEqual(code, EXIT_PARSE)
        self.assertIsNone(report)
        self.assertIn('position', err)

        path = os.path.join(self.folder, 'invalid.json')
        with open(path, 'w') as f:
            f.write('{"n": ')
        self.assertEqual(self._run('check', path)[0], EXIT_PARSE)
        self.assertEqual(self._run('check', os.path.join(self.folder, 'missing.json'))[0], EXIT_PARSE)

    def test_check_unstructured(self):
        path = self._map_file('free.json', ['z', '0', '0'])
        code, report, _ = self._run('check', path, '--method', 'all')
        self.assertEqual(code, EXIT_OK)
        self.assertIsNone(report['verdicts']['equations'])
        self.assertTrue(report['verdicts']['power'])
        self.assertEqual(self._run('check', path, '--method', 'equations')[0], EXIT_SHAPE)

    def test_gen_from_params(self):
        path = self._file('params.json', example_params().to_json())
        code, report, _ = self._run('gen', path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(PolynomialMap.from_json(report), example_map())

    def test_gen_invalid_params(self):
        content = example_params().to_json()
        content['levels'][0]['P'] = ['0', '1', '1']
        path = self._file('params.json', content)
        code, _, err = self._run('gen', path)
        self.assertEqual(code, EXIT_SHAPE)
        self.assertIn('nice', err)

    def test_gen_random(self):
        code, first, _ = self._run('gen', '--random', '5', '3', '--seed', '42')
        self.assertEqual(code, EXIT_OK)
        _, second, _ = self._run('gen', '--random', '5', '3', '--seed', '42')
        self.assertEqual(first, second)
        hmap = PolynomialMap.from_json(first)
        self.assertTrue(all(check_nilpotent(hmap).values()))

    def test_gen_to_folder(self):
        output = os.path.join(self.folder, 'maps')
        code, report, _ = self._run('gen', '--random', '4', '2', '--seed', '1', '--count', '3', '--case', 'cor2',
                                    '-o', output)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(sorted(os.listdir(output)), ['map_000.json', 'map_001.json', 'map_002.json'])
        self.assertEqual(len(report['written']), 3)
        for name in os.listdir(output):
            path = os.path.join(output, name)
            self.assertEqual(self._run('check', path, '--method', 'all')[0], EXIT_OK)

    def test_gen_count_to_stdout(self):
        code, report, _ = self._run('gen', '--random', '3', '2', '--seed', '3', '--count', '2')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(report), 2)

    def test_gen_needs_input(self):
        self.assertEqual(self._run('gen')[0], EXIT_SHAPE)

    def test_invert_example(self):
        fmap = example_map() + PolynomialMap.identity(3)
        path = self._file('f.json', fmap.to_json())
        output = os.path.join(self.folder, 'out')
        code, report, _ = self._run('invert', path, '-o', output)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report['verified'])
        self.assertTrue(report['elementary_only'])
        self.assertTrue(report['oracle_agreement'])
        inverse = PolynomialMap.from_strings(report['inverse'])
        self.assertTrue(fmap.compose(inverse).is_identity())
        self.assertEqual(sorted(os.listdir(output)), ['factors.json', 'inverse.json'])
        self.assertEqual(read_json(os.path.join(output, 'inverse.json')),
                         {'inverse': report['inverse'], 'verified': True})
        self.assertEqual(read_json(os.path.join(output, 'factors.json')), report['factors'])

        path = self._file('h.json', example_map().to_json())
        code, raw, _ = self._run('invert', path, '--raw-h')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(raw, report)

    def test_invert_identity(self):
        path = self._map_file('identity.json', ['x', 'y', 'z'])
        code, report, _ = self._run('invert', path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report['factors']['factors'], [])
        self.assertEqual(report['inverse'], ['x', 'y', 'x3'])

    def test_invert_not_nilpotent(self):
        path = self._map_file('cubes.json', ['y^3', 'x^3', '0'])
        self.assertEqual(self._run('invert', path, '--raw-h')[0], EXIT_NOT_NILPOTENT)

    def test_invert_unstructured(self):
        # nilpotent but not structured, so outside the family
        for components in (['z', 'x^2', '0'], ['z', '0', '0']):
            path = self._map_file('free.json', components)
            code, report, err = self._run('invert', path, '--raw-h')
            self.assertEqual(code, EXIT_OUTSIDE_FAMILY)
            self.assertIsNone(report)
            self.assertIn('outside the classified family', err)

    def test_deps(self):
        code, report, _ = self._run('deps', self._file('example.json', example_map().to_json()))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report['components'], {'rank': 3, 'kernel': []})

        code, report, _ = self._run('deps', self._map_file('multiple.json', ['y - x^2', '2*y - 2*x^2', '0']))
        self.assertIn(['2', '-1', '0'], report['components']['kernel'])

        code, report, _ = self._run('deps', self._file('cor1.json', build(cor1_params()).to_json()))
        self.assertIn(['1', '1', '0'], report['components']['kernel'])
        self.assertEqual(report['jacobian_rows']['rank'], 1)

        self.assertEqual(self._run('deps', self._map_file('broken.json', ['(x', '0', '0']))[0], EXIT_PARSE)

    def test_selftest(self):
        code, report, _ = self._run('selftest')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report['passed'])
        self.assertTrue(all(report['checks'].values()))

    def test_verbose(self):
        path = self._file('example.json', example_map().to_json())
        code, _, _ = self._run('-vv', 'check', path)
        self.assertEqual(code, EXIT_OK)
        logging.getLogger('njt').handlers = []
        logging.getLogger('njt').setLevel(logging.NOTSET)


if __name__ == '__main__':
    unittest.main()
