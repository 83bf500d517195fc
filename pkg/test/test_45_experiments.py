#!/usr/bin/env python3
# -*- coding: utf-8 -*-
'''
@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 Frank Brehm, Berlin
@license: GPL3
@summary: test script (and module) for unit tests on the experiment runner
          and the application object
'''

import os
import sys
import logging
import tempfile
import json
import io
import contextlib

from pathlib import Path

try:
    import unittest2 as unittest
except ImportError:
    import unittest

from unittest import mock

import yaml

libdir = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, libdir)

from general import RmpsTypicalityTestcase, get_arg_verbose, init_root_logger

LOG = logging.getLogger('test_experiments')

SMALL_VARIANCE_SCAN = ['N_grid=[4, 6]', 'chi_values=[2]', 'samples=12']


# =============================================================================
class TestExperiments(RmpsTypicalityTestcase):

    # -------------------------------------------------------------------------
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory(prefix='rmps-run-')
        self.base = Path(self.tmpdir.name)

    # -------------------------------------------------------------------------
    def tearDown(self):
        self.tmpdir.cleanup()

    # -------------------------------------------------------------------------
    def run_experiment(self, experiment, overrides, subdir, workers=1, manifest_format='json'):

        from rmps_typicality.experiments import run

        out = self.base / subdir
        manifest = run(
            out_dir=out, overrides=overrides, experiment=experiment, seed=42,
            workers=workers, manifest_format=manifest_format)
        return out, manifest

    # -------------------------------------------------------------------------
    def read_csv(self, path):
        lines = Path(path).read_text(encoding='utf-8').splitlines()
        return lines[0].split(','), [line.split(',') for line in lines[1:]]

    # -------------------------------------------------------------------------
    def test_import(self):

        LOG.info("Testing import of rmps_typicality.experiments and rmps_typicality.app ...")
        import rmps_typicality.experiments
        LOG.debug("Version of rmps_typicality.experiments: {!r}".format(
            rmps_typicality.experiments.__version__))
        import rmps_typicality.app
        LOG.debug("Version of rmps_typicality.app: {!r}".format(
            rmps_typicality.app.__version__))

    # -------------------------------------------------------------------------
    def test_catalog(self):

        LOG.info("Testing the catalog of experiments.")

        from rmps_typicality.config import EXPERIMENT_NAMES
        from rmps_typicality.experiments import list_experiments, default_config
        from rmps_typicality.experiments import CSV_COLUMNS

        catalog = list_experiments()
        self.assertEqual([exp['name'] for exp in catalog], list(EXPERIMENT_NAMES))
        for exp in catalog:
            self.assertTrue(exp['description'])
            self.assertEqual(exp['defaults']['experiment'], exp['name'])
            self.assertIn(exp['name'], CSV_COLUMNS)

        cfg = default_config('concentration-tail')
        self.assertEqual(cfg.chi_rule, 'poly')
        self.assertEqual(cfg.chi_cap, 128)
        self.assertEqual(cfg.grid_points()[-1], (6, 89))
        self.assertEqual(default_config('weingarten_check').samples, 100000)

    # -------------------------------------------------------------------------
    def test_load_config(self):

        LOG.info("Testing the assembly of a run configuration.")

        from rmps_typicality.errors import UnknownExperimentError, UnknownConfigKeyError
        from rmps_typicality.experiments import load_config

        path = self.base / 'campaign.yaml'
        path.write_text('experiment: distance_scan\nsamples: 40\nN_grid: [4]\n', encoding='utf-8')

        cfg = load_config(path)
        self.assertEqual(cfg.experiment, 'distance_scan')
        self.assertEqual(cfg.samples, 40)
        self.assertEqual(cfg.chi_values, [2, 4, 8])

        cfg = load_config(path, overrides=['experiment=variance_scan', 'samples=50'])
        self.assertEqual(cfg.experiment, 'variance_scan')
        self.assertEqual(cfg.samples, 50)

        cfg = load_config(
            path, overrides=['experiment=variance_scan', 'N_grid=[8]'],
            experiment='lipschitz-probe', seed=7)
        self.assertEqual(cfg.experiment, 'lipschitz_probe')
        self.assertEqual(cfg.pairs, 200)
        self.assertEqual(cfg.master_seed, 7)

        cfg = load_config(experiment='weingarten_check', overrides=['master_seed=3'], seed=5)
        self.assertEqual(cfg.master_seed, 5)
        self.assertEqual(cfg.N_grid, [2])

        with self.assertRaises(UnknownExperimentError) as cm:
            load_config(experiment='fig7')
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        path.write_text('sampels: 40\n', encoding='utf-8')
        with self.assertRaises(UnknownConfigKeyError) as cm:
            load_config(path)
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_csv_values(self):

        LOG.info("Testing the rendering of CSV cells.")

        from rmps_typicality.experiments import format_csv_value, CsvWriter

        self.assertEqual(format_csv_value(None), '')
        self.assertEqual(format_csv_value(True), '1')
        self.assertEqual(format_csv_value(12), '12')
        self.assertEqual(format_csv_value(0.1), '0.10000000000000001')
        self.assertEqual(format_csv_value(1.0), '1')
        self.assertEqual(float(format_csv_value(1 / 3.0)), 1 / 3.0)

        path = self.base / 'table.csv'
        with CsvWriter(path, ('a', 'b')) as writer:
            self.assertEqual(path.read_text(encoding='utf-8'), 'a,b\n')
            writer.write_rows([{'a': 1, 'b': 0.5}, {'a': 2, 'b': None}])
            self.assertEqual(writer.rows, 2)
            self.assertEqual(path.read_text(encoding='utf-8'), 'a,b\n1,0.5\n2,\n')

    # -------------------------------------------------------------------------
    def test_variance_scan_run(self):

        LOG.info("Testing a complete variance scan run.")

        out, manifest = self.run_experiment('variance_scan', SMALL_VARIANCE_SCAN, 'serial')
        csv_path = out / 'variance_scan.csv'
        header, rows = self.read_csv(csv_path)
        self.assertEqual(header, ['N', 'chi', 'samples', 'f_mean', 'f_var', 'f_stderr'])
        self.assertEqual([row[:3] for row in rows], [['4', '2', '12'], ['6', '2', '12']])

        data = json.loads((out / 'manifest.json').read_text(encoding='utf-8'))
        if self.verbose > 1:
            LOG.debug("Manifest:\n{}".format(json.dumps(data, indent=4)))
        self.assertEqual(data['experiment'], 'variance_scan')
        self.assertEqual(data['master_seed'], 42)
        self.assertEqual(data['config']['samples'], 12)
        self.assertEqual(len(data['config_hash']), 64)
        self.assertFalse(data['interrupted'])
        self.assertIn(str(csv_path), data['artifacts'])
        self.assertIn('N=4,chi=2', data['wall_clock'])
        self.assertEqual(data['summary']['grid_points'], 2)
        self.assertEqual(manifest.experiment, 'variance_scan')

        out2, manifest2 = self.run_experiment(
            'variance_scan', SMALL_VARIANCE_SCAN, 'parallel', workers=2)
        self.assertEqual(
            (out2 / 'variance_scan.csv').read_bytes(), csv_path.read_bytes())
        self.assertEqual(manifest2.config_hash, manifest.config_hash)

    # -------------------------------------------------------------------------
    def test_interrupted_run(self):

        LOG.info("Testing an interrupted run.")

        from rmps_typicality import experiments

        real_iter = experiments.iter_variance_scan

        def interrupted_scan(config, executor=None):
            for record in real_iter(config, executor=executor):
                yield record
                raise KeyboardInterrupt()

        with mock.patch.object(experiments, 'iter_variance_scan', interrupted_scan):
            with self.assertRaises(KeyboardInterrupt):
                self.run_experiment('variance_scan', SMALL_VARIANCE_SCAN, 'stopped')

        out = self.base / 'stopped'
        header, rows = self.read_csv(out / 'variance_scan.csv')
        self.assertEqual(len(rows), 1)
        data = json.loads((out / 'manifest.json').read_text(encoding='utf-8'))
        self.assertTrue(data['interrupted'])

    # -------------------------------------------------------------------------
    def test_small_experiments(self):

        LOG.info("Testing small runs of all other experiments.")

        cases = (
            ('distance_scan', ['N_grid=[4]', 'chi_values=[2]', 'samples=10', 'L=2'], 1),
            ('average_state_distance', ['N_grid=[2]', 'sample_grid=[5, 20]'], 2),
            ('eigen_histogram', ['N_grid=[4]', 'samples=10', 'bins=5'], 5),
            ('lipschitz_probe', [
                'N_grid=[4]', 'chi_values=[2]', 'pairs=3',
                'perturbation_scales=[0.01, 0.001]'], 2),
            ('concentration_tail', [
                'N_grid=[3, 4]', 'chi_rule=fixed', 'chi_values=[2]', 'samples=100',
                'epsilon_grid=[0.0, 0.05, 0.1, 0.2]'], 8),
            ('weingarten_check', ['N_grid=[1]', 'samples=50'], 4),
        )

        from rmps_typicality.experiments import CSV_COLUMNS

        for experiment, overrides, n_rows in cases:
            LOG.debug("Running {!r} ...".format(experiment))
            out, manifest = self.run_experiment(
                experiment, overrides, experiment, manifest_format='yaml')
            header, rows = self.read_csv(out / '{}.csv'.format(experiment))
            self.assertEqual(tuple(header), CSV_COLUMNS[experiment])
            self.assertEqual(len(rows), n_rows, experiment)
            for row in rows:
                self.assertEqual(len(row), len(header))

            data = yaml.safe_load((out / 'manifest.yaml').read_text(encoding='utf-8'))
            self.assertEqual(data['experiment'], experiment)
            self.assertTrue(data['summary'])

        data = yaml.safe_load(
            (self.base / 'lipschitz_probe' / 'manifest.yaml').read_text(encoding='utf-8'))
        self.assertTrue(data['summary']['within_bound'])
        data = yaml.safe_load(
            (self.base / 'concentration_tail' / 'manifest.yaml').read_text(encoding='utf-8'))
        self.assertIn('c2_prime', data['summary']['fit'])

    # -------------------------------------------------------------------------
    def test_app(self):

        LOG.info("Testing the application object and its exit codes.")

        from rmps_typicality.app import RmpsTypicalityApp
        from rmps_typicality.app import EXIT_OK, EXIT_CONFIG_ERROR
        from rmps_typicality.app import EXIT_NUMERICAL_ERROR, EXIT_INTERRUPTED
        from rmps_typicality.errors import NoConvergenceError

        def app(*args):
            return RmpsTypicalityApp(['-q'] + list(args), appname='rmps-typicality')

        out = str(self.base / 'app')
        argv = ['-e', 'variance_scan', '-w', '1', '--seed', '0x10', '-o', out]
        for override in SMALL_VARIANCE_SCAN:
            argv += ['-s', override]

        application = app(*argv)
        LOG.debug("Application: {}".format(application))
        self.assertEqual(application.appname, 'rmps-typicality')
        self.assertEqual(application.args.seed, 16)
        self.assertEqual(application(), EXIT_OK)
        self.assertEqual(application.manifest.master_seed, 16)
        self.assertTrue((self.base / 'app' / 'variance_scan.csv').exists())

        self.assertEqual(app('-o', out, '-s', 'samples=0')(), EXIT_CONFIG_ERROR)
        self.assertEqual(app('-o', out, '-e', 'fig7')(), EXIT_CONFIG_ERROR)
        self.assertEqual(app('-o', out, '-c', str(self.base / 'missing.yaml'))(),
                         EXIT_CONFIG_ERROR)

        with mock.patch(
                'rmps_typicality.app.ExperimentRunner.run',
                side_effect=NoConvergenceError('ARPACK', 40)):
            self.assertEqual(app(*argv)(), EXIT_NUMERICAL_ERROR)

        with mock.patch(
                'rmps_typicality.app.ExperimentRunner.run', side_effect=KeyboardInterrupt()):
            self.assertEqual(app(*argv)(), EXIT_INTERRUPTED)

        for bad in (['--seed', '-1'], ['--seed', str(2 ** 64)], ['-w', '0']):
            with contextlib.redirect_stderr(io.StringIO()):
                with self.assertRaises(SystemExit) as cm:
                    app(*bad)
            self.assertEqual(cm.exception.code, 2)

        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            self.assertEqual(app('-l')(), EXIT_OK)
        listing = buf.getvalue()
        self.assertIn('variance_scan', listing)
        self.assertIn('weingarten_check', listing)


# =============================================================================
if __name__ == '__main__':

    verbose = get_arg_verbose()
    if verbose is None:
        verbose = 0
    init_root_logger(verbose)

    LOG.info("Starting tests ...")

    suite = unittest.TestSuite()

    suite.addTest(TestExperiments('test_import', verbose))
    suite.addTest(TestExperiments('test_catalog', verbose))
    suite.addTest(TestExperiments('test_load_config', verbose))
    suite.addTest(TestExperiments('test_csv_values', verbose))
    suite.addTest(TestExperiments('test_variance_scan_run', verbose))
    suite.addTest(TestExperiments('test_interrupted_run', verbose))
    suite.addTest(TestExperiments('test_small_experiments', verbose))
    suite.addTest(TestExperiments('test_app', verbose))

    runner = unittest.TextTestRunner(verbosity=verbose)

    result = runner.run(suite)

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4
