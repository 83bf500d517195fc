#!/usr/bin/env python3
# -*- coding: utf-8 -*-
'''
@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 Frank Brehm, Berlin
@license: GPL3
@summary: test script (and module) for unit tests on the campaign configuration
'''

import os
import sys
import logging
import tempfile
import textwrap

from pathlib import Path

try:
    import unittest2 as unittest
except ImportError:
    import unittest

libdir = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, libdir)

from general import RmpsTypicalityTestcase, get_arg_verbose, init_root_logger

LOG = logging.getLogger('test_config')


# =============================================================================
class TestConfig(RmpsTypicalityTestcase):

    # -------------------------------------------------------------------------
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory(prefix='rmps-config-')

    # -------------------------------------------------------------------------
    def tearDown(self):
        self.tmpdir.cleanup()

    # -------------------------------------------------------------------------
    def write_file(self, name, content):
        path = Path(self.tmpdir.name) / name
        path.write_text(textwrap.dedent(content), encoding='utf-8')
        return path

    # -------------------------------------------------------------------------
    def test_import(self):

        LOG.info("Testing import of rmps_typicality.config ...")
        import rmps_typicality.config
        LOG.debug("Version of rmps_typicality.config: {!r}".format(
            rmps_typicality.config.__version__))

    # -------------------------------------------------------------------------
    def test_defaults(self):

        LOG.info("Testing the default configuration.")

        from rmps_typicality.config import CampaignConfig, EXPERIMENT_NAMES

        cfg = CampaignConfig().validate()
        if self.verbose > 1:
            LOG.debug("Default config:\n{!r}".format(cfg))
        self.assertEqual(cfg.experiment, 'variance_scan')
        self.assertEqual(cfg.D, 2)
        self.assertEqual(cfg.L, 1)
        self.assertEqual(cfg.boundary, 'obc')
        self.assertTrue(cfg.homogeneous)
        self.assertFalse(cfg.frozen)
        self.assertEqual(cfg.N_grid, [4, 6, 8, 10, 12, 14, 16])
        self.assertEqual(cfg.chi_values, [2, 4, 8])
        self.assertEqual(cfg.samples, 500)
        self.assertEqual(cfg.observable, 'sigma_x')
        self.assertEqual(cfg.epsilon_grid[0], 0.0)
        self.assertEqual(len(EXPERIMENT_NAMES), 7)

        self.assertEqual(len(cfg.grid_points()), 21)
        self.assertEqual(cfg.grid_points()[:2], [(4, 2), (6, 2)])
        self.assertEqual(cfg.grid_points()[7], (4, 4))

        d = cfg.dict()
        self.assertNotIn('__class_name__', d)
        self.assertEqual(cfg.as_dict()['__class_name__'], 'CampaignConfig')
        self.assertEqual(CampaignConfig(d), cfg)

        other = cfg.copy()
        other.samples = 7
        self.assertEqual(cfg.samples, 500)
        self.assertNotEqual(other, cfg)

    # -------------------------------------------------------------------------
    def test_coercion(self):

        LOG.info("Testing the coercion of single fields.")

        from rmps_typicality.errors import InvalidConfigValueError, UnknownConfigKeyError
        from rmps_typicality.config import CampaignConfig, normalize_experiment_name

        cfg = CampaignConfig(
            experiment='Concentration-Tail', boundary='PBC', homogeneous='no', samples='300',
            N_grid=5, phi_I=[1, [0, 1]])
        self.assertEqual(cfg.experiment, 'concentration_tail')
        self.assertEqual(cfg.boundary, 'pbc')
        self.assertFalse(cfg.homogeneous)
        self.assertEqual(cfg.samples, 300)
        self.assertEqual(cfg.N_grid, [5])
        self.assertEqual(cfg.phi_I, [1.0, [0.0, 1.0]])
        self.assertEqual(normalize_experiment_name('weingarten-check'), 'weingarten_check')

        bad_values = (
            ('samples', 0), ('samples', 2.5), ('samples', True), ('D', 1),
            ('boundary', 'open'), ('chi_rule', 'exponential'), ('chi_power', 0),
            ('master_seed', -1), ('master_seed', 2 ** 64), ('observable', 'sigma_w'),
            ('epsilon_grid', [0.1, -0.1]), ('sample_grid', [10, 10, 100]),
            ('perturbation_scales', [0.0]), ('phi_F', [0, 0]), ('homogeneous', 'maybe'),
            ('experiment', 'fig7'), ('N_grid', []), ('chi_power', float('nan')))
        for key, value in bad_values:
            with self.assertRaises(InvalidConfigValueError) as cm:
                CampaignConfig({key: value})
            e = cm.exception
            LOG.debug("%s raised: %s", e.__class__.__name__, e)
            self.assertIn(repr(key), str(e))

        with self.assertRaises(UnknownConfigKeyError) as cm:
            CampaignConfig({'sampels': 100})
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)
        self.assertIn("'sampels'", str(e))

        with self.assertRaises(UnknownConfigKeyError) as cm:
            CampaignConfig().foo
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_chi_rules(self):

        LOG.info("Testing the rules for the bond dimension.")

        from rmps_typicality.errors import InvalidConfigValueError
        from rmps_typicality.config import CampaignConfig

        cfg = CampaignConfig(chi_rule='linear', N_grid=[4, 6], L=1).validate()
        self.assertEqual(cfg.grid_points(), [(4, 3), (6, 5)])

        cfg = CampaignConfig(chi_rule='poly', chi_power=2.5, N_grid=[3, 4], chi_cap=128)
        cfg.validate()
        self.assertEqual(cfg.grid_points(), [(3, 16), (4, 32)])

        cfg = CampaignConfig(chi_rule='poly', chi_power=2.0, N_grid=[3, 4])
        self.assertEqual(cfg.grid_points(), [(3, 9), (4, 16)])

        with self.assertRaises(InvalidConfigValueError) as cm:
            CampaignConfig(chi_rule='linear', N_grid=[1, 4], L=1).validate()
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)
        self.assertIn('N > L', str(e))

        with self.assertRaises(InvalidConfigValueError) as cm:
            CampaignConfig(chi_rule='poly', chi_power=2.5, N_grid=[8], chi_cap=64).validate()
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)
        self.assertIn("'chi_cap'", str(e))

        with self.assertRaises(InvalidConfigValueError) as cm:
            CampaignConfig(boundary='pbc', chi_values=[128], chi_cap=256).validate()
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_validation(self):

        LOG.info("Testing the constraints between the fields.")

        from rmps_typicality.errors import InvalidConfigValueError
        from rmps_typicality.config import CampaignConfig

        bad_configs = (
            {'L': 4},
            {'L': 2, 'N_grid': [2, 4]},
            {'N_grid': [64]},
            {'D': 3},
            {'samples': 1},
            {'experiment': 'concentration_tail', 'samples': 50},
            {'experiment': 'weingarten_check', 'N_grid': [5]},
            {'experiment': 'weingarten_check', 'N_grid': [2], 'boundary': 'pbc'},
            {'experiment': 'average_state_distance', 'N_grid': [10]},
            {'chi_values': [2, 4], 'phi_I': [1, 0]},
        )
        for params in bad_configs:
            with self.assertRaises(InvalidConfigValueError) as cm:
                CampaignConfig(params).validate()
            e = cm.exception
            LOG.debug("%s raised: %s", e.__class__.__name__, e)

        cfg = CampaignConfig(D=3, observable='identity', N_grid=[4]).validate()
        self.assertEqual(cfg.D, 3)

    # -------------------------------------------------------------------------
    def test_overrides(self):

        LOG.info("Testing KEY=VALUE overrides.")

        from rmps_typicality.errors import ConfigError, InvalidConfigValueError
        from rmps_typicality.errors import UnknownConfigKeyError
        from rmps_typicality.config import CampaignConfig

        self.assertEqual(CampaignConfig.parse_override('samples=100'), ('samples', 100))
        self.assertEqual(
            CampaignConfig.parse_override('N_grid=[4, 8]'), ('N_grid', [4, 8]))
        self.assertEqual(CampaignConfig.parse_override('phi_I='), ('phi_I', None))
        self.assertEqual(
            CampaignConfig.parse_override('observable=sigma_z'), ('observable', 'sigma_z'))

        cfg = CampaignConfig().validate()
        new = cfg.with_overrides(['samples=100', 'chi_values=[2]', 'boundary=pbc'])
        self.assertEqual(new.samples, 100)
        self.assertEqual(new.chi_values, [2])
        self.assertEqual(new.boundary, 'pbc')
        self.assertEqual(cfg.samples, 500)

        with self.assertRaises(UnknownConfigKeyError) as cm:
            cfg.with_overrides(['samples=100', 'sampels=100'])
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)
        self.assertEqual(cfg.samples, 500)

        with self.assertRaises(InvalidConfigValueError) as cm:
            cfg.with_overrides(['samples=100', 'L=1', 'N_grid=[1]'])
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)
        self.assertEqual(cfg.samples, 500)
        self.assertEqual(cfg.N_grid, [4, 6, 8, 10, 12, 14, 16])

        with self.assertRaises(ConfigError) as cm:
            cfg.with_overrides(['samples'])
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_config_hash(self):

        LOG.info("Testing the hash of the configuration.")

        from rmps_typicality.config import CampaignConfig

        a = CampaignConfig(samples=100)
        b = CampaignConfig({'samples': '100'})
        self.assertEqual(a.canonical_json(), b.canonical_json())
        self.assertEqual(a.config_hash(), b.config_hash())
        self.assertEqual(len(a.config_hash()), 64)
        self.assertNotIn(' ', a.canonical_json())

        c = CampaignConfig(samples=100, master_seed=1)
        self.assertNotEqual(a.config_hash(), c.config_hash())

    # -------------------------------------------------------------------------
    def test_read_file(self):

        LOG.info("Testing config files.")

        from rmps_typicality.errors import ConfigError
        from rmps_typicality.config import CampaignConfig

        path = self.write_file('campaign.yaml', '''\
            ---
            experiment: distance_scan
            N_grid: [4, 6]
            samples: 40
            ''')
        data = CampaignConfig.read_file(path)
        self.assertEqual(data['experiment'], 'distance_scan')
        cfg = CampaignConfig(data).validate()
        self.assertEqual(cfg.N_grid, [4, 6])

        path = self.write_file('campaign.json', '{"samples": 40, "L": 2}')
        self.assertEqual(CampaignConfig.read_file(path), {'samples': 40, 'L': 2})

        path = self.write_file('empty.yaml', '')
        self.assertEqual(CampaignConfig.read_file(path), {})

        for name, content in (('list.yaml', '- 1\n- 2\n'), ('broken.json', '{"samples": ')):
            path = self.write_file(name, content)
            with self.assertRaises(ConfigError) as cm:
                CampaignConfig.read_file(path)
            e = cm.exception
            LOG.debug("%s raised: %s", e.__class__.__name__, e)

        with self.assertRaises(ConfigError) as cm:
            CampaignConfig.read_file(Path(self.tmpdir.name) / 'missing.yaml')
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)


# =============================================================================
if __name__ == '__main__':

    verbose = get_arg_verbose()
    if verbose is None:
        verbose = 0
    init_root_logger(verbose)

    LOG.info("Starting tests ...")

    suite = unittest.TestSuite()

    suite.addTest(TestConfig('test_import', verbose))
    suite.addTest(TestConfig('test_defaults', verbose))
    suite.addTest(TestConfig('test_coercion', verbose))
    suite.addTest(TestConfig('test_chi_rules', verbose))
    suite.addTest(TestConfig('test_validation', verbose))
    suite.addTest(TestConfig('test_overrides', verbose))
    suite.addTest(TestConfig('test_config_hash', verbose))
    suite.addTest(TestConfig('test_read_file', verbose))

    runner = unittest.TextTestRunner(verbosity=verbose)

    result = runner.run(suite)

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4
