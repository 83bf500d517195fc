#!/usr/bin/env python3
# -*- coding: utf-8 -*-
'''
@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 Frank Brehm, Berlin
@license: GPL3
@summary: test script (and module) for unit tests on rmps_typicality.stats
'''

import os
import sys
import logging

try:
    import unittest2 as unittest
except ImportError:
    import unittest

import numpy as np

libdir = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, libdir)

from general import RmpsTypicalityTestcase, get_arg_verbose, init_root_logger, pp

LOG = logging.getLogger('test_stats')


# =============================================================================
class TestStats(RmpsTypicalityTestcase):

    # -------------------------------------------------------------------------
    def setUp(self):
        pass

    # -------------------------------------------------------------------------
    def test_import(self):

        LOG.info("Testing import of rmps_typicality.stats ...")
        import rmps_typicality.stats
        LOG.debug("Version of rmps_typicality.stats: {!r}".format(
            rmps_typicality.stats.__version__))

    # -------------------------------------------------------------------------
    def test_init_base_stats(self):

        LOG.info("Testing init and attributes of a BaseStats object.")

        from rmps_typicality.stats import BaseStats

        stats = BaseStats()

        LOG.debug("BaseStats %r: {!r}".format(stats))

        exp_dict = {
            'value_one': 0.0,
            'value_two': 0.0,
        }
        got_dict = stats.dict()
        LOG.debug("Got dict():\n" + pp(got_dict))
        self.assertEqual(got_dict, exp_dict)

        exp_keys = ('value_one', 'value_two')
        self.assertEqual(exp_keys, stats.keys())

        LOG.debug("Testing access to attributes ...")
        stats.value_two = 4
        stats[1] = 3
        stats['value_two'] = 2.5

        self.assertEqual(stats.value_one, 0)
        self.assertEqual(stats[0], 0)
        self.assertEqual(stats.value_two, 2.5)
        self.assertEqual(stats[1], 2.5)
        self.assertEqual(stats['value_two'], 2.5)

        stats = BaseStats({'value_one': 4, 'value_two': 5})
        self.assertEqual(stats.value_one, 4.0)
        self.assertEqual(stats.value_two, 5.0)

        other = stats.copy()
        self.assertEqual(stats, other)
        other.value_one = 1
        self.assertNotEqual(stats, other)

    # -------------------------------------------------------------------------
    def test_base_stats_failures(self):

        LOG.info("Testing wrong attributes, keys or values of a BaseStats object.")

        from rmps_typicality.errors import RmpsTypicalityError
        from rmps_typicality.stats import BaseStats, ScalarSummary

        with self.assertRaises(RmpsTypicalityError) as cm:
            BaseStats('uhu')
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        with self.assertRaises(RmpsTypicalityError) as cm:
            BaseStats(uhu='banane')
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        with self.assertRaises(RmpsTypicalityError) as cm:
            BaseStats(value_one='banane')
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        with self.assertRaises(RmpsTypicalityError) as cm:
            ScalarSummary(variance=-1)
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        stats = BaseStats(value_one=6, value_two=7)
        with self.assertRaises(RmpsTypicalityError) as cm:
            del stats.value_one
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_running_stats(self):

        LOG.info("Testing the streaming mean and variance.")

        from rmps_typicality.stats import RunningStats

        values = [0.5, -1.25, 3.0, 2.0, 0.125, -0.75, 1.5]
        acc = RunningStats()
        self.assertEqual(acc.count, 0)
        self.assertEqual(acc.variance, 0.0)
        self.assertEqual(acc.stderr, 0.0)

        acc.push(values[0])
        self.assertEqual(acc.mean, 0.5)
        self.assertEqual(acc.variance, 0.0)

        acc.extend(values[1:])
        LOG.debug("Accumulator: {!r}".format(acc))
        self.assertEqual(acc.count, len(values))
        self.assertAlmostEqual(acc.mean, float(np.mean(values)), places=14)
        self.assertAlmostEqual(acc.variance, float(np.var(values, ddof=1)), places=14)
        self.assertAlmostEqual(
            acc.stderr, float(np.sqrt(np.var(values, ddof=1) / len(values))), places=14)

        summary = acc.summary()
        LOG.debug("Summary: {}".format(pp(summary.dict())))
        self.assertEqual(summary.count, len(values))
        self.assertEqual(summary.minimum, -1.25)
        self.assertEqual(summary.maximum, 3.0)

        acc = RunningStats([7.0] * 20)
        self.assertEqual(acc.variance, 0.0)

        LOG.debug("Same values in same order give identical results.")
        one = RunningStats(values).summary()
        two = RunningStats(values).summary()
        self.assertEqual(one, two)

    # -------------------------------------------------------------------------
    def test_running_matrix_stats(self):

        LOG.info("Testing the entrywise streaming mean of complex matrices.")

        from rmps_typicality.errors import RmpsTypicalityError
        from rmps_typicality.stats import RunningMatrixStats

        gen = np.random.default_rng(4711)
        mats = gen.normal(size=(50, 3, 3)) + 1j * gen.normal(size=(50, 3, 3))

        acc = RunningMatrixStats()
        self.assertIsNone(acc.mean)
        for m in mats:
            acc.push(m)
        self.assertEqual(acc.count, 50)
        self.assertEqual(acc.shape, (3, 3))
        self.assertMatrixClose(acc.mean, mats.mean(axis=0), atol=1e-13)

        exp_var = np.sum(np.abs(mats - mats.mean(axis=0)) ** 2, axis=0) / 49.0
        self.assertMatrixClose(acc.variance, exp_var, atol=1e-12)
        self.assertMatrixClose(acc.stderr, np.sqrt(exp_var / 50.0), atol=1e-12)

        with self.assertRaises(RmpsTypicalityError) as cm:
            acc.push(np.zeros((2, 2)))
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_tail_counter(self):

        LOG.info("Testing the tail counter.")

        from rmps_typicality.errors import RmpsTypicalityError
        from rmps_typicality.stats import TailCounter

        counter = TailCounter([0.0, 0.1, 0.2, 0.5])
        counter.extend([0.05, -0.15, 0.2, 0.0, -0.6])
        LOG.debug("Tail counter: {}".format(pp(counter.dict())))

        self.assertEqual(counter.total, 5)
        self.assertEqual(counter.counts.tolist(), [5, 3, 2, 1])
        self.assertEqual(counter.fractions().tolist(), [1.0, 0.6, 0.4, 0.2])

        counts = counter.counts
        for low, high in zip(counts[:-1], counts[1:]):
            self.assertGreaterEqual(low, high)

        self.assertEqual(TailCounter([0.1]).fractions().tolist(), [0.0])

        with self.assertRaises(RmpsTypicalityError) as cm:
            TailCounter([])
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        with self.assertRaises(RmpsTypicalityError) as cm:
            TailCounter([0.1, -0.2])
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

    suite.addTest(TestStats('test_import', verbose))
    suite.addTest(TestStats('test_init_base_stats', verbose))
    suite.addTest(TestStats('test_base_stats_failures', verbose))
    suite.addTest(TestStats('test_running_stats', verbose))
    suite.addTest(TestStats('test_running_matrix_stats', verbose))
    suite.addTest(TestStats('test_tail_counter', verbose))

    runner = unittest.TextTestRunner(verbosity=verbose)

    result = runner.run(suite)

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4
