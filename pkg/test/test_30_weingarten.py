#!/usr/bin/env python3
# -*- coding: utf-8 -*-
'''
@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 Frank Brehm, Berlin
@license: GPL3
@summary: test script (and module) for unit tests on rmps_typicality.weingarten
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

from general import RmpsTypicalityTestcase, get_arg_verbose, init_root_logger

LOG = logging.getLogger('test_weingarten')


# =============================================================================
class TestWeingarten(RmpsTypicalityTestcase):

    # -------------------------------------------------------------------------
    def setUp(self):
        pass

    # -------------------------------------------------------------------------
    def test_import(self):

        LOG.info("Testing import of rmps_typicality.weingarten ...")
        import rmps_typicality.weingarten
        LOG.debug("Version of rmps_typicality.weingarten: {!r}".format(
            rmps_typicality.weingarten.__version__))

    # -------------------------------------------------------------------------
    def test_permutations(self):

        LOG.info("Testing permutations.")

        from rmps_typicality.weingarten import Permutation, all_permutations

        perms = all_permutations(3)
        self.assertEqual(len(perms), 6)
        self.assertEqual(len(set(perms)), 6)
        self.assertTrue(perms[0].is_identity())

        c = Permutation.cycle(3)
        LOG.debug("Cycle: {!r}, cycles {}".format(c, c.cycles()))
        self.assertEqual(c.images, (1, 2, 0))
        self.assertEqual(c(2), 0)
        self.assertEqual(c.cycle_count(), 1)
        self.assertEqual(c.cycle_type(), (3, ))
        self.assertTrue(c.compose(c.inverse()).is_identity())
        self.assertEqual(c.compose(c), c.inverse())

        t = Permutation([1, 0, 2])
        self.assertEqual(t.cycles(), [(0, 1), (2, )])
        self.assertEqual(t.cycle_type(), (2, 1))
        self.assertEqual(t.inverse(), t)
        self.assertEqual(t.compose(c).images, tuple(t(c(k)) for k in range(3)))
        self.assertNotEqual(t, c)
        self.assertEqual(Permutation.identity(4).cycle_count(), 4)

        with self.assertRaises(ValueError) as cm:
            Permutation([0, 0, 1])
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_weingarten_values(self):

        LOG.info("Testing values of the Weingarten function.")

        from rmps_typicality.errors import OrderTooLargeError, DimensionMismatchError
        from rmps_typicality.weingarten import weingarten_function, Permutation

        table = weingarten_function(1, 5)
        self.assertAlmostEqual(table.value([0]), 0.2, places=14)

        table = weingarten_function(2, 2)
        LOG.debug("Table: {!r}, values {}".format(table, table.values))
        self.assertFalse(table.pseudo_inverse)
        self.assertAlmostEqual(table.value(Permutation.identity(2)), 1.0 / 3, places=13)
        self.assertAlmostEqual(table.value([1, 0]), -1.0 / 6, places=13)
        self.assertIs(weingarten_function(2, 2), table)

        d = 3
        table = weingarten_function(3, d)
        den = d * (d ** 2 - 1) * (d ** 2 - 4)
        self.assertAlmostEqual(table.value([0, 1, 2]), (d ** 2 - 2) / den, places=13)
        self.assertAlmostEqual(table.value([1, 0, 2]), -1.0 / ((d ** 2 - 1) * (d ** 2 - 4)),
                               places=13)
        self.assertAlmostEqual(table.value([1, 2, 0]), 2.0 / den, places=13)
        self.assertLess(table.gram_residual(), 1e-12)

        for (n, d) in ((2, 3), (3, 4), (4, 4)):
            table = weingarten_function(n, d)
            total = sum(table.value(p) for p in table.permutations)
            exp = 1.0 / np.prod([d + k for k in range(n)])
            self.assertAlmostEqual(total, exp, delta=1e-12)

        table = weingarten_function(3, 2)
        self.assertTrue(table.pseudo_inverse)
        self.assertLess(table.gram_residual(), 1e-10)
        self.assertIn('gram_residual', table.as_dict(short=False))

        with self.assertRaises(OrderTooLargeError) as cm:
            weingarten_function(7, 2)
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        with self.assertRaises(DimensionMismatchError) as cm:
            weingarten_function(2, 0)
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        with self.assertRaises(DimensionMismatchError) as cm:
            weingarten_function(2, 2).value([0, 1, 2])
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_haar_moment(self):

        LOG.info("Testing Haar moments by the Weingarten calculus.")

        from rmps_typicality.errors import DimensionMismatchError
        from rmps_typicality.weingarten import haar_moment

        for d in (1, 2, 5):
            self.assertAlmostEqual(haar_moment(d, (0, 0), (0, 0)).real, 1.0 / d, places=13)

        self.assertAlmostEqual(haar_moment(2, (0, 0, 0, 0), (0, 0, 0, 0)).real, 1.0 / 3,
                               places=13)
        d = 4
        self.assertAlmostEqual(haar_moment(d, (0, 0, 0, 0), (0, 0, 0, 0)).real,
                               2.0 / (d * (d + 1)), places=13)
        self.assertEqual(haar_moment(2, (0, 1), (0, 1)), 0j)
        self.assertEqual(haar_moment(3, (0, 1), (0, 0)), 0j)

        # E|U_11|² |U_22|² = 1/(d² − 1) for d ≥ 2
        self.assertAlmostEqual(haar_moment(3, (0, 1, 0, 1), (0, 1, 0, 1)).real, 1.0 / 8,
                               places=13)

        with self.assertRaises(DimensionMismatchError) as cm:
            haar_moment(2, (0, 0, 0), (0, 0, 0))
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_average_state_exact(self):

        LOG.info("Testing the exact average state.")

        from rmps_typicality.errors import OrderTooLargeError
        from rmps_typicality.linalg import hermitian_eig
        from rmps_typicality.weingarten import average_state_exact, average_state_moment_sum

        rho, trace = average_state_exact(1, 2, 1)
        self.assertMatrixClose(rho, np.eye(2) / 2, atol=1e-13)
        self.assertAlmostEqual(trace, 1.0, places=13)

        rho, trace = average_state_exact(1, 2, 2)
        self.assertMatrixClose(rho, np.eye(2) / 4, atol=1e-13)
        self.assertAlmostEqual(trace, 0.5, places=13)

        for (n, D, chi) in ((1, 3, 2), (2, 2, 1), (2, 2, 2), (2, 2, 3)):
            rho, trace = average_state_exact(n, D, chi)
            ref = average_state_moment_sum(n, D, chi)
            LOG.debug("N={n}, D={d}, chi={c}: trace {t:.6f}".format(n=n, d=D, c=chi, t=trace))
            self.assertMatrixClose(rho, ref, atol=1e-12)
            self.assertAlmostEqual(float(np.trace(rho).real), trace, delta=1e-12)
            self.assertTrue(np.all(hermitian_eig(rho) > -1e-12))

        phi_i = [1.0, 1.0j]
        phi_f = [0.6, 0.8]
        rho, trace = average_state_exact(2, 2, 2, phi_i=phi_i, phi_f=phi_f)
        ref = average_state_moment_sum(2, 2, 2, phi_i=phi_i, phi_f=phi_f)
        self.assertMatrixClose(rho, ref, atol=1e-12)

        rho, trace = average_state_exact(3, 2, 2)
        self.assertEqual(rho.shape, (8, 8))
        self.assertMatrixClose(rho, rho.conj().T, atol=1e-13)

        with self.assertRaises(OrderTooLargeError) as cm:
            average_state_exact(5, 2, 2)
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        with self.assertRaises(OrderTooLargeError) as cm:
            average_state_exact(4, 5, 1)
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

        with self.assertRaises(OrderTooLargeError) as cm:
            average_state_moment_sum(3, 2, 2)
        e = cm.exception
        LOG.debug("%s raised: %s", e.__class__.__name__, e)

    # -------------------------------------------------------------------------
    def test_average_state_mc(self):

        LOG.info("Comparing the exact average state with a Monte-Carlo estimate.")

        from rmps_typicality.errors import DimensionMismatchError
        from rmps_typicality.haar import RngStream
        from rmps_typicality.weingarten import average_state_exact, average_state_mc

        n, D, chi = 2, 2, 2
        exact, trace = average_state_exact(n, D, chi)
        mean, stderr = average_state_mc(
            n, D, chi, samples=3000, rng=RngStream(12345), normalize=False)
        dev = np.abs(mean - exact)
        LOG.debug("Max. deviation {d:.3e}, max. standard error {s:.3e}.".format(
            d=float(dev.max()), s=float(stderr.max())))
        self.assertTrue(np.all(dev <= 5 * stderr + 1e-12))

        m1, s1 = average_state_mc(1, 2, 2, samples=20, rng=RngStream(3))
        m2, s2 = average_state_mc(1, 2, 2, samples=20, rng=RngStream(3))
        self.assertTrue(np.array_equal(m1, m2))
        self.assertAlmostEqual(float(np.trace(m1).real), 1.0, delta=1e-12)

        with self.assertRaises(DimensionMismatchError) as cm:
            average_state_mc(1, 2, 2, samples=0)
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

    suite.addTest(TestWeingarten('test_import', verbose))
    suite.addTest(TestWeingarten('test_permutations', verbose))
    suite.addTest(TestWeingarten('test_weingarten_values', verbose))
    suite.addTest(TestWeingarten('test_haar_moment', verbose))
    suite.addTest(TestWeingarten('test_average_state_exact', verbose))
    suite.addTest(TestWeingarten('test_average_state_mc', verbose))

    runner = unittest.TextTestRunner(verbosity=verbose)

    result = runner.run(suite)

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4
