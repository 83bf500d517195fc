#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: A module for all result classes in this package

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""
from __future__ import absolute_import

import copy
import json
import logging
import math

# Third party modules
import numpy as np
import yaml

# Own modules
from . import DEGENERACY_TOLERANCE
from .stats import BaseStats, TailCounter

__version__ = '0.6.2'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)


# =============================================================================
def pure_value(value):
    """Typecast numpy values and statistics objects into JSON compatible values."""
    if isinstance(value, (BaseStats, TailCounter)):
        return value.dict()
    if isinstance(value, BaseResult):
        return value.dict()
    if isinstance(value, np.ndarray):
        if np.iscomplexobj(value):
            return {'real': value.real.tolist(), 'imag': value.imag.tolist()}
        return value.tolist()
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(k): pure_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [pure_value(v) for v in value]
    return value


# =============================================================================
class BaseResult(object):
    """Common dict conversion of all result objects."""

    large_keys = ()

    # -------------------------------------------------------------------------
    def as_dict(self, short=True, pure=False):
        """
        Transforms the elements of the object into a dict

        @param short: don't include local properties and large arrays in resulting dict.
        @type short: bool
        @param pure: typecast all values into plain JSON compatible values.
        @type pure: bool

        @return: structure as dict
        @rtype:  dict
        """
        res = {}
        for key in self.__dict__:
            if short and key.startswith('_') and not key.startswith('__'):
                continue
            if short and key in self.large_keys:
                continue
            value = self.__dict__[key]
            if pure:
                res[key] = pure_value(value)
            else:
                res[key] = value

        if not pure:
            res['__class_name__'] = self.__class__.__name__

        return res

    # -------------------------------------------------------------------------
    def dict(self):
        """Typecast into a regular dict."""
        return self.as_dict(pure=True)

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        fields = []
        for key, value in self.as_dict(short=True).items():
            if key == '__class_name__' or isinstance(value, np.ndarray):
                continue
            fields.append('{k}={v!r}'.format(k=key, v=value))
        return '{c}({f})'.format(c=self.__class__.__name__, f=', '.join(fields))


# =============================================================================
class TransferSpectrum(BaseResult):
    """The leading eigenvalues of a transfer matrix, sorted by descending modulus."""

    # -------------------------------------------------------------------------
    def __init__(self, eigenvalues, degeneracy_tolerance=DEGENERACY_TOLERANCE):
        """Constructor."""
        self.eigenvalues = np.asarray(eigenvalues, dtype=np.complex128).reshape(-1)
        self.degeneracy_tolerance = float(degeneracy_tolerance)

    # -------------------------------------------------------------------------
    @property
    def leading(self):
        """The eigenvalue of largest modulus."""
        return complex(self.eigenvalues[0])

    # -------------------------------------------------------------------------
    @property
    def epsilon2(self):
        """The modulus of the second eigenvalue, 0 if there is none."""
        if self.eigenvalues.shape[0] < 2:
            return 0.0
        return float(abs(self.eigenvalues[1]))

    # -------------------------------------------------------------------------
    @property
    def degenerate(self):
        """Whether |ε₂| is within the degeneracy tolerance of 1."""
        if self.eigenvalues.shape[0] < 2:
            return False
        return abs(self.epsilon2 - 1.0) <= self.degeneracy_tolerance

    # -------------------------------------------------------------------------
    def as_dict(self, short=True, pure=False):
        """Transforms the elements of the object into a dict."""
        res = super(TransferSpectrum, self).as_dict(short=short, pure=pure)
        res['epsilon2'] = self.epsilon2
        res['degenerate'] = self.degenerate
        return res


# =============================================================================
class EnsembleRecord(BaseResult):
    """The aggregated results of one grid point (N, χ) of an ensemble campaign."""

    large_keys = ('eigenvalues', 'mean_state', 'values')

    # -------------------------------------------------------------------------
    def __init__(self, n_sites, chi, samples):
        """Constructor."""
        self.n_sites = int(n_sites)
        self.chi = int(chi)
        self.samples = int(samples)
        self.f = None
        self.d1 = None
        self.entropy = None
        self.mean_state = None
        self.observable_violations = 0
        self.eigenvalues = None
        self.values = None
        self.tail = None
        self.pauli_tail = None
        self.state_tail = None
        self.wall_clock = 0.0

    # -------------------------------------------------------------------------
    @property
    def label(self):
        """A short label of the grid point."""
        return 'N={n},chi={c}'.format(n=self.n_sites, c=self.chi)

    # -------------------------------------------------------------------------
    def variance_row(self):
        """The CSV row of a variance scan."""
        return {
            'N': self.n_sites,
            'chi': self.chi,
            'samples': self.samples,
            'f_mean': self.f.mean,
            'f_var': self.f.variance,
            'f_stderr': self.f.stderr,
        }

    # -------------------------------------------------------------------------
    def distance_row(self):
        """The CSV row of a trace distance scan."""
        return {
            'N': self.n_sites,
            'chi': self.chi,
            'samples': self.samples,
            'd1_mean': self.d1.mean,
            'd1_stderr': self.d1.stderr,
            'entropy_mean': self.entropy.mean,
            'observable_violations': self.observable_violations,
        }

    # -------------------------------------------------------------------------
    def tail_rows(self):
        """The CSV rows of a concentration tail, one per threshold ε."""
        counts = self.tail.counts
        fractions = self.tail.fractions()
        for i, eps in enumerate(self.tail.epsilons):
            pauli = '' if self.pauli_tail is None else int(self.pauli_tail[i])
            state = '' if self.state_tail is None else int(self.state_tail[i])
            yield {
                'N': self.n_sites,
                'chi': self.chi,
                'samples': self.samples,
                'epsilon': float(eps),
                'tail_fraction': float(fractions[i]),
                'tail_count': int(counts[i]),
                'pauli_tail': pauli,
                'state_tail': state,
            }


# =============================================================================
class ConcentrationFit(BaseResult):
    """
    Fit of the tail model ĉ₁ · exp(−ĉ₂′ · ε²χ/N²) to empirical tail fractions.

    The bounds of ĉ₂′ are bootstrap percentiles.
    """

    # -------------------------------------------------------------------------
    def __init__(
            self, c1, c2_prime, residual, points_used, c2_lower=None, c2_upper=None,
            resamples=0):
        """Constructor."""
        self.c1 = float(c1)
        self.c2_prime = float(c2_prime)
        self.residual = float(residual)
        self.points_used = int(points_used)
        self.c2_lower = None if c2_lower is None else float(c2_lower)
        self.c2_upper = None if c2_upper is None else float(c2_upper)
        self.resamples = int(resamples)

    # -------------------------------------------------------------------------
    @property
    def concentrating(self):
        """ĉ₂′ > 0 with a positive lower confidence bound."""
        if self.c2_prime <= 0:
            return False
        if self.c2_lower is None:
            return False
        return self.c2_lower > 0

    # -------------------------------------------------------------------------
    def as_dict(self, short=True, pure=False):
        """Transforms the elements of the object into a dict."""
        res = super(ConcentrationFit, self).as_dict(short=short, pure=pure)
        res['concentrating'] = self.concentrating
        return res


# =============================================================================
class LipschitzProbeResult(BaseResult):
    """The largest observed difference quotient of f against the analytic bound η."""

    # -------------------------------------------------------------------------
    def __init__(
            self, scale, pairs, skipped, max_ratio, bound, refined_bound=None,
            max_epsilon2=None):
        """Constructor."""
        self.scale = float(scale)
        self.pairs = int(pairs)
        self.skipped = int(skipped)
        self.max_ratio = float(max_ratio)
        self.bound = float(bound)
        self.refined_bound = None if refined_bound is None else float(refined_bound)
        self.max_epsilon2 = None if max_epsilon2 is None else float(max_epsilon2)

    # -------------------------------------------------------------------------
    @property
    def slack(self):
        """bound / max_ratio, infinite for a vanishing ratio."""
        if self.max_ratio <= 0:
            return math.inf
        return self.bound / self.max_ratio

    # -------------------------------------------------------------------------
    @property
    def within_bound(self):
        """Whether the observed maximum respects the analytic bound."""
        return self.max_ratio <= self.bound

    # -------------------------------------------------------------------------
    def row(self):
        """The CSV row of this probe."""
        return {
            'scale': self.scale,
            'pairs': self.pairs,
            'skipped': self.skipped,
            'max_ratio': self.max_ratio,
            'bound': self.bound,
            'refined_bound': '' if self.refined_bound is None else self.refined_bound,
            'slack': self.slack,
        }

    # -------------------------------------------------------------------------
    def as_dict(self, short=True, pure=False):
        """Transforms the elements of the object into a dict."""
        res = super(LipschitzProbeResult, self).as_dict(short=short, pure=pure)
        res['slack'] = self.slack
        res['within_bound'] = self.within_bound
        return res


# =============================================================================
class PauliChainReport(BaseResult):
    """The norms of ρ − ρ̄ and its Pauli coefficients along the chain of inequalities."""

    # -------------------------------------------------------------------------
    def __init__(
            self, subsystem_size, max_abs_p, norm2, norm1, parseval_residual, tolerance=1e-10):
        """Constructor."""
        self.subsystem_size = int(subsystem_size)
        self.max_abs_p = float(max_abs_p)
        self.norm2 = float(norm2)
        self.norm1 = float(norm1)
        self.parseval_residual = float(parseval_residual)
        self.tolerance = float(tolerance)

    # -------------------------------------------------------------------------
    @property
    def chain(self):
        """
        The four members ‖Δρ‖₁ ≤ 2^L‖Δρ‖₂ ≤ 2^{5L/2}·max|p| ≤ 4^{3L/2}·max|p|.
        """
        L = self.subsystem_size
        return (
            self.norm1,
            2.0 ** L * self.norm2,
            2.0 ** (2.5 * L) * self.max_abs_p,
            4.0 ** (1.5 * L) * self.max_abs_p,
        )

    # -------------------------------------------------------------------------
    @property
    def root_dimension_bound_holds(self):
        """‖Δρ‖₁ ≤ √(4^L)·‖Δρ‖₂."""
        c = self.chain
        return c[0] <= c[1] * (1 + self.tolerance) + self.tolerance

    # -------------------------------------------------------------------------
    @property
    def parseval_holds(self):
        """‖Δρ‖₂² = 2^L·Σ p_x² within the tolerance, relative to ‖Δρ‖₂²."""
        return self.parseval_residual <= self.tolerance * (1.0 + self.norm2 ** 2)

    # -------------------------------------------------------------------------
    @property
    def chain_holds(self):
        """Whether the Parseval identity and every link of the chain hold within the tolerance."""
        if not self.parseval_holds:
            return False
        c = self.chain
        for low, high in zip(c[:-1], c[1:]):
            if low > high * (1 + self.tolerance) + self.tolerance:
                return False
        return True

    # -------------------------------------------------------------------------
    def as_dict(self, short=True, pure=False):
        """Transforms the elements of the object into a dict."""
        res = super(PauliChainReport, self).as_dict(short=short, pure=pure)
        res['chain'] = list(self.chain)
        res['parseval_holds'] = self.parseval_holds
        res['chain_holds'] = self.chain_holds
        return res


# =============================================================================
class AverageStateCurve(BaseResult):
    """Trace distances of running ensemble averages from the maximally mixed state."""

    # -------------------------------------------------------------------------
    def __init__(self, checkpoints, rmps_distance, rmps_bound, haar_distance, haar_bound):
        """Constructor."""
        self.checkpoints = [int(k) for k in checkpoints]
        self.rmps_distance = [float(v) for v in rmps_distance]
        self.rmps_bound = [float(v) for v in rmps_bound]
        self.haar_distance = [float(v) for v in haar_distance]
        self.haar_bound = [float(v) for v in haar_bound]

    # -------------------------------------------------------------------------
    def rows(self):
        """The CSV rows, one per checkpoint."""
        for i, k in enumerate(self.checkpoints):
            yield {
                'k': k,
                'rmps_distance': self.rmps_distance[i],
                'rmps_stderr_bound': self.rmps_bound[i],
                'haar_distance': self.haar_distance[i],
                'haar_stderr_bound': self.haar_bound[i],
            }


# =============================================================================
class EigenHistogram(BaseResult):
    """Binned reduced state eigenvalues of RMPS and Haar states with a two-sample KS test."""

    large_keys = ('rmps_eigenvalues', 'haar_eigenvalues')

    # The asymptotic 1% critical value of the two-sample Kolmogorov-Smirnov test
    ks_c_alpha = 1.628

    # -------------------------------------------------------------------------
    def __init__(
            self, edges, rmps_mass, haar_mass, ks_statistic, p_value,
            rmps_eigenvalues=None, haar_eigenvalues=None, n_rmps=0, n_haar=0):
        """Constructor."""
        self.edges = np.asarray(edges, dtype=np.float64)
        self.rmps_mass = np.asarray(rmps_mass, dtype=np.float64)
        self.haar_mass = np.asarray(haar_mass, dtype=np.float64)
        self.ks_statistic = float(ks_statistic)
        self.p_value = float(p_value)
        self.rmps_eigenvalues = rmps_eigenvalues
        self.haar_eigenvalues = haar_eigenvalues
        self.n_rmps = int(n_rmps)
        self.n_haar = int(n_haar)

    # -------------------------------------------------------------------------
    @property
    def critical_value(self):
        """c(0.01) · √((n + m)/(n·m))."""
        n = self.n_rmps
        m = self.n_haar
        if not n or not m:
            return math.inf
        return self.ks_c_alpha * math.sqrt((n + m) / float(n * m))

    # -------------------------------------------------------------------------
    @property
    def distributions_differ(self):
        """Whether the KS statistic exceeds the 1% critical value."""
        return self.ks_statistic > self.critical_value

    # -------------------------------------------------------------------------
    def boundary_mass(self, which='rmps'):
        """The mass in the first and the last bin."""
        mass = self.rmps_mass if which == 'rmps' else self.haar_mass
        return float(mass[0] + mass[-1])

    # -------------------------------------------------------------------------
    def rows(self):
        """The CSV rows, one per bin."""
        for i in range(self.rmps_mass.shape[0]):
            yield {
                'bin_low': float(self.edges[i]),
                'bin_high': float(self.edges[i + 1]),
                'rmps_mass': float(self.rmps_mass[i]),
                'haar_mass': float(self.haar_mass[i]),
            }

    # -------------------------------------------------------------------------
    def as_dict(self, short=True, pure=False):
        """Transforms the elements of the object into a dict."""
        res = super(EigenHistogram, self).as_dict(short=short, pure=pure)
        res['critical_value'] = self.critical_value
        res['distributions_differ'] = self.distributions_differ
        return res


# =============================================================================
class WeingartenComparison(BaseResult):
    """Entrywise comparison of the exact average state with a Monte-Carlo estimate."""

    # -------------------------------------------------------------------------
    def __init__(self, exact, exact_trace, mc_mean, mc_stderr, samples, floor=1e-12):
        """Constructor."""
        self.exact = np.asarray(exact, dtype=np.complex128)
        self.exact_trace = float(exact_trace)
        self.mc_mean = np.asarray(mc_mean, dtype=np.complex128)
        self.mc_stderr = np.asarray(mc_stderr, dtype=np.float64)
        self.samples = int(samples)
        self.floor = float(floor)

    # -------------------------------------------------------------------------
    @property
    def z_scores(self):
        """|exact − mc| / (stderr + floor) entrywise."""
        return np.abs(self.exact - self.mc_mean) / (self.mc_stderr + self.floor)

    # -------------------------------------------------------------------------
    @property
    def max_z(self):
        """The largest entrywise z score."""
        return float(np.max(self.z_scores))

    # -------------------------------------------------------------------------
    def agrees(self, n_sigma=3.0):
        """Whether all entries agree within n_sigma standard errors."""
        return self.max_z <= n_sigma

    # -------------------------------------------------------------------------
    def rows(self):
        """The CSV rows, one per matrix entry."""
        z = self.z_scores
        dim = self.exact.shape[0]
        for r in range(dim):
            for c in range(dim):
                yield {
                    'row': r,
                    'col': c,
                    'exact_re': float(self.exact[r, c].real),
                    'exact_im': float(self.exact[r, c].imag),
                    'mc_re': float(self.mc_mean[r, c].real),
                    'mc_im': float(self.mc_mean[r, c].imag),
                    'mc_stderr': float(self.mc_stderr[r, c]),
                    'z': float(z[r, c]),
                }

    # -------------------------------------------------------------------------
    def as_dict(self, short=True, pure=False):
        """Transforms the elements of the object into a dict."""
        res = super(WeingartenComparison, self).as_dict(short=short, pure=pure)
        res['max_z'] = self.max_z
        return res


# =============================================================================
class RunManifest(BaseResult):
    """The record of one run of an experiment with everything needed to reproduce it."""

    # -------------------------------------------------------------------------
    def __init__(self, experiment, config, config_hash, master_seed, tool_version, workers=1):
        """Constructor."""
        self.experiment = experiment
        self.config = copy.deepcopy(config)
        self.config_hash = config_hash
        self.master_seed = int(master_seed)
        self.tool_version = tool_version
        self.workers = int(workers)
        self.artifacts = []
        self.wall_clock = {}
        self.summary = {}
        self.interrupted = False
        self.total_wall_clock = 0.0

    # -------------------------------------------------------------------------
    def add_artifact(self, path):
        """Register an output file."""
        p = str(path)
        if p not in self.artifacts:
            self.artifacts.append(p)

    # -------------------------------------------------------------------------
    def record_wall_clock(self, label, seconds):
        """Register the wall clock time of one grid point."""
        self.wall_clock[str(label)] = float(seconds)

    # -------------------------------------------------------------------------
    def to_json(self):
        """The manifest as JSON document."""
        return json.dumps(self.dict(), indent=4, sort_keys=True) + '\n'

    # -------------------------------------------------------------------------
    def to_yaml(self):
        """The manifest as YAML document."""
        return yaml.safe_dump(self.dict(), default_flow_style=False, sort_keys=True)


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
