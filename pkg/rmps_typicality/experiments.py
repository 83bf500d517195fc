#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: The catalog of experiments and the runner writing their artifacts.

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""
from __future__ import absolute_import

import csv
import logging
import time

from pathlib import Path

# Own modules
from . import __version__ as GLOBAL_VERSION
from . import pp
from .config import CampaignConfig, EXPERIMENT_NAMES, normalize_experiment_name
from .ensemble import average_state_distance_curve, boundary_vector
from .ensemble import eigenvalue_histogram, fit_concentration, iter_concentration_tail
from .ensemble import iter_distance_scan, iter_variance_scan, lipschitz_probe
from .errors import ConfigError
from .executor import SampleExecutor
from .haar import RngStream
from .mps import ObservableSpec, named_operator
from .results import RunManifest, WeingartenComparison
from .weingarten import average_state_exact, average_state_mc

from .xlate import XLATOR, format_count

__version__ = '0.3.1'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)

_ = XLATOR.gettext

MANIFEST_FORMATS = ('json', 'yaml')

CSV_COLUMNS = {
    'variance_scan': ('N', 'chi', 'samples', 'f_mean', 'f_var', 'f_stderr'),
    'distance_scan': (
        'N', 'chi', 'samples', 'd1_mean', 'd1_stderr', 'entropy_mean',
        'observable_violations'),
    'average_state_distance': (
        'k', 'rmps_distance', 'rmps_stderr_bound', 'haar_distance', 'haar_stderr_bound'),
    'eigen_histogram': ('bin_low', 'bin_high', 'rmps_mass', 'haar_mass'),
    'lipschitz_probe': (
        'scale', 'pairs', 'skipped', 'max_ratio', 'bound', 'refined_bound', 'slack'),
    'concentration_tail': (
        'N', 'chi', 'samples', 'epsilon', 'tail_fraction', 'tail_count', 'pauli_tail',
        'state_tail'),
    'weingarten_check': (
        'row', 'col', 'exact_re', 'exact_im', 'mc_re', 'mc_im', 'mc_stderr', 'z'),
}

CATALOG = {
    'average_state_distance': {
        'description': 'Trace distance of the running average RMPS and Haar states '
                       'from the maximally mixed state.',
        'defaults': {
            'N_grid': [4],
            'chi_values': [2],
            'sample_grid': [10, 100, 1000, 10000],
        },
    },
    'eigen_histogram': {
        'description': 'Eigenvalue distribution of the reduced states of RMPS and '
                       'Haar random states.',
        'defaults': {
            'N_grid': [4],
            'chi_values': [2],
            'samples': 5000,
            'bins': 50,
        },
    },
    'variance_scan': {
        'description': 'Ensemble variance of a local observable over the (N, chi) grid.',
        'defaults': {
            'N_grid': [4, 6, 8, 10, 12, 14, 16],
            'chi_values': [2, 4, 8],
            'samples': 500,
        },
    },
    'distance_scan': {
        'description': 'Mean trace distance of the reduced states from their ensemble '
                       'average over the (N, chi) grid.',
        'defaults': {
            'N_grid': [4, 6, 8, 10, 12, 14, 16],
            'chi_values': [2, 4, 8],
            'samples': 500,
        },
    },
    'lipschitz_probe': {
        'description': 'Largest observed difference quotient of an expectation value '
                       'against the analytic Lipschitz bound.',
        'defaults': {
            'N_grid': [8],
            'chi_values': [4],
            'pairs': 200,
            'perturbation_scales': [1e-2, 1e-3, 1e-4],
        },
    },
    'concentration_tail': {
        'description': 'Empirical tails of the expectation values and the fit of '
                       'their concentration exponent.',
        'defaults': {
            'N_grid': [3, 4, 5, 6],
            'chi_rule': 'poly',
            'chi_power': 2.5,
            'chi_cap': 128,
            'samples': 2000,
        },
    },
    'weingarten_check': {
        'description': 'Exact average state by Weingarten calculus against its '
                       'Monte-Carlo estimate.',
        'defaults': {
            'N_grid': [2],
            'chi_values': [2],
            'samples': 100000,
        },
    },
}


# =============================================================================
def default_config(experiment):
    """The validated default configuration of the given experiment."""
    name = normalize_experiment_name(experiment)
    cfg = CampaignConfig(CATALOG[name]['defaults'], experiment=name)
    return cfg.validate()


# =============================================================================
def list_experiments():
    """
    The catalog of all experiments.

    @return: one dict per experiment with its name, description and default config
    @rtype: list
    """
    res = []
    for name in EXPERIMENT_NAMES:
        res.append({
            'name': name,
            'description': CATALOG[name]['description'],
            'defaults': default_config(name).dict(),
        })
    return res


# =============================================================================
def _experiment_of_overrides(overrides):
    name = None
    for override in overrides or []:
        key, value = CampaignConfig.parse_override(override)
        if key == 'experiment':
            name = value
    return name


# =============================================================================
def load_config(config_path=None, overrides=None, experiment=None, seed=None):
    """
    Assemble the configuration of a run.

    The catalog defaults of the experiment are updated by the config file, then all
    overrides are applied to a copy and the result is validated as a whole. An
    explicitly given experiment or seed wins over both.

    @raise ConfigError: naming the offending key and value
    """
    data = {}
    if config_path:
        data = CampaignConfig.read_file(config_path)

    name = experiment
    if name is None:
        name = _experiment_of_overrides(overrides)
    if name is None:
        name = data.get('experiment', CampaignConfig.defaults['experiment'])
    name = normalize_experiment_name(name)

    cfg = CampaignConfig(CATALOG[name]['defaults'])
    cfg.update(data)
    cfg.experiment = name

    all_overrides = list(overrides or [])
    if experiment is not None:
        all_overrides.append('experiment={}'.format(name))
    if seed is not None:
        all_overrides.append('master_seed={}'.format(seed))
    return cfg.with_overrides(all_overrides)


# =============================================================================
def format_csv_value(value):
    """Render a value of a CSV cell, floats with 17 significant digits."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return '%.17g' % value
    return str(value)


# =============================================================================
class CsvWriter(object):
    """Writes rows of fixed columns and flushes them to disk after every block."""

    # -------------------------------------------------------------------------
    def __init__(self, path, columns):
        """Constructor."""
        self.path = Path(path)
        self.columns = tuple(columns)
        self.rows = 0
        self._fh = None
        self._writer = None

    # -------------------------------------------------------------------------
    def __enter__(self):
        self.open()
        return self

    # -------------------------------------------------------------------------
    def __exit__(self, exc_type, exc_value, traceback):
        self.close()
        return False

    # -------------------------------------------------------------------------
    def open(self):
        """Create the file and write the header row."""
        self._fh = self.path.open('w', encoding='utf-8', newline='')
        self._writer = csv.writer(self._fh, lineterminator='\n')
        self._writer.writerow(self.columns)
        self._fh.flush()

    # -------------------------------------------------------------------------
    def write_rows(self, rows):
        """Write a block of row dicts and flush it."""
        for row in rows:
            self._writer.writerow([format_csv_value(row[c]) for c in self.columns])
            self.rows += 1
        self._fh.flush()

    # -------------------------------------------------------------------------
    def close(self):
        """Close the file."""
        if self._fh is not None:
            self._fh.close()
            self._fh = None
            self._writer = None


# =============================================================================
class ExperimentRunner(object):
    """
    Runs the experiment of a validated configuration and writes its CSV table and
    the run manifest into an output directory.
    """

    # -------------------------------------------------------------------------
    def __init__(self, config, out_dir, workers=1, manifest_format='json', verbose=0):
        """Constructor."""
        if manifest_format not in MANIFEST_FORMATS:
            raise ConfigError(_("Invalid manifest format {!r}.").format(manifest_format))
        self.config = config
        self.out_dir = Path(out_dir)
        self.workers = int(workers)
        self.manifest_format = manifest_format
        self.verbose = verbose
        self.manifest = RunManifest(
            config.experiment, config.dict(), config.config_hash(), config.master_seed,
            GLOBAL_VERSION, workers=self.workers)

    # -------------------------------------------------------------------------
    @property
    def experiment(self):
        """The name of the experiment."""
        return self.config.experiment

    # -------------------------------------------------------------------------
    @property
    def csv_path(self):
        """The path of the CSV table."""
        return self.out_dir / '{}.csv'.format(self.experiment)

    # -------------------------------------------------------------------------
    @property
    def manifest_path(self):
        """The path of the manifest."""
        return self.out_dir / 'manifest.{}'.format(self.manifest_format)

    # -------------------------------------------------------------------------
    def run(self):
        """
        Run the experiment.

        The manifest is written in any case, marked as interrupted, if the run
        was stopped by a keyboard interrupt.
        """
        self.out_dir.mkdir(parents=True, exist_ok=True)
        LOG.info(_("Running experiment {e!r} with master seed {s} on {w} workers.").format(
            e=self.experiment, s=self.config.master_seed, w=self.workers))
        if self.verbose > 1:
            LOG.debug(_("Configuration:") + '\n' + pp(self.config.dict()))

        start = time.monotonic()
        method = getattr(self, 'run_' + self.experiment)
        try:
            with CsvWriter(self.csv_path, CSV_COLUMNS[self.experiment]) as writer:
                self.manifest.add_artifact(self.csv_path)
                method(writer)
        except KeyboardInterrupt:
            self.manifest.interrupted = True
            LOG.warning(_("Interrupted, partial results are kept in {!r}.").format(
                str(self.csv_path)))
            raise
        finally:
            self.manifest.total_wall_clock = time.monotonic() - start
            self.write_manifest()

        return self.manifest

    # -------------------------------------------------------------------------
    def write_manifest(self):
        """Write the manifest in the configured format."""
        self.manifest.add_artifact(self.manifest_path)
        if self.manifest_format == 'yaml':
            content = self.manifest.to_yaml()
        else:
            content = self.manifest.to_json()
        self.manifest_path.write_text(content, encoding='utf-8')
        LOG.info(_("Manifest written to {!r}.").format(str(self.manifest_path)))

    # -------------------------------------------------------------------------
    def _rng(self):
        return RngStream(self.config.master_seed)

    # -------------------------------------------------------------------------
    def _first_point(self):
        return self.config.grid_points()[0]

    # -------------------------------------------------------------------------
    def _boundaries(self):
        return boundary_vector(self.config.phi_I), boundary_vector(self.config.phi_F)

    # -------------------------------------------------------------------------
    def _record_grid_point(self, record):
        self.manifest.record_wall_clock(record.label, record.wall_clock)

    # -------------------------------------------------------------------------
    def run_variance_scan(self, writer):
        """Write one row per grid point."""
        with SampleExecutor(self.workers) as executor:
            for record in iter_variance_scan(self.config, executor=executor):
                writer.write_rows([record.variance_row()])
                self._record_grid_point(record)
        self.manifest.summary['grid_points'] = writer.rows

    # -------------------------------------------------------------------------
    def run_distance_scan(self, writer):
        """Write one row per grid point."""
        violations = 0
        with SampleExecutor(self.workers) as executor:
            for record in iter_distance_scan(self.config, executor=executor):
                writer.write_rows([record.distance_row()])
                self._record_grid_point(record)
                violations += record.observable_violations
        self.manifest.summary['grid_points'] = writer.rows
        self.manifest.summary['observable_violations'] = violations

    # -------------------------------------------------------------------------
    def run_average_state_distance(self, writer):
        """Write one row per sample checkpoint."""
        cfg = self.config
        n, chi = self._first_point()
        phi_i, phi_f = self._boundaries()
        start = time.monotonic()
        curve = average_state_distance_curve(
            n, cfg.D, chi, cfg.sample_grid, self._rng(), boundary=cfg.boundary,
            phi_i=phi_i, phi_f=phi_f, homogeneous=cfg.homogeneous)
        writer.write_rows(curve.rows())
        self.manifest.record_wall_clock(
            'N={n},chi={c}'.format(n=n, c=chi), time.monotonic() - start)
        self.manifest.summary['final_rmps_distance'] = curve.rmps_distance[-1]
        self.manifest.summary['final_haar_distance'] = curve.haar_distance[-1]

    # -------------------------------------------------------------------------
    def run_eigen_histogram(self, writer):
        """Write one row per bin."""
        cfg = self.config
        n, chi = self._first_point()
        phi_i, phi_f = self._boundaries()
        start = time.monotonic()
        hist = eigenvalue_histogram(
            n, cfg.D, chi, cfg.L, cfg.samples, cfg.bins, self._rng(), boundary=cfg.boundary,
            phi_i=phi_i, phi_f=phi_f, homogeneous=cfg.homogeneous)
        writer.write_rows(hist.rows())
        self.manifest.record_wall_clock(
            'N={n},chi={c}'.format(n=n, c=chi), time.monotonic() - start)
        self.manifest.summary.update({
            'ks_statistic': hist.ks_statistic,
            'p_value': hist.p_value,
            'critical_value': hist.critical_value,
            'distributions_differ': hist.distributions_differ,
            'rmps_boundary_mass': hist.boundary_mass('rmps'),
        })

    # -------------------------------------------------------------------------
    def run_lipschitz_probe(self, writer):
        """
        Write one row per perturbation scale.

        All scales share the same stream, so every scale perturbs the same
        unitaries in the same directions.
        """
        cfg = self.config
        n, chi = self._first_point()
        phi_i, phi_f = self._boundaries()
        obs = ObservableSpec.centered(n, cfg.L, named_operator(cfg.observable, cfg.D))
        within = True
        for scale in cfg.perturbation_scales:
            start = time.monotonic()
            result = lipschitz_probe(
                n, cfg.D, chi, cfg.L, obs, cfg.pairs, scale, self._rng(),
                boundary=cfg.boundary, phi_i=phi_i, phi_f=phi_f, eig_maxiter=cfg.eig_maxiter)
            writer.write_rows([result.row()])
            self.manifest.record_wall_clock('scale={:g}'.format(scale), time.monotonic() - start)
            within = within and result.within_bound
            if not result.within_bound:
                LOG.warning(_("Observed ratio {r} exceeds the bound {b}.").format(
                    r=result.max_ratio, b=result.bound))
        self.manifest.summary['within_bound'] = within

    # -------------------------------------------------------------------------
    def run_concentration_tail(self, writer):
        """Write one row per grid point and threshold, then fit the tails."""
        records = []
        with SampleExecutor(self.workers) as executor:
            for record in iter_concentration_tail(self.config, executor=executor):
                writer.write_rows(record.tail_rows())
                self._record_grid_point(record)
                records.append(record)
        fit = fit_concentration(records, master_seed=self.config.master_seed)
        self.manifest.summary['fit'] = fit.dict()

    # -------------------------------------------------------------------------
    def run_weingarten_check(self, writer):
        """Write one row per entry of the average state."""
        cfg = self.config
        n, chi = self._first_point()
        phi_i, phi_f = self._boundaries()
        start = time.monotonic()
        exact, trace = average_state_exact(n, cfg.D, chi, phi_i=phi_i, phi_f=phi_f)
        LOG.info(_("Averaging {} sampled projectors.").format(format_count(cfg.samples)))
        mean, stderr = average_state_mc(
            n, cfg.D, chi, boundary=cfg.boundary, samples=cfg.samples, rng=self._rng(),
            normalize=False, phi_i=phi_i, phi_f=phi_f, homogeneous=True)
        comparison = WeingartenComparison(exact, trace, mean, stderr, cfg.samples)
        writer.write_rows(comparison.rows())
        self.manifest.record_wall_clock(
            'N={n},chi={c}'.format(n=n, c=chi), time.monotonic() - start)
        self.manifest.summary.update({
            'exact_trace': trace,
            'max_z': comparison.max_z,
            'agrees': comparison.agrees(),
        })
        if not comparison.agrees():
            LOG.warning(_("Exact and sampled average differ by {} standard errors.").format(
                comparison.max_z))


# =============================================================================
def run(config_path=None, out_dir='.', overrides=None, experiment=None, seed=None,
        workers=1, manifest_format='json'):
    """Load the configuration, run its experiment and return the manifest."""
    cfg = load_config(config_path, overrides=overrides, experiment=experiment, seed=seed)
    runner = ExperimentRunner(cfg, out_dir, workers=workers, manifest_format=manifest_format)
    return runner.run()


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
