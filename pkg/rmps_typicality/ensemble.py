#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: Ensemble campaigns measuring the typicality of random matrix product states.

Every sample of a grid point (N, χ) is drawn from its own stream
RngStream(master_seed, s, channel=(CHANNEL_RMPS, N, χ)) and all aggregation runs
in sample order, so the results do not depend on the number of workers.

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""
from __future__ import absolute_import

import functools
import itertools
import logging
import time

# Third party modules
import numpy as np
from scipy import stats as sp_stats

# Own modules
from . import DEGENERATE_PAIR_THRESHOLD, HERMITIAN_TOLERANCE
from .errors import DegeneratePairError, DimensionMismatchError
from .errors import InsufficientTailError, NotDensityMatrixError
from .executor import SampleExecutor
from .haar import CHANNEL_BOOTSTRAP, CHANNEL_HAAR_STATE, CHANNEL_PROBE, CHANNEL_RMPS
from .haar import RngStream, extract_site_tensors, geodesic_perturbation
from .haar import haar_state, haar_unitary
from .linalg import NormKind, hermitian_deviation, hermitian_eig, norm
from .linalg import trace_distance, von_neumann_entropy
from .mps import BOUNDARY_OBC, Mps, ObservableSpec, expectation, named_operator
from .mps import reduced_density_matrix, reduced_state_of_vector, sample_rmps
from .mps import dense_statevector, transfer_spectrum
from .results import AverageStateCurve, ConcentrationFit, EigenHistogram
from .results import EnsembleRecord, LipschitzProbeResult, PauliChainReport
from .stats import RunningMatrixStats, RunningStats, TailCounter

from .xlate import XLATOR, format_count, format_quantity

__version__ = '0.8.0'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)

_ = XLATOR.gettext

MIN_TAIL_EVENTS = 5
BOOTSTRAP_RESAMPLES = 200
DENSITY_TOLERANCE = 1e-8


# =============================================================================
def boundary_vector(value):
    """Typecast a configured boundary vector (numbers or [re, im] pairs) into an array."""
    if value is None:
        return None
    res = []
    for v in value:
        if isinstance(v, (list, tuple)):
            res.append(complex(float(v[0]), float(v[1])))
        else:
            res.append(complex(v))
    return np.array(res, dtype=np.complex128)


# =============================================================================
class GridPoint(object):
    """The picklable description of all samples of one grid point (N, χ)."""

    # -------------------------------------------------------------------------
    def __init__(
            self, n_sites, chi, D=2, L=1, boundary=BOUNDARY_OBC, homogeneous=True,
            master_seed=0, observable='sigma_x', phi_i=None, phi_f=None, frozen=False):
        """Constructor."""
        self.n_sites = int(n_sites)
        self.chi = int(chi)
        self.D = int(D)
        self.L = int(L)
        self.boundary = boundary
        self.homogeneous = bool(homogeneous)
        self.master_seed = int(master_seed)
        self.observable = observable
        self.phi_i = phi_i
        self.phi_f = phi_f
        self.frozen = bool(frozen)

    # -------------------------------------------------------------------------
    @classmethod
    def from_config(cls, config, n_sites, chi):
        """The grid point (n_sites, chi) of a campaign configuration."""
        return cls(
            n_sites, chi, D=config.D, L=config.L, boundary=config.boundary,
            homogeneous=config.homogeneous, master_seed=config.master_seed,
            observable=config.observable, phi_i=boundary_vector(config.phi_I),
            phi_f=boundary_vector(config.phi_F), frozen=config.frozen)

    # -------------------------------------------------------------------------
    @property
    def window_start(self):
        """The first site of the centered window."""
        return (self.n_sites - self.L) // 2 + 1

    # -------------------------------------------------------------------------
    def stream(self, index):
        """The random stream of sample `index` (always stream 0 if frozen)."""
        s = 0 if self.frozen else index
        return RngStream(self.master_seed, s, channel=(CHANNEL_RMPS, self.n_sites, self.chi))

    # -------------------------------------------------------------------------
    def sample(self, index):
        """The normalized RMPS of sample `index`."""
        return sample_rmps(
            self.n_sites, self.D, self.chi, boundary=self.boundary,
            homogeneous=self.homogeneous, rng=self.stream(index), phi_i=self.phi_i,
            phi_f=self.phi_f)

    # -------------------------------------------------------------------------
    def observable_spec(self):
        """The centered window observable."""
        op = named_operator(self.observable, self.D)
        return ObservableSpec.centered(self.n_sites, self.L, op)

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "<{c}(N={n}, chi={x}, D={d}, L={l})>".format(
            c=self.__class__.__name__, n=self.n_sites, x=self.chi, d=self.D, l=self.L)


# =============================================================================
def _sample_expectation(task):
    point, index = task
    mps = point.sample(index)
    return float(expectation(mps, point.observable_spec()).real)


# =============================================================================
def _sample_reduced_state(task):
    point, index = task
    mps = point.sample(index)
    return reduced_density_matrix(mps, point.window_start, point.L)


# =============================================================================
def _sample_expectation_and_state(task):
    point, index = task
    mps = point.sample(index)
    f = float(expectation(mps, point.observable_spec()).real)
    rho = None
    if point.D == 2:
        rho = reduced_density_matrix(mps, point.window_start, point.L)
    return f, rho


# =============================================================================
def _run_samples(executor, func, point, samples):
    if executor is None:
        executor = SampleExecutor(1)
    return executor.map(func, [(point, s) for s in range(samples)])


# =============================================================================
def _log_grid_point(what, record):
    LOG.info(_("{w}: grid point N={n}, chi={c} done after {t} s.").format(
        w=what, n=record.n_sites, c=record.chi, t=format_quantity(record.wall_clock, 3)))


# =============================================================================
def iter_variance_scan(config, executor=None):
    """Yield one EnsembleRecord with the ensemble statistics of f per grid point."""
    for n, chi in config.grid_points():
        start = time.monotonic()
        point = GridPoint.from_config(config, n, chi)
        acc = RunningStats()
        values = []
        for f in _run_samples(executor, _sample_expectation, point, config.samples):
            acc.push(f)
            values.append(f)

        record = EnsembleRecord(n, chi, config.samples)
        record.f = acc.summary()
        record.values = np.array(values)
        record.wall_clock = time.monotonic() - start
        _log_grid_point('variance_scan', record)
        LOG.debug("f mean {m}, variance {v}.".format(
            m=format_quantity(record.f.mean), v=format_quantity(record.f.variance)))
        yield record


# =============================================================================
def variance_scan(config, executor=None):
    """
    Ensemble variance of f = ⟨ψ|O|ψ⟩ over the RMPS ensemble for every grid point.

    The variance is the one of the per state expectation values, accumulated with
    Welford's algorithm in sample order.
    """
    return list(iter_variance_scan(config, executor=executor))


# =============================================================================
def iter_distance_scan(config, executor=None):
    """Yield one EnsembleRecord with trace distance statistics per grid point."""
    for n, chi in config.grid_points():
        start = time.monotonic()
        point = GridPoint.from_config(config, n, chi)
        obs = point.observable_spec()
        o_window = obs.window_matrix()
        o_norm = obs.operator_norm()

        # first pass, the empirical average state
        mean_acc = RunningMatrixStats()
        states = []
        for rho in _run_samples(executor, _sample_reduced_state, point, config.samples):
            mean_acc.push(rho)
            states.append(rho)
        rho_bar = mean_acc.mean
        f_bar = complex(np.trace(rho_bar @ o_window)).real

        # second pass, the distances from it
        d1 = RunningStats()
        entropy = RunningStats()
        f_acc = RunningStats()
        violations = 0
        for rho in states:
            dist = trace_distance(rho, rho_bar)
            d1.push(dist)
            entropy.push(von_neumann_entropy(rho))
            f = complex(np.trace(rho @ o_window)).real
            f_acc.push(f)
            if abs(f - f_bar) > dist * o_norm + 1e-12:
                violations += 1

        record = EnsembleRecord(n, chi, config.samples)
        record.d1 = d1.summary()
        record.entropy = entropy.summary()
        record.f = f_acc.summary()
        record.mean_state = rho_bar
        record.observable_violations = violations
        record.wall_clock = time.monotonic() - start
        if violations:
            LOG.warning(_(
                "{v} samples at N={n}, chi={c} violate the trace distance bound of the "
                "observable.").format(v=violations, n=n, c=chi))
        _log_grid_point('distance_scan', record)
        yield record


# =============================================================================
def distance_scan(config, executor=None):
    """
    Mean trace distance E‖ρ_s − ρ̄_s‖₁ of the centered window for every grid point.

    ρ̄_s is the empirical mean of the same grid point; the samples of the first
    pass are kept for the second one.
    """
    return list(iter_distance_scan(config, executor=executor))


# =============================================================================
def average_state_distance_curve(
        n_sites, D, chi, sample_grid, rng, boundary=BOUNDARY_OBC, phi_i=None, phi_f=None,
        homogeneous=True):
    """
    Trace distance of the running ensemble averages from the maximally mixed state.

    Both the RMPS and the Haar state ensemble are averaged up to the largest
    checkpoint, at each checkpoint k the distance ‖ρ̄(k) − I/D^N‖₁ is recorded
    together with the bound √(D^N)·‖SE‖_F of its statistical fluctuation.
    """
    dim = D ** n_sites
    if dim > 256:
        raise DimensionMismatchError('dense output dimension', '≤ 256', dim)
    checkpoints = sorted(set(int(k) for k in sample_grid))
    if not checkpoints or checkpoints[0] < 1:
        raise DimensionMismatchError('sample grid', 'positive sample counts', sample_grid)

    mixed = np.eye(dim, dtype=np.complex128) / dim
    rmps_stream = rng.spawn(CHANNEL_RMPS)
    haar_stream = rng.spawn(CHANNEL_HAAR_STATE)
    rmps_acc = RunningMatrixStats((dim, dim))
    haar_acc = RunningMatrixStats((dim, dim))
    res = {'rmps': [], 'rmps_bound': [], 'haar': [], 'haar_bound': []}

    def bound(acc):
        return float(np.sqrt(dim) * np.linalg.norm(acc.stderr))

    next_cp = 0
    for k in range(1, checkpoints[-1] + 1):
        mps = sample_rmps(
            n_sites, D, chi, boundary=boundary, homogeneous=homogeneous,
            rng=rmps_stream.spawn(k - 1), phi_i=phi_i, phi_f=phi_f)
        psi = dense_statevector(mps)
        rmps_acc.push(np.outer(psi, psi.conj()))
        phi = haar_state(dim, haar_stream.spawn(k - 1))
        haar_acc.push(np.outer(phi, phi.conj()))

        if k == checkpoints[next_cp]:
            res['rmps'].append(trace_distance(rmps_acc.mean, mixed))
            res['rmps_bound'].append(bound(rmps_acc))
            res['haar'].append(trace_distance(haar_acc.mean, mixed))
            res['haar_bound'].append(bound(haar_acc))
            LOG.info(_("Checkpoint {k}: RMPS distance {r}, Haar distance {h}.").format(
                k=format_count(k), r=format_quantity(res['rmps'][-1]),
                h=format_quantity(res['haar'][-1])))
            next_cp += 1

    return AverageStateCurve(
        checkpoints, res['rmps'], res['rmps_bound'], res['haar'], res['haar_bound'])


# =============================================================================
def _reduced_eigenvalues(rho):
    return np.clip(hermitian_eig(rho), 0.0, 1.0)


# =============================================================================
def eigenvalue_histogram(
        n_sites, D, chi, L, samples, bins, rng, boundary=BOUNDARY_OBC, phi_i=None,
        phi_f=None, homogeneous=True):
    """
    Binned eigenvalues of the reduced states of the centered window for RMPS and
    Haar random states.

    Both ensembles are binned into the same `bins` equal bins on [0, 1], and their
    pooled eigenvalues are compared by a two-sample Kolmogorov-Smirnov test.
    """
    window_start = (n_sites - L) // 2 + 1
    rmps_stream = rng.spawn(CHANNEL_RMPS)
    haar_stream = rng.spawn(CHANNEL_HAAR_STATE)
    rmps_vals = []
    haar_vals = []
    for s in range(int(samples)):
        mps = sample_rmps(
            n_sites, D, chi, boundary=boundary, homogeneous=homogeneous,
            rng=rmps_stream.spawn(s), phi_i=phi_i, phi_f=phi_f)
        rmps_vals.append(_reduced_eigenvalues(reduced_density_matrix(mps, window_start, L)))
        psi = haar_state(D ** n_sites, haar_stream.spawn(s))
        haar_vals.append(_reduced_eigenvalues(
            reduced_state_of_vector(psi, D, n_sites, window_start, L)))

    rmps_vals = np.concatenate(rmps_vals)
    haar_vals = np.concatenate(haar_vals)
    rmps_counts, edges = np.histogram(rmps_vals, bins=int(bins), range=(0.0, 1.0))
    haar_counts, _edges = np.histogram(haar_vals, bins=int(bins), range=(0.0, 1.0))
    ks = sp_stats.ks_2samp(rmps_vals, haar_vals)

    hist = EigenHistogram(
        edges, rmps_counts / float(rmps_vals.shape[0]), haar_counts / float(haar_vals.shape[0]),
        ks.statistic, ks.pvalue, rmps_eigenvalues=rmps_vals, haar_eigenvalues=haar_vals,
        n_rmps=rmps_vals.shape[0], n_haar=haar_vals.shape[0])
    LOG.info(_("KS statistic {s} against the 1% critical value {c}.").format(
        s=format_quantity(hist.ks_statistic), c=format_quantity(hist.critical_value)))
    return hist


# =============================================================================
def lipschitz_bound(n_sites, D, L, op_norm):
    """The analytic bound η ≤ 4·D^{2L+2}·N·‖O‖∞^L."""
    return 4.0 * float(D) ** (2 * L + 2) * n_sites * float(op_norm) ** L


# =============================================================================
def refined_lipschitz_bound(n_sites, D, chi, L, op_norm, epsilon2):
    """
    The finite N bound of the Lipschitz constant with the transfer gap ε₂:

        2L·D^{2L}·(1 + χ²ε₂^{N−L})·‖O‖^L + 2(N−L−1)·D^{2L+2}·(1 + χ²ε₂^{⌊(N−L)/2⌋})·‖O‖^L
    """
    o = float(op_norm) ** L
    rest = n_sites - L
    first = 2.0 * L * float(D) ** (2 * L) * (1.0 + chi ** 2 * epsilon2 ** rest) * o
    second = (2.0 * (rest - 1) * float(D) ** (2 * L + 2)
              * (1.0 + chi ** 2 * epsilon2 ** (rest // 2)) * o)
    return first + max(second, 0.0)


# =============================================================================
def lipschitz_probe(
        n_sites, D, chi, L, obs, pairs, perturbation_scale, rng, boundary=BOUNDARY_OBC,
        phi_i=None, phi_f=None, eig_maxiter=None):
    """
    Largest observed difference quotient |f(U₁) − f(U₂)| / ‖U₁ − U₂‖₂ over probe pairs.

    U₁ is Haar random, U₂ = U₁·exp(i·scale·H) a geodesic perturbation, f is the
    expectation value of `obs` in the normalized homogeneous MPS of the unitary.
    Pairs closer than 1e-13 are skipped and counted.

    @raise DegeneratePairError: if every pair had to be skipped
    """
    if int(pairs) < 1:
        raise DimensionMismatchError('number of probe pairs', '≥ 1', pairs)
    if not perturbation_scale > 0:
        raise DimensionMismatchError('perturbation scale', '> 0', perturbation_scale)
    if obs is None:
        obs = ObservableSpec.centered(n_sites, L, named_operator('sigma_x', D))
    op_norm = max(norm(op, NormKind.OPERATOR) for op in obs.ops)

    def f_of(u):
        mps = Mps.from_unitary(u, n_sites, D, chi, boundary=boundary, phi_i=phi_i, phi_f=phi_f)
        return float(expectation(mps, obs).real)

    probe_stream = rng.spawn(CHANNEL_PROBE)
    max_ratio = 0.0
    max_eps2 = 0.0
    skipped = 0
    min_dist = np.inf
    for p in range(int(pairs)):
        stream = probe_stream.spawn(p)
        u1 = haar_unitary(chi * D, stream)
        u2 = geodesic_perturbation(u1, perturbation_scale, stream)
        dist = norm(u1 - u2, NormKind.FROBENIUS)
        if dist < DEGENERATE_PAIR_THRESHOLD:
            LOG.debug("Skipping probe pair {p}, distance {d:.3e}.".format(p=p, d=dist))
            skipped += 1
            min_dist = min(min_dist, dist)
            continue
        ratio = abs(f_of(u1) - f_of(u2)) / dist
        max_ratio = max(max_ratio, ratio)
        if chi > 1:
            spec = transfer_spectrum(extract_site_tensors(u1, D, chi), k=2, maxiter=eig_maxiter)
            max_eps2 = max(max_eps2, spec.epsilon2)

    if skipped == int(pairs):
        raise DegeneratePairError(min_dist, DEGENERATE_PAIR_THRESHOLD)

    result = LipschitzProbeResult(
        perturbation_scale, pairs, skipped, max_ratio,
        lipschitz_bound(n_sites, D, L, op_norm),
        refined_bound=refined_lipschitz_bound(n_sites, D, chi, L, op_norm, max_eps2),
        max_epsilon2=max_eps2)
    LOG.info(_("Lipschitz probe at scale {s}: max. ratio {r}, bound {b}.").format(
        s=format_quantity(perturbation_scale), r=format_quantity(result.max_ratio),
        b=format_quantity(result.bound)))
    return result


# =============================================================================
@functools.lru_cache(maxsize=8)
def pauli_basis(L):
    """All 4^L Pauli strings of L qubits as read-only array of shape (4^L, 2^L, 2^L)."""
    singles = [named_operator(name, 2) for name in ('identity', 'sigma_x', 'sigma_y', 'sigma_z')]
    mats = []
    for combo in itertools.product(singles, repeat=L):
        m = np.ones((1, 1), dtype=np.complex128)
        for s in combo:
            m = np.kron(m, s)
        mats.append(m)
    basis = np.array(mats)
    basis.setflags(write=False)
    return basis


# =============================================================================
def pauli_coefficients(delta, L):
    """p_x = Tr(P_x Δ) / 2^L for all Pauli strings P_x (real for Hermitian Δ)."""
    basis = pauli_basis(L)
    return np.einsum('xab,ba->x', basis, delta).real / 2.0 ** L


# =============================================================================
def _check_density_matrix(rho, dim, what):
    m = np.asarray(rho, dtype=np.complex128)
    if m.shape != (dim, dim):
        raise NotDensityMatrixError(
            _("shape {g} instead of {e}").format(g=m.shape, e=(dim, dim)), what)
    if not np.all(np.isfinite(m)):
        raise NotDensityMatrixError(_("non finite entries"), what)
    if hermitian_deviation(m) > HERMITIAN_TOLERANCE:
        raise NotDensityMatrixError(_("not Hermitian"), what)
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > DENSITY_TOLERANCE:
        raise NotDensityMatrixError(_("trace {:.6g} instead of 1").format(tr.real), what)
    if np.min(hermitian_eig(m)) < -DENSITY_TOLERANCE:
        raise NotDensityMatrixError(_("negative eigenvalues"), what)
    return m


# =============================================================================
def pauli_norm_chain_check(rho, rho_bar, L):
    """
    Expand Δρ = ρ − ρ̄ in the Pauli string basis and check the chain of norms.

    With p_x = Tr(P_x Δρ)/2^L the Parseval identity reads ‖Δρ‖₂² = 2^L Σ_x p_x²,
    and the chain ‖Δρ‖₁ ≤ 2^L‖Δρ‖₂ ≤ 2^{5L/2}·max|p_x| ≤ 4^{3L/2}·max|p_x| holds.

    @raise NotDensityMatrixError: if one of the inputs is no 2^L×2^L density matrix
    """
    dim = 2 ** int(L)
    r = _check_density_matrix(rho, dim, 'rho')
    rb = _check_density_matrix(rho_bar, dim, 'rho_bar')
    delta = r - rb
    p = pauli_coefficients(delta, L)
    norm2 = norm(delta, NormKind.FROBENIUS)
    norm1 = norm(delta, NormKind.TRACE)
    parseval = abs(norm2 ** 2 - dim * float(np.sum(p ** 2)))
    max_p = float(np.max(np.abs(p))) if p.size else 0.0
    return PauliChainReport(L, max_p, norm2, norm1, parseval)


# =============================================================================
def _tail_points(records):
    """(x, log tail) of all thresholds with at least MIN_TAIL_EVENTS events."""
    xs = []
    ys = []
    for rec in records:
        counts = rec.tail.counts
        fractions = rec.tail.fractions()
        scale = rec.chi / float(rec.n_sites ** 2)
        for i, eps in enumerate(rec.tail.epsilons):
            if counts[i] < MIN_TAIL_EVENTS:
                continue
            xs.append(eps * eps * scale)
            ys.append(np.log(fractions[i]))
    return np.array(xs), np.array(ys)


# =============================================================================
def _fit_tail(xs, ys):
    if xs.shape[0] < 2 or np.ptp(xs) == 0:
        raise InsufficientTailError(xs.shape[0])
    fit = sp_stats.linregress(xs, ys)
    resid = ys - (fit.intercept + fit.slope * xs)
    return float(np.exp(fit.intercept)), float(-fit.slope), float(np.sqrt(np.mean(resid ** 2)))


# =============================================================================
def _tail_counter(values, epsilons):
    counter = TailCounter(epsilons)
    counter.extend(np.abs(values - np.mean(values)))
    return counter


# =============================================================================
def fit_concentration(records, master_seed=0, resamples=BOOTSTRAP_RESAMPLES):
    """
    Least squares fit of log tail = log ĉ₁ − ĉ₂′·ε²χ/N² over all grid points.

    Only thresholds with at least five events enter the fit. The confidence
    interval of ĉ₂′ is the 2.5% … 97.5% percentile range of a nonparametric
    bootstrap, which resamples the f values of every grid point.

    @raise InsufficientTailError: if less than two distinct usable points remain
    """
    xs, ys = _tail_points(records)
    c1, c2, resid = _fit_tail(xs, ys)

    boot = []
    for b in range(int(resamples)):
        gen = RngStream(master_seed, b, channel=(CHANNEL_BOOTSTRAP,)).generator
        resampled = []
        for rec in records:
            n = rec.values.shape[0]
            values = rec.values[gen.integers(0, n, n)]
            new = EnsembleRecord(rec.n_sites, rec.chi, n)
            new.tail = _tail_counter(values, rec.tail.epsilons)
            resampled.append(new)
        bx, by = _tail_points(resampled)
        try:
            boot.append(_fit_tail(bx, by)[1])
        except InsufficientTailError:
            continue

    lower = upper = None
    if boot:
        lower = float(np.percentile(boot, 2.5))
        upper = float(np.percentile(boot, 97.5))
    return ConcentrationFit(
        c1, c2, resid, xs.shape[0], c2_lower=lower, c2_upper=upper, resamples=len(boot))


# =============================================================================
def iter_concentration_tail(config, executor=None):
    """Yield one EnsembleRecord with tail counts per grid point."""
    epsilons = config.epsilon_grid
    for n, chi in config.grid_points():
        start = time.monotonic()
        point = GridPoint.from_config(config, n, chi)
        values = []
        states = []
        for f, rho in _run_samples(
                executor, _sample_expectation_and_state, point, config.samples):
            values.append(f)
            states.append(rho)
        values = np.array(values)

        record = EnsembleRecord(n, chi, config.samples)
        record.values = values
        record.f = RunningStats(values).summary()
        record.tail = _tail_counter(values, epsilons)

        if config.D == 2:
            rho_bar = np.mean(np.array(states), axis=0)
            eps = np.array(epsilons)
            factor = 4.0 ** (1.5 * config.L)
            pauli = np.zeros(len(eps), dtype=np.int64)
            state = np.zeros(len(eps), dtype=np.int64)
            for rho in states:
                delta = rho - rho_bar
                max_p = float(np.max(np.abs(pauli_coefficients(delta, config.L))))
                d1 = norm(delta, NormKind.TRACE)
                pauli += (max_p > eps)
                state += (d1 > factor * eps)
            record.pauli_tail = pauli
            record.state_tail = state

        record.wall_clock = time.monotonic() - start
        _log_grid_point('concentration_tail', record)
        yield record


# =============================================================================
def concentration_tail(config, executor=None):
    """
    Empirical tails Pr[|f − f̄| ≥ ε] per grid point and their concentration fit.

    @return: the list of EnsembleRecords and the ConcentrationFit
    @rtype: tuple
    """
    records = list(iter_concentration_tail(config, executor=executor))
    fit = fit_concentration(records, master_seed=config.master_seed)
    LOG.info(_("Concentration fit: c2' = {c} in [{lo}, {hi}], concentrating: {v}.").format(
        c=format_quantity(fit.c2_prime),
        lo=format_quantity(fit.c2_lower) if fit.c2_lower is not None else '-',
        hi=format_quantity(fit.c2_upper) if fit.c2_upper is not None else '-',
        v=fit.concentrating))
    return records, fit


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
