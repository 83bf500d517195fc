#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: Matrix product states, transfer matrix contraction and the dense oracle.

Conventions:
 * sites are numbered 1 … N
 * OBC amplitudes are ⟨φF|A^{i_N} ⋯ A^{i_1}|φI⟩, PBC amplitudes Tr[A^{i_1} ⋯ A^{i_N}]
 * in dense vectors and reduced states site 1 is the most significant digit
 * matrices are flattened row-major (see rmps_typicality.linalg)

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""
from __future__ import absolute_import

import logging

# Third party modules
import numpy as np
import scipy.linalg

# Own modules
from . import DEFAULT_MAX_WINDOW, DEFAULT_PBC_DENSE_LIMIT, DEFAULT_STATE_CAP
from . import DEGENERACY_TOLERANCE
from .errors import ChiTooLargeForPBCError, DimensionMismatchError, MpsError
from .errors import NotNormalizableError, StateTooLargeError, WindowTooLargeError
from .haar import SiteTensors, extract_site_tensors, haar_unitary
from .linalg import NormKind, as_cmatrix, hermitian_deviation, implicit_top_eigs, norm
from .results import TransferSpectrum

from .xlate import XLATOR

__version__ = '0.7.3'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)

_ = XLATOR.gettext

BOUNDARY_OBC = 'obc'
BOUNDARY_PBC = 'pbc'
VALID_BOUNDARIES = (BOUNDARY_OBC, BOUNDARY_PBC)

NAMED_OPERATORS = ('sigma_x', 'sigma_y', 'sigma_z', 'identity')


# =============================================================================
def named_operator(name, D=2):
    """
    Return the single site operator with the given name.

    The Pauli matrices exist only for D = 2, the identity for every D.
    """
    key = str(name).strip().lower()
    if key == 'identity':
        return np.eye(D, dtype=np.complex128)
    if D != 2:
        raise DimensionMismatchError(
            'operator {!r}'.format(name), 'physical dimension 2', D)
    if key == 'sigma_x':
        return np.array([[0, 1], [1, 0]], dtype=np.complex128)
    if key == 'sigma_y':
        return np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    if key == 'sigma_z':
        return np.array([[1, 0], [0, -1]], dtype=np.complex128)
    msg = _("Unknown operator name {n!r}, valid names are: {v}.").format(
        n=name, v=', '.join(NAMED_OPERATORS))
    raise ValueError(msg)


# =============================================================================
class ObservableSpec(object):
    """
    A product observable O[1] ⊗ … ⊗ O[L] on the L contiguous sites starting at
    window_start, with the identity on all other sites.
    """

    # -------------------------------------------------------------------------
    def __init__(self, window_start, ops):
        """Constructor."""
        try:
            start = int(window_start)
        except (TypeError, ValueError):
            raise WindowTooLargeError(window_start, len(ops), None)
        if not ops:
            raise WindowTooLargeError(start, 0, None)

        mats = []
        D = None
        for i, op in enumerate(ops):
            m = as_cmatrix(op, 'window operator {}'.format(i + 1))
            if m.shape[0] != m.shape[1]:
                raise DimensionMismatchError('window operator', 'square matrix', m.shape)
            if D is None:
                D = m.shape[0]
            elif m.shape[0] != D:
                raise DimensionMismatchError('window operator', (D, D), m.shape)
            m = m.copy()
            m.setflags(write=False)
            mats.append(m)

        if start < 1:
            raise WindowTooLargeError(start, len(mats), None)

        self._window_start = start
        self._ops = tuple(mats)
        self._hermitian = tuple(hermitian_deviation(m) <= 1e-12 for m in mats)

    # -------------------------------------------------------------------------
    @classmethod
    def centered(cls, N, L, op):
        """
        Observable with the same single site operator on L sites in the middle of
        the chain: window_start = floor((N − L)/2) + 1.
        """
        start = (int(N) - int(L)) // 2 + 1
        return cls(start, [op] * int(L))

    # -------------------------------------------------------------------------
    @classmethod
    def identity(cls, D, window_start=1, L=1):
        """The trivial observable."""
        return cls(window_start, [np.eye(D)] * L)

    # -------------------------------------------------------------------------
    @property
    def window_start(self):
        """The first site of the window."""
        return self._window_start

    # -------------------------------------------------------------------------
    @property
    def window_end(self):
        """The last site of the window."""
        return self._window_start + len(self._ops) - 1

    # -------------------------------------------------------------------------
    @property
    def ops(self):
        """The tuple of the L read-only D×D operators."""
        return self._ops

    # -------------------------------------------------------------------------
    @property
    def L(self):
        """The length of the window."""
        return len(self._ops)

    # -------------------------------------------------------------------------
    @property
    def D(self):
        """The physical dimension."""
        return self._ops[0].shape[0]

    # -------------------------------------------------------------------------
    @property
    def hermitian(self):
        """Per operator flag, whether it is Hermitian."""
        return self._hermitian

    # -------------------------------------------------------------------------
    @property
    def all_hermitian(self):
        """Whether all window operators are Hermitian."""
        return all(self._hermitian)

    # -------------------------------------------------------------------------
    def op_at(self, site):
        """The operator on the given site, None for identity outside of the window."""
        if self.window_start <= site <= self.window_end:
            return self._ops[site - self.window_start]
        return None

    # -------------------------------------------------------------------------
    def operator_norm(self):
        """‖O‖∞ of the whole product observable."""
        return float(np.prod([norm(m, NormKind.OPERATOR) for m in self._ops]))

    # -------------------------------------------------------------------------
    def window_matrix(self):
        """The D^L×D^L matrix O[1] ⊗ … ⊗ O[L]."""
        m = np.ones((1, 1), dtype=np.complex128)
        for op in self._ops:
            m = np.kron(m, op)
        return m

    # -------------------------------------------------------------------------
    def full_matrix(self, N):
        """The D^N×D^N matrix of the observable on a chain of N sites (oracle use only)."""
        self.check_chain(N)
        left = np.eye(self.D ** (self.window_start - 1))
        right = np.eye(self.D ** (N - self.window_end))
        return np.kron(np.kron(left, self.window_matrix()), right)

    # -------------------------------------------------------------------------
    def extended(self, n_identities=1):
        """Return the same observable with identity factors appended to its window."""
        ops = list(self._ops) + [np.eye(self.D)] * int(n_identities)
        return self.__class__(self.window_start, ops)

    # -------------------------------------------------------------------------
    def check_chain(self, N, D=None):
        """Raise, if the window does not fit into a chain of N sites."""
        if self.window_end > N:
            raise WindowTooLargeError(self.window_start, self.L, N)
        if D is not None and D != self.D:
            raise DimensionMismatchError('observable', 'physical dimension {}'.format(D), self.D)

    # -------------------------------------------------------------------------
    def as_dict(self):
        """
        Transforms the elements of the object into a dict

        @return: structure as dict
        @rtype:  dict
        """
        return {
            '__class_name__': self.__class__.__name__,
            'window_start': self.window_start,
            'L': self.L,
            'D': self.D,
            'hermitian': list(self.hermitian),
        }

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "<{c}(window_start={s}, L={l}, D={d})>".format(
            c=self.__class__.__name__, s=self.window_start, l=self.L, d=self.D)


# =============================================================================
def _boundary_vector(vec, chi, what):
    if vec is None:
        v = np.zeros(chi, dtype=np.complex128)
        v[0] = 1.0
        return v
    v = np.asarray(vec, dtype=np.complex128).reshape(-1)
    if v.shape[0] != chi:
        raise DimensionMismatchError(what, chi, v.shape[0])
    if not np.all(np.isfinite(v)):
        raise DimensionMismatchError(what, 'finite entries', v)
    nrm = np.linalg.norm(v)
    if nrm == 0.0:
        raise DimensionMismatchError(what, 'a nonzero vector', v)
    return v / nrm


# =============================================================================
class Mps(object):
    """
    An immutable matrix product state.

    The amplitudes of the state are `scale` times the plain matrix products. A
    freshly built state has scale 1, `normalize()` returns a copy with
    scale = 1/√⟨ψ|ψ⟩ and records that norm as `norm_factor`.
    """

    # -------------------------------------------------------------------------
    def __init__(
            self, N, sites, boundary=BOUNDARY_OBC, phi_i=None, phi_f=None,
            scale=1.0, norm_factor=None):
        """Constructor."""
        N = int(N)
        if N < 1:
            raise MpsError(_("The number of sites must be at least 1, not {}.").format(N))

        if isinstance(sites, SiteTensors):
            sites = (sites,)
        sites = tuple(sites)
        if len(sites) not in (1, N):
            raise DimensionMismatchError('number of site tensors', '1 or {}'.format(N), len(sites))
        first = sites[0]
        for s in sites:
            if not isinstance(s, SiteTensors):
                msg = _("Object {!r} is not a SiteTensors object.").format(s)
                raise TypeError(msg)
            if s.D != first.D or s.chi != first.chi:
                raise DimensionMismatchError(
                    'site tensors', (first.D, first.chi, first.chi), s.tensors.shape)

        boundary = str(boundary).strip().lower()
        if boundary not in VALID_BOUNDARIES:
            raise MpsError(_("Invalid boundary condition {!r}.").format(boundary))

        self._N = N
        self._sites = sites
        self._boundary = boundary
        self._homogeneous = (len(sites) == 1)
        self._phi_i = None
        self._phi_f = None
        if boundary == BOUNDARY_OBC:
            self._phi_i = _boundary_vector(phi_i, first.chi, 'phi_I')
            self._phi_f = _boundary_vector(phi_f, first.chi, 'phi_F')
            self._phi_i.setflags(write=False)
            self._phi_f.setflags(write=False)
        self._scale = float(scale)
        self._norm_factor = None if norm_factor is None else float(norm_factor)

    # -------------------------------------------------------------------------
    @classmethod
    def from_unitary(
            cls, unitary, N, D, chi, boundary=BOUNDARY_OBC, phi_i=None, phi_f=None,
            normalize=True, pbc_dense_limit=DEFAULT_PBC_DENSE_LIMIT):
        """Homogeneous MPS from the site tensors of one given χD×χD unitary."""
        site = extract_site_tensors(unitary, D, chi)
        mps = cls(N, site, boundary=boundary, phi_i=phi_i, phi_f=phi_f)
        if normalize:
            return mps.normalize(pbc_dense_limit=pbc_dense_limit)
        return mps

    # -------------------------------------------------------------------------
    @property
    def N(self):
        """The number of sites."""
        return self._N

    # -------------------------------------------------------------------------
    @property
    def D(self):
        """The physical dimension."""
        return self._sites[0].D

    # -------------------------------------------------------------------------
    @property
    def chi(self):
        """The bond dimension."""
        return self._sites[0].chi

    # -------------------------------------------------------------------------
    @property
    def boundary(self):
        """The boundary condition, 'obc' or 'pbc'."""
        return self._boundary

    # -------------------------------------------------------------------------
    @property
    def homogeneous(self):
        """Whether all sites share the same tensors."""
        return self._homogeneous

    # -------------------------------------------------------------------------
    @property
    def phi_i(self):
        """The initial boundary vector (OBC only)."""
        return self._phi_i

    # -------------------------------------------------------------------------
    @property
    def phi_f(self):
        """The final boundary vector (OBC only)."""
        return self._phi_f

    # -------------------------------------------------------------------------
    @property
    def scale(self):
        """The factor of all amplitudes."""
        return self._scale

    # -------------------------------------------------------------------------
    @property
    def norm_factor(self):
        """The norm √⟨ψ|ψ⟩ recorded at normalization, None before."""
        return self._norm_factor

    # -------------------------------------------------------------------------
    @property
    def normalized(self):
        """Whether this state is the result of normalize()."""
        return self._norm_factor is not None

    # -------------------------------------------------------------------------
    @property
    def sites(self):
        """The tuple of distinct SiteTensors (one of them, if homogeneous)."""
        return self._sites

    # -------------------------------------------------------------------------
    def site(self, k):
        """The SiteTensors of site k (1-based)."""
        if k < 1 or k > self.N:
            raise WindowTooLargeError(k, 1, self.N)
        if self._homogeneous:
            return self._sites[0]
        return self._sites[k - 1]

    # -------------------------------------------------------------------------
    def norm_squared(self, pbc_dense_limit=DEFAULT_PBC_DENSE_LIMIT):
        """Shortcut for norm_squared(self)."""
        return norm_squared(self, pbc_dense_limit=pbc_dense_limit)

    # -------------------------------------------------------------------------
    def normalize(self, pbc_dense_limit=DEFAULT_PBC_DENSE_LIMIT):
        """
        Return a normalized copy of this state.

        @raise NotNormalizableError: if the squared norm vanishes or is not finite
        """
        ns = norm_squared(self, pbc_dense_limit=pbc_dense_limit)
        if not np.isfinite(ns) or ns <= 1e-300:
            raise NotNormalizableError(ns)
        nrm = float(np.sqrt(ns))
        return self.__class__(
            self.N, self._sites, boundary=self.boundary, phi_i=self._phi_i,
            phi_f=self._phi_f, scale=self._scale / nrm, norm_factor=nrm)

    # -------------------------------------------------------------------------
    def as_dict(self, short=True):
        """
        Transforms the elements of the object into a dict

        @param short: don't include the boundary vectors in resulting dict.
        @type short: bool

        @return: structure as dict
        @rtype:  dict
        """
        res = {
            '__class_name__': self.__class__.__name__,
            'N': self.N,
            'D': self.D,
            'chi': self.chi,
            'boundary': self.boundary,
            'homogeneous': self.homogeneous,
            'scale': self.scale,
            'norm_factor': self.norm_factor,
        }
        if not short and self.boundary == BOUNDARY_OBC:
            res['phi_i'] = self._phi_i.tolist()
            res['phi_f'] = self._phi_f.tolist()
        return res

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "<{c}(N={n}, D={d}, chi={x}, boundary={b!r}, homogeneous={h!r})>".format(
            c=self.__class__.__name__, n=self.N, d=self.D, x=self.chi,
            b=self.boundary, h=self.homogeneous)


# =============================================================================
def sample_rmps(
        N, D, chi, boundary=BOUNDARY_OBC, homogeneous=True, rng=None, phi_i=None,
        phi_f=None, normalize=True, pbc_dense_limit=DEFAULT_PBC_DENSE_LIMIT):
    """
    Sample a random MPS by sequential generation.

    The site tensors come from one Haar unitary of size χD (homogeneous) or from N
    independent ones, drawn from `rng` in site order.
    """
    if rng is None:
        raise MpsError(_("A random stream is needed to sample a MPS."))
    if int(D) < 2:
        raise DimensionMismatchError('physical dimension', '≥ 2', D)
    if int(N) < 1:
        raise DimensionMismatchError('number of sites', '≥ 1', N)
    if int(chi) < 1:
        raise DimensionMismatchError('bond dimension', '≥ 1', chi)
    if str(boundary).lower() == BOUNDARY_PBC and chi > pbc_dense_limit:
        raise ChiTooLargeForPBCError(chi, pbc_dense_limit)

    n_unitaries = 1 if homogeneous else N
    sites = [
        extract_site_tensors(haar_unitary(chi * D, rng), D, chi)
        for _k in range(n_unitaries)]
    mps = Mps(N, sites, boundary=boundary, phi_i=phi_i, phi_f=phi_f)
    if normalize:
        return mps.normalize(pbc_dense_limit=pbc_dense_limit)
    return mps


# =============================================================================
def _apply_map(x, site_tensors, op=None):
    """Σ_{ij} ⟨j|O|i⟩ A^i X A^j† without any validation (op None means identity)."""
    a = site_tensors
    b = np.einsum('iab,bc->iac', a, x)
    if op is not None:
        b = np.einsum('ji,iac->jac', op, b)
    return np.einsum('jac,jdc->ad', b, a.conj())


# =============================================================================
def _apply_adjoint_map(y, site_tensors):
    """Σ_i A^i† Y A^i, the adjoint of the identity transfer map."""
    a = site_tensors
    return np.einsum('iba,bc,icd->ad', a.conj(), y, a)


# =============================================================================
def cp_apply(x, op, site):
    """
    Apply the transfer map of a site with operator weights to a χ×χ matrix.

    Returns Σ_{i,j} ⟨j|O|i⟩ A^i X A^j†, which for O = I is the completely
    positive map E(X) = Σ_i A^i X A^i†. The weight ⟨j|O|i⟩ makes the map
    propagate ⟨ψ|O|ψ⟩ in the boundary sweeps. The dense form is never built,
    the cost is O(D²χ² + Dχ³).
    """
    if not isinstance(site, SiteTensors):
        site = SiteTensors(site)
    m = as_cmatrix(x, 'bond matrix')
    if m.shape != (site.chi, site.chi):
        raise DimensionMismatchError('bond matrix', (site.chi, site.chi), m.shape)
    o = None
    if op is not None:
        o = as_cmatrix(op, 'site operator')
        if o.shape != (site.D, site.D):
            raise DimensionMismatchError('site operator', (site.D, site.D), o.shape)
    return _apply_map(m, site.tensors, o)


# =============================================================================
class TransferMatrix(object):
    """
    The χ²×χ² transfer matrix E_O = Σ_{ij} ⟨j|O|i⟩ A^i ⊗ A^j* of one site.

    It acts on row-major vectorized χ×χ matrices as vec(X) ↦ vec(cp_apply(X, O, A)).
    """

    # -------------------------------------------------------------------------
    def __init__(self, site, op=None):
        """Constructor."""
        if not isinstance(site, SiteTensors):
            site = SiteTensors(site)
        self._site = site
        self._op = None
        if op is not None:
            o = as_cmatrix(op, 'site operator')
            if o.shape != (site.D, site.D):
                raise DimensionMismatchError('site operator', (site.D, site.D), o.shape)
            self._op = o
        self._dense = None

    # -------------------------------------------------------------------------
    @property
    def chi(self):
        """The bond dimension."""
        return self._site.chi

    # -------------------------------------------------------------------------
    @property
    def dimension(self):
        """The dimension χ² of the space the transfer matrix acts on."""
        return self._site.chi ** 2

    # -------------------------------------------------------------------------
    def apply(self, vec):
        """Apply the transfer matrix to a vector of length χ²."""
        chi = self.chi
        x = np.asarray(vec, dtype=np.complex128).reshape(chi, chi)
        return _apply_map(x, self._site.tensors, self._op).reshape(-1)

    # -------------------------------------------------------------------------
    def dense(self):
        """The materialized χ²×χ² matrix, cached after the first call."""
        if self._dense is None:
            a = self._site.tensors
            chi = self.chi
            if self._op is None:
                e = np.einsum('iac,ibd->abcd', a, a.conj())
            else:
                e = np.einsum('ji,iac,jbd->abcd', self._op, a, a.conj())
            self._dense = e.reshape(chi * chi, chi * chi)
        return self._dense

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "<{c}(chi={x}, weighted={w!r})>".format(
            c=self.__class__.__name__, x=self.chi, w=self._op is not None)


# =============================================================================
def _check_pbc_limit(mps, pbc_dense_limit):
    if mps.chi > pbc_dense_limit:
        raise ChiTooLargeForPBCError(mps.chi, pbc_dense_limit)


# =============================================================================
def _pbc_product(mps, sites, ops=None):
    """Dense product E_{s1} E_{s2} ⋯ of the given sites, homogeneous runs by powers."""
    dim = mps.chi ** 2
    res = np.eye(dim, dtype=np.complex128)
    run = 0

    def flush(res, run):
        if run:
            e = TransferMatrix(mps.site(1)).dense()
            res = res @ np.linalg.matrix_power(e, run)
        return res

    for k in sites:
        op = None if ops is None else ops(k)
        if op is None and mps.homogeneous:
            run += 1
            continue
        res = flush(res, run)
        run = 0
        res = res @ TransferMatrix(mps.site(k), op).dense()
    return flush(res, run)


# =============================================================================
def _contract(mps, obs=None, pbc_dense_limit=DEFAULT_PBC_DENSE_LIMIT):
    """⟨ψ|O|ψ⟩ including the scale of the state (obs None for ⟨ψ|ψ⟩)."""

    def op_at(k):
        if obs is None:
            return None
        return obs.op_at(k)

    if mps.boundary == BOUNDARY_OBC:
        x = np.outer(mps.phi_i, mps.phi_i.conj())
        for k in range(1, mps.N + 1):
            x = _apply_map(x, mps.site(k).tensors, op_at(k))
        value = np.vdot(mps.phi_f, x @ mps.phi_f)
    else:
        _check_pbc_limit(mps, pbc_dense_limit)
        value = np.trace(_pbc_product(mps, range(1, mps.N + 1), op_at))

    return complex(value) * mps.scale ** 2


# =============================================================================
def expectation(mps, obs, pbc_dense_limit=DEFAULT_PBC_DENSE_LIMIT):
    """
    The expectation value ⟨ψ|O|ψ⟩ of a window observable.

    OBC states are swept from |φI⟩⟨φI| through all sites with cp_apply, identity
    outside of the window, and closed with ⟨φF|X_N|φF⟩; PBC states take the trace
    of the dense product of transfer matrices.

    @raise ChiTooLargeForPBCError: for PBC states with χ > pbc_dense_limit
    """
    obs.check_chain(mps.N, mps.D)
    return _contract(mps, obs, pbc_dense_limit=pbc_dense_limit)


# =============================================================================
def norm_squared(mps, pbc_dense_limit=DEFAULT_PBC_DENSE_LIMIT):
    """⟨ψ|ψ⟩ by a boundary sweep (OBC) or as trace of the transfer matrix product (PBC)."""
    return float(_contract(mps, None, pbc_dense_limit=pbc_dense_limit).real)


# =============================================================================
def _check_window(mps, window_start, L, max_window):
    if L < 1 or window_start < 1 or window_start + L - 1 > mps.N:
        raise WindowTooLargeError(window_start, L, mps.N)
    if max_window is not None and L > max_window:
        raise WindowTooLargeError(window_start, L, mps.N, max_length=max_window)


# =============================================================================
def reduced_density_matrix(
        mps, window_start, L, max_window=DEFAULT_MAX_WINDOW,
        pbc_dense_limit=DEFAULT_PBC_DENSE_LIMIT):
    """
    The D^L×D^L reduced density matrix of the window of L sites at window_start.

    For OBC the left environment is swept forward from |φI⟩⟨φI| and the right
    environment backward from |φF⟩⟨φF| with the adjoint map; the window keeps its
    D^{2L} open physical indices. PBC states contract the window against the
    dense product of all outside transfer matrices. The trace of the result is
    ⟨ψ|ψ⟩, i.e. 1 for normalized states.

    @raise WindowTooLargeError: if L exceeds max_window or the window leaves the chain
    """
    _check_window(mps, window_start, L, max_window)
    D = mps.D
    chi = mps.chi
    end = window_start + L - 1

    if mps.boundary == BOUNDARY_OBC:
        x = np.outer(mps.phi_i, mps.phi_i.conj())
        for k in range(1, window_start):
            x = _apply_map(x, mps.site(k).tensors)
        y = np.outer(mps.phi_f, mps.phi_f.conj())
        for k in range(mps.N, end, -1):
            y = _apply_adjoint_map(y, mps.site(k).tensors)

        w = x.reshape(1, 1, chi, chi)
        for k in range(window_start, end + 1):
            a = mps.site(k).tensors
            p = w.shape[0]
            w = np.einsum('iab,pqbc,jdc->piqjad', a, w, a.conj())
            w = w.reshape(p * D, p * D, chi, chi)
        rho = np.einsum('pqad,da->pq', w, y)

    else:
        _check_pbc_limit(mps, pbc_dense_limit)
        outside = list(range(end + 1, mps.N + 1)) + list(range(1, window_start))
        m_out = _pbc_product(mps, outside).reshape(chi, chi, chi, chi)
        prods = np.eye(chi, dtype=np.complex128).reshape(1, chi, chi)
        for k in range(window_start, end + 1):
            a = mps.site(k).tensors
            prods = np.einsum('nab,ibc->niac', prods, a).reshape(-1, chi, chi)
        rho = np.einsum('pac,qbd,cdab->pq', prods, prods.conj(), m_out)

    return rho * mps.scale ** 2


# =============================================================================
def transfer_spectrum(site, k=2, tol=0.0, maxiter=None, degeneracy_tolerance=DEGENERACY_TOLERANCE):
    """
    The k leading eigenvalues of the transfer matrix E_I of the given site.

    E_I and the completely positive map X ↦ Σ A^i X A^i† share their spectrum, so
    the map form is handed to the implicit eigensolver. A spectrum with
    |ε₂| within the degeneracy tolerance of 1 is flagged, not rejected.

    @raise NoConvergenceError: if the iterative eigensolver does not converge
    """
    if not isinstance(site, SiteTensors):
        site = SiteTensors(site)
    tm = TransferMatrix(site)
    k = int(k)
    if k > tm.dimension:
        raise DimensionMismatchError(
            'number of eigenvalues', '≤ chi² = {}'.format(tm.dimension), k)
    eigenvalues = implicit_top_eigs(tm.apply, tm.dimension, k=k, tol=tol, maxiter=maxiter)
    return TransferSpectrum(eigenvalues, degeneracy_tolerance=degeneracy_tolerance)


# =============================================================================
def pbc_norm_deviation(site, N):
    """
    |Tr(E_I^N) − 1| of a translation invariant periodic chain.

    With the spectrum λ_k of E_I this is |Σ_{k≥1} λ_k^N − 1|, the finite size
    normalization correction, which is ≈ |Σ_{k≥2} λ_k^N| for a unique leading 1.
    """
    if not isinstance(site, SiteTensors):
        site = SiteTensors(site)
    if site.chi > DEFAULT_PBC_DENSE_LIMIT:
        raise ChiTooLargeForPBCError(site.chi, DEFAULT_PBC_DENSE_LIMIT)
    ev = scipy.linalg.eigvals(TransferMatrix(site).dense())
    return float(abs(np.sum(ev ** int(N)) - 1.0))


# =============================================================================
def dense_statevector(mps, cap=DEFAULT_STATE_CAP):
    """
    The full state vector of length D^N, site 1 being the most significant digit.

    @raise StateTooLargeError: if D^N exceeds the cap
    """
    size = mps.D ** mps.N
    if size > cap:
        raise StateTooLargeError(size, cap)
    chi = mps.chi

    if mps.boundary == BOUNDARY_OBC:
        v = mps.phi_i.reshape(1, chi)
        for k in range(1, mps.N + 1):
            a = mps.site(k).tensors
            v = np.einsum('iab,nb->nia', a, v).reshape(-1, chi)
        psi = v @ mps.phi_f.conj()
    else:
        m = np.eye(chi, dtype=np.complex128).reshape(1, chi, chi)
        for k in range(1, mps.N + 1):
            a = mps.site(k).tensors
            m = np.einsum('nab,ibc->niac', m, a).reshape(-1, chi, chi)
        psi = np.trace(m, axis1=1, axis2=2)

    return psi * mps.scale


# =============================================================================
def reduced_state_of_vector(psi, D, N, window_start, L):
    """Dense partial trace of |ψ⟩⟨ψ| onto the window of L sites at window_start."""
    v = np.asarray(psi, dtype=np.complex128).reshape(-1)
    if v.shape[0] != D ** N:
        raise DimensionMismatchError('state vector', D ** N, v.shape[0])
    if L < 1 or window_start < 1 or window_start + L - 1 > N:
        raise WindowTooLargeError(window_start, L, N)
    t = v.reshape(D ** (window_start - 1), D ** L, D ** (N - window_start - L + 1))
    return np.einsum('apb,aqb->pq', t, t.conj())


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
