#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: Dense complex matrix kernels, matrix norms and eigensolvers.

All modules of this package share one flattening convention for χ×χ matrices:
row-major (C order), vec(X) = X.reshape(-1). Under this layout

    vec(A · X · Bᵀ) = kron(A, B) · vec(X)

which is the identity the transfer matrices are built on.

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""
from __future__ import absolute_import

import enum
import logging

# Third party modules
import numpy as np
import scipy.linalg
import scipy.sparse.linalg
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator

# Own modules
from . import DEFAULT_DENSE_EIG_LIMIT, DEFAULT_SVD_LIMIT, HERMITIAN_TOLERANCE
from .errors import DimensionMismatchError, NoConvergenceError
from .errors import NonFiniteMatrixError, NotHermitianError

from .xlate import XLATOR

__version__ = '0.5.1'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)

_ = XLATOR.gettext


# =============================================================================
class NormKind(enum.Enum):
    """The three unitarily invariant matrix norms."""

    OPERATOR = 'operator'
    FROBENIUS = 'frobenius'
    TRACE = 'trace'

    # -------------------------------------------------------------------------
    @classmethod
    def from_value(cls, value):
        """Return the NormKind for a NormKind, its name or its value."""
        if isinstance(value, cls):
            return value
        v = str(value).strip().lower()
        for kind in cls:
            if v in (kind.value, kind.name.lower()):
                return kind
        msg = _("Invalid norm kind {!r}.").format(value)
        raise ValueError(msg)


# =============================================================================
def as_cmatrix(a, what='matrix'):
    """
    Coerce the given array-like into a two dimensional complex128 array.

    @raise NonFiniteMatrixError: if any entry is NaN or infinite
    @raise DimensionMismatchError: if the input is not two dimensional

    @return: the matrix
    @rtype: numpy.ndarray
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2:
        raise DimensionMismatchError(what, '2 dimensions', '{} dimensions'.format(m.ndim))
    if not np.all(np.isfinite(m)):
        raise NonFiniteMatrixError(m.shape, what)
    return m


# =============================================================================
def kron(a, b):
    """Kronecker product with the standard block layout: (m×n)⊗(p×q) → (mp×nq)."""
    ma = as_cmatrix(a, 'left kron operand')
    mb = as_cmatrix(b, 'right kron operand')
    if ma.size == 0 or mb.size == 0:
        raise DimensionMismatchError(
            'kron operands', 'nonempty matrices', '{} and {}'.format(ma.shape, mb.shape))
    return np.kron(ma, mb)


# =============================================================================
def _singular_values(m):
    if m.size == 0:
        return np.zeros(0)
    return scipy.linalg.svdvals(m)


# =============================================================================
def norm(a, kind=NormKind.OPERATOR, svd_limit=DEFAULT_SVD_LIMIT):
    """
    Evaluate one of the three matrix norms.

    * operator:  largest singular value ‖A‖∞
    * frobenius: √Tr(A†A) = ‖A‖₂
    * trace:     sum of all singular values ‖A‖₁ = Tr|A|

    Matrices with a dimension beyond svd_limit get the operator norm by an
    iterative largest-singular-value estimation instead of a full SVD.
    """
    m = as_cmatrix(a)
    kind = NormKind.from_value(kind)

    if kind == NormKind.FROBENIUS:
        return float(np.linalg.norm(m, 'fro'))

    if kind == NormKind.OPERATOR:
        if m.size == 0:
            return 0.0
        if max(m.shape) > svd_limit and min(m.shape) > 1:
            sv = scipy.sparse.linalg.svds(m, k=1, return_singular_vectors=False)
            return float(np.max(sv))
        return float(np.max(_singular_values(m)))

    return float(np.sum(_singular_values(m)))


# =============================================================================
def trace_distance(a, b):
    """Full trace norm ‖a − b‖₁ of the difference (no factor 1/2)."""
    return norm(as_cmatrix(a) - as_cmatrix(b), NormKind.TRACE)


# =============================================================================
def hermitian_deviation(a):
    """Return max |A − A†| of the given square matrix."""
    m = as_cmatrix(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError('Hermitian matrix', 'square matrix', m.shape)
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m - m.conj().T)))


# =============================================================================
def hermitian_eig(a, vectors=False, tolerance=HERMITIAN_TOLERANCE):
    """
    Eigen decomposition of a Hermitian matrix.

    The matrix is symmetrized as (A + A†)/2 before the decomposition, after checking,
    that its deviation from Hermiticity is within the tolerance (relative to its
    largest entry, if that is above 1).

    @raise NotHermitianError: if max |A − A†| exceeds the tolerance

    @return: the ascending real eigenvalues, or a tuple of them and the
             orthonormal eigenvectors as columns, if vectors is True
    """
    m = as_cmatrix(a)
    deviation = hermitian_deviation(m)
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    if deviation > tolerance * scale:
        raise NotHermitianError(deviation, tolerance)

    h = (m + m.conj().T) / 2
    if vectors:
        w, v = scipy.linalg.eigh(h)
        return w, v
    return scipy.linalg.eigh(h, eigvals_only=True)


# =============================================================================
def von_neumann_entropy(rho, base=2):
    """
    Von Neumann entropy −Tr(ρ log ρ) of a density matrix.

    Eigenvalues below 1e-15 are skipped (0 · log 0 = 0).
    """
    w = hermitian_eig(rho)
    w = w[w > 1e-15]
    if not w.size:
        return 0.0
    s = -float(np.sum(w * np.log(w)))
    if base:
        s /= np.log(base)
    return max(s, 0.0)


# =============================================================================
def materialize(apply, dim):
    """Dense matrix of the linear map `apply` on ℂ^dim, column j = apply(e_j)."""
    m = np.empty((dim, dim), dtype=np.complex128)
    basis = np.zeros(dim, dtype=np.complex128)
    for j in range(dim):
        basis[j] = 1.0
        m[:, j] = np.asarray(apply(basis.copy()), dtype=np.complex128).reshape(-1)
        basis[j] = 0.0
    return m


# =============================================================================
def _sort_by_modulus(values):
    values = np.asarray(values, dtype=np.complex128)
    order = np.argsort(-np.abs(values), kind='stable')
    return values[order]


# =============================================================================
def implicit_top_eigs(
        apply, dim, k=2, tol=0.0, maxiter=None, dense_limit=DEFAULT_DENSE_EIG_LIMIT):
    """
    The k eigenvalues of largest modulus of an implicitly given linear map.

    The map is given as a callable on vectors of length dim (for transfer
    matrices dim = χ²). It is materialized and solved densely for dim up to
    dense_limit and whenever ARPACK cannot deliver k values (k ≥ dim − 1),
    otherwise the implicitly restarted Arnoldi iteration of ARPACK is used with a
    fixed start vector, so results are reproducible.

    @param maxiter: the iteration cap of ARPACK, default 10 · dim

    @raise NoConvergenceError: if ARPACK did not converge within maxiter

    @return: the eigenvalues as complex array, sorted by descending modulus
    @rtype: numpy.ndarray
    """
    dim = int(dim)
    k = int(k)
    if k < 1 or k > dim:
        raise DimensionMismatchError('number of eigenvalues', '1 ≤ k ≤ {}'.format(dim), k)

    if maxiter is None:
        maxiter = 10 * dim

    if dim <= dense_limit or k >= dim - 1:
        m = materialize(apply, dim)
        return _sort_by_modulus(scipy.linalg.eigvals(m))[:k]

    op = LinearOperator((dim, dim), matvec=apply, dtype=np.complex128)
    v0 = np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128)
    try:
        w = scipy.sparse.linalg.eigs(
            op, k=k, which='LM', v0=v0, tol=tol, maxiter=maxiter, return_eigenvectors=False)
    except ArpackNoConvergence as e:
        raise NoConvergenceError(
            'ARPACK', maxiter, converged=len(e.eigenvalues), wanted=k) from e

    return _sort_by_modulus(w)[:k]


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
