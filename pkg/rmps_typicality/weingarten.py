#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: Exact Haar moments by Weingarten calculus and the exact average RMPS state.

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""
from __future__ import absolute_import

import itertools
import logging
import threading

# Third party modules
import numpy as np
import scipy.linalg

# Own modules
from . import DEFAULT_DENSE_OUTPUT_CAP, MAX_EXACT_AVERAGE_ORDER, MAX_WEINGARTEN_ORDER
from .errors import DimensionMismatchError, OrderTooLargeError
from .haar import RngStream
from .mps import BOUNDARY_OBC, dense_statevector, sample_rmps
from .stats import RunningMatrixStats

from .xlate import XLATOR, format_count

__version__ = '0.5.0'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)

_ = XLATOR.gettext


# =============================================================================
class Permutation(object):
    """A permutation of {0, …, N−1}, given by its images."""

    # -------------------------------------------------------------------------
    def __init__(self, images):
        """Constructor."""
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(len(imgs))):
            msg = _("The images {!r} do not define a permutation.").format(imgs)
            raise ValueError(msg)
        self._images = imgs

    # -------------------------------------------------------------------------
    @classmethod
    def identity(cls, n):
        """The identity permutation of n elements."""
        return cls(range(n))

    # -------------------------------------------------------------------------
    @classmethod
    def cycle(cls, n):
        """The cyclic shift k ↦ k + 1 mod n."""
        return cls([(k + 1) % n for k in range(n)])

    # -------------------------------------------------------------------------
    @property
    def images(self):
        """The tuple of images."""
        return self._images

    # -------------------------------------------------------------------------
    @property
    def order(self):
        """The number N of permuted elements."""
        return len(self._images)

    # -------------------------------------------------------------------------
    def __call__(self, k):
        return self._images[k]

    # -------------------------------------------------------------------------
    def __len__(self):
        return len(self._images)

    # -------------------------------------------------------------------------
    def compose(self, other):
        """The composition self ∘ other, i.e. k ↦ self(other(k))."""
        if other.order != self.order:
            raise DimensionMismatchError('permutation', self.order, other.order)
        return self.__class__(self._images[k] for k in other.images)

    # -------------------------------------------------------------------------
    def inverse(self):
        """The inverse permutation."""
        inv = [0] * self.order
        for k, img in enumerate(self._images):
            inv[img] = k
        return self.__class__(inv)

    # -------------------------------------------------------------------------
    def cycles(self):
        """The list of cycles, each a tuple starting with its smallest element."""
        seen = set()
        res = []
        for start in range(self.order):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self._images[k]
            res.append(tuple(cyc))
        return res

    # -------------------------------------------------------------------------
    def cycle_count(self):
        """The number of cycles (fixed points included)."""
        return len(self.cycles())

    # -------------------------------------------------------------------------
    def cycle_type(self):
        """The cycle lengths in descending order (the conjugacy class)."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    # -------------------------------------------------------------------------
    def is_identity(self):
        """Whether this is the identity permutation."""
        return all(k == img for k, img in enumerate(self._images))

    # -------------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return False
        return self._images == other._images

    # -------------------------------------------------------------------------
    def __ne__(self, other):
        return not self.__eq__(other)

    # -------------------------------------------------------------------------
    def __hash__(self):
        return hash(self._images)

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "{c}({i!r})".format(c=self.__class__.__name__, i=list(self._images))


# =============================================================================
def all_permutations(n):
    """All n! permutations of n elements in lexicographic order."""
    return [Permutation(p) for p in itertools.permutations(range(n))]


# =============================================================================
class WeingartenTable(object):
    """
    The Weingarten function Wg(·, d) of the symmetric group S_N.

    It is the (pseudo) inverse of the Gram matrix G_{σ,τ} = d^{#cycles(στ⁻¹)};
    the Moore-Penrose pseudo inverse is used, if d < N, where G is singular.
    """

    # -------------------------------------------------------------------------
    def __init__(self, n, d):
        """Constructor."""
        self._n = int(n)
        self._d = int(d)
        self._perms = all_permutations(self._n)
        self._index = {p: i for i, p in enumerate(self._perms)}

        size = len(self._perms)
        gram = np.empty((size, size), dtype=np.float64)
        for i, sigma in enumerate(self._perms):
            for j, tau in enumerate(self._perms):
                gram[i, j] = float(self._d) ** sigma.compose(tau.inverse()).cycle_count()
        self._gram = gram

        self._pseudo_inverse = self._d < self._n
        if self._pseudo_inverse:
            self._wg = scipy.linalg.pinvh(gram)
        else:
            self._wg = scipy.linalg.inv(gram)

        ident = self._index[Permutation.identity(self._n)]
        self._by_cycle_type = {}
        for i, sigma in enumerate(self._perms):
            self._by_cycle_type.setdefault(sigma.cycle_type(), float(self._wg[i, ident]))

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """The moment order N."""
        return self._n

    # -------------------------------------------------------------------------
    @property
    def d(self):
        """The dimension of the unitary group."""
        return self._d

    # -------------------------------------------------------------------------
    @property
    def pseudo_inverse(self):
        """Whether the Gram matrix was singular (d < N) and pseudo inverted."""
        return self._pseudo_inverse

    # -------------------------------------------------------------------------
    @property
    def permutations(self):
        """All permutations of S_N in table order."""
        return list(self._perms)

    # -------------------------------------------------------------------------
    @property
    def gram(self):
        """The Gram matrix (a copy)."""
        return self._gram.copy()

    # -------------------------------------------------------------------------
    @property
    def matrix(self):
        """The matrix Wg(στ⁻¹) over S_N × S_N (a copy)."""
        return self._wg.copy()

    # -------------------------------------------------------------------------
    @property
    def values(self):
        """The map from cycle type to the value of the Weingarten function."""
        return dict(self._by_cycle_type)

    # -------------------------------------------------------------------------
    def value(self, perm):
        """Wg(perm, d)."""
        if not isinstance(perm, Permutation):
            perm = Permutation(perm)
        if perm.order != self._n:
            raise DimensionMismatchError('permutation', self._n, perm.order)
        return self._by_cycle_type[perm.cycle_type()]

    # -------------------------------------------------------------------------
    def gram_residual(self):
        """max |G·Wg − P| with P the orthogonal projector onto the range of G."""
        prod = self._gram @ self._wg
        if self._pseudo_inverse:
            proj = self._gram @ scipy.linalg.pinvh(self._gram)
        else:
            proj = np.eye(self._gram.shape[0])
        return float(np.max(np.abs(prod - proj)))

    # -------------------------------------------------------------------------
    def as_dict(self, short=True):
        """
        Transforms the elements of the object into a dict

        @return: structure as dict
        @rtype:  dict
        """
        res = {
            '__class_name__': self.__class__.__name__,
            'n': self.n,
            'd': self.d,
            'pseudo_inverse': self.pseudo_inverse,
            'values': {str(list(k)): v for k, v in self._by_cycle_type.items()},
        }
        if not short:
            res['gram_residual'] = self.gram_residual()
        return res

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "<{c}(n={n}, d={d}, pseudo_inverse={p!r})>".format(
            c=self.__class__.__name__, n=self.n, d=self.d, p=self.pseudo_inverse)


_TABLE_CACHE = {}
_TABLE_LOCK = threading.Lock()


# =============================================================================
def weingarten_function(n, d):
    """
    Return the (cached) WeingartenTable of order n and dimension d.

    @raise OrderTooLargeError: for n > 6
    """
    n = int(n)
    d = int(d)
    if n > MAX_WEINGARTEN_ORDER:
        raise OrderTooLargeError('moment order', n, MAX_WEINGARTEN_ORDER)
    if n < 1:
        raise DimensionMismatchError('moment order', '≥ 1', n)
    if d < 1:
        raise DimensionMismatchError('dimension', '≥ 1', d)

    key = (n, d)
    with _TABLE_LOCK:
        table = _TABLE_CACHE.get(key)
        if table is None:
            LOG.debug("Building Weingarten table for N={n}, d={d}.".format(n=n, d=d))
            table = WeingartenTable(n, d)
            _TABLE_CACHE[key] = table
    return table


# =============================================================================
def _matching_permutations(left, right, perms):
    """All σ with left[k] == right[σ(k)] for every k."""
    return [p for p in perms if all(left[k] == right[p(k)] for k in range(len(left)))]


# =============================================================================
def haar_moment(d, row_indices, col_indices):
    """
    E[U_{a₁b₁} ⋯ U_{a_N b_N} · conj(U_{c₁e₁} ⋯ U_{c_N e_N})] over the Haar measure of U(d).

    row_indices = (a₁ … a_N, c₁ … c_N), col_indices = (b₁ … b_N, e₁ … e_N), and

        Σ_{σ,τ} Π_k δ(a_k, c_σ(k)) δ(b_k, e_τ(k)) · Wg(τσ⁻¹, d)
    """
    rows = tuple(int(i) for i in row_indices)
    cols = tuple(int(i) for i in col_indices)
    if len(rows) != len(cols) or len(rows) % 2:
        raise DimensionMismatchError('moment indices', 'two tuples of equal even length',
                                     (len(rows), len(cols)))
    n = len(rows) // 2
    table = weingarten_function(n, d)
    a, c = rows[:n], rows[n:]
    b, e = cols[:n], cols[n:]
    perms = table.permutations

    sigmas = _matching_permutations(a, c, perms)
    if not sigmas:
        return 0j
    taus = _matching_permutations(b, e, perms)

    total = 0.0
    for sigma in sigmas:
        sigma_inv = sigma.inverse()
        for tau in taus:
            total += table.value(tau.compose(sigma_inv))
    return complex(total)


# =============================================================================
def _check_dense_output(n, D, cap=DEFAULT_DENSE_OUTPUT_CAP):
    if D ** n > cap:
        raise OrderTooLargeError('dense output dimension', D ** n, cap)


# =============================================================================
def _boundary(vec, chi):
    if vec is None:
        v = np.zeros(chi, dtype=np.complex128)
        v[0] = 1.0
        return v
    v = np.asarray(vec, dtype=np.complex128).reshape(-1)
    if v.shape[0] != chi:
        raise DimensionMismatchError('boundary vector', chi, v.shape[0])
    return v / np.linalg.norm(v)


# =============================================================================
def _ancilla_factor(sigma, tau, chi, phi_i, phi_f):
    """
    Sum over all ancilla indices of the boundary weights of one delta network.

    The nodes are α₀ … α_N (ket) and β₀ … β_N (bra); copy k of U ties
    α_{k+1} = β_{σ(k)+1} and α_k = β_{τ(k)}. Every connected component
    contributes Σ_x Π_{weighted nodes} w(x), unweighted components contribute χ.
    """
    n = sigma.order
    size = 2 * (n + 1)
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    beta = n + 1
    for k in range(n):
        union(k + 1, beta + sigma(k) + 1)
        union(k, beta + tau(k))

    weights = {
        0: phi_i,
        n: phi_f.conj(),
        beta: phi_i.conj(),
        beta + n: phi_f,
    }

    components = {}
    for node in range(size):
        components.setdefault(find(node), []).append(node)

    factor = 1.0 + 0j
    for nodes in components.values():
        w = np.ones(chi, dtype=np.complex128)
        for node in nodes:
            if node in weights:
                w = w * weights[node]
        factor *= complex(np.sum(w))
        if factor == 0:
            break
    return factor


# =============================================================================
def _permutation_matrix(sigma, D):
    """(P_σ)_{ij} = Π_k δ(i_k, j_σ(k)), multi-indices with site 1 most significant."""
    n = sigma.order
    dim = D ** n
    p = np.zeros((dim, dim), dtype=np.float64)
    sigma_inv = sigma.inverse()
    for row, digits in enumerate(itertools.product(range(D), repeat=n)):
        col_digits = [digits[sigma_inv(m)] for m in range(n)]
        col = 0
        for digit in col_digits:
            col = col * D + digit
        p[row, col] = 1.0
    return p


# =============================================================================
def average_state_exact(n, D, chi, phi_i=None, phi_f=None):
    """
    The exact ensemble average E|ψ⟩⟨ψ| of unnormalized homogeneous OBC RMPS.

    Every pair (σ, τ) ∈ S_N × S_N of the Weingarten sum for U^{⊗N} ⊗ Ū^{⊗N}
    splits into a physical part, the permutation matrix P_σ, and an ancilla
    part, a network of Kronecker deltas closed by the boundary vectors. So

        ρ̄ = Σ_σ c_σ P_σ,    c_σ = Σ_τ Wg(τσ⁻¹, χD) · A(σ, τ)

    and the χD-dimensional moment matrix is never built.

    @raise OrderTooLargeError: for N > 4 or D^N > 256

    @return: the average matrix and its trace E⟨ψ|ψ⟩
    @rtype: tuple
    """
    n = int(n)
    if n > MAX_EXACT_AVERAGE_ORDER:
        raise OrderTooLargeError('order of the exact average', n, MAX_EXACT_AVERAGE_ORDER)
    _check_dense_output(n, D)
    phi_i = _boundary(phi_i, chi)
    phi_f = _boundary(phi_f, chi)

    table = weingarten_function(n, chi * D)
    perms = table.permutations
    dim = D ** n
    rho = np.zeros((dim, dim), dtype=np.complex128)
    trace = 0j

    for sigma in perms:
        sigma_inv = sigma.inverse()
        coeff = 0j
        for tau in perms:
            wg = table.value(tau.compose(sigma_inv))
            if wg == 0.0:
                continue
            coeff += wg * _ancilla_factor(sigma, tau, chi, phi_i, phi_f)
        if coeff == 0:
            continue
        rho += coeff * _permutation_matrix(sigma, D)
        trace += coeff * float(D) ** sigma.cycle_count()

    return rho, float(trace.real)


# =============================================================================
def average_state_moment_sum(n, D, chi, phi_i=None, phi_f=None):
    """
    The exact average state by brute force: every amplitude product is expanded
    into Haar moments of the single χD×χD unitary and summed over all ancilla
    index assignments. Cross-check of average_state_exact for N ≤ 2.
    """
    n = int(n)
    if n > 2:
        raise OrderTooLargeError('order of the brute force moment sum', n, 2)
    _check_dense_output(n, D)
    phi_i = _boundary(phi_i, chi)
    phi_f = _boundary(phi_f, chi)
    d = chi * D

    multi = list(itertools.product(range(D), repeat=n))
    anc = list(itertools.product(range(chi), repeat=n + 1))
    dim = D ** n
    rho = np.zeros((dim, dim), dtype=np.complex128)

    for r, i_idx in enumerate(multi):
        for c, j_idx in enumerate(multi):
            total = 0j
            for alpha in anc:
                for beta in anc:
                    w = (phi_f[alpha[n]].conj() * phi_i[alpha[0]]
                         * phi_f[beta[n]] * phi_i[beta[0]].conj())
                    if w == 0:
                        continue
                    rows = [alpha[k + 1] * D + i_idx[k] for k in range(n)]
                    rows += [beta[k + 1] * D + j_idx[k] for k in range(n)]
                    cols = [alpha[k] * D for k in range(n)]
                    cols += [beta[k] * D for k in range(n)]
                    total += w * haar_moment(d, rows, cols)
            rho[r, c] = total
    return rho


# =============================================================================
def average_state_mc(
        n, D, chi, boundary=BOUNDARY_OBC, samples=1000, rng=None, normalize=True,
        phi_i=None, phi_f=None, homogeneous=True):
    """
    Monte-Carlo estimate of the average state E|ψ⟩⟨ψ| of the RMPS ensemble.

    Sample s is drawn from the child stream rng.spawn(s) and accumulated in
    sample order, so the result does not depend on the evaluation order. With
    normalize=False the raw projectors of the unnormalized states are averaged,
    which is the quantity average_state_exact evaluates.

    @return: the entrywise mean and its entrywise standard errors
    @rtype: tuple
    """
    _check_dense_output(n, D)
    if rng is None:
        rng = RngStream(0)
    samples = int(samples)
    if samples < 1:
        raise DimensionMismatchError('number of samples', '≥ 1', samples)

    acc = RunningMatrixStats()
    for s in range(samples):
        mps = sample_rmps(
            n, D, chi, boundary=boundary, homogeneous=homogeneous, rng=rng.spawn(s),
            phi_i=phi_i, phi_f=phi_f, normalize=normalize)
        psi = dense_statevector(mps)
        acc.push(np.outer(psi, psi.conj()))

    LOG.debug(_("Averaged {} sampled projectors.").format(format_count(samples)))
    return acc.mean, acc.stderr


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
