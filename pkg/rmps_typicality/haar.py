#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: Haar distributed unitaries and states and the site tensors of sequential generation.

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
from . import ISOMETRY_TOLERANCE
from .errors import DimensionMismatchError, InvalidSeedError
from .linalg import NormKind, as_cmatrix, norm

from .xlate import XLATOR

__version__ = '0.4.0'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)

_ = XLATOR.gettext

MAX_SEED = 2 ** 64

# Named channels keeping the ensembles drawn from one master seed apart
CHANNEL_RMPS = 1
CHANNEL_HAAR_STATE = 2
CHANNEL_PROBE = 3
CHANNEL_BOOTSTRAP = 4


# =============================================================================
def _check_seed_value(what, value):
    try:
        v = int(value)
    except (TypeError, ValueError):
        raise InvalidSeedError(what, value)
    if isinstance(value, float) and v != value:
        raise InvalidSeedError(what, value)
    if v < 0 or v >= MAX_SEED:
        raise InvalidSeedError(what, value)
    return v


# =============================================================================
class RngStream(object):
    """
    A reproducible random stream identified by a master seed and a stream index.

    The stream is a numpy PCG64 generator seeded by
    SeedSequence(entropy=master_seed, spawn_key=channel + (stream_index,)),
    so every (master_seed, channel, stream_index) triple gives the same draws on
    every machine, independent of the order in which streams are created, and
    distinct triples give statistically independent streams.
    """

    # -------------------------------------------------------------------------
    def __init__(self, master_seed, stream_index=0, channel=()):
        """Constructor."""
        self._master_seed = _check_seed_value('master seed', master_seed)
        self._stream_index = _check_seed_value('stream index', stream_index)
        self._channel = tuple(_check_seed_value('channel index', c) for c in channel)
        self._generator = None

    # -------------------------------------------------------------------------
    @property
    def master_seed(self):
        """The master seed of the whole campaign."""
        return self._master_seed

    # -------------------------------------------------------------------------
    @property
    def stream_index(self):
        """The index of this stream inside of its channel."""
        return self._stream_index

    # -------------------------------------------------------------------------
    @property
    def channel(self):
        """The channel path of this stream as a tuple of integers."""
        return self._channel

    # -------------------------------------------------------------------------
    @property
    def seed_sequence(self):
        """The numpy SeedSequence of this stream."""
        return np.random.SeedSequence(
            entropy=self.master_seed, spawn_key=self.channel + (self.stream_index,))

    # -------------------------------------------------------------------------
    @property
    def generator(self):
        """The numpy Generator of this stream, created at first access."""
        if self._generator is None:
            self._generator = np.random.default_rng(self.seed_sequence)
        return self._generator

    # -------------------------------------------------------------------------
    def spawn(self, index):
        """Return the child stream with the given index below this stream."""
        return self.__class__(
            self.master_seed, index, channel=self.channel + (self.stream_index,))

    # -------------------------------------------------------------------------
    def standard_complex_normal(self, shape):
        """Array of iid standard complex Gaussians with E|z|² = 1."""
        gen = self.generator
        re = gen.standard_normal(shape)
        im = gen.standard_normal(shape)
        return (re + 1j * im) / np.sqrt(2.0)

    # -------------------------------------------------------------------------
    def as_dict(self, short=True):
        """
        Transforms the elements of the object into a dict

        @return: structure as dict
        @rtype:  dict
        """
        res = {
            '__class_name__': self.__class__.__name__,
            'master_seed': self.master_seed,
            'stream_index': self.stream_index,
            'channel': list(self.channel),
        }
        if not short:
            res['generator_created'] = self._generator is not None
        return res

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "{c}(master_seed={m!r}, stream_index={i!r}, channel={ch!r})".format(
            c=self.__class__.__name__, m=self.master_seed, i=self.stream_index,
            ch=self.channel)

    # -------------------------------------------------------------------------
    def __getstate__(self):
        """Pickle only the identity of the stream, not its state."""
        return {
            'master_seed': self.master_seed,
            'stream_index': self.stream_index,
            'channel': self.channel,
        }

    # -------------------------------------------------------------------------
    def __setstate__(self, state):
        self._master_seed = state['master_seed']
        self._stream_index = state['stream_index']
        self._channel = tuple(state['channel'])
        self._generator = None


# =============================================================================
class SiteTensors(object):
    """
    The D matrices A^0 … A^(D-1) of size χ×χ defining one site of an MPS.

    The tensors are stored as one read-only complex array of shape (D, χ, χ).
    """

    # -------------------------------------------------------------------------
    def __init__(self, tensors):
        """Constructor."""
        arr = np.array(tensors, dtype=np.complex128)
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
            raise DimensionMismatchError('site tensors', '(D, chi, chi)', arr.shape)
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionMismatchError('site tensors', 'D ≥ 1 and chi ≥ 1', arr.shape)
        for i in range(arr.shape[0]):
            as_cmatrix(arr[i], 'site tensor A^{}'.format(i))
        arr.setflags(write=False)
        self._tensors = arr

    # -------------------------------------------------------------------------
    @classmethod
    def identity(cls, D, chi):
        """Site tensors of the identity unitary: A^0 = I_χ, all others 0."""
        arr = np.zeros((D, chi, chi), dtype=np.complex128)
        arr[0] = np.eye(chi)
        return cls(arr)

    # -------------------------------------------------------------------------
    @property
    def tensors(self):
        """The read-only array of shape (D, χ, χ)."""
        return self._tensors

    # -------------------------------------------------------------------------
    @property
    def D(self):
        """The physical dimension."""
        return self._tensors.shape[0]

    # -------------------------------------------------------------------------
    @property
    def chi(self):
        """The bond dimension χ."""
        return self._tensors.shape[1]

    # -------------------------------------------------------------------------
    def __len__(self):
        return self.D

    # -------------------------------------------------------------------------
    def __getitem__(self, index):
        """Return the matrix A^index."""
        return self._tensors[index]

    # -------------------------------------------------------------------------
    def __iter__(self):
        for i in range(self.D):
            yield self._tensors[i]

    # -------------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, SiteTensors):
            return False
        return self._tensors.shape == other._tensors.shape and bool(
            np.array_equal(self._tensors, other._tensors))

    # -------------------------------------------------------------------------
    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    # -------------------------------------------------------------------------
    def isometry_deviation(self):
        """Return max |Σᵢ A^i† A^i − I_χ|."""
        a = self._tensors
        gram = np.einsum('iab,iac->bc', a.conj(), a)
        return float(np.max(np.abs(gram - np.eye(self.chi))))

    # -------------------------------------------------------------------------
    def is_isometric(self, tolerance=ISOMETRY_TOLERANCE):
        """Whether Σᵢ A^i† A^i = I_χ holds within the tolerance."""
        return self.isometry_deviation() <= tolerance

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "<{c}(D={d}, chi={x})>".format(c=self.__class__.__name__, d=self.D, x=self.chi)


# =============================================================================
def _check_dimension(d, what='dimension'):
    try:
        v = int(d)
    except (TypeError, ValueError):
        raise DimensionMismatchError(what, 'an integer ≥ 1', d)
    if v < 1:
        raise DimensionMismatchError(what, 'an integer ≥ 1', d)
    return v


# =============================================================================
def _generator(rng):
    if isinstance(rng, RngStream):
        return rng
    if isinstance(rng, np.random.Generator):
        stream = RngStream(0)
        stream._generator = rng
        return stream
    msg = _("Object {!r} is neither a RngStream nor a numpy Generator.").format(rng)
    raise TypeError(msg)


# =============================================================================
def haar_unitary(d, rng):
    """
    Sample a d×d unitary from the Haar measure.

    A Ginibre matrix of iid standard complex Gaussians is QR decomposed and the
    columns of Q are multiplied with the phases r_jj/|r_jj| of the diagonal of R,
    which makes the distribution exactly Haar.
    """
    d = _check_dimension(d)
    stream = _generator(rng)
    z = stream.standard_complex_normal((d, d))
    q, r = scipy.linalg.qr(z)
    diag = np.diagonal(r)
    modulus = np.abs(diag)
    phases = np.where(modulus > 0, diag / np.where(modulus > 0, modulus, 1.0), 1.0)
    return q * phases[np.newaxis, :]


# =============================================================================
def haar_state(d, rng):
    """Sample a unit vector of ℂ^d from the unitarily invariant measure."""
    d = _check_dimension(d)
    stream = _generator(rng)
    v = stream.standard_complex_normal(d)
    return v / np.linalg.norm(v)


# =============================================================================
def random_hermitian(d, rng):
    """Random Hermitian d×d matrix (GUE type) normalized to unit Frobenius norm."""
    d = _check_dimension(d)
    stream = _generator(rng)
    g = stream.standard_complex_normal((d, d))
    h = (g + g.conj().T) / 2
    nrm = np.linalg.norm(h, 'fro')
    if nrm == 0.0:
        return np.eye(d, dtype=np.complex128) / np.sqrt(d)
    return h / nrm


# =============================================================================
def geodesic_perturbation(u, scale, rng):
    """
    Return U · exp(i · scale · H) with a random Hermitian H of unit Frobenius norm.

    The result stays exactly on the unitary group and lies at geodesic distance
    `scale` from U.
    """
    m = as_cmatrix(u, 'unitary')
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError('unitary', 'square matrix', m.shape)
    h = random_hermitian(m.shape[0], rng)
    return m @ scipy.linalg.expm(1j * float(scale) * h)


# =============================================================================
def extract_site_tensors(u, D, chi):
    """
    Extract the site tensors A^i_{αβ} = ⟨i,α|U|β,0⟩ from a χD×χD unitary.

    The joint basis of ancilla and physical site is flattened ancilla-major,
    flat index = α·D + i, so A^i_{αβ} = U[α·D + i, β·D].

    @raise DimensionMismatchError: if U is no unitary of size χD×χD
    """
    D = _check_dimension(D, 'physical dimension')
    chi = _check_dimension(chi, 'bond dimension')
    m = as_cmatrix(u, 'unitary')
    size = chi * D
    if m.shape != (size, size):
        raise DimensionMismatchError('unitary', (size, size), m.shape)
    deviation = norm(m.conj().T @ m - np.eye(size), NormKind.FROBENIUS)
    if deviation > ISOMETRY_TOLERANCE:
        raise DimensionMismatchError(
            'unitary', '‖U†U − I‖₂ ≤ {:.0e}'.format(ISOMETRY_TOLERANCE),
            '‖U†U − I‖₂ = {:.3e}'.format(deviation))

    # columns (β, 0), rows split into (α, i)
    cols = m[:, ::D]
    tensors = cols.reshape(chi, D, chi).transpose(1, 0, 2)
    return SiteTensors(tensors)


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
