#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: a module for all error (exception) classes used in this package

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""

from .xlate import XLATOR, format_list

__version__ = '0.6.0'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

_ = XLATOR.gettext


# =============================================================================
class RmpsTypicalityError(Exception):
    """Base error class for all exceptions in this package."""

    pass


# =============================================================================
class NumericalError(RmpsTypicalityError):
    """Base class for all numerical failures (exit code 3 of the application)."""

    pass


# =============================================================================
class StatsError(RmpsTypicalityError):
    """Base error class for all exceptions the statistics module."""

    pass


# =============================================================================
class WrongStatsAttributeError(StatsError, AttributeError):
    """Error class for a wrong attribute in a statistics record."""

    # -------------------------------------------------------------------------
    def __init__(self, attribute, class_name):
        """Initialise a WrongStatsAttributeError exception."""
        self.attribute = attribute
        self.class_name = class_name
        super(WrongStatsAttributeError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("Invalid attribute {attr!r} for a {w} object.")
        return msg.format(attr=self.attribute, w=self.class_name)


# =============================================================================
class WrongStatsValueError(StatsError, ValueError):
    """Error class for a wrong value for a statistics record."""

    pass


# =============================================================================
class WrongStatsKeyError(StatsError, KeyError):
    """Error class for a wrong key for a statistics record."""

    # -------------------------------------------------------------------------
    def __init__(self, key, obj_type='BaseStats'):
        """Initialise a WrongStatsKeyError exception."""
        self.key = key
        self.obj_type = obj_type
        super(WrongStatsKeyError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("Invalid key {k!r} for a {w} object.")
        return msg.format(k=self.key, w=self.obj_type)


# =============================================================================
class LinalgError(RmpsTypicalityError):
    """Base error class for all exceptions of the linalg module."""

    pass


# =============================================================================
class NonFiniteMatrixError(LinalgError, ValueError):
    """Error class for matrices with NaN or infinite entries."""

    # -------------------------------------------------------------------------
    def __init__(self, shape, what='matrix'):
        """Initialise a NonFiniteMatrixError exception."""
        self.shape = tuple(shape)
        self.what = what
        super(NonFiniteMatrixError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("The {w} of shape {s} contains non finite entries (NaN or Inf).")
        return msg.format(w=self.what, s=self.shape)


# =============================================================================
class NotHermitianError(LinalgError, NumericalError, ValueError):
    """Error class for a matrix, which is not Hermitian within the tolerance."""

    # -------------------------------------------------------------------------
    def __init__(self, deviation, tolerance):
        """Initialise a NotHermitianError exception."""
        self.deviation = deviation
        self.tolerance = tolerance
        super(NotHermitianError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("Matrix is not Hermitian: max. |A - A^H| = {d:.3e} exceeds tolerance {t:.1e}.")
        return msg.format(d=self.deviation, t=self.tolerance)


# =============================================================================
class NoConvergenceError(LinalgError, NumericalError, ArithmeticError):
    """Error class for an iterative eigensolver, which did not converge."""

    # -------------------------------------------------------------------------
    def __init__(self, what, iterations, converged=0, wanted=None):
        """Initialise a NoConvergenceError exception."""
        self.what = what
        self.iterations = iterations
        self.converged = converged
        self.wanted = wanted
        super(NoConvergenceError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        if self.wanted is not None:
            msg = _(
                "{w} did not converge after {i} iterations ({c} of {k} eigenvalues "
                "converged).")
        else:
            msg = _("{w} did not converge after {i} iterations.")
        return msg.format(w=self.what, i=self.iterations, c=self.converged, k=self.wanted)


# =============================================================================
class SamplingError(RmpsTypicalityError):
    """Base error class for all exceptions of the haar module."""

    pass


# =============================================================================
class InvalidSeedError(SamplingError, ValueError):
    """Error class for a master seed or stream index outside of the valid range."""

    # -------------------------------------------------------------------------
    def __init__(self, what, value):
        """Initialise a InvalidSeedError exception."""
        self.what = what
        self.value = value
        super(InvalidSeedError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("Invalid {w} {v!r}, must be an integer in [0, 2^64).")
        return msg.format(w=self.what, v=self.value)


# =============================================================================
class DimensionMismatchError(RmpsTypicalityError, ValueError):
    """Error class for operands with inconsistent dimensions."""

    # -------------------------------------------------------------------------
    def __init__(self, what, expected, got):
        """Initialise a DimensionMismatchError exception."""
        self.what = what
        self.expected = expected
        self.got = got
        super(DimensionMismatchError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("Dimension mismatch of {w}: expected {e}, got {g}.")
        return msg.format(w=self.what, e=self.expected, g=self.got)


# =============================================================================
class MpsError(RmpsTypicalityError):
    """Base error class for all exceptions of the mps module."""

    pass


# =============================================================================
class ChiTooLargeForPBCError(MpsError, ValueError):
    """Error class for a periodic MPS with a bond dimension beyond the dense limit."""

    # -------------------------------------------------------------------------
    def __init__(self, chi, limit):
        """Initialise a ChiTooLargeForPBCError exception."""
        self.chi = chi
        self.limit = limit
        super(ChiTooLargeForPBCError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _(
            "Periodic boundary conditions need a dense transfer matrix, but the bond "
            "dimension {c} exceeds the dense limit {l}.")
        return msg.format(c=self.chi, l=self.limit)


# =============================================================================
class WindowTooLargeError(MpsError, ValueError):
    """Error class for an invalid or too large window of sites."""

    # -------------------------------------------------------------------------
    def __init__(self, window_start, length, nr_sites, max_length=None):
        """Initialise a WindowTooLargeError exception."""
        self.window_start = window_start
        self.length = length
        self.nr_sites = nr_sites
        self.max_length = max_length
        super(WindowTooLargeError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        if self.max_length is not None and self.length > self.max_length:
            msg = _("Window length {l} exceeds the maximum window length {m}.")
        else:
            msg = _(
                "Window of length {l} starting at site {s} does not fit into a chain "
                "of {n} sites.")
        return msg.format(
            l=self.length, m=self.max_length, s=self.window_start, n=self.nr_sites)


# =============================================================================
class StateTooLargeError(MpsError, ValueError):
    """Error class for a dense state vector beyond the configured size cap."""

    # -------------------------------------------------------------------------
    def __init__(self, size, cap):
        """Initialise a StateTooLargeError exception."""
        self.size = size
        self.cap = cap
        super(StateTooLargeError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("Dense state of dimension {s} exceeds the cap of {c} amplitudes.")
        return msg.format(s=self.size, c=self.cap)


# =============================================================================
class NotNormalizableError(MpsError, NumericalError, ArithmeticError):
    """Error class for an MPS with vanishing norm."""

    # -------------------------------------------------------------------------
    def __init__(self, norm_squared):
        """Initialise a NotNormalizableError exception."""
        self.norm_squared = norm_squared
        super(NotNormalizableError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("The MPS cannot be normalized, its squared norm is {n:.3e}.")
        return msg.format(n=self.norm_squared)


# =============================================================================
class WeingartenError(RmpsTypicalityError):
    """Base error class for all exceptions of the weingarten module."""

    pass


# =============================================================================
class OrderTooLargeError(WeingartenError, ValueError):
    """Error class for a moment order or dense output beyond the supported caps."""

    # -------------------------------------------------------------------------
    def __init__(self, what, value, cap):
        """Initialise a OrderTooLargeError exception."""
        self.what = what
        self.value = value
        self.cap = cap
        super(OrderTooLargeError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("The {w} {v} exceeds the supported maximum of {c}.")
        return msg.format(w=self.what, v=self.value, c=self.cap)


# =============================================================================
class EnsembleError(RmpsTypicalityError):
    """Base error class for all exceptions of the ensemble module."""

    pass


# =============================================================================
class DegeneratePairError(EnsembleError, NumericalError, ArithmeticError):
    """Error class for a probe pair of (numerically) identical unitaries."""

    # -------------------------------------------------------------------------
    def __init__(self, distance, threshold):
        """Initialise a DegeneratePairError exception."""
        self.distance = distance
        self.threshold = threshold
        super(DegeneratePairError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("Degenerate probe pair: ||U1 - U2||_2 = {d:.3e} is below {t:.1e}.")
        return msg.format(d=self.distance, t=self.threshold)


# =============================================================================
class InsufficientTailError(EnsembleError, NumericalError, ArithmeticError):
    """Error class for a tail table without enough events for a fit."""

    # -------------------------------------------------------------------------
    def __init__(self, usable_points, needed=2):
        """Initialise a InsufficientTailError exception."""
        self.usable_points = usable_points
        self.needed = needed
        super(InsufficientTailError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _(
            "Not enough tail events for a concentration fit: {u} usable points, "
            "at least {n} needed.")
        return msg.format(u=self.usable_points, n=self.needed)


# =============================================================================
class NotDensityMatrixError(EnsembleError, ValueError):
    """Error class for a matrix violating the density matrix axioms."""

    # -------------------------------------------------------------------------
    def __init__(self, reason, what='matrix'):
        """Initialise a NotDensityMatrixError exception."""
        self.reason = reason
        self.what = what
        super(NotDensityMatrixError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        msg = _("The {w} is not a density matrix: {r}")
        return msg.format(w=self.what, r=self.reason)


# =============================================================================
class ConfigError(RmpsTypicalityError):
    """Base error class for all configuration errors (exit code 2 of the application)."""

    pass


# =============================================================================
class UnknownConfigKeyError(ConfigError, KeyError):
    """Error class for an unknown key in a campaign configuration."""

    # -------------------------------------------------------------------------
    def __init__(self, key, valid_keys=None):
        """Initialise a UnknownConfigKeyError exception."""
        self.key = key
        self.valid_keys = valid_keys
        super(UnknownConfigKeyError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        if self.valid_keys:
            msg = _("Unknown configuration key {k!r}, valid keys are: {v}.")
            return msg.format(k=self.key, v=format_list(sorted(self.valid_keys), do_repr=True))
        msg = _("Unknown configuration key {k!r}.")
        return msg.format(k=self.key)


# =============================================================================
class InvalidConfigValueError(ConfigError, ValueError):
    """Error class for an invalid value of a configuration key."""

    # -------------------------------------------------------------------------
    def __init__(self, key, value, reason=None):
        """Initialise a InvalidConfigValueError exception."""
        self.key = key
        self.value = value
        self.reason = reason
        super(InvalidConfigValueError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        if self.reason:
            msg = _("Invalid value {v!r} for configuration key {k!r}: {r}")
        else:
            msg = _("Invalid value {v!r} for configuration key {k!r}.")
        return msg.format(k=self.key, v=self.value, r=self.reason)


# =============================================================================
class UnknownExperimentError(ConfigError, KeyError):
    """Error class for the name of an experiment, which is not in the catalog."""

    # -------------------------------------------------------------------------
    def __init__(self, name, known=None):
        """Initialise a UnknownExperimentError exception."""
        self.name = name
        self.known = known
        super(UnknownExperimentError, self).__init__()

    # -------------------------------------------------------------------------
    def __str__(self):
        """Typecast into str."""
        if self.known:
            msg = _("Unknown experiment {n!r}, known experiments are: {k}.")
            return msg.format(n=self.name, k=format_list(self.known, do_repr=True))
        msg = _("Unknown experiment {n!r}.")
        return msg.format(n=self.name)


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
