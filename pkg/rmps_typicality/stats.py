#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: A module for statistic objects and streaming accumulators.

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""
from __future__ import absolute_import

import copy
import logging
import math

try:
    from collections.abc import MutableMapping, Mapping
except ImportError:
    from collections import MutableMapping, Mapping

# Third party modules
import numpy as np

# Own modules
from .errors import StatsError, WrongStatsKeyError
from .errors import WrongStatsAttributeError, WrongStatsValueError

from .xlate import XLATOR

__version__ = '0.9.1'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)
_ = XLATOR.gettext


# =============================================================================
class BaseStats(MutableMapping):
    """A base class for encapsulating a fixed set of float valued statistics."""

    valid_keys = ('value_one', 'value_two')
    nonnegative_keys = ()

    # -------------------------------------------------------------------------
    def __init__(self, first_param=None, **kwargs):
        """Constructor."""

        self._values = {}

        if first_param is not None:

            if isinstance(first_param, Mapping):
                self._update_from_mapping(first_param)
            elif first_param.__class__.__name__ == 'zip':
                self._update_from_mapping(dict(first_param))
            else:
                msg = _("Object is not a {m} object, but a {w} object instead.").format(
                    m='Mapping', w=first_param.__class__.__qualname__)
                raise StatsError(msg)

        if kwargs:
            self._update_from_mapping(kwargs)

    # -------------------------------------------------------------------------
    def __getattr__(self, name):
        """Getting the value of a non-pre-defined attribute, epecially the statistics
        values."""
        if name.startswith('__'):
            raise AttributeError(name)
        if name not in self.valid_keys:
            raise WrongStatsAttributeError(name, self.__class__.__name__)

        if name not in self._values:
            self._values[name] = 0.0

        return self._values[name]

    # -------------------------------------------------------------------------
    def __setattr__(self, name, value):
        """Called when an attribute assignment is attempted."""
        if name in ('_values', ):
            return super(BaseStats, self).__setattr__(name, value)

        if name not in self.valid_keys:
            raise WrongStatsAttributeError(name, self.__class__.__name__)

        try:
            v = float(value)
        except (TypeError, ValueError) as e:
            msg = _("Wrong value {v!r} for a {w} value: {e}").format(
                v=value, w=self.__class__.__name__, e=e)
            raise WrongStatsValueError(msg)

        if name in self.nonnegative_keys and v < 0:
            msg = _("Wrong value {v!r} for a {w} value: must be >= 0").format(
                v=value, w=self.__class__.__name__)
            raise WrongStatsValueError(msg)

        self._values[name] = v

    # -------------------------------------------------------------------------
    def __delattr__(self, name):
        """Called, if an attribute should be deleted."""
        msg = _("Deleting attribute {a!r} of a {w} is not allowed.").format(
            a=name, w=self.__class__.__name__)
        raise StatsError(msg)

    # -------------------------------------------------------------------------
    def _update_from_mapping(self, mapping):

        for key in mapping.keys():
            if isinstance(key, int) and key >= 0 and key < len(self.valid_keys):
                key = self.valid_keys[key]
            if key not in self.valid_keys:
                raise WrongStatsKeyError(key, self.__class__.__name__)
            setattr(self, key, mapping[key])

    # -----------------------------------------------------------
    def as_dict(self, pure=False):
        """Transforms the elements of the object into a dict."""

        res = {}
        if not pure:
            res['__class_name__'] = self.__class__.__name__

        for key in self.valid_keys:
            res[key] = getattr(self, key)

        return res

    # -------------------------------------------------------------------------
    def dict(self):
        """Typecast into a regular dict."""
        return self.as_dict(pure=True)

    # -----------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        kargs = []
        for pair in self.items():
            kargs.append("{k}={v!r}".format(k=pair[0], v=pair[1]))
        return "{c}({a})".format(c=self.__class__.__name__, a=', '.join(kargs))

    # -------------------------------------------------------------------------
    def __copy__(self):
        """Return a copy of the current set."""
        return self.__class__(self.dict())

    # -------------------------------------------------------------------------
    def copy(self):
        """Return a copy of the current set."""
        return self.__copy__()

    # -------------------------------------------------------------------------
    def _get_item(self, key):
        """Return an arbitrary item by the key."""
        if isinstance(key, int) and key >= 0 and key < len(self.valid_keys):
            key = self.valid_keys[key]
        if key not in self.valid_keys:
            raise WrongStatsKeyError(key, self.__class__.__name__)

        return getattr(self, key)

    # -------------------------------------------------------------------------
    def get(self, key):
        """Return an arbitrary item by the key."""
        return self._get_item(key)

    # -------------------------------------------------------------------------
    # The next four methods are requirements of the ABC.

    # -------------------------------------------------------------------------
    def __getitem__(self, key):
        """Return an arbitrary item by the key."""
        return self._get_item(key)

    # -------------------------------------------------------------------------
    def __iter__(self):
        """Return an iterator over all keys."""
        for key in self.keys():
            yield key

    # -------------------------------------------------------------------------
    def __len__(self):
        """Return the the nuber of entries (keys) in this dict."""
        return len(self.valid_keys)

    # -------------------------------------------------------------------------
    def __contains__(self, key):
        """Return, whether the given key exists(the 'in'-operator)."""
        if isinstance(key, int) and key >= 0 and key < len(self.valid_keys):
            return True
        return key in self.valid_keys

    # -------------------------------------------------------------------------
    def keys(self):
        """Return a list with all keys in original notation."""
        return copy.copy(self.valid_keys)

    # -------------------------------------------------------------------------
    def items(self):
        """Return a list of all items of the current dict.

        An item is a tuple, with the key in original notation and the value.
        """
        return [(key, self.get(key)) for key in self.keys()]

    # -------------------------------------------------------------------------
    def values(self):
        """Return a list with all values of the current dict."""
        return [self.get(key) for key in self.keys()]

    # -------------------------------------------------------------------------
    def __setitem__(self, key, value):
        """Set the value of the given key."""
        if isinstance(key, int) and key >= 0 and key < len(self.valid_keys):
            key = self.valid_keys[key]
        if key not in self.valid_keys:
            raise WrongStatsKeyError(key, self.__class__.__name__)

        setattr(self, key, value)

    # -------------------------------------------------------------------------
    def __delitem__(self, key):
        """Should delete the entry on the given key.
        But in real the value if this key set to zero instead."""
        if isinstance(key, int) and key >= 0 and key < len(self.valid_keys):
            key = self.valid_keys[key]
        if key not in self.valid_keys:
            raise WrongStatsKeyError(key, self.__class__.__name__)

        setattr(self, key, 0.0)

    # -------------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, self.__class__):
            return False

        return self.dict() == other.dict()


# =============================================================================
class ScalarSummary(BaseStats):
    """The summary of a stream of real numbers."""

    valid_keys = ('count', 'mean', 'variance', 'stderr', 'minimum', 'maximum')
    nonnegative_keys = ('count', 'variance', 'stderr')


# =============================================================================
class RunningStats(object):
    """
    Streaming mean and variance of real numbers (Welford's algorithm).

    The sample variance uses the unbiased 1/(n−1) normalization. Values have to
    be pushed in a fixed order to get bit-identical results.
    """

    # -------------------------------------------------------------------------
    def __init__(self, values=None):
        """Constructor."""
        self.reset()
        if values is not None:
            self.extend(values)

    # -------------------------------------------------------------------------
    def reset(self):
        """Forget all values."""
        self._count = 0
        self._mean = 0.0
        self._m2 = 0.0
        self._min = None
        self._max = None

    # -------------------------------------------------------------------------
    def push(self, value):
        """Add one value."""
        x = float(value)
        self._count += 1
        delta = x - self._mean
        self._mean += delta / self._count
        self._m2 += delta * (x - self._mean)
        if self._min is None or x < self._min:
            self._min = x
        if self._max is None or x > self._max:
            self._max = x

    # -------------------------------------------------------------------------
    def extend(self, values):
        """Add all values of the given iterable in order."""
        for value in values:
            self.push(value)

    # -------------------------------------------------------------------------
    @property
    def count(self):
        """The number of values."""
        return self._count

    # -------------------------------------------------------------------------
    @property
    def mean(self):
        """The arithmetic mean, 0 without values."""
        return self._mean

    # -------------------------------------------------------------------------
    @property
    def variance(self):
        """The unbiased sample variance, 0 with less than two values."""
        if self._count < 2:
            return 0.0
        return max(self._m2 / (self._count - 1), 0.0)

    # -------------------------------------------------------------------------
    @property
    def stderr(self):
        """The standard error √(variance/n) of the mean."""
        if self._count < 2:
            return 0.0
        return math.sqrt(self.variance / self._count)

    # -------------------------------------------------------------------------
    def summary(self):
        """Return the current state as ScalarSummary."""
        return ScalarSummary(
            count=self.count, mean=self.mean, variance=self.variance, stderr=self.stderr,
            minimum=self._min if self._min is not None else 0.0,
            maximum=self._max if self._max is not None else 0.0)

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "<{c}(count={n}, mean={m!r}, variance={v!r})>".format(
            c=self.__class__.__name__, n=self.count, m=self.mean, v=self.variance)


# =============================================================================
class RunningMatrixStats(object):
    """
    Entrywise streaming mean and variance of complex matrices (Welford's algorithm).

    The variance of a complex entry is E|x − μ|², so the standard error of the
    mean entry is √(variance/n).
    """

    # -------------------------------------------------------------------------
    def __init__(self, shape=None):
        """Constructor."""
        self._shape = None if shape is None else tuple(shape)
        self.reset()

    # -------------------------------------------------------------------------
    def reset(self):
        """Forget all matrices."""
        self._count = 0
        self._mean = None
        self._m2 = None
        if self._shape is not None:
            self._mean = np.zeros(self._shape, dtype=np.complex128)
            self._m2 = np.zeros(self._shape, dtype=np.float64)

    # -------------------------------------------------------------------------
    def push(self, matrix):
        """Add one matrix."""
        x = np.asarray(matrix, dtype=np.complex128)
        if self._mean is None:
            self._shape = x.shape
            self._mean = np.zeros(x.shape, dtype=np.complex128)
            self._m2 = np.zeros(x.shape, dtype=np.float64)
        elif x.shape != self._shape:
            msg = _("Wrong shape {g} of a matrix, expected {e}.").format(g=x.shape, e=self._shape)
            raise WrongStatsValueError(msg)

        self._count += 1
        delta = x - self._mean
        self._mean += delta / self._count
        self._m2 += (delta.conj() * (x - self._mean)).real

    # -------------------------------------------------------------------------
    @property
    def count(self):
        """The number of matrices."""
        return self._count

    # -------------------------------------------------------------------------
    @property
    def shape(self):
        """The shape of the matrices."""
        return self._shape

    # -------------------------------------------------------------------------
    @property
    def mean(self):
        """The entrywise mean (a copy)."""
        if self._mean is None:
            return None
        return self._mean.copy()

    # -------------------------------------------------------------------------
    @property
    def variance(self):
        """The entrywise unbiased variance E|x − μ|²."""
        if self._m2 is None:
            return None
        if self._count < 2:
            return np.zeros(self._shape)
        return np.maximum(self._m2 / (self._count - 1), 0.0)

    # -------------------------------------------------------------------------
    @property
    def stderr(self):
        """The entrywise standard error of the mean."""
        var = self.variance
        if var is None:
            return None
        if self._count < 2:
            return var
        return np.sqrt(var / self._count)

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        return "<{c}(count={n}, shape={s!r})>".format(
            c=self.__class__.__name__, n=self.count, s=self._shape)


# =============================================================================
class TailCounter(object):
    """Counts of the events |deviation| ≥ ε for every ε of a fixed grid."""

    # -------------------------------------------------------------------------
    def __init__(self, epsilons):
        """Constructor."""
        eps = [float(e) for e in epsilons]
        if not eps:
            raise WrongStatsValueError(_("The grid of tail thresholds must not be empty."))
        for e in eps:
            if e < 0 or not math.isfinite(e):
                msg = _("Invalid tail threshold {!r}, must be a finite number >= 0.").format(e)
                raise WrongStatsValueError(msg)
        self._epsilons = np.array(eps, dtype=np.float64)
        self._counts = np.zeros(len(eps), dtype=np.int64)
        self._total = 0

    # -------------------------------------------------------------------------
    @property
    def epsilons(self):
        """The thresholds (a copy)."""
        return self._epsilons.copy()

    # -------------------------------------------------------------------------
    @property
    def counts(self):
        """The number of events per threshold (a copy)."""
        return self._counts.copy()

    # -------------------------------------------------------------------------
    @property
    def total(self):
        """The number of deviations seen."""
        return self._total

    # -------------------------------------------------------------------------
    def push(self, deviation):
        """Count one deviation."""
        d = abs(float(deviation))
        self._counts += (d >= self._epsilons)
        self._total += 1

    # -------------------------------------------------------------------------
    def extend(self, deviations):
        """Count all deviations of the given iterable."""
        for d in deviations:
            self.push(d)

    # -------------------------------------------------------------------------
    def fractions(self):
        """The tail fractions counts/total per threshold."""
        if not self._total:
            return np.zeros(len(self._epsilons))
        return self._counts / float(self._total)

    # -------------------------------------------------------------------------
    def as_dict(self, pure=False):
        """Transforms the elements of the object into a dict."""
        res = {
            'epsilons': self._epsilons.tolist(),
            'counts': self._counts.tolist(),
            'total': self._total,
        }
        if not pure:
            res['__class_name__'] = self.__class__.__name__
        return res

    # -------------------------------------------------------------------------
    def dict(self):
        """Typecast into a regular dict."""
        return self.as_dict(pure=True)


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
