#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: The validating campaign configuration.

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""
from __future__ import absolute_import

import copy
import hashlib
import json
import logging
import math

from pathlib import Path

try:
    from collections.abc import Mapping, Sequence
except ImportError:
    from collections import Mapping, Sequence

# Third party modules
import yaml

# Own modules
from . import DEFAULT_DENSE_OUTPUT_CAP, DEFAULT_MAX_WINDOW, DEFAULT_PBC_DENSE_LIMIT
from . import MAX_EXACT_AVERAGE_ORDER
from .errors import ConfigError, InvalidConfigValueError
from .errors import UnknownConfigKeyError, UnknownExperimentError
from .mps import NAMED_OPERATORS, VALID_BOUNDARIES

from .xlate import XLATOR

__version__ = '0.6.1'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)

_ = XLATOR.gettext

EXPERIMENT_NAMES = (
    'average_state_distance',
    'eigen_histogram',
    'variance_scan',
    'distance_scan',
    'lipschitz_probe',
    'concentration_tail',
    'weingarten_check',
)

CHI_RULES = ('fixed', 'linear', 'poly')

MAX_SEED = 2 ** 64


# =============================================================================
def normalize_experiment_name(name):
    """Return the canonical name of an experiment ('variance-scan' → 'variance_scan')."""
    key = str(name).strip().lower().replace('-', '_')
    if key not in EXPERIMENT_NAMES:
        raise UnknownExperimentError(name, EXPERIMENT_NAMES)
    return key


# =============================================================================
def is_sequence(arg):
    """Return, whether the given value is a sequential object, but not a str."""
    if not isinstance(arg, Sequence):
        return False
    if hasattr(arg, "strip"):
        return False
    return True


# =============================================================================
def _as_int(key, value, minimum=None):
    if isinstance(value, bool):
        raise InvalidConfigValueError(key, value, _("must be an integer"))
    try:
        v = int(value)
    except (TypeError, ValueError):
        raise InvalidConfigValueError(key, value, _("must be an integer"))
    if isinstance(value, float) and v != value:
        raise InvalidConfigValueError(key, value, _("must be an integer"))
    if minimum is not None and v < minimum:
        raise InvalidConfigValueError(key, value, _("must be >= {}").format(minimum))
    return v


# =============================================================================
def _as_float(key, value, minimum=None, strict=False):
    if isinstance(value, bool):
        raise InvalidConfigValueError(key, value, _("must be a number"))
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise InvalidConfigValueError(key, value, _("must be a number"))
    if not math.isfinite(v):
        raise InvalidConfigValueError(key, value, _("must be finite"))
    if minimum is not None:
        if strict and v <= minimum:
            raise InvalidConfigValueError(key, value, _("must be > {}").format(minimum))
        if not strict and v < minimum:
            raise InvalidConfigValueError(key, value, _("must be >= {}").format(minimum))
    return v


# =============================================================================
def _as_bool(key, value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int) and value in (0, 1):
        return bool(value)
    if isinstance(value, str):
        v = value.strip().lower()
        if v in ('yes', 'true', 'on', 'y', '1'):
            return True
        if v in ('no', 'false', 'off', 'n', '0'):
            return False
    raise InvalidConfigValueError(key, value, _("must be a boolean"))


# =============================================================================
def _as_list(key, value, item_func, nonempty=True):
    if not is_sequence(value):
        value = [value]
    res = [item_func(key, v) for v in value]
    if nonempty and not res:
        raise InvalidConfigValueError(key, value, _("must not be empty"))
    return res


# =============================================================================
def _as_choice(key, value, choices):
    v = str(value).strip().lower()
    if v not in choices:
        raise InvalidConfigValueError(
            key, value, _("must be one of {}").format(', '.join(choices)))
    return v


# =============================================================================
def _as_vector(key, value):
    if value is None:
        return None
    if not is_sequence(value) or not value:
        raise InvalidConfigValueError(key, value, _("must be a nonempty list of numbers"))
    res = []
    for v in value:
        if is_sequence(v) and len(v) == 2:
            res.append([_as_float(key, v[0]), _as_float(key, v[1])])
        else:
            res.append(_as_float(key, v))
    if all((x == 0 if not isinstance(x, list) else x == [0.0, 0.0]) for x in res):
        raise InvalidConfigValueError(key, value, _("must not be the zero vector"))
    return res


# =============================================================================
def _coerce_experiment(key, value):
    try:
        return normalize_experiment_name(value)
    except UnknownExperimentError as e:
        raise InvalidConfigValueError(key, value, str(e))


# =============================================================================
def _coerce_seed(key, value):
    v = _as_int(key, value, minimum=0)
    if v >= MAX_SEED:
        raise InvalidConfigValueError(key, value, _("must be < 2^64"))
    return v


# =============================================================================
def _coerce_increasing(key, value):
    res = _as_list(key, value, lambda k, v: _as_int(k, v, minimum=1))
    for a, b in zip(res[:-1], res[1:]):
        if b <= a:
            raise InvalidConfigValueError(key, value, _("must be strictly increasing"))
    return res


# =============================================================================
class CampaignConfig(object):
    """
    The complete, validated configuration of one experiment campaign.

    Every assignment to a field is coerced and checked on its own, `validate()`
    checks the constraints between the fields.
    """

    defaults = {
        'experiment': 'variance_scan',
        'D': 2,
        'L': 1,
        'boundary': 'obc',
        'homogeneous': True,
        'N_grid': [4, 6, 8, 10, 12, 14, 16],
        'chi_rule': 'fixed',
        'chi_values': [2, 4, 8],
        'chi_power': 2.5,
        'chi_cap': 64,
        'max_N': 48,
        'max_window': DEFAULT_MAX_WINDOW,
        'samples': 500,
        'master_seed': 20230101,
        'observable': 'sigma_x',
        'epsilon_grid': [0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3],
        'sample_grid': [10, 100, 1000, 10000],
        'bins': 50,
        'pairs': 200,
        'perturbation_scales': [1e-2, 1e-3, 1e-4],
        'eig_maxiter': None,
        'phi_I': None,
        'phi_F': None,
        'frozen': False,
    }

    coercers = {
        'experiment': _coerce_experiment,
        'D': lambda k, v: _as_int(k, v, minimum=2),
        'L': lambda k, v: _as_int(k, v, minimum=1),
        'boundary': lambda k, v: _as_choice(k, v, VALID_BOUNDARIES),
        'homogeneous': _as_bool,
        'N_grid': lambda k, v: _as_list(k, v, lambda k1, v1: _as_int(k1, v1, minimum=1)),
        'chi_rule': lambda k, v: _as_choice(k, v, CHI_RULES),
        'chi_values': lambda k, v: _as_list(k, v, lambda k1, v1: _as_int(k1, v1, minimum=1)),
        'chi_power': lambda k, v: _as_float(k, v, minimum=0.0, strict=True),
        'chi_cap': lambda k, v: _as_int(k, v, minimum=1),
        'max_N': lambda k, v: _as_int(k, v, minimum=1),
        'max_window': lambda k, v: _as_int(k, v, minimum=1),
        'samples': lambda k, v: _as_int(k, v, minimum=1),
        'master_seed': _coerce_seed,
        'observable': lambda k, v: _as_choice(k, v, NAMED_OPERATORS),
        'epsilon_grid': lambda k, v: _as_list(
            k, v, lambda k1, v1: _as_float(k1, v1, minimum=0.0)),
        'sample_grid': _coerce_increasing,
        'bins': lambda k, v: _as_int(k, v, minimum=1),
        'pairs': lambda k, v: _as_int(k, v, minimum=1),
        'perturbation_scales': lambda k, v: _as_list(
            k, v, lambda k1, v1: _as_float(k1, v1, minimum=0.0, strict=True)),
        'eig_maxiter': lambda k, v: None if v is None else _as_int(k, v, minimum=1),
        'phi_I': _as_vector,
        'phi_F': _as_vector,
        'frozen': _as_bool,
    }

    valid_keys = tuple(defaults.keys())

    # -------------------------------------------------------------------------
    def __init__(self, first_param=None, **kwargs):
        """Constructor."""
        self._values = {}
        for key in self.valid_keys:
            setattr(self, key, copy.deepcopy(self.defaults[key]))

        if first_param is not None:
            if not isinstance(first_param, Mapping):
                msg = _("Object is not a {m} object, but a {w} object instead.").format(
                    m='Mapping', w=first_param.__class__.__qualname__)
                raise ConfigError(msg)
            self.update(first_param)

        if kwargs:
            self.update(kwargs)

    # -------------------------------------------------------------------------
    def __getattr__(self, name):
        """Getting the value of a configuration field."""
        if name.startswith('__') or name == '_values':
            raise AttributeError(name)
        if name not in self.valid_keys:
            raise UnknownConfigKeyError(name, self.valid_keys)
        return self._values[name]

    # -------------------------------------------------------------------------
    def __setattr__(self, name, value):
        """Coerce and check a new value of a configuration field."""
        if name in ('_values', ):
            return super(CampaignConfig, self).__setattr__(name, value)
        if name not in self.valid_keys:
            raise UnknownConfigKeyError(name, self.valid_keys)
        self._values[name] = self.coercers[name](name, value)

    # -------------------------------------------------------------------------
    def update(self, mapping):
        """Set all fields of the given mapping."""
        for key in mapping.keys():
            if key not in self.valid_keys:
                raise UnknownConfigKeyError(key, self.valid_keys)
            setattr(self, key, mapping[key])

    # -------------------------------------------------------------------------
    @classmethod
    def read_file(cls, path):
        """
        Read the mapping of a JSON (.json) or YAML (.yaml, .yml) config file.

        @raise ConfigError: if the file cannot be read or does not contain a mapping
        """
        p = Path(path)
        try:
            content = p.read_text(encoding='utf-8')
        except OSError as e:
            msg = _("Could not read config file {f!r}: {e}").format(f=str(p), e=e)
            raise ConfigError(msg)

        try:
            if p.suffix.lower() == '.json':
                data = json.loads(content)
            else:
                data = yaml.safe_load(content)
        except (ValueError, yaml.YAMLError) as e:
            msg = _("Could not parse config file {f!r}: {e}").format(f=str(p), e=e)
            raise ConfigError(msg)

        if data is None:
            data = {}
        if not isinstance(data, Mapping):
            msg = _("The config file {!r} does not contain a mapping.").format(str(p))
            raise ConfigError(msg)
        return data

    # -------------------------------------------------------------------------
    @staticmethod
    def parse_override(override):
        """Split a 'KEY=VALUE' override, VALUE is parsed as YAML."""
        if '=' not in override:
            msg = _("Invalid override {!r}, must be given as KEY=VALUE.").format(override)
            raise ConfigError(msg)
        key, raw = override.split('=', 1)
        key = key.strip()
        try:
            value = yaml.safe_load(raw) if raw.strip() else None
        except yaml.YAMLError as e:
            raise InvalidConfigValueError(key, raw, str(e))
        return key, value

    # -------------------------------------------------------------------------
    def with_overrides(self, overrides):
        """
        Return a validated copy with all 'KEY=VALUE' overrides applied.

        The receiver is left unchanged, if any override fails.
        """
        new = self.copy()
        for override in overrides or []:
            key, value = self.parse_override(override)
            if key not in self.valid_keys:
                raise UnknownConfigKeyError(key, self.valid_keys)
            setattr(new, key, value)
        new.validate()
        return new

    # -------------------------------------------------------------------------
    def chi_for(self, n):
        """The bond dimension of system size n according to the χ rule (not fixed)."""
        if self.chi_rule == 'linear':
            return n - self.L
        if self.chi_rule == 'poly':
            return int(math.ceil(round(float(n) ** self.chi_power, 9)))
        return self.chi_values[0]

    # -------------------------------------------------------------------------
    def grid_points(self):
        """All (N, χ) grid points in campaign order."""
        if self.chi_rule == 'fixed':
            return [(n, chi) for chi in self.chi_values for n in self.N_grid]
        return [(n, self.chi_for(n)) for n in self.N_grid]

    # -------------------------------------------------------------------------
    def validate(self):
        """
        Check all constraints between the fields.

        @raise InvalidConfigValueError: naming the violated constraint
        """
        exp = self.experiment

        for n in self.N_grid:
            if n <= self.L:
                raise InvalidConfigValueError(
                    'N_grid', n, _("every N must satisfy N > L = {}").format(self.L))
            if n > self.max_N:
                raise InvalidConfigValueError(
                    'N_grid', n, _("every N must satisfy N <= max_N = {}").format(self.max_N))

        if self.L > self.max_window:
            raise InvalidConfigValueError(
                'L', self.L, _("must be <= max_window = {}").format(self.max_window))

        if self.observable != 'identity' and self.D != 2:
            raise InvalidConfigValueError(
                'observable', self.observable, _("Pauli observables need D = 2"))

        for n, chi in self.grid_points():
            if chi < 1:
                raise InvalidConfigValueError(
                    'chi_rule', self.chi_rule,
                    _("yields chi = {c} < 1 for N = {n}").format(c=chi, n=n))
            if chi > self.chi_cap:
                raise InvalidConfigValueError(
                    'chi_cap', self.chi_cap,
                    _("chi = {c} for N = {n} exceeds the cap").format(c=chi, n=n))
            if self.boundary == 'pbc' and chi > DEFAULT_PBC_DENSE_LIMIT:
                raise InvalidConfigValueError(
                    'boundary', self.boundary,
                    _("periodic chains need chi <= {}").format(DEFAULT_PBC_DENSE_LIMIT))
            for key in ('phi_I', 'phi_F'):
                vec = getattr(self, key)
                if vec is not None and len(vec) != chi:
                    raise InvalidConfigValueError(
                        key, vec, _("must have length chi = {}").format(chi))

        if self.samples < 2:
            raise InvalidConfigValueError('samples', self.samples, _("must be >= 2"))

        if exp == 'concentration_tail':
            if self.samples < 100:
                raise InvalidConfigValueError(
                    'samples', self.samples, _("must be >= 100 for a concentration tail"))
            if not self.epsilon_grid:
                raise InvalidConfigValueError(
                    'epsilon_grid', self.epsilon_grid, _("must not be empty"))

        if exp in ('average_state_distance', 'weingarten_check'):
            n = self.N_grid[0]
            if self.D ** n > DEFAULT_DENSE_OUTPUT_CAP:
                raise InvalidConfigValueError(
                    'N_grid', self.N_grid,
                    _("D^N must be <= {}").format(DEFAULT_DENSE_OUTPUT_CAP))
            if self.boundary != 'obc' and exp == 'weingarten_check':
                raise InvalidConfigValueError(
                    'boundary', self.boundary, _("the exact average needs OBC"))
            if exp == 'weingarten_check' and n > MAX_EXACT_AVERAGE_ORDER:
                raise InvalidConfigValueError(
                    'N_grid', self.N_grid,
                    _("N must be <= {}").format(MAX_EXACT_AVERAGE_ORDER))

        return self

    # -------------------------------------------------------------------------
    def as_dict(self, pure=False):
        """
        Transforms the elements of the object into a dict

        @return: structure as dict
        @rtype:  dict
        """
        res = {}
        if not pure:
            res['__class_name__'] = self.__class__.__name__
        for key in self.valid_keys:
            res[key] = copy.deepcopy(self._values[key])
        return res

    # -------------------------------------------------------------------------
    def dict(self):
        """Typecast into a regular dict."""
        return self.as_dict(pure=True)

    # -------------------------------------------------------------------------
    def canonical_json(self):
        """The canonical JSON text of the configuration (sorted keys, no blanks)."""
        return json.dumps(self.dict(), sort_keys=True, separators=(',', ':'))

    # -------------------------------------------------------------------------
    def config_hash(self):
        """The SHA-256 hex digest of the canonical JSON text."""
        return hashlib.sha256(self.canonical_json().encode('utf-8')).hexdigest()

    # -------------------------------------------------------------------------
    def __copy__(self):
        """Return a copy of the current config."""
        return self.__class__(self.dict())

    # -------------------------------------------------------------------------
    def copy(self):
        """Return a copy of the current config."""
        return self.__copy__()

    # -------------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, CampaignConfig):
            return False
        return self.dict() == other.dict()

    # -------------------------------------------------------------------------
    def __repr__(self):
        """Typecast for reproduction."""
        kargs = ["{k}={v!r}".format(k=k, v=self._values[k]) for k in self.valid_keys]
        return "{c}({a})".format(c=self.__class__.__name__, a=', '.join(kargs))


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
