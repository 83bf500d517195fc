#!/usr/bin/python3
# -*- coding: utf-8 -*-
#
# Author: Frank Brehm <frank@brehm-online.com
#         Berlin, Germany, 2023
# Date:   2023-03-02
#
# Batch runner of the typicality experiments on random matrix product states.
#

from __future__ import absolute_import, print_function

import sys
import os
import logging
import argparse
import traceback
import datetime
import copy
import re
import textwrap
import shutil
import json

# from argparse import RawDescriptionHelpFormatter
from argparse import RawTextHelpFormatter

# Third party modules
import yaml

LOG = logging.getLogger(__name__)

from . import __version__ as GLOBAL_VERSION
from . import pp, MAX_TERMINAL_WIDTH
from . import DEFAULT_TERMINAL_WIDTH, DEFAULT_TERMINAL_HEIGHT
from . import get_generic_appname

from .config import EXPERIMENT_NAMES, MAX_SEED
from .errors import ConfigError, NumericalError
from .executor import WORKERS_ENV, default_workers
from .experiments import MANIFEST_FORMATS, ExperimentRunner, list_experiments, load_config

from .xlate import XLATOR, format_list

__version__ = '0.2.3'
_ = XLATOR.gettext

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_ERROR = 3
EXIT_INTERRUPTED = 130


# =============================================================================
class PositiveIntegerOptionAction(argparse.Action):

    # -------------------------------------------------------------------------
    def __call__(self, parser, namespace, value, option_string=None):

        try:
            val = int(value)
        except Exception as e:
            msg = _("Got a {c} for converting {v!r} into an integer value: {e}").format(
                c=e.__class__.__name__, v=value, e=e)
            raise argparse.ArgumentError(self, msg)

        if val < 1:
            msg = _("The option must be positive (given: {}).").format(value)
            raise argparse.ArgumentError(self, msg)

        setattr(namespace, self.dest, val)


# =============================================================================
class SeedOptionAction(argparse.Action):

    # -------------------------------------------------------------------------
    def __call__(self, parser, namespace, value, option_string=None):

        try:
            val = int(value, 0)
        except Exception as e:
            msg = _("Got a {c} for converting {v!r} into an integer value: {e}").format(
                c=e.__class__.__name__, v=value, e=e)
            raise argparse.ArgumentError(self, msg)

        if val < 0 or val >= MAX_SEED:
            msg = _("The seed must be an unsigned 64 bit integer (given: {}).").format(value)
            raise argparse.ArgumentError(self, msg)

        setattr(namespace, self.dest, val)


# =============================================================================
class OverrideOptionAction(argparse.Action):

    # -------------------------------------------------------------------------
    def __init__(self, option_strings, *args, **kwargs):

        super(OverrideOptionAction, self).__init__(
            option_strings=option_strings, *args, **kwargs)

    # -------------------------------------------------------------------------
    def __call__(self, parser, namespace, value, option_string=None):

        if '=' not in value:
            msg = _("Invalid override {!r}, must be given as KEY=VALUE.").format(value)
            raise argparse.ArgumentError(self, msg)

        overrides = getattr(namespace, self.dest, None)
        if overrides is None:
            overrides = []
        overrides = copy.copy(overrides)
        overrides.append(value)
        setattr(namespace, self.dest, overrides)


# =============================================================================
class RmpsTypicalityApp(object):
    """Runs one experiment of the catalog and writes its CSV table and manifest."""

    term_size = shutil.get_terminal_size((DEFAULT_TERMINAL_WIDTH, DEFAULT_TERMINAL_HEIGHT))
    max_width = term_size.columns
    if max_width > MAX_TERMINAL_WIDTH:
        max_width = MAX_TERMINAL_WIDTH

    re_first_letter = re.compile(r'^(.)(.*)')

    manifest_formats = MANIFEST_FORMATS

    # -------------------------------------------------------------------------
    @classmethod
    def wrap_msg(cls, message, width=None):
        """Wrap the given message to the max terminal width ..."""
        if width is None:
            width = cls.max_width
        return textwrap.fill(message, width)

    # -------------------------------------------------------------------------
    def __init__(self, argv=None, appname=None):
        """The constructor method."""
        self._appname = get_generic_appname(appname)
        self._version = __version__
        self._verbose = 0
        self._quiet = False
        self._initialized = False
        self.manifest = None

        self.init_arg_parser()
        self.perform_arg_parser(argv)
        self.init_logging()

        self._initialized = True

    # -----------------------------------------------------------
    @property
    def appname(self):
        """The name of the current running application."""
        if hasattr(self, '_appname'):
            return self._appname
        return os.path.basename(sys.argv[0])

    @appname.setter
    def appname(self, value):
        if value:
            v = str(value).strip()
            if v:
                self._appname = v

    # -----------------------------------------------------------
    @property
    def appname_capitalized(self):
        """The name of the current running application withe first character
        as a capital."""
        match = self.re_first_letter.match(self.appname)
        if match:
            return match.group(1).upper() + match.group(2)
        return self.appname

    # -----------------------------------------------------------
    @property
    def version(self):
        """The version string of the current object or application."""
        return getattr(self, '_version', __version__)

    # -----------------------------------------------------------
    @property
    def verbose(self):
        """The verbosity level."""
        return getattr(self, '_verbose', 0)

    @verbose.setter
    def verbose(self, value):
        v = int(value)
        if v >= 0:
            self._verbose = v
        else:
            LOG.warning(_("Wrong verbose level {!r}, must be >= 0").format(value))

    # -----------------------------------------------------------
    @property
    def quiet(self):
        """Log only warnings and errors."""
        return self._quiet

    @quiet.setter
    def quiet(self, value):
        self._quiet = bool(value)

    # -----------------------------------------------------------
    @property
    def initialized(self):
        """The initialisation of this object is complete."""
        return getattr(self, '_initialized', False)

    @initialized.setter
    def initialized(self, value):
        self._initialized = bool(value)

    # -------------------------------------------------------------------------
    def __str__(self):
        """
        Typecasting function for translating object structure
        into a string

        @return: structure as string
        @rtype:  str
        """

        return pp(self.as_dict(short=True))

    # -------------------------------------------------------------------------
    def as_dict(self, short=True):
        """
        Transforms the elements of the object into a dict

        @param short: don't include local properties in resulting dict.
        @type short: bool

        @return: structure as dict
        @rtype:  dict
        """

        res = {}
        for key in self.__dict__:
            if short and key.startswith('_') and not key.startswith('__'):
                continue
            if key in ('arg_parser', 'manifest'):
                continue
            res[key] = self.__dict__[key]

        res['__class_name__'] = self.__class__.__name__
        res['appname'] = self.appname
        res['appname_capitalized'] = self.appname_capitalized
        res['args'] = copy.copy(self.args.__dict__)
        res['initialized'] = self.initialized
        if self.manifest:
            res['manifest'] = self.manifest.as_dict(short=short)
        res['quiet'] = self.quiet
        res['version'] = self.version
        res['verbose'] = self.verbose

        return res

    # -------------------------------------------------------------------------
    def init_arg_parser(self):
        """
        Local called method to initiate the argument parser.
        """

        appname = self.appname_capitalized
        arg_width = self.max_width - 24

        desc = []
        desc.append(_(
            '{} runs numerical experiments on the typicality of random matrix '
            'product states.').format(appname))
        desc.append(_(
            'Every experiment samples ensembles of states generated by Haar random '
            'unitaries and writes one CSV table together with a manifest, which records '
            'everything needed to reproduce the run.'))

        description = ''
        for des in desc:
            des = self.wrap_msg(des)
            if description:
                description += '\n\n'
            description += des

        self.arg_parser = argparse.ArgumentParser(
            prog=self.appname,
            description=description,
            formatter_class=RawTextHelpFormatter,
            add_help=False,
        )

        #######
        # Experiment
        exp_group = self.arg_parser.add_argument_group(_('Experiment options'))

        # --config
        desc = self.wrap_msg(_(
            'A JSON or YAML file with the configuration of the campaign. Its keys must be '
            'valid configuration keys, unknown keys are an error.'), arg_width)
        exp_group.add_argument(
            '-c', '--config', metavar=_('FILE'), dest='config', help=desc)

        # --experiment
        desc = _('The experiment to run, one of:') + ' ' + format_list(
            EXPERIMENT_NAMES, True) + '.'
        desc = self.wrap_msg(desc, arg_width) + '\n'
        desc += self.wrap_msg(_(
            'Overrides the experiment of the config file.'), arg_width)
        exp_group.add_argument(
            '-e', '--experiment', metavar=_('NAME'), dest='experiment', help=desc)

        # --set
        desc = self.wrap_msg(_(
            'Override a single configuration value, VALUE is read as YAML, so lists '
            'like "[4, 8, 16]" are possible. May be given multiple times.'), arg_width)
        exp_group.add_argument(
            '-s', '--set', metavar=_('KEY=VALUE'), dest='overrides',
            action=OverrideOptionAction, help=desc)

        # --seed
        desc = self.wrap_msg(_(
            'The master seed of all random streams (an unsigned 64 bit integer). '
            'Overrides the configured seed.'), arg_width)
        exp_group.add_argument(
            '--seed', metavar='U64', dest='seed', action=SeedOptionAction, help=desc)

        # --workers
        desc = self.wrap_msg(_(
            'The number of worker processes. The results do not depend on it.'),
            arg_width) + '\n'
        desc += self.wrap_msg(_(
            'Default: the value of ${}, or the number of CPUs.').format(WORKERS_ENV), arg_width)
        exp_group.add_argument(
            '-w', '--workers', metavar=_('COUNT'), dest='workers',
            action=PositiveIntegerOptionAction, help=desc)

        # --list
        desc = self.wrap_msg(_(
            'List all experiments with their descriptions and exit.'), arg_width)
        exp_group.add_argument(
            '-l', '--list', dest='list', action="store_true", help=desc)

        #######
        # Output
        output_options = self.arg_parser.add_argument_group(_('Output options'))

        # --out
        desc = self.wrap_msg(_(
            'The directory of the CSV table and the manifest. It will be created, if '
            'necessary.'), arg_width) + '\n'
        desc += _("Default: '{}'.").format('.')
        output_options.add_argument(
            '-o', '--out', metavar=_('DIR'), dest='out', default='.', help=desc)

        desc = _('Format of the manifest. Valid options are:') + ' ' + format_list(
            self.manifest_formats, True) + '. '
        desc += _("Default: '{}'.").format('json')
        desc = self.wrap_msg(desc, arg_width)
        output_options.add_argument(
            '-M', '--manifest-format', choices=self.manifest_formats, metavar=_('FORMAT'),
            dest='manifest_format', default='json', help=desc)

        #######
        # General stuff
        general_group = self.arg_parser.add_argument_group(_('General options'))

        verbose_group = general_group.add_mutually_exclusive_group()

        desc = self.wrap_msg(_(
            'Enabling debug messages and increase their verbosity level if used multiple times.'))
        verbose_group.add_argument(
            "-v", "--verbose", action="count", dest='verbose', help=desc)

        # --quiet
        desc = self.wrap_msg(_("quiet - log only warnings and errors."), arg_width)
        verbose_group.add_argument(
            '-q', '--quiet', dest='quiet', action="store_true", help=desc)

        general_group.add_argument(
            "--help", action='help', dest='help',
            help=_('Show this help message and exit.')
        )

        general_group.add_argument(
            "--usage", action='store_true', dest='usage',
            help=_("Display brief usage message and exit.")
        )

        v_msg = _("Version of %(prog)s: {}").format(GLOBAL_VERSION)
        general_group.add_argument(
            "-V", '--version', action='version', version=v_msg,
            help=_("Show program's version number and exit.")
        )

    # -------------------------------------------------------------------------
    def perform_arg_parser(self, argv=None):

        self.args = self.arg_parser.parse_args(argv)

        if self.args.usage:
            self.arg_parser.print_usage(sys.stdout)
            sys.exit(EXIT_OK)

        if self.args.verbose is not None and self.args.verbose > self.verbose:
            self.verbose = self.args.verbose
        elif self.args.quiet:
            self.quiet = True

    # -------------------------------------------------------------------------
    def init_logging(self):
        """
        Initialize the logger object.
        It creates a loghandler with all output to STDERR.

        @return: None
        """

        log_level = logging.INFO
        if self.verbose:
            log_level = logging.DEBUG
        elif self.quiet:
            log_level = logging.WARNING

        root_logger = logging.getLogger()
        root_logger.setLevel(log_level)

        # create formatter
        format_str = ''
        if self.verbose:
            format_str = '[%(asctime)s]: '
        format_str += self.appname + ': '
        if self.verbose:
            if self.verbose > 1:
                format_str += '%(name)s(%(lineno)d) %(funcName)s() '
            else:
                format_str += '%(name)s '
        format_str += '%(levelname)s - %(message)s'
        formatter = logging.Formatter(format_str)

        # create log handler for console output
        lh_console = logging.StreamHandler(sys.stderr)
        lh_console.setLevel(log_level)
        lh_console.setFormatter(formatter)

        root_logger.addHandler(lh_console)

        return

    # -------------------------------------------------------------------------
    def handle_error(
            self, error_message=None, exception_name=None, do_traceback=False):

        msg = str(error_message).strip()
        if not msg:
            msg = _('undefined error.')
        title = None

        if isinstance(error_message, Exception):
            title = error_message.__class__.__name__
        else:
            if exception_name is not None:
                title = exception_name.strip()
            else:
                title = _('Exception happened')
        msg = title + ': ' + msg

        root_log = logging.getLogger()
        has_handlers = False
        if root_log.handlers:
            has_handlers = True

        if has_handlers:
            LOG.error(msg)
            if do_traceback:
                LOG.error(traceback.format_exc())
        else:
            curdate = datetime.datetime.now()
            curdate_str = "[" + curdate.isoformat(' ') + "]: "
            msg = curdate_str + msg + "\n"
            sys.stderr.write(msg)
            if do_traceback:
                traceback.print_exc()

        return

    # -------------------------------------------------------------------------
    def __call__(self):
        return self.run()

    # -------------------------------------------------------------------------
    def run(self):
        """
        Run the application.

        @return: the exit code, 0 on success, 2 on configuration errors, 3 on
                 numerical failures, 130 on interrupts and 1 on other errors
        @rtype: int
        """

        LOG.debug(_("And here wo go ..."))

        try:
            if self.args.list:
                self.print_experiments()
                return EXIT_OK
            self.run_experiment()
        except ConfigError as e:
            self.handle_error(e)
            return EXIT_CONFIG_ERROR
        except NumericalError as e:
            self.handle_error(e)
            return EXIT_NUMERICAL_ERROR
        except KeyboardInterrupt:
            self.handle_error(_('Interrupted on user demand.'), _('Interrupt'))
            return EXIT_INTERRUPTED
        except Exception as e:
            self.handle_error(e, do_traceback=True)
            return EXIT_ERROR

        return EXIT_OK

    # -------------------------------------------------------------------------
    def run_experiment(self):
        """Load the configuration and run its experiment."""

        workers = self.args.workers
        if workers is None:
            workers = default_workers()

        config = load_config(
            self.args.config, overrides=self.args.overrides,
            experiment=self.args.experiment, seed=self.args.seed)

        runner = ExperimentRunner(
            config, self.args.out, workers=workers,
            manifest_format=self.args.manifest_format, verbose=self.verbose)
        self.manifest = runner.manifest
        runner.run()

        if self.verbose > 2:
            LOG.debug(_('Manifest:') + '\n' + pp(self.manifest.as_dict()))
        elif self.verbose > 1:
            LOG.debug(_('Manifest:') + '\n' + pp(self.manifest.dict()))

    # -------------------------------------------------------------------------
    def print_experiments(self):
        """Print the catalog, with -v also the default configurations."""

        catalog = list_experiments()

        if self.verbose:
            if self.args.manifest_format == 'yaml':
                print(yaml.safe_dump(
                    catalog, allow_unicode=True, explicit_start=True, sort_keys=True,
                    indent=4, width=self.max_width))
            else:
                print(json.dumps(catalog, indent=4, sort_keys=True))
            return

        max_len = max(len(exp['name']) for exp in catalog)
        indent = ' ' * (max_len + 2)
        for exp in catalog:
            text = self.wrap_msg(exp['description'], self.max_width - max_len - 2)
            lines = text.splitlines()
            print('{n:<{w}}  {d}'.format(n=exp['name'], w=max_len, d=lines[0]))
            for line in lines[1:]:
                print(indent + line)


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
