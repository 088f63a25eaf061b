""" oscsphere/logging_config.py """

# Standard Library
import logging
import sys

PACKAGE_LOGGER = 'oscsphere'
LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s: %(message)s'


def get_logger(name):
	"""
	Returns a logger under the package hierarchy.  The package logger owns the only handler
	(stderr), so stdout stays reserved for command output.
	"""
	_configure_package_logger()
	if name != PACKAGE_LOGGER and not name.startswith(PACKAGE_LOGGER + '.'):
		name = f"{PACKAGE_LOGGER}.{name}"
	return logging.getLogger(name)


def set_verbosity(verbose):
	""" DEBUG when verbose, otherwise WARNING. """
	_configure_package_logger()
	logging.getLogger(PACKAGE_LOGGER).setLevel(logging.DEBUG if verbose else logging.WARNING)


def _configure_package_logger():
	package_logger = logging.getLogger(PACKAGE_LOGGER)
	if getattr(package_logger, '_oscsphere_configured', False):
		return
	handler = logging.StreamHandler(sys.stderr)
	handler.setFormatter(logging.Formatter(LOG_FORMAT))
	package_logger.addHandler(handler)
	package_logger.setLevel(logging.WARNING)
	package_logger.propagate = False
	package_logger._oscsphere_configured = True  # pylint: disable=protected-access
