""" oscsphere/core.py """

# No internal dependencies allowed here.

# Standard Library
import numbers
import os
import sys

if sys.version_info.major != 3:
	raise Exception("Oscsphere is only available for Python 3.")

# Quadrature
DEFAULT_QUAD_NODES = 200
QUAD_NODES_CAP = 1600
QUAD_AGREEMENT_TOL = 1e-11
QUAD_NODES_ENV = 'OSC_SPHERE_QUAD_NODES'

# A parameter closer than this to a nonpositive integer is treated as one.
TERMINATION_TOL = 1e-9

# Output
SCHEMA_VERSION = "1"
FLOAT_DIGITS = 17


# ----------------
# Errors
# ----------------

class OscSphereError(Exception):
	""" Base class for every error raised by this package. """
	exit_code = 1

class DomainError(OscSphereError):
	""" Argument outside the mathematical domain of an operation. """
	exit_code = 1

class SingularityError(DomainError):
	""" Evaluation on a singular locus (the equator of the sphere). """
	exit_code = 1

class ConsistencyError(OscSphereError):
	""" Two independent computations of the same quantity disagree. """
	exit_code = 1

class UsageError(OscSphereError):
	exit_code = 2

class ArgumentMissing(UsageError):
	exit_code = 2

class ArgumentType(UsageError):
	exit_code = 2


# ----------------
# Validation
# ----------------

def validate_datatype(argument_name, argument_value, expected_type, mandatory=False):
	"""
	A generic function for checking a variable's datatype, and throwing an error on mismatches.

	NOTE: expected_type can be a single Type, or a tuple of Types.
	"""
	# Throw error if missing mandatory argument.
	NoneType = type(None)
	if mandatory and isinstance(argument_value, NoneType):
		raise ArgumentMissing(f"Argument '{argument_name}' is mandatory.")

	if argument_value is None:
		return argument_value  # datatype is going to be a NoneType, which is okay if not mandatory.

	# bool is a subclass of int, but never a valid quantum number.
	if isinstance(argument_value, bool) and bool not in _as_tuple(expected_type):
		raise ArgumentType(f"Argument '{argument_name}' should not be a boolean.")

	if not isinstance(argument_value, expected_type):
		if isinstance(expected_type, tuple):
			expected_type_names = [ each.__name__ for each in expected_type ]
			msg = f"Argument '{argument_name}' should be one of these types: '{', '.join(expected_type_names)}'"
		else:
			msg = f"Argument '{argument_name}' should be of type = '{expected_type.__name__}'"
		msg += f". Found a {type(argument_value).__name__} with value '{argument_value}' instead."
		raise ArgumentType(msg)
	return argument_value


def validate_natural(argument_name, argument_value):
	""" Integer-like and nonnegative; numpy integers are accepted. """
	validate_datatype(argument_name, argument_value, numbers.Integral, mandatory=True)
	if argument_value < 0:
		raise DomainError(f"Argument '{argument_name}' should be a nonnegative integer, found {argument_value}.")
	return int(argument_value)


def validate_integer(argument_name, argument_value):
	validate_datatype(argument_name, argument_value, numbers.Integral, mandatory=True)
	return int(argument_value)


def validate_real(argument_name, argument_value, minimum=None, strict=False):
	"""
	Accepts ints and floats (including numpy scalars).  With 'minimum', rejects smaller values
	(or equal values, when strict=True) with a DomainError.
	"""
	validate_datatype(argument_name, argument_value, numbers.Real, mandatory=True)
	value = float(argument_value)
	if value != value:  # NaN
		raise DomainError(f"Argument '{argument_name}' cannot be NaN.")
	if minimum is not None:
		if value < minimum or (strict and value == minimum):
			relation = '>' if strict else '>='
			raise DomainError(f"Argument '{argument_name}' should be {relation} {minimum}, found {value}.")
	return value


def validate_choice(argument_name, argument_value, choices):
	if argument_value not in choices:
		raise UsageError(f"Argument '{argument_name}' must be one of {', '.join(choices)} (value passed was '{argument_value}').")
	return argument_value


def is_nonpositive_integer(value, tol=TERMINATION_TOL):
	""" True when 'value' lies within 'tol' of one of 0, -1, -2, ... """
	nearest = round(value)
	return nearest <= 0 and abs(value - nearest) <= tol


def nearest_integer(value):
	return int(round(value))


# ----------------
# Configuration
# ----------------

def get_quad_nodes():
	"""
	Starting node count for adaptive quadrature.  Overridden by the environment variable
	OSC_SPHERE_QUAD_NODES, which must hold a positive integer.
	"""
	raw_value = os.environ.get(QUAD_NODES_ENV)
	if raw_value is None or not raw_value.strip():
		return DEFAULT_QUAD_NODES
	try:
		nodes = int(raw_value.strip())
	except ValueError as ex:
		raise UsageError(f"Environment variable {QUAD_NODES_ENV} should be a positive integer, found '{raw_value}'.") from ex
	if nodes < 1:
		raise UsageError(f"Environment variable {QUAD_NODES_ENV} should be a positive integer, found '{raw_value}'.")
	return nodes


def _as_tuple(expected_type):
	return expected_type if isinstance(expected_type, tuple) else (expected_type,)
