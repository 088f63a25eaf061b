""" oscsphere/cli.py """

# Standard Library
import argparse
import csv
import functools
import io
import json
import math
import sys

# Third Party
import numpy as np

# Oscsphere
from oscsphere import __version__, bases, elliptic, interbasis, verify
from oscsphere.bases import CylindricalQN, OscillatorParams, SphericalQN, SpherePoint
from oscsphere.core import SCHEMA_VERSION, FLOAT_DIGITS, OscSphereError, UsageError
from oscsphere.logging_config import get_logger, set_verbosity

logger = get_logger(__name__)

OUTPUT_FORMATS = ('json', 'csv')
POINT_SYSTEMS = ('spherical', 'cylindrical', 'elliptic', 'ambient')
WAVEFUNCTION_KINDS = ('spherical', 'cylindrical', 'elliptic')


# ----------------
# Argument types
# ----------------

def level_range(text):
	""" 'a..b' (inclusive) or a single level. """
	try:
		if '..' in text:
			low, high = (int(part) for part in text.split('..', 1))
		else:
			low = high = int(text)
	except ValueError as ex:
		raise argparse.ArgumentTypeError(f"expected a level 'N' or a range 'a..b', found '{text}'") from ex
	if low < 0 or high < low:
		raise argparse.ArgumentTypeError(f"level range must satisfy 0 <= a <= b, found '{text}'")
	return list(range(low, high + 1))


def coordinate_triple(text):
	""" 'x,y,z' or 'q0,q1,q2,q3'. """
	try:
		values = tuple(float(part) for part in text.split(','))
	except ValueError as ex:
		raise argparse.ArgumentTypeError(f"expected comma-separated numbers, found '{text}'") from ex
	if len(values) not in (3, 4):
		raise argparse.ArgumentTypeError(f"expected 3 or 4 coordinates, found {len(values)}")
	return values


def _parse_args(argv=None):
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--format', choices=OUTPUT_FORMATS, default='json', help="output format (default: json)")
	common.add_argument('--verbose', action='store_true', help="log computational details to stderr")

	physics = argparse.ArgumentParser(add_help=False)
	physics.add_argument('--nu', type=float, help="oscillator parameter nu >= 0")
	physics.add_argument('--R', type=float, default=1.0, help="curvature radius (default: 1)")
	physics.add_argument('--mass', type=float, default=1.0)
	physics.add_argument('--omega', type=float, help="frequency; with --mass, --hbar and --R derives nu")
	physics.add_argument('--hbar', type=float, default=1.0)

	level = argparse.ArgumentParser(add_help=False)
	level.add_argument('--N', type=int, required=True, help="energy level")
	level.add_argument('--m', type=int, required=True, help="azimuthal quantum number, |m| <= N")

	mixing = argparse.ArgumentParser(add_help=False)
	mixing.add_argument('--a', type=float, help="mixing parameter a >= -1 of L^2 - a R^2 D33")
	mixing.add_argument('--k', type=float, help="elliptic modulus, used with --system instead of --a")
	mixing.add_argument('--system', choices=('oblate', 'prolate'), default='oblate')

	parser = argparse.ArgumentParser(prog='oscsphere', description="Isotropic oscillator on the three-sphere: spectra, "
	                                 "interbasis expansions, elliptic bases and verification suites.")
	parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
	commands = parser.add_subparsers(dest='command', metavar='command', required=True)

	spectrum = commands.add_parser('spectrum', parents=[common, physics], help="energy levels and degeneracies")
	spectrum.add_argument('--N', type=level_range, required=True, help="level or inclusive range 'a..b'")

	block = commands.add_parser('interbasis', parents=[common, physics, level], help="spherical-cylindrical W block")
	block.add_argument('--method', choices=interbasis.W_METHODS, default='f43')

	commands.add_parser('elliptic', parents=[common, physics, level, mixing], help="elliptic basis at one level")

	suite = commands.add_parser('verify', parents=[common], help="run a verification suite")
	suite.add_argument('--suite', choices=verify.SUITES, default='all')
	suite.add_argument('--timings', action='store_true', help="include runtime_ms for every check")
	suite.add_argument('--perturb-energy', type=float, default=0.0, help=argparse.SUPPRESS)

	wave = commands.add_parser('wavefunction', parents=[common, physics, mixing], help="basis functions at points")
	wave.add_argument('--kind', choices=WAVEFUNCTION_KINDS, required=True)
	wave.add_argument('--N', type=int, required=True)
	wave.add_argument('--l', type=int, help="spherical basis")
	wave.add_argument('--m', type=int, default=0)
	wave.add_argument('--n3', type=int, help="cylindrical basis")
	wave.add_argument('--q', type=int, help="elliptic basis member, ascending in lambda")
	wave.add_argument('--coords', choices=POINT_SYSTEMS, default='spherical', help="system of every --point")
	wave.add_argument('--point', type=coordinate_triple, action='append', help="repeatable; 'x,y,z' in --coords")
	wave.add_argument('--npoints', type=int, default=10, help="seeded hemisphere points when no --point is given")
	wave.add_argument('--seed', type=int, default=1)

	return parser.parse_args(argv)


# ----------------
# Commands
# ----------------

def cmd_spectrum(args):
	params, conversion = _oscillator(args)
	rows = [ [ N, bases.energy(N, params), bases.degeneracy(N) ] for N in args.N ]
	return _table(['N', 'E', 'degeneracy'], rows, conversion)


def cmd_interbasis(args):
	params, conversion = _oscillator(args)
	block = interbasis.w_block(args.N, args.m, params.nu, method=args.method)
	columns = ['l'] + [ f"n3={n3}" for n3 in block.n3_index ]
	rows = [ [ l ] + [ float(value) for value in row ] for l, row in block.rows() ]
	metadata = dict(conversion)
	metadata.update({ 'method': block.method, 'l_index': block.l_index, 'n3_index': block.n3_index,
	                  'unitarity_defect': interbasis.unitarity_defect(block) })
	return _table(columns, rows, metadata)


def cmd_elliptic(args):
	params, conversion = _oscillator(args)
	elliptic_params = _mixing(args)
	solutions = elliptic.solve(args.N, args.m, params.nu, elliptic_params)
	l_index, n3_index = solutions[0].l_index, solutions[0].n3_index

	columns = (['q', 'lambda', 'residual_spherical', 'residual_cylindrical'] + [ f"T_l={l}" for l in l_index ]
	           + [ f"U_n3={n3}" for n3 in n3_index ])
	rows = []
	for each in solutions:
		rows.append([ each.q, each.lambda_q, elliptic.recurrence_residual_spherical(each),
		              elliptic.recurrence_residual_cylindrical(each) ] + [ float(x) for x in each.T ] + [ float(x) for x in each.U ])

	metadata = dict(conversion)
	metadata.update({
		'a': elliptic_params.a,
		'system': elliptic_params.system,
		'k': elliptic_params.k,
		'spectrum_spherical': [ each.lambda_q for each in solutions ],
		'spectrum_cylindrical': [ each.lambda_cylindrical for each in solutions ],
		'spectral_mismatch': elliptic.spectral_mismatch(solutions)
	})
	return _table(columns, rows, metadata)


def cmd_verify(args):
	reports = verify.run_suite(args.suite, perturb_energy=args.perturb_energy, verbose=False)
	columns = ['check_name', 'parameters', 'max_error', 'tolerance', 'passed']
	if args.timings:
		columns.append('runtime_ms')
	rows = [ [ record[column] for column in columns ] for record in (report.as_dict(args.timings) for report in reports) ]
	failed = sum(1 for report in reports if not report.passed)
	metadata = { 'suite': args.suite, 'checks': len(reports), 'failed': failed }
	return _table(columns, rows, metadata), (1 if failed else 0)


def cmd_wavefunction(args):
	params, conversion = _oscillator(args)
	nu = params.nu
	elliptic_params = None
	if args.kind == 'spherical':
		if args.l is None:
			raise UsageError("Spherical wavefunctions need --l.")
		qn = SphericalQN(args.N, args.l, args.m)
		evaluate = functools.partial(bases.wavefunction, 'spherical', qn, params)
	elif args.kind == 'cylindrical':
		if args.n3 is None:
			raise UsageError("Cylindrical wavefunctions need --n3.")
		qn = CylindricalQN(args.N, args.m, args.n3)
		evaluate = functools.partial(bases.wavefunction, 'cylindrical', qn, params)
	else:
		if args.q is None:
			raise UsageError("Elliptic wavefunctions need --q.")
		elliptic_params = _mixing(args)
		solutions = elliptic.solve(args.N, args.m, nu, elliptic_params)
		if not 0 <= args.q < len(solutions):
			raise UsageError(f"Elliptic index --q must lie in [0, {len(solutions) - 1}], found {args.q}.")
		solution = solutions[args.q]
		evaluate = functools.partial(elliptic.elliptic_wavefunction, solution, params)

	rows = []
	for point in _points(args, elliptic_params):
		value = evaluate(point)
		ambient = bases.to_ambient(point, params.R)
		rows.append(list(ambient.coords) + [ value.real, value.imag ])

	metadata = dict(conversion)
	metadata.update({ 'kind': args.kind, 'coords': args.coords })
	if elliptic_params is not None:
		metadata.update({ 'a': elliptic_params.a, 'k': elliptic_params.k, 'lambda': solution.lambda_q })
	return _table(['q0', 'q1', 'q2', 'q3', 're', 'im'], rows, metadata)


COMMANDS = {
	'spectrum': cmd_spectrum,
	'interbasis': cmd_interbasis,
	'elliptic': cmd_elliptic,
	'verify': cmd_verify,
	'wavefunction': cmd_wavefunction
}


# ----------------
# Helpers
# ----------------

def _oscillator(args):
	""" OscillatorParams from --nu, or from the physical flags when --omega is given. """
	if args.nu is not None and args.omega is not None:
		raise UsageError("Pass either --nu or --omega, not both.")
	if args.omega is not None:
		params = OscillatorParams(R=args.R, mass=args.mass, omega=args.omega, hbar=args.hbar)
		return params, { 'nu': params.nu, 'nu_source': 'physical', 'R': params.R, 'mass': params.mass,
		                 'omega': params.omega, 'hbar': params.hbar }
	nu = 0.0 if args.nu is None else args.nu
	params = OscillatorParams.from_nu(nu, R=args.R, mass=args.mass, hbar=args.hbar)
	return params, { 'nu': params.nu, 'nu_source': 'nu', 'R': params.R, 'omega': params.omega }


def _mixing(args):
	if args.a is not None and args.k is not None:
		raise UsageError("Pass either --a or --k, not both.")
	if args.k is not None:
		if args.system == 'oblate':
			return elliptic.EllipticParams.oblate(args.k, R=args.R)
		return elliptic.EllipticParams.prolate(args.k, R=args.R)
	if args.a is None:
		raise UsageError("The elliptic basis needs --a (or --k with --system).")
	return elliptic.EllipticParams.from_a(args.a, R=args.R)


def _points(args, elliptic_params):
	if not args.point:
		generator = verify.PointGenerator(args.seed)
		return [ generator.spherical_point() for _ in range(args.npoints) ]

	points = []
	for coords in args.point:
		if args.coords == 'ambient':
			if len(coords) != 4:
				raise UsageError("Ambient points need four coordinates 'q0,q1,q2,q3'.")
			points.append(SpherePoint.ambient(*coords))
			continue
		if len(coords) != 3:
			raise UsageError(f"{args.coords.capitalize()} points need three coordinates.")
		if args.coords == 'elliptic':
			if elliptic_params is None:
				raise UsageError("Elliptic coordinates need the elliptic basis (--kind elliptic).")
			points.append(SpherePoint.elliptic(*coords, k=elliptic_params.k))
		elif args.coords == 'cylindrical':
			points.append(SpherePoint.cylindrical(*coords))
		else:
			points.append(SpherePoint.spherical(*coords))
	return points


def _table(columns, rows, metadata):
	return { 'columns': columns, 'rows': rows, 'metadata': metadata }


def _parameters_of(args):
	""" Echo of the parsed flags, without output controls. """
	hidden = ('command', 'format', 'verbose')
	parameters = { key: value for key, value in vars(args).items() if key not in hidden and value is not None }
	if not parameters.get('perturb_energy', 1.0):
		parameters.pop('perturb_energy')
	return parameters


# ----------------
# Output
# ----------------

def envelope(command, parameters, data):
	return { 'command': command, 'parameters': parameters, 'schema_version': SCHEMA_VERSION, 'data': data }


def format_float(value):
	""" 17 significant digits; None for NaN and infinities. """
	value = float(value)
	if not math.isfinite(value):
		return None
	return format(value, f".{FLOAT_DIGITS}g")


def to_json(value):
	"""
	JSON text with every float written by format_float.  Keys keep their insertion order, so equal
	inputs always give byte-identical output.
	"""
	if value is None:
		return 'null'
	if isinstance(value, (bool, np.bool_)):
		return 'true' if value else 'false'
	if isinstance(value, (int, np.integer)):
		return str(int(value))
	if isinstance(value, (float, np.floating)):
		text = format_float(value)
		return 'null' if text is None else text
	if isinstance(value, str):
		return json.dumps(value, ensure_ascii=False)
	if isinstance(value, dict):
		return '{' + ', '.join(f"{json.dumps(str(key), ensure_ascii=False)}: {to_json(item)}" for key, item in value.items()) + '}'
	if isinstance(value, (list, tuple, np.ndarray)):
		return '[' + ', '.join(to_json(item) for item in value) + ']'
	raise UsageError(f"Cannot serialize a value of type {type(value).__name__}.")


def to_csv(data, command=None, parameters=None):
	"""
	Envelope lines '# key=value' (command, schema_version, parameters, then every metadata entry, with
	non-scalar values as JSON), then the header row and one line per row; LF line endings.
	"""
	buffer = io.StringIO()
	preamble = [] if command is None else [ ('command', command) ]
	preamble.append(('schema_version', SCHEMA_VERSION))
	if parameters is not None:
		preamble.append(('parameters', parameters))
	preamble.extend(data['metadata'].items())
	for key, value in preamble:
		buffer.write(f"# {key}={value if isinstance(value, str) else to_json(value)}\n")

	writer = csv.writer(buffer, lineterminator='\n')
	writer.writerow(data['columns'])
	for row in data['rows']:
		writer.writerow([ _csv_cell(cell) for cell in row ])
	return buffer.getvalue()


def _csv_cell(cell):
	if cell is None:
		return ''
	if isinstance(cell, (bool, np.bool_)):
		return 'true' if cell else 'false'
	if isinstance(cell, (float, np.floating)):
		text = format_float(cell)
		return '' if text is None else text
	if isinstance(cell, (dict, list, tuple)):
		return to_json(cell)
	return str(cell)


def main(argv=None):
	"""
	Entry point.  Exit codes: 0 success, 1 computational or consistency failure (including failed
	verification checks), 2 usage error.
	"""
	try:
		args = _parse_args(argv)
	except SystemExit as ex:
		return ex.code if isinstance(ex.code, int) else 2

	set_verbosity(args.verbose)
	try:
		result = COMMANDS[args.command](args)
	except UsageError as ex:
		print(f"oscsphere {args.command}: error: {ex}", file=sys.stderr)
		return ex.exit_code
	except OscSphereError as ex:
		logger.debug("Command '%s' failed", args.command, exc_info=True)
		print(f"oscsphere {args.command}: {type(ex).__name__}: {ex}", file=sys.stderr)
		return ex.exit_code

	data, exit_code = result if isinstance(result, tuple) else (result, 0)
	if args.format == 'csv':
		sys.stdout.write(to_csv(data, args.command, _parameters_of(args)))
	else:
		sys.stdout.write(to_json(envelope(args.command, _parameters_of(args), data)) + '\n')
	return exit_code


if __name__ == '__main__':
	raise SystemExit(main())
