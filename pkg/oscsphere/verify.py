""" oscsphere/verify.py """

# Standard Library
import functools
import itertools
import math
import time
from dataclasses import dataclass, field

# Third Party
import numpy as np

# Oscsphere
from oscsphere import bases, elliptic, interbasis, specfun
from oscsphere.bases import CylindricalQN, OscillatorParams, SphericalQN, SpherePoint
from oscsphere.core import ConsistencyError, DomainError, UsageError, validate_choice, validate_natural, validate_real
from oscsphere.logging_config import get_logger

logger = get_logger(__name__)

ORTHONORMALITY_BASES = ('spherical_z', 'cyl_phi', 'cyl_k', 'full_3d')
LIMIT_KINDS = ('flat_energy', 'flat_w', 'free_w', 'flat_basis', 'free_basis')
SUITES = ('all', 'bases', 'interbasis', 'elliptic', 'limits', 'kernel')

# Pseudo-random points: 64-bit linear congruential generator, top 53 bits scaled to [0, 1).
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MODULUS = 2 ** 64

ODE_STEP = 1e-4
ODE_MARGIN = 0.05
MIN_ODE_GRIDPOINTS = 32
MAX_ORTHONORMALITY_INDEX = 24
MAX_RECONSTRUCTION_LEVEL = 10

# Limit errors must not grow along a schedule; below LIMIT_FLOOR they count as converged.
# Observed convergence rates may miss the expected rate by LIMIT_SLACK either way.
LIMIT_SLACK = 3.0
LIMIT_FLOOR = 1e-13


@dataclass
class CheckReport():
	""" Outcome of one verification check.  'passed' is max_error <= tolerance. """
	check_name: str
	parameters: dict
	max_error: float
	tolerance: float
	passed: bool = field(init=False, default=False)
	runtime_ms: float = 0.0

	def __post_init__(self):
		self.max_error = float(self.max_error)
		self.passed = bool(self.max_error <= self.tolerance)

	def as_dict(self, timings=False):
		result = {
			'check_name': self.check_name,
			'parameters': dict(self.parameters),
			'max_error': self.max_error,
			'tolerance': self.tolerance,
			'passed': self.passed
		}
		if timings:
			result['runtime_ms'] = self.runtime_ms
		return result


class PointGenerator():
	"""
	Deterministic points of the upper hemisphere.  Each draw advances the state as
	state = (6364136223846793005 * state + 1442695040888963407) mod 2^64 and returns (state >> 11) / 2^53.
	"""
	def __init__(self, seed):
		self.state = validate_natural('seed', seed) % LCG_MODULUS

	def uniform(self):
		self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) % LCG_MODULUS
		return (self.state >> 11) / float(2 ** 53)

	def spherical_point(self):
		""" chi in [0, pi/2), theta in [0, pi), phi in [0, 2pi), drawn in that order. """
		chi = bases.HALF_PI * self.uniform()
		theta = math.pi * self.uniform()
		phi = 2.0 * math.pi * self.uniform()
		return SpherePoint.spherical(chi, theta, phi)


def _timed(function):
	""" Fills runtime_ms on the CheckReport returned by 'function'. """
	@functools.wraps(function)
	def wrapper(*args, **kwargs):
		start = time.perf_counter()
		report = function(*args, **kwargs)
		report.runtime_ms = 1000.0 * (time.perf_counter() - start)
		logger.debug("%s %s: max_error=%.3g tolerance=%.3g (%.1f ms)", report.check_name, report.parameters,
		             report.max_error, report.tolerance, report.runtime_ms)
		return report
	return wrapper


# ----------------
# Bases
# ----------------

@_timed
def check_orthonormality(basis, max_index, nu, nodes=400):
	"""
	Largest deviation of a Gram matrix from the identity, under the measure each family is
	normalized with:

		spherical_z   sin^2(chi) dchi on [0, pi/2], one Gram matrix per l
		cyl_phi       sin(alpha) cos(alpha) dalpha on [0, pi/2], one per (|m|, n3)
		cyl_k         dphi2 on [-pi/2, pi/2]
		full_3d       product quadrature of every spherical and every cylindrical state with N <= max_index
	"""
	validate_choice('basis', basis, ORTHONORMALITY_BASES)
	max_index = validate_natural('max_index', max_index)
	nu = validate_real('nu', nu, minimum=0.0)
	if max_index > MAX_ORTHONORMALITY_INDEX:
		raise DomainError(f"Orthonormality checks support max_index <= {MAX_ORTHONORMALITY_INDEX}, found {max_index}.")

	if basis == 'spherical_z':
		chi, weights = specfun.gauss_legendre(nodes, 0.0, bases.HALF_PI)
		weights = weights * np.sin(chi) ** 2
		error = 0.0
		for l in range(max_index + 1):
			functions = [ bases.quasiradial_z(SphericalQN(N, l, 0), nu, chi) for N in range(l, max_index + 1, 2) ]
			error = max(error, Internals.gram_defect(np.array(functions), weights))
		tolerance = 1e-8
	elif basis == 'cyl_phi':
		alpha, weights = specfun.gauss_legendre(nodes, 0.0, bases.HALF_PI)
		weights = weights * np.sin(alpha) * np.cos(alpha)
		error = 0.0
		for abs_m in range(max_index + 1):
			for n3 in range(max_index - abs_m + 1):
				functions = [ bases.cyl_phi(CylindricalQN(N, abs_m, n3), nu, alpha)
				              for N in range(abs_m + n3, max_index + 1, 2) ]
				error = max(error, Internals.gram_defect(np.array(functions), weights))
		tolerance = 1e-8
	elif basis == 'cyl_k':
		phi2, weights = specfun.gauss_legendre(nodes, -bases.HALF_PI, bases.HALF_PI)
		functions = [ bases.cyl_k(n3, nu, phi2) for n3 in range(max_index + 1) ]
		error = Internals.gram_defect(np.array(functions), weights)
		tolerance = 1e-8
	else:
		error = max(Internals.spherical_3d_defect(max_index, nu, nodes), Internals.cylindrical_3d_defect(max_index, nu, nodes))
		tolerance = 1e-7

	return CheckReport(check_name='orthonormality', parameters={ 'basis': basis, 'max_index': max_index, 'nu': nu },
	                   max_error=error, tolerance=tolerance)


@_timed
def check_ode_residual(N, l, nu, gridpoints=64, perturb_energy=0.0):
	"""
	Relative residual of the quasiradial equation

		Z'' + 2 cot(chi) Z' + [ eps - l(l+1)/sin^2(chi) - nu(nu+1) tan^2(chi) ] Z = 0,   eps = 2 mass R^2 E / hbar^2

	on an interior grid, with 5-point central differences.  'perturb_energy' scales eps by (1 + perturb_energy).
	"""
	qn = SphericalQN(N, l, 0)
	nu = validate_real('nu', nu, minimum=0.0)
	gridpoints = validate_natural('gridpoints', gridpoints)
	if gridpoints < MIN_ODE_GRIDPOINTS:
		raise UsageError(f"ODE residuals need at least {MIN_ODE_GRIDPOINTS} grid points, found {gridpoints}.")

	params = OscillatorParams.from_nu(nu)
	eps = 2.0 * params.mass * params.R ** 2 * bases.energy(qn.N, params) / params.hbar ** 2
	eps *= 1.0 + perturb_energy

	chi = np.linspace(ODE_MARGIN, bases.HALF_PI - ODE_MARGIN, gridpoints)
	h = ODE_STEP
	z_m2, z_m1, z_0, z_p1, z_p2 = (bases.quasiradial_z(qn, nu, chi + shift * h) for shift in (-2, -1, 0, 1, 2))
	first = (z_m2 - 8.0 * z_m1 + 8.0 * z_p1 - z_p2) / (12.0 * h)
	second = (-z_m2 + 16.0 * z_m1 - 30.0 * z_0 + 16.0 * z_p1 - z_p2) / (12.0 * h * h)

	terms = np.array([
		second,
		2.0 * first / np.tan(chi),
		eps * z_0,
		-l * (l + 1.0) / np.sin(chi) ** 2 * z_0,
		-nu * (nu + 1.0) * np.tan(chi) ** 2 * z_0
	])
	largest = float(np.max(np.abs(terms)))
	error = float(np.max(np.abs(np.sum(terms, axis=0)))) / largest if largest else 0.0

	parameters = { 'N': qn.N, 'l': qn.l, 'nu': nu, 'gridpoints': gridpoints }
	if perturb_energy:
		parameters['perturb_energy'] = perturb_energy
	return CheckReport(check_name='ode_residual', parameters=parameters, max_error=error, tolerance=1e-6)


@_timed
def check_spectrum_identity(N_max=30, nu_list=(0.0, 0.618, 5.0, 1e3), perturb_energy=0.0):
	""" Largest relative deviation of 2 mass R^2 E / hbar^2 + nu^2 + nu + 1 from (N + nu + 2)^2. """
	N_max = validate_natural('N_max', N_max)
	error = 0.0
	for nu in nu_list:
		params = OscillatorParams.from_nu(nu)
		for N in range(N_max + 1):
			scaled = 2.0 * params.mass * params.R ** 2 * bases.energy(N, params) / params.hbar ** 2
			scaled *= 1.0 + perturb_energy
			expected = (N + nu + 2.0) ** 2
			error = max(error, abs(scaled + nu * nu + nu + 1.0 - expected) / expected)
	return CheckReport(check_name='spectrum_identity', parameters={ 'N_max': N_max, 'nu_list': list(nu_list) },
	                   max_error=error, tolerance=1e-12)


@_timed
def check_degeneracy(N_max=30):
	""" Enumerated spherical and cylindrical states against (N+1)(N+2)/2. """
	N_max = validate_natural('N_max', N_max)
	error = 0
	for N in range(N_max + 1):
		expected = bases.degeneracy(N)
		error = max(error, abs(len(bases.spherical_states(N)) - expected), abs(len(bases.cylindrical_states(N)) - expected))
	return CheckReport(check_name='degeneracy', parameters={ 'N_max': N_max }, max_error=error, tolerance=0.0)


# ----------------
# Interbasis
# ----------------

@_timed
def check_reconstruction(N, m, nu, npoints=100, seed=1):
	""" Largest |Psi_spherical - sum over n3 of W Psi_cylindrical| over seeded hemisphere points. """
	N = validate_natural('N', N)
	if N > MAX_RECONSTRUCTION_LEVEL:
		raise DomainError(f"Reconstruction checks support N <= {MAX_RECONSTRUCTION_LEVEL}, found {N}.")
	npoints = validate_natural('npoints', npoints)
	params = OscillatorParams.from_nu(nu)
	block = interbasis.w_block(N, m, nu)
	generator = PointGenerator(seed)

	error = 0.0
	for _ in range(npoints):
		point = generator.spherical_point()
		for l in block.l_index:
			expected = bases.wavefunction('spherical', SphericalQN(N, l, m), params, point)
			error = max(error, abs(interbasis.expand_spherical(block, l, params, point) - expected))
	return CheckReport(check_name='reconstruction',
	                   parameters={ 'N': N, 'm': m, 'nu': block.nu, 'npoints': npoints, 'seed': seed },
	                   max_error=error, tolerance=1e-8)


@_timed
def check_unitarity(N_max=12, nu_list=(0.0, 0.5, 1.0, 3.7, 25.0), method='f43'):
	""" Largest max|W^T W - I| over every block with N <= N_max. """
	N_max = validate_natural('N_max', N_max)
	error = 0.0
	for nu in nu_list:
		for N in range(N_max + 1):
			for m in range(-N, N + 1):
				error = max(error, interbasis.unitarity_defect(interbasis.w_block(N, m, nu, method=method)))
	return CheckReport(check_name='unitarity', parameters={ 'N_max': N_max, 'nu_list': list(nu_list), 'method': method },
	                   max_error=error, tolerance=1e-10)


@_timed
def check_triple_agreement(N_max=12, nu_list=(0.0, 0.5, 1.0, 3.7, 25.0)):
	""" Largest spread between the 4F3 form, the Racah form and the overlap quadrature, entrywise. """
	N_max = validate_natural('N_max', N_max)
	error = 0.0
	for nu in nu_list:
		for N in range(N_max + 1):
			for m in range(-N, N + 1):
				for l, n3 in itertools.product(bases.l_stride(N, m), bases.n3_stride(N, m)):
					values = (interbasis.w_via_4f3(N, l, m, n3, nu), interbasis.w_via_racah(N, l, m, n3, nu),
					          interbasis.overlap_oracle(N, l, m, n3, nu))
					error = max(error, max(values) - min(values))
	return CheckReport(check_name='triple_agreement', parameters={ 'N_max': N_max, 'nu_list': list(nu_list) },
	                   max_error=error, tolerance=1e-9)


# ----------------
# Elliptic
# ----------------

@_timed
def check_elliptic_consistency(N_max=8, nu=0.7, a_values=(-0.5, 0.25, 1.0, 4.0), R=1.0):
	"""
	Largest |lambda(spherical form) - lambda(cylindrical form)| over every (N, m) with N <= N_max.
	A pair of forms that cannot be matched (see elliptic.match_solutions) fails the check outright, and
	so does a spectrum with a != 0 whose smallest relative gap is within DEGENERACY_TOL.
	"""
	N_max = validate_natural('N_max', N_max)
	error = 0.0
	min_gap = math.inf
	for a in a_values:
		params = elliptic.EllipticParams.from_a(a, R)
		for N in range(N_max + 1):
			for m in range(-N, N + 1):
				try:
					solutions = elliptic.solve(N, m, nu, params)
				except ConsistencyError as ex:
					logger.warning("Elliptic forms disagree for N=%s, m=%s, a=%s: %s", N, m, a, ex)
					error = math.inf
					continue
				error = max(error, elliptic.spectral_mismatch(solutions))
				if a != 0.0:
					min_gap = min(min_gap, elliptic.spectral_gap([ each.lambda_q for each in solutions ]))
	if min_gap <= elliptic.DEGENERACY_TOL:
		logger.warning("Elliptic spectrum with a smallest relative gap of %s is not simple.", min_gap)
		error = math.inf
	return CheckReport(check_name='elliptic_consistency',
	                   parameters={ 'N_max': N_max, 'nu': nu, 'a_values': list(a_values), 'R': R,
	                                'min_gap': min_gap },
	                   max_error=error, tolerance=1e-9)


@_timed
def check_recurrence_residuals(N_max=8, nu=1.3, a_values=(-0.5, 0.25, 1.0, 4.0), R=1.0):
	""" Largest relative residual of both three-term recurrences over every matched elliptic solution. """
	N_max = validate_natural('N_max', N_max)
	error = 0.0
	for a in a_values:
		params = elliptic.EllipticParams.from_a(a, R)
		for N in range(N_max + 1):
			for m in range(0, N + 1):
				for solution in elliptic.solve(N, m, nu, params):
					error = max(error, elliptic.recurrence_residual_spherical(solution),
					            elliptic.recurrence_residual_cylindrical(solution))
	return CheckReport(check_name='recurrence_residuals',
	                   parameters={ 'N_max': N_max, 'nu': nu, 'a_values': list(a_values), 'R': R },
	                   max_error=error, tolerance=1e-10)


# ----------------
# Limits
# ----------------

DEFAULT_SCHEDULES = {
	'flat_energy': (1e2, 1e3),
	'flat_w': (1e4, 1e5, 1e6),
	'free_w': (1e-2, 1e-4, 0.0),
	'flat_basis': (10.0, 100.0, 1000.0),
	'free_basis': (1e-2, 1e-4, 0.0)
}

LIMIT_TOLERANCES = {
	'flat_energy': 1e-4,
	'flat_w': 5e-3,
	'free_w': 1e-10,
	'flat_basis': 1e-2,
	'free_basis': 1e-10
}

# Accepted error ratio per decade of the limit parameter: 1/R^2 within LIMIT_SLACK, 1/nu in [3, 30].
LIMIT_RATES = {
	'flat_energy': (100.0 / LIMIT_SLACK, 100.0 * LIMIT_SLACK),
	'flat_w': (3.0, 30.0)
}


@_timed
def check_limits(kind, schedule=None):
	"""
	Errors against a limiting form along a schedule of the limit parameter.  Flat-space kinds take an
	ascending schedule (nu for flat_w, R otherwise); free-motion kinds take nu descending towards 0.
	The check passes when no error exceeds the one before it (errors below LIMIT_FLOOR count as
	converged) and the last error is within the kind's tolerance.  Kinds listed in LIMIT_RATES also
	need an error ratio per decade inside their band: about 10 for flat_w (1/nu) and 100 for
	flat_energy (1/R^2).  A schedule that violates these shapes reports an infinite error.
	"""
	validate_choice('kind', kind, LIMIT_KINDS)
	schedule = tuple(float(value) for value in (schedule if schedule is not None else DEFAULT_SCHEDULES[kind]))
	if not schedule:
		raise UsageError("A limit schedule needs at least one value.")
	ascending = kind.startswith('flat')
	ordered = all((later > earlier) if ascending else (later < earlier) for earlier, later in zip(schedule, schedule[1:]))
	if not ordered:
		raise UsageError(f"Schedule for '{kind}' must be strictly {'ascending' if ascending else 'descending'}, found {list(schedule)}.")

	error_of = getattr(Internals, f"limit_error_{kind}")
	errors = [ error_of(value) for value in schedule ]
	shape_ok = all(later <= earlier or later <= LIMIT_FLOOR for earlier, later in zip(errors, errors[1:]))
	if kind in LIMIT_RATES:
		lowest, highest = LIMIT_RATES[kind]
		for (low, earlier), (high, later) in zip(zip(schedule, errors), zip(schedule[1:], errors[1:])):
			if later <= 0.0:
				shape_ok = False
				continue
			per_decade = (earlier / later) ** (1.0 / math.log10(high / low))
			shape_ok = shape_ok and lowest <= per_decade <= highest

	logger.debug("Limit '%s' errors along %s: %s", kind, schedule, errors)
	max_error = errors[-1] if shape_ok else math.inf
	return CheckReport(check_name='limits', parameters={ 'kind': kind, 'schedule': list(schedule), 'errors': errors },
	                   max_error=max_error, tolerance=LIMIT_TOLERANCES[kind])


# ----------------
# Kernel identities
# ----------------

@_timed
def check_saalschutz_symmetry(seed=20240611, samples=200):
	""" Saalschutz transformation of balanced 4F3 series on seeded parameters, relative to the absolute terms. """
	generator = PointGenerator(seed)
	error = 0.0
	checked = 0
	while checked < samples:
		n = int(7 * generator.uniform())
		b, c = (0.5 + 2.5 * generator.uniform() for _ in range(2))
		e, f, g = (1.0 + 3.0 * generator.uniform() for _ in range(3))
		d = e + f + g + n - 1.0 - b - c
		if any(abs(x - round(x)) < 0.05 and round(x) <= 0 for x in (b - f - n + 1.0, b - g - n + 1.0)):
			continue
		spec = specfun.TerminatingSeriesSpec(numerators=(-n, b, c, d), denominators=(e, f, g))
		prefactor, transformed = specfun.saalschutz_transform(spec)
		left, right = specfun.hyp_terms(spec), specfun.hyp_terms(transformed)
		scale = sum(abs(t) for t in left) + abs(prefactor) * sum(abs(t) for t in right)
		error = max(error, abs(math.fsum(left) - prefactor * math.fsum(right)) / scale)
		checked += 1
	return CheckReport(check_name='saalschutz_symmetry', parameters={ 'seed': seed, 'samples': samples },
	                   max_error=error, tolerance=1e-12)


@_timed
def check_racah_recurrence(max_momentum=3):
	""" Three-term recurrence of Racah coefficients on integer momenta, relative to max(1, absolute terms). """
	max_momentum = validate_natural('max_momentum', max_momentum)
	error = 0.0
	momenta = range(max_momentum + 1)
	for a, b, d, l, f in itertools.product(momenta, repeat=5):
		if not (abs(a - l) <= f <= a + l and abs(d - b) <= f <= d + b):
			continue
		for c in range(max(abs(a - b), abs(d - l)), min(a + b, d + l) + 1):
			scale = max(1.0, sum(abs(term) for term in specfun.racah_recurrence_terms(a, b, c, d, l, f)))
			error = max(error, abs(specfun.racah_recurrence_residual(a, b, c, d, l, f)) / scale)
	return CheckReport(check_name='racah_recurrence', parameters={ 'max_momentum': max_momentum },
	                   max_error=error, tolerance=1e-12)


@_timed
def check_jacobi_identities(moduli=(0.0, 0.3, 0.8, 0.99, 1.0), points=201):
	""" sn^2 + cn^2 = 1 and dn^2 + k^2 sn^2 = 1 on a grid over u in [-5, 5]. """
	error = 0.0
	u = np.linspace(-5.0, 5.0, points)
	for k in moduli:
		sn, cn, dn = specfun.jacobi_elliptic(u, k)
		error = max(error, float(np.max(np.abs(sn ** 2 + cn ** 2 - 1.0))), float(np.max(np.abs(dn ** 2 + k * k * sn ** 2 - 1.0))))
	return CheckReport(check_name='jacobi_identities', parameters={ 'moduli': list(moduli), 'points': points },
	                   max_error=error, tolerance=1e-13)


def check_kernel_identities(seed=20240611, samples=200):
	""" The kernel identity checks, one report each. """
	return [ check_saalschutz_symmetry(seed=seed, samples=samples), check_racah_recurrence(), check_jacobi_identities() ]


# ----------------
# Suites
# ----------------

class VerifySuite():
	"""
	Runs the checks of one suite in a fixed order and collects their reports.
	"""

	def __init__(self, suite='all', perturb_energy=0.0, verbose=False):
		self.suite = validate_choice('suite', suite, SUITES)
		self.perturb_energy = validate_real('perturb_energy', perturb_energy)
		self.verbose = verbose
		self.reports = []  # this will get populated as we run.

	@staticmethod
	def run_all(suite='all', perturb_energy=0.0, verbose=False):
		""" Run every check of 'suite' and return the list of CheckReports. """
		instance = VerifySuite(suite=suite, perturb_energy=perturb_energy, verbose=verbose)
		if instance.suite in ('all', 'kernel'):
			instance.run_kernel()
		if instance.suite in ('all', 'bases'):
			instance.run_bases()
		if instance.suite in ('all', 'interbasis'):
			instance.run_interbasis()
		if instance.suite in ('all', 'elliptic'):
			instance.run_elliptic()
		if instance.suite in ('all', 'limits'):
			instance.run_limits()
		if instance.verbose:
			failed = [ report for report in instance.reports if not report.passed ]
			print(f"Suite '{instance.suite}': {len(instance.reports) - len(failed)} of {len(instance.reports)} checks passed.")
		return instance.reports

	def run_kernel(self):
		for report in check_kernel_identities():
			self.record(report)

	def run_bases(self):
		self.record(check_orthonormality('spherical_z', 16, 0.0))
		self.record(check_orthonormality('cyl_phi', 16, 0.618))
		self.record(check_orthonormality('cyl_k', 16, 25.0))
		self.record(check_orthonormality('full_3d', 4, 1.0))
		self.record(check_ode_residual(0, 0, 1.0, perturb_energy=self.perturb_energy))
		self.record(check_ode_residual(8, 4, 0.618, perturb_energy=self.perturb_energy))
		self.record(check_spectrum_identity(perturb_energy=self.perturb_energy))
		self.record(check_degeneracy())

	def run_interbasis(self):
		self.record(check_unitarity())
		self.record(check_triple_agreement())
		self.record(check_reconstruction(6, 0, 2.0))
		self.record(check_reconstruction(8, 5, 0.0))

	def run_elliptic(self):
		self.record(check_elliptic_consistency())
		self.record(check_recurrence_residuals())

	def run_limits(self):
		for kind in LIMIT_KINDS:
			self.record(check_limits(kind))

	def record(self, report):
		self.reports.append(report)
		if self.verbose:
			mark = "\u2713" if report.passed else "\u2717"
			print(f"{mark} {report.check_name} {report.parameters}: max_error={report.max_error:.3g} "
			      f"(tolerance {report.tolerance:.1g}, {report.runtime_ms:.1f} ms)")


def run_suite(suite='all', perturb_energy=0.0, verbose=False):
	return VerifySuite.run_all(suite=suite, perturb_energy=perturb_energy, verbose=verbose)


class Internals():

	@staticmethod
	def gram_defect(values, weights):
		""" max|G - I| for G = sum over nodes of weight * conj(f_a) f_b; rows of 'values' are functions. """
		gram = (np.conj(values) * weights) @ values.T
		return float(np.max(np.abs(gram - np.eye(len(values)))))

	@staticmethod
	def spherical_3d_defect(max_index, nu, nodes):
		""" Z(chi) Y_lm(theta, phi) with measure sin^2(chi) dchi d(cos theta) dphi. """
		chi, chi_weights = specfun.gauss_legendre(nodes, 0.0, bases.HALF_PI)
		chi_weights = chi_weights * np.sin(chi) ** 2
		cos_theta, theta_weights = specfun.gauss_legendre(max_index + 4, -1.0, 1.0)
		theta = np.arccos(cos_theta)
		phi, phi_weights = Internals.periodic_rule(2 * max_index + 4)
		theta_grid, phi_grid = np.meshgrid(theta, phi, indexing='ij')
		angular_weights = np.outer(theta_weights, phi_weights).ravel()

		states = [ qn for N in range(max_index + 1) for qn in bases.spherical_states(N) ]
		radial = np.array([ bases.quasiradial_z(qn, nu, chi) for qn in states ])
		angular = np.array([ specfun.spherical_harmonic(qn.l, qn.m, theta_grid, phi_grid).ravel() for qn in states ])
		gram = ((radial * chi_weights) @ radial.T) * ((np.conj(angular) * angular_weights) @ angular.T)
		return float(np.max(np.abs(gram - np.eye(len(states)))))

	@staticmethod
	def cylindrical_3d_defect(max_index, nu, nodes):
		""" Phi(alpha) K(phi2) e^(i m phi1) / sqrt(2 pi) with measure sin(alpha) cos(alpha) dalpha dphi1 dphi2. """
		alpha, alpha_weights = specfun.gauss_legendre(nodes, 0.0, bases.HALF_PI)
		alpha_weights = alpha_weights * np.sin(alpha) * np.cos(alpha)
		phi2, phi2_weights = specfun.gauss_legendre(nodes, -bases.HALF_PI, bases.HALF_PI)
		phi1, phi1_weights = Internals.periodic_rule(2 * max_index + 4)

		states = [ qn for N in range(max_index + 1) for qn in bases.cylindrical_states(N) ]
		radial = np.array([ bases.cyl_phi(qn, nu, alpha) for qn in states ])
		vertical = np.array([ bases.cyl_k(qn.n3, nu, phi2) for qn in states ])
		azimuthal = np.array([ np.exp(1j * qn.m * phi1) / math.sqrt(2.0 * math.pi) for qn in states ])
		gram = (((radial * alpha_weights) @ radial.T) * ((vertical * phi2_weights) @ vertical.T)
		        * ((np.conj(azimuthal) * phi1_weights) @ azimuthal.T))
		return float(np.max(np.abs(gram - np.eye(len(states)))))

	@staticmethod
	def periodic_rule(npoints):
		""" Equally spaced nodes on [0, 2pi); exact for trigonometric polynomials of degree < npoints. """
		nodes = 2.0 * math.pi * np.arange(npoints) / npoints
		return nodes, np.full(npoints, 2.0 * math.pi / npoints)

	@staticmethod
	def limit_error_flat_energy(R, N=2):
		""" Relative distance of E_N from hbar omega (N + 3/2), with mass = hbar = omega = 1. """
		params = OscillatorParams(R=R, omega=1.0)
		flat = N + 1.5
		return abs(bases.energy(N, params) - flat) / flat

	@staticmethod
	def limit_error_flat_w(nu, N=2, l=0, m=0, n3=2):
		return abs(interbasis.w_via_4f3(N, l, m, n3, nu) - interbasis.w_limit('flat_cg', N, l, m, n3))

	@staticmethod
	def limit_error_free_w(nu, N=4):
		error = 0.0
		for m in range(-N, N + 1):
			for l, n3 in itertools.product(bases.l_stride(N, m), bases.n3_stride(N, m)):
				error = max(error, abs(interbasis.w_via_4f3(N, l, m, n3, nu) - interbasis.w_limit('free_racah', N, l, m, n3)))
		return error

	@staticmethod
	def limit_error_flat_basis(R):
		""" R^(-3/2) Z(r / R) against the flat radial function on r in [0, 5], with mass = hbar = omega = 1. """
		params = OscillatorParams(R=R, omega=1.0)
		r = np.linspace(0.0, 5.0, 51)
		error = 0.0
		for N, l in ((0, 0), (1, 1), (2, 0), (4, 2)):
			qn = SphericalQN(N, l, 0)
			curved = bases.quasiradial_z(qn, params.nu, r / R) / R ** 1.5
			error = max(error, float(np.max(np.abs(curved - bases.limit_reference('flat_radial', qn, params, r)))))
		return error

	@staticmethod
	def limit_error_free_basis(nu, N_max=5):
		""" Z, K and Phi at small nu against their free-motion forms. """
		chi = np.linspace(0.0, bases.HALF_PI, 41)
		phi2 = np.linspace(-bases.HALF_PI, bases.HALF_PI, 31)
		alpha = np.linspace(0.0, bases.HALF_PI, 31)
		free = OscillatorParams()
		error = 0.0
		for N in range(N_max + 1):
			for qn in bases.spherical_states(N):
				if qn.m:
					continue
				reference = bases.limit_reference('free_z', qn, free, chi)
				error = max(error, float(np.max(np.abs(bases.quasiradial_z(qn, nu, chi) - reference))))
			for qn in bases.cylindrical_states(N):
				free_k = (-1) ** qn.n3 * bases.limit_reference('free_k', qn, free, phi2)
				free_phi = math.sqrt(2.0) * bases.limit_reference('free_phi', qn, free, alpha)
				error = max(error, float(np.max(np.abs(bases.cyl_k(qn.n3, nu, phi2) - free_k))),
				            float(np.max(np.abs(bases.cyl_phi(qn, nu, alpha) - free_phi))))
		return error
