""" oscsphere/bases.py """

# Standard Library
import math
from dataclasses import dataclass

# Third Party
import numpy as np
from scipy import special

# Oscsphere
from oscsphere import specfun
from oscsphere.core import (DomainError, SingularityError, UsageError, validate_choice, validate_integer,
                            validate_natural, validate_real)
from oscsphere.logging_config import get_logger

logger = get_logger(__name__)

COORDINATE_SYSTEMS = ('spherical', 'cylindrical', 'elliptic', 'ambient')
WAVEFUNCTION_KINDS = ('spherical', 'cylindrical')
LIMIT_KINDS = ('flat_radial', 'flat_cyl_rho', 'flat_cyl_z', 'free_z', 'free_k', 'free_phi')

# Coordinates may overshoot their ranges by this much (rounding in conversions).
RANGE_TOL = 1e-12
HALF_PI = 0.5 * math.pi


# ----------------
# Parameters and quantum numbers
# ----------------

@dataclass(frozen=True)
class OscillatorParams():
	"""
	Physical constants of the oscillator.  omega = 0 is free motion on the sphere.
	When 'nu_exact' is set (see from_nu) it is returned by nu_of() unchanged.
	"""
	R: float = 1.0
	mass: float = 1.0
	omega: float = 0.0
	hbar: float = 1.0
	nu_exact: float = None

	def __post_init__(self):
		object.__setattr__(self, 'R', validate_real('R', self.R, minimum=0.0, strict=True))
		object.__setattr__(self, 'mass', validate_real('mass', self.mass, minimum=0.0, strict=True))
		object.__setattr__(self, 'hbar', validate_real('hbar', self.hbar, minimum=0.0, strict=True))
		object.__setattr__(self, 'omega', validate_real('omega', self.omega, minimum=0.0))
		if self.nu_exact is not None:
			object.__setattr__(self, 'nu_exact', validate_real('nu', self.nu_exact, minimum=0.0))

	@staticmethod
	def from_nu(nu, R=1.0, mass=1.0, hbar=1.0):
		""" Parameters whose derived nu is exactly 'nu'; omega is back-computed. """
		nu = validate_real('nu', nu, minimum=0.0)
		omega = hbar * math.sqrt(nu * (nu + 1.0)) / (mass * R * R)
		return OscillatorParams(R=R, mass=mass, omega=omega, hbar=hbar, nu_exact=nu)

	@property
	def nu(self):
		return nu_of(self)

	@property
	def flat_density(self):
		""" lambda = mass * omega / hbar """
		return self.mass * self.omega / self.hbar


@dataclass(frozen=True)
class SphericalQN():
	N: int
	l: int
	m: int

	def __post_init__(self):
		object.__setattr__(self, 'N', validate_natural('N', self.N))
		object.__setattr__(self, 'l', validate_natural('l', self.l))
		object.__setattr__(self, 'm', validate_integer('m', self.m))
		if self.l > self.N or (self.N - self.l) % 2:
			raise DomainError(f"Spherical quantum numbers need N - l even and nonnegative, found N={self.N}, l={self.l}.")
		if abs(self.m) > self.l:
			raise DomainError(f"Spherical quantum numbers need |m| <= l, found l={self.l}, m={self.m}.")

	@property
	def n_r(self):
		return (self.N - self.l) // 2


@dataclass(frozen=True)
class CylindricalQN():
	N: int
	m: int
	n3: int

	def __post_init__(self):
		object.__setattr__(self, 'N', validate_natural('N', self.N))
		object.__setattr__(self, 'm', validate_integer('m', self.m))
		object.__setattr__(self, 'n3', validate_natural('n3', self.n3))
		remainder = self.N - abs(self.m) - self.n3
		if remainder < 0 or remainder % 2:
			raise DomainError(f"Cylindrical quantum numbers need N - |m| - n3 even and nonnegative, "
			                  f"found N={self.N}, m={self.m}, n3={self.n3}.")

	@property
	def n(self):
		return (self.N - abs(self.m) - self.n3) // 2


def nu_of(params):
	"""
	nu = sqrt(1/4 + x^2) - 1/2 with x = mass omega R^2 / hbar, written as 2x^2 / (sqrt(1 + 4x^2) + 1)
	so that small and large x keep full precision.
	"""
	if params.nu_exact is not None:
		return params.nu_exact
	x = params.mass * params.omega * params.R ** 2 / params.hbar
	return 2.0 * x * x / (math.sqrt(1.0 + 4.0 * x * x) + 1.0)


def energy(N, params):
	""" E_N = hbar^2 / (2 mass R^2) [ (N+1)(N+3) + 2 nu (N + 3/2) ] """
	N = validate_natural('N', N)
	nu = nu_of(params)
	scale = params.hbar ** 2 / (2.0 * params.mass * params.R ** 2)
	return scale * ((N + 1.0) * (N + 3.0) + 2.0 * nu * (N + 1.5))


def degeneracy(N):
	N = validate_natural('N', N)
	return (N + 1) * (N + 2) // 2


def spherical_states(N):
	""" Every SphericalQN of level N, ordered by l then m. """
	N = validate_natural('N', N)
	return [ SphericalQN(N, l, m) for l in range(N % 2, N + 1, 2) for m in range(-l, l + 1) ]


def cylindrical_states(N):
	""" Every CylindricalQN of level N, ordered by m then n3. """
	N = validate_natural('N', N)
	return [ CylindricalQN(N, m, n3) for m in range(-N, N + 1) for n3 in range((N - abs(m)) % 2, N - abs(m) + 1, 2) ]


def l_stride(N, m):
	""" l values coupled to (N, m): l >= |m|, N - l even. """
	start = abs(m) + (N - abs(m)) % 2
	return list(range(start, N + 1, 2))


def n3_stride(N, m):
	""" n3 values coupled to (N, m): N - |m| - n3 even. """
	return list(range((N - abs(m)) % 2, N - abs(m) + 1, 2))


def integrals_of_motion(qn, nu=0.0):
	"""
	Eigenvalues carried by a basis state: L^2 and L3 for the spherical basis; L3 and the
	cylindrical constant of motion D33 = (n3 + nu + 1)^2 for the cylindrical basis.
	"""
	if isinstance(qn, SphericalQN):
		return { 'L2': float(qn.l * (qn.l + 1)), 'L3': float(qn.m) }
	if isinstance(qn, CylindricalQN):
		return { 'L3': float(qn.m), 'D33': (qn.n3 + nu + 1.0) ** 2 }
	raise UsageError(f"Expected SphericalQN or CylindricalQN, found {type(qn).__name__}.")


# ----------------
# Closed-form basis functions
# ----------------

def _power_of_cos(angle, exponent):
	""" cos(angle)^exponent for angle in [-pi/2, pi/2], exactly zero where the cosine vanishes. """
	cosine = np.cos(angle)
	inside = (cosine > 0.0) & (np.abs(angle) < HALF_PI - RANGE_TOL)
	safe = np.where(inside, cosine, 1.0)
	return np.where(inside, np.exp(exponent * np.log(safe)), 0.0)


def _check_range(name, values, lower, upper):
	values = np.asarray(values, dtype=float)
	if np.any(values < lower - RANGE_TOL) or np.any(values > upper + RANGE_TOL):
		raise DomainError(f"Argument '{name}' must lie in [{lower}, {upper}].")


def log_norm_z(qn, nu):
	""" ln of the positive normalization constant of quasiradial_z. """
	N, l, n_r = qn.N, qn.l, qn.n_r
	return 0.5 * float(math.log(2.0 * (N + nu + 2.0)) + special.gammaln(n_r + 1.0)
	                   + special.gammaln(0.5 * (N + l) + nu + 2.0) - special.gammaln(0.5 * (N + l + 3.0))
	                   - special.gammaln(0.5 * (N - l + 3.0) + nu))


def log_norm_phi(qn, nu):
	N, abs_m, n3, n = qn.N, abs(qn.m), qn.n3, qn.n
	return 0.5 * float(math.log(2.0 * (N + nu + 2.0)) + special.gammaln(n + 1.0)
	                   + special.gammaln(0.5 * (N + abs_m + n3) + nu + 2.0)
	                   - special.gammaln(0.5 * (N + abs_m - n3) + 1.0)
	                   - special.gammaln(0.5 * (N - abs_m + n3) + nu + 2.0))


def log_norm_k(n3, nu):
	return 0.5 * float(math.log(n3 + nu + 1.0) + special.gammaln(n3 + 2.0 * nu + 2.0) + special.gammaln(n3 + 1.0)
	                   - (2.0 * nu + 1.0) * math.log(2.0) - 2.0 * special.gammaln(n3 + nu + 1.5))


def quasiradial_z(qn, nu, chi):
	"""
	Z(chi) = C sin^l(chi) cos^(nu+1)(chi) P_{n_r}^(l+1/2, nu+1/2)(cos 2chi), normalized with weight sin^2(chi)
	on [0, pi/2].
	"""
	nu = validate_real('nu', nu, minimum=0.0)
	_check_range('chi', chi, 0.0, HALF_PI)
	chi_array = np.clip(np.asarray(chi, dtype=float), 0.0, HALF_PI)
	value = (math.exp(log_norm_z(qn, nu)) * np.sin(chi_array) ** qn.l * _power_of_cos(chi_array, nu + 1.0)
	         * specfun.jacobi_p(qn.n_r, qn.l + 0.5, nu + 0.5, np.cos(2.0 * chi_array)))
	return _like_input(value, chi)


def cyl_phi(qn, nu, alpha):
	"""
	Phi(alpha) = C sin^|m|(alpha) cos^(n3+nu+1)(alpha) P_n^(|m|, n3+nu+1)(cos 2alpha), normalized with weight
	sin(alpha) cos(alpha) on [0, pi/2].
	"""
	nu = validate_real('nu', nu, minimum=0.0)
	_check_range('alpha', alpha, 0.0, HALF_PI)
	abs_m, n3 = abs(qn.m), qn.n3
	alpha_array = np.clip(np.asarray(alpha, dtype=float), 0.0, HALF_PI)
	value = (math.exp(log_norm_phi(qn, nu)) * np.sin(alpha_array) ** abs_m * _power_of_cos(alpha_array, n3 + nu + 1.0)
	         * specfun.jacobi_p(qn.n, abs_m, n3 + nu + 1.0, np.cos(2.0 * alpha_array)))
	return _like_input(value, alpha)


def cyl_k(n3, nu, phi2):
	"""
	K(phi2) = C cos^(nu+1)(phi2) P_n3^(nu+1/2, nu+1/2)(sin phi2), normalized with unit weight on [-pi/2, pi/2].
	"""
	n3 = validate_natural('n3', n3)
	nu = validate_real('nu', nu, minimum=0.0)
	_check_range('phi2', phi2, -HALF_PI, HALF_PI)
	phi2_array = np.clip(np.asarray(phi2, dtype=float), -HALF_PI, HALF_PI)
	value = (math.exp(log_norm_k(n3, nu)) * _power_of_cos(phi2_array, nu + 1.0)
	         * specfun.jacobi_p(n3, nu + 0.5, nu + 0.5, np.sin(phi2_array)))
	return _like_input(value, phi2)


def wavefunction(kind, qn, params, point):
	"""
	Full wavefunction at a point of the upper hemisphere, normalized against R^3 times the
	angular volume element.
	"""
	validate_choice('kind', kind, WAVEFUNCTION_KINDS)
	nu = nu_of(params)
	scale = params.R ** -1.5
	if kind == 'spherical':
		if not isinstance(qn, SphericalQN):
			raise UsageError("Spherical wavefunctions need a SphericalQN.")
		chi, theta, phi = _in_system(point, 'spherical', params.R).coords
		return complex(scale * quasiradial_z(qn, nu, chi) * specfun.spherical_harmonic(qn.l, qn.m, theta, phi))

	if not isinstance(qn, CylindricalQN):
		raise UsageError("Cylindrical wavefunctions need a CylindricalQN.")
	alpha, phi1, phi2 = _in_system(point, 'cylindrical', params.R).coords
	azimuthal = complex(math.cos(qn.m * phi1), math.sin(qn.m * phi1)) / math.sqrt(2.0 * math.pi)
	return complex(scale * cyl_phi(qn, nu, alpha) * cyl_k(qn.n3, nu, phi2) * azimuthal)


def _in_system(point, system, R):
	if point.system == system:
		return point
	return from_ambient(to_ambient(point, R), system)


# ----------------
# Points and coordinate maps
# ----------------

@dataclass(frozen=True)
class SpherePoint():
	"""
	A point of the upper hemisphere.  'coords' holds (chi, theta, phi), (alpha, phi1, phi2),
	(mu, nu, phi) or (q0, q1, q2, q3) depending on 'system'; 'k' is the elliptic modulus.
	"""
	system: str
	coords: tuple
	k: float = None

	def __post_init__(self):
		validate_choice('system', self.system, COORDINATE_SYSTEMS)
		coords = tuple(validate_real('coords', value) for value in self.coords)
		object.__setattr__(self, 'coords', coords)
		expected = 4 if self.system == 'ambient' else 3
		if len(coords) != expected:
			raise UsageError(f"A {self.system} point needs {expected} coordinates, found {len(coords)}.")

		if self.system == 'spherical':
			_check_range('chi', coords[0], 0.0, HALF_PI)
			_check_range('theta', coords[1], 0.0, math.pi)
		elif self.system == 'cylindrical':
			_check_range('alpha', coords[0], 0.0, HALF_PI)
			_check_range('phi2', coords[2], -HALF_PI, HALF_PI)
		elif self.system == 'elliptic':
			if self.k is None:
				raise UsageError("An elliptic point needs its modulus 'k'.")
			object.__setattr__(self, 'k', validate_real('k', self.k, minimum=0.0))
			if self.k > 1.0:
				raise DomainError(f"Elliptic modulus must lie in [0, 1], found {self.k}.")
			k_full, k_prime_full = _quarter_periods(self.k)
			if math.isfinite(k_full):
				_check_range('mu', coords[0], -k_full, k_full)
			if math.isfinite(k_prime_full):
				_check_range('nu', coords[1], 0.0, 2.0 * k_prime_full)
			elif coords[1] < -RANGE_TOL:
				raise DomainError("Elliptic coordinate 'nu' must be nonnegative.")
		else:
			if coords[0] < -RANGE_TOL * max(1.0, self.radius):
				raise DomainError(f"Ambient point lies in the lower hemisphere (q0 = {coords[0]}).")

	@staticmethod
	def spherical(chi, theta, phi):
		return SpherePoint('spherical', (chi, theta, phi))

	@staticmethod
	def cylindrical(alpha, phi1, phi2):
		return SpherePoint('cylindrical', (alpha, phi1, phi2))

	@staticmethod
	def elliptic(mu, nu, phi, k):
		return SpherePoint('elliptic', (mu, nu, phi), k=k)

	@staticmethod
	def ambient(q0, q1, q2, q3):
		return SpherePoint('ambient', (q0, q1, q2, q3))

	@property
	def radius(self):
		""" Euclidean norm; only meaningful for ambient points. """
		return math.sqrt(math.fsum(value * value for value in self.coords))


def _quarter_periods(k):
	""" (K(k), K(k')), infinite where the modulus is 1. """
	k_prime = math.sqrt(max(0.0, (1.0 - k) * (1.0 + k)))
	k_full = specfun.complete_elliptic_k(k) if k < 1.0 else math.inf
	k_prime_full = specfun.complete_elliptic_k(k_prime) if k_prime < 1.0 else math.inf
	return k_full, k_prime_full


def to_ambient(point, R):
	""" Embed a point into R^4 as (q0, q1, q2, q3) with q0^2 + ... + q3^2 = R^2. """
	R = validate_real('R', R, minimum=0.0, strict=True)
	if point.system == 'ambient':
		if abs(point.radius - R) > 1e-12 * R:
			raise DomainError(f"Ambient point has norm {point.radius}, expected {R}.")
		return point

	if point.system == 'spherical':
		chi, theta, phi = point.coords
		q = (R * math.cos(chi), R * math.sin(chi) * math.sin(theta) * math.cos(phi),
		     R * math.sin(chi) * math.sin(theta) * math.sin(phi), R * math.sin(chi) * math.cos(theta))
	elif point.system == 'cylindrical':
		alpha, phi1, phi2 = point.coords
		q = (R * math.cos(alpha) * math.cos(phi2), R * math.sin(alpha) * math.cos(phi1),
		     R * math.sin(alpha) * math.sin(phi1), R * math.cos(alpha) * math.sin(phi2))
	else:
		mu, nu, phi = point.coords
		k = point.k
		k_prime = math.sqrt(max(0.0, (1.0 - k) * (1.0 + k)))
		sn_mu, cn_mu, dn_mu = specfun.jacobi_elliptic(mu, k)
		sn_nu, cn_nu, dn_nu = specfun.jacobi_elliptic(nu, k_prime)
		q = (R * dn_mu * sn_nu, R * sn_mu * dn_nu * math.cos(phi),
		     R * sn_mu * dn_nu * math.sin(phi), R * cn_mu * cn_nu)
	return SpherePoint('ambient', q)


def from_ambient(q, target, k=None):
	"""
	Coordinates of an ambient point in the 'target' system.  Azimuths are returned in [0, 2pi);
	elliptic points come back with mu in [0, K] (the azimuth absorbs the sign of sn mu).
	"""
	validate_choice('target', target, COORDINATE_SYSTEMS)
	if not isinstance(q, SpherePoint):
		q = SpherePoint('ambient', tuple(q))
	if q.system != 'ambient':
		raise UsageError(f"from_ambient expects an ambient point, found a {q.system} point.")
	q0, q1, q2, q3 = q.coords
	R = q.radius
	if R <= 0.0:
		raise DomainError("Ambient point at the origin does not lie on a sphere.")
	if target == 'ambient':
		return q

	rho = math.hypot(q1, q2)
	azimuth = math.atan2(q2, q1) % (2.0 * math.pi)
	if target == 'spherical':
		chi = math.atan2(math.sqrt(rho * rho + q3 * q3), q0)
		theta = math.atan2(rho, q3)
		return SpherePoint('spherical', (min(chi, HALF_PI), theta, azimuth))
	if target == 'cylindrical':
		alpha = math.atan2(rho, math.hypot(q0, q3))
		phi2 = math.atan2(q3, max(q0, 0.0))
		return SpherePoint('cylindrical', (alpha, azimuth, phi2))

	if k is None:
		raise UsageError("Conversion to elliptic coordinates needs the modulus 'k'.")
	k = validate_real('k', k, minimum=0.0)
	if k >= 1.0:
		raise DomainError(f"Conversion to elliptic coordinates needs 0 <= k < 1, found {k}.")
	k_prime = math.sqrt((1.0 - k) * (1.0 + k))
	p_val = (rho / R) ** 2
	q0_sq, q3_sq = (q0 / R) ** 2, (q3 / R) ** 2
	b_val = k * k + 1.0 - q0_sq - k * k * q3_sq
	discriminant = math.sqrt(max(0.0, b_val * b_val - 4.0 * k * k * p_val))
	denominator = b_val + discriminant
	s_val = min(1.0, 2.0 * p_val / denominator) if denominator > 0.0 else 0.0
	t_val = min(1.0, q0_sq / (1.0 - k * k * s_val))
	mu = float(special.ellipkinc(math.asin(math.sqrt(s_val)), k * k))
	nu = float(special.ellipkinc(math.asin(math.sqrt(t_val)), k_prime * k_prime))
	if q3 < 0.0:
		if k_prime >= 1.0:
			raise DomainError("With k = 0 the elliptic system only covers q3 >= 0.")
		nu = 2.0 * specfun.complete_elliptic_k(k_prime) - nu
	return SpherePoint('elliptic', (mu, nu, azimuth), k=k)


def potential(point, params):
	"""
	V = mass omega^2 R^2 / 2 * f, where f = R^2/q0^2 - 1 in every coordinate system:
	tan^2(chi), 1/(cos^2(alpha) cos^2(phi2)) - 1, or 1/(dn^2(mu) sn^2(nu)) - 1.
	"""
	if point.system == 'spherical':
		cos_value = math.cos(point.coords[0])
	elif point.system == 'cylindrical':
		cos_value = math.cos(point.coords[0]) * math.cos(point.coords[2])
	elif point.system == 'elliptic':
		k = point.k
		k_prime = math.sqrt(max(0.0, (1.0 - k) * (1.0 + k)))
		_, _, dn_mu = specfun.jacobi_elliptic(point.coords[0], k)
		sn_nu, _, _ = specfun.jacobi_elliptic(point.coords[1], k_prime)
		cos_value = dn_mu * sn_nu
	else:
		cos_value = point.coords[0] / point.radius

	if abs(cos_value) <= RANGE_TOL:
		raise SingularityError(f"The oscillator potential is singular on the equator ({point.system} point {point.coords}).")
	strength = 0.5 * params.mass * params.omega ** 2 * params.R ** 2
	return strength * (1.0 / (cos_value * cos_value) - 1.0)


# ----------------
# Flat-space and free-motion reference functions
# ----------------

def limit_reference(kind, qn, params, coordinate):
	"""
	Closed-form limiting functions used to test convergence:

		flat_radial   R_Nl(r), normalized with r^2 dr, density lambda = mass omega / hbar
		flat_cyl_rho  planar radial factor in rho, normalized with rho d rho
		flat_cyl_z    Hermite factor in z, normalized with dz
		free_z        nu = 0 quasiradial function in Gegenbauer form (J = N + 1)
		free_k        sqrt(2/pi) sin((n3+1)(phi2 + pi/2))
		free_phi      nu = 0 cylindrical factor, which differs from cyl_phi by a factor sqrt(2)
	"""
	validate_choice('kind', kind, LIMIT_KINDS)
	x = np.asarray(coordinate, dtype=float)

	if kind == 'flat_radial':
		lam = params.flat_density
		_require_density(lam)
		n_r, l = qn.n_r, qn.l
		log_norm = 0.5 * (math.log(2.0) + 1.5 * math.log(lam) + special.gammaln(n_r + 1.0) - special.gammaln(n_r + l + 1.5))
		scaled = math.sqrt(lam) * x
		value = (math.exp(log_norm) * scaled ** l * np.exp(-0.5 * scaled * scaled)
		         * specfun.classical_poly('laguerre', n_r, l + 0.5, scaled * scaled))
	elif kind == 'flat_cyl_rho':
		lam = params.flat_density
		_require_density(lam)
		n, abs_m = qn.n, abs(qn.m)
		log_norm = 0.5 * (math.log(2.0 * lam) + special.gammaln(n + 1.0) - special.gammaln(n + abs_m + 1.0))
		scaled = math.sqrt(lam) * x
		value = (math.exp(log_norm) * scaled ** abs_m * np.exp(-0.5 * scaled * scaled)
		         * specfun.classical_poly('laguerre', n, abs_m, scaled * scaled))
	elif kind == 'flat_cyl_z':
		lam = params.flat_density
		_require_density(lam)
		n3 = qn.n3 if isinstance(qn, CylindricalQN) else validate_natural('n3', qn)
		log_norm = 0.25 * math.log(lam / math.pi) - 0.5 * (n3 * math.log(2.0) + special.gammaln(n3 + 1.0))
		scaled = math.sqrt(lam) * x
		value = math.exp(log_norm) * np.exp(-0.5 * scaled * scaled) * specfun.classical_poly('hermite', n3, None, scaled)
	elif kind == 'free_z':
		big_j, l = qn.N + 1, qn.l
		log_norm = ((l + 1.0) * math.log(2.0) + special.gammaln(l + 1.0) - 0.5 * math.log(math.pi)
		            + 0.5 * (math.log(big_j + 1.0) + special.gammaln(big_j - l + 1.0) - special.gammaln(big_j + l + 2.0)))
		value = (math.exp(log_norm) * np.sin(x) ** l
		         * specfun.classical_poly('gegenbauer', big_j - l, l + 1.0, np.cos(x)))
	elif kind == 'free_k':
		n3 = qn.n3 if isinstance(qn, CylindricalQN) else validate_natural('n3', qn)
		value = math.sqrt(2.0 / math.pi) * np.sin((n3 + 1.0) * (x + HALF_PI))
	else:
		N, abs_m, n3, n = qn.N, abs(qn.m), qn.n3, qn.n
		log_norm = 0.5 * (math.log(N + 2.0) + special.gammaln(n + 1.0) + special.gammaln(0.5 * (N + n3 + abs_m) + 2.0)
		                  - special.gammaln(0.5 * (N - abs_m + n3) + 2.0) - special.gammaln(n + abs_m + 1.0))
		value = (math.exp(log_norm) * np.sin(x) ** abs_m * _power_of_cos(x, n3 + 1.0)
		         * specfun.jacobi_p(n, abs_m, n3 + 1.0, np.cos(2.0 * x)))
	return _like_input(value, coordinate)


def _require_density(lam):
	if lam <= 0.0:
		raise DomainError("Flat-space limits need omega > 0.")


def _like_input(value, original):
	if np.ndim(original) == 0:
		return float(value)
	return value
