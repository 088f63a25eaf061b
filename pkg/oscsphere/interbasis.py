""" oscsphere/interbasis.py """

# Standard Library
import math
from dataclasses import dataclass

# Third Party
import numpy as np
from scipy import special

# Oscsphere
from oscsphere import bases, specfun
from oscsphere.core import (DomainError, UsageError, QUAD_AGREEMENT_TOL, QUAD_NODES_CAP, get_quad_nodes,
                            is_nonpositive_integer, validate_choice, validate_integer, validate_natural, validate_real)
from oscsphere.logging_config import get_logger

logger = get_logger(__name__)

W_METHODS = ('f43', 'racah', 'quadrature', 'split')
W_LIMIT_KINDS = ('flat_3f2', 'flat_cg', 'free_racah')

# Fewer nodes than this cannot resolve the overlap integrand for the blocks we test.
MIN_ORACLE_NODES = 64


@dataclass
class InterbasisBlock():
	"""
	Orthogonal matrix W for fixed (N, m, nu).  Rows follow 'l_index' (spherical states) and columns
	follow 'n3_index' (cylindrical states):

		Psi_spherical[l] = sum over n3 of entries[l, n3] * Psi_cylindrical[n3]
	"""
	N: int
	m: int
	nu: float
	l_index: list
	n3_index: list
	entries: np.ndarray
	method: str = 'f43'

	def __post_init__(self):
		if len(self.l_index) != len(self.n3_index):
			raise DomainError(f"Interbasis block needs equal index sets, found {len(self.l_index)} values of l "
			                  f"and {len(self.n3_index)} values of n3.")
		self.entries = np.asarray(self.entries, dtype=float)
		if self.entries.shape != (len(self.l_index), len(self.n3_index)):
			raise DomainError(f"Interbasis entries have shape {self.entries.shape}, expected "
			                  f"{(len(self.l_index), len(self.n3_index))}.")

	@property
	def size(self):
		return len(self.l_index)

	def inverse(self):
		""" Coefficients of the inverse expansion (cylindrical over spherical): the transpose. """
		return self.entries.T.copy()

	def entry(self, l, n3):
		return float(self.entries[self.l_index.index(l), self.n3_index.index(n3)])

	def rows(self):
		""" (l, [W over n3]) pairs, in index order. """
		return [ (l, [ float(value) for value in self.entries[row] ]) for row, l in enumerate(self.l_index) ]


# ----------------
# Closed forms
# ----------------

def w_via_4f3(N, l, m, n3, nu):
	"""
	W as a log-gamma prefactor times a terminating 4F3(1):

		4F3(-n3/2, -(n3-1)/2, -(N-l)/2, (N+l)/2 + nu + 2; nu + 3/2, (l+|m|-n3)/2 + 1, (l-|m|-n3)/2 + 1; 1)

	The last two denominators are integers that may be nonpositive; they are summed in regularized
	form so the compensating gamma poles of the prefactor never appear.  One code path serves even
	and odd n3.
	"""
	nu = validate_real('nu', nu, minimum=0.0)
	_validate_pair(N, l, m, n3)
	abs_m = abs(m)
	log_prefactor = (0.5 * math.log(math.pi) - (l + nu + 1.0) * math.log(2.0)
	                 + 0.5 * (math.log(2.0 * l + 1.0) + math.log(n3 + nu + 1.0)
	                          + special.gammaln(l + abs_m + 1.0) + special.gammaln(l - abs_m + 1.0))
	                 - special.gammaln(nu + 1.5)
	                 + 0.5 * (special.gammaln(0.5 * (N + l) + nu + 2.0) + special.gammaln(0.5 * (N - l + 3.0) + nu)
	                          + special.gammaln(n3 + 2.0 * nu + 2.0)
	                          + special.gammaln(0.5 * (N - abs_m - n3) + 1.0) + special.gammaln(0.5 * (N + abs_m - n3) + 1.0)
	                          - special.gammaln(0.5 * (N + l + 3.0)) - special.gammaln(0.5 * (N - l) + 1.0)
	                          - special.gammaln(0.5 * (N - abs_m + n3) + nu + 2.0)
	                          - special.gammaln(0.5 * (N + abs_m + n3) + nu + 2.0)
	                          - special.gammaln(n3 + 1.0)))

	upper = 0.5 * (l + abs_m - n3) + 1.0
	lower = 0.5 * (l - abs_m - n3) + 1.0
	if is_nonpositive_integer(upper) or is_nonpositive_integer(lower):
		logger.debug("W(N=%s, l=%s, m=%s, n3=%s): regularized denominators %s, %s", N, l, m, n3, upper, lower)
	spec = specfun.TerminatingSeriesSpec(
		numerators=(-0.5 * n3, -0.5 * (n3 - 1.0), -0.5 * (N - l), 0.5 * (N + l) + nu + 2.0),
		denominators=(nu + 1.5, upper, lower),
		regularized=(1, 2))
	return Internals.phase(m) * math.exp(float(log_prefactor)) * specfun.hyp_terminating(spec)


def w_via_racah(N, l, m, n3, nu):
	"""
	W = (-1)^((N-l)/2 + (m+|m|)/2) sqrt((l + 1/2)(n3 + nu + 1)) W(abed; cf) with

		a = (N+|m|)/4,         b = (N-|m|-1)/4,   c = (2l-1)/4,
		d = (N-|m|)/4 + nu/2 + 1/4,  e = (N+|m|)/4 + nu/2,  f = n3/2 + nu/2
	"""
	nu = validate_real('nu', nu, minimum=0.0)
	_validate_pair(N, l, m, n3)
	abs_m = abs(m)
	arguments = specfun.RacahArguments(a=0.25 * (N + abs_m), b=0.25 * (N - abs_m - 1.0),
	                                   e=0.25 * (N + abs_m) + 0.5 * nu, d=0.25 * (N - abs_m) + 0.5 * nu + 0.25,
	                                   c=0.25 * (2.0 * l - 1.0), f=0.5 * n3 + 0.5 * nu)
	sign = Internals.phase(m) * (-1.0) ** ((N - l) // 2)
	return sign * math.sqrt((l + 0.5) * (n3 + nu + 1.0)) * specfun.racah_w(arguments)


# ----------------
# Quadrature oracles
# ----------------

def overlap_oracle(N, l, m, n3, nu, nodes=None):
	"""
	W from the one-dimensional overlap integral

		A = integral over [-pi/2, pi/2] of sin^(l-|m|) cos^(2nu+2) P_{(N-l)/2}^(l+1/2, nu+1/2)(cos 2phi2)
		    P_n3^(nu+1/2, nu+1/2)(sin phi2) dphi2

	times the prefactor obtained by matching both bases at alpha -> 0.  The integrand has parity
	(-1)^(l-|m|-n3): odd combinations vanish identically and even ones integrate over [0, pi/2] and double.
	Gauss-Legendre nodes start at 'nodes' (default: get_quad_nodes()) and double until two results agree.
	"""
	nu = validate_real('nu', nu, minimum=0.0)
	for name, value in (('N', N), ('l', l), ('n3', n3)):
		validate_natural(name, value)
	m = validate_integer('m', m)
	if abs(m) > l or l > N or n3 > N - abs(m):
		raise DomainError(f"Quantum numbers N={N}, l={l}, m={m}, n3={n3} do not share a level.")
	if (l - abs(m) - n3) % 2:
		return 0.0
	_validate_pair(N, l, m, n3)

	if nodes is None:
		nodes = get_quad_nodes()
		if nodes < MIN_ORACLE_NODES:
			logger.warning("Quadrature node override %s is below %s; using %s.", nodes, MIN_ORACLE_NODES, MIN_ORACLE_NODES)
			nodes = MIN_ORACLE_NODES
	else:
		nodes = validate_natural('nodes', nodes)
		if nodes < MIN_ORACLE_NODES:
			raise UsageError(f"Overlap quadrature needs at least {MIN_ORACLE_NODES} nodes, found {nodes}.")

	prefactor = Internals.overlap_prefactor(N, l, m, n3, nu)
	previous = prefactor * Internals.overlap_integral(N, l, m, n3, nu, nodes)
	if 2 * nodes > QUAD_NODES_CAP:
		logger.debug("Overlap quadrature starts at %s nodes; no refinement below the cap of %s.", nodes, QUAD_NODES_CAP)
		return previous
	while 2 * nodes <= QUAD_NODES_CAP:
		nodes *= 2
		current = prefactor * Internals.overlap_integral(N, l, m, n3, nu, nodes)
		logger.debug("Overlap W(N=%s, l=%s, m=%s, n3=%s, nu=%s) with %s nodes: %.17g", N, l, m, n3, nu, nodes, current)
		if abs(current - previous) <= QUAD_AGREEMENT_TOL:
			return current
		previous = current
	logger.warning("Overlap quadrature for (N=%s, l=%s, m=%s, n3=%s, nu=%s) reached %s nodes without agreement.",
	               N, l, m, n3, nu, nodes)
	return previous


def w_parity_split(N, l, m, n3, nu):
	"""
	W from the overlap integral after folding onto [0, pi/2] and substituting x = cos 2phi2.  The
	quadratic transformation of P_n3^(a, a) splits by the parity of n3:

		even n3:  weight (1-x)^((l-|m|-1)/2) (1+x)^(nu+1/2),  P_{n3/2}^(-1/2, nu+1/2)(x)
		odd n3:   weight (1-x)^((l-|m|)/2) (1+x)^(nu+1/2),    P_{(n3-1)/2}^(1/2, nu+1/2)(x)

	The remaining integrand is a polynomial, so Gauss-Jacobi quadrature with N + 2 nodes is exact.
	"""
	nu = validate_real('nu', nu, minimum=0.0)
	_validate_pair(N, l, m, n3)
	abs_m = abs(m)
	a_param = nu + 0.5
	n_r = (N - l) // 2

	if n3 % 2 == 0:
		half = n3 // 2
		alpha, beta, shift = 0.5 * (l - abs_m - 1.0), a_param, -0.5
		log_transform = (special.gammaln(n3 + a_param + 1.0) + special.gammaln(half + 1.0)
		                 - special.gammaln(half + a_param + 1.0) - special.gammaln(n3 + 1.0))
		power = 0.5 * (l - abs_m) + nu + 1.0
	else:
		half = (n3 - 1) // 2
		alpha, beta, shift = 0.5 * (l - abs_m), a_param, 0.5
		log_transform = (special.gammaln(n3 + a_param + 1.0) + special.gammaln(half + 1.0)
		                 - special.gammaln(0.5 * (n3 + 1.0) + a_param) - special.gammaln(n3 + 1.0))
		power = 0.5 * (l - abs_m + 3.0) + nu
	x, weights = specfun.gauss_jacobi(N + 2, alpha, beta)
	integrand = specfun.jacobi_p(n_r, l + 0.5, nu + 0.5, x) * specfun.jacobi_p(half, shift, a_param, x)
	# P_half^(a, shift)(-x) = (-1)^half P_half^(shift, a)(x)
	sign = (-1.0) ** half
	integral = sign * math.exp(float(log_transform) - power * math.log(2.0)) * float(np.dot(weights, integrand))
	return Internals.overlap_prefactor(N, l, m, n3, nu) * integral


# ----------------
# Blocks
# ----------------

def w_block(N, m, nu, method='f43'):
	"""
	The full parity-matched block for (N, m, nu), computed entry by entry with 'method'
	(f43, racah, quadrature or split).
	"""
	N = validate_natural('N', N)
	m = validate_integer('m', m)
	nu = validate_real('nu', nu, minimum=0.0)
	validate_choice('method', method, W_METHODS)
	if abs(m) > N:
		raise DomainError(f"Interbasis block needs |m| <= N, found N={N}, m={m}.")

	evaluator = {
		'f43': w_via_4f3,
		'racah': w_via_racah,
		'quadrature': overlap_oracle,
		'split': w_parity_split,
	}[method]
	l_index = bases.l_stride(N, m)
	n3_index = bases.n3_stride(N, m)
	entries = np.array([ [ evaluator(N, l, m, n3, nu) for n3 in n3_index ] for l in l_index ], dtype=float)
	logger.debug("Built %sx%s interbasis block N=%s, m=%s, nu=%s by %s", len(l_index), len(n3_index), N, m, nu, method)
	return InterbasisBlock(N=N, m=m, nu=nu, l_index=l_index, n3_index=n3_index, entries=entries, method=method)


def unitarity_defect(block):
	""" max |(W^T W - I)_ij| and max |(W W^T - I)_ij|, whichever is larger. """
	entries = block.entries
	identity = np.eye(block.size)
	return float(max(np.max(np.abs(entries.T @ entries - identity)), np.max(np.abs(entries @ entries.T - identity))))


def expand_spherical(block, l, params, point):
	""" Sum over n3 of W[l, n3] times the cylindrical wavefunction, at 'point'. """
	if l not in block.l_index:
		raise DomainError(f"l = {l} is not in the block's index set {block.l_index}.")
	row = block.entries[block.l_index.index(l)]
	total = 0j
	for coefficient, n3 in zip(row, block.n3_index):
		total += coefficient * bases.wavefunction('cylindrical', bases.CylindricalQN(block.N, block.m, n3), params, point)
	return total


# ----------------
# Limits
# ----------------

def w_limit(kind, N, l, m, n3):
	"""
	Limiting values of W.

		flat_3f2    nu -> infinity, as a regularized 3F2(1)
		flat_cg     nu -> infinity, as a Clebsch-Gordan coefficient with quarter-integer arguments
		free_racah  nu = 0, as a Racah coefficient in the free quantum numbers J = N + 1, |m2| = n3 + 1
	"""
	validate_choice('kind', kind, W_LIMIT_KINDS)
	_validate_pair(N, l, m, n3)
	abs_m = abs(m)

	if kind == 'flat_3f2':
		log_prefactor = (-(l - n3) * math.log(2.0)
		                 + 0.5 * (specfun.log_double_factorial(N - abs_m - n3) + specfun.log_double_factorial(N + abs_m - n3)
		                          - specfun.log_double_factorial(N + l + 1) - specfun.log_double_factorial(N - l)
		                          - specfun.log_factorial(n3))
		                 + 0.5 * (math.log(2.0 * l + 1.0) + specfun.log_factorial(l + abs_m) + specfun.log_factorial(l - abs_m)))
		spec = specfun.TerminatingSeriesSpec(
			numerators=(-0.5 * n3, -0.5 * (n3 - 1.0), -0.5 * (N - l)),
			denominators=(0.5 * (l + abs_m - n3) + 1.0, 0.5 * (l - abs_m - n3) + 1.0),
			regularized=(0, 1))
		return Internals.phase(m) * math.exp(log_prefactor) * specfun.hyp_terminating(spec)

	if kind == 'flat_cg':
		value = specfun.clebsch_gordan(0.25 * (N + abs_m), 0.25 * (N + abs_m - 2.0 * n3),
		                               0.25 * (N - abs_m - 1.0), 0.25 * (2.0 * n3 - N + abs_m - 1.0),
		                               0.25 * (2.0 * l - 1.0), 0.25 * (2.0 * abs_m - 1.0), continued=True)
		return Internals.phase(m) * value

	big_j, m2 = N + 1, n3 + 1
	arguments = specfun.RacahArguments(a=0.25 * (big_j + abs_m - 1.0), b=0.25 * (big_j - abs_m - 2.0),
	                                   e=0.25 * (big_j + abs_m - 1.0), d=0.25 * (big_j - abs_m),
	                                   c=0.25 * (2.0 * l - 1.0), f=0.5 * (m2 - 1.0))
	sign = Internals.phase(m) * (-1.0) ** ((big_j - l - 1) // 2)
	return sign * math.sqrt((l + 0.5) * m2) * specfun.racah_w(arguments)


def _validate_pair(N, l, m, n3):
	""" Both (N, l, m) and (N, m, n3) must be valid states of level N. """
	bases.SphericalQN(N, l, m)
	bases.CylindricalQN(N, m, n3)


class Internals():

	@staticmethod
	def phase(m):
		""" (-1)^((m+|m|)/2) """
		return -1.0 if (m > 0 and m % 2) else 1.0

	@staticmethod
	def overlap_prefactor(N, l, m, n3, nu):
		"""
		Dividing both expansions by sin^|m|(alpha) and letting alpha -> 0 leaves
		Z(phi2) times the leading Y_lm coefficient on one side and K(phi2) times Phi's leading
		coefficient on the other; orthonormality of K isolates W.
		"""
		abs_m = abs(m)
		n = (N - abs_m - n3) // 2
		spherical = bases.SphericalQN(N, l, m)
		cylindrical = bases.CylindricalQN(N, m, n3)
		log_value = (0.5 * math.log(l + 0.5)
		             + 0.5 * (specfun.log_factorial(l + abs_m) - specfun.log_factorial(l - abs_m))
		             + bases.log_norm_z(spherical, nu) + bases.log_norm_k(n3, nu)
		             - abs_m * math.log(2.0) - bases.log_norm_phi(cylindrical, nu)
		             - specfun.log_factorial(n + abs_m) + specfun.log_factorial(n))
		return Internals.phase(m) * math.exp(log_value)

	@staticmethod
	def overlap_integral(N, l, m, n3, nu, nodes):
		""" Twice the integral over [0, pi/2]; valid when l - |m| - n3 is even. """
		phi2, weights = specfun.gauss_legendre(nodes, 0.0, bases.HALF_PI)
		integrand = (np.sin(phi2) ** (l - abs(m)) * np.cos(phi2) ** (2.0 * nu + 2.0)
		             * specfun.jacobi_p((N - l) // 2, l + 0.5, nu + 0.5, np.cos(2.0 * phi2))
		             * specfun.jacobi_p(n3, nu + 0.5, nu + 0.5, np.sin(phi2)))
		return 2.0 * float(np.dot(weights, integrand))
