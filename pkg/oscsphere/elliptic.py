""" oscsphere/elliptic.py """

# Standard Library
import math
from dataclasses import dataclass, field

# Third Party
import numpy as np
from scipy import linalg

# Oscsphere
from oscsphere import bases, interbasis
from oscsphere.core import (ConsistencyError, DomainError, UsageError, validate_choice, validate_integer,
                            validate_natural, validate_real)
from oscsphere.logging_config import get_logger

logger = get_logger(__name__)

BLOCK_METHODS = ('oracle', 'closed')

# Eigenvalues closer than this (relative to max(1, |lambda|)) form one degenerate cluster.
DEGENERACY_TOL = 1e-8
MATCH_TOL = 1e-8
WAVEFUNCTION_TOL = 1e-8


@dataclass(frozen=True)
class EllipticParams():
	"""
	Mixing parameter 'a' of the operator L^2 - a R^2 D33 and the sphere radius.  a >= 0 is the oblate
	system with k^2 = a / (1 + a); -1 <= a < 0 is the prolate system with k^2 = -a.
	"""
	a: float
	R: float = 1.0

	def __post_init__(self):
		object.__setattr__(self, 'a', validate_real('a', self.a, minimum=-1.0))
		object.__setattr__(self, 'R', validate_real('R', self.R, minimum=0.0, strict=True))
		if math.isinf(self.a):
			raise DomainError("Mixing parameter 'a' must be finite.")

	@staticmethod
	def oblate(k, R=1.0):
		k = validate_real('k', k, minimum=0.0)
		if k >= 1.0:
			raise DomainError(f"Oblate modulus must satisfy 0 <= k < 1, found {k}.")
		return EllipticParams(a=k * k / ((1.0 - k) * (1.0 + k)), R=R)

	@staticmethod
	def prolate(k, R=1.0):
		k = validate_real('k', k, minimum=0.0)
		if k > 1.0:
			raise DomainError(f"Prolate modulus must satisfy 0 <= k <= 1, found {k}.")
		return EllipticParams(a=-k * k, R=R)

	@staticmethod
	def from_a(a, R=1.0):
		return EllipticParams(a=a, R=R)

	@property
	def system(self):
		return 'oblate' if self.a >= 0.0 else 'prolate'

	@property
	def k(self):
		if self.a >= 0.0:
			return math.sqrt(self.a / (1.0 + self.a))
		return math.sqrt(-self.a)

	@property
	def k_prime(self):
		k = self.k
		return math.sqrt(max(0.0, (1.0 - k) * (1.0 + k)))


@dataclass
class TridiagonalOperator():
	""" Symmetric tridiagonal matrix over a parity-strided index set (l values or n3 values). """
	index_set: list
	diag: np.ndarray
	offdiag: np.ndarray

	def __post_init__(self):
		self.diag = np.asarray(self.diag, dtype=float)
		self.offdiag = np.asarray(self.offdiag, dtype=float)
		if len(self.diag) != len(self.index_set) or len(self.offdiag) != max(0, len(self.index_set) - 1):
			raise DomainError(f"Tridiagonal operator over {len(self.index_set)} indices has {len(self.diag)} diagonal "
			                  f"and {len(self.offdiag)} off-diagonal entries.")

	@property
	def size(self):
		return len(self.index_set)

	def dense(self):
		return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

	def trace(self):
		return float(math.fsum(self.diag))

	def eigenvalues(self):
		return _eigh_tridiagonal(self.diag, self.offdiag)[0]


@dataclass
class EllipticSolution():
	"""
	One member q of the elliptic basis at level N and azimuthal number m.  T holds the coefficients over
	the spherical states (l_index), U those over the cylindrical states (n3_index).
	"""
	q: int
	lambda_q: float
	N: int
	m: int
	nu: float
	params: EllipticParams
	l_index: list
	n3_index: list
	T: np.ndarray = None
	U: np.ndarray = None
	lambda_cylindrical: float = field(default=None)

	@property
	def is_matched(self):
		return self.T is not None and self.U is not None


# ----------------
# Matrix elements
# ----------------

def d33_block(N, m, nu, method='oracle'):
	"""
	D33 over the l-stride.  'oracle' forms W diag((n3+nu+1)^2) W^T from the interbasis block;
	'closed' evaluates the three-term coefficients directly:

		(D33)_ll      = C_l
		(D33)_l,l+2   = -16 B_l / ((2l+3) sqrt((2l+1)(2l+5)))
	"""
	N, m, nu = _validate_level(N, m, nu)
	validate_choice('method', method, BLOCK_METHODS)
	l_index = bases.l_stride(N, m)

	if method == 'oracle':
		block = interbasis.w_block(N, m, nu)
		eigenvalues = np.array([ (n3 + nu + 1.0) ** 2 for n3 in block.n3_index ])
		dense = (block.entries * eigenvalues) @ block.entries.T
		return _band_of(l_index, dense, 'D33', N, m, nu)

	diag = np.array([ Internals.d33_diagonal(N, l, m, nu) for l in l_index ])
	offdiag = np.array([ Internals.d33_offdiagonal(N, l, m, nu) for l in l_index[:-1] ])
	return TridiagonalOperator(index_set=l_index, diag=diag, offdiag=offdiag)


def l2_block(N, m, nu, method='oracle'):
	"""
	L^2 over the n3-stride.  'oracle' forms W^T diag(l(l+1)) W; 'closed' evaluates the diagonal C~
	and the off-diagonal B~ coefficients.
	"""
	N, m, nu = _validate_level(N, m, nu)
	validate_choice('method', method, BLOCK_METHODS)
	n3_index = bases.n3_stride(N, m)

	if method == 'oracle':
		block = interbasis.w_block(N, m, nu)
		eigenvalues = np.array([ l * (l + 1.0) for l in block.l_index ])
		dense = (block.entries.T * eigenvalues) @ block.entries
		return _band_of(n3_index, dense, 'L2', N, m, nu)

	diag = np.array([ Internals.l2_diagonal(N, m, n3, nu) for n3 in n3_index ])
	offdiag = np.array([ Internals.l2_offdiagonal(N, m, n3, nu) for n3 in n3_index[:-1] ])
	return TridiagonalOperator(index_set=n3_index, diag=diag, offdiag=offdiag)


def _band_of(index_set, dense, name, N, m, nu):
	dense = 0.5 * (dense + dense.T)
	size = len(index_set)
	if size > 2:
		outside = np.triu(np.abs(dense), 2)
		logger.debug("%s block N=%s, m=%s, nu=%s: largest entry outside the band %.3g", name, N, m, nu, float(np.max(outside)))
	return TridiagonalOperator(index_set=index_set, diag=np.diag(dense).copy(), offdiag=np.diag(dense, 1).copy())


def _validate_level(N, m, nu):
	N = validate_natural('N', N)
	m = validate_integer('m', m)
	nu = validate_real('nu', nu, minimum=0.0)
	if abs(m) > N:
		raise DomainError(f"Elliptic blocks need |m| <= N, found N={N}, m={m}.")
	return N, m, nu


# ----------------
# Eigenproblems
# ----------------

def solve_spherical_form(N, m, nu, params):
	"""
	Eigenpairs of diag(l(l+1)) - a R^2 D33 over the l-stride, ascending in lambda.  Each T is
	normalized and its first nonzero component is positive.  a = 0 returns the spherical basis itself.
	"""
	N, m, nu = _validate_level(N, m, nu)
	l_index = bases.l_stride(N, m)
	n3_index = bases.n3_stride(N, m)
	centrifugal = np.array([ l * (l + 1.0) for l in l_index ])

	if params.a == 0.0:
		return [ EllipticSolution(q=q, lambda_q=float(centrifugal[q]), N=N, m=m, nu=nu, params=params, l_index=l_index,
		                          n3_index=n3_index, T=np.eye(len(l_index))[q]) for q in range(len(l_index)) ]

	d33 = d33_block(N, m, nu)
	scale = params.a * params.R ** 2
	values, vectors = _eigh_tridiagonal(centrifugal - scale * d33.diag, -scale * d33.offdiag)
	_log_near_degeneracy(values, 'spherical', N, m, params.a)
	return [ EllipticSolution(q=q, lambda_q=float(values[q]), N=N, m=m, nu=nu, params=params, l_index=l_index,
	                          n3_index=n3_index, T=_fix_sign(vectors[:, q])) for q in range(len(values)) ]


def solve_cylindrical_form(N, m, nu, params):
	""" Eigenpairs of L^2 - a R^2 diag((n3+nu+1)^2) over the n3-stride, ascending in lambda. """
	N, m, nu = _validate_level(N, m, nu)
	l_index = bases.l_stride(N, m)
	n3_index = bases.n3_stride(N, m)
	l2 = l2_block(N, m, nu)
	d33 = np.array([ (n3 + nu + 1.0) ** 2 for n3 in n3_index ])
	values, vectors = _eigh_tridiagonal(l2.diag - params.a * params.R ** 2 * d33, l2.offdiag)
	_log_near_degeneracy(values, 'cylindrical', N, m, params.a)
	return [ EllipticSolution(q=q, lambda_q=float(values[q]), N=N, m=m, nu=nu, params=params, l_index=l_index,
	                          n3_index=n3_index, U=_fix_sign(vectors[:, q]), lambda_cylindrical=float(values[q]))
	         for q in range(len(values)) ]


def _eigh_tridiagonal(diag, offdiag):
	diag = np.asarray(diag, dtype=float)
	offdiag = np.asarray(offdiag, dtype=float)
	if len(diag) == 1:
		return diag.copy(), np.ones((1, 1))
	return linalg.eigh_tridiagonal(diag, offdiag)


def _fix_sign(vector):
	""" Normalized copy whose first nonzero component is positive. """
	vector = np.array(vector, dtype=float)
	vector /= np.linalg.norm(vector)
	threshold = 1e-12 * float(np.max(np.abs(vector)))
	for value in vector:
		if abs(value) > threshold:
			return vector if value > 0.0 else -vector
	return vector


def _clusters(values):
	""" Consecutive runs of (sorted) eigenvalues that agree within DEGENERACY_TOL. """
	clusters, current = [], [0]
	for index in range(1, len(values)):
		if abs(values[index] - values[current[-1]]) <= DEGENERACY_TOL * max(1.0, abs(values[index])):
			current.append(index)
		else:
			clusters.append(current)
			current = [index]
	if len(values):
		clusters.append(current)
	return clusters


def spectral_gap(values):
	""" Smallest spacing between consecutive sorted eigenvalues, relative to max(1, |lambda|); inf for one value. """
	values = sorted(float(value) for value in values)
	return min((abs(upper - lower) / max(1.0, abs(upper)) for lower, upper in zip(values, values[1:])), default=math.inf)


def _log_near_degeneracy(values, form, N, m, a):
	""" Blocks with a != 0 are irreducible tridiagonal, so their spectra should be simple. """
	for cluster in _clusters(values):
		if len(cluster) > 1:
			log = logger.warning if a != 0.0 else logger.debug
			log("Degenerate %s-form eigenvalues for N=%s, m=%s, a=%s: %s", form, N, m, a, [ values[i] for i in cluster ])


def match_solutions(spherical, cylindrical, block):
	"""
	Pair spherical-form and cylindrical-form solutions by eigenvalue and check U = W^T T.  Returns new
	solutions carrying both vectors, with U sign-aligned to W^T T.  Degenerate clusters are matched by
	projecting W^T T onto the span of the cluster's cylindrical vectors.
	"""
	if len(spherical) != len(cylindrical):
		raise ConsistencyError(f"Spherical and cylindrical forms have {len(spherical)} and {len(cylindrical)} solutions.")
	for sph, cyl in zip(spherical, cylindrical):
		scale = max(1.0, abs(sph.lambda_q))
		if abs(sph.lambda_q - cyl.lambda_q) > MATCH_TOL * scale:
			raise ConsistencyError(f"Unmatched eigenvalue: spherical form {sph.lambda_q!r}, cylindrical form {cyl.lambda_q!r}.")

	matched = []
	values = [ sph.lambda_q for sph in spherical ]
	for cluster in _clusters(values):
		cylinder_span = np.column_stack([ cylindrical[index].U for index in cluster ])
		if len(cluster) > 1:
			logger.debug("Matching a degenerate cluster of %s eigenvalues near %s by projection.", len(cluster), values[cluster[0]])
		for index in cluster:
			sph = spherical[index]
			predicted = block.entries.T @ sph.T
			if len(cluster) == 1:
				candidate = cylindrical[index].U
				candidate = candidate if float(np.dot(candidate, predicted)) >= 0.0 else -candidate
			else:
				candidate = cylinder_span @ (cylinder_span.T @ predicted)
			mismatch = float(np.max(np.abs(candidate - predicted)))
			if mismatch > MATCH_TOL:
				raise ConsistencyError(f"Cylindrical coefficients of q={sph.q} differ from W^T T by {mismatch:.3g}.")
			matched.append(EllipticSolution(q=sph.q, lambda_q=sph.lambda_q, N=sph.N, m=sph.m, nu=sph.nu, params=sph.params,
			                                l_index=sph.l_index, n3_index=sph.n3_index, T=sph.T.copy(), U=candidate,
			                                lambda_cylindrical=cylindrical[index].lambda_q))
	return matched


def solve(N, m, nu, params):
	""" Both forms, matched through the interbasis block. """
	spherical = solve_spherical_form(N, m, nu, params)
	cylindrical = solve_cylindrical_form(N, m, nu, params)
	return match_solutions(spherical, cylindrical, interbasis.w_block(N, m, nu))


def spectral_mismatch(solutions):
	""" Largest |lambda(spherical form) - lambda(cylindrical form)| over matched solutions. """
	return max((abs(each.lambda_q - each.lambda_cylindrical) for each in solutions), default=0.0)


# ----------------
# Evaluation and checks
# ----------------

def elliptic_wavefunction(solution, params, point):
	"""
	Value of the elliptic basis function at 'point', evaluated both as sum over l of T_l Psi_spherical
	and as sum over n3 of U_n3 Psi_cylindrical.  The two must agree; the spherical-form value is returned.
	'params' are the oscillator parameters and must reproduce the solution's nu.
	"""
	if not solution.is_matched:
		raise UsageError("Elliptic wavefunctions need a matched solution (see match_solutions).")
	if abs(params.nu - solution.nu) > 1e-12 * max(1.0, solution.nu):
		raise UsageError(f"Oscillator parameters give nu = {params.nu}, but the solution was built for nu = {solution.nu}.")

	spherical_value = 0j
	for coefficient, l in zip(solution.T, solution.l_index):
		spherical_value += coefficient * bases.wavefunction('spherical', bases.SphericalQN(solution.N, l, solution.m), params, point)
	cylindrical_value = 0j
	for coefficient, n3 in zip(solution.U, solution.n3_index):
		cylindrical_value += coefficient * bases.wavefunction('cylindrical', bases.CylindricalQN(solution.N, solution.m, n3), params, point)

	if abs(spherical_value - cylindrical_value) > WAVEFUNCTION_TOL * max(1.0, abs(spherical_value)):
		raise ConsistencyError(f"Elliptic wavefunction q={solution.q} differs between forms: "
		                       f"{spherical_value!r} against {cylindrical_value!r}.")
	return spherical_value


def recurrence_residual_spherical(solution):
	"""
	Largest residual of the three-term recurrence in l,

		(l(l+1) - lambda) T_l - a R^2 [ (D33)_l,l-2 T_l-2 + (D33)_ll T_l + (D33)_l,l+2 T_l+2 ] = 0,

	with the closed-form D33 coefficients, relative to the largest single term over all rows.
	"""
	if solution.T is None:
		raise UsageError("Solution has no spherical-form coefficients.")
	d33 = d33_block(solution.N, solution.m, solution.nu, method='closed')
	scale = solution.params.a * solution.params.R ** 2
	centrifugal = [ l * (l + 1.0) for l in solution.l_index ]
	rows = []
	for i, coefficient in enumerate(solution.T):
		terms = [ (centrifugal[i] - solution.lambda_q) * coefficient, -scale * d33.diag[i] * coefficient ]
		if i > 0:
			terms.append(-scale * d33.offdiag[i - 1] * solution.T[i - 1])
		if i + 1 < len(solution.T):
			terms.append(-scale * d33.offdiag[i] * solution.T[i + 1])
		rows.append(terms)
	return _relative_residual(rows)


def recurrence_residual_cylindrical(solution):
	"""
	Largest residual of the three-term recurrence in n3,

		(C~_n3 - a R^2 (n3+nu+1)^2 - lambda) U_n3 + B~_n3-2 U_n3-2 + B~_n3 U_n3+2 = 0,

	relative to the largest single term over all rows.
	"""
	if solution.U is None:
		raise UsageError("Solution has no cylindrical-form coefficients.")
	l2 = l2_block(solution.N, solution.m, solution.nu, method='closed')
	scale = solution.params.a * solution.params.R ** 2
	rows = []
	for i, coefficient in enumerate(solution.U):
		n3 = solution.n3_index[i]
		terms = [ (l2.diag[i] - solution.lambda_q) * coefficient, -scale * (n3 + solution.nu + 1.0) ** 2 * coefficient ]
		if i > 0:
			terms.append(l2.offdiag[i - 1] * solution.U[i - 1])
		if i + 1 < len(solution.U):
			terms.append(l2.offdiag[i] * solution.U[i + 1])
		rows.append(terms)
	return _relative_residual(rows)


def _relative_residual(rows):
	largest = max(abs(term) for terms in rows for term in terms)
	if largest == 0.0:
		return 0.0
	return max(abs(math.fsum(terms)) for terms in rows) / largest


def lambda_slope_at_zero(N, m, nu, R=1.0, step=1e-6):
	"""
	Central finite difference of each lambda_q in 'a' at a = 0, paired with the first-order
	prediction -R^2 (D33)_ll.  Returns a list of (l, finite_difference, predicted).
	"""
	N, m, nu = _validate_level(N, m, nu)
	step = validate_real('step', step, minimum=0.0, strict=True)
	upper = solve_spherical_form(N, m, nu, EllipticParams.from_a(step, R))
	lower = solve_spherical_form(N, m, nu, EllipticParams.from_a(-step, R))
	d33 = d33_block(N, m, nu)
	return [ (l, (up.lambda_q - down.lambda_q) / (2.0 * step), -R ** 2 * float(d33.diag[index]))
	         for index, (l, up, down) in enumerate(zip(d33.index_set, upper, lower)) ]


class Internals():
	""" Closed-form three-term coefficients. """

	@staticmethod
	def b_spherical(N, l, m, nu):
		abs_m = abs(m)
		product = ((l - abs_m + 1.0) * (l - abs_m + 2.0) * (l + abs_m + 1.0) * (l + abs_m + 2.0)
		           * (N + l + 3.0) * (N - l) * (N + l + 2.0 * nu + 4.0) * (N - l + 2.0 * nu + 1.0))
		return math.sqrt(max(0.0, product)) / 16.0

	@staticmethod
	def d33_diagonal(N, l, m, nu):
		m_sq = float(m * m)
		shape = (2.0 * l - 1.0) * (2.0 * l + 3.0)
		return (4.0 * (N + 1.0) * (N + 3.0) + 2.0 * (2.0 * m_sq - 1.0) + 4.0 * nu * (2.0 * N + 2.0 * nu + 5.0)
		        - shape - (4.0 * m_sq - 1.0) * (2.0 * N + 3.0) * (2.0 * N + 5.0 + 4.0 * nu) / shape) / 8.0

	@staticmethod
	def d33_offdiagonal(N, l, m, nu):
		""" (D33)_l,l+2 """
		return -16.0 * Internals.b_spherical(N, l, m, nu) / ((2.0 * l + 3.0) * math.sqrt((2.0 * l + 1.0) * (2.0 * l + 5.0)))

	@staticmethod
	def l2_diagonal(N, m, n3, nu):
		abs_m = abs(m)
		outer = (N + abs_m + nu + 2.0) * (N - abs_m + nu + 2.0)
		if n3 == 0:
			# nu / (n3 + nu) -> 1 continuously at n3 = 0
			pole_term = (nu + 1.0) * outer / (nu + 2.0)
		else:
			pole_term = nu * (nu + 1.0) * outer / ((n3 + nu) * (n3 + nu + 2.0))
		return 0.5 * ((N + 2.0) ** 2 + nu * (2.0 * N + 2.0 * nu + 5.0) + m * m - 2.0
		              - (n3 + nu) * (n3 + nu + 2.0) - pole_term)

	@staticmethod
	def l2_offdiagonal(N, m, n3, nu):
		""" (L^2)_n3,n3+2 """
		abs_m = abs(m)
		numerator = ((n3 + 2.0 * nu + 2.0) * (n3 + 2.0) * (n3 + 1.0) * (n3 + 2.0 * nu + 3.0)
		             * (N + abs_m + n3 + 2.0 * nu + 4.0) * (N + abs_m - n3) * (N - abs_m - n3)
		             * (N - abs_m + n3 + 2.0 * nu + 4.0))
		denominator = (n3 + nu + 1.0) * (n3 + nu + 2.0) ** 2 * (n3 + nu + 3.0)
		return 0.25 * math.sqrt(max(0.0, numerator / denominator))
