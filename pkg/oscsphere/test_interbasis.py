"""

To run these tests:
1.  pip install -r requirements.txt
2.  python -m unittest oscsphere.test_interbasis

"""
# Standard Library
import math
import os
import unittest
from unittest import mock

# Third Party
import numpy as np

# Oscsphere
from oscsphere import bases, interbasis
from oscsphere.bases import OscillatorParams, SpherePoint
from oscsphere.core import DomainError, QUAD_NODES_ENV, UsageError


def _pairs(N, m):
	return [ (l, n3) for l in bases.l_stride(N, m) for n3 in bases.n3_stride(N, m) ]


class TestClosedForms(unittest.TestCase):
	""" Unit Test for the 4F3 and Racah representations """

	def test_single_state_blocks(self):
		for N in range(0, 7):
			for m in (-N, N):
				for nu in (0.0, 1.3):
					self.assertAlmostEqual(abs(interbasis.w_via_4f3(N, N, m, 0, nu)), 1.0, places=13)
					self.assertAlmostEqual(abs(interbasis.w_via_racah(N, N, m, 0, nu)), 1.0, places=13)
		self.assertAlmostEqual(abs(interbasis.w_via_4f3(1, 1, 0, 1, 0.4)), 1.0, places=13)

	def test_level_two_values(self):
		nu = 1.0
		self.assertAlmostEqual(interbasis.w_via_4f3(2, 0, 0, 0, nu), math.sqrt(5.0) / 3.0, places=13)
		self.assertAlmostEqual(interbasis.w_via_4f3(2, 0, 0, 2, nu), -2.0 / 3.0, places=13)
		for l, n3 in _pairs(2, 0):
			self.assertAlmostEqual(interbasis.w_via_4f3(2, l, 0, n3, nu), interbasis.overlap_oracle(2, l, 0, n3, nu), delta=1e-9)

	def test_racah_matches_4f3(self):
		for nu in (0.0, 0.5, 3.7):
			for N in range(0, 11):
				for m in range(-N, N + 1):
					for l, n3 in _pairs(N, m):
						try:
							self.assertAlmostEqual(interbasis.w_via_racah(N, l, m, n3, nu),
							                       interbasis.w_via_4f3(N, l, m, n3, nu), delta=1e-11)
						except Exception as ex:
							print(f"\nFailed for N={N}, l={l}, m={m}, n3={n3}, nu={nu}")
							raise ex

	def test_racah_matches_oracle(self):
		self.assertAlmostEqual(interbasis.w_via_racah(4, 2, 2, 0, 2.0), interbasis.overlap_oracle(4, 2, 2, 0, 2.0), delta=1e-9)

	def test_invalid_pairs(self):
		with self.assertRaises(DomainError):
			interbasis.w_via_4f3(3, 2, 0, 1, 1.0)
		with self.assertRaises(DomainError):
			interbasis.w_via_racah(2, 2, 0, 1, 1.0)
		with self.assertRaises(DomainError):
			interbasis.w_via_4f3(2, 0, 0, 0, -1.0)


class TestOracles(unittest.TestCase):
	""" Unit Test for the quadrature representations """

	def test_odd_combinations_vanish(self):
		self.assertEqual(interbasis.overlap_oracle(3, 1, 0, 0, 1.0), 0.0)
		self.assertEqual(interbasis.overlap_oracle(4, 2, 1, 0, 0.5), 0.0)

	def test_single_state_oracle(self):
		for N, m in ((0, 0), (3, 3), (4, -4)):
			self.assertAlmostEqual(abs(interbasis.overlap_oracle(N, N, m, 0, 2.0)), 1.0, delta=1e-10)

	def test_quadrature_block_is_orthogonal(self):
		block = interbasis.w_block(6, 1, 2.5, method='quadrature')
		self.assertLess(interbasis.unitarity_defect(block), 1e-9)

	def test_triple_agreement(self):
		for nu in (0.0, 0.5, 1.0, 3.7, 25.0):
			for N in range(0, 13):
				for m in range(-N, N + 1):
					for l, n3 in _pairs(N, m):
						values = (interbasis.w_via_4f3(N, l, m, n3, nu), interbasis.w_via_racah(N, l, m, n3, nu),
						          interbasis.overlap_oracle(N, l, m, n3, nu))
						try:
							self.assertLess(max(values) - min(values), 1e-9)
						except Exception as ex:
							print(f"\nFailed for N={N}, l={l}, m={m}, n3={n3}, nu={nu}: {values}")
							raise ex

	def test_parity_split_matches_4f3(self):
		for nu in (0.0, 0.618, 3.7):
			for N in range(0, 9):
				for m in range(-N, N + 1):
					for l, n3 in _pairs(N, m):
						try:
							self.assertAlmostEqual(interbasis.w_parity_split(N, l, m, n3, nu),
							                       interbasis.w_via_4f3(N, l, m, n3, nu), delta=1e-10)
						except Exception as ex:
							print(f"\nFailed for N={N}, l={l}, m={m}, n3={n3}, nu={nu}")
							raise ex

	def test_node_requirements(self):
		with self.assertRaises(UsageError):
			interbasis.overlap_oracle(2, 0, 0, 0, 1.0, nodes=10)
		with mock.patch.dict(os.environ, { QUAD_NODES_ENV: '100' }):
			self.assertAlmostEqual(interbasis.overlap_oracle(2, 0, 0, 0, 1.0), math.sqrt(5.0) / 3.0, delta=1e-10)
		with mock.patch.dict(os.environ, { QUAD_NODES_ENV: 'many' }):
			with self.assertRaises(UsageError):
				interbasis.overlap_oracle(2, 0, 0, 0, 1.0)


class TestBlocks(unittest.TestCase):
	""" Unit Test for interbasis blocks """

	def test_block_shapes(self):
		block = interbasis.w_block(1, 1, 0.3)
		self.assertEqual(block.entries.shape, (1, 1))
		self.assertAlmostEqual(abs(block.entries[0, 0]), 1.0, places=13)

		block = interbasis.w_block(2, 0, 0.0, method='quadrature')
		self.assertEqual(block.l_index, [0, 2])
		self.assertEqual(block.n3_index, [0, 2])
		self.assertLess(interbasis.unitarity_defect(block), 1e-12)

	def test_unitarity_grid(self):
		for nu in (0.0, 0.5, 1.0, 3.7, 25.0):
			for N in range(0, 13):
				for m in range(-N, N + 1):
					block = interbasis.w_block(N, m, nu)
					try:
						self.assertLess(interbasis.unitarity_defect(block), 1e-10)
					except Exception as ex:
						print(f"\nFailed for N={N}, m={m}, nu={nu}")
						raise ex

	def test_methods_agree_on_large_block(self):
		f43 = interbasis.w_block(9, 3, 5.0, method='f43')
		racah = interbasis.w_block(9, 3, 5.0, method='racah')
		self.assertLess(np.max(np.abs(f43.entries - racah.entries)), 1e-11)

	def test_inverse_and_accessors(self):
		block = interbasis.w_block(5, 1, 0.7)
		np.testing.assert_allclose(block.inverse() @ block.entries, np.eye(block.size), atol=1e-12)
		self.assertEqual(block.entry(3, 2), float(block.entries[1, 1]))
		self.assertEqual([ l for l, _ in block.rows() ], block.l_index)

	def test_block_validation(self):
		with self.assertRaises(DomainError):
			interbasis.w_block(2, 3, 1.0)
		with self.assertRaises(UsageError):
			interbasis.w_block(2, 0, 1.0, method='guess')
		with self.assertRaises(DomainError):
			interbasis.InterbasisBlock(N=2, m=0, nu=1.0, l_index=[0, 2], n3_index=[0], entries=[[1.0], [0.0]])

	def test_pointwise_reconstruction(self):
		params = OscillatorParams.from_nu(0.7)
		block = interbasis.w_block(3, 1, 0.7)
		points = (SpherePoint.spherical(0.4, 0.9, 1.3), SpherePoint.spherical(1.2, 2.6, 4.0),
		          SpherePoint.cylindrical(0.3, 0.2, -0.8))
		for point in points:
			for l in block.l_index:
				expected = bases.wavefunction('spherical', bases.SphericalQN(3, l, 1), params, point)
				self.assertAlmostEqual(abs(interbasis.expand_spherical(block, l, params, point) - expected), 0.0, delta=1e-10)


class TestLimits(unittest.TestCase):
	""" Unit Test for the flat-space and free-motion limits of W """

	def test_flat_forms_agree(self):
		self.assertAlmostEqual(interbasis.w_limit('flat_3f2', 4, 2, 0, 2), 1.0 / math.sqrt(21.0), delta=1e-12)
		self.assertAlmostEqual(interbasis.w_limit('flat_cg', 4, 2, 0, 2), 1.0 / math.sqrt(21.0), delta=1e-12)
		for N in range(0, 7):
			for m in range(-N, N + 1):
				for l, n3 in _pairs(N, m):
					self.assertAlmostEqual(interbasis.w_limit('flat_3f2', N, l, m, n3),
					                       interbasis.w_limit('flat_cg', N, l, m, n3), delta=1e-12)

	def test_flat_block_is_orthogonal(self):
		for N, m in ((4, 0), (5, 1), (6, -2)):
			entries = np.array([ [ interbasis.w_limit('flat_cg', N, l, m, n3) for n3 in bases.n3_stride(N, m) ]
			                     for l in bases.l_stride(N, m) ])
			np.testing.assert_allclose(entries.T @ entries, np.eye(len(entries)), atol=1e-12)

	def test_flat_convergence(self):
		errors = [ abs(interbasis.w_via_4f3(2, 0, 0, 2, nu) - interbasis.w_limit('flat_cg', 2, 0, 0, 2))
		           for nu in (1e4, 1e5, 1e6) ]
		self.assertLess(errors[-1], 5e-3)
		for earlier, later in zip(errors, errors[1:]):
			self.assertGreaterEqual(earlier / later, 3.0)
			self.assertLessEqual(earlier / later, 30.0)

	def test_free_limit(self):
		for N in range(0, 7):
			for m in range(-N, N + 1):
				for l, n3 in _pairs(N, m):
					self.assertAlmostEqual(interbasis.w_limit('free_racah', N, l, m, n3),
					                       interbasis.w_via_4f3(N, l, m, n3, 0.0), delta=1e-10)
		self.assertAlmostEqual(abs(interbasis.w_limit('free_racah', 3, 3, 3, 0)), 1.0, places=13)

	def test_unknown_kind(self):
		with self.assertRaises(UsageError):
			interbasis.w_limit('flat', 2, 0, 0, 0)


if __name__ == '__main__':
	unittest.main()
