"""

To run these tests:
1.  pip install -r requirements.txt
2.  python -m unittest oscsphere.test_core

"""
# Standard Library
import fractions
import pathlib
import unittest

# Third Party
import numpy as np

# Oscsphere
from oscsphere import bases, core
from oscsphere.core import ArgumentMissing, ArgumentType, DomainError, UsageError


class TestValidation(unittest.TestCase):
	""" Unit Test for argument validation """

	def test_datatype(self):
		self.assertEqual(core.validate_datatype('N', 3, int), 3)
		self.assertIsNone(core.validate_datatype('N', None, int))
		self.assertEqual(core.validate_datatype('nu', 2.5, (int, float)), 2.5)
		with self.assertRaises(ArgumentMissing):
			core.validate_datatype('N', None, int, mandatory=True)
		with self.assertRaises(ArgumentType) as context:
			core.validate_datatype('nu', 'two', (int, float))
		self.assertIn("int, float", str(context.exception))
		with self.assertRaises(ArgumentType):
			core.validate_datatype('N', True, int)

	def test_missing_and_mistyped_arguments(self):
		for validator in (core.validate_natural, core.validate_integer, core.validate_real):
			with self.assertRaises(ArgumentMissing):
				validator('value', None)
			for value in ('3', True, [1]):
				try:
					with self.assertRaises(ArgumentType):
						validator('value', value)
				except AssertionError:
					print(f"\n{validator.__name__} accepted {value!r}")
					raise
		with self.assertRaises(ArgumentType):
			core.validate_natural('N', 2.0)
		self.assertTrue(issubclass(ArgumentType, UsageError))
		self.assertEqual(ArgumentMissing.exit_code, 2)

	def test_numeric_scalars(self):
		self.assertEqual(core.validate_natural('N', np.int64(4)), 4)
		self.assertIsInstance(core.validate_natural('N', np.int64(4)), int)
		self.assertEqual(core.validate_integer('m', np.int32(-2)), -2)
		self.assertEqual(core.validate_real('nu', np.float64(0.5)), 0.5)
		self.assertEqual(core.validate_real('nu', fractions.Fraction(1, 4)), 0.25)
		self.assertEqual(core.validate_real('nu', 3), 3.0)
		with self.assertRaises(DomainError):
			core.validate_natural('N', -1)
		with self.assertRaises(DomainError):
			core.validate_real('nu', float('nan'))
		with self.assertRaises(DomainError):
			core.validate_real('R', 0.0, minimum=0.0, strict=True)

	def test_dataclass_fields(self):
		with self.assertRaises(ArgumentMissing):
			bases.SphericalQN(N=None, l=0, m=0)
		with self.assertRaises(ArgumentType):
			bases.CylindricalQN(N=2, m='0', n3=0)
		with self.assertRaises(ArgumentType):
			bases.OscillatorParams(R='1', mass=1.0, hbar=1.0, omega=1.0)



class TestRequirements(unittest.TestCase):
	""" Unit Test for the runtime and test requirement files """

	ROOT = pathlib.Path(__file__).resolve().parent.parent

	def packages(self, filename):
		lines = (self.ROOT / filename).read_text(encoding='utf-8').splitlines()
		return { line.split('>=')[0].strip() for line in lines if line.strip() and not line.startswith('#') }

	def test_sympy_is_test_only(self):
		self.assertEqual(self.packages('requirements.txt'), { 'numpy', 'scipy' })
		self.assertIn('sympy', self.packages('requirements-test.txt'))
		self.assertIn("extras_require={ 'test': test_requires }", (self.ROOT / 'setup.py').read_text(encoding='utf-8'))


if __name__ == '__main__':
	unittest.main()
