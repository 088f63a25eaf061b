"""

To run these tests:
1.  pip install -r requirements.txt
2.  python -m unittest oscsphere.test_cli

"""
# Standard Library
import contextlib
import io
import json
import math
import unittest

# Oscsphere
from oscsphere import bases, cli
from oscsphere.bases import OscillatorParams, SphericalQN, SpherePoint


def run(*argv):
	""" (exit code, stdout, stderr) of one command-line invocation. """
	stdout, stderr = io.StringIO(), io.StringIO()
	with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
		code = cli.main(list(argv))
	return code, stdout.getvalue(), stderr.getvalue()


def run_json(*argv):
	code, stdout, _ = run(*argv)
	return code, json.loads(stdout)


class TestSpectrum(unittest.TestCase):
	""" Unit Test for the spectrum command and the output envelope """

	def test_levels(self):
		code, document = run_json('spectrum', '--N', '0..2', '--nu', '0', '--R', '1')
		self.assertEqual(code, 0)
		self.assertEqual(document['command'], 'spectrum')
		self.assertEqual(document['schema_version'], '1')
		self.assertEqual(document['data']['columns'], ['N', 'E', 'degeneracy'])
		self.assertEqual([ row[1] for row in document['data']['rows'] ], [1.5, 4.0, 7.5])
		self.assertEqual([ row[2] for row in document['data']['rows'] ], [1, 3, 6])
		self.assertEqual(document['parameters']['N'], [0, 1, 2])

	def test_csv(self):
		code, stdout, _ = run('spectrum', '--N', '0', '--nu', '0', '--format', 'csv')
		self.assertEqual(code, 0)
		lines = stdout.split("\n")
		self.assertEqual(lines[:2], ["# command=spectrum", "# schema_version=1"])
		self.assertTrue(lines[2].startswith("# parameters={"))
		self.assertIn("# nu_source=nu", lines)
		self.assertTrue(stdout.endswith("\nN,E,degeneracy\n0,1.5,1\n"))

	def test_csv_carries_metadata(self):
		code, stdout, _ = run('interbasis', '--N', '2', '--m', '0', '--nu', '1', '--format', 'csv')
		self.assertEqual(code, 0)
		lines = stdout.split("\n")
		self.assertIn("# schema_version=1", lines)
		self.assertIn("# l_index=[0, 2]", lines)
		defect = next(line for line in lines if line.startswith("# unitarity_defect="))
		self.assertLess(float(defect.split("=", 1)[1]), 1e-10)
		table = [ line for line in lines if line and not line.startswith("#") ]
		self.assertEqual(table[0], "l,n3=0,n3=2")
		self.assertEqual(len(table), 3)
		_, stdout, _ = run('elliptic', '--N', '6', '--m', '0', '--nu', '2', '--a', '0.5', '--format', 'csv')
		self.assertTrue(any(line.startswith("# spectral_mismatch=") for line in stdout.split("\n")))

	def test_physical_parameters(self):
		code, document = run_json('spectrum', '--N', '1', '--omega', '1', '--R', '1')
		self.assertEqual(code, 0)
		metadata = document['data']['metadata']
		self.assertEqual(metadata['nu_source'], 'physical')
		self.assertAlmostEqual(metadata['nu'], (math.sqrt(5.0) - 1.0) / 2.0, places=15)

	def test_usage_errors(self):
		self.assertEqual(run('spectrum', '--N', '2..1')[0], 2)
		self.assertEqual(run('spectrum', '--N', 'two')[0], 2)
		self.assertEqual(run('spectrum', '--N', '1', '--nu', '1', '--omega', '1')[0], 2)
		self.assertEqual(run('spectrum', '--N', '1', '--format', 'xml')[0], 2)
		self.assertEqual(run('unknown')[0], 2)

	def test_domain_error(self):
		code, _, stderr = run('spectrum', '--N', '1', '--nu', '-1')
		self.assertEqual(code, 1)
		self.assertIn('DomainError', stderr)

	def test_help(self):
		code, stdout, _ = run('--help')
		self.assertEqual(code, 0)
		for command in ('spectrum', 'interbasis', 'elliptic', 'verify', 'wavefunction'):
			self.assertIn(command, stdout)
		code, stdout, _ = run('verify', '--help')
		self.assertEqual(code, 0)
		self.assertNotIn('perturb', stdout)

	def test_deterministic_output(self):
		for argv in (('spectrum', '--N', '0..5', '--nu', '0.618'), ('interbasis', '--N', '4', '--m', '0', '--nu', '1.5'),
		             ('elliptic', '--N', '4', '--m', '1', '--nu', '0.5', '--a', '2', '--format', 'csv')):
			self.assertEqual(run(*argv), run(*argv))


class TestInterbasis(unittest.TestCase):
	""" Unit Test for the interbasis command """

	def test_level_two(self):
		code, document = run_json('interbasis', '--N', '2', '--m', '0', '--nu', '1', '--method', 'f43')
		self.assertEqual(code, 0)
		data = document['data']
		self.assertEqual(data['columns'], ['l', 'n3=0', 'n3=2'])
		self.assertEqual([ row[0] for row in data['rows'] ], [0, 2])
		self.assertLess(data['metadata']['unitarity_defect'], 1e-10)
		self.assertAlmostEqual(data['rows'][0][1], math.sqrt(5.0) / 3.0, places=14)

	def test_single_state(self):
		code, document = run_json('interbasis', '--N', '1', '--m', '1')
		self.assertEqual(code, 0)
		self.assertEqual(len(document['data']['rows']), 1)
		self.assertAlmostEqual(abs(document['data']['rows'][0][1]), 1.0, places=14)

	def test_methods_agree(self):
		_, quadrature = run_json('interbasis', '--N', '5', '--m', '1', '--nu', '0.7', '--method', 'quadrature')
		_, racah = run_json('interbasis', '--N', '5', '--m', '1', '--nu', '0.7', '--method', 'racah')
		for left, right in zip(quadrature['data']['rows'], racah['data']['rows']):
			for x, y in zip(left[1:], right[1:]):
				self.assertAlmostEqual(x, y, delta=1e-9)

	def test_invalid_level(self):
		code, _, stderr = run('interbasis', '--N', '2', '--m', '3', '--nu', '1')
		self.assertEqual(code, 1)
		self.assertTrue(stderr)


class TestElliptic(unittest.TestCase):
	""" Unit Test for the elliptic command """

	def test_single_state(self):
		code, document = run_json('elliptic', '--N', '2', '--m', '2', '--nu', '1', '--a', '1', '--R', '1')
		self.assertEqual(code, 0)
		rows = document['data']['rows']
		self.assertEqual(len(rows), 1)
		self.assertAlmostEqual(rows[0][1], 2.0, places=12)

	def test_free_mixing(self):
		_, document = run_json('elliptic', '--N', '5', '--m', '1', '--nu', '0.3', '--a', '0')
		for row, expected in zip(document['data']['rows'], (2.0, 12.0, 30.0)):
			self.assertAlmostEqual(row[1], expected, places=12)
		self.assertEqual(len(document['data']['rows']), 3)

	def test_spectral_mismatch(self):
		code, document = run_json('elliptic', '--N', '6', '--m', '0', '--nu', '2', '--a', '0.5')
		self.assertEqual(code, 0)
		metadata = document['data']['metadata']
		self.assertLess(metadata['spectral_mismatch'], 1e-9)
		self.assertEqual(metadata['system'], 'oblate')
		columns = document['data']['columns']
		self.assertEqual(columns[:4], ['q', 'lambda', 'residual_spherical', 'residual_cylindrical'])
		self.assertIn('T_l=6', columns)
		self.assertIn('U_n3=6', columns)

	def test_modulus_flags(self):
		_, document = run_json('elliptic', '--N', '2', '--m', '0', '--nu', '1', '--k', '0.5', '--system', 'prolate')
		self.assertAlmostEqual(document['data']['metadata']['a'], -0.25, places=15)
		self.assertEqual(document['data']['metadata']['system'], 'prolate')

	def test_usage_errors(self):
		self.assertEqual(run('elliptic', '--N', '2', '--m', '0', '--nu', '1')[0], 2)
		self.assertEqual(run('elliptic', '--N', '2', '--m', '0', '--nu', '1', '--a', '1', '--k', '0.5')[0], 2)
		self.assertEqual(run('elliptic', '--N', '2', '--m', '0', '--nu', '1', '--a', '-2')[0], 1)


class TestVerify(unittest.TestCase):
	""" Unit Test for the verify command """

	def test_kernel_suite(self):
		code, document = run_json('verify', '--suite', 'kernel')
		self.assertEqual(code, 0)
		self.assertEqual(document['schema_version'], '1')
		self.assertEqual(document['data']['metadata']['failed'], 0)
		self.assertNotIn('runtime_ms', document['data']['columns'])

	def test_timings(self):
		code, document = run_json('verify', '--suite', 'kernel', '--timings')
		self.assertEqual(code, 0)
		self.assertEqual(document['data']['columns'][-1], 'runtime_ms')

	def test_perturbed_energy_fails(self):
		code, stdout, _ = run('verify', '--suite', 'bases', '--perturb-energy', '0.01', '--format', 'csv')
		self.assertEqual(code, 1)
		self.assertTrue(stdout.startswith("# command=verify\n# schema_version=1\n"))
		self.assertIn("\ncheck_name,parameters,max_error,tolerance,passed\n", stdout)
		self.assertIn('false', stdout)


class TestWavefunction(unittest.TestCase):
	""" Unit Test for the wavefunction command """

	def test_spherical_point(self):
		code, document = run_json('wavefunction', '--kind', 'spherical', '--N', '2', '--l', '0', '--nu', '1',
		                          '--point', '0.3,0.2,0.1')
		self.assertEqual(code, 0)
		row = document['data']['rows'][0]
		expected = bases.wavefunction('spherical', SphericalQN(2, 0, 0), OscillatorParams.from_nu(1.0),
		                              SpherePoint.spherical(0.3, 0.2, 0.1))
		self.assertAlmostEqual(row[4], expected.real, places=14)
		self.assertAlmostEqual(row[0], math.cos(0.3), places=15)

	def test_seeded_points(self):
		code, document = run_json('wavefunction', '--kind', 'cylindrical', '--N', '3', '--m', '1', '--n3', '2',
		                          '--nu', '0.5', '--npoints', '7')
		self.assertEqual(code, 0)
		self.assertEqual(len(document['data']['rows']), 7)

	def test_elliptic_basis(self):
		code, document = run_json('wavefunction', '--kind', 'elliptic', '--N', '3', '--m', '1', '--q', '1', '--nu', '0.5',
		                          '--a', '0.5', '--coords', 'elliptic', '--point', '0.4,0.9,1.1')
		self.assertEqual(code, 0)
		self.assertEqual(len(document['data']['rows']), 1)
		self.assertIn('lambda', document['data']['metadata'])

	def test_usage_errors(self):
		self.assertEqual(run('wavefunction', '--kind', 'spherical', '--N', '2', '--nu', '1')[0], 2)
		self.assertEqual(run('wavefunction', '--kind', 'elliptic', '--N', '2', '--q', '5', '--a', '1')[0], 2)
		self.assertEqual(run('wavefunction', '--kind', 'cylindrical', '--N', '2', '--n3', '0', '--coords', 'elliptic',
		                     '--point', '0.1,0.2,0.3')[0], 2)


class TestSerialization(unittest.TestCase):
	""" Unit Test for JSON and CSV writers """

	def test_floats(self):
		self.assertEqual(cli.format_float(0.1), '0.10000000000000001')
		self.assertEqual(cli.format_float(1.5), '1.5')
		self.assertIsNone(cli.format_float(math.inf))
		self.assertIsNone(cli.format_float(math.nan))

	def test_json(self):
		text = cli.to_json({ 'a': [1, 2.5, None, True], 'b': math.inf, 'c': 'x' })
		self.assertEqual(text, '{"a": [1, 2.5, null, true], "b": null, "c": "x"}')
		self.assertEqual(json.loads(text)['b'], None)

	def test_csv(self):
		data = { 'columns': ['x', 'y'], 'rows': [[1, 0.25], ['s', math.nan], [{ 'k': 1 }, False]], 'metadata': {} }
		self.assertEqual(cli.to_csv(data), '# schema_version=1\nx,y\n1,0.25\ns,\n"{""k"": 1}",false\n')
		data['metadata'] = { 'suite': 'kernel', 'gap': math.inf, 'index': [0, 2] }
		self.assertEqual(cli.to_csv(data, 'verify', { 'N': 1 }).split('\n')[:6],
		                 ['# command=verify', '# schema_version=1', '# parameters={"N": 1}', '# suite=kernel', '# gap=null', '# index=[0, 2]'])


if __name__ == '__main__':
	unittest.main()
