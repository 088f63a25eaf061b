""" setup.py for use with pip and setuptools during installation """

# -*- coding: utf-8 -*-
from setuptools import setup, find_packages

def read_requirements(path):
	with open(path, encoding="utf-8") as f:
		return [ line for line in f.read().strip().split('\n') if line and not line.startswith('#') ]

install_requires = read_requirements('requirements.txt')
test_requires = read_requirements('requirements-test.txt')

# get version from __version__ variable in oscsphere/__init__.py
from oscsphere import __version__ as version

setup(
	name='oscsphere',
	version=version,
	description='Isotropic oscillator on the three-sphere: bases, interbasis expansions and elliptic coordinates',
	author='Datahenge LLC',
	author_email='brian@datahenge.com',
	packages=find_packages(),
	zip_safe=False,
	include_package_data=True,
	install_requires=install_requires,
	extras_require={ 'test': test_requires },
	python_requires='>=3.8',
	entry_points={
		'console_scripts': ['oscsphere = oscsphere.cli:main']
	}
)
