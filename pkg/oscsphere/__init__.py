""" oscsphere/__init__.py """

# -*- coding: utf-8 -*-

# Constants
__version__ = '1.0.0'

# Oscsphere
# pylint: disable=wrong-import-position
from oscsphere.core import (OscSphereError, DomainError, SingularityError, ConsistencyError, UsageError,  # noqa F401
                            ArgumentMissing, ArgumentType)
from oscsphere.bases import (OscillatorParams, SphericalQN, CylindricalQN, SpherePoint, nu_of, energy,  # noqa F401
                             degeneracy, wavefunction, to_ambient, from_ambient, potential)
from oscsphere.interbasis import InterbasisBlock, w_via_4f3, w_via_racah, overlap_oracle, w_block  # noqa F401
from oscsphere.elliptic import EllipticParams, EllipticSolution, solve, elliptic_wavefunction  # noqa F401
from oscsphere.verify import CheckReport, run_suite  # noqa F401
