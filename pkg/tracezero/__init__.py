__title__ = 'tracezero'
__author__ = 'Axelancerr'
__license__ = 'MIT'
__copyright__ = 'Copyright 2020 Axelancerr'
__version__ = '0.1.0'

import logging
from collections import namedtuple

from .bases import BaseMultiplier
from .client import MULTIPLIERS, Client
from .compress import compress, decompress, negate_line, validate_line
from .curve import Curve, Point, SubgroupParams, count_points_base, derive_subgroup, random_t3_point, search_curve
from .exceptions import AlgorithmException, BoundExceeded, CurveException, DegenerateConjugates, DegenerateDoubling, DegenerateTripling, DegreeMismatch, \
                        DivisionByZero, FieldException, IdentityInput, InvalidLine, InvalidParameters, InvalidScalar, LineException, MultiplierCreationError, \
                        MultiplierException, MultiplierNotFound, NoCandidate, NotIrreducible, NotPrimeOrder, NotTraceZero, ParamsFileError, PointNotOnCurve, \
                        PolynomialException, SingularSystem, TraceZeroException
from .field import CubicExtension, Fq3Element, PrimeField
from .formulas import double_line, hp_poly, sigma_poly, solve_line_system, spq_coeffs, system_rows, triple_line
from .frobred import ExceptionSets, FrobeniusMultiplier, algorithm2, algorithm2_path, b_sets, decompose_scalar, exception_sets, reduced_basis
from .ladder import LadderContext, LadderMultiplier, algorithm1, build_context, special_set_M, special_set_Mr, type_b_split
from .objects import IdentityLine, Line, OperationCounter, SPQ
from .oracle import OracleMultiplier, verify_formulas
from .paramsfile import dump_params, dumps, load_params, loads
from .poly import PolyFq, deg3_irreducible_factors, gcd_monic, is_irreducible_cubic, root_in_fq3
from .subalg import subalg

version_info = namedtuple('VersionInfo', 'major minor micro releaselevel serial')(major=0, minor=1, micro=0, releaselevel='alpha', serial=0)
logging.getLogger(__name__).addHandler(logging.NullHandler())
