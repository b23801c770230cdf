"""Exact arithmetic for linear ordinary differential operators.

Field towers Q -> Q(theta) -> Q(theta)(t1..tm), the Ore ring K(x)[D] with
D*x = x*D + 1, exponential-solution certificates, exterior-power degree
bounds, irreducibility for orders up to three, and parametric specialization
machinery including the generic factor system export.
"""

from .bounds import BoundReport, WedgeTerm, b_of, check_factor_bound, exponential_bound, op_degree
from .errors import (BadDimension, BadOrder, DivisionByZero, DivisionByZeroOperator,
                     FieldMismatch, IncompleteSearch, LodoError, NoCyclicVectorFound,
                     NonIntegerExponent, NotADivisor, NotWellDefined, OrderZero,
                     ParseError, UnknownSymbol, UnsupportedDegree, UnsupportedOrder,
                     UnsupportedOrderGap, ZeroOperator)
from .exterior import (CYCLIC_POLICY, ExteriorReduction, companion, cyclic_to_scalar,
                       exterior_reduction, matrix_degree, wedge_system)
from .fields import FieldDescriptor
from .irred import (INCONCLUSIVE, IRREDUCIBLE, REDUCIBLE, IrredVerdict, adjoint,
                    irreducible, right_factor, verify_factorization)
from .opexpr import (parse_min_poly, parse_op, parse_ratfun, parse_scalar,
                     parse_unipoly, print_op, print_ratfun, print_scalar)
from .ore import DiffOp, gcrd
from .param import (GenericFactorSystem, SpecPoint, clearing_factor, export_system,
                    generic_division, spec_commute_check, specialize)
from .ratfun import RatFun
from .riccati import (Certificate, ExpSolsReport, expsols, indicial_at,
                      indicial_at_infinity, poly_part_candidates, polysols,
                      riccati_value, twist)
from .roots import RootReport, integer_roots, roots_in_field
from .scalar import Scalar
from .unipoly import UniPoly, poly_gcd, poly_lcm, squarefree_decomposition, squarefree_part

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
