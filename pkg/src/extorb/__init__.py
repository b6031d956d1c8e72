"""Automorphism-group bookkeeping for central extensions of elementary abelian
p-groups: stabilizers, orbits, the intersection orbit group and |Im(rho)|,
computed by exhaustive enumeration over small general linear groups."""

from .classes import ExtensionClass, act_n, act_v, n_automorphism, pair_act, parse_class, print_class
from .errors import (CapExceeded, DegenerateForm, ExtorbError, FormSyntaxError, InputError, SingularMatrix,
                     UnlabeledOrder, WellDefinednessViolation, WitnessSearchCapExceeded, ZeroForm)
from .expr import parse_component, parse_form
from .forms import (AlternatingBockstein, FormTriple, QuadraticFormF2, arf_democratic, arf_symplectic, bilinear_of,
                    bilrad, change_basis, classify, equivalent, rad, reduce_to_standard, standard_form)
from .fp import FpMatrix, FpScalar, Subspace, gl_enumerate, gl_order, kernel, mat_inv, mat_mul, rank, solve_affine
from .groups import FiniteGroup, GroupId, identify_group
from .orbits import (Config, OmegaGroup, StabilizerReport, divisibility_check, fixed_classes, im_rho_order,
                     joint_stabilizer, omega, orbit, stabilizer_n, stabilizer_v)
from .twisting import TwistingMap, c_chi, c_chi_membership
from .wells import AutOrderReport, aut_order, hom_order, semisimple_report

__version__ = "0.1.0"

__all__ = [
    "ExtensionClass",
    "act_n",
    "act_v",
    "n_automorphism",
    "pair_act",
    "parse_class",
    "print_class",
    "CapExceeded",
    "DegenerateForm",
    "ExtorbError",
    "FormSyntaxError",
    "InputError",
    "SingularMatrix",
    "UnlabeledOrder",
    "WellDefinednessViolation",
    "WitnessSearchCapExceeded",
    "ZeroForm",
    "parse_component",
    "parse_form",
    "AlternatingBockstein",
    "FormTriple",
    "QuadraticFormF2",
    "arf_democratic",
    "arf_symplectic",
    "bilinear_of",
    "bilrad",
    "change_basis",
    "classify",
    "equivalent",
    "rad",
    "reduce_to_standard",
    "standard_form",
    "FpMatrix",
    "FpScalar",
    "Subspace",
    "gl_enumerate",
    "gl_order",
    "kernel",
    "mat_inv",
    "mat_mul",
    "rank",
    "solve_affine",
    "FiniteGroup",
    "GroupId",
    "identify_group",
    "Config",
    "OmegaGroup",
    "StabilizerReport",
    "divisibility_check",
    "fixed_classes",
    "im_rho_order",
    "joint_stabilizer",
    "omega",
    "orbit",
    "stabilizer_n",
    "stabilizer_v",
    "TwistingMap",
    "c_chi",
    "c_chi_membership",
    "AutOrderReport",
    "aut_order",
    "hom_order",
    "semisimple_report",
]
