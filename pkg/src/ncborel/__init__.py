"""Exact symbolic calculus on the noncommutative space R^3_lam."""

from .scalars import DEFAULT, Context, GaussianRational, ScalarFraction, ScalarPoly
from .algebra import NcPoly, antipode, commutator, coproduct, grade, is_central, normal_mul, x
from .calculus import (
    Form,
    d,
    d_inner,
    d_leibniz,
    d_paper_variant,
    d_shuffle,
    dx,
    invariant_form,
    move_coeff_left_to_right,
    partials,
    wedge,
)
from .hodge import box, codifferential, field_strength, star

__version__ = "0.1.0"
