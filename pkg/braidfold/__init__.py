from braidfold.algebra.cartan import CartanDatum, validate_cartan, finite_type
from braidfold.algebra.freealg import Element, pair
from braidfold.algebra.falg import is_zero_in_f, dim_weight, proj_left, proj_right
from braidfold.algebra.braid import ti_apply, ti_inverse_apply
