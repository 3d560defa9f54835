"""Run every invariant check on one parameter array."""

from __future__ import annotations

from .ekr import EkrSystem, check_ekr, degenerate_check
from .lp import bound_closed_form, check_lp, dual_vector, f_closed_form
from .parameters import ParameterArray, ekr_admissible
from .realization import Check, _chk, realize, verify_section2


def check_family(params, sys: EkrSystem) -> list[Check]:
    """Family closed forms against the matrix pipeline, for every t."""
    out = []
    d = sys.d
    for t in range(d + 1):
        dv = dual_vector(sys, t)
        fs = [f_closed_form(params, t, j) for j in range(t + 1, d + 1)]
        out.append(_chk(f"family f closed form t={t}", list(dv.f[t + 1:]) == fs))
        out.append(_chk(f"family bound closed form t={t}", bound_closed_form(params, t) == dv.bound))
    return out


def verify_all(p: ParameterArray, params=None) -> list[Check]:
    r = realize(p)
    out = verify_section2(r)
    if not ekr_admissible(p):
        return out + degenerate_check(r)
    sys = EkrSystem.build(r)
    out += check_ekr(sys) + check_lp(sys)
    if params is not None:
        out += check_family(params, sys)
    return out
