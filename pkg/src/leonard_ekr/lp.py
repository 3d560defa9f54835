"""Second eigenmatrix, the LP dual vector and the EKR bound.

f is indexed by j on the E_j v* side and Q rows by i on the E*_i v side, so
(f Q^T)_i = sum_j f_j Q_ij and the bound is (f Q^T)_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .ekr import EkrSystem, ekr_coefficients
from .families import DualHahnParams, KrawtchoukParams, QRacahParams
from .hypergeom import hyp_pfq, pochhammer, q_pochhammer, qhyp_rphis
from .linalg import Matrix, coordinates, kernel
from .parameters import fraction_str, require_admissible
from .realization import Check, ConsistencyError, Realization, _chk


def second_eigenmatrix(r: Realization) -> Matrix:
    """Q with E_j v* = (<v,v*>/||v||^2) sum_i Q_ij E*_i v."""
    c = r.form(r.v, r.v_star) / r.norm2(r.v)
    std = r.standard_basis
    cols = []
    for j in range(r.d + 1):
        x = coordinates(std, r.E[j] @ r.v_star)
        cols.append([xi / c for xi in x])
    return Matrix.from_columns(cols)


def apply_fQt(f, Q: Matrix) -> tuple:
    return tuple(sum((f[j] * Q[i, j] for j in range(Q.ncols)), Fraction(0)) for i in range(Q.nrows))


def bound_scalar(p, t: int) -> Fraction:
    """eta*_d(theta*_0) eta_{d-t}(theta_0) / (phi_1..phi_{d-t} eta*_t(theta*_0))."""
    d = p.d
    return (p.eta_star(d, p.theta_star[0]) * p.eta(d - t, p.theta[0])
            / (p.phi_prod(1, d - t) * p.eta_star(t, p.theta_star[0])))


def uniqueness_dimension(Q: Matrix, t: int) -> int:
    """Dimension of {f : f_1..f_t = 0, (fQ^T)_1..(fQ^T)_{d-t} = 0}."""
    d = Q.nrows - 1
    rows = [[1 if j == k else 0 for j in range(d + 1)] for k in range(1, t + 1)]
    rows += [list(Q.row(i)) for i in range(1, d - t + 1)]
    if not rows:
        return d + 1
    return kernel(Matrix(rows)).dim


@dataclass(frozen=True)
class DualVector:
    t: int
    f: tuple
    feasible: bool
    bound: Fraction
    fQt: tuple = ()
    bound_scalar: Fraction | None = None
    solution_dim: int = 1

    def to_json(self) -> dict:
        return {"t": self.t, "f": [fraction_str(x) for x in self.f],
                "feasible": self.feasible, "bound": fraction_str(self.bound)}


def dual_vector(sys: EkrSystem, t: int, Q: Matrix | None = None) -> DualVector:
    r = sys.r
    require_admissible(r.p)
    d = r.d
    if not 0 <= t <= d:
        raise ValueError(f"t must lie in 0..{d}, got {t}")
    Q = second_eigenmatrix(r) if Q is None else Q
    f = tuple(coordinates(r.dual_standard_basis, sys.w[t]))
    fq = apply_fQt(f, Q)
    if f[0] != 1 or any(f[1:t + 1]) or any(fq[1:d - t + 1]):
        raise ConsistencyError(f"dual vector pattern fails at t={t}")
    if list(f) != list(ekr_coefficients(r, t, "dual_standard")):
        raise ConsistencyError(f"dual vector differs from closed form at t={t}")
    scalar = bound_scalar(r.p, t)
    if scalar != fq[0]:
        raise ConsistencyError(f"bound {fq[0]} differs from closed scalar {scalar} at t={t}")
    return DualVector(t, f, all(x >= 0 for x in f[t + 1:]), fq[0], fq, scalar,
                      uniqueness_dimension(Q, t))


def check_lp(sys: EkrSystem) -> list[Check]:
    r = sys.r
    d = r.d
    Q = second_eigenmatrix(r)
    out = [_chk("Q column 0 is all ones", all(Q[i, 0] == 1 for i in range(d + 1))),
           _chk("Q is invertible", Q.rank() == d + 1)]
    for t in range(d + 1):
        try:
            dv = dual_vector(sys, t, Q)
        except ConsistencyError as e:
            out.append(_chk(f"dual vector t={t}", False, str(e)))
            continue
        out.append(_chk(f"dual vector t={t}", True))
        out.append(_chk(f"LP dual unique t={t}", dv.solution_dim == 1,
                        f"homogeneous kernel dim {dv.solution_dim}"))
    return out


# Family closed forms.  Each expects t+1 <= j <= d for f and 0 <= t <= d for the bound.

def _dual_hahn_f(P: DualHahnParams, t: int, j: int) -> Fraction:
    r, s = P.r, P.s
    den = (t - r + s + 1) * pochhammer(s + 2, t) * factorial(t) * pochhammer(r + 2, j - 1)
    if den == 0:
        raise ZeroDivisionError("dual Hahn closed form has a vanishing denominator")
    pre = (pochhammer(1 - j, t) * pochhammer(j + s + 2, t) * pochhammer(s - r + 1, j)
           * (-1) ** (j - 1)) / den
    return pre * hyp_pfq([t - j + 1, t + j + s + 2, 1], [t + 1, t - r + s + 2], 1)


def _krawtchouk_f(P: KrawtchoukParams, t: int, j: int) -> Fraction:
    r, ss = P.r, P.s * P.s_star
    pre = pochhammer(1 - j, t) / factorial(t) * ((r - ss) / r) ** (j - 1)
    return pre * hyp_pfq([t - j + 1, 1], [t + 1], ss / (ss - r))


def _q_racah_f(P: QRacahParams, t: int, j: int) -> Fraction:
    d, q, s, ss, r1, r2 = P.d, P.q, P.s, P.s_star, P.r1, P.r2
    num = (ss ** (j - 1) * q ** ((d + 1) * (j - 1) + t)
           * q_pochhammer(q ** (1 - j), q, t) * q_pochhammer(s * q ** (j + 2), q, t)
           * q_pochhammer(s * q / r1, q, j) * q_pochhammer(s * q / r2, q, j))
    den = ((1 - s * q ** (t + 1) / r1) * (1 - s * q ** (t + 1) / r2)
           * q_pochhammer(q, q, t) * q_pochhammer(s * q**2, q, t)
           * q_pochhammer(r1 * q**2, q, j - 1) * q_pochhammer(r2 * q**2, q, j - 1))
    if den == 0:
        raise ZeroDivisionError("q-Racah closed form has a vanishing denominator")
    series = qhyp_rphis(
        [q ** (t - j + 1), s * q ** (t + j + 2), q ** (t - d - 1) / ss, q],
        [q ** (t + 1), s * q ** (t + 2) / r1, s * q ** (t + 2) / r2], q, q)
    return num / den * series


def f_closed_form(params, t: int, j: int) -> Fraction:
    if not t + 1 <= j <= params.d:
        raise ValueError(f"closed form covers t+1 <= j <= d, got t={t}, j={j}")
    if isinstance(params, DualHahnParams):
        return _dual_hahn_f(params, t, j)
    if isinstance(params, KrawtchoukParams):
        return _krawtchouk_f(params, t, j)
    if isinstance(params, QRacahParams):
        return _q_racah_f(params, t, j)
    raise TypeError(f"no closed form for {type(params).__name__}")


def bound_closed_form(params, t: int) -> Fraction:
    d = params.d
    if not 0 <= t <= d:
        raise ValueError(f"t must lie in 0..{d}, got {t}")
    k = d - t
    if isinstance(params, DualHahnParams):
        return pochhammer(-d - params.s - 1, k) / pochhammer(params.r - params.s - d, k)
    if isinstance(params, KrawtchoukParams):
        ss = params.s * params.s_star
        return (ss / (ss - params.r)) ** k
    if isinstance(params, QRacahParams):
        q, s, ss, r1 = params.q, params.s, params.s_star, params.r1
        num = q_pochhammer(s * q ** (t + 2), q, k) * q_pochhammer(ss * q**2, q, k)
        den = (r1**k * q**k * q_pochhammer(s * q ** (t + 1) / r1, q, k)
               * q_pochhammer(ss * q / r1, q, k))
        return num / den
    raise TypeError(f"no closed form for {type(params).__name__}")


def full_f_closed_form(params, t: int) -> tuple:
    """(1, 0, ..., 0, f_{t+1}, ..., f_d) from the family display."""
    return (Fraction(1),) + (Fraction(0),) * t + tuple(
        f_closed_form(params, t, j) for j in range(t + 1, params.d + 1))
