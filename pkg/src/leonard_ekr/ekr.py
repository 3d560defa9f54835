"""The Erdos-Ko-Rado basis of a Leonard system.

Every object here is computed two ways.  The *oracle* side uses only
subspace sums and intersections of idempotent images; the *closed* side
evaluates the explicit transition formulas from the parameter array.  The
two are compared with exact equality in :func:`check_ekr`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Matrix,
    Subspace,
    combination,
    coordinates,
    proportionality,
    scale,
    subspace_sum,
)
from .parameters import (
    BaseTag,
    ParameterArray,
    apply_d4,
    base_class,
    require_admissible,
)
from .realization import Check, ConsistencyError, Realization, _chk, projections

TARGETS = ("split_down", "dual_standard", "standard")


# ---------------------------------------------------------------------------
# oracle side

def wt_subspace_oracle(r: Realization, t: int) -> Subspace:
    """(E*_0 V + sum_{i>d-t} E*_i V)  intersected with  (E_0 V + sum_{j>t} E_j V)."""
    d = r.d
    if not 0 <= t <= d:
        raise IndexError(f"t = {t} outside 0..{d}")
    left = r.image_sum([r.E_star[0], *r.E_star[d - t + 1:]])
    right = r.image_sum([r.E[0], *r.E[t + 1:]])
    return left & right


def ekr_vector_oracle(r: Realization, t: int, W: Subspace | None = None) -> tuple:
    """The vector w in W_t normalized by E_0 w = E_0 v*."""
    W = wt_subspace_oracle(r, t) if W is None else W
    if W.dim != 1:
        raise ConsistencyError(f"W_{t} has dimension {W.dim}")
    w = W.generator()
    target = r.E[0] @ r.v_star
    c = proportionality(r.E[0] @ w, target)
    if c is None or c == 0:
        raise ConsistencyError(f"E_0 annihilates W_{t}")
    return scale(1 / c, w)


# ---------------------------------------------------------------------------
# closed forms: EKR vector in the three reference bases

class _Sym:
    """Shorthand accessors for the parameter array inside the long formulas."""

    def __init__(self, p: ParameterArray):
        self.p = p
        self.d = p.d
        self.th = p.theta
        self.ts = p.theta_star
        self.vp = p.vp
        self.ph = p.ph
        self.vt = p.vartheta
        self.tau = p.tau
        self.eta = p.eta
        self.taus = p.tau_star
        self.etas = p.eta_star
        self.PH = p.phi_prod
        self.VP = p.varphi_prod


def ekr_coefficients(r: Realization, t: int, target: str) -> list[Fraction]:
    """Coefficients of w_t in one of the reference bases.

    ``target`` is ``"split_down"`` (tau_l(A) v*down), ``"dual_standard"``
    (E_j v*) or ``"standard"`` (E*_i v).
    """
    require_admissible(r.p)
    S = _Sym(r.p)
    d = S.d
    if not 0 <= t <= d:
        raise IndexError(f"t = {t} outside 0..{d}")
    th0, ts0 = S.th[0], S.ts[0]
    out = [Fraction(0)] * (d + 1)

    if target == "split_down":
        pref = r.form(r.v, r.v_star) / r.form(r.v, r.v_star_down)
        for ell in range(t + 1):
            out[ell] = pref * S.eta(d - ell, th0) / S.eta(d, th0)
        tail = pref * S.eta(d - t, th0) / (S.eta(d, th0) * S.etas(t, ts0))
        for ell in range(t + 1, d + 1):
            out[ell] = tail * S.etas(ell, ts0) / S.PH(d - ell + 1, d - t)

    elif target == "dual_standard":
        out[0] = Fraction(1)
        pref = S.eta(d - t, th0) / (S.eta(d, th0) * S.etas(t, ts0))
        for j in range(t + 1, d + 1):
            inner = sum((S.tau(ell, S.th[j]) * S.etas(ell - 1, ts0) * S.vt(ell)
                         / S.PH(d - ell + 1, d - t) for ell in range(t + 1, j + 1)), Fraction(0))
            out[j] = pref * S.PH(d - j + 1, d) / (S.VP(2, j) * (S.th[j] - th0)) * inner

    elif target == "standard":
        pref = r.form(r.v, r.v_star) / r.norm2(r.v)
        out[0] = pref * S.etas(d, ts0) * S.eta(d - t, th0) / (S.PH(1, d - t) * S.etas(t, ts0))
        for i in range(d - t + 1, d + 1):
            inner = sum((S.taus(ell, S.ts[i]) * S.eta(ell - 1, th0) * S.vt(ell)
                         / S.PH(d - t + 1, ell) for ell in range(d - t + 1, i + 1)), Fraction(0))
            out[i] = pref * S.PH(d - t + 1, i) / (S.VP(2, i) * (S.ts[i] - ts0)) * inner

    else:
        raise ValueError(f"unknown target basis {target!r}; expected one of {TARGETS}")
    return out


def reference_basis(r: Realization, target: str) -> list[tuple]:
    return {"split_down": r.split_down_basis,
            "dual_standard": r.dual_standard_basis,
            "standard": r.standard_basis}[target]


def ekr_vector_closed(r: Realization, t: int, target: str = "dual_standard") -> list[Fraction]:
    """Alias kept for the public surface: coefficient vector of w_t."""
    return ekr_coefficients(r, t, target)


def to_split_coordinates(r: Realization, coeffs, target: str) -> tuple:
    return combination(coeffs, reference_basis(r, target))


# ---------------------------------------------------------------------------
# closed forms: reference bases in terms of the EKR basis

def from_ekr_coefficients(r: Realization, target: str) -> Matrix:
    """Matrix M with reference_basis[k] = sum_t M[t][k] w_t."""
    require_admissible(r.p)
    S = _Sym(r.p)
    d = S.d
    th0, ts0 = S.th[0], S.ts[0]
    n = d + 1
    M = [[Fraction(0)] * n for _ in range(n)]

    if target == "split_down":
        pref = r.form(r.v, r.v_star_down) / r.form(r.v, r.v_star) * S.eta(d, th0) / S.vp(1)
        for ell in range(n):
            if ell >= 1:
                M[ell - 1][ell] = -pref * S.ph(d - ell + 1) / (S.eta(d - ell, th0) * S.vt(ell))
            upper = S.ph(d - ell) / S.vt(ell + 1) if ell < d else S.vp(1)
            lower = S.ph(d - ell + 1) / S.vt(ell) if ell >= 1 else S.vp(1)
            M[ell][ell] = pref / S.eta(d - ell, th0) * (upper + lower - S.vp(1))
            if ell <= d - 1:
                M[ell + 1][ell] = pref * (S.ts[d - ell] - ts0) / (S.eta(d - ell - 1, th0) * S.vt(ell + 1))

    elif target == "dual_standard":
        M[d][0] = Fraction(1)
        for j in range(1, n):
            thj = S.th[j]
            pref = S.VP(2, j) * S.eta(d, th0) / (S.PH(d - j + 1, d) * S.tau(j, thj) * S.eta(d - j, thj))
            M[j - 1][j] += -pref * S.ph(d - j + 1) * S.eta(d - j, thj) / (S.eta(d - j, th0) * S.vt(j))
            for t in range(j, d):
                M[t][j] += pref * (thj - th0) * S.eta(d - t - 1, thj) / S.eta(d - t, th0) * (
                    S.ph(d - t) / S.vt(t + 1)
                    + (thj - S.th[t + 1]) * (S.ts[d - t + 1] - ts0) / S.vt(t))
            M[d][j] += pref * (S.vp(1) + (S.ts[1] - ts0) * (thj - th0))

    elif target == "standard":
        base = r.form(r.v, r.v_star) / r.norm2(r.v_star)
        M[0][0] = base
        for i in range(1, n):
            tsi = S.ts[i]
            pref = base * S.VP(2, i) * S.eta(d, th0) * S.etas(d, ts0) / (
                S.PH(1, i) * S.taus(i, tsi) * S.etas(d - i, tsi))
            M[0][i] += pref * (S.vp(1) + (S.th[1] - th0) * (tsi - ts0)) / S.eta(d, th0)
            for t in range(1, d - i + 1):
                M[t][i] += pref * (tsi - ts0) * S.etas(t - 1, tsi) / (S.PH(d - t + 1, d) * S.eta(d - t, th0)) * (
                    S.ph(d - t + 1) / S.vt(t)
                    + (tsi - S.ts[d - t + 1]) * (S.th[t + 1] - th0) / S.vt(t + 1))
            M[d - i + 1][i] += pref * S.etas(d - i, tsi) * (tsi - ts0) / (
                S.PH(i + 1, d) * S.eta(i - 1, th0) * S.vt(i))

    else:
        raise ValueError(f"unknown target basis {target!r}; expected one of {TARGETS}")
    return Matrix(M)


# ---------------------------------------------------------------------------
# operator actions and the Delta quantities

def delta(p: ParameterArray, s: int) -> Fraction:
    S = _Sym(p)
    d = S.d
    if not 1 <= s <= d - 1:
        raise IndexError(f"s = {s} outside 1..{d - 1}")
    ts0, th0 = S.ts[0], S.th[0]
    num = S.etas(s - 1, ts0) * ((S.ts[d - s + 1] - ts0) * S.vt(s + 1) - (S.ts[d - s] - ts0) * S.vt(s))
    return num / (S.PH(d - s + 1, d) * S.eta(d - s - 1, th0) * S.vt(s + 1))


def delta_product_form(p: ParameterArray, s: int) -> Fraction:
    """Delta_s through the floor-indexed product of theta_star differences."""
    S = _Sym(p)
    d = S.d
    if not 1 <= s <= d - 1:
        raise IndexError(f"s = {s} outside 1..{d - 1}")
    ts = S.ts
    num = (S.etas(s - 1, ts[0]) * (ts[d - s // 2] - ts[s // 2])
           * (ts[d - (s - 1) // 2] - ts[(s + 1) // 2]))
    return num / (S.PH(d - s + 1, d) * S.eta(d - s - 1, S.th[0]) * (ts[d] - ts[0]) * S.vt(s + 1))


def delta_star_display(p: ParameterArray, s: int) -> Fraction:
    """Delta_s of the dual array, written with the original array's data."""
    S = _Sym(p)
    d = S.d
    th0 = S.th[0]
    num = S.eta(s - 1, th0) * ((S.th[d - s + 1] - th0) * S.vt(s + 1) - (S.th[d - s] - th0) * S.vt(s))
    return num / (S.PH(1, s) * S.etas(d - s - 1, S.ts[0]) * S.vt(s + 1))


def difference_identity_sides(p: ParameterArray, s: int) -> tuple[Fraction, Fraction]:
    """Both sides of the floor-indexed identity for theta differences weighted by vartheta."""
    th, d = p.theta, p.d
    lhs = (th[d - s + 1] - th[0]) * p.vartheta(s + 1) - (th[d - s] - th[0]) * p.vartheta(s)
    rhs = (th[d - s // 2] - th[s // 2]) * (th[d - (s - 1) // 2] - th[(s + 1) // 2]) / (th[d] - th[0])
    return lhs, rhs


def action_on_ekr(p: ParameterArray, which: str = "A") -> Matrix:
    """Matrix of A (or A*) in the EKR basis: column t holds the expansion of X w_t."""
    require_admissible(p)
    S = _Sym(p)
    d = S.d
    th, ts = S.th, S.ts
    n = d + 1
    M = [[Fraction(0)] * n for _ in range(n)]
    if which == "A":
        D = [None] + [delta(p, s) for s in range(1, d)]
        for t in range(0, d - 1):
            K = S.PH(d - t + 1, d) * S.eta(d - t, th[0]) / S.etas(t, ts[0])
            M[t][t] = th[t + 1]
            M[t + 1][t] += K * D[t + 1] - (th[t + 1] - th[0])
            for s in range(t + 2, d):
                M[s][t] += K * (D[s] - D[s - 1])
            M[d][t] += -K * D[d - 1]
        M[d - 1][d - 1] = th[d]
        M[d][d - 1] = -(th[d] - th[0])
        M[d][d] = th[0]
    elif which in ("A_star", "A*"):
        ps = apply_d4(p, "star")
        Ds = [None] + [delta(ps, s) for s in range(1, d)]
        for t in range(2, n):
            M[0][t] += -S.PH(1, d) / S.eta(d, th[0]) * Ds[d - 1]
            for s in range(1, t - 1):
                M[s][t] += (S.PH(1, d - s) * S.etas(s, ts[0]) / S.eta(d - s, th[0])
                            * (Ds[d - s] - Ds[d - s - 1]))
            M[t - 1][t] += (S.PH(1, d - t + 1) * S.etas(t - 1, ts[0]) / S.eta(d - t + 1, th[0])
                            * Ds[d - t + 1] - S.ph(d - t + 1) / (th[t] - th[0]))
            M[t][t] = ts[d - t + 1]
        M[1][1] = ts[d]
        # Obtained by dualizing the boundary column of A; the displayed form
        # -(theta*_d - theta*_0) ignores the rescaling between the two EKR bases.
        M[0][1] = -S.ph(d) / (th[1] - th[0])
        M[0][0] = ts[0]
    else:
        raise ValueError("which must be 'A' or 'A_star'")
    return Matrix(M)


def dual_ekr_scalar(r: Realization, t: int) -> Fraction:
    """c_t with (dual-system EKR vector t) = c_t * w_{d-t}."""
    S = _Sym(r.p)
    d = S.d
    return (r.form(r.v, r.v_star) / r.norm2(r.v_star) * S.eta(d, S.th[0]) * S.etas(d - t, S.ts[0])
            / (S.PH(t + 1, d) * S.eta(t, S.th[0])))


# ---------------------------------------------------------------------------
# the assembled system


@dataclass(frozen=True)
class EkrSystem:
    r: Realization
    W: tuple
    w: tuple
    delta: tuple
    T_split_to_ekr: Matrix
    T_ekr_to_split: Matrix
    T_dualstd_to_ekr: Matrix
    T_ekr_to_dualstd: Matrix
    T_std_to_ekr: Matrix
    T_ekr_to_std: Matrix

    @classmethod
    def build(cls, r: Realization) -> EkrSystem:
        require_admissible(r.p)
        d = r.d
        W = tuple(wt_subspace_oracle(r, t) for t in range(d + 1))
        w = tuple(ekr_vector_oracle(r, t, W[t]) for t in range(d + 1))

        def to_ekr(target):
            return Matrix.from_columns([ekr_coefficients(r, t, target) for t in range(d + 1)])

        return cls(
            r=r,
            W=W,
            w=w,
            delta=tuple(delta(r.p, s) for s in range(1, d)),
            T_split_to_ekr=to_ekr("split_down"),
            T_ekr_to_split=from_ekr_coefficients(r, "split_down"),
            T_dualstd_to_ekr=to_ekr("dual_standard"),
            T_ekr_to_dualstd=from_ekr_coefficients(r, "dual_standard"),
            T_std_to_ekr=to_ekr("standard"),
            T_ekr_to_std=from_ekr_coefficients(r, "standard"),
        )

    @property
    def d(self) -> int:
        return self.r.d

    def pairs(self):
        yield "split_down", self.T_split_to_ekr, self.T_ekr_to_split
        yield "dual_standard", self.T_dualstd_to_ekr, self.T_ekr_to_dualstd
        yield "standard", self.T_std_to_ekr, self.T_ekr_to_std

    def basis_matrix(self) -> Matrix:
        """Columns are the oracle EKR vectors in split coordinates."""
        return Matrix.from_columns(list(self.w))

    def conjugated(self, X: Matrix) -> Matrix:
        B = self.basis_matrix()
        return B.inverse() @ X @ B

    def closed_vector(self, t: int, target: str) -> tuple:
        return to_split_coordinates(self.r, ekr_coefficients(self.r, t, target), target)

    def ekr_to_other_bases(self) -> dict[str, Matrix]:
        return {name: back for name, _, back in self.pairs()}


def ekr_to_other_bases(sys: EkrSystem) -> dict[str, Matrix]:
    return sys.ekr_to_other_bases()


def star_ekr_vectors(r: Realization) -> list[tuple]:
    """EKR basis of the dual system, normalized by E*_0 w = E*_0 v."""
    rd = r.dual()
    return [ekr_vector_oracle(rd, t) for t in range(r.d + 1)]


# ---------------------------------------------------------------------------
# verification


def degenerate_check(r: Realization) -> list[Check]:
    """For q = -1 and odd d: W_{2s-1} = W_{2s}, and the EKR construction is refused."""
    d = r.d
    bc = base_class(r.p)
    W = [wt_subspace_oracle(r, t) for t in range(d + 1)]
    out = [_chk("every W_t is a line", all(x.dim == 1 for x in W))]
    if bc.tag is BaseTag.Q_IS_MINUS_ONE and d % 2 == 1:
        out.append(_chk("W_{2s-1} = W_{2s} in the degenerate case",
                        all(W[2 * s - 1] == W[2 * s] for s in range(1, d // 2 + 1))))
        out.append(_chk("direct sum fails in the degenerate case", subspace_sum(W, r.n).dim < r.n))
        try:
            EkrSystem.build(r)
        except ValueError:
            refused = True
        else:
            refused = False
        out.append(_chk("EKR construction refused", refused))
    else:
        out.append(_chk("W_t form a direct sum", subspace_sum(W, r.n).dim == r.n))
    return out


def check_ekr(sys: EkrSystem) -> list[Check]:
    r, d, n = sys.r, sys.d, sys.r.n
    p = r.p
    out = []
    W, w = sys.W, sys.w

    out.append(_chk("every W_t is a line", all(x.dim == 1 for x in W)))
    out.append(_chk("W_0 = E*_0 V and W_d = E_0 V",
                    W[0] == r.image(r.E_star[0]) and W[d] == r.image(r.E[0])))
    out.append(_chk("E_0 w_t = E_0 v*", all(r.E[0] @ x == r.E[0] @ r.v_star for x in w)))
    out.append(_chk("w_0 = v* and w_d = E_0 v*", w[0] == r.v_star and w[d] == r.E[0] @ r.v_star))
    out.append(_chk("W_t form a direct sum", subspace_sum(W, n).dim == n))

    ok = True
    for h in range(d + 1):
        ok &= subspace_sum(W[: h + 1], n) == r.image_sum([r.E_star[0], *r.E_star[d - h + 1:]])
        ok &= subspace_sum(W[h:], n) == r.image_sum([r.E[0], *r.E[h + 1:]])
    out.append(_chk("partial sums of W_t match eigenspace sums", ok))

    for target in TARGETS:
        ok = all(sys.closed_vector(t, target) == w[t] for t in range(n))
        out.append(_chk(f"closed form in {target} basis equals oracle", ok))

    ok = True
    for t in range(n):
        f = coordinates(r.dual_standard_basis, w[t])
        ok &= f[0] == 1 and all(f[j] == 0 for j in range(1, t + 1))
        g = coordinates(r.standard_basis, w[t])
        ok &= all(g[i] == 0 for i in range(1, d - t + 1))
    out.append(_chk("zero patterns of w_t in the standard bases", ok))

    eye = Matrix.identity(n)
    for name, fwd, back in sys.pairs():
        out.append(_chk(f"transition pair for {name} basis is mutually inverse",
                        fwd @ back == eye and back @ fwd == eye))
        basis = reference_basis(r, name)
        ok = all(combination(back.col(k), list(w)) == basis[k] for k in range(n))
        out.append(_chk(f"{name} basis rebuilt from oracle EKR vectors", ok))

    G = projections(list(w))
    zero = Matrix.zeros(n)
    ok = True
    for t in range(n):
        for i in range(n):
            if t > d - i + 1 or (t > 0 and i == 0):
                ok &= (G[t] @ r.E_star[i]) == zero
            if t < i - 1 or (t < d and i == 0):
                ok &= (G[t] @ r.E[i]) == zero
    out.append(_chk("EKR projections vanish on far eigenspaces", ok))

    out.append(_chk("action of A in the EKR basis", action_on_ekr(p, "A") == sys.conjugated(r.A)))
    out.append(_chk("action of A_star in the EKR basis",
                    action_on_ekr(p, "A_star") == sys.conjugated(r.A_star)))

    out.extend(check_delta(p))

    ws = star_ekr_vectors(r)
    ok = all(ws[t] == scale(dual_ekr_scalar(r, t), w[d - t]) for t in range(n))
    out.append(_chk("dual-system EKR basis is a rescaled reversal", ok))

    rr = r.rescaled(v_star=Fraction(-3, 7), v=Fraction(5, 2), v_star_down=Fraction(11, 3))
    ok = all(ekr_vector_oracle(rr, t) == scale(Fraction(-3, 7), w[t]) for t in range(n))
    ok &= all(to_split_coordinates(rr, ekr_coefficients(rr, t, tg), tg) == scale(Fraction(-3, 7), w[t])
              for t in range(n) for tg in TARGETS)
    out.append(_chk("EKR basis scales with v*", ok))
    return out


def check_delta(p: ParameterArray) -> list[Check]:
    d = p.d
    rng = range(1, d)
    ps = apply_d4(p, "star")
    return [
        _chk("Delta_s equals its product form", all(delta(p, s) == delta_product_form(p, s) for s in rng)),
        _chk("vartheta-weighted difference identity",
             all(a == b for a, b in (difference_identity_sides(p, s) for s in rng))
             and all(a == b for a, b in (difference_identity_sides(ps, s) for s in rng))),
        _chk("Delta of the dual array matches its display",
             all(delta(ps, s) == delta_star_display(p, s) for s in rng)),
    ]
