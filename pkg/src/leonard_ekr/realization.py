"""Concrete matrices for a Leonard system in split coordinates.

Coordinates are taken in the split basis u_l = tau_l(A) v*, so A is lower
bidiagonal (diagonal theta, unit subdiagonal), A* is upper bidiagonal
(diagonal theta_star, superdiagonal varphi) and v* = e_0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property

from .linalg import (
    Matrix,
    Subspace,
    dot,
    is_zero,
    kernel,
    scale,
    subspace_sum,
    unit_vector,
)
from .parameters import D4Element, ParameterArray, validate


class ConsistencyError(RuntimeError):
    """An identity that must hold for every valid array failed."""


def lagrange_idempotents(m: Matrix, eigenvalues) -> list[Matrix]:
    """Primitive idempotents prod_{h != i} (m - theta_h)/(theta_i - theta_h)."""
    n = m.nrows
    eye = Matrix.identity(n)
    out = []
    for i, ti in enumerate(eigenvalues):
        e = eye
        for h, th in enumerate(eigenvalues):
            if h != i:
                e = e @ ((m - eye * th) * (1 / (ti - th)))
        out.append(e)
    return out


def _leading_one(x) -> tuple:
    k = next(i for i, a in enumerate(x) if a != 0)
    return scale(1 / x[k], x)


def _symmetric_basis(n: int) -> list[Matrix]:
    out = []
    for a in range(n):
        for b in range(a, n):
            rows = [[0] * n for _ in range(n)]
            rows[a][b] = rows[b][a] = 1
            out.append(Matrix(rows))
    return out


def invariant_form_space(A: Matrix, A_star: Matrix) -> list[Matrix]:
    """Basis of symmetric G with G A = A^T G and G A* = A*^T G."""
    n = A.nrows
    sym = _symmetric_basis(n)
    cols = [(S @ A - A.T @ S).flat() + (S @ A_star - A_star.T @ S).flat() for S in sym]
    ker = kernel(Matrix.from_columns(cols))
    out = []
    for k in ker.basis:
        G = Matrix.zeros(n)
        for c, S in zip(k, sym):
            if c:
                G = G + S * c
        out.append(G)
    return out


@dataclass(frozen=True)
class Realization:
    p: ParameterArray
    A: Matrix
    A_star: Matrix
    E: tuple
    E_star: tuple
    gram: Matrix
    v: tuple
    v_star: tuple
    v_star_down: tuple

    @property
    def d(self) -> int:
        return self.p.d

    @property
    def n(self) -> int:
        return self.p.d + 1

    def form(self, x, y) -> Fraction:
        return dot(x, self.gram @ tuple(y))

    def norm2(self, x) -> Fraction:
        return self.form(x, x)

    def tau_matrix(self, ell: int) -> Matrix:
        eye = Matrix.identity(self.n)
        out = eye
        for h in range(ell):
            out = out @ (self.A - eye * self.p.theta[h])
        return out

    @cached_property
    def split_basis(self) -> list[tuple]:
        """tau_l(A) v*, l = 0..d."""
        return [self.tau_matrix(ell) @ self.v_star for ell in range(self.n)]

    @cached_property
    def split_down_basis(self) -> list[tuple]:
        """tau_l(A) v*^down, l = 0..d."""
        return [self.tau_matrix(ell) @ self.v_star_down for ell in range(self.n)]

    @cached_property
    def dual_standard_basis(self) -> list[tuple]:
        """E_j v*, j = 0..d."""
        return [Ej @ self.v_star for Ej in self.E]

    @cached_property
    def standard_basis(self) -> list[tuple]:
        """E*_i v, i = 0..d."""
        return [Ei @ self.v for Ei in self.E_star]

    def image(self, m: Matrix) -> Subspace:
        return Subspace.column_space(m)

    def image_sum(self, mats) -> Subspace:
        return subspace_sum((self.image(m) for m in mats), self.n)

    def rescaled(self, v=1, v_star=1, v_star_down=1) -> Realization:
        """Same system with the three base vectors multiplied by nonzero scalars."""
        if 0 in (v, v_star, v_star_down):
            raise ValueError("rescaling factors must be nonzero")
        out = replace(
            self,
            v=scale(Fraction(v), self.v),
            v_star=scale(Fraction(v_star), self.v_star),
            v_star_down=scale(Fraction(v_star_down), self.v_star_down),
        )
        return out

    def dual(self) -> Realization:
        """The dual system on the same space: A and A* exchanged."""
        return Realization(
            p=_star_array(self.p),
            A=self.A_star,
            A_star=self.A,
            E=self.E_star,
            E_star=self.E,
            gram=self.gram,
            v=self.v_star,
            v_star=self.v,
            v_star_down=_leading_one(self.E[-1] @ self.v_star),
        )

    def to_json(self) -> dict:
        from .parameters import fraction_str as fs

        def mat(m):
            return [[fs(a) for a in r] for r in m.rows]

        out = {"A": mat(self.A), "A_star": mat(self.A_star)}
        for i, Ei in enumerate(self.E):
            out[f"E[{i}]"] = mat(Ei)
        for i, Ei in enumerate(self.E_star):
            out[f"E_star[{i}]"] = mat(Ei)
        out["gram"] = mat(self.gram)
        out["v"] = [fs(a) for a in self.v]
        out["v_star"] = [fs(a) for a in self.v_star]
        out["v_star_down"] = [fs(a) for a in self.v_star_down]
        return out


def _star_array(p: ParameterArray) -> ParameterArray:
    from .parameters import apply_d4

    return apply_d4(p, "star")


def split_matrices(p: ParameterArray) -> tuple[Matrix, Matrix]:
    n = p.d + 1
    A = Matrix([[p.theta[i] if i == j else (1 if i == j + 1 else 0) for j in range(n)]
                for i in range(n)])
    A_star = Matrix([[p.theta_star[i] if i == j else (p.vp(j) if j == i + 1 else 0)
                      for j in range(n)] for i in range(n)])
    return A, A_star


def realize(p: ParameterArray) -> Realization:
    validate(p).raise_if_invalid()
    A, A_star = split_matrices(p)
    E = lagrange_idempotents(A, p.theta)
    E_star = lagrange_idempotents(A_star, p.theta_star)
    forms = invariant_form_space(A, A_star)
    if len(forms) != 1:
        raise ConsistencyError(f"invariant symmetric forms span dimension {len(forms)}, expected 1")
    G = forms[0]
    if G[0, 0] == 0:
        raise ConsistencyError("the invariant form vanishes on v*")
    G = G * (1 / G[0, 0])
    n = p.d + 1
    v_star = unit_vector(n, 0)
    v = _leading_one(E[0] @ v_star)
    v_star_down = _leading_one(E_star[-1] @ v)
    return Realization(p, A, A_star, tuple(E), tuple(E_star), G, v, v_star, v_star_down)


# ---------------------------------------------------------------------------
# derived objects and checks


def squared_norm_Ei_star_v(r: Realization, i: int) -> Fraction:
    """Closed form of <E*_i v, E*_i v> in terms of the parameter array and ||v||^2."""
    p, d = r.p, r.d
    if not 0 <= i <= d:
        raise IndexError(i)
    ts = p.theta_star
    num = p.varphi_prod(1, i) * p.phi_prod(i + 1, d)
    den = p.eta(d, p.theta[0]) * p.tau_star(i, ts[i]) * p.eta_star(d - i, ts[i])
    return num / den * r.norm2(r.v)


def split_decomposition(r: Realization, variant: D4Element | str = "identity") -> list[Subspace]:
    """U_l (variant identity) or U_l^down (variant 'down'), l = 0..d."""
    if isinstance(variant, str):
        variant = D4Element.from_word(variant)
    d = r.d
    if variant == D4Element():
        low = lambda ell: r.image_sum(r.E_star[: ell + 1])
    elif variant == D4Element.from_word("down"):
        low = lambda ell: r.image_sum(r.E_star[d - ell:])
    else:
        raise ValueError("split decomposition variant must be identity or down")
    return [low(ell) & r.image_sum(r.E[ell:]) for ell in range(d + 1)]


def projections(basis: list[tuple]) -> list[Matrix]:
    """Projections onto each span(basis[k]) along the others."""
    B = Matrix.from_columns(basis)
    Binv = B.inverse()
    n = len(basis)
    out = []
    for k in range(n):
        col = basis[k]
        row = Binv.row(k)
        out.append(Matrix([[col[a] * row[b] for b in range(n)] for a in range(n)]))
    return out


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def _chk(name, cond, detail="") -> Check:
    return Check(name, bool(cond), "" if cond else detail)


def check_realization(r: Realization) -> list[Check]:
    """Idempotent algebra, tridiagonality, form invariance, base vectors."""
    p, n, d = r.p, r.n, r.d
    eye, zero = Matrix.identity(n), Matrix.zeros(n)
    out = []
    for label, X, Es, thetas in (("A", r.A, r.E, p.theta), ("A_star", r.A_star, r.E_star, p.theta_star)):
        ok = all((Es[i] @ Es[j]) == (Es[i] if i == j else zero) for i in range(n) for j in range(n))
        out.append(_chk(f"{label} idempotents orthogonal", ok))
        total = zero
        for e in Es:
            total = total + e
        out.append(_chk(f"{label} idempotents sum to identity", total == eye))
        out.append(_chk(f"{label} spectral decomposition",
                        all(X @ Es[i] == Es[i] * thetas[i] for i in range(n))))
        out.append(_chk(f"{label} idempotents rank one", all(e.rank() == 1 for e in Es)))
    for label, X, Es in (("A", r.A, r.E_star), ("A_star", r.A_star, r.E)):
        ok = True
        for i in range(n):
            for j in range(n):
                z = (Es[i] @ X @ Es[j]).is_zero()
                if abs(i - j) > 1 and not z or abs(i - j) == 1 and z:
                    ok = False
        out.append(_chk(f"{label} acts tridiagonally on the other eigenspaces", ok))
    forms = invariant_form_space(r.A, r.A_star)
    out.append(_chk("invariant form unique", len(forms) == 1, f"dimension {len(forms)}"))
    G = r.gram
    out.append(_chk("form symmetric and nondegenerate", G == G.T and G.rank() == n))
    out.append(_chk("form invariant under A and A_star",
                    G @ r.A == r.A.T @ G and G @ r.A_star == r.A_star.T @ G))
    out.append(_chk("v in E_0 V", not is_zero(r.v) and r.E[0] @ r.v == r.v))
    out.append(_chk("v_star in E*_0 V", not is_zero(r.v_star) and r.E_star[0] @ r.v_star == r.v_star))
    out.append(_chk("v_star_down in E*_d V",
                    not is_zero(r.v_star_down) and r.E_star[d] @ r.v_star_down == r.v_star_down))
    out.append(_chk("base vector pairings nonzero",
                    r.form(r.v, r.v_star) != 0 and r.form(r.v, r.v_star_down) != 0
                    and r.norm2(r.v) != 0 and r.norm2(r.v_star) != 0))
    return out


def check_split_standard_transitions(r: Realization) -> list[Check]:
    """The five split/standard transition identities, as exact vector equations."""
    p, d = r.p, r.d
    th, ts = p.theta, p.theta_star
    v, vs = r.v, r.v_star
    vvs = r.form(v, vs)
    std, dstd, split = r.standard_basis, r.dual_standard_basis, r.split_basis
    nE = [r.norm2(x) for x in std]
    out = []

    ok = True
    for i in range(d + 1):
        coeffs = [nE[i] / vvs * p.tau_star(ell, ts[i]) / p.varphi_prod(1, ell) for ell in range(i + 1)]
        ok &= std[i] == _comb(coeffs, split[: i + 1], r.n)
    out.append(_chk("standard basis in split basis", ok))

    ok = True
    for ell in range(d + 1):
        coeffs = [vvs * p.varphi_prod(1, ell) * p.eta_star(d - ell, ts[i])
                  / (p.tau_star(i, ts[i]) * p.eta_star(d - i, ts[i])) / nE[i] for i in range(ell + 1)]
        ok &= split[ell] == _comb(coeffs, std[: ell + 1], r.n)
    out.append(_chk("split basis in standard basis", ok))

    ok = True
    for j in range(d + 1):
        coeffs = [p.eta(d - ell, th[j]) / (p.tau(j, th[j]) * p.eta(d - j, th[j])) for ell in range(j, d + 1)]
        ok &= dstd[j] == _comb(coeffs, split[j:], r.n)
    out.append(_chk("dual standard basis in split basis", ok))

    ok = True
    for ell in range(d + 1):
        coeffs = [p.tau(ell, th[j]) for j in range(ell, d + 1)]
        ok &= split[ell] == _comb(coeffs, dstd[ell:], r.n)
    out.append(_chk("split basis in dual standard basis", ok))

    ok = True
    ratio = r.form(v, r.v_star_down) / vvs
    for j in range(d + 1):
        c = ratio * p.phi_prod(d - j + 1, d) / p.varphi_prod(1, j)
        ok &= r.E[j] @ r.v_star_down == scale(c, dstd[j])
    out.append(_chk("down-split vector against dual standard basis", ok))
    return out


def _comb(coeffs, vectors, n) -> tuple:
    out = [Fraction(0)] * n
    for c, x in zip(coeffs, vectors, strict=True):
        for k in range(n):
            out[k] += c * x[k]
    return tuple(out)


def check_norms(r: Realization) -> list[Check]:
    p, d = r.p, r.d
    th = p.theta
    ok = True
    for i in range(d + 1):
        c = (p.varphi_prod(1, i) * p.phi_prod(1, d - i)
             / (p.eta_star(d, p.theta_star[0]) * p.tau(i, th[i]) * p.eta(d - i, th[i])))
        ok &= r.E_star[0] @ r.E[i] @ r.E_star[0] == r.E_star[0] * c
    out = [_chk("E*_0 E_i E*_0 scalar formula", ok)]
    ok = all(squared_norm_Ei_star_v(r, i) == r.norm2(r.standard_basis[i]) for i in range(d + 1))
    out.append(_chk("squared norm of E*_i v", ok))
    return out


def check_split_decomposition(r: Realization) -> list[Check]:
    d, n = r.d, r.n
    U = split_decomposition(r)
    Ud = split_decomposition(r, "down")
    out = [
        _chk("split subspaces are lines", all(u.dim == 1 for u in U + Ud)),
        _chk("split decompositions span V",
             subspace_sum(U, n).dim == n and subspace_sum(Ud, n).dim == n),
        _chk("U_0 = E*_0 V and U_d = E_d V",
             U[0] == r.image(r.E_star[0]) and U[d] == r.image(r.E[d])),
        _chk("tau_l(A) v* spans U_l", all(U[k] == Subspace.span([r.split_basis[k]], n) for k in range(n))),
        _chk("tau_l(A) v*down spans U_l^down",
             all(Ud[k] == Subspace.span([r.split_down_basis[k]], n) for k in range(n))),
    ]
    F = projections([u.generator() for u in U])
    zero = Matrix.zeros(n)
    ok = all((F[ell] @ r.E_star[i]) == zero for i in range(n) for ell in range(i + 1, n))
    ok &= all((F[ell] @ r.E[j]) == zero for j in range(n) for ell in range(j))
    out.append(_chk("split projections vanish on far eigenspaces", ok))
    return out


def verify_section2(r: Realization) -> list[Check]:
    """All checks on the realized system that do not involve the EKR basis."""
    return (check_realization(r) + check_split_standard_transitions(r)
            + check_norms(r) + check_split_decomposition(r))
