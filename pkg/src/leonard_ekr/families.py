"""Constructors for the dual Hahn, Krawtchouk and q-Racah parameter arrays.

The Johnson and Hamming presets fix the free normalizations to
theta_0 = theta_0* = 0 and h = 1; every quantity downstream (EKR basis
coefficients, dual vectors, bounds) is invariant under these choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import to_fraction, vec
from .parameters import InvalidParameterArray, ParameterArray, validate, vartheta


def _checked(p: ParameterArray) -> ParameterArray:
    validate(p).raise_if_invalid()
    return p


def _F(x) -> Fraction:
    return to_fraction(x)


@dataclass(frozen=True)
class DualHahnParams:
    d: int
    r: Fraction
    s: Fraction
    s_star: Fraction
    h: Fraction = Fraction(1)
    theta0: Fraction = Fraction(0)
    theta0_star: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("r", "s", "s_star", "h", "theta0", "theta0_star"):
            object.__setattr__(self, name, _F(getattr(self, name)))

    family = "dual-hahn"


@dataclass(frozen=True)
class KrawtchoukParams:
    d: int
    r: Fraction
    s: Fraction
    s_star: Fraction
    theta0: Fraction = Fraction(0)
    theta0_star: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("r", "s", "s_star", "theta0", "theta0_star"):
            object.__setattr__(self, name, _F(getattr(self, name)))

    family = "krawtchouk"


@dataclass(frozen=True)
class QRacahParams:
    d: int
    q: Fraction
    s: Fraction
    s_star: Fraction
    r1: Fraction
    r2: Fraction
    h: Fraction = Fraction(1)
    h_star: Fraction = Fraction(1)
    theta0: Fraction = Fraction(0)
    theta0_star: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("q", "s", "s_star", "r1", "r2", "h", "h_star", "theta0", "theta0_star"):
            object.__setattr__(self, name, _F(getattr(self, name)))

    family = "q-racah"

    @classmethod
    def with_r2_from_constraint(cls, d, q, s, s_star, r1, **kw) -> QRacahParams:
        """Fill in r2 from r1 * r2 = s * s_star * q^(d+1)."""
        q, s, s_star, r1 = map(_F, (q, s, s_star, r1))
        return cls(d, q, s, s_star, r1, s * s_star * q ** (d + 1) / r1, **kw)


def dual_hahn(params: DualHahnParams) -> ParameterArray:
    d, r, s, ss, h = params.d, params.r, params.s, params.s_star, params.h
    if h == 0 or ss == 0:
        raise InvalidParameterArray(["h and s_star must be nonzero"])
    theta = [params.theta0 + h * i * (i + 1 + s) for i in range(d + 1)]
    theta_star = [params.theta0_star + ss * i for i in range(d + 1)]
    varphi = [h * ss * i * (i - d - 1) * (i + r) for i in range(1, d + 1)]
    phi = [h * ss * i * (i - d - 1) * (i + r - s - d - 1) for i in range(1, d + 1)]
    return _checked(ParameterArray(d, theta, theta_star, varphi, phi))


def krawtchouk(params: KrawtchoukParams) -> ParameterArray:
    d, r, s, ss = params.d, params.r, params.s, params.s_star
    if 0 in (r, s, ss):
        raise InvalidParameterArray(["r, s and s_star must be nonzero"])
    if r == s * ss:
        raise InvalidParameterArray(["r = s*s_star makes every phi[i] zero"])
    theta = [params.theta0 + s * i for i in range(d + 1)]
    theta_star = [params.theta0_star + ss * i for i in range(d + 1)]
    varphi = [r * i * (i - d - 1) for i in range(1, d + 1)]
    phi = [(r - s * ss) * i * (i - d - 1) for i in range(1, d + 1)]
    return _checked(ParameterArray(d, theta, theta_star, varphi, phi))


def q_racah(params: QRacahParams) -> ParameterArray:
    P = params
    d, q, s, ss, r1, r2, h, hs = P.d, P.q, P.s, P.s_star, P.r1, P.r2, P.h, P.h_star
    if 0 in (q, s, ss, r1, r2, h, hs):
        raise InvalidParameterArray(["q, s, s_star, r1, r2, h, h_star must be nonzero"])
    if q in (1, -1):
        raise InvalidParameterArray(["q must differ from 1 and -1"])
    if r1 * r2 != s * ss * q ** (d + 1):
        raise InvalidParameterArray(["constraint violated: r1*r2 != s*s_star*q^(d+1)"])
    collisions = []
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            if s * q ** (i + j + 1) == 1:
                collisions.append(f"theta collision at ({i},{j})")
            if ss * q ** (i + j + 1) == 1:
                collisions.append(f"theta_star collision at ({i},{j})")
    if collisions:
        raise InvalidParameterArray(collisions)
    theta = [P.theta0 + h * (1 - q**i) * (1 - s * q ** (i + 1)) / q**i for i in range(d + 1)]
    theta_star = [P.theta0_star + hs * (1 - q**i) * (1 - ss * q ** (i + 1)) / q**i
                  for i in range(d + 1)]
    varphi = [h * hs * q ** (1 - 2 * i) * (1 - q**i) * (1 - q ** (i - d - 1))
              * (1 - r1 * q**i) * (1 - r2 * q**i) for i in range(1, d + 1)]
    phi = [h * hs * q ** (1 - 2 * i) * (1 - q**i) * (1 - q ** (i - d - 1))
           * (r1 - ss * q**i) * (r2 - ss * q**i) / ss for i in range(1, d + 1)]
    return _checked(ParameterArray(d, theta, theta_star, varphi, phi))


def johnson_preset(v: int, d: int) -> DualHahnParams:
    """Dual Hahn parameters of the Johnson graph J(v, d), for v > 2d."""
    if d < 1 or v <= 2 * d:
        raise ValueError(f"Johnson preset needs d >= 1 and v > 2d, got v={v}, d={d}")
    return DualHahnParams(d, r=d - v - 1, s=-v - 2, s_star=Fraction(-v * (v - 1), d * (v - d)))


def hamming_preset(n: int, d: int) -> KrawtchoukParams:
    """Krawtchouk parameters of the Hamming graph H(d, n)."""
    if n < 2 or d < 1:
        raise ValueError(f"Hamming preset needs n >= 2 and d >= 1, got n={n}, d={d}")
    return KrawtchoukParams(d, r=n * (n - 1), s=-n, s_star=-n)


def build(params) -> ParameterArray:
    if isinstance(params, DualHahnParams):
        return dual_hahn(params)
    if isinstance(params, KrawtchoukParams):
        return krawtchouk(params)
    if isinstance(params, QRacahParams):
        return q_racah(params)
    raise TypeError(f"unknown family parameters {type(params).__name__}")


def array_from_eigenvalues(theta, theta_star, varphi1) -> ParameterArray:
    """Complete a parameter array from its eigenvalue sequences and varphi_1.

    phi_i follows from the phi relation, then varphi_i from the varphi
    relation.  This reaches arrays no family constructor covers, e.g. those
    with beta = -2.  The result is validated.
    """
    theta, theta_star = vec(theta), vec(theta_star)
    d = len(theta) - 1
    if len(theta_star) != d + 1 or d < 1:
        raise ValueError("theta and theta_star must have the same length >= 2")
    varphi1 = to_fraction(varphi1)
    stub = ParameterArray(d, theta, theta_star, [1] * d, [1] * d)
    vt = [None] + [vartheta(stub, i) for i in range(1, d + 1)]
    phi = [varphi1 * vt[i] + (theta_star[i] - theta_star[0]) * (theta[d - i + 1] - theta[0])
           for i in range(1, d + 1)]
    varphi = [phi[0] * vt[i] + (theta_star[i] - theta_star[0]) * (theta[i - 1] - theta[d])
              for i in range(1, d + 1)]
    return _checked(ParameterArray(d, theta, theta_star, varphi, phi))
