"""Terminating ordinary and basic hypergeometric series, summed exactly."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .linalg import to_fraction


def pochhammer(a, k: int) -> Fraction:
    """(a)_k = a (a+1) ... (a+k-1)."""
    if k < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    a = to_fraction(a)
    return prod((a + i for i in range(k)), start=Fraction(1))


def q_pochhammer(a, q, k: int) -> Fraction:
    """(a; q)_k = prod_{i<k} (1 - a q^i)."""
    if k < 0:
        raise ValueError("q-Pochhammer length must be nonnegative")
    a, q = to_fraction(a), to_fraction(q)
    return prod((1 - a * q**i for i in range(k)), start=Fraction(1))


class NonTerminating(ValueError):
    pass


@dataclass(frozen=True)
class HypergeomSpec:
    kind: str  # "ordinary" or "basic"
    numerator: tuple
    denominator: tuple
    z: Fraction
    q: Fraction | None = None

    def __post_init__(self):
        if self.kind not in ("ordinary", "basic"):
            raise ValueError("kind must be 'ordinary' or 'basic'")
        if self.kind == "basic" and self.q is None:
            raise ValueError("basic series need a base q")
        object.__setattr__(self, "numerator", tuple(to_fraction(a) for a in self.numerator))
        object.__setattr__(self, "denominator", tuple(to_fraction(b) for b in self.denominator))
        object.__setattr__(self, "z", to_fraction(self.z))
        if self.q is not None:
            object.__setattr__(self, "q", to_fraction(self.q))


def _neg_int(a: Fraction) -> int | None:
    return int(-a) if a.denominator == 1 and a <= 0 else None


def _q_power_index(a: Fraction, q: Fraction) -> int | None:
    """n >= 0 with a = q^(-n), if any."""
    if q == 0:
        return None
    if a == 1:
        return 0
    if abs(q) == 1:
        return 1 if q == -1 and a == -1 else None
    growing = abs(q) < 1  # |q^-n| grows with n
    n, x = 0, Fraction(1)
    while (abs(x) <= abs(a)) if growing else (abs(x) >= abs(a)):
        if x == a:
            return n
        n += 1
        x = x / q
    return None


def terminating_length(spec: HypergeomSpec) -> int:
    """Index N such that every term past N vanishes."""
    if spec.kind == "ordinary":
        ns = [_neg_int(a) for a in spec.numerator]
    else:
        ns = [_q_power_index(a, spec.q) for a in spec.numerator]
    ns = [n for n in ns if n is not None]
    if not ns:
        raise NonTerminating("no numerator parameter forces termination")
    return min(ns)


def hypergeom_terminating(spec: HypergeomSpec) -> Fraction:
    N = terminating_length(spec)
    total = Fraction(0)
    term = Fraction(1)
    q = spec.q
    for k in range(N + 1):
        total += term
        if k == N:
            break
        if spec.kind == "ordinary":
            num = prod((a + k for a in spec.numerator), start=Fraction(1))
            den = prod((b + k for b in spec.denominator), start=Fraction(1)) * (k + 1)
        else:
            num = prod((1 - a * q**k for a in spec.numerator), start=Fraction(1))
            den = prod((1 - b * q**k for b in spec.denominator), start=Fraction(1)) * (1 - q ** (k + 1))
        if den == 0:
            raise ZeroDivisionError(f"denominator parameter vanishes at term {k + 1}")
        term = term * num / den * spec.z
    return total


def hyp_pfq(numerator, denominator, z) -> Fraction:
    return hypergeom_terminating(HypergeomSpec("ordinary", tuple(numerator), tuple(denominator), z))


def qhyp_rphis(numerator, denominator, q, z) -> Fraction:
    return hypergeom_terminating(HypergeomSpec("basic", tuple(numerator), tuple(denominator), z, q))
