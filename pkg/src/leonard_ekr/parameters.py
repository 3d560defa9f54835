"""Parameter arrays of Leonard systems and the dihedral action on them."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from .linalg import to_fraction, vec


class InvalidParameterArray(ValueError):
    """The data do not form the parameter array of a Leonard system."""

    def __init__(self, failures: Sequence[str]):
        self.failures = list(failures)
        super().__init__("invalid parameter array: " + "; ".join(self.failures))


class Inadmissible(ValueError):
    """The EKR basis is undefined: the base is q = -1 and the diameter is odd."""


def fraction_str(x: Fraction) -> str:
    """Exact 'p/q' rendering ('p' for integers)."""
    return str(Fraction(x))


def parse_fraction(s) -> Fraction:
    if isinstance(s, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise TypeError(f"cannot read {s!r} as an exact rational")


@dataclass(frozen=True)
class ParameterArray:
    """Eigenvalue sequences theta, theta_star and the split sequences varphi, phi.

    ``theta`` and ``theta_star`` have d+1 entries (indices 0..d);
    ``varphi`` and ``phi`` have d entries holding indices 1..d.  Use
    :meth:`vp` / :meth:`ph` for 1-based access.
    """

    d: int
    theta: tuple
    theta_star: tuple
    varphi: tuple
    phi: tuple

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"diameter must be an integer >= 1, got {self.d!r}")
        for name, n in (("theta", self.d + 1), ("theta_star", self.d + 1),
                        ("varphi", self.d), ("phi", self.d)):
            seq = vec(getattr(self, name))
            if len(seq) != n:
                raise ValueError(f"{name} has length {len(seq)}, expected {n}")
            object.__setattr__(self, name, seq)

    # 1-based accessors for the split sequences
    def vp(self, i: int) -> Fraction:
        return self.varphi[i - 1]

    def ph(self, i: int) -> Fraction:
        return self.phi[i - 1]

    def varphi_prod(self, lo: int, hi: int) -> Fraction:
        return prod((self.vp(i) for i in range(lo, hi + 1)), start=Fraction(1))

    def phi_prod(self, lo: int, hi: int) -> Fraction:
        return prod((self.ph(i) for i in range(lo, hi + 1)), start=Fraction(1))

    def tau(self, i: int, z) -> Fraction:
        return _tau(self.theta, i, z)

    def eta(self, i: int, z) -> Fraction:
        return _eta(self.theta, i, z)

    def tau_star(self, i: int, z) -> Fraction:
        return _tau(self.theta_star, i, z)

    def eta_star(self, i: int, z) -> Fraction:
        return _eta(self.theta_star, i, z)

    def vartheta(self, i: int) -> Fraction:
        return vartheta(self, i)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "theta": [fraction_str(x) for x in self.theta],
            "theta_star": [fraction_str(x) for x in self.theta_star],
            "varphi": [fraction_str(x) for x in self.varphi],
            "phi": [fraction_str(x) for x in self.phi],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> ParameterArray:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(
                d=data["d"],
                theta=[parse_fraction(x) for x in data["theta"]],
                theta_star=[parse_fraction(x) for x in data["theta_star"]],
                varphi=[parse_fraction(x) for x in data["varphi"]],
                phi=[parse_fraction(x) for x in data["phi"]],
            )
        except KeyError as e:
            raise ValueError(f"parameter array is missing field {e.args[0]!r}") from None


def _tau(seq, i, z) -> Fraction:
    d = len(seq) - 1
    if not 0 <= i <= d + 1:
        raise IndexError(f"polynomial index {i} outside 0..{d + 1}")
    z = to_fraction(z)
    return prod((z - seq[h] for h in range(i)), start=Fraction(1))


def _eta(seq, i, z) -> Fraction:
    d = len(seq) - 1
    if not 0 <= i <= d + 1:
        raise IndexError(f"polynomial index {i} outside 0..{d + 1}")
    z = to_fraction(z)
    return prod((z - seq[d - h] for h in range(i)), start=Fraction(1))


def tau_eval(p: ParameterArray, i: int, z, star: bool = False) -> Fraction:
    """prod_{h<i} (z - theta_h); the starred version uses theta_star."""
    if not 0 <= i <= p.d:
        raise IndexError(f"index {i} outside 0..{p.d}")
    return _tau(p.theta_star if star else p.theta, i, z)


def eta_eval(p: ParameterArray, i: int, z, star: bool = False) -> Fraction:
    """prod_{h<i} (z - theta_{d-h}); the starred version uses theta_star."""
    if not 0 <= i <= p.d:
        raise IndexError(f"index {i} outside 0..{p.d}")
    return _eta(p.theta_star if star else p.theta, i, z)


def vartheta(p: ParameterArray, i: int) -> Fraction:
    d, th = p.d, p.theta
    if not 1 <= i <= d:
        raise IndexError(f"vartheta index {i} outside 1..{d}")
    return sum((th[h] - th[d - h] for h in range(i)), Fraction(0)) / (th[0] - th[d])


def _ratios(seq) -> list[Fraction]:
    d = len(seq) - 1
    return [(seq[i - 2] - seq[i + 1]) / (seq[i - 1] - seq[i]) for i in range(2, d)]


# ---------------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def raise_if_invalid(self) -> None:
        if self.failures:
            raise InvalidParameterArray(self.failures)


def _distinct(seq) -> bool:
    return len(set(seq)) == len(seq)


def validate(p: ParameterArray) -> ValidationReport:
    """Check the classification conditions on ``p``.

    Distinct eigenvalues, nonzero split sequences, both phi/varphi relations
    (the varphi one is the phi one for the idempotent-reversed array), and a
    common three-term ratio beta + 1 for both eigenvalue sequences, checked at
    every admissible index.
    """
    d = p.d
    bad: list[str] = []
    if not _distinct(p.theta):
        bad.append("theta not distinct")
    if not _distinct(p.theta_star):
        bad.append("theta_star not distinct")
    for i in range(1, d + 1):
        if p.vp(i) == 0:
            bad.append(f"varphi[{i}] zero")
        if p.ph(i) == 0:
            bad.append(f"phi[{i}] zero")
    if bad:
        return ValidationReport(bad)

    th, ts = p.theta, p.theta_star
    for i in range(1, d + 1):
        vt = vartheta(p, i)
        if p.ph(i) != p.vp(1) * vt + (ts[i] - ts[0]) * (th[d - i + 1] - th[0]):
            bad.append(f"phi[{i}] relation fails")
        if p.vp(i) != p.ph(1) * vt + (ts[i] - ts[0]) * (th[i - 1] - th[d]):
            bad.append(f"varphi[{i}] relation fails")
    if d >= 3:
        r, rs = _ratios(th), _ratios(ts)
        for i, x in enumerate(r, start=2):
            if x != r[0]:
                bad.append(f"theta recurrence ratio differs at i={i}")
        for i, x in enumerate(rs, start=2):
            if x != rs[0]:
                bad.append(f"theta_star recurrence ratio differs at i={i}")
        if r[0] != rs[0]:
            bad.append("theta and theta_star have different beta")
    return ValidationReport(bad)


# ---------------------------------------------------------------------------
# base of the array

class BaseTag(enum.Enum):
    Q_IS_MINUS_ONE = "q=-1"
    Q_NOT_MINUS_ONE = "q!=-1"
    SMALL_D = "d<3"


@dataclass(frozen=True)
class BaseClass:
    beta: Fraction | None
    tag: BaseTag


def base_class(p: ParameterArray) -> BaseClass:
    """beta with beta + 1 the common three-term ratio, classified by q = -1."""
    if p.d < 3:
        return BaseClass(None, BaseTag.SMALL_D)
    validate(p).raise_if_invalid()
    beta = _ratios(p.theta)[0] - 1
    tag = BaseTag.Q_IS_MINUS_ONE if beta == -2 else BaseTag.Q_NOT_MINUS_ONE
    return BaseClass(beta, tag)


def ekr_admissible(p: ParameterArray) -> bool:
    bc = base_class(p)
    return bc.tag is not BaseTag.Q_IS_MINUS_ONE or p.d % 2 == 0


def require_admissible(p: ParameterArray) -> None:
    if not ekr_admissible(p):
        raise Inadmissible(
            f"EKR basis undefined: base q = -1 with odd diameter d = {p.d}; "
            "the subspaces W_t do not form a direct sum"
        )


# ---------------------------------------------------------------------------
# the dihedral group of order 8

_GENERATORS = {"star": "*", "*": "*", "down": "down", "ddown": "ddown"}


@dataclass(frozen=True)
class D4Element:
    """An element of D4, stored by its effect on (A; A*; {E_i}; {E*_i}).

    ``swapped``: the roles of A and A* are exchanged.  ``rev_first`` /
    ``rev_second``: the idempotent ordering of the first / second operator
    of the resulting system is reversed.
    """

    swapped: bool = False
    rev_first: bool = False
    rev_second: bool = False

    @classmethod
    def from_word(cls, word: str | Sequence[str]) -> D4Element:
        """Parse generator names ('star', 'down', 'ddown'), applied left to right."""
        if isinstance(word, str):
            word = word.split()
        g = cls()
        for name in word:
            if name in ("1", "id", "identity"):
                continue
            if name not in _GENERATORS:
                raise ValueError(f"unknown D4 generator {name!r}; use star, down or ddown")
            g = g._then(_GENERATORS[name])
        return g

    def _then(self, gen: str) -> D4Element:
        s, f, r = self.swapped, self.rev_first, self.rev_second
        if gen == "*":
            return D4Element(not s, r, f)
        if gen == "down":
            return D4Element(s, f, not r)
        return D4Element(s, not f, r)

    def word(self) -> tuple[str, ...]:
        """A shortest generator word for this element."""
        out = []
        if self.swapped:
            out.append("star")
        if self.rev_first:
            out.append("ddown")
        if self.rev_second:
            out.append("down")
        return tuple(out)

    def __mul__(self, other: D4Element) -> D4Element:
        g = self
        for name in other.word():
            g = g._then(_GENERATORS[name])
        return g

    def inverse(self) -> D4Element:
        return next(h for h in all_d4_elements() if (self * h).is_identity())

    def is_identity(self) -> bool:
        return self == D4Element()


def all_d4_elements() -> list[D4Element]:
    return [D4Element(s, f, r) for s in (False, True) for f in (False, True) for r in (False, True)]


def _star(p: ParameterArray) -> ParameterArray:
    return ParameterArray(p.d, p.theta_star, p.theta, p.varphi, p.phi[::-1])


def _down(p: ParameterArray) -> ParameterArray:
    return ParameterArray(p.d, p.theta, p.theta_star[::-1], p.phi[::-1], p.varphi[::-1])


def _ddown(p: ParameterArray) -> ParameterArray:
    return ParameterArray(p.d, p.theta[::-1], p.theta_star, p.phi, p.varphi)


_ACTIONS = {"star": _star, "down": _down, "ddown": _ddown}


def apply_word(p: ParameterArray, word: str | Sequence[str]) -> ParameterArray:
    """Parameter array of Phi^g for the generator word g, read left to right."""
    if isinstance(word, str):
        word = word.split()
    for name in word:
        if name in ("1", "id", "identity"):
            continue
        key = "star" if name == "*" else name
        if key not in _ACTIONS:
            raise ValueError(f"unknown D4 generator {name!r}")
        p = _ACTIONS[key](p)
    return p


def apply_d4(p: ParameterArray, g: D4Element | str | Sequence[str]) -> ParameterArray:
    if isinstance(g, D4Element):
        g = g.word()
    return apply_word(p, g)
