"""Exact arithmetic of Hirzebruch-Jung continued fractions.

A chain ``[n1, ..., nl]`` with every ``nj >= 2`` stands for the nested
fraction ``n1 - 1/(n2 - 1/(... - 1/nl))``.  Geometrically it records a
string of rational curves with self-intersections ``-n1, ..., -nl``, the
minimal resolution of the cyclic quotient singularity ``1/q(1, q1)`` whose
order q is the absolute determinant of the chain's intersection matrix.

Everything here is exact: python integers and ``fractions.Fraction``, no
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

__all__ = [
    "HJFraction",
    "PartialOrders",
    "CyclicSingularity",
    "determinant",
    "evaluate",
    "partial_orders",
    "expand",
    "bump_determinant",
    "make_pattern",
    "pattern_determinant",
    "reverse",
    "discrepancy_coefficients",
    "normalize_type",
]


@dataclass(frozen=True)
class HJFraction:
    """A Hirzebruch-Jung continued fraction ``[n1, ..., nl]``.

    ``entries`` may be any iterable of integers >= 2 and may be empty (the
    chain of a smooth point, with determinant 1 and no rational value).
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        entries = tuple(int(n) for n in self.entries)
        if any(n < 2 for n in entries):
            raise ValueError(f"chain entries must all be >= 2: {list(entries)}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        return str(list(self.entries))


@dataclass(frozen=True)
class PartialOrders:
    """The forward and backward order sequences of a chain.

    ``u[j] = |[n1, ..., n_{j-1}]|`` with ``u[0] = 0``, ``u[1] = 1`` and
    ``v[j] = |[n_{j+1}, ..., nl]|`` with ``v[l] = 1``, ``v[l+1] = 0``.
    Both tuples have length ``l + 2`` and ``u[l+1] == v[0] == |w|``.
    """

    u: tuple[int, ...]
    v: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.u[-1]


def _u_sequence(entries: Sequence[int]) -> list[int]:
    # u0 = 0, u1 = 1, u_{j+1} = n_j * u_j - u_{j-1}
    u = [0, 1]
    for n in entries:
        u.append(n * u[-1] - u[-2])
    return u


def determinant(w: HJFraction) -> int:
    """The order ``|w|``: determinant of the tridiagonal matrix with
    diagonal ``nj`` and off-diagonal -1.  The empty chain has determinant 1.
    """
    return _u_sequence(w.entries)[-1]


def evaluate(w: HJFraction) -> Fraction:
    """Value ``q/q1`` of the nested fraction, in lowest terms (q = |w|)."""
    if not w.entries:
        raise ValueError("the empty chain has no rational value")
    return Fraction(_u_sequence(w.entries)[-1], _u_sequence(w.entries[1:])[-1])


def partial_orders(w: HJFraction) -> PartialOrders:
    """Both order sequences of ``w``; see :class:`PartialOrders`."""
    u = _u_sequence(w.entries)
    # mirror recurrence v_j = n_{j+1} * v_{j+1} - v_{j+2}
    v = [0, 1]
    for n in reversed(w.entries):
        v.append(n * v[-1] - v[-2])
    return PartialOrders(u=tuple(u), v=tuple(reversed(v)))


def expand(q: int, q1: int) -> HJFraction:
    """The chain with ``evaluate(chain) == q/q1``, found by ceiling division.

    This fixes the canonical orientation of a resolution chain: reading the
    result backwards expands q over the inverse of q1 mod q instead.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if not 1 <= q1 < q:
        raise ValueError(f"q1 must satisfy 1 <= q1 < q, got q1={q1} for q={q}")
    if gcd(q, q1) != 1:
        raise ValueError(f"q and q1 must be coprime, got gcd {gcd(q, q1)}")
    entries = []
    while True:
        n = -(-q // q1)
        entries.append(n)
        q, q1 = q1, n * q1 - q
        if q1 == 0:
            break
    return HJFraction(tuple(entries))


def bump_determinant(w: HJFraction, j: int) -> int:
    """Determinant of ``w`` with entry ``nj`` replaced by ``nj + 1``.

    ``j`` is 1-based.  Computed as ``v_j * u_j + |w|`` from the order
    sequences, not by expanding the bumped chain.
    """
    if not 1 <= j <= len(w):
        raise IndexError(f"index must lie in 1..{len(w)}, got {j}")
    po = partial_orders(w)
    return po.v[j] * po.u[j] + po.order


def make_pattern(a: int, b: int, c: int, d: int) -> HJFraction:
    """The chain ``[2 x (a-1), b, c, 2 x (d-1)]``; a = d = 1 gives [b, c]."""
    _check_pattern_args(a, b, c, d)
    return HJFraction((2,) * (a - 1) + (b, c) + (2,) * (d - 1))


def pattern_determinant(a: int, b: int, c: int, d: int) -> int:
    """Closed form for ``determinant(make_pattern(a, b, c, d))``."""
    _check_pattern_args(a, b, c, d)
    return a * b * c * d - a * b * d - a * c * d + a * b + c * d - a - d + 1


def _check_pattern_args(a: int, b: int, c: int, d: int) -> None:
    if a < 1 or d < 1:
        raise ValueError(f"run parameters must be >= 1, got a={a}, d={d}")
    if b < 2 or c < 2:
        raise ValueError(f"middle entries must be >= 2, got b={b}, c={c}")


def reverse(w: HJFraction) -> HJFraction:
    """The chain read from the other end; the determinant is unchanged."""
    return HJFraction(tuple(reversed(w.entries)))


def discrepancy_coefficients(w: HJFraction) -> tuple[Fraction, ...]:
    """Coefficient of each chain curve in the pullback defect of the
    canonical class: ``d_j = 1 - (v_j + u_j)/|w|``.

    Each coefficient lies in [0, 1); all vanish exactly when every entry
    is 2 (a du Val chain).
    """
    if not w.entries:
        raise ValueError("the empty chain has no discrepancy coefficients")
    po = partial_orders(w)
    q = po.order
    return tuple(1 - Fraction(po.v[j] + po.u[j], q) for j in range(1, len(w) + 1))


@dataclass(frozen=True)
class CyclicSingularity:
    """A cyclic quotient singularity of type ``1/q(1, q1)``."""

    q: int
    q1: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"order q must be >= 2, got {self.q}")
        if not 1 <= self.q1 < self.q:
            raise ValueError(f"need 1 <= q1 < q, got q1={self.q1} for q={self.q}")
        if gcd(self.q, self.q1) != 1:
            raise ValueError(f"q and q1 must be coprime: ({self.q}, {self.q1})")

    def __str__(self) -> str:
        return f"1/{self.q}(1,{self.q1})"

    @classmethod
    def from_chain(cls, w: HJFraction) -> "CyclicSingularity":
        """The singularity resolved by the (nonempty) chain ``w``."""
        value = evaluate(w)
        return cls(value.numerator, value.denominator)

    def q1_inverse(self) -> int:
        """The inverse of q1 mod q, i.e. q1 of the reversed chain."""
        return pow(self.q1, -1, self.q)

    def chain(self) -> HJFraction:
        """Canonical resolution chain, in ``expand`` orientation."""
        return expand(self.q, self.q1)

    def is_presented_by(self, w: HJFraction) -> bool:
        """True when ``w`` resolves this singularity read from either end."""
        if not w.entries or determinant(w) != self.q:
            return False
        q1 = evaluate(w).denominator
        return q1 in (self.q1, self.q1_inverse())


def normalize_type(q: int, wa: int, wb: int) -> CyclicSingularity:
    """Normalize the type ``1/q(wa, wb)`` to ``1/q(1, t)``.

    ``t`` is the residue with ``t * wa = wb (mod q)`` and ``1 <= t < q``;
    both wa and wb must be invertible mod q.
    """
    if q < 2:
        raise ValueError(f"order q must be >= 2, got {q}")
    if gcd(wa, q) != 1:
        raise ValueError(f"wa={wa} is not invertible mod q={q}")
    if gcd(wb, q) != 1:
        raise ValueError(f"wb={wb} is not invertible mod q={q}")
    return CyclicSingularity(q, wb * pow(wa, -1, q) % q)
