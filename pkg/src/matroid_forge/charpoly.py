"""Characteristic polynomials of simple matroids, with exact integers.

chi(t) = sum over flats X of mu(bottom, X) * t^(r - rk X), where mu is the
Moebius function of the lattice of flats.  The lattice is small at desk
scale, so mu is computed by the defining recursion over lower intervals —
no broken-circuit machinery.  Failure to factor into integer linear terms
is the freeness obstruction consumed downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .matroid import Matroid


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending: coeffs[i] multiplies t^i."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValidationError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divide_by_root(self, root: int) -> tuple["IntPolynomial", int]:
        """Synthetic division by (t - root); returns (quotient, remainder)."""
        acc = 0
        out = []
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        remainder = out.pop()
        quotient = tuple(reversed(out))
        return IntPolynomial(quotient), remainder

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                term = str(mag)
            elif power == 1:
                term = "t" if mag == 1 else f"{mag}*t"
            else:
                term = f"t^{power}" if mag == 1 else f"{mag}*t^{power}"
            parts.append((sign, term))
        if not parts:
            return "0"
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def characteristic_polynomial(m: Matroid) -> IntPolynomial:
    """Moebius sum over the lattice of flats of a simple matroid."""
    if not m.is_simple:
        raise ValidationError("characteristic polynomial expects a simple matroid")
    lattice = m.flat_lattice()
    mu: dict[int, int] = {}
    rank_of_flat: dict[int, int] = {}
    ordered: list[int] = []
    for k in range(m.rank + 1):
        for f in lattice.at(k):
            rank_of_flat[f] = k
            ordered.append(f)
    for f in ordered:
        below = 0
        for g in ordered:
            if g != f and g & ~f == 0:
                below += mu[g]
        mu[f] = 1 if not below and rank_of_flat[f] == 0 else -below
    coeffs = [0] * (m.rank + 1)
    for f, value in mu.items():
        coeffs[m.rank - rank_of_flat[f]] += value
    return IntPolynomial(tuple(coeffs))


def splits_over_integers(p: IntPolynomial) -> tuple[int, ...] | None:
    """The sorted multiset of roots if p factors into integer linear terms.

    Candidate roots are the (signed) divisors of the constant term, each
    confirmed by exact synthetic division; any stage without an integer
    root means no full split exists, and None is returned.
    """
    if not p.is_monic:
        raise ValidationError("splits_over_integers expects a monic polynomial")
    roots: list[int] = []
    work = p
    while work.degree > 0:
        constant = work.coeffs[0]
        if constant == 0:
            candidates = [0]
        else:
            mag = abs(constant)
            divisors = [d for d in range(1, mag + 1) if mag % d == 0]
            candidates = [s * d for d in divisors for s in (1, -1)]
        for cand in candidates:
            quotient, remainder = work.divide_by_root(cand)
            if remainder == 0:
                roots.append(cand)
                work = quotient
                break
        else:
            return None
    return tuple(sorted(roots))
