"""Polar form z = r * epsilon**theta with r a quadratic residue.

The phase exponent theta lives in [0, 2(p+1) - 1]; 2(p + 1) plays the role
of 2*pi.  Conversion to polar form solves a discrete logarithm in the
supra-unimodular group by baby-step giant-step.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import DomainError
from .gf import GfElem
from .gi import GiElem
from .groups import find_gs_generator


@dataclass(frozen=True)
class PolarForm:
    r: GfElem
    theta: int
    base: GiElem

    def degrees(self) -> float:
        """theta mapped to degrees: one phase step is 360 / (2(p+1))."""
        return self.theta * 360.0 / (2 * (self.base.prime.value + 1))


def discrete_log(beta: GiElem, base: GiElem, order: int | None = None) -> int:
    """Exponent t in [0, order) with base**t = beta, by baby-step giant-step.

    ``order`` defaults to the supra-unimodular group order 2(p + 1).
    """
    if not beta:
        raise DomainError("0 is outside every multiplicative subgroup")
    n = order if order is not None else 2 * (beta.prime.value + 1)
    m = isqrt(n - 1) + 1
    baby = {}
    cur = GiElem.one(base.prime)
    for j in range(m):
        baby.setdefault(cur, j)
        cur = cur * base
    giant = (base**m).inv()
    gamma = beta
    for i in range(m):
        if gamma in baby:
            return (i * m + baby[gamma]) % n
        gamma = gamma * giant
    raise DomainError(f"{beta} is not a power of {base}")


def to_polar(z: GiElem, base: GiElem | None = None) -> PolarForm:
    """Decompose a nonzero element as r * base**theta."""
    if not z:
        raise DomainError("the zero element has no polar form")
    if base is None:
        base = find_gs_generator(z.prime)
    r = z.modulus()
    phase = z * GiElem(z.prime, r.inv().value, 0)
    if int(phase.norm()) not in (1, z.prime.value - 1):
        raise DomainError("normalized element left the phase group; invalid base or modulus")
    return PolarForm(r, discrete_log(phase, base), base)


def from_polar(pf: PolarForm) -> GiElem:
    """Reassemble r * base**theta."""
    return GiElem(pf.base.prime, pf.r.value, 0) * pf.base**pf.theta
