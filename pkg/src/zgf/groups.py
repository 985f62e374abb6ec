"""Multiplicative structure of GI(p)*: named subgroups, orders, generators.

Three subgroups organize the plane: the unimodular group (norm 1, order
p + 1), the supra-unimodular group (norm +-1, order 2(p + 1), identical to
the group of phases) and the modulus group (the quadratic residues of
GF(p), order (p - 1)/2).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .gf import Prime, quadratic_residues
from .gi import GiElem

SUBGROUP_KINDS = ("unimodular", "supra_unimodular", "modulus_group", "full_group")


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, as ((prime, exponent), ...)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    out = [1]
    for q, e in factorize(n):
        out = [d * q**k for d in out for k in range(e + 1)]
    return sorted(out)


def _order_raw(p: int, re: int, im: int) -> int:
    """Multiplicative order via factoring p**2 - 1 and stripping factors."""
    m = p * p - 1
    order = m
    for q, _ in factorize(m):
        while order % q == 0:
            k = order // q
            rr, ri = 1, 0
            br, bi = re, im
            e = k
            while e:
                if e & 1:
                    rr, ri = (rr * br - ri * bi) % p, (rr * bi + ri * br) % p
                br, bi = (br * br - bi * bi) % p, (2 * br * bi) % p
                e >>= 1
            if (rr, ri) != (1, 0):
                break
            order = k
    return order


def element_order(z: GiElem) -> int:
    """Smallest N >= 1 with z**N = 1."""
    if not z:
        raise DomainError("the zero element has no multiplicative order")
    return _order_raw(z.prime.value, z.re, z.im)


def enumerate_subgroup(prime: Prime, kind: str) -> list[GiElem]:
    """All members of the named subgroup, in canonical (re, im) order."""
    p = prime.value
    if kind == "modulus_group":
        return [GiElem(prime, r, 0) for r in quadratic_residues(prime)]
    if kind == "unimodular":
        wanted = {1}
    elif kind == "supra_unimodular":
        wanted = {1, p - 1}
    elif kind == "full_group":
        wanted = None
    else:
        raise DomainError(f"unknown subgroup kind {kind!r}; expected one of {SUBGROUP_KINDS}")
    out = []
    for a in range(p):
        for b in range(p):
            if (a, b) == (0, 0):
                continue
            if wanted is None or (a * a + b * b) % p in wanted:
                out.append(GiElem(prime, a, b))
    return out


@lru_cache(maxsize=None)
def find_full_generator(prime: Prime) -> GiElem:
    """Smallest generator of the whole group GI(p)*, in canonical order."""
    p = prime.value
    m = p * p - 1
    for a in range(p):
        for b in range(p):
            if (a, b) != (0, 0) and _order_raw(p, a, b) == m:
                return GiElem(prime, a, b)
    raise AssertionError("cyclic group without a generator")  # unreachable


@lru_cache(maxsize=None)
def find_gs_generator(prime: Prime) -> GiElem:
    """A deterministic generator of the supra-unimodular group.

    For Mersenne p every element of norm -1 already generates, so the
    smallest such element is returned directly.  Otherwise the smallest
    full-group generator g is located and g**((p-1)/2) is returned, which
    has order exactly 2(p + 1).
    """
    p = prime.value
    if prime.kind == "mersenne":
        for a in range(p):
            for b in range(p):
                if (a, b) != (0, 0) and (a * a + b * b) % p == p - 1:
                    return GiElem(prime, a, b)
        raise AssertionError("no element of norm -1")  # unreachable
    return find_full_generator(prime) ** ((p - 1) // 2)


def nth_root_element(n: int, epsilon: GiElem) -> GiElem:
    """An element of order exactly n, as a power of the phase generator."""
    gs_order = 2 * (epsilon.prime.value + 1)
    if n <= 0 or gs_order % n != 0:
        raise DomainError(f"{n} does not divide the phase-group order {gs_order}")
    return epsilon ** (gs_order // n)


def symmetry_set(z: GiElem) -> set[GiElem]:
    """The orbit of a unimodular element under the eight axis symmetries."""
    if int(z.norm()) != 1:
        raise DomainError("symmetry orbit is defined for unimodular elements only")
    prime = z.prime
    a, b = z.re, z.im
    return {
        GiElem(prime, a, b),
        GiElem(prime, b, a),
        GiElem(prime, -a, b),
        GiElem(prime, b, -a),
        GiElem(prime, a, -b),
        GiElem(prime, -b, a),
        GiElem(prime, -a, -b),
        GiElem(prime, -b, -a),
    }


@dataclass(frozen=True)
class OrderCensus:
    """How many elements of GI(p)* exist at each multiplicative order."""

    prime: Prime
    entries: tuple[tuple[int, int], ...]  # (order, count), ascending order

    def count(self, order: int) -> int:
        return dict(self.entries).get(order, 0)

    def total(self) -> int:
        return sum(c for _, c in self.entries)


def order_census(prime: Prime) -> OrderCensus:
    """Tally element orders across all of GI(p)*."""
    p = prime.value
    counts = Counter()
    for a in range(p):
        for b in range(p):
            if (a, b) != (0, 0):
                counts[_order_raw(p, a, b)] += 1
    return OrderCensus(prime, tuple(sorted(counts.items())))
