"""Arithmetic in the prime field GF(p) for primes p = 4k + 3.

The congruence p = 3 (mod 4) makes -1 a quadratic non-residue, so the
quadratic residues play the role of positive numbers: the modulus defined
here picks, out of {a, p - a}, the member that has a square root.
"""

from __future__ import annotations

from .errors import DomainError

# Full-plane sweeps (tables over p**2 - 1 points) refuse larger primes.
DEFAULT_TABLE_CEILING = 127


def is_prime(n: int) -> bool:
    """Deterministic trial division, adequate at desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _mersenne_exponent(p: int) -> int | None:
    n = (p + 1).bit_length() - 1
    return n if 2**n - 1 == p else None


class Prime:
    """An odd prime p with p = 3 (mod 4).

    ``kind`` is ``"mersenne"`` when p = 2**n - 1 for some n > 2 (these
    primes admit a shortcut when searching for phase-group generators),
    otherwise ``"generic"``.
    """

    __slots__ = ("value", "kind")

    def __init__(self, value: int):
        if not is_prime(value) or value % 4 != 3:
            raise DomainError(f"p must be prime with p = 3 (mod 4), got {value}")
        self.value = value
        n = _mersenne_exponent(value)
        self.kind = "mersenne" if n is not None and n > 2 else "generic"

    def elem(self, value: int) -> GfElem:
        return GfElem(self, value)

    def check_ceiling(self, ceiling: int = DEFAULT_TABLE_CEILING) -> None:
        if self.value > ceiling:
            raise DomainError(
                f"p = {self.value} exceeds the full-plane ceiling {ceiling}"
            )

    def __eq__(self, other) -> bool:
        return isinstance(other, Prime) and other.value == self.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"Prime({self.value})"


class GfElem:
    """An element of GF(p), stored as the canonical residue in [0, p - 1]."""

    __slots__ = ("prime", "value")

    def __init__(self, prime: Prime, value: int):
        self.prime = prime
        self.value = value % prime.value

    def _coerce(self, other) -> "GfElem":
        if isinstance(other, GfElem):
            if other.prime != self.prime:
                raise DomainError("operands belong to different prime fields")
            return other
        if isinstance(other, int):
            return GfElem(self.prime, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GfElem(self.prime, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GfElem(self.prime, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GfElem(self.prime, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GfElem(self.prime, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return GfElem(self.prime, -self.value)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inv()
        return GfElem(self.prime, pow(base.value, abs(exponent), self.prime.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, GfElem):
            return other.prime == self.prime and other.value == self.value
        if isinstance(other, int):
            return self.value == other % self.prime.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.prime.value, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GfElem({self.value} mod {self.prime.value})"

    def inv(self) -> "GfElem":
        if self.value == 0:
            raise DomainError("0 has no multiplicative inverse")
        p = self.prime.value
        return GfElem(self.prime, pow(self.value, p - 2, p))

    def is_quadratic_residue(self) -> bool:
        """Euler's criterion: a**((p-1)/2) = 1 exactly for the residues.

        Zero is neither a residue nor a non-residue and is rejected.
        """
        if self.value == 0:
            raise DomainError("0 is neither a quadratic residue nor a non-residue")
        p = self.prime.value
        return pow(self.value, (p - 1) // 2, p) == 1

    def modulus(self) -> "GfElem":
        """The quadratic-residue member of {a, p - a}; 0 maps to 0."""
        if self.value == 0:
            return self
        return self if self.is_quadratic_residue() else -self

    def sqrt(self) -> "GfElem":
        """Canonical square root a**((p+1)/4) of a residue (or zero).

        The result squares back to a but need not itself be a residue;
        apply :meth:`modulus` to land in the residue half.
        """
        if self.value != 0 and not self.is_quadratic_residue():
            raise DomainError(f"{self.value} is not a quadratic residue mod {self.prime.value}")
        p = self.prime.value
        return GfElem(self.prime, pow(self.value, (p + 1) // 4, p))


def quadratic_residues(prime: Prime) -> list[int]:
    """The (p-1)/2 quadratic residues of GF(p), ascending."""
    p = prime.value
    return sorted({x * x % p for x in range(1, p)})
