"""The field GI(p) of Gaussian integers a + bj over GF(p).

Because p = 3 (mod 4), j**2 = -1 has no root in GF(p) itself and adjoining
j yields a field with p**2 elements; its nonzero elements form a cyclic
group of order p**2 - 1.  Elements print and parse in the canonical
``a+bj`` form with both components reduced to [0, p - 1].
"""

from __future__ import annotations

import re as _re

from .errors import DomainError
from .gf import GfElem, Prime

# imaginary term: "4j", "j4" or a bare "j"
_IMAG = r"(?:(?P<im1>\d+)\s*j|j\s*(?P<im2>\d+)|(?P<lone>j))"
_RE_REAL = _re.compile(r"^\s*(?P<re>[+-]?\d+)\s*$")
_RE_IMAG = _re.compile(rf"^\s*(?P<sign>[+-])?\s*{_IMAG}\s*$")
_RE_BOTH = _re.compile(rf"^\s*(?P<re>[+-]?\d+)\s*(?P<sign>[+-])\s*{_IMAG}\s*$")


class GiElem:
    """A Gaussian integer re + im*j over GF(p), components canonical."""

    __slots__ = ("prime", "re", "im")

    def __init__(self, prime: Prime, re: int | GfElem, im: int | GfElem = 0):
        self.prime = prime
        self.re = int(re) % prime.value
        self.im = int(im) % prime.value

    @classmethod
    def one(cls, prime: Prime) -> "GiElem":
        return cls(prime, 1, 0)

    @classmethod
    def zero(cls, prime: Prime) -> "GiElem":
        return cls(prime, 0, 0)

    @classmethod
    def parse(cls, prime: Prime, text: str) -> "GiElem":
        """Parse ``a+bj`` (also accepts ``a``, ``bj``, ``j``, ``a+jb``)."""
        if m := _RE_REAL.match(text):
            return cls(prime, int(m.group("re")), 0)
        m = _RE_IMAG.match(text) or _RE_BOTH.match(text)
        if not m:
            raise DomainError(f"cannot parse element {text!r}")
        re_part = int(m.group("re")) if "re" in m.groupdict() and m.group("re") else 0
        im_part = int(m.group("im1") or m.group("im2") or 1)
        if m.group("sign") == "-":
            im_part = -im_part
        return cls(prime, re_part, im_part)

    # spec-facing component views
    @property
    def real(self) -> GfElem:
        return GfElem(self.prime, self.re)

    @property
    def imag(self) -> GfElem:
        return GfElem(self.prime, self.im)

    def _coerce(self, other) -> "GiElem":
        if isinstance(other, GiElem):
            if other.prime != self.prime:
                raise DomainError("operands belong to different prime fields")
            return other
        if isinstance(other, GfElem):
            if other.prime != self.prime:
                raise DomainError("operands belong to different prime fields")
            return GiElem(self.prime, other.value, 0)
        if isinstance(other, int):
            return GiElem(self.prime, other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GiElem(self.prime, self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GiElem(self.prime, self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GiElem(
            self.prime,
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GiElem(self.prime, -self.re, -self.im)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, exponent: int) -> "GiElem":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inv()
        k = abs(exponent)
        p = self.prime.value
        rr, ri = 1, 0
        br, bi = base.re, base.im
        while k:
            if k & 1:
                rr, ri = (rr * br - ri * bi) % p, (rr * bi + ri * br) % p
            br, bi = (br * br - bi * bi) % p, (2 * br * bi) % p
            k >>= 1
        return GiElem(self.prime, rr, ri)

    def __eq__(self, other) -> bool:
        if isinstance(other, GiElem):
            return other.prime == self.prime and (other.re, other.im) == (self.re, self.im)
        if isinstance(other, GfElem):
            return other.prime == self.prime and self.im == 0 and self.re == other.value
        if isinstance(other, int):
            return self.im == 0 and self.re == other % self.prime.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.prime.value, self.re, self.im))

    def __bool__(self) -> bool:
        return (self.re, self.im) != (0, 0)

    def __str__(self) -> str:
        return f"{self.re}+{self.im}j"

    def __repr__(self) -> str:
        return f"GiElem({self.re}+{self.im}j mod {self.prime.value})"

    def key(self) -> tuple[int, int]:
        """Canonical (re, im) sort key used for every enumeration."""
        return (self.re, self.im)

    def conj(self) -> "GiElem":
        return GiElem(self.prime, self.re, -self.im)

    def norm(self) -> GfElem:
        """The quadratic norm re**2 + im**2, a real element."""
        return GfElem(self.prime, self.re * self.re + self.im * self.im)

    def modulus(self) -> GfElem:
        """|re + im*j|: the residue-valued square root of the norm.

        The inner modulus makes the norm a residue so the root exists;
        the outer one makes the root unique.  Undefined at zero.
        """
        if not self:
            raise DomainError("the zero element has no modulus")
        return self.norm().modulus().sqrt().modulus()

    def inv(self) -> "GiElem":
        if not self:
            raise DomainError("0 has no multiplicative inverse")
        n_inv = self.norm().inv().value
        return GiElem(self.prime, self.re * n_inv, -self.im * n_inv)
