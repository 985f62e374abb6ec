"""Eventually periodic sequences over GF(p) and their Cesaro summation.

A series converges here when the partial-sum sequence S[n] is eventually
periodic with minimal period P not divisible by p; the sum is then the
mean of S over one period, the residues being summed as plain integers
before the final reduction.  Divergence is a value, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import kernels
from .errors import DomainError
from .gf import GfElem, Prime
from .gi import GiElem
from .groups import element_order


class Divergent:
    """Marker for a series with no Cesaro sum (also used for poles)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "divergent"


DIVERGENT = Divergent()


def is_divergent(value) -> bool:
    return isinstance(value, Divergent)


def _canon(prime: Prime, values) -> tuple[int, ...]:
    return tuple(int(v) % prime.value for v in values)


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence x[n] over GF(p): finite left part, prefix, periodic tail.

    ``left`` holds the nonzero values at negative indices, ``prefix`` the
    values at n = 0 .. len(prefix)-1 and ``tail`` repeats forever after
    the prefix.  Every sequence handled by the transform machinery fits
    this shape.
    """

    prime: Prime
    left: tuple[tuple[int, int], ...] = ()
    prefix: tuple[int, ...] = ()
    tail: tuple[int, ...] = (0,)

    def __post_init__(self):
        p = self.prime.value
        left = tuple(
            sorted((int(n), int(v) % p) for n, v in self.left if int(v) % p != 0)
        )
        if any(n >= 0 for n, _ in left):
            raise DomainError("left part must use negative indices")
        if len({n for n, _ in left}) != len(left):
            raise DomainError("left part has duplicate indices")
        tail = _canon(self.prime, self.tail)
        if not tail:
            raise DomainError("tail period must be nonempty")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "prefix", _canon(self.prime, self.prefix))
        object.__setattr__(self, "tail", tail)

    # --- basic sequences ---------------------------------------------------

    @classmethod
    def impulse(cls, prime: Prime) -> "SequenceSpec":
        """The Galois impulse: 1 at n = 0, zero elsewhere."""
        return cls(prime, prefix=(1,), tail=(0,))

    @classmethod
    def unit_step(cls, prime: Prime) -> "SequenceSpec":
        """The Galois unit step: 1 for all n >= 0."""
        return cls(prime, tail=(1,))

    @classmethod
    def exponential(cls, prime: Prime, amplitude: int | GfElem, ratio: int | GfElem) -> "SequenceSpec":
        """A * a**n for n >= 0; the tail period is the order of a."""
        a = int(ratio) % prime.value
        amp = int(amplitude) % prime.value
        if a == 0:
            raise DomainError("exponential ratio must be nonzero; use impulse for A*delta")
        n = element_order(GiElem(prime, a, 0))
        return cls(prime, tail=tuple(amp * pow(a, k, prime.value) % prime.value for k in range(n)))

    # --- pointwise access --------------------------------------------------

    def value_at(self, n: int) -> int:
        if n < 0:
            return dict(self.left).get(n, 0)
        if n < len(self.prefix):
            return self.prefix[n]
        return self.tail[(n - len(self.prefix)) % len(self.tail)]

    def min_index(self) -> int:
        return self.left[0][0] if self.left else 0

    def is_finite_support(self) -> bool:
        return not any(self.tail)

    # --- combinators -------------------------------------------------------

    def shifted(self, k: int) -> "SequenceSpec":
        """The delayed sequence x[n - k]."""
        start = len(self.prefix) + k  # where the tail begins after the shift
        tail_shift = 0
        if start < 0:
            tail_shift = (-start) % len(self.tail)
            start = 0
        left = []
        lo = self.min_index() + k
        for n in range(min(lo, 0), 0):
            v = self.value_at(n - k)
            if v:
                left.append((n, v))
        prefix = tuple(self.value_at(n - k) for n in range(start))
        tail = tuple(self.tail[(i + tail_shift) % len(self.tail)] for i in range(len(self.tail)))
        return SequenceSpec(self.prime, tuple(left), prefix, tail)

    def modulated(self, ratio: int | GfElem) -> "SequenceSpec":
        """Pointwise a**n * x[n]."""
        p = self.prime.value
        a = int(ratio) % p
        if a == 0:
            raise DomainError("modulation ratio must be nonzero")
        n = element_order(GiElem(self.prime, a, 0))
        a_inv = pow(a, p - 2, p)
        left = tuple((i, v * pow(a_inv, -i, p) % p) for i, v in self.left)
        prefix = tuple(v * pow(a, i, p) % p for i, v in enumerate(self.prefix))
        t = len(self.tail)
        s = len(self.prefix)
        tail = tuple(self.tail[m % t] * pow(a, s + m, p) % p for m in range(lcm(t, n)))
        return SequenceSpec(self.prime, left, prefix, tail)

    def scaled(self, c: int | GfElem) -> "SequenceSpec":
        s = int(c) % self.prime.value
        return SequenceSpec(
            self.prime,
            tuple((n, v * s) for n, v in self.left),
            tuple(v * s for v in self.prefix),
            tuple(v * s for v in self.tail),
        )

    def __add__(self, other: "SequenceSpec") -> "SequenceSpec":
        if not isinstance(other, SequenceSpec):
            return NotImplemented
        if other.prime != self.prime:
            raise DomainError("operands belong to different prime fields")
        indices = sorted({n for n, _ in self.left} | {n for n, _ in other.left})
        left = tuple((n, self.value_at(n) + other.value_at(n)) for n in indices)
        s = max(len(self.prefix), len(other.prefix))
        prefix = tuple(self.value_at(n) + other.value_at(n) for n in range(s))
        span = lcm(len(self.tail), len(other.tail))
        tail = tuple(self.value_at(s + m) + other.value_at(s + m) for m in range(span))
        return SequenceSpec(self.prime, left, prefix, tail)


@dataclass(frozen=True)
class CesaroVerdict:
    """Outcome of Cesaro summation: the sum when the period allows one."""

    converges: bool
    sigma: GfElem | None
    period: int
    preperiod: int


def _stream_terms(x: SequenceSpec, count: int) -> list[int]:
    """First ``count`` terms of the summand stream (left part first)."""
    out = [v for _, v in x.left]
    n = 0
    while len(out) < count:
        out.append(x.value_at(n))
        n += 1
    return out[:count]


def partial_sums(x: SequenceSpec, count: int) -> list[GfElem]:
    """Running sums of the summand stream, reduced mod p."""
    if count < 1:
        raise DomainError("count must be positive")
    p = x.prime.value
    out = []
    acc = 0
    for v in _stream_terms(x, count):
        acc = (acc + v) % p
        out.append(GfElem(x.prime, acc))
    return out


def _real_stream_eval(x: SequenceSpec):
    trans = [v for _, v in x.left] + list(x.prefix)
    return kernels.stream_eval(
        x.prime.value, trans, [0] * len(trans), list(x.tail), 1, 0, 1, 0
    )


def detect_period(x: SequenceSpec) -> tuple[int, int]:
    """(preperiod, minimal period) of the partial-sum sequence."""
    _, _, _, preperiod, period = _real_stream_eval(x)
    return preperiod, period


def cesaro_sum(x: SequenceSpec) -> CesaroVerdict:
    """Cesaro-sum the series of x's terms over GF(p)."""
    conv, sig_re, sig_im, preperiod, period = _real_stream_eval(x)
    assert sig_im == 0
    sigma = GfElem(x.prime, sig_re) if conv else None
    return CesaroVerdict(bool(conv), sigma, period, preperiod)


def geometric_cesaro(z: GiElem) -> GiElem | Divergent:
    """Cesaro value of sum(z**k, k >= 0): the inverse of 1 - z, except at 1.

    z = 0 contributes only the k = 0 term and sums to 1.
    """
    if not z:
        return GiElem.one(z.prime)
    conv, sig_re, sig_im, _, _ = kernels.stream_eval(
        z.prime.value, [], [], [1], z.re, z.im, 1, 0
    )
    return GiElem(z.prime, sig_re, sig_im) if conv else DIVERGENT
