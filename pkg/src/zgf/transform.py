"""The Z transform over GF(p): pointwise evaluation, tables, inversion.

X(Z) = sum x[n] * Z**-n is evaluated in the Cesaro sense at every nonzero
Z of GI(p); points where the series diverges carry an explicit marker.
Inversion is the finite sum x[n] = (p**2 - 1)**-1 * sum X(Z) * Z**n, exact
for sequences supported inside a window of length p**2 - 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import kernels
from .cesaro import DIVERGENT, Divergent, SequenceSpec, is_divergent
from .errors import DomainError
from .gf import DEFAULT_TABLE_CEILING, GfElem, Prime
from .gi import GiElem
from .groups import element_order, find_gs_generator


def _nonzero_elements(prime: Prime) -> list[GiElem]:
    p = prime.value
    return [
        GiElem(prime, a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)
    ]


def ffzt_eval(x: SequenceSpec, z: GiElem) -> GiElem | Divergent:
    """Cesaro value of sum x[n] * z**-n, or the divergence marker."""
    if x.prime != z.prime:
        raise DomainError("sequence and evaluation point use different primes")
    prime = x.prime
    if not z:
        if any(x.prefix[1:]) or any(x.tail):
            raise DomainError("Z = 0 needs negative powers of zero for n > 0 support")
        return GiElem(prime, x.value_at(0), 0)
    w = z.inv()
    trans: list[GiElem] = []
    for n, v in x.left:
        trans.append(GiElem(prime, v, 0) * z ** (-n))
    wk = GiElem.one(prime)
    for v in x.prefix:
        trans.append(GiElem(prime, v, 0) * wk)
        wk = wk * w
    start = w ** len(x.prefix)
    conv, sig_re, sig_im, _, _ = kernels.stream_eval(
        prime.value,
        [t.re for t in trans],
        [t.im for t in trans],
        list(x.tail),
        w.re,
        w.im,
        start.re,
        start.im,
    )
    return GiElem(prime, sig_re, sig_im) if conv else DIVERGENT


class TransformTable:
    """X(Z) at every nonzero Z, with divergence as a first-class value."""

    def __init__(self, prime: Prime, values: dict[GiElem, GiElem | Divergent]):
        expected = _nonzero_elements(prime)
        if set(values) != set(expected):
            raise DomainError("table domain must be exactly the nonzero elements")
        self.prime = prime
        self._values = {z: values[z] for z in expected}  # canonical order

    def value_at(self, z: GiElem) -> GiElem | Divergent:
        try:
            return self._values[z]
        except KeyError:
            raise DomainError(f"{z} is outside the table domain") from None

    def entries(self):
        return iter(self._values.items())

    @property
    def roc(self) -> tuple[GiElem, ...]:
        """Points of convergence, derived from the values on demand."""
        return tuple(z for z, v in self._values.items() if not is_divergent(v))

    @property
    def divergent_points(self) -> tuple[GiElem, ...]:
        return tuple(z for z, v in self._values.items() if is_divergent(v))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransformTable):
            return NotImplemented
        return self.prime == other.prime and self._values == other._values

    def to_json(self) -> str:
        entries = [
            {"z": str(z), "value": "divergent" if is_divergent(v) else str(v)}
            for z, v in self._values.items()
        ]
        return json.dumps({"p": self.prime.value, "entries": entries}, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "TransformTable":
        doc = json.loads(text)
        prime = Prime(doc["p"])
        values: dict[GiElem, GiElem | Divergent] = {}
        for entry in doc["entries"]:
            z = GiElem.parse(prime, entry["z"])
            raw = entry["value"]
            values[z] = DIVERGENT if raw == "divergent" else GiElem.parse(prime, raw)
        return cls(prime, values)

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())

    @classmethod
    def load(cls, path) -> "TransformTable":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())


def ffzt_table(x: SequenceSpec, ceiling: int = DEFAULT_TABLE_CEILING) -> TransformTable:
    """Evaluate the transform at all p**2 - 1 nonzero points."""
    x.prime.check_ceiling(ceiling)
    return TransformTable(x.prime, {z: ffzt_eval(x, z) for z in _nonzero_elements(x.prime)})


@dataclass(frozen=True)
class RationalForm:
    """A ratio of polynomials in Z**-1 with its poles and zeros attached."""

    prime: Prime
    num: tuple[int, ...]
    den: tuple[int, ...]
    poles: tuple[GiElem, ...]
    zeros: tuple[GiElem, ...]

    @classmethod
    def from_coeffs(
        cls,
        prime: Prime,
        num,
        den,
        ceiling: int = DEFAULT_TABLE_CEILING,
    ) -> "RationalForm":
        """Build from coefficient lists, locating roots by full search."""
        prime.check_ceiling(ceiling)
        p = prime.value
        num = tuple(int(c) % p for c in num)
        den = tuple(int(c) % p for c in den)
        if not any(den):
            raise DomainError("denominator must be a nonzero polynomial")
        poles, zeros = [], []
        for z in _nonzero_elements(prime):
            w = z.inv()
            if not _poly_at(den, w):
                poles.append(z)
            if any(num) and not _poly_at(num, w):
                zeros.append(z)
        return cls(prime, num, den, tuple(poles), tuple(zeros))


def _poly_at(coeffs, w: GiElem) -> GiElem:
    acc = GiElem.zero(w.prime)
    for c in reversed(coeffs):
        acc = acc * w + c
    return acc


def exponential_closed_form(prime: Prime, amplitude, ratio) -> RationalForm:
    """A / (1 - a * Z**-1), the transform of A * a**n * u[n]."""
    a = int(ratio) % prime.value
    if a == 0:
        raise DomainError("ratio must be nonzero; A*delta transforms to the constant A")
    return RationalForm.from_coeffs(prime, (int(amplitude),), (1, -a))


def rational_eval(f: RationalForm, z: GiElem) -> GiElem | Divergent:
    """Value of the rational form at z, or the pole marker."""
    if not z:
        raise DomainError("rational forms in Z**-1 are undefined at Z = 0")
    w = z.inv()
    den = _poly_at(f.den, w)
    if not den:
        return DIVERGENT
    return _poly_at(f.num, w) * den.inv()


def lemma1_sum(i: int, prime: Prime) -> GfElem:
    """Brute-force sum of Z**i over all nonzero Z; p - 1 when the powers
    collapse to 1 (i divisible by p**2 - 1), zero otherwise."""
    acc = GiElem.zero(prime)
    for z in _nonzero_elements(prime):
        acc = acc + z**i
    assert acc.im == 0
    return GfElem(prime, acc.re)


def _complete_values(table: TransformTable) -> None:
    for z, v in table.entries():
        if is_divergent(v):
            raise DomainError(f"table has a divergent entry at Z = {z}; cannot invert")


def iffzt(table: TransformTable, n: int) -> GfElem:
    """Recover x[n] from a complete table by the finite inversion sum."""
    _complete_values(table)
    prime = table.prime
    p = prime.value
    acc = GiElem.zero(prime)
    for z, v in table.entries():
        acc = acc + v * z**n
    m_inv = pow((p * p - 1) % p, p - 2, p)
    acc = acc * m_inv
    if acc.im != 0:
        raise DomainError("table does not invert to a real sequence")
    return GfElem(prime, acc.re)


def iffzt_window(table: TransformTable) -> list[GfElem]:
    """x[n] for every n in the aliasing window [0, p**2 - 2]."""
    _complete_values(table)
    prime = table.prime
    zs = list(table._values)
    vals = [table._values[z] for z in zs]
    out_re, out_im = kernels.iffzt_window(
        prime.value,
        [z.re for z in zs],
        [z.im for z in zs],
        [v.re for v in vals],
        [v.im for v in vals],
    )
    if any(out_im):
        raise DomainError("table does not invert to a real sequence")
    return [GfElem(prime, r) for r in out_re]


def ff_dtft(x: SequenceSpec, theta: int, base: GiElem | None = None) -> GiElem | Divergent:
    """The discrete-time Fourier transform: the Z transform on the unit
    circle, at the point base**theta."""
    prime = x.prime
    if base is None:
        base = find_gs_generator(prime)
    gs_order = 2 * (prime.value + 1)
    if element_order(base) != gs_order:
        raise DomainError("base must generate the supra-unimodular group")
    if not 0 <= theta < gs_order:
        raise DomainError(f"theta must lie in [0, {gs_order - 1}]")
    return ffzt_eval(x, base**theta)
