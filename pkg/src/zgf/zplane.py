"""The complex Z plane over GF(p) and its renderings.

The plane is a polar grid: one circle per quadratic residue of GF(p),
2(p + 1) points per circle, every nonzero element of GI(p) appearing
exactly once.  Powers of an element trace closed trajectories across the
circles; renderings reproduce those pictures deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import DomainError
from .gf import DEFAULT_TABLE_CEILING, GfElem, Prime, quadratic_residues
from .gi import GiElem
from .groups import element_order, find_full_generator, find_gs_generator
from .polar import PolarForm, discrete_log, to_polar


@dataclass(frozen=True)
class Circle:
    radius: GfElem
    points: tuple[tuple[int, GiElem], ...]  # (theta, element), theta ascending


@dataclass(frozen=True)
class ZPlane:
    prime: Prime
    epsilon: GiElem
    circles: tuple[Circle, ...]  # ascending integer radius

    def total_points(self) -> int:
        return sum(len(c.points) for c in self.circles)

    def locate(self, z: GiElem) -> tuple[int, int]:
        """(circle rank, theta) of a nonzero element."""
        for rank, circle in enumerate(self.circles):
            for theta, elem in circle.points:
                if elem == z:
                    return rank, theta
        raise DomainError(f"{z} is not on the plane")


@dataclass(frozen=True)
class Trajectory:
    start: GiElem
    steps: tuple[tuple[int, GiElem, PolarForm], ...]  # (k, start**k, polar)
    order: int


def build_plane(
    prime: Prime,
    epsilon: GiElem | None = None,
    ceiling: int = DEFAULT_TABLE_CEILING,
) -> ZPlane:
    """Partition GI(p)* into circles of constant modulus."""
    prime.check_ceiling(ceiling)
    if epsilon is None:
        epsilon = find_gs_generator(prime)
    p = prime.value
    gs_order = 2 * (p + 1)
    pow_re, pow_im = kernels.gi_pow_table(p, epsilon.re, epsilon.im, gs_order)
    circles = []
    for r in quadratic_residues(prime):
        points = tuple(
            (theta, GiElem(prime, r * pow_re[theta], r * pow_im[theta]))
            for theta in range(gs_order)
        )
        circles.append(Circle(GfElem(prime, r), points))
    return ZPlane(prime, epsilon, tuple(circles))


def order_trajectory(z: GiElem, epsilon: GiElem | None = None) -> Trajectory:
    """The path z, z**2, ..., z**N = 1 with polar coordinates per step."""
    if not z:
        raise DomainError("the zero element has no trajectory")
    prime = z.prime
    if epsilon is None:
        epsilon = find_gs_generator(prime)
    n = element_order(z)
    first = to_polar(z, epsilon)
    gs_order = 2 * (prime.value + 1)
    steps = []
    cur = GiElem.one(prime)
    for k in range(1, n + 1):
        cur = cur * z
        pf = PolarForm(
            GfElem(prime, pow(first.r.value, k, prime.value)),
            k * first.theta % gs_order,
            epsilon,
        )
        steps.append((k, cur, pf))
    return Trajectory(z, tuple(steps), n)


def trajectory_radius_pattern(t: Trajectory) -> list[int]:
    """Per-step advance of the full-plane position index.

    Positions are discrete logs with respect to the pinned full-group
    generator.  Verifies the trajectory structure: the phase advances by a
    constant angle each step, and the visited positions are exactly one
    residue class modulo r = (p**2 - 1)/N.  Empty for a fixed point.
    """
    prime = t.start.prime
    m = prime.value**2 - 1
    g = find_full_generator(prime)
    indices = [discrete_log(elem, g, m) for _, elem, _ in t.steps]
    thetas = [pf.theta for _, _, pf in t.steps]
    gs_order = 2 * (prime.value + 1)
    step = m // t.order
    if len({(b - a) % gs_order for a, b in zip(thetas, thetas[1:])}) > 1:
        raise RuntimeError("trajectory phase advance is not constant")
    if any((i - indices[0]) % step for i in indices) or len(set(indices)) != t.order:
        raise RuntimeError("trajectory does not visit one residue class of positions")
    return [(b - a) % m for a, b in zip(indices, indices[1:])]


# --- rendering ---------------------------------------------------------------

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a",
)


@dataclass(frozen=True)
class RenderSpec:
    size: int = 640
    margin: float = 48.0
    point_radius: float = 4.0
    labels: bool = True
    unimodular_only: bool = False  # draw just the norm-1 roots of unity


def _positions(plane: ZPlane, spec: RenderSpec) -> dict[GiElem, tuple[float, float]]:
    center = spec.size / 2.0
    ring_gap = (center - spec.margin) / len(plane.circles)
    gs_order = 2 * (plane.prime.value + 1)
    out = {}
    for rank, circle in enumerate(plane.circles):
        rr = ring_gap * (rank + 1)
        for theta, elem in circle.points:
            angle = 2.0 * math.pi * theta / gs_order
            out[elem] = (center + rr * math.cos(angle), center - rr * math.sin(angle))
    return out


def render_svg(
    plane: ZPlane,
    overlay: Trajectory | None = None,
    spec: RenderSpec = RenderSpec(),
) -> bytes:
    """A standalone deterministic SVG of the plane, optional trajectory on top."""
    s = spec.size
    center = s / 2.0
    ring_gap = (center - spec.margin) / len(plane.circles)
    pos = _positions(plane, spec)
    circles = plane.circles
    ring_count = len(circles)
    if spec.unimodular_only:
        unit = circles[0]
        points = tuple(pt for pt in unit.points if int(pt[1].norm()) == 1)
        circles = (Circle(unit.radius, points),)
        ring_count = 1
    orders = sorted({element_order(e) for c in circles for _, e in c.points})
    color_of = {n: _PALETTE[i % len(_PALETTE)] for i, n in enumerate(orders)}

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" '
        f'viewBox="0 0 {s} {s}">',
        f'<rect class="bg" x="0" y="0" width="{s}" height="{s}" fill="#ffffff"/>',
        f'<line class="axis" x1="{spec.margin / 2:.2f}" y1="{center:.2f}" '
        f'x2="{s - spec.margin / 2:.2f}" y2="{center:.2f}" stroke="#999999" stroke-width="1"/>',
        f'<line class="axis" x1="{center:.2f}" y1="{spec.margin / 2:.2f}" '
        f'x2="{center:.2f}" y2="{s - spec.margin / 2:.2f}" stroke="#999999" stroke-width="1"/>',
    ]
    for rank in range(ring_count):
        lines.append(
            f'<circle class="ring" cx="{center:.2f}" cy="{center:.2f}" '
            f'r="{ring_gap * (rank + 1):.2f}" fill="none" stroke="#cccccc" stroke-width="1"/>'
        )
    lines.append('<g class="points">')
    for circle in circles:
        for theta, elem in circle.points:
            x, y = pos[elem]
            color = color_of[element_order(elem)]
            lines.append(
                f'<circle class="pt" cx="{x:.2f}" cy="{y:.2f}" '
                f'r="{spec.point_radius:.2f}" fill="{color}"/>'
            )
            if spec.labels:
                lines.append(
                    f'<text class="lbl" x="{x + spec.point_radius + 1:.2f}" '
                    f'y="{y - spec.point_radius - 1:.2f}" font-size="9" '
                    f'font-family="monospace" fill="#333333">{elem}</text>'
                )
    lines.append("</g>")
    if overlay is not None:
        lines.append(
            '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
            'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
            '<path d="M 0 0 L 10 5 L 0 10 z" fill="#222222"/></marker></defs>'
        )
        lines.append('<g class="trajectory">')
        walk = [GiElem.one(plane.prime)] + [elem for _, elem, _ in overlay.steps]
        for a, b in zip(walk, walk[1:]):
            (x1, y1), (x2, y2) = pos[a], pos[b]
            lines.append(
                f'<line class="traj-seg" x1="{x1:.2f}" y1="{y1:.2f}" '
                f'x2="{x2:.2f}" y2="{y2:.2f}" stroke="#222222" stroke-width="1.5" '
                'marker-end="url(#arrow)"/>'
            )
        lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_text(plane: ZPlane, overlay: Trajectory | None = None, width: int = 61) -> str:
    """Lossy terminal rendering; positions are rounded to a character grid."""
    height = width // 2 + 1
    grid = [[" "] * width for _ in range(height)]
    spec = RenderSpec(size=width, margin=1.0, labels=False)
    pos = _positions(plane, spec)
    marks = {}
    for elem, (x, y) in pos.items():
        marks[(int(round(y / 2)), int(round(x)))] = "*"
    if overlay is not None:
        for _, elem, _ in overlay.steps:
            x, y = pos[elem]
            marks[(int(round(y / 2)), int(round(x)))] = "#"
    for (r, c), ch in marks.items():
        if 0 <= r < height and 0 <= c < width:
            grid[r][c] = ch
    body = "\n".join("".join(row).rstrip() for row in grid)
    header = f"Z plane over GF({plane.prime.value}) (approximate)"
    if overlay is not None:
        header += f"; # marks powers of {overlay.start}"
    return header + "\n" + body + "\n"
