"""Plane construction, trajectories, the radius-step law, rendering."""

from math import gcd

import pytest

from zgf import (
    DomainError,
    GiElem,
    Prime,
    RenderSpec,
    build_plane,
    enumerate_subgroup,
    find_gs_generator,
    order_trajectory,
    render_svg,
    render_text,
    to_polar,
    trajectory_radius_pattern,
)
from zgf.polar import from_polar

P7 = Prime(7)
P11 = Prime(11)


@pytest.mark.parametrize(
    "prime,circles,per_circle", [(Prime(3), 1, 8), (P7, 3, 16), (P11, 5, 24)]
)
def test_plane_shape(prime, circles, per_circle):
    plane = build_plane(prime)
    assert len(plane.circles) == circles
    assert all(len(c.points) == per_circle for c in plane.circles)
    assert plane.total_points() == prime.value**2 - 1


@pytest.mark.parametrize("prime", [Prime(3), P7, P11])
def test_plane_partitions_all_elements(prime):
    plane = build_plane(prime)
    seen = [e for c in plane.circles for _, e in c.points]
    assert len(seen) == len(set(seen)) == prime.value**2 - 1
    for circle in plane.circles:
        for theta, elem in circle.points:
            assert elem.modulus() == circle.radius
    radii = [c.radius.value for c in plane.circles]
    assert radii == sorted(radii)


def test_unit_circle_is_the_phase_group():
    plane = build_plane(P7)
    unit = {e for _, e in plane.circles[0].points}
    assert unit == set(enumerate_subgroup(P7, "supra_unimodular"))
    # even phases have norm 1, odd phases norm -1
    for theta, elem in plane.circles[0].points:
        expected = 1 if theta % 2 == 0 else 7 - 1
        assert elem.norm().value == expected


def test_j_sits_on_the_vertical_axis():
    for prime in (P7, P11):
        gs_order = 2 * (prime.value + 1)
        pf = to_polar(GiElem(prime, 0, 1))
        assert 2 * pf.theta % gs_order == prime.value + 1


def test_real_axis_split():
    # real residues land at angle 0, real non-residues at half a turn
    for prime in (P7, P11):
        p = prime.value
        for a in range(1, p):
            pf = to_polar(GiElem(prime, a, 0))
            if prime.elem(a).is_quadratic_residue():
                assert pf.theta == 0
            else:
                assert pf.theta == p + 1


def test_trajectory_examples():
    for (a, b), order in [((0, 2), 12), ((3, 3), 24), ((6, 4), 48)]:
        traj = order_trajectory(GiElem(P7, a, b))
        assert traj.order == order
        assert len(traj.steps) == order
        elems = [e for _, e, _ in traj.steps]
        assert len(set(elems)) == order
        assert elems[-1] == GiElem.one(P7)
        start = GiElem(P7, a, b)
        for k, elem, pf in traj.steps:
            assert elem == start**k
            assert from_polar(pf) == elem


def test_trajectory_zero_rejected():
    with pytest.raises(DomainError):
        order_trajectory(GiElem.zero(P7))


def test_radius_pattern_examples():
    m = 48
    for (a, b), order in [((0, 2), 12), ((3, 3), 24), ((6, 4), 48)]:
        traj = order_trajectory(GiElem(P7, a, b))
        pattern = trajectory_radius_pattern(traj)
        assert len(pattern) == order - 1
        assert len(set(pattern)) == 1  # constant advance
        step = gcd(pattern[0], m)
        assert step == m // order

    assert trajectory_radius_pattern(order_trajectory(GiElem.one(P7))) == []


@pytest.mark.parametrize("prime", [P7, P11])
def test_radius_pattern_every_element(prime):
    m = prime.value**2 - 1
    for z in enumerate_subgroup(prime, "full_group"):
        traj = order_trajectory(z)
        pattern = trajectory_radius_pattern(traj)
        if traj.order > 1:
            assert gcd(pattern[0], m) == m // traj.order


def test_svg_structure_and_determinism():
    plane = build_plane(P7)
    svg = render_svg(plane)
    assert svg == render_svg(build_plane(P7))
    text = svg.decode()
    assert text.count('class="pt"') == 48
    assert text.count('class="ring"') == 3
    assert svg.startswith(b'<?xml version="1.0"')
    assert text.rstrip().endswith("</svg>")


def test_svg_trajectory_overlay():
    plane = build_plane(P7)
    traj = order_trajectory(GiElem(P7, 0, 2))
    svg = render_svg(plane, overlay=traj).decode()
    assert svg.count('class="traj-seg"') == 12
    assert 'marker id="arrow"' in svg


def test_svg_unimodular_only():
    plane = build_plane(P11)
    svg = render_svg(plane, spec=RenderSpec(unimodular_only=True)).decode()
    assert svg.count('class="pt"') == 12
    assert svg.count('class="ring"') == 1


def test_svg_respects_labels_flag():
    plane = build_plane(P7)
    labeled = render_svg(plane).decode()
    bare = render_svg(plane, spec=RenderSpec(labels=False)).decode()
    assert labeled.count('class="lbl"') == 48
    assert bare.count('class="lbl"') == 0


def test_text_rendering():
    plane = build_plane(P7)
    out = render_text(plane)
    assert "approximate" in out
    assert "*" in out
    overlaid = render_text(plane, overlay=order_trajectory(GiElem(P7, 0, 2)))
    assert "#" in overlaid
