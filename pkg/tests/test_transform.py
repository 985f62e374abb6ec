"""Z transform evaluation, tables, closed forms, inversion, the DTFT."""

import random

import pytest

from zgf import (
    DomainError,
    GiElem,
    Prime,
    RationalForm,
    SequenceSpec,
    TransformTable,
    exponential_closed_form,
    ff_dtft,
    ffzt_eval,
    ffzt_table,
    find_gs_generator,
    iffzt,
    iffzt_window,
    is_divergent,
    lemma1_sum,
    rational_eval,
)
from tests._oracles import cesaro_oracle, gi_order, sequence_terms

P7 = Prime(7)
P11 = Prime(11)


def nonzero(prime):
    p = prime.value
    return [GiElem(prime, a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]


def test_eval_examples():
    x = SequenceSpec.exponential(P7, 1, 3)
    assert ffzt_eval(x, GiElem(P7, 1, 0)) == GiElem(P7, 3, 0)
    assert is_divergent(ffzt_eval(x, GiElem(P7, 3, 0)))
    delta = SequenceSpec.impulse(P7)
    for z in nonzero(P7)[::5]:
        assert ffzt_eval(delta, z) == GiElem.one(P7)


def test_eval_at_zero():
    delta = SequenceSpec.impulse(P7)
    assert ffzt_eval(delta, GiElem.zero(P7)) == GiElem.one(P7)
    with pytest.raises(DomainError):
        ffzt_eval(SequenceSpec.unit_step(P7), GiElem.zero(P7))
    with pytest.raises(DomainError):
        ffzt_eval(SequenceSpec(P7, prefix=(1, 2)), GiElem.zero(P7))


def _random_spec(rng, prime):
    p = prime.value
    left = tuple(
        (n, rng.randrange(p)) for n in rng.sample(range(-3, 0), rng.randint(0, 2))
    )
    prefix = tuple(rng.randrange(p) for _ in range(rng.randint(0, 3)))
    tail = tuple(rng.randrange(p) for _ in range(rng.randint(1, 4)))
    return SequenceSpec(prime, left, prefix, tail)


@pytest.mark.parametrize("prime", [P7, P11])
def test_eval_matches_materialized_oracle(prime):
    rng = random.Random(31 + prime.value)
    p = prime.value
    for _ in range(25):
        x = _random_spec(rng, prime)
        z = rng.choice(nonzero(prime))
        t0 = len(x.left) + len(x.prefix)
        n = gi_order(p, ((z.re, z.im)))
        span = len(x.tail) * n * p  # generous period bound
        terms = sequence_terms(x, (z.re, z.im), t0 + 3 * span + 10)
        conv, sigma, _, _ = cesaro_oracle(p, terms)
        got = ffzt_eval(x, z)
        if conv:
            assert (got.re, got.im) == sigma
        else:
            assert is_divergent(got)


def test_table_examples():
    table = ffzt_table(SequenceSpec.exponential(P7, 1, 3))
    assert [str(z) for z in table.divergent_points] == ["3+0j"]
    assert len(table.roc) == 47

    table = ffzt_table(SequenceSpec.impulse(P7))
    assert all(v == GiElem.one(P7) for _, v in table.entries())
    assert len(table.roc) == 48

    table = ffzt_table(SequenceSpec.unit_step(P7))
    assert [str(z) for z in table.divergent_points] == ["1+0j"]


def test_table_requires_ceiling():
    with pytest.raises(DomainError):
        ffzt_table(SequenceSpec.impulse(Prime(131)))


def test_table_lookup_and_domain():
    table = ffzt_table(SequenceSpec.impulse(P7))
    assert table.value_at(GiElem(P7, 2, 5)) == GiElem.one(P7)
    with pytest.raises(DomainError):
        table.value_at(GiElem.zero(P7))


def test_table_json_round_trip_bit_exact(tmp_path):
    table = ffzt_table(SequenceSpec.exponential(P7, 2, 3))
    path = tmp_path / "table.json"
    table.save(path)
    raw = path.read_bytes()
    loaded = TransformTable.load(path)
    assert loaded == table
    loaded.save(path)
    assert path.read_bytes() == raw


def test_closed_form_structure():
    f = exponential_closed_form(P7, 1, 3)
    assert f.num == (1,)
    assert f.den == (1, 4)  # 1 - 3*Z**-1 with -3 = 4 (mod 7)
    assert [str(z) for z in f.poles] == ["3+0j"]
    assert f.zeros == ()

    step = exponential_closed_form(P7, 1, 1)
    assert [str(z) for z in step.poles] == ["1+0j"]

    with pytest.raises(DomainError):
        exponential_closed_form(P7, 1, 0)


def test_rational_eval_examples():
    f = exponential_closed_form(P7, 1, 3)
    assert rational_eval(f, GiElem(P7, 2, 0)) == GiElem(P7, 5, 0)
    assert is_divergent(rational_eval(f, GiElem(P7, 3, 0)))
    const = RationalForm.from_coeffs(P7, (1,), (1,))
    for z in nonzero(P7)[::7]:
        assert rational_eval(const, z) == GiElem.one(P7)
    with pytest.raises(DomainError):
        rational_eval(f, GiElem.zero(P7))
    # closed form at Z=1 reproduces the Cesaro sum of 3**n u[n]
    assert rational_eval(f, GiElem.one(P7)) == GiElem(P7, 3, 0)


def test_rational_form_validation():
    with pytest.raises(DomainError):
        RationalForm.from_coeffs(P7, (1,), (0, 0))


@pytest.mark.parametrize("prime", [P7, P11])
def test_exponential_equivalence_sweep(prime):
    # Cesaro evaluation equals the rational closed form at every point,
    # with Z = a as the unique divergence
    p = prime.value
    for a in range(1, p):
        x = SequenceSpec.exponential(prime, 1, a)
        f = exponential_closed_form(prime, 1, a)
        table = ffzt_table(x)
        assert [str(z) for z in table.divergent_points] == [f"{a}+0j"]
        for z, got in table.entries():
            want = rational_eval(f, z)
            if is_divergent(want):
                assert is_divergent(got)
            else:
                assert got == want


def test_lemma1_examples():
    assert lemma1_sum(0, P7).value == 6
    assert lemma1_sum(1, P7).value == 0
    assert lemma1_sum(48, P7).value == 6


@pytest.mark.parametrize("p", [3, 7, 11])
def test_lemma1_sweep(p):
    prime = Prime(p)
    m = p * p - 1
    for i in range(0, 2 * m + 1):
        expected = (p - 1) if i % m == 0 else 0
        assert lemma1_sum(i, prime).value == expected


def test_iffzt_examples():
    table = ffzt_table(SequenceSpec.impulse(P7))
    assert iffzt(table, 0).value == 1
    assert iffzt(table, 5).value == 0

    table = ffzt_table(SequenceSpec(P7, prefix=(1, 2, 3)))
    assert [iffzt(table, n).value for n in range(5)] == [1, 2, 3, 0, 0]

    # delayed impulse: X(Z) = Z**-1
    table = ffzt_table(SequenceSpec.impulse(P7).shifted(1))
    assert iffzt(table, 1).value == 1
    assert iffzt(table, 0).value == 0


def test_iffzt_rejects_divergent_tables():
    table = ffzt_table(SequenceSpec.unit_step(P7))
    with pytest.raises(DomainError, match=r"1\+0j"):
        iffzt(table, 0)
    with pytest.raises(DomainError, match=r"1\+0j"):
        iffzt_window(table)


def test_iffzt_rejects_non_real_inversions():
    values = {z: GiElem.one(P7) for z in nonzero(P7)}
    values[GiElem(P7, 1, 0)] = GiElem(P7, 0, 1)
    table = TransformTable(P7, values)
    with pytest.raises(DomainError, match="real"):
        iffzt_window(table)


def test_table_domain_validation():
    values = {z: GiElem.one(P7) for z in nonzero(P7)[:-1]}
    with pytest.raises(DomainError):
        TransformTable(P7, values)


@pytest.mark.parametrize("prime", [P7, P11])
def test_inversion_round_trip_random(prime):
    rng = random.Random(1000 + prime.value)
    m = prime.value**2 - 1
    for _ in range(8):
        support = rng.sample(range(m), rng.randint(1, 6))
        prefix = [0] * m
        for n in support:
            prefix[n] = rng.randrange(1, prime.value)
        x = SequenceSpec(prime, prefix=tuple(prefix))
        recovered = iffzt_window(ffzt_table(x))
        assert [v.value for v in recovered] == prefix


def test_iffzt_aliasing_window():
    # support at n = 0 and n = p**2 - 1 collapses onto the same residue
    m = 48
    x = SequenceSpec(P7, prefix=tuple([1] + [0] * (m - 1) + [1]))
    table = ffzt_table(x)
    recovered = iffzt_window(table)
    assert recovered[0].value == 2  # x[0] + x[m]
    assert all(v.value == 0 for v in recovered[1:])


def test_linearity():
    rng = random.Random(5)
    for _ in range(10):
        x = _random_spec(rng, P7)
        y = _random_spec(rng, P7)
        alpha, beta = rng.randrange(7), rng.randrange(7)
        combo = x.scaled(alpha) + y.scaled(beta)
        for z in nonzero(P7)[::6]:
            vx, vy, vc = ffzt_eval(x, z), ffzt_eval(y, z), ffzt_eval(combo, z)
            if not is_divergent(vx) and not is_divergent(vy):
                assert vc == vx * alpha + vy * beta


def test_time_shift():
    rng = random.Random(6)
    for _ in range(8):
        x = _random_spec(rng, P7)
        shifted = x.shifted(1)
        for z in nonzero(P7)[::5]:
            vx, vs = ffzt_eval(x, z), ffzt_eval(shifted, z)
            if is_divergent(vx):
                assert is_divergent(vs)
            else:
                assert vs == vx * z.inv()


def test_exponential_modulation():
    rng = random.Random(8)
    for _ in range(8):
        x = _random_spec(rng, P7)
        a = rng.randrange(1, 7)
        modulated = x.modulated(a)
        a_inv = P7.elem(a).inv().value
        for z in nonzero(P7)[::5]:
            vm = ffzt_eval(modulated, z)
            vx = ffzt_eval(x, GiElem(P7, a_inv, 0) * z)
            if is_divergent(vx):
                assert is_divergent(vm)
            else:
                assert vm == vx


def test_dtft_examples():
    delta = SequenceSpec.impulse(P7)
    for theta in range(16):
        assert ff_dtft(delta, theta) == GiElem.one(P7)
    x = SequenceSpec.exponential(P7, 1, 3)
    assert ff_dtft(x, 0) == GiElem(P7, 3, 0)
    # pole Z=3 has modulus 4, off the unit circle: every theta converges
    for theta in range(16):
        assert not is_divergent(ff_dtft(x, theta))


@pytest.mark.parametrize("prime", [P7, P11])
def test_dtft_agrees_with_eval_on_circle(prime):
    rng = random.Random(77)
    eps = find_gs_generator(prime)
    for _ in range(5):
        x = _random_spec(rng, prime)
        for theta in range(2 * (prime.value + 1)):
            assert ff_dtft(x, theta, eps) == ffzt_eval(x, eps**theta)


def test_dtft_validation():
    x = SequenceSpec.impulse(P7)
    with pytest.raises(DomainError):
        ff_dtft(x, 16)
    with pytest.raises(DomainError):
        ff_dtft(x, -1)
    with pytest.raises(DomainError):
        ff_dtft(x, 0, base=GiElem(P7, 0, 1))  # order 4, not a generator
