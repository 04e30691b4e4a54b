import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legendre_iso.curves import (
    LegendreCurve,
    TwoParamCurve,
    WeierstrassCurve,
    discriminant,
    j_invariant,
    to_weierstrass,
)
from legendre_iso.gf import elements, field_of_order, make_field
from legendre_iso.iso import (
    IsoWitness,
    TransformParams,
    apply_transform,
    corollary32_iso,
    general_iso_witness,
    lemma31_iso,
    simplified_iso_witness,
    table1_fast_iso,
)

from conftest import fields_up_to, iso_relation


def E(F, lam):
    return LegendreCurve(F, F(lam) if isinstance(lam, int) else lam)


def test_identity_transform():
    F = make_field(11)
    W = WeierstrassCurve.from_ints(F, 1, 2, 3, 4, 5)
    assert apply_transform(W, TransformParams(F(1), F(0), F(0), F(0))) == W


def test_scaling_transform_f7():
    F = make_field(7)
    W = to_weierstrass(E(F, 3))
    V = apply_transform(W, TransformParams.short(F(2), F(0)))
    # u = 2: a2' = a2 / 4, a4' = a4 / 16
    assert V.a2 * 4 == W.a2 and V.a4 * 16 == W.a4
    assert int(V.a2) == (-(1 + 3) * pow(4, -1, 7)) % 7
    assert int(V.a4) == (3 * pow(16, -1, 7)) % 7


def test_transform_rejects_zero_u():
    F = make_field(7)
    with pytest.raises(ValueError):
        TransformParams(F(0), F(0), F(0), F(0))


FIELDS = [make_field(5), make_field(7), make_field(13), make_field(5, 2), make_field(7, 2)]


@st.composite
def curve_and_transform(draw):
    F = draw(st.sampled_from(FIELDS))
    el = lambda: F.decode(draw(st.integers(0, F.q - 1)))  # noqa: E731
    W = WeierstrassCurve(F, el(), el(), el(), el(), el())
    u = F.decode(draw(st.integers(1, F.q - 1)))
    return W, TransformParams(u, el(), el(), el())


@settings(max_examples=400, deadline=None)
@given(curve_and_transform())
def test_transform_invariants(wt):
    W, T = wt
    V = apply_transform(W, T)
    assert discriminant(V) == discriminant(W) / T.u**12
    if discriminant(W):
        assert j_invariant(V) == j_invariant(W)


def test_simplified_witness_examples():
    F = make_field(13)
    w = simplified_iso_witness(E(F, 5), E(F, 5))
    assert w.isomorphic and (int(w.params.u), int(w.params.r)) == (1, 0)
    assert simplified_iso_witness(TwoParamCurve(F, F(1), F(-1)), TwoParamCurve(F, F(1), F(2))).isomorphic
    assert simplified_iso_witness(E(F, -1), E(F, 2)).isomorphic
    assert not simplified_iso_witness(E(F, 7), E(F, 2)).isomorphic
    assert F(7) * 2 == 1


def test_lemma31_examples():
    F13, F7 = make_field(13), make_field(7)
    w = lemma31_iso(TwoParamCurve(F13, F13(1), F13(3)), TwoParamCurve(F13, F13(1), F13(3)))
    assert w.isomorphic and w.matched_case == "identity-set" and w.params.u == 1
    w = lemma31_iso(TwoParamCurve(F13, F13(1), F13(3)), TwoParamCurve(F13, F13(1), F13(11)))
    assert w.isomorphic and w.matched_case == "negated-set" and w.params.u**2 == -1
    assert simplified_iso_witness(TwoParamCurve(F13, F13(1), F13(3)), TwoParamCurve(F13, F13(1), F13(11))).isomorphic
    C1, C2 = TwoParamCurve(F7, F7(1), F7(3)), TwoParamCurve(F7, F7(1), F7(5))
    assert not lemma31_iso(C1, C2).isomorphic
    assert not simplified_iso_witness(C1, C2).isomorphic


def test_corollary32_examples():
    F = make_field(13)
    assert corollary32_iso(E(F, 9), E(F, 9)).isomorphic
    assert corollary32_iso(E(F, 12), E(F, 2)).isomorphic
    assert not corollary32_iso(E(F, 6), E(F, 7)).isomorphic
    assert not simplified_iso_witness(E(F, 6), E(F, 7)).isomorphic


def test_table1_examples():
    F7, F13 = make_field(7), make_field(13)
    assert table1_fast_iso(E(F7, 4), F7(4))
    assert not table1_fast_iso(E(F7, 3), F7(5))
    assert not simplified_iso_witness(E(F7, 3), E(F7, 5)).isomorphic
    assert table1_fast_iso(E(F13, 3), F13(11))
    assert simplified_iso_witness(E(F13, 3), E(F13, 11)).isomorphic


def test_witness_requires_params():
    with pytest.raises(ValueError):
        IsoWitness(True)


@pytest.mark.parametrize("F", fields_up_to(31), ids=lambda F: f"q{F.q}")
def test_three_routes_agree_pairwise(F):
    # object-level oracle on every pair; also pins the kernel's first witness
    wu, wr = iso_relation(F.q)
    lams = elements(F)[2:]
    for lam in lams:
        E1 = E(F, lam)
        W1 = to_weierstrass(E1)
        for mu in lams:
            E2 = E(F, mu)
            oracle = simplified_iso_witness(E1, E2)
            crit = corollary32_iso(E1, E2)
            assert oracle.isomorphic == crit.isomorphic == table1_fast_iso(E1, mu)
            assert oracle.isomorphic == (wu[int(lam), int(mu)] >= 0)
            if oracle:
                assert (int(oracle.params.u), int(oracle.params.r)) == (wu[int(lam), int(mu)], wr[int(lam), int(mu)])
                assert oracle.matched_case is not None
                assert apply_transform(W1, oracle.params) == to_weierstrass(E2)
                assert apply_transform(W1, crit.params) == to_weierstrass(E2)


@pytest.mark.parametrize("q", [5, 7, 11, 13])
def test_restricted_r_scan_object_level(q):
    F = field_of_order(q)
    lams = elements(F)[2:]
    for lam in lams:
        for mu in lams:
            full = simplified_iso_witness(E(F, lam), E(F, mu))
            restricted = simplified_iso_witness(E(F, lam), E(F, mu), r_values=[F.zero, F.one, lam])
            assert full.isomorphic == restricted.isomorphic


@pytest.mark.parametrize("q", [5, 7])
def test_general_scan_forces_short_transform(q):
    # full (u, r, s, t) scan at object level on tiny fields
    F = field_of_order(q)
    lams = elements(F)[2:]
    for lam in lams:
        for mu in lams:
            w = general_iso_witness(to_weierstrass(E(F, lam)), to_weierstrass(E(F, mu)))
            assert w.isomorphic == corollary32_iso(E(F, lam), E(F, mu)).isomorphic
            if w:
                assert w.params.s == 0 and w.params.t == 0


def test_twist_matched_case_for_twoparam():
    F = make_field(13)
    C1 = TwoParamCurve(F, F(2), F(5))
    for d in elements(F)[1:]:
        for e in elements(F)[1:]:
            if d == e:
                continue
            C2 = TwoParamCurve(F, d, e)
            w = lemma31_iso(C1, C2)
            assert w.isomorphic == simplified_iso_witness(C1, C2).isomorphic
            if w:
                assert apply_transform(to_weierstrass(C1), w.params) == to_weierstrass(C2)


def test_mixed_fields_rejected():
    from legendre_iso.gf import FieldError

    with pytest.raises(FieldError):
        corollary32_iso(E(make_field(7), 2), E(make_field(11), 2))
    with pytest.raises(FieldError):
        simplified_iso_witness(E(make_field(7), 2), E(make_field(11), 2))
