import numpy as np
import pytest

from sigmalcd import poly
from sigmalcd.cyclotomic import (
    CyclotomicContext,
    GammaPartition,
    gamma_partition,
    mult_order,
)
from sigmalcd.errors import GcdNotOne
from sigmalcd.field import field

F2 = field(2)
F3 = field(3)


def test_mult_order():
    assert mult_order(2, 7) == 3
    assert mult_order(2, 15) == 4
    assert mult_order(3, 13) == 3
    assert mult_order(2, 1) == 1


def test_mult_order_requires_coprime():
    with pytest.raises(GcdNotOne):
        mult_order(2, 4)


def test_cosets_2_7():
    ctx = CyclotomicContext(F2, 7)
    assert ctx.leaders == [0, 1, 3]
    assert tuple(sorted(ctx.cosets[1])) == (1, 2, 4)
    assert tuple(sorted(ctx.cosets[3])) == (3, 5, 6)
    assert ctx.leader_of[6] == 3


def test_cosets_partition_zm():
    for F, m in [(F2, 7), (F2, 15), (F3, 13), (F3, 8)]:
        ctx = CyclotomicContext(F, m)
        all_idx = sorted(i for lead in ctx.leaders for i in ctx.cosets[lead])
        assert all_idx == list(range(m))


def test_xi_has_order_m():
    for F, m in [(F2, 7), (F2, 5), (F3, 8), (F3, 13)]:
        ctx = CyclotomicContext(F, m)
        assert ctx.ext.element_order(ctx.xi) == m


def test_eval_point_powers():
    ctx = CyclotomicContext(F2, 7)
    for i in range(7):
        assert ctx.eval_point(i) == ctx.ext.pow(ctx.xi, i)


def test_minimal_poly_has_coset_degree():
    for F, m in [(F2, 7), (F3, 13)]:
        ctx = CyclotomicContext(F, m)
        for i in ctx.leaders:
            mp = ctx.minimal_poly(i)
            assert poly.degree(mp) == len(ctx.cosets[i])
            # xi^i is a root
            assert ctx.emb.eval_poly(mp, ctx.eval_point(i)) == 0


def test_minimal_polys_factor_xm1():
    for F, m in [(F2, 7), (F2, 15), (F3, 13), (field(2, 2), 5)]:
        ctx = CyclotomicContext(F, m)
        acc = poly.from_seq([1])
        for i in ctx.leaders:
            acc = poly.mul(F, acc, ctx.minimal_poly(i))
        assert poly.equal(acc, poly.xm1(F, m))


def test_gamma_partition_frozen_cases():
    gp = gamma_partition(CyclotomicContext(F2, 7))
    assert (gp.g0_plus, gp.g0_minus, gp.g1) == ((0,), (), (1,))
    gp5 = gamma_partition(CyclotomicContext(F2, 5))
    assert (gp5.g0_plus, gp5.g0_minus, gp5.g1) == ((0,), (1,), ())
    gp34 = gamma_partition(CyclotomicContext(F3, 4))
    assert (gp34.g0_plus, gp34.g0_minus, gp34.g1) == ((0, 2), (1,), ())


def test_gamma0_plus_is_real_subgroup_points():
    """leaders whose evaluation point is +1 or -1."""
    for F, m in [(F2, 7), (F2, 9), (F3, 8), (F3, 13), (F3, 4)]:
        ctx = CyclotomicContext(F, m)
        gp = gamma_partition(ctx)
        ext = ctx.ext
        pm1 = {1, ext.neg(1)}
        for i in ctx.leaders:
            if i in gp.g0_plus:
                assert ctx.eval_point(i) in pm1
            else:
                assert ctx.eval_point(i) not in pm1


def test_gamma_tiles_leaders():
    for F, m in [(F2, 7), (F2, 15), (F3, 8), (F3, 13), (F3, 14)]:
        ctx = CyclotomicContext(F, m)
        gp = gamma_partition(ctx)
        tiles = list(gp.g0_plus) + list(gp.g0_minus) + list(gp.g1)
        mirrored = [ctx.leader_of[(-i) % m] for i in gp.g1]
        assert sorted(tiles + mirrored) == sorted(ctx.leaders)
        # g0_minus cosets are self-reciprocal but not fixed points of negation
        for i in gp.g0_minus:
            assert ctx.leader_of[(-i) % m] == i and i not in gp.g0_plus
        for i in gp.g1:
            assert ctx.leader_of[(-i) % m] != i


def test_g0_minus_cosets_have_even_size():
    for F, m in [(F2, 5), (F3, 8), (F2, 9), (F3, 13)]:
        ctx = CyclotomicContext(F, m)
        for i in gamma_partition(ctx).g0_minus:
            assert len(ctx.cosets[i]) % 2 == 0


def test_delta_indicator():
    # one block of length m: delta is 1 for every i
    ctx = CyclotomicContext(F2, 7)
    assert all(ctx.delta(i, 7) for i in range(7))
    # block length 1 inside m=7 context: only i = 0 hits
    assert ctx.delta(0, 1)
    assert not ctx.delta(1, 1)


def test_conj_is_field_conjugation():
    """conj fixes the base field and permutes the roots of each minimal poly."""
    ctx = CyclotomicContext(F3, 13)
    # conj of xi^i is xi^(3i)
    for i in range(13):
        assert ctx.conj(ctx.eval_point(i)) == ctx.eval_point((3 * i) % 13)
    assert ctx.conj(1) == 1


def test_context_cache_identity():
    a = CyclotomicContext(F2, 7)
    b = CyclotomicContext(F2, 7)
    assert a.leaders == b.leaders and a.xi == b.xi
