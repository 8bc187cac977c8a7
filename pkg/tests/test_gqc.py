import math

import numpy as np
import pytest

from sigmalcd import gqc, oracle, poly
from sigmalcd.codes import LinearCode
from sigmalcd.cyclotomic import CyclotomicContext
from sigmalcd.errors import (
    BlocksNotCoprime,
    BlocksNotDistinct,
    ComponentNotLcd,
    ConstituentNotTrivial,
    GcdNotOne,
    LengthMismatch,
    NotCyclic,
)
from sigmalcd.field import field

F2 = field(2)
F3 = field(3)
F4 = field(2, 2)

ONE = poly.from_seq([1])
X = poly.from_seq([0, 1])
X1 = poly.from_seq([1, 1])


def rand_gqc(F, blocks, rng, ngen=1):
    gens = [
        tuple([int(rng.integers(0, F.q)) for _ in range(mj)] for mj in blocks)
        for _ in range(ngen)
    ]
    return gqc.GqcCode.from_generators(F, blocks, gens)


def coprime_units(m):
    return [a for a in range(1, m) if math.gcd(a, m) == 1]


# ------------------------------------------------------------ construction


def test_block_length_coprime_to_q():
    with pytest.raises(GcdNotOne):
        gqc.GqcCode(F2, (4,), None)
    with pytest.raises(GcdNotOne):
        gqc.GqcCode(F3, (3, 5), None)


def test_from_generators_shift_closure():
    code = gqc.GqcCode.from_generators(F2, (3,), [([1, 1, 0],)])
    # <1+x> in F2[x]/(x^3-1) has dimension 2
    assert code.k == 2
    shifted = code.shift_map().apply(code.flat.gen)
    assert LinearCode(F2, 3, shifted) == code.flat


def test_non_closed_rows_rejected():
    with pytest.raises(ValueError):
        gqc.GqcCode(F2, (3,), [[1, 1, 0]])


def test_closed_rows_accepted():
    c = gqc.GqcCode(F2, (3,), [[1, 1, 0], [0, 1, 1]])
    assert c.k == 2


def test_mu_map_permutation():
    code = rand_gqc(F2, (7,), np.random.default_rng(0))
    mu = code.mu_map(-1)
    # x^t -> x^{-t}: coordinate t lands at position (-t) mod 7
    for t in range(7):
        assert mu.perm[t] == (-t) % 7


def test_mu_requires_coprime():
    code = rand_gqc(F2, (3, 5), np.random.default_rng(1))
    with pytest.raises(GcdNotOne):
        code.mu_map(3)  # gcd(3, 15) != 1


def test_mu_involution():
    rng = np.random.default_rng(2)
    code = rand_gqc(F3, (4, 4), rng, ngen=2)
    assert code.mu(-1).mu(-1) == code


def test_block_projection():
    rng = np.random.default_rng(3)
    code = rand_gqc(F2, (3, 5), rng)
    p0 = gqc.block_projection(code, 0)
    assert p0.block_lengths == (3,) and p0.flat.n == 3


# ------------------------------------------------------------ constituents


def test_constituent_dims_sum_to_k():
    rng = np.random.default_rng(4)
    for F, blocks in [(F2, (7,)), (F3, (8,)), (F2, (3, 5)), (F3, (4, 4)), (F2, (7, 7, 7))]:
        for _ in range(5):
            code = rand_gqc(F, blocks, rng, ngen=int(rng.integers(1, 3)))
            ctx = gqc.context_for(code)
            total = sum(
                len(ctx.coset(i)) * gqc.constituent(code, ctx, i).dim for i in ctx.leaders
            )
            assert total == code.k


def test_constituent_conjugacy():
    """C_{iq} equals the entrywise q-th power of C_i."""
    rng = np.random.default_rng(5)
    code = rand_gqc(F3, (13,), rng)
    ctx = gqc.context_for(code)
    ext = ctx.ext
    for i in range(13):
        a = gqc.constituent(code, ctx, (i * 3) % 13)
        b = gqc.constituent(code, ctx, i)
        assert a.dim == b.dim
        if b.dim:
            powed = LinearCode(ext, b.basis.shape[1], np.asarray(ext.pow(b.basis, 3), dtype=np.int16))
            assert LinearCode(ext, a.basis.shape[1], a.basis) == powed


def test_dual_decomposition():
    """constituents of (mu_a C)^perp match the V-duals of C_{-ai}."""
    rng = np.random.default_rng(6)
    for blocks in [(7,), (3, 3)]:
        code = rand_gqc(F2, blocks, rng)
        ctx = gqc.context_for(code)
        m = gqc.lcm_of(blocks)
        for a in coprime_units(m):
            dual_flat = code.mu(a).flat.dual()
            dual_code = gqc.GqcCode(F2, blocks, dual_flat.gen, _trusted=True)
            for i in ctx.leaders:
                lhs = gqc.constituent(dual_code, ctx, i)
                rhs = gqc.v_dual(code, ctx, gqc.constituent(code, ctx, (-a * i) % m))
                assert lhs.dim == rhs.dim
                if lhs.dim:
                    assert np.array_equal(lhs.basis, rhs.basis)


def test_hermitian_v_dual_identity():
    rng = np.random.default_rng(7)
    code = rand_gqc(F2, (5, 5), rng, ngen=2)
    ctx = gqc.context_for(code)
    for i in ctx.leaders:
        if len(ctx.coset(i)) % 2:
            continue
        lhs = gqc.hermitian_v_dual(code, ctx, gqc.constituent(code, ctx, i))
        rhs = gqc.v_dual(code, ctx, gqc.constituent(code, ctx, (-i) % 5))
        assert lhs.dim == rhs.dim
        if lhs.dim:
            assert np.array_equal(lhs.basis, rhs.basis)


def test_hermitian_v_dual_odd_degree_rejected():
    code = rand_gqc(F2, (7,), np.random.default_rng(8))
    ctx = gqc.context_for(code)
    from sigmalcd.errors import DegreeOdd

    with pytest.raises(DegreeOdd):
        gqc.hermitian_v_dual(code, ctx, gqc.constituent(code, ctx, 1))


# ------------------------------------------------------------ LCD criteria


def test_criterion_matches_oracle_randomized():
    rng = np.random.default_rng(9)
    for _ in range(40):
        q = int(rng.choice([2, 3]))
        F = field(q)
        l = int(rng.integers(1, 4))
        m = int(rng.choice([m for m in range(2, 16) if math.gcd(m, q) == 1]))
        code = rand_gqc(F, (m,) * l, rng, ngen=int(rng.integers(1, 3)))
        ctx = gqc.context_for(code)
        for a in coprime_units(m)[:6]:
            assert gqc.is_mua_lcd(code, ctx, a) == (
                oracle.brute_hull_dim(code.flat, code.mu_map(a)) == 0
            )
        assert gqc.is_mua_lcd(code, ctx, -1, all_indices=True) == gqc.is_mua_lcd(
            code, ctx, -1
        )


def test_self_orthogonal_and_self_dual():
    # <x - 1> in F3[x]/(x^4 - 1) contains codewords summing to 0; use the
    # oracle containment check as ground truth for both flags
    rng = np.random.default_rng(10)
    for _ in range(30):
        q = int(rng.choice([2, 3]))
        F = field(q)
        m = int(rng.choice([5, 7, 8] if q == 3 else [3, 5, 7]))
        code = rand_gqc(F, (m,), rng)
        ctx = gqc.context_for(code)
        for a in coprime_units(m)[:4]:
            mu_dual = code.mu(a).flat.dual()
            so = mu_dual.contains_code(code.flat)
            sd = mu_dual == code.flat
            assert gqc.is_mua_self_orthogonal(code, ctx, a) == so
            assert gqc.is_mua_self_dual(code, ctx, a) == sd


def test_self_dual_instance():
    # {00, 11} as a cyclic code of length 2 over GF(3): <1+x>
    code = gqc.GqcCode.from_generators(F3, (2,), [([1, 1],)])
    ctx = gqc.context_for(code)
    assert gqc.is_mua_self_orthogonal(code, ctx, 1) == (
        code.flat.dual().contains_code(code.flat)
    )


def test_triple_equivalence_divisor_codes():
    for q, m in [(2, 7), (2, 9), (3, 4), (3, 8)]:
        F = field(q)
        ctx = CyclotomicContext(F, m)
        for subset, code in gqc.divisor_cyclic_codes(ctx):
            for a in coprime_units(m):
                t1 = gqc.trivial_constituent_lcd(code, ctx, a)
                t2 = gqc.mu_fixes_code(code, a)
                t3 = gqc.is_mua_lcd(code, ctx, a)
                assert t1 == t2 == t3


def test_trivial_constituent_requires_trivial():
    # a QC code with a proper nontrivial constituent must be rejected
    rng = np.random.default_rng(11)
    for _ in range(60):
        code = rand_gqc(F2, (7, 7), rng)
        ctx = gqc.context_for(code)
        dims = {i: gqc.constituent(code, ctx, i) for i in ctx.leaders}
        if any(c.dim not in (0, len(c.active)) for c in dims.values()):
            with pytest.raises(ConstituentNotTrivial):
                gqc.trivial_constituent_lcd(code, ctx, -1)
            return
    pytest.skip("no nontrivial sample drawn")


def test_reversal_lcd_all_cyclic():
    for q, m in [(2, 7), (3, 8)]:
        F = field(q)
        ctx = CyclotomicContext(F, m)
        for subset, code in gqc.divisor_cyclic_codes(ctx):
            assert gqc.reversal_sigma_lcd(code)
            assert gqc.is_mua_lcd(code, ctx, -1)


def test_reversal_requires_cyclic():
    code = rand_gqc(F2, (3, 3), np.random.default_rng(12))
    with pytest.raises(NotCyclic):
        gqc.reversal_sigma_lcd(code)


def test_cross_block_lcd():
    rng = np.random.default_rng(13)
    hits = 0
    for _ in range(40):
        code = rand_gqc(F2, (3, 5), rng, ngen=int(rng.integers(1, 3)))
        ctx = gqc.context_for(code)
        assert gqc.cross_block_lcd(code, ctx, -1) == gqc.is_mua_lcd(code, ctx, -1)
        hits += 1
    assert hits == 40


def test_cross_block_requires_coprime():
    code = rand_gqc(F2, (3, 3), np.random.default_rng(14))
    ctx = gqc.context_for(code)
    with pytest.raises(BlocksNotCoprime):
        gqc.cross_block_lcd(code, ctx, -1)


# ------------------------------------------------------------ one-generator


def test_one_gen_worked_example():
    """c = (1+x, 1+x^2), m = 3, a = -1: both gcds equal x+1, so LCD."""
    cvec = (X1, poly.from_seq([1, 0, 1]))
    ctx = CyclotomicContext(F2, 3)
    assert gqc.one_gen_lcd_eval(ctx, (3, 3), cvec, -1)
    assert gqc.one_gen_lcd_gcd(F2, (3, 3), cvec, -1)
    code = gqc.one_gen_code(F2, (3, 3), cvec)
    assert gqc.is_mua_lcd(code, gqc.context_for(code), -1)


def test_one_gen_zero_tuple():
    ctx = CyclotomicContext(F2, 3)
    assert gqc.one_gen_lcd_eval(ctx, (3, 3), (poly.ZERO, poly.ZERO), -1)
    assert gqc.one_gen_lcd_gcd(F2, (3, 3), (poly.ZERO, poly.ZERO), -1)
    assert gqc.one_gen_self_orthogonal_eval(ctx, (3, 3), (poly.ZERO, poly.ZERO), -1)


def test_one_gen_forms_agree_randomized():
    rng = np.random.default_rng(15)
    for _ in range(60):
        q = int(rng.choice([2, 3]))
        F = field(q)
        m = int(rng.choice([m for m in range(2, 16) if math.gcd(m, q) == 1]))
        l = int(rng.integers(1, 4))
        cvec = tuple(
            poly.trim(rng.integers(0, q, size=m).astype(np.int16)) for _ in range(l)
        )
        ctx = CyclotomicContext(F, m)
        code = gqc.one_gen_code(F, (m,) * l, cvec)
        for a in coprime_units(m)[:5]:
            ev = gqc.one_gen_lcd_eval(ctx, (m,) * l, cvec, a)
            gc = gqc.one_gen_lcd_gcd(F, (m,) * l, cvec, a)
            direct = gqc.is_mua_lcd(code, ctx, a)
            hull = oracle.brute_hull_dim(code.flat, code.mu_map(a)) == 0
            assert ev == gc == direct == hull
            so_ev = gqc.one_gen_self_orthogonal_eval(ctx, (m,) * l, cvec, a)
            so_gc = gqc.one_gen_self_orthogonal_gcd(F, (m,) * l, cvec, a)
            assert so_ev == so_gc == gqc.is_mua_self_orthogonal(code, ctx, a)
            if code.k:
                assert not (ev and so_ev)  # mutually exclusive for nonzero codes


def test_one_gen_gcd_requires_qc():
    with pytest.raises(LengthMismatch):
        gqc.one_gen_lcd_gcd(F2, (3, 5), (ONE, ONE), -1)


# ------------------------------------------------------------ supports


def test_qr_idempotents_m7():
    c1 = poly.from_seq([1, 1, 1, 0, 1])  # 1 + x + x^2 + x^4
    c2 = poly.from_seq([1, 0, 0, 1, 0, 1, 1])  # 1 + x^3 + x^5 + x^6
    ctx = CyclotomicContext(F2, 7)
    assert gqc.disjoint_support_lcd(ctx, (7, 7), (c1, c2))
    assert gqc.one_gen_lcd_eval(ctx, (7, 7), (c1, c2), -1)
    S1, S2 = gqc.support_sets(ctx, (7, 7), (c1, c2))
    assert S1 & S2 == set()
    assert S1 | S2 | {0} == set(range(7)) or S1 | S2 == set(range(7))


def test_disjoint_support_inapplicable():
    ctx = CyclotomicContext(F2, 3)
    assert not gqc.disjoint_support_lcd(ctx, (3, 3), (ONE, ONE))


def test_disjoint_support_single_generator():
    ctx = CyclotomicContext(F2, 3)
    assert gqc.disjoint_support_lcd(ctx, (3,), (X1,))


# ------------------------------------------------------------ maximal QC


def test_maximal_worked_examples():
    r1 = gqc.maximal_one_gen_check(F2, (3, 3), (ONE, X), -1)
    assert r1.maximal and not r1.lcd and r1.canonical is None
    r2 = gqc.maximal_one_gen_check(F2, (3, 3), (X, X1), -1)
    assert r2.lcd and r2.maximal
    assert r2.canonical.tolist() == [0, 1]  # c(x) = x
    # C = F2[x](c, c+1) really is the code generated by (x, x+1)
    code = gqc.one_gen_code(F2, (3, 3), (X, X1))
    canon = gqc.one_gen_code(
        F2, (3, 3), (r2.canonical, poly.add(F2, r2.canonical, ONE))
    )
    assert code == canon


def test_maximal_count_q2_m3():
    found = set()
    pairs = 0
    for i in range(8):
        for j in range(8):
            c1 = poly.from_seq([(i >> t) & 1 for t in range(3)])
            c2 = poly.from_seq([(j >> t) & 1 for t in range(3)])
            r = gqc.maximal_one_gen_check(F2, (3, 3), (c1, c2), -1)
            if r.lcd and r.maximal:
                pairs += 1
                found.add(tuple(r.canonical.tolist()))
    assert len(found) == 8  # q^m = 2^3
    assert pairs == 24


def test_maximal_needs_unit_gcd():
    r = gqc.maximal_one_gen_check(F2, (3, 3), (X1, X1), -1)
    assert not r.maximal


# ------------------------------------------------------------ product


def test_product_single_component():
    comp = LinearCode(F4, 1, np.array([[1]], dtype=np.int16))
    res = gqc.product_lcd_gqc(F2, [(3, 1, comp)])
    assert res.dim == 2 and res.code.flat.n == 3
    assert gqc.is_mua_lcd(res.code, res.ctx, -1)


def test_product_two_components_3_5():
    F16 = field(2, 4)
    c1 = LinearCode(F4, 1, np.array([[1]], dtype=np.int16))
    c2 = LinearCode(F16, 1, np.array([[1]], dtype=np.int16))
    res = gqc.product_lcd_gqc(F2, [(3, 1, c1), (5, 1, c2)])
    assert res.code.flat.n == 8
    assert res.dim == 6 and res.component_dims == (2, 4)
    assert oracle.brute_min_distance(res.code.flat) >= res.distance_bound


def test_product_empty():
    res = gqc.product_lcd_gqc(F2, [])
    assert res.dim == 0 and res.code.flat.n == 0


def test_product_rejects_duplicate_blocks():
    comp = LinearCode(F4, 1, np.array([[1]], dtype=np.int16))
    with pytest.raises(BlocksNotDistinct):
        gqc.product_lcd_gqc(F2, [(3, 1, comp), (3, 1, comp)])


def test_product_rejects_non_lcd_component():
    # (1, 2) over GF(9) ~ self-orthogonal? use a known non-LCD: over GF(4),
    # span{(1,1)} has gram 1*1+1*1 = 0
    comp = LinearCode(F4, 2, np.array([[1, 1]], dtype=np.int16))
    assert comp.k == 1
    with pytest.raises(ComponentNotLcd):
        gqc.product_lcd_gqc(F2, [(3, 2, comp)])


def test_product_wrong_component_field():
    comp = LinearCode(F2, 1, np.array([[1]], dtype=np.int16))
    from sigmalcd.errors import FieldMismatch

    with pytest.raises(FieldMismatch):
        gqc.product_lcd_gqc(F2, [(3, 1, comp)])


def test_product_random_components():
    rng = np.random.default_rng(16)
    F16 = field(2, 4)
    for _ in range(5):
        r1, r2 = int(rng.integers(1, 3)), int(rng.integers(1, 3))
        comps = []
        for mj, r, Fc in [(3, r1, F4), (5, r2, F16)]:
            while True:
                k = int(rng.integers(1, r + 1))
                cand = LinearCode(Fc, r, rng.integers(0, Fc.q, size=(k, r)).astype(np.int16))
                if cand.k and np.all(cand.gen.sum() >= 0):
                    from sigmalcd.codes import hull_dim

                    if hull_dim(cand, None) == 0:
                        comps.append((mj, r, cand))
                        break
        res = gqc.product_lcd_gqc(F2, comps)
        t = {3: 2, 5: 4}
        assert res.dim == sum(c.k * t[mj] for mj, _, c in comps)
        assert oracle.brute_min_distance(res.code.flat) >= res.distance_bound
