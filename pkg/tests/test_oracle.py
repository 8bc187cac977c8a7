import numpy as np
import pytest

from sigmalcd import oracle
from sigmalcd.codes import LinearCode, SemiLinearMap, hull_dim, make_lcd_sigma
from sigmalcd.errors import BudgetExceeded, NoNonzeroWords
from sigmalcd.field import field

F2 = field(2)
F3 = field(3)
F4 = field(2, 2)


def C(F, n, *rows):
    return LinearCode(F, n, np.array(rows, dtype=np.int16) if rows else None)


def test_enumerate_repetition():
    words = {tuple(w) for w in oracle.enumerate_codewords(C(F2, 3, (1, 1, 1)))}
    assert words == {(0, 0, 0), (1, 1, 1)}


def test_enumerate_full_space_count():
    c = C(F3, 2, (1, 0), (0, 1))
    assert sum(1 for _ in oracle.enumerate_codewords(c)) == 9


def test_enumerate_zero_code():
    assert [w.tolist() for w in oracle.enumerate_codewords(C(F2, 2))] == [[0, 0]]


def test_enumerate_distinct_members():
    rng = np.random.default_rng(20)
    for F in (F2, F3, F4):
        for _ in range(10):
            n = int(rng.integers(1, 6))
            k = int(rng.integers(0, n + 1))
            g = rng.integers(0, F.q, size=(k, n)).astype(np.int16)
            c = LinearCode(F, n, g)
            seen = set()
            for w in oracle.enumerate_codewords(c):
                assert c.contains(w)
                seen.add(tuple(int(x) for x in w))
            assert len(seen) == F.q**c.k


def test_budget_exceeded():
    c = LinearCode(F2, 30, np.eye(30))
    with pytest.raises(BudgetExceeded):
        list(oracle.enumerate_codewords(c, oracle.EnumerationBudget(max_words=2**10)))


def test_min_distance_examples():
    assert oracle.brute_min_distance(C(F2, 3, (1, 1, 1))) == 3
    ham = LinearCode(F2, 7, [[1, 1, 0, 1, 0, 0, 0]])
    # single cyclic shift generator row only: weight-3 word itself
    assert oracle.brute_min_distance(ham) == 3
    with pytest.raises(NoNonzeroWords):
        oracle.brute_min_distance(C(F2, 2))


def test_min_distance_jobs_agree():
    rng = np.random.default_rng(21)
    c = LinearCode(F3, 8, rng.integers(0, 3, size=(4, 8)).astype(np.int16))
    d1 = oracle.brute_min_distance(c, jobs=1)
    d2 = oracle.brute_min_distance(c, jobs=3, chunk=8)
    assert d1 == d2


def test_weight_distribution_sums_to_qk():
    rng = np.random.default_rng(22)
    c = LinearCode(F2, 6, rng.integers(0, 2, size=(3, 6)).astype(np.int16))
    wd = oracle.weight_distribution(c)
    assert wd.sum() == 2**c.k
    assert wd[0] == 1
    nz = [i for i in range(1, 7) if wd[i]]
    assert min(nz) == oracle.brute_min_distance(c)


def test_intersection_examples():
    c = C(F3, 3, (1, 0, 0), (0, 1, 0))
    assert oracle.brute_intersection_dim(c, c) == 2
    sd = C(F2, 2, (1, 1))
    assert oracle.brute_intersection_dim(sd, sd.dual()) == 1
    a = C(F2, 2, (1, 0))
    b = C(F2, 2, (0, 1))
    assert oracle.brute_intersection_dim(a, b) == 0


def test_hull_agrees_with_formula():
    rng = np.random.default_rng(23)
    for F in (F2, F3, F4):
        for _ in range(25):
            n = int(rng.integers(2, 8))
            k = int(rng.integers(1, n + 1))
            c = LinearCode(F, n, rng.integers(0, F.q, size=(k, n)).astype(np.int16))
            perm = rng.permutation(n).astype(np.int32)
            diag = rng.integers(1, F.q, size=n).astype(np.int16)
            sg = SemiLinearMap(F, perm=perm, diag=diag, frob=int(rng.integers(0, F.e)))
            assert oracle.brute_hull_dim(c, sg) == hull_dim(c, sg)


# ------------------------------------------------------ sigma family search


def test_search_identity_first_on_lcd():
    c = C(F2, 3, (1, 0, 0))
    for fam in oracle.SIGMA_FAMILIES:
        sg = oracle.exhaustive_sigma_search(c, fam)
        assert sg is not None
        assert np.array_equal(sg.perm, np.arange(3)) and np.all(sg.diag == 1)


def test_search_diagonal_family_gf5():
    c = C(field(5), 2, (1, 2))
    sg = oracle.exhaustive_sigma_search(c, "diagonal-lambda")
    assert sg is not None
    assert sg.diag.tolist() == make_lcd_sigma(c)[0].diag.tolist() == [2, 1]


def test_search_permutation_family_obstruction():
    # even-like binary code containing the all-ones word: provably no
    # permutation works at the original length (n=4 is fully enumerated)
    c = C(F2, 4, (1, 1, 0, 0), (0, 0, 1, 1))
    assert oracle.exhaustive_sigma_search(c, "permutation-sample") is None


def test_search_unknown_family():
    with pytest.raises(ValueError):
        oracle.exhaustive_sigma_search(C(F2, 2, (1, 0)), "nope")


def test_search_cyclic_family():
    c = C(F2, 3, (1, 1, 0))
    sg = oracle.exhaustive_sigma_search(c, "cyclic-pi2")
    assert sg is not None and oracle.brute_hull_dim(c, sg) == 0
