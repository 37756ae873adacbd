import pytest

from omegaminus.factorcore import (FactorCapError, SmallGroup, alternating, conjugate_pair_checks,
                                   from_cycles, is_factorization, is_factorization_by_count,
                                   mixed_product_identity, quotient_reduction_check, run_corpus,
                                   symmetric)

S4 = symmetric(4)
A4 = alternating(4)
S3 = SmallGroup.generated(4, [from_cycles(4, [0, 1]), from_cycles(4, [0, 1, 2])])
V4 = SmallGroup.generated(4, [from_cycles(4, [0, 1], [2, 3]), from_cycles(4, [0, 2], [1, 3])])
TRIVIAL = SmallGroup.generated(4, [])


def test_s4_is_s3_times_a4():
    assert is_factorization(S4, S3, A4)
    assert S3.intersection(A4).order == 3


def test_trivial_factorizations():
    assert is_factorization(S4, S4, TRIVIAL)
    c2 = SmallGroup.generated(4, [from_cycles(4, [0, 1], [2, 3])])
    c3 = SmallGroup.generated(4, [from_cycles(4, [0, 1, 2])])
    assert not is_factorization(A4, c2, c3)


def test_quotient_reduction_extremes():
    for N in (TRIVIAL, S4, V4, A4):
        assert quotient_reduction_check(S4, S3, A4, N)
        assert quotient_reduction_check(S4, S3, V4, N)


def test_conjugates():
    e = S4.identity
    assert conjugate_pair_checks(A4, S3, A4, e, e, e, S4)
    for x in sorted(S4.elements)[:10]:
        assert conjugate_pair_checks(A4, S3, A4, x, x, sorted(S4.elements)[-1], S4)


def test_mixed_product():
    assert mixed_product_identity(S4, S3, A4, V4)
    assert mixed_product_identity(S4, S3, A4, S4)
    assert mixed_product_identity(S4, S3, A4, TRIVIAL)


def test_a5_factor_pairs_under_conjugation():
    a5, s5 = alternating(5), symmetric(5)
    a4 = SmallGroup.generated(5, [from_cycles(5, [0, 1, 2]), from_cycles(5, [1, 2, 3])])
    c5 = SmallGroup.generated(5, [from_cycles(5, [0, 1, 2, 3, 4])])
    assert is_factorization(a5, a4, c5)
    elems = sorted(s5.elements)
    for k in range(20):
        alpha = elems[(7 * k) % 120]
        x, y = elems[(11 * k) % 120], elems[(13 * k + 5) % 120]
        if x in a5 and y in a5:
            assert conjugate_pair_checks(a5, a4, c5, alpha, x, y, a5)


def test_not_a_group():
    with pytest.raises(ValueError):
        SmallGroup(3, frozenset({(0, 1, 2), (1, 2, 0)}))


def test_cap():
    with pytest.raises(FactorCapError):
        symmetric(9)


def test_corpus():
    res = run_corpus(samples_per_check=40, seed=1)
    assert res.ok, res.failures
    assert res.total == 160


def test_count_route_agrees_on_s4_subgroups():
    subs = [S4, A4, S3, V4, TRIVIAL]
    for H in subs:
        for K in subs:
            assert is_factorization(S4, H, K) == is_factorization_by_count(S4, H, K)
