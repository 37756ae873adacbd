import itertools

import numpy as np
import pytest

from omegaminus.algebra import SemilinearElement, gf
from omegaminus.forms import (FormError, QuadraticSpace, classify_type, dickson_invariant,
                              dickson_or_spinor, eichler, enumerate_value_set,
                              expected_singular_count, hermitian_standard, hyperbolic_space,
                              minus_standard_space, reflection, singular_count)


def brute_singular(space):
    F = space.spec
    count = 0
    for v in itertools.product(range(F.order), repeat=space.dim):
        if any(v) and space.Q(v) == 0:
            count += 1
    return count


@pytest.mark.parametrize("m,q", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_singular_count_brute_force(m, q):
    space = minus_standard_space(m, q)
    assert singular_count(space) == brute_singular(space)
    assert singular_count(space) == expected_singular_count(m, q, "minus")


@pytest.mark.parametrize("m,q", [(4, 2), (3, 3), (3, 4), (5, 2)])
def test_types(m, q):
    assert classify_type(minus_standard_space(m, q)) == "minus"
    assert classify_type(hyperbolic_space(m, q)) == "plus"


def test_value_sets_partition():
    space = minus_standard_space(4, 2)
    assert enumerate_value_set(space, 0).size == 119
    assert enumerate_value_set(space, 1).size == 136
    assert 119 + 136 == 2 ** 8 - 1


def test_beta_is_polarization():
    space = minus_standard_space(3, 4)
    F = space.spec
    rng = np.random.default_rng(1)
    for _ in range(50):
        u, v = rng.integers(0, 4, (2, 6))
        lhs = space.Q(F.add(u, v))
        rhs = F.add(F.add(space.Q(u), space.Q(v)), space.beta(u, v))
        assert lhs == int(rhs)


@pytest.mark.parametrize("q", [2, 4, 3])
def test_reflection_and_eichler(q):
    space = minus_standard_space(3, q)
    lab = space.basis_labels
    r = reflection(space, lab["d"])
    assert space.is_isometry(r)
    assert (r * r).is_identity()
    assert dickson_or_spinor(space, r) == 1
    g = eichler(space, lab["e1"], lab["e2"])
    assert space.is_isometry(g)
    assert dickson_or_spinor(space, g) == 0


def test_dickson_is_homomorphism_on_reflections():
    space = minus_standard_space(3, 2)
    F = space.spec
    nonsing = [v for v in itertools.product(range(2), repeat=6) if space.Q(v)]
    rng = np.random.default_rng(0)
    for _ in range(40):
        ws = [nonsing[i] for i in rng.integers(len(nonsing), size=int(rng.integers(1, 6)))]
        g = SemilinearElement.identity(F, 6)
        for w in ws:
            g = g * reflection(space, w)
        assert dickson_invariant(space, g) == len(ws) % 2


def test_hermitian_standard():
    hs = hermitian_standard(5, 2)
    E1, F1, D = hs.vector("E1"), hs.vector("F1"), hs.vector("D")
    assert hs.h(E1, E1) == 0 and hs.h(E1, F1) == 1 and hs.h(D, D) == 1
    F = hs.spec
    a = F.gen.value
    assert hs.h(F.mul(a, E1), F1) == a
    assert hs.h(F1, F.mul(a, E1)) == int(hs.conj(a))


def test_degenerate_rejected():
    with pytest.raises(FormError):
        QuadraticSpace(gf(3), np.zeros((2, 2), dtype=np.int64))


def test_enumeration_cap():
    with pytest.raises(FormError):
        enumerate_value_set(minus_standard_space(7, 9), 0)


@pytest.mark.parametrize("m,q", [(2, 3), (3, 3), (2, 9)])
def test_spinor_class_matches_reflection_products(m, q):
    from omegaminus.forms import spinor_class

    space = minus_standard_space(m, q)
    F, n = space.spec, space.dim
    vecs = F.int_to_vec(np.arange(1, min(F.order ** n, 3000)), n)
    nonsing = [v for v in vecs if space.Q(v)]
    rng = np.random.default_rng(m * q)
    for _ in range(80):
        k = int(rng.integers(1, 6))
        g, norm = SemilinearElement.identity(F, n), 1
        for _ in range(k):
            w = nonsing[rng.integers(len(nonsing))]
            g = g * reflection(space, w)
            norm = int(F.mul(norm, space.Q(w)))
        assert spinor_class(space, g) == (k % 2, 0 if F.is_square(norm) else 1)
