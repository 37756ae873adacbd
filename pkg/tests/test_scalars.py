import numpy as np
import pytest

from omegaminus.algebra import SemilinearElement, quadratic_extension, solve_lambda
from omegaminus.forms import QuadraticSpace, classify_type, hermitian_standard, minus_standard_space
from omegaminus.scalars import (BridgeError, ScalarBridge, check_standard, complete_standard_basis,
                                labelled, trace_restriction, transported_pair, unitary_restriction)


@pytest.mark.parametrize("q,m", [(2, 3), (3, 3), (4, 3), (2, 5)])
def test_unitary_restriction(q, m):
    E = quadratic_extension(q)
    hs = hermitian_standard(m, q)
    bridge = ScalarBridge(E, m)
    V = unitary_restriction(bridge, hs)
    rng = np.random.default_rng(q)
    for _ in range(30):
        v = rng.integers(0, E.order, m)
        w = bridge.blowup_vector(v)
        assert np.array_equal(bridge.blowdown_vector(w), v)
        assert V.Q(w) == int(bridge.to_sub(hs.h(v, v)))
    if q ** (2 * m) <= 2 ** 20:
        assert classify_type(V) == "minus"


def test_transported_pair_and_basis():
    E = quadratic_extension(2)
    hs = hermitian_standard(5, 2)
    bridge = ScalarBridge(E, 5)
    V = unitary_restriction(bridge, hs)
    e1, f1 = transported_pair(bridge, hs, solve_lambda(E).value, V)
    labels = complete_standard_basis(V, [e1, f1])
    assert check_standard(V, labels)
    assert np.array_equal(labels["e1"], e1) and np.array_equal(labels["f1"], f1)


def test_trace_restriction_is_minus_type():
    E = quadratic_extension(2)
    std = minus_standard_space(2, 4)
    Vs = QuadraticSpace(E, std.upper, std.basis_labels)
    bridge = ScalarBridge(E, 4)
    V = trace_restriction(bridge, Vs)
    assert classify_type(V) == "minus"
    d = bridge.blowup_vector(Vs.vector("d'"))
    assert V.Q(d) == int(bridge.to_sub(E.rel_trace(Vs.Q(Vs.vector("d'")))))


def test_blowup_is_homomorphism():
    E = quadratic_extension(2)
    bridge = ScalarBridge(E, 3)
    rng = np.random.default_rng(3)
    gens = []
    while len(gens) < 2:
        M = rng.integers(0, 4, (3, 3))
        if E.det(M):
            gens.append(SemilinearElement(E, M, int(rng.integers(2))))
    a, b = gens
    assert bridge.blowup_element(a * b) == bridge.blowup_element(a) * bridge.blowup_element(b)


def test_bridge_requires_sub_degree():
    from omegaminus.algebra import gf

    with pytest.raises(BridgeError):
        ScalarBridge(gf(2, 2), 3)


def test_inconsistent_partial_basis():
    V = minus_standard_space(3, 2)
    with pytest.raises(BridgeError):
        complete_standard_basis(V, [V.vector("e1"), V.vector("e2")])
