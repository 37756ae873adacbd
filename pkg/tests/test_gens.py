import numpy as np
import pytest

from omegaminus import gens as G
from omegaminus import orders
from omegaminus.algebra import quadratic_extension
from omegaminus.forms import classify_type, hermitian_standard, minus_standard_space, reflection
from omegaminus.scalars import ScalarBridge


@pytest.mark.parametrize("m,q", [(3, 2), (3, 3), (3, 4), (4, 2)])
def test_omega_generators_are_in_omega(m, q):
    space = minus_standard_space(m, q)
    h = G.omega_minus_gens(space)
    assert h.order == orders.omega_minus(2 * m, q)
    assert all(G.in_omega(space, g) for g in h.generators)


def test_gamma_o_minus_order():
    space = minus_standard_space(3, 4)
    assert G.gamma_o_minus_gens(space).order == orders.gamma_o_minus(6, 4)
    assert G.o_minus_gens(minus_standard_space(3, 2)).order == orders.o_minus(6, 2)


def test_phi_like_element():
    space = minus_standard_space(3, 4)
    lab = space.basis_labels
    phi = G.phi_like_element(space)
    assert space.is_isometry(phi) and not phi.is_linear
    assert phi.order() == 4
    assert (phi * phi) == reflection(space, lab["d"])
    for name in ("e1", "f1", "e2", "f2", "d"):
        assert np.array_equal(phi.apply(lab[name]), lab[name])
    r = reflection(space, space.spec.add(lab["e1"], lab["f1"]))
    assert phi * r == r * phi


def test_rho_fixes_hyperbolic_pair():
    for q in (2, 4):
        space = minus_standard_space(3, q)
        rho = G.rho_element(space)
        for name in ("e1", "f1"):
            v = space.vector(name)
            assert np.array_equal(rho.apply(v), v)
        assert not G.omega_minus_gens(space).contains(rho)


@pytest.mark.parametrize("m,q", [(3, 2), (4, 2), (3, 4), (4, 3)])
def test_su_gates(m, q):
    hs = hermitian_standard(m, q)
    h = G.su_gens(hs)
    assert h.order == orders.su(m, q)
    assert all(hs.is_isometry(g) for g in h.generators)
    assert all(int(hs.spec.det(g.matrix)) == 1 for g in h.generators)


def test_blown_up_su_preserves_restricted_form():
    from omegaminus.scalars import unitary_restriction

    hs = hermitian_standard(3, 2)
    bridge = ScalarBridge(quadratic_extension(2), 3)
    V = unitary_restriction(bridge, hs)
    h = G.su_gens_blownup(bridge, hs)
    assert all(V.is_isometry(g) for g in h.generators)
    assert V.is_isometry(G.frobenius_element(bridge))


def test_perm_module():
    mod = G.deleted_perm_module()
    assert classify_type(mod.space) == "minus"
    v = mod.support_vector([0, 1, 2, 3])
    assert mod.space.Q(v) == 0
    assert mod.space.Q(mod.support_vector([0, 1])) == 1
    g = mod.lift(G.parse_cycles("(1,2,3)", 12))
    assert mod.space.is_isometry(g)
    assert np.array_equal(g.apply(mod.support_vector([0, 5])), mod.support_vector([1, 5]))


def test_parse_cycles():
    perm = G.parse_cycles("(1,3)(2,4,5)", 6)
    assert perm.tolist() == [2, 3, 0, 4, 1, 5]


@pytest.mark.parametrize("name,order", [("A12", 239500800), ("M12", 95040)])
def test_sporadic_lifts(name, order):
    h = G.sporadic_gens(name)
    assert h.order == order
