import numpy as np
import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from omegaminus import gens as G
from omegaminus.algebra import SemilinearElement, gf
from omegaminus.forms import dickson_invariant, minus_standard_space
from omegaminus.permgrp import (CapExceeded, ChainError, GroupHandle, ambient, build_chain,
                                element_from_prime, engine_settings, membership, orbit,
                                parity_kernel, setwise_pair_stabilizer, stabilizer)


def as_permutations(handle):
    """Action of the generators on all nonzero vectors, for sympy."""
    F, n = handle.spec, handle.dim
    pts = np.arange(1, F.order ** n)
    vecs = F.int_to_vec(pts, n)
    perms = []
    for g in handle.generators:
        img = F.vec_to_int(g.apply(vecs))
        perms.append(Permutation((img - 1).tolist()))
    return PermutationGroup(perms)


@pytest.mark.parametrize("m,q", [(3, 2), (2, 3), (2, 4)])
def test_chain_order_matches_sympy(m, q):
    space = minus_standard_space(m, q)
    h = G.o_minus_gens(space, check=False)
    assert h.order == as_permutations(h).order()


def test_orbit_matches_naive_bfs():
    space = minus_standard_space(3, 3)
    h = G.omega_minus_gens(space)
    F = space.spec
    start = space.vector("e1")
    seen = {tuple(start)}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for g in h.generators:
                w = g.apply(v)
                if tuple(w) not in seen:
                    seen.add(tuple(w))
                    nxt.append(w)
        frontier = nxt
    naive = np.sort(F.vec_to_int(np.array(sorted(seen))))
    amb = h.ambient
    assert np.array_equal(h.orbit(amb.point("vec", start)), naive)


def test_line_and_set_points():
    space = minus_standard_space(3, 4)
    h = G.omega_minus_gens(space)
    amb = h.ambient
    e1 = space.vector("e1")
    lines = h.orbit(amb.point("line", e1), "line")
    vecs = h.orbit(amb.point("vec", e1), "vec")
    assert vecs.size == 3 * lines.size
    pair = amb.point("set", e1, space.vector("f1"))
    assert amb.point("set", space.vector("f1"), e1) == pair


def test_membership_and_element_recovery():
    space = minus_standard_space(3, 4)
    h = G.gamma_o_minus_gens(space)
    rng = np.random.default_rng(5)
    g = SemilinearElement.identity(space.spec, 6)
    for i in rng.integers(len(h.generators), size=12):
        g = g * h.generators[i]
    assert membership(h, g)
    back = element_from_prime(space.spec, 6, g.prime_matrix())
    assert back == g
    omega = G.omega_minus_gens(space)
    assert not membership(omega, G.phi_like_element(space))
    # a non-isometry is never a member
    M = np.eye(6, dtype=np.int64)
    M[0, 0] = 2
    assert not membership(h, SemilinearElement(space.spec, M))


def test_stabilizer_orbit_stabilizer():
    space = minus_standard_space(4, 2)
    h = G.omega_minus_gens(space)
    pt = h.ambient.point("vec", space.vector("d"))
    st = stabilizer(h, pt)
    assert st.order * h.orbit(pt).size == h.order


def test_setwise_pair_stabilizer_and_parity_kernel():
    space = minus_standard_space(3, 2)
    e1, f1 = space.vector("e1"), space.vector("f1")
    o = G.o_minus_gens(space)
    ps = setwise_pair_stabilizer(o, e1, f1)
    assert ps.swap_exists
    amb = o.ambient
    img = amb.image("vec", [amb.point("vec", e1)], ps.swap)[0]
    assert img == amb.point("vec", f1)
    assert ps.setwise.order == 2 * ps.pointwise.order
    # the Dickson invariant cuts out the Omega part of O_{e1,f1}
    def parity(P):
        return dickson_invariant(space, element_from_prime(space.spec, 6, P))

    ker = parity_kernel(ps.pointwise, parity)
    assert ker.order * 2 == ps.pointwise.order


def test_parity_kernel_rejects_non_homomorphism():
    space = minus_standard_space(3, 2)
    o = G.o_minus_gens(space)
    with pytest.raises(ChainError):
        parity_kernel(o, lambda P: int(P[0, 0]) % 2 ^ int(P[1, 1]) % 2, samples=200)


def test_orbit_cap():
    space = minus_standard_space(4, 2)
    h = G.omega_minus_gens(space)
    with pytest.raises(CapExceeded):
        orbit(h.prime_gens, h.ambient.point("vec", space.vector("d")), h.ambient, "vec", cap=10)


def test_claimed_order_too_large_is_not_trusted():
    space = minus_standard_space(3, 2)
    h = G.omega_minus_gens(space)
    chain = build_chain(h.prime_gens, h.ambient, claimed_order=2 * h.order, seed=3)
    assert chain.order == h.order


def test_engine_settings_reach_new_handles():
    with engine_settings(cap=123, seed=9):
        h = GroupHandle(gf(2), 3, prime_gens=[np.eye(3, dtype=np.uint8)])
    assert (h.cap, h.seed) == (123, 9)
    assert GroupHandle(gf(2), 3, prime_gens=[]).seed == 0


def test_seed_does_not_change_orders():
    space = minus_standard_space(3, 3)
    h = G.omega_minus_gens(space, check=False)
    orders = {build_chain(h.prime_gens, h.ambient, seed=s).order for s in range(3)}
    assert orders == {h.claimed_order}
