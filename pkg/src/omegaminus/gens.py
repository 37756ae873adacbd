"""Generator factories for the groups used in the factorization rows.

Each factory returns a :class:`permgrp.GroupHandle` whose ``claimed_order``
comes from :mod:`orders`; ``check_order`` builds the chain and compares.  If a
generating set falls short, conjugates are added on a fixed schedule until
the order matches or the schedule runs out.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import orders
from .algebra import FieldSpec, SemilinearElement, gf
from .forms import (FormError, HermitianSpace, QuadraticSpace, dickson_invariant,
                    dickson_or_spinor, eichler, reflection)
from .permgrp import GroupHandle
from .scalars import ScalarBridge, _perp, complete_standard_basis


class GateError(RuntimeError):
    pass


def _prime_basis(F: FieldSpec) -> list[int]:
    """F_p-basis 1, x, ..., x^(e-1) of the field, as encodings."""
    return [F.p ** j for j in range(F.e)]


def standard_labels_of(space: QuadraticSpace) -> dict[str, np.ndarray]:
    if "e1" in space.basis_labels and "d'" in space.basis_labels:
        return space.basis_labels
    return complete_standard_basis(space)


def check_order(handle: GroupHandle, extra_pool=(), rounds: int = 3) -> GroupHandle:
    """Build the chain and enforce the order gate.

    On a shortfall the generating set is enlarged by conjugates g^h of
    generators by generators (then by ``extra_pool``) in a fixed order.
    """
    if handle.claimed_order is None:
        raise GateError("no claimed order to check against")
    if handle.order == handle.claimed_order:
        return handle
    current = handle
    for _ in range(rounds):
        gens = current.generators
        pool = list(gens) + list(extra_pool)
        extra = [g.conj(h) for g, h in itertools.product(gens[:8], pool[:8]) if g != h]
        current = current.extend(extra, claimed_order=handle.claimed_order, name=handle.name)
        if current.order == handle.claimed_order:
            return current
    raise GateError(f"{handle.name}: chain order {current.order} != {handle.claimed_order}")


# ---------------------------------------------------------------------------
# orthogonal groups


def omega_minus_gens(space: QuadraticSpace, labels: dict | None = None,
                     check: bool = True) -> GroupHandle:
    """Eichler maps eichler(u, c v) with u in {e_i, f_i}, v a basis of u-perp
    and c running over an F_p-basis of F_q."""
    F = space.spec
    labels = labels or standard_labels_of(space)
    gens = []
    seen = set()
    for name, u in labels.items():
        if not name.startswith(("e", "f")):
            continue
        for v in _perp(space, [u]):
            for c in _prime_basis(F):
                g = eichler(space, u, F.mul(c, v))
                if not g.is_identity() and g not in seen:
                    seen.add(g)
                    gens.append(g)
    claimed = orders.omega_minus(space.dim, F.order)
    h = GroupHandle(F, space.dim, gens, claimed_order=claimed, name="Omega")
    return check_order(h) if check else h


def semilinear_conjugate(g: SemilinearElement, B) -> SemilinearElement:
    """The map of g written in standard coordinates, moved to the coordinates
    in which the standard basis vectors are the rows of B."""
    F = g.spec
    Bel = SemilinearElement(F, B)
    return Bel.inverse() * g * Bel


def phi_like_element(space: QuadraticSpace, labels: dict | None = None) -> SemilinearElement:
    """sigma followed by a linear map moving only d', found by search.

    The result is a semilinear isometry (Q(g v) = Q(v)^p) fixing every e_i,
    f_i and d and commuting with r_{e1+f1}.  Characteristic 2, q > 2.
    """
    F = space.spec
    if F.p != 2 or F.e < 2:
        raise FormError("phi_like_element is for even q > 2")
    labels = labels or standard_labels_of(space)
    B = np.array(list(labels.values()), dtype=np.int64)
    names = list(labels)
    std = QuadraticSpace(F, _upper_of(space, B))
    n = space.dim
    i_d, i_dp = names.index("d"), names.index("d'")
    r = reflection(std, F.add(std_vec(n, names.index("e1")), std_vec(n, names.index("f1"))))
    for a, b in itertools.product(range(F.order), range(1, F.order)):
        C = F.identity(n)
        C[i_dp] = 0
        C[i_dp, i_d] = a
        C[i_dp, i_dp] = b
        g = SemilinearElement(F, C, 1, check=False)
        if std.is_isometry(g) and g * r == r * g:
            return semilinear_conjugate(g, B)
    raise FormError("no semilinear correction on <d, d'> exists")


def std_vec(n: int, i: int) -> np.ndarray:
    v = np.zeros(n, dtype=np.int64)
    v[i] = 1
    return v


def _upper_of(space: QuadraticSpace, B) -> np.ndarray:
    """Upper Gram matrix of Q in the basis given by the rows of B."""
    F = space.spec
    P = F.matmul(F.matmul(B, space.polar), B.T)
    U = np.triu(P, 1)
    U[np.diag_indices_from(U)] = space.Q_many(B)
    return U


def rho_element(space: QuadraticSpace, variant: str = "plain",
                labels: dict | None = None) -> SemilinearElement:
    """Extension element over Omega fixing e1 and f1.

    For q = 2 this is r_d, which fixes every e_i, f_i and d and sends d' to
    d + d'.  For q = 4 it is phi ("plain") or r_{e1+f1} phi ("twisted").
    """
    F = space.spec
    labels = labels or standard_labels_of(space)
    if F.order == 2:
        return reflection(space, labels["d"])
    r = reflection(space, F.add(labels["e1"], labels["f1"]))
    if F.order != 4:
        raise FormError("rho is defined for q in {2, 4}")
    phi = phi_like_element(space, labels)
    if variant == "plain":
        return phi
    if variant == "twisted":
        return r * phi
    raise ValueError(f"unknown variant {variant!r}")


def gamma_o_minus_gens(space: QuadraticSpace, labels: dict | None = None,
                       omega: GroupHandle | None = None, check: bool = True) -> GroupHandle:
    """Omega plus a reflection, plus phi when q > 2: the full group of
    semilinear isometries."""
    F = space.spec
    labels = labels or standard_labels_of(space)
    omega = omega or omega_minus_gens(space, labels, check=False)
    extra = [reflection(space, labels["d"])]
    if F.e > 1:
        extra.append(phi_like_element(space, labels))
    claimed = orders.gamma_o_minus(space.dim, F.order)
    h = omega.extend(extra, claimed_order=claimed, name="GammaO")
    return check_order(h) if check else h


def o_minus_gens(space: QuadraticSpace, labels: dict | None = None,
                 omega: GroupHandle | None = None, check: bool = True) -> GroupHandle:
    labels = labels or standard_labels_of(space)
    omega = omega or omega_minus_gens(space, labels, check=False)
    h = omega.extend([reflection(space, labels["d"])],
                     claimed_order=orders.o_minus(space.dim, space.spec.order), name="O")
    return check_order(h) if check else h


# ---------------------------------------------------------------------------
# unitary groups


def unitary_siegel(hs: HermitianSpace, u, v, c: int) -> SemilinearElement:
    """x -> x + h(x,u) v - h(x,v) u + c h(x,u) u.

    An isometry iff h(u,u) = h(u,v) = 0 and c + c^q = -h(v,v); v = 0 gives
    the unitary transvections.
    """
    F = hs.spec
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    n = hs.dim
    eye = F.identity(n)
    hu = hs.h_many(eye, np.broadcast_to(u, (n, n)))
    hv = hs.h_many(eye, np.broadcast_to(v, (n, n)))
    M = F.add(eye, F.mul(hu[:, None], v[None, :]))
    M = F.sub(M, F.mul(hv[:, None], u[None, :]))
    M = F.add(M, F.mul(F.mul(hu, c)[:, None], u[None, :]))
    return SemilinearElement(F, M, check=False)


def su_gens(hs: HermitianSpace, check: bool = True) -> GroupHandle:
    """Unitary transvections and Siegel-type elements on the standard basis.

    For each isotropic basis vector u, and each v = b w with w a basis
    vector orthogonal to u other than u (b over an F_p-basis of GF(q^2)),
    one solution c of c + c^q = -h(v, v); v = 0 contributes the
    transvections for an F_p-basis of {c : c + c^q = 0}.
    """
    F = hs.spec
    n = hs.dim
    q = hs.q
    elems = np.arange(F.order)
    tr = F.add(elems, hs.conj(elems))
    kernel = [int(c) for c in np.flatnonzero(tr == 0) if c]
    zero_trace = _span_basis(F, kernel)
    gens, seen = [], set()

    def push(g):
        if not g.is_identity() and g not in seen:
            seen.add(g)
            gens.append(g)

    basis = np.eye(n, dtype=np.int64)
    for i in range(n):
        u = basis[i]
        if hs.h(u, u):
            continue
        for c in zero_trace:
            push(unitary_siegel(hs, u, np.zeros(n, dtype=np.int64), c))
        for j in range(n):
            w = basis[j]
            if j == i or hs.h(u, w):
                continue
            for b in _prime_basis(F):
                v = F.mul(b, w)
                target = int(F.neg(hs.h(v, v)))
                sols = np.flatnonzero(tr == target)
                push(unitary_siegel(hs, u, v, int(sols[0])))
    h = GroupHandle(F, n, gens, claimed_order=orders.su(n, q), name="SU")
    return check_order(h) if check else h


def _span_basis(F: FieldSpec, values) -> list[int]:
    """A subset of ``values`` that is an F_p-basis of their span."""
    basis, span = [], {0}
    for v in values:
        if v in span:
            continue
        basis.append(v)
        new = set()
        for s in span:
            for k in range(F.p):
                new.add(int(F.add(s, F.mul(k, v))))
        span = new
    return basis


def su_gens_blownup(bridge: ScalarBridge, hs: HermitianSpace, native: GroupHandle | None = None,
                    check: bool = True) -> GroupHandle:
    """Image of SU(hs) acting on GF(q)^(2m)."""
    native = native or su_gens(hs, check=check)
    gens = [bridge.blowup_element(g) for g in native.generators]
    h = GroupHandle(bridge.sub_spec, 2 * hs.dim, gens, claimed_order=native.claimed_order,
                    name="SU_blown")
    return check_order(h) if check else h


def frobenius_element(bridge: ScalarBridge, dim: int | None = None) -> SemilinearElement:
    """Blow-up of the coordinatewise p-power map of GF(q^2)^m."""
    E = bridge.ext_spec
    m = dim or bridge.m
    psi = SemilinearElement(E, E.identity(m), 1, check=False)
    return bridge.blowup_element(psi)


# ---------------------------------------------------------------------------
# the deleted permutation module


@dataclass
class PermModule:
    """GF(2)^12 even-weight vectors modulo all-ones, with Q = wt/2 mod 2.

    Basis b_i = e_i + e_{i+1} (i = 0..9, points numbered from 0).
    """

    n: int = 12
    space: QuadraticSpace = field(init=False)

    def __post_init__(self):
        k = self.n - 2
        U = np.zeros((k, k), dtype=np.int64)
        for i in range(k):
            U[i, i] = 1
            if i + 1 < k:
                U[i, i + 1] = 1
        self.space = QuadraticSpace(gf(2), U)

    def coords(self, w) -> np.ndarray:
        """Coordinates of the class of an even-weight 0/1 vector of length n."""
        w = np.asarray(w, dtype=np.int64) % 2
        if np.any(w.sum(axis=-1) % 2):
            raise ValueError("vector must have even weight")
        w = np.where(w[..., -1:] == 1, 1 - w, w)
        return np.cumsum(w[..., : self.n - 2], axis=-1) % 2

    def representative(self, c) -> np.ndarray:
        c = np.asarray(c, dtype=np.int64)
        w = np.zeros(c.shape[:-1] + (self.n,), dtype=np.int64)
        w[..., : self.n - 2] ^= c
        w[..., 1: self.n - 1] ^= c
        return w

    def support_vector(self, points) -> np.ndarray:
        w = np.zeros(self.n, dtype=np.int64)
        w[list(points)] = 1
        return self.coords(w)

    def lift(self, perm) -> SemilinearElement:
        """Matrix of the permutation i -> perm[i] (points numbered from 0)."""
        perm = np.asarray(perm, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(self.n)):
            raise ValueError("not a permutation")
        rows = np.zeros((self.n - 2, self.n), dtype=np.int64)
        for i in range(self.n - 2):
            rows[i, perm[i]] ^= 1
            rows[i, perm[i + 1]] ^= 1
        return SemilinearElement(gf(2), self.coords(rows))


def deleted_perm_module() -> PermModule:
    return PermModule()


def parse_cycles(text: str, n: int) -> np.ndarray:
    """Permutation (0-based image array) from 1-based cycle notation."""
    perm = np.arange(n)
    body = text.replace(" ", "")
    if body in ("", "()"):
        return perm
    for cyc in body.strip("()").split(")("):
        pts = [int(t) - 1 for t in cyc.split(",")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return perm


def load_m12_generators() -> list[np.ndarray]:
    text = resources.files("omegaminus").joinpath("data/m12.txt").read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    return [parse_cycles(ln, 12) for ln in lines]


A12_GENERATORS = ("(1,2,3)", "(2,3,4,5,6,7,8,9,10,11,12)")


def sporadic_gens(name: str, module: PermModule | None = None, check: bool = True) -> GroupHandle:
    module = module or deleted_perm_module()
    if name == "A12":
        perms = [parse_cycles(c, 12) for c in A12_GENERATORS]
        claimed = orders.alternating(12)
    elif name == "M12":
        perms = load_m12_generators()
        claimed = orders.sporadic("M12")
    else:
        raise ValueError(f"no factory for {name!r}")
    gens = [module.lift(p) for p in perms]
    h = GroupHandle(gf(2), module.n - 2, gens, claimed_order=claimed, name=name)
    if check and h.order != claimed:
        raise GateError(f"{name}: chain order {h.order} != {claimed}")
    return h


def in_omega(space: QuadraticSpace, g: SemilinearElement) -> bool:
    return space.is_isometry(g) and g.is_linear and dickson_or_spinor(space, g) == 0


__all__ = [
    "GateError", "PermModule", "check_order", "deleted_perm_module", "dickson_invariant",
    "frobenius_element", "gamma_o_minus_gens", "in_omega", "load_m12_generators",
    "o_minus_gens", "omega_minus_gens", "phi_like_element", "rho_element",
    "sporadic_gens", "su_gens", "su_gens_blownup", "unitary_siegel",
]
