"""Restriction of scalars from GF(q^2) to GF(q).

An m-dimensional GF(q^2)-space is identified with GF(q)^(2m) through the
basis {1, xi} of GF(q^2) over GF(q), xi the canonical generator: coordinate
i = a + b*xi becomes the pair (2i, 2i+1) = (a, b).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import FieldSpec, SemilinearElement, gf
from .forms import FormError, HermitianSpace, QuadraticSpace, classify_type


class BridgeError(ValueError):
    pass


@dataclass(frozen=True)
class ScalarBridge:
    ext_spec: FieldSpec
    m: int
    sub_spec: FieldSpec = field(init=False)
    xi: int = field(init=False)
    emb: np.ndarray = field(init=False, repr=False)
    split: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        E = self.ext_spec
        if E.sub_degree is None or E.e != 2 * E.sub_degree:
            raise BridgeError("bridge needs GF(q^2) with sub_degree f")
        sub = gf(E.p, E.sub_degree)
        emb = E.embedding(sub)
        xi = E.gen.value
        q = sub.order
        a = np.repeat(np.arange(q), q)
        b = np.tile(np.arange(q), q)
        combined = E.add(emb[a], E.mul(emb[b], xi))
        if np.unique(combined).size != q * q:
            raise BridgeError("{1, xi} is not a GF(q)-basis")
        split = np.zeros((E.order, 2), dtype=np.int64)
        split[combined, 0] = a
        split[combined, 1] = b
        object.__setattr__(self, "sub_spec", sub)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "emb", emb)
        object.__setattr__(self, "split", split)

    @property
    def q(self) -> int:
        return self.sub_spec.order

    def to_sub(self, a) -> np.ndarray:
        """Inverse embedding for elements that lie in GF(q)."""
        a = np.asarray(a, dtype=np.int64)
        parts = self.split[a]
        if np.any(parts[..., 1]):
            raise BridgeError("element is not in the subfield")
        return parts[..., 0]

    def blowup_vector(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        if v.shape[-1] != self.m:
            raise BridgeError("dimension mismatch")
        return self.split[v].reshape(*v.shape[:-1], 2 * self.m)

    def blowdown_vector(self, w) -> np.ndarray:
        w = np.asarray(w, dtype=np.int64)
        pairs = w.reshape(*w.shape[:-1], self.m, 2)
        E = self.ext_spec
        return E.add(self.emb[pairs[..., 0]], E.mul(self.emb[pairs[..., 1]], self.xi))

    def blowup_element(self, g: SemilinearElement) -> SemilinearElement:
        E = self.ext_spec
        if g.spec != E or g.dim != self.m:
            raise BridgeError("element does not match the bridge")
        rows = []
        for i in range(self.m):
            for t in (1, self.xi):
                scal = int(E.frob(t, g.frob))
                rows.append(self.blowup_vector(E.mul(scal, g.matrix[i])))
        frob = g.frob % self.sub_spec.e
        return SemilinearElement(self.sub_spec, np.array(rows), frob, check=False)

    def restricted_form(self, value_fn) -> np.ndarray:
        """Upper Gram matrix of the GF(q)-quadratic form v -> value_fn(v)."""
        n = 2 * self.m
        basis = np.eye(n, dtype=np.int64)
        F = self.sub_spec
        qv = [int(self.to_sub(value_fn(self.blowdown_vector(b)))) for b in basis]
        U = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            U[i, i] = qv[i]
            for j in range(i + 1, n):
                s = int(self.to_sub(value_fn(self.blowdown_vector(basis[i] + basis[j]))))
                U[i, j] = int(F.sub(F.sub(s, qv[i]), qv[j]))
        return U


def unitary_restriction(bridge: ScalarBridge, hs: HermitianSpace) -> QuadraticSpace:
    """The GF(q)-space with Q(blowup(v)) = h(v, v)."""
    if hs.spec != bridge.ext_spec or hs.dim != bridge.m:
        raise BridgeError("hermitian space does not match the bridge")
    U = bridge.restricted_form(lambda v: hs.h(v, v))
    try:
        return QuadraticSpace(bridge.sub_spec, U)
    except FormError as exc:
        raise BridgeError("restricted form is degenerate") from exc


def trace_restriction(bridge: ScalarBridge, ext_space: QuadraticSpace) -> QuadraticSpace:
    """The GF(q)-space with Q(blowup(v)) = Tr(Q#(v))."""
    if ext_space.spec != bridge.ext_spec or ext_space.dim != bridge.m:
        raise BridgeError("quadratic space does not match the bridge")
    E = bridge.ext_spec
    U = bridge.restricted_form(lambda v: E.rel_trace(ext_space.Q(v)))
    try:
        return QuadraticSpace(bridge.sub_spec, U)
    except FormError as exc:
        raise BridgeError("restricted form is degenerate") from exc


def transported_pair(bridge: ScalarBridge, hs: HermitianSpace, lam: int,
                     space: QuadraticSpace | None = None) -> tuple[np.ndarray, np.ndarray]:
    """(blowup(lam E1), blowup(F1)), checked to be a hyperbolic pair with
    Q(e1 + f1) = 1."""
    E = bridge.ext_spec
    if int(E.rel_trace(lam)) != 1:
        raise BridgeError("lambda + lambda^q must equal 1")
    space = space or unitary_restriction(bridge, hs)
    e1 = bridge.blowup_vector(E.mul(lam, hs.vector("E1")))
    f1 = bridge.blowup_vector(hs.vector("F1"))
    checks = {
        "Q(e1)": space.Q(e1) == 0,
        "Q(f1)": space.Q(f1) == 0,
        "beta(e1,f1)": space.beta(e1, f1) == 1,
        "Q(e1+f1)": space.Q(bridge.sub_spec.add(e1, f1)) == 1,
    }
    bad = [k for k, ok in checks.items() if not ok]
    if bad:
        raise BridgeError(f"transported pair fails {bad}")
    return e1, f1


# ---------------------------------------------------------------------------
# standard bases


def _span_vectors(F: FieldSpec, basis: np.ndarray, limit: int | None = None):
    """Nonzero vectors of span(basis), in coefficient enumeration order."""
    k = basis.shape[0]
    total = F.order ** k
    stop = total if limit is None else min(total, limit)
    step = 1 << 14
    for s in range(1, stop, step):
        coeffs = F.int_to_vec(np.arange(s, min(s + step, stop)), k)
        yield F.sum(F.mul(coeffs[:, :, None], basis[None, :, :]), axis=-2)


def _perp(space: QuadraticSpace, vectors) -> np.ndarray:
    F = space.spec
    if len(vectors) == 0:
        return np.eye(space.dim, dtype=np.int64)
    A = F.matmul(np.array(vectors), space.polar).T  # columns: beta(-, v_i)
    return F.nullspace(A)


def complete_standard_basis(space: QuadraticSpace, partial=()) -> dict[str, np.ndarray]:
    """Extend [e1, f1, e2, ...] to a labelled standard minus-type basis.

    The anisotropic plane gets Q(d) = 1, beta(d, d') = 1, Q(d') = zeta with
    zeta the constant of :func:`forms.minus_standard_space` over the same
    field.  Raises BridgeError if ``partial`` is inconsistent.
    """
    from .algebra import find_irreducible_mu

    F = space.spec
    n = space.dim
    if n % 2:
        raise BridgeError("standard minus bases need even dimension")
    m = n // 2
    zeta = find_irreducible_mu(F).value
    partial = [np.asarray(v, dtype=np.int64) for v in partial]
    chosen: list[np.ndarray] = []

    def take_pair(e, f):
        if space.Q(e) or space.Q(f) or space.beta(e, f) != 1:
            raise BridgeError("partial vectors are not hyperbolic pairs")
        for v in chosen:
            if space.beta(e, v) or space.beta(f, v):
                raise BridgeError("partial pairs are not orthogonal")
        chosen.extend([e, f])

    def partner(e, W):
        for w in W:
            b = space.beta(e, w)
            if b:
                w = F.mul(w, int(F.inv(b)))
                return F.sub(w, F.mul(space.Q(w), e))
        raise BridgeError("no partner found: partial vector is degenerate")

    i = 0
    while i < len(partial):
        e = partial[i]
        if i + 1 < len(partial):
            take_pair(e, partial[i + 1])
        else:
            if space.Q(e) or not np.any(e):
                raise BridgeError("lone partial vector must be singular and nonzero")
            W = _perp(space, chosen)
            for v in chosen:
                if space.beta(e, v):
                    raise BridgeError("partial vector not orthogonal to earlier pairs")
            take_pair(e, partner(e, W))
        i += 2

    while len(chosen) < 2 * (m - 1):
        W = _perp(space, chosen)
        e = None
        for chunk in _span_vectors(F, W):
            hits = np.flatnonzero(space.Q_many(chunk) == 0)
            if hits.size:
                e = chunk[hits[0]]
                break
        if e is None:
            raise BridgeError("space has smaller Witt index than minus type")
        take_pair(e, partner(e, W))

    W = _perp(space, chosen)
    if W.shape[0] != 2:
        raise BridgeError("unexpected complement dimension")
    vecs = np.concatenate(list(_span_vectors(F, W)))
    qs = space.Q_many(vecs)
    if np.any(qs == 0):
        raise BridgeError("complement is not anisotropic: form is not minus type")
    d = vecs[np.flatnonzero(qs == 1)[0]]
    betas = F.sum(F.mul(F.vecmat(vecs, space.polar), d), axis=-1)
    dprime = None
    for w, b, qw in zip(vecs, betas, qs):
        if b == 1 and qw == zeta:
            dprime = w
            break
    if dprime is None:
        raise BridgeError("no d' with beta(d, d') = 1 and Q(d') = zeta")
    labels = {}
    for k in range(m - 1):
        labels[f"e{k + 1}"] = chosen[2 * k]
        labels[f"f{k + 1}"] = chosen[2 * k + 1]
    labels["d"] = d
    labels["d'"] = dprime
    return labels


def labelled(space: QuadraticSpace, labels: dict[str, np.ndarray]) -> QuadraticSpace:
    """Copy of ``space`` carrying ``labels`` as its named basis."""
    return QuadraticSpace(space.spec, space.upper, labels, zeta=space.zeta)


def change_of_basis(labels: dict[str, np.ndarray]) -> np.ndarray:
    """Matrix whose rows are the labelled vectors in label order."""
    return np.array(list(labels.values()), dtype=np.int64)


def check_standard(space: QuadraticSpace, labels: dict[str, np.ndarray]) -> bool:
    """Gram matrix of the labelled basis equals the minus standard one."""
    from .forms import minus_standard_space
    m = space.dim // 2
    ref = minus_standard_space(m, space.spec.order)
    B = change_of_basis(labels)
    F = space.spec
    gram = F.matmul(F.matmul(B, space.polar), B.T)
    qs = space.Q_many(B)
    return bool(np.array_equal(gram, ref.polar) and np.array_equal(qs, np.diag(ref.upper)))


def restricted_type(space: QuadraticSpace) -> str:
    return classify_type(space)
