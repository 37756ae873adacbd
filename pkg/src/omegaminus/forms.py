"""Quadratic and hermitian spaces over finite fields.

Quadratic forms are stored as upper-triangular Gram matrices ``U`` with
``Q(v) = v U v^T``; the polar form is ``beta(u, v) = u (U + U^T) v^T``.  This
keeps characteristic 2 on the same footing as odd characteristic.
"""
from __future__ import annotations

import numpy as np

from .algebra import (FieldError, FieldSpec, SemilinearElement, dump_matrix,
                      field_of_order, find_irreducible_mu, load_matrix,
                      quadratic_extension)

ENUMERATION_CAP = 2 ** 24


class FormError(ValueError):
    pass


class QuadraticSpace:
    """A nondegenerate quadratic space (F_q^n, Q) with optional named basis."""

    def __init__(self, spec: FieldSpec, upper, basis_labels: dict | None = None,
                 zeta: int | None = None):
        U = np.array(upper, dtype=np.int64)
        if U.ndim != 2 or U.shape[0] != U.shape[1]:
            raise FormError("Gram matrix must be square")
        if np.any(np.tril(U, -1)):
            raise FormError("Gram matrix must be upper triangular")
        U.setflags(write=False)
        self.spec = spec
        self.dim = U.shape[0]
        self.upper = U
        self.polar = spec.add(U, U.T)
        self.zeta = zeta
        self.basis_labels = {k: np.asarray(v, dtype=np.int64)
                             for k, v in (basis_labels or {}).items()}
        if spec.rank(self.polar) != self.dim and not self._char2_odd_dim():
            raise FormError("quadratic form is degenerate")

    def _char2_odd_dim(self) -> bool:
        # odd-dimensional forms in characteristic 2 have a 1-dimensional
        # polar radical; accept them when Q is nonzero on it
        if self.spec.p != 2 or self.dim % 2 == 0:
            return False
        rad = self.spec.nullspace(self.polar)
        return len(rad) == 1 and self.Q(rad[0]) != 0

    def __repr__(self):
        return f"QuadraticSpace(dim={self.dim}, q={self.spec.order})"

    # -- evaluation ---------------------------------------------------------
    def Q(self, v) -> int:
        v = np.asarray(v, dtype=np.int64)
        F = self.spec
        return int(F.sum(F.mul(F.vecmat(v, self.upper), v), axis=-1))

    def beta(self, u, v) -> int:
        F = self.spec
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        return int(F.sum(F.mul(F.vecmat(u, self.polar), v), axis=-1))

    def Q_many(self, vecs) -> np.ndarray:
        F = self.spec
        vecs = np.asarray(vecs, dtype=np.int64)
        return F.sum(F.mul(F.vecmat(vecs, self.upper), vecs), axis=-1)

    def Q_of_ints(self, points) -> np.ndarray:
        """Q on int-encoded vectors (see FieldSpec.vec_to_int), chunked."""
        points = np.asarray(points, dtype=np.int64)
        out = np.empty(points.shape, dtype=np.int64)
        flat = points.ravel()
        res = out.ravel()
        step = 1 << 16
        for s in range(0, flat.size, step):
            vecs = self.spec.int_to_vec(flat[s:s + step], self.dim)
            res[s:s + step] = self.Q_many(vecs)
        return out

    def vector(self, label: str) -> np.ndarray:
        return self.basis_labels[label]

    # -- isometries -------------------------------------------------------------
    def is_isometry(self, g: SemilinearElement) -> bool:
        """Q(g b_i) = Q(b_i)^sigma^k and beta likewise on all basis pairs."""
        F = self.spec
        if g.spec != F or g.dim != self.dim:
            return False
        images = g.matrix  # image of basis vector i is row i (frob fixes 0/1)
        for i in range(self.dim):
            if self.Q(images[i]) != int(F.frob(self.upper[i, i], g.frob)):
                return False
        B = F.matmul(F.matmul(images, self.polar), images.T)
        return bool(np.array_equal(B, F.frob(self.polar, g.frob)))

    def to_text(self) -> str:
        return dump_matrix(self.spec, self.upper, 0, tag="GRAM-UT")

    @classmethod
    def from_text(cls, text: str) -> "QuadraticSpace":
        spec, U, _, tag = load_matrix(text)
        if tag != "GRAM-UT":
            raise FormError(f"expected GRAM-UT block, got {tag!r}")
        return cls(spec, U)


class HermitianSpace:
    """Hermitian space over GF(q^2): h(u, v) = u H (v^q)^T."""

    def __init__(self, spec: FieldSpec, gram, basis_labels: dict | None = None):
        if spec.sub_degree is None or spec.e != 2 * spec.sub_degree:
            raise FormError("hermitian spaces live over GF(q^2) with sub_degree f")
        H = np.array(gram, dtype=np.int64)
        if not np.array_equal(H.T, spec.frob(H, spec.sub_degree)):
            raise FormError("Gram matrix is not hermitian")
        if spec.rank(H) != H.shape[0]:
            raise FormError("hermitian form is degenerate")
        H.setflags(write=False)
        self.spec = spec
        self.dim = H.shape[0]
        self.gram = H
        self.basis_labels = {k: np.asarray(v, dtype=np.int64)
                             for k, v in (basis_labels or {}).items()}

    @property
    def q(self) -> int:
        return self.spec.p ** self.spec.sub_degree

    def conj(self, a):
        return self.spec.frob(a, self.spec.sub_degree)

    def h(self, u, v) -> int:
        F = self.spec
        return int(F.sum(F.mul(F.vecmat(np.asarray(u), self.gram), self.conj(np.asarray(v))), axis=-1))

    def h_many(self, U, V) -> np.ndarray:
        F = self.spec
        return F.sum(F.mul(F.vecmat(np.asarray(U), self.gram), self.conj(np.asarray(V))), axis=-1)

    def vector(self, label: str) -> np.ndarray:
        return self.basis_labels[label]

    def is_isometry(self, g: SemilinearElement) -> bool:
        """Semilinear isometry: h(g u, g v) = h(u, v)^sigma^k on the basis."""
        F = self.spec
        A = g.matrix
        lhs = F.matmul(F.matmul(A, self.gram), self.conj(A).T)
        return bool(np.array_equal(lhs, F.frob(self.gram, g.frob)))

    def __repr__(self):
        return f"HermitianSpace(dim={self.dim}, q={self.q})"


# ---------------------------------------------------------------------------
# standard spaces


def standard_labels(m: int, minus: bool = True) -> list[str]:
    labels = []
    for i in range(1, (m - 1 if minus else m) + 1):
        labels += [f"e{i}", f"f{i}"]
    if minus:
        labels += ["d", "d'"]
    return labels


def minus_standard_space(m: int, q: int) -> QuadraticSpace:
    """2m-dimensional minus-type space with basis e1,f1,...,d,d'."""
    if m < 1:
        raise FormError("m must be positive")
    F = field_of_order(q)
    n = 2 * m
    if F.order ** n > ENUMERATION_CAP * 256:
        raise FormError("space outside desk scale")
    zeta = find_irreducible_mu(F).value
    U = np.zeros((n, n), dtype=np.int64)
    for i in range(m - 1):
        U[2 * i, 2 * i + 1] = 1
    U[n - 2, n - 2] = 1
    U[n - 2, n - 1] = 1
    U[n - 1, n - 1] = zeta
    labels = dict(zip(standard_labels(m), np.eye(n, dtype=np.int64)))
    return QuadraticSpace(F, U, labels, zeta=zeta)


def hyperbolic_space(m: int, q: int) -> QuadraticSpace:
    """2m-dimensional plus-type space: m hyperbolic pairs."""
    F = field_of_order(q)
    n = 2 * m
    U = np.zeros((n, n), dtype=np.int64)
    for i in range(m):
        U[2 * i, 2 * i + 1] = 1
    labels = dict(zip(standard_labels(m, minus=False), np.eye(n, dtype=np.int64)))
    return QuadraticSpace(F, U, labels)


def hermitian_standard(m: int, q: int) -> HermitianSpace:
    """Hermitian space with basis E1,F1,...,E_l,F_l (,D when m is odd)."""
    if m < 2:
        raise FormError("hermitian space needs m >= 2")
    F = quadratic_extension(q)
    H = np.zeros((m, m), dtype=np.int64)
    labels = []
    for i in range(m // 2):
        H[2 * i, 2 * i + 1] = 1
        H[2 * i + 1, 2 * i] = 1
        labels += [f"E{i + 1}", f"F{i + 1}"]
    if m % 2:
        H[m - 1, m - 1] = 1
        labels.append("D")
    return HermitianSpace(F, H, dict(zip(labels, np.eye(m, dtype=np.int64))))


# ---------------------------------------------------------------------------
# elements


def eval_form(space: QuadraticSpace, u, v=None) -> int:
    """Q(u), or beta(u, v) when v is given."""
    u = np.asarray(u)
    if u.shape[-1] != space.dim or (v is not None and np.asarray(v).shape[-1] != space.dim):
        raise FormError("dimension mismatch")
    return space.Q(u) if v is None else space.beta(u, v)


def reflection(space: QuadraticSpace, w) -> SemilinearElement:
    """r_w: v -> v - beta(v, w)/Q(w) w."""
    F = space.spec
    w = np.asarray(w, dtype=np.int64)
    qw = space.Q(w)
    if qw == 0:
        raise FormError("reflection in a singular vector")
    coef = F.mul(F.vecmat(w, space.polar.T), int(F.inv(qw)))  # beta(e_i, w)/Q(w)
    M = F.sub(F.identity(space.dim), F.mul(coef[:, None], w[None, :]))
    return SemilinearElement(F, M, check=False)


def eichler(space: QuadraticSpace, u, v) -> SemilinearElement:
    """x -> x + beta(x,v) u - beta(x,u) v - Q(v) beta(x,u) u."""
    F = space.spec
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if not np.any(u) or space.Q(u) != 0 or space.beta(u, v) != 0:
        raise FormError("eichler needs singular u != 0 and v in u-perp")
    bu = F.vecmat(u, space.polar.T)  # beta(e_i, u)
    bv = F.vecmat(v, space.polar.T)
    qv = space.Q(v)
    M = F.identity(space.dim)
    M = F.add(M, F.mul(bv[:, None], u[None, :]))
    M = F.sub(M, F.mul(bu[:, None], v[None, :]))
    M = F.sub(M, F.mul(F.mul(bu, qv)[:, None], u[None, :]))
    return SemilinearElement(F, M, check=False)


def spinor_class(space: QuadraticSpace, g: SemilinearElement) -> tuple[int, int]:
    """(determinant bit, spinor-norm bit) of a linear isometry, odd q.

    Uses the Wall form on W = V(g - 1): chi(x(g-1), y(g-1)) = beta(x(g-1), y).
    Then det g = (-1)^dim W and the spinor norm is (-1)^dim W disc(chi),
    which gives Q(w) for the reflection r_w.
    """
    if space.spec.p == 2:
        raise FormError("spinor norm classes are for odd characteristic")
    if not g.is_linear or not space.is_isometry(g):
        raise FormError("element is not a linear isometry")
    F = space.spec
    n = space.dim
    D = F.sub(g.matrix, F.identity(n))
    R, pivots = _row_basis(F, D)
    k = len(pivots)
    if k == 0:
        return 0, 0
    # rows of R are images y_i (g - 1) of the basis vectors y_i = e_{pivot}
    Y = np.eye(n, dtype=np.int64)[pivots]
    chi = F.matmul(F.matmul(R, space.polar), Y.T)
    disc = F.det(chi)
    if k % 2:
        disc = int(F.neg(disc))
    return k % 2, 0 if F.is_square(disc) else 1


def _row_basis(F: FieldSpec, D) -> tuple[np.ndarray, list[int]]:
    """Rows of D forming a basis of its row space, with their indices."""
    rows, picked = [], []
    for i in range(D.shape[0]):
        trial = rows + [D[i]]
        if F.rank(np.array(trial)) == len(trial):
            rows.append(D[i])
            picked.append(i)
    return np.array(rows, dtype=np.int64).reshape(len(rows), D.shape[1]), picked


def dickson_invariant(space: QuadraticSpace, g: SemilinearElement) -> int:
    F = space.spec
    M = F.sub(g.matrix, F.identity(space.dim))
    return F.rank(M) % 2


def dickson_or_spinor(space: QuadraticSpace, g: SemilinearElement) -> int:
    """0 iff the linear isometry g lies in Omega(space)."""
    if not g.is_linear or not space.is_isometry(g):
        raise FormError("element is not a linear isometry")
    if space.spec.p == 2:
        return dickson_invariant(space, g)
    det_bit, spin_bit = spinor_class(space, g)
    return 0 if det_bit == 0 and spin_bit == 0 else 1


def enumerate_value_set(space: QuadraticSpace, c: int) -> np.ndarray:
    """Sorted int encodings of all nonzero v with Q(v) = c."""
    total = space.spec.order ** space.dim
    if total > ENUMERATION_CAP:
        raise FormError(f"{total} vectors exceed the enumeration cap")
    pts = np.arange(1, total, dtype=np.int64)
    return pts[space.Q_of_ints(pts) == int(c)]


def singular_count(space: QuadraticSpace) -> int:
    return int(enumerate_value_set(space, 0).size)


def expected_singular_count(m: int, q: int, kind: str) -> int:
    if kind == "minus":
        return (q ** (m - 1) - 1) * (q ** m + 1)
    return (q ** (m - 1) + 1) * (q ** m - 1)


def classify_type(space: QuadraticSpace) -> str:
    if space.dim % 2:
        raise FormError("type is defined for even dimension")
    m = space.dim // 2
    q = space.spec.order
    count = singular_count(space)
    for kind in ("minus", "plus"):
        if count == expected_singular_count(m, q, kind):
            return kind
    raise FormError(f"{count} singular vectors match neither type")
