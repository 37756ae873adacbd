"""Exact arithmetic in GF(p^e), matrices over it, and semilinear maps.

Field elements are encoded as integers ``sum(c_j * p**j)`` where ``c_j`` are
the coordinates in the polynomial basis ``1, x, ..., x^(e-1)``.  Every array
operation below works on such encodings, so a matrix over GF(p^e) is just an
integer numpy array.

Moduli are Conway polynomials, which makes the embeddings
GF(p^d) -> GF(p^e) (d | e) compatible: the image of the canonical generator of
GF(p^d) is ``x**((p^e - 1) // (p^d - 1))``.
"""
from __future__ import annotations

import functools
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_DEGREE = 8
PRIMES = (2, 3)

# Conway polynomials, coefficients low degree first, monic.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
}


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient tuples low degree first

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a = _poly_trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= e/2."""
    e = len(modulus) - 1
    if e < 1 or modulus[-1] % p == 0:
        return False
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for tail in np.ndindex(*([p] * d)):
            divisor = list(tail) + [1]
            if not _poly_mod(modulus, divisor, p):
                return False
    return True


# ---------------------------------------------------------------------------


class FieldSpec:
    """GF(p^e) with lookup tables; obtain instances through :func:`gf`."""

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None,
                 sub_degree: int | None = None):
        if p not in PRIMES:
            raise FieldError(f"characteristic {p} outside desk scale {PRIMES}")
        if not 1 <= e <= MAX_DEGREE:
            raise FieldError(f"extension degree {e} outside 1..{MAX_DEGREE}")
        if sub_degree is not None and e % sub_degree:
            raise FieldError(f"sub_degree {sub_degree} does not divide {e}")
        modulus = tuple(CONWAY[(p, e)] if modulus is None else modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree e")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.modulus = modulus
        self.sub_degree = sub_degree
        self.order = p ** e
        self._build_tables()

    def __repr__(self):
        tag = f", sub_degree={self.sub_degree}" if self.sub_degree else ""
        return f"FieldSpec(p={self.p}, e={self.e}{tag})"

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    # -- table construction -------------------------------------------------
    def _build_tables(self):
        p, e, q = self.p, self.e, self.order
        self.place = p ** np.arange(e, dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        self.digits = (idx[:, None] // self.place[None, :]) % p
        self.neg_table = self.encode((-self.digits) % p)

        # primitive element: x itself for Conway moduli, otherwise the first
        # element whose powers exhaust the multiplicative group
        exp = None
        order = [p] + [g for g in range(2, q) if g != p] if e > 1 else list(range(1, q))
        for g in order:
            gd = list(self.digits[g])
            powers = [1]
            cur = [1] + [0] * (e - 1)
            for _ in range(q - 2):
                cur = self._poly_mulmod(cur, gd)
                powers.append(int(sum(c * p ** i for i, c in enumerate(cur))))
            if len(set(powers)) == q - 1:
                exp = powers
                self.primitive = g
                break
        self.exp_table = np.array(exp + exp, dtype=np.int64)
        self.log_table = np.zeros(q, dtype=np.int64)
        self.log_table[np.array(exp)] = np.arange(q - 1)
        self.frob_table = self.pow_array(idx, p)

    def _poly_mulmod(self, a, b):
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        out = _poly_mod(prod, self.modulus, p)
        return out + [0] * (e - len(out))

    # -- encodings ----------------------------------------------------------
    def encode(self, digits) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) * self.place).sum(axis=-1)

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldError("element belongs to another field")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) != self.e or any(not 0 <= c < self.p for c in value):
                raise FieldError(f"bad coordinates {value}")
            value = int(sum(c * self.p ** i for i, c in enumerate(value)))
        value = int(value)
        if not 0 <= value < self.order:
            raise FieldError(f"{value} is not an encoded element of GF({self.order})")
        return FieldElement(self, value)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.order)]

    @property
    def gen(self) -> "FieldElement":
        """Canonical generator x (the class of the indeterminate)."""
        if self.e == 1:
            return FieldElement(self, self.primitive)
        return FieldElement(self, self.p)

    # -- vectorised arithmetic on encoded arrays -----------------------------
    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        return self.encode((self.digits[a] + self.digits[b]) % self.p)

    def neg(self, a):
        return self.neg_table[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp_table[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero field element")
        return self.exp_table[(self.order - 1 - self.log_table[a]) % (self.order - 1)]

    def pow_array(self, a, k: int):
        a = np.asarray(a, dtype=np.int64)
        if k == 0:
            return np.ones_like(a)
        if k < 0:
            return self.pow_array(self.inv(a), -k)
        out = self.exp_table[(self.log_table[a] * k) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def frob(self, a, k: int = 1):
        """Apply x -> x^(p^k) entrywise."""
        a = np.asarray(a, dtype=np.int64)
        for _ in range(k % self.e):
            a = self.frob_table[a]
        return a

    def sum(self, a, axis):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if axis < 0:
            axis -= 1  # digits add a trailing axis
        return self.encode(self.digits[a].sum(axis=axis) % self.p)

    def is_square(self, a) -> bool:
        a = int(a)
        if a == 0:
            return True
        if self.p == 2:
            return True
        return int(self.log_table[a]) % 2 == 0

    def sqrt(self, a) -> int:
        a = int(a)
        if a == 0:
            return 0
        if self.p == 2:
            return int(self.pow_array(a, self.order // 2))
        lg = int(self.log_table[a])
        if lg % 2:
            raise FieldError("not a square")
        return int(self.exp_table[lg // 2])

    # -- subfields ------------------------------------------------------------
    def subfield(self, d: int | None = None) -> "FieldSpec":
        d = self.sub_degree if d is None else d
        if d is None:
            raise FieldError("no distinguished subfield")
        if self.e % d:
            raise FieldError(f"{d} does not divide {self.e}")
        return gf(self.p, d)

    def embedding(self, small: "FieldSpec") -> np.ndarray:
        """Table mapping encoded elements of ``small`` into this field."""
        return _embedding(small, self)

    def rel_trace(self, a):
        """a + a^q + ... over the distinguished subfield (degree e/f)."""
        if self.sub_degree is None:
            raise FieldError("relative trace needs a sub_degree")
        a = np.asarray(a, dtype=np.int64)
        out = a
        cur = a
        for _ in range(self.e // self.sub_degree - 1):
            cur = self.frob(cur, self.sub_degree)
            out = self.add(out, cur)
        return out

    # -- matrices -------------------------------------------------------------
    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        prod = self.mul(A[..., :, :, None], B[..., None, :, :])
        return self.sum(prod, axis=-2)

    def vecmat(self, v, A):
        v = np.asarray(v, dtype=np.int64)
        A = np.asarray(A, dtype=np.int64)
        return self.sum(self.mul(v[..., :, None], A), axis=-2)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def row_reduce(self, A):
        """Return (echelon form, pivot columns, determinant) of a copy of A."""
        M = np.array(A, dtype=np.int64, copy=True)
        rows, cols = M.shape
        pivots = []
        det = 1
        r = 0
        for c in range(cols):
            nz = [i for i in range(r, rows) if M[i, c] != 0]
            if not nz:
                det = 0
                continue
            i = nz[0]
            if i != r:
                M[[r, i]] = M[[i, r]]
                det = int(self.neg(det))
            piv = int(M[r, c])
            det = int(self.mul(det, piv))
            M[r] = self.mul(M[r], int(self.inv(piv)))
            for i2 in range(rows):
                if i2 != r and M[i2, c] != 0:
                    M[i2] = self.sub(M[i2], self.mul(int(M[i2, c]), M[r]))
            pivots.append(c)
            r += 1
            if r == rows:
                break
        if len(pivots) < min(rows, cols):
            det = 0
        return M, pivots, det

    def rank(self, A) -> int:
        return len(self.row_reduce(A)[1])

    def det(self, A) -> int:
        A = np.asarray(A)
        if A.shape[0] != A.shape[1]:
            raise FieldError("determinant of a non-square matrix")
        return int(self.row_reduce(A)[2])

    def matinv(self, A) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        n = A.shape[0]
        aug = np.concatenate([A, self.identity(n)], axis=1)
        R, pivots, _ = self.row_reduce(aug)
        if pivots[:n] != list(range(n)):
            raise FieldError("matrix is singular")
        return R[:, n:]

    def nullspace(self, A) -> np.ndarray:
        """Basis (rows) of {v : v @ A = 0}."""
        At = np.asarray(A, dtype=np.int64).T
        R, pivots, _ = self.row_reduce(At)
        n = At.shape[1]
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for fcol in free:
            v = np.zeros(n, dtype=np.int64)
            v[fcol] = 1
            for r, pc in enumerate(pivots):
                v[pc] = int(self.neg(R[r, fcol]))
            basis.append(v)
        return np.array(basis, dtype=np.int64).reshape(len(basis), n)

    # -- vectors as integers ----------------------------------------------------
    def vec_to_int(self, v) -> np.ndarray:
        """Big-endian packing: the first coordinate is most significant."""
        v = np.asarray(v, dtype=np.int64)
        n = v.shape[-1]
        w = self.order ** np.arange(n - 1, -1, -1, dtype=np.int64)
        return (v * w).sum(axis=-1)

    def int_to_vec(self, x, n: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        w = self.order ** np.arange(n - 1, -1, -1, dtype=np.int64)
        return (x[..., None] // w) % self.order


@functools.lru_cache(maxsize=None)
def gf(p: int, e: int = 1, sub_degree: int | None = None) -> FieldSpec:
    """Cached Conway-modulus field GF(p^e)."""
    return FieldSpec(p, e, sub_degree=sub_degree)


def field_of_order(q: int, sub_degree: int | None = None) -> FieldSpec:
    for p in PRIMES:
        e = 0
        n = q
        while n % p == 0:
            n //= p
            e += 1
        if n == 1 and e > 0:
            return gf(p, e, sub_degree)
    raise FieldError(f"{q} is not a desk-scale prime power")


def quadratic_extension(q: int) -> FieldSpec:
    """GF(q^2) with the subfield GF(q) marked."""
    base = field_of_order(q)
    return gf(base.p, 2 * base.e, base.e)


@functools.lru_cache(maxsize=None)
def _embedding(small: FieldSpec, big: FieldSpec) -> np.ndarray:
    if small.p != big.p or big.e % small.e:
        raise FieldError(f"GF({small.order}) does not embed in GF({big.order})")
    if small.e == 1:
        return np.arange(small.order, dtype=np.int64)
    # canonical generator of the small field, as an element of the big one
    image = big.pow_array(big.p, (big.order - 1) // (small.order - 1))
    powers = [1]
    for _ in range(small.e - 1):
        powers.append(int(big.mul(powers[-1], image)))
    table = np.zeros(small.order, dtype=np.int64)
    for a in range(small.order):
        acc = 0
        for j, c in enumerate(small.digits[a]):
            for _ in range(int(c)):
                acc = int(big.add(acc, powers[j]))
        table[a] = acc
    # the map must be a ring homomorphism; Conway moduli guarantee it
    gx = int(table[small.p])
    if int(table[int(small.exp_table[1])]) == 0 or gx == 0:
        raise FieldError("embedding failed")
    return table


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.spec.digits[self.value])

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldError("mismatched FieldSpec")
            return other.value
        if isinstance(other, (int, np.integer)):
            # integers act through the prime field
            return int(other) % self.spec.p
        return NotImplemented

    def _wrap(self, v) -> "FieldElement":
        return FieldElement(self.spec, int(v))

    def __add__(self, other):
        o = self._other(other)
        return self._wrap(self.spec.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.spec.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.spec.sub(self._other(other), self.value))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __mul__(self, other):
        return self._wrap(self.spec.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return self._wrap(self.spec.inv(self.value))

    def __truediv__(self, other):
        return self * self._wrap(self._other(other)).inverse()

    def __pow__(self, k: int):
        return self._wrap(self.spec.pow_array(self.value, k))

    def frobenius(self, k: int = 1) -> "FieldElement":
        return self._wrap(self.spec.frob(self.value, k))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.spec.order})[{self.value}]"


def field_arith(a: FieldElement, b: FieldElement | None, op: str, k: int = 0) -> FieldElement:
    """Dispatch helper: op in {'add', 'mul', 'inv', 'pow'}."""
    if b is not None and b.spec != a.spec:
        raise FieldError("mismatched FieldSpec")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** k
    raise ValueError(f"unknown op {op!r}")


def frobenius(a: FieldElement, k: int) -> FieldElement:
    return a.frobenius(k)


def rel_trace(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, int(a.spec.rel_trace(a.value)))


def solve_lambda(spec: FieldSpec) -> FieldElement:
    """First element (in encoding order) with a + a^q = 1."""
    if spec.sub_degree is None or spec.e != 2 * spec.sub_degree:
        raise FieldError("solve_lambda needs GF(q^2) with sub_degree f")
    tr = spec.rel_trace(np.arange(spec.order))
    return spec.element(int(np.flatnonzero(tr == 1)[0]))


def artin_schreier_free(spec: FieldSpec) -> np.ndarray:
    """Boolean mask of c such that x^2 + x + c has no root in the field."""
    t = np.arange(spec.order)
    values = spec.neg(spec.add(spec.mul(t, t), t))
    mask = np.ones(spec.order, dtype=bool)
    mask[values] = False
    return mask


def find_irreducible_mu(spec: FieldSpec) -> FieldElement:
    """First c such that x^2 + x + c is irreducible over ``spec``."""
    return spec.element(int(np.flatnonzero(artin_schreier_free(spec))[0]))


# ---------------------------------------------------------------------------
# semilinear maps


class SemilinearElement:
    """The map v -> sigma^frob(v) @ matrix, sigma the p-power Frobenius.

    ``a * b`` means "apply a, then b".
    """

    __slots__ = ("spec", "matrix", "frob", "_prime")

    def __init__(self, spec: FieldSpec, matrix, frob: int = 0, check: bool = True):
        M = np.array(matrix, dtype=np.int64)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise FieldError("semilinear matrix must be square")
        if check and spec.det(M) == 0:
            raise FieldError("semilinear matrix is singular")
        M.setflags(write=False)
        self.spec = spec
        self.matrix = M
        self.frob = frob % spec.e
        self._prime = None

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "SemilinearElement":
        return cls(spec, spec.identity(n), 0, check=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_linear(self) -> bool:
        return self.frob == 0

    def _check(self, other):
        if other.spec != self.spec or other.dim != self.dim:
            raise FieldError("incompatible semilinear elements")

    def __mul__(self, other: "SemilinearElement") -> "SemilinearElement":
        self._check(other)
        A = self.spec.frob(self.matrix, other.frob)
        return SemilinearElement(self.spec, self.spec.matmul(A, other.matrix),
                                 self.frob + other.frob, check=False)

    def inverse(self) -> "SemilinearElement":
        k = (-self.frob) % self.spec.e
        B = self.spec.matinv(self.spec.frob(self.matrix, k))
        return SemilinearElement(self.spec, B, k, check=False)

    def __pow__(self, n: int) -> "SemilinearElement":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = SemilinearElement.identity(self.spec, self.dim)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def apply(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        return self.spec.vecmat(self.spec.frob(v, self.frob), self.matrix)

    def __eq__(self, other):
        return (isinstance(other, SemilinearElement) and self.spec == other.spec
                and self.frob == other.frob
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash((self.frob, self.matrix.tobytes()))

    def is_identity(self) -> bool:
        return self.frob == 0 and np.array_equal(self.matrix, self.spec.identity(self.dim))

    def order(self, limit: int = 10 ** 6) -> int:
        g = self
        for k in range(1, limit + 1):
            if g.is_identity():
                return k
            g = g * self
        raise RuntimeError("element order exceeds limit")

    def conj(self, other: "SemilinearElement") -> "SemilinearElement":
        """other^-1 * self * other."""
        return other.inverse() * self * other

    def prime_matrix(self) -> np.ndarray:
        """The F_p-linear matrix of this map on F_p^(n*e) (uint8, row convention)."""
        if self._prime is None:
            self._prime = prime_matrix(self.spec, self.matrix, self.frob)
        return self._prime

    def __repr__(self):
        return f"SemilinearElement(GF({self.spec.order}), dim={self.dim}, frob={self.frob})"


def semilinear(a: SemilinearElement, b=None, op: str = "compose"):
    if op == "compose":
        return a * b
    if op == "inverse":
        return a.inverse()
    if op == "apply":
        return a.apply(b)
    raise ValueError(f"unknown op {op!r}")


def prime_matrix(spec: FieldSpec, A, frob: int = 0) -> np.ndarray:
    """F_p matrix of v -> sigma^frob(v) @ A on prime coordinates.

    Prime coordinates are base-p digits of :meth:`FieldSpec.vec_to_int`,
    least significant first: coordinate i, digit j sits at position
    (n-1-i)*e + j.  Image digits are ``digits @ P mod p``.
    """
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    e = spec.e
    N = n * e
    P = np.zeros((N, N), dtype=np.uint8)
    for i in range(n):
        for j in range(e):
            basis = spec.frob(spec.p ** j, frob)
            row_vals = spec.mul(basis, A[i])
            digits = spec.digits[row_vals]  # n x e, low digit first
            row = _prime_position(n, e, i, j)
            for l in range(n):
                for jj in range(e):
                    P[row, _prime_position(n, e, l, jj)] = digits[l, jj]
    return P


def _prime_position(n: int, e: int, i: int, j: int) -> int:
    return (n - 1 - i) * e + j


def prime_vector_map(spec: FieldSpec, n: int) -> tuple[int, int]:
    """(p, N) describing the prime space F_p^N underlying spec^n."""
    return spec.p, n * spec.e


# ---------------------------------------------------------------------------
# matrix exchange text format


def dump_matrix(spec: FieldSpec, A, frob: int = 0, tag: str | None = None) -> str:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    out = io.StringIO()
    if tag:
        out.write(f"{tag}\n")
    out.write(f"{spec.p} {spec.e} {n} {frob}\n")
    for row in A:
        out.write(" ".join(",".join(str(int(c)) for c in spec.digits[x]) for x in row))
        out.write("\n")
    return out.getvalue()


def load_matrix(text: str) -> tuple[FieldSpec, np.ndarray, int, str | None]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    tag = None
    if not lines[0].split()[0].isdigit():
        tag = lines.pop(0).strip()
    p, e, n, frob = (int(t) for t in lines[0].split())
    spec = gf(p, e)
    if len(lines) != n + 1:
        raise FieldError(f"expected {n} matrix rows, got {len(lines) - 1}")
    A = np.zeros((n, n), dtype=np.int64)
    for i, line in enumerate(lines[1:]):
        toks = line.split()
        if len(toks) != n:
            raise FieldError(f"row {i} has {len(toks)} entries")
        for j, tok in enumerate(toks):
            coeffs = [int(c) for c in tok.split(",")]
            A[i, j] = spec.element(coeffs).value
    return spec, A, frob, tag


def dump_element(g: SemilinearElement) -> str:
    return dump_matrix(g.spec, g.matrix, g.frob)


def load_element(text: str) -> SemilinearElement:
    spec, A, frob, _ = load_matrix(text)
    return SemilinearElement(spec, A, frob)


def vectors_to_text(spec: FieldSpec, vectors: Iterable) -> str:
    """One vector per line, coordinates as comma lists, lexicographically sorted."""
    vecs = sorted(tuple(int(x) for x in v) for v in vectors)
    lines = [" ".join(",".join(str(int(c)) for c in spec.digits[x]) for x in v) for v in vecs]
    return "\n".join(lines) + ("\n" if lines else "")
