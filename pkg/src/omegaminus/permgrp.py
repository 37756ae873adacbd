"""Orbits and stabilizer chains for matrix groups acting on points.

A semilinear map of GF(p^e)^n is an F_p-linear map of F_p^N with N = n*e,
so every group element is held as an N x N uint8 matrix over F_p (row
convention: image digits = digits @ M mod p).  A vector is the integer whose
base-p digits are its prime coordinates, which agrees with
``FieldSpec.vec_to_int``.  Points of the other kinds are built from vectors:

* ``line``: the F_q 1-space of a nonzero vector, as its smallest member;
* ``tuple``: an ordered pair (a, b), stored as ``a + b * p**N``;
* ``set``: an unordered pair, stored like a tuple with a < b.

The chain code is a Schreier-Sims with explicit transversals: every orbit
point stores the matrix of a representative and of its inverse, so sifting a
batch of elements is a handful of batched matrix products.
"""
from __future__ import annotations

import contextlib
import functools
import math
from dataclasses import dataclass

import numpy as np

from .algebra import FieldSpec, SemilinearElement, gf, prime_matrix

DEFAULT_CAP = 2 ** 24
DENSE_INDEX_LIMIT = 2 ** 22
DENSE_SEEN_LIMIT = 2 ** 27
TRANSVERSAL_BUDGET = 3 * 2 ** 30  # bytes of representative matrices per level
KINDS = ("vec", "line", "tuple", "set")
CHUNK = 1 << 13


@dataclass
class EngineSettings:
    """Defaults picked up by handles created without an explicit cap or seed."""

    cap: int = DEFAULT_CAP
    seed: int = 0


SETTINGS = EngineSettings()


@contextlib.contextmanager
def engine_settings(cap: int | None = None, seed: int | None = None):
    old = (SETTINGS.cap, SETTINGS.seed)
    SETTINGS.cap = old[0] if cap is None else cap
    SETTINGS.seed = old[1] if seed is None else seed
    try:
        yield SETTINGS
    finally:
        SETTINGS.cap, SETTINGS.seed = old


class CapExceeded(RuntimeError):
    pass


class ChainError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# matrices over F_p


def mulmod(A, B, p: int) -> np.ndarray:
    """A @ B mod p for (batches of) small uint8 matrices."""
    C = np.matmul(np.asarray(A, dtype=np.float32), np.asarray(B, dtype=np.float32))
    C = C.astype(np.uint8)
    return C & 1 if p == 2 else C % p


def inverse_mod(M, p: int) -> np.ndarray:
    return gf(p).matinv(np.asarray(M, dtype=np.int64)).astype(np.uint8)


def is_identity_batch(G) -> np.ndarray:
    G = np.asarray(G)
    eye = np.eye(G.shape[-1], dtype=G.dtype)
    return np.all(G == eye, axis=(-2, -1))


class Ambient:
    """The prime space F_p^N underlying GF(p^e)^n and its point kinds."""

    def __init__(self, spec: FieldSpec, n: int):
        self.spec = spec
        self.n = n
        self.p = spec.p
        self.N = n * spec.e
        self.size = self.p ** self.N
        self.place = self.p ** np.arange(self.N, dtype=np.int64)
        self.identity = np.eye(self.N, dtype=np.uint8)

    def __repr__(self):
        return f"Ambient(GF({self.spec.order})^{self.n}, N={self.N})"

    def space_size(self, kind: str) -> int:
        return self.size ** 2 if kind in ("tuple", "set") else self.size

    @functools.cached_property
    def scalar_matrices(self) -> list[np.ndarray]:
        """Prime matrices of v -> c v for c in F_q^*, c != 1."""
        F = self.spec
        out = []
        for k in range(1, F.order - 1):
            c = int(F.exp_table[k])
            out.append(prime_matrix(F, F.mul(c, F.identity(self.n))))
        return out

    # -- vectors ------------------------------------------------------------------
    def digits(self, pts) -> np.ndarray:
        pts = np.asarray(pts, dtype=np.int64)
        if self.p == 2:
            return ((pts[..., None] >> np.arange(self.N)) & 1).astype(np.float32)
        return ((pts[..., None] // self.place) % self.p).astype(np.float32)

    def encode(self, D) -> np.ndarray:
        D = np.asarray(D).astype(np.int64)
        D = D & 1 if self.p == 2 else D % self.p
        return D @ self.place

    def from_vectors(self, vecs) -> np.ndarray:
        return np.asarray(self.spec.vec_to_int(np.asarray(vecs, dtype=np.int64)), dtype=np.int64)

    def to_vectors(self, pts) -> np.ndarray:
        return self.spec.int_to_vec(np.asarray(pts, dtype=np.int64), self.n)

    def _apply_vec(self, pts, M) -> np.ndarray:
        return self.encode(self.digits(pts) @ np.asarray(M, dtype=np.float32))

    def _apply_vec_each(self, pts, G) -> np.ndarray:
        D = self.digits(pts)[:, None, :]
        return self.encode(np.matmul(D, np.asarray(G, dtype=np.float32))[:, 0, :])

    def canon_line(self, pts) -> np.ndarray:
        pts = np.asarray(pts, dtype=np.int64)
        best = pts.copy()
        for S in self.scalar_matrices:
            np.minimum(best, self._apply_vec(pts, S), out=best)
        return best

    # -- points of every kind -----------------------------------------------------
    def _lift(self, kind, pts, fn):
        pts = np.asarray(pts, dtype=np.int64)
        if kind == "vec":
            return fn(pts)
        if kind == "line":
            return self.canon_line(fn(pts))
        a, b = fn(pts % self.size), fn(pts // self.size)
        if kind == "set":
            a, b = np.minimum(a, b), np.maximum(a, b)
        return a + b * self.size

    def image(self, kind: str, pts, M) -> np.ndarray:
        """Images of many points under one matrix."""
        return self._lift(kind, pts, lambda x: self._apply_vec(x, M))

    def image_each(self, kind: str, pts, G) -> np.ndarray:
        """Image of pts[i] under G[i]."""
        return self._lift(kind, pts, lambda x: self._apply_vec_each(x, G))

    def point(self, kind: str, *vectors) -> int:
        """Encode a point of ``kind`` from field vectors."""
        if kind not in KINDS:
            raise ValueError(f"unknown point kind {kind!r}")
        ints = [int(self.from_vectors(v)) for v in vectors]
        if kind in ("vec", "line"):
            if len(ints) != 1:
                raise ValueError(f"{kind} points take one vector")
            if kind == "line":
                if ints[0] == 0:
                    raise ValueError("the zero vector spans no line")
                return int(self.canon_line(np.array(ints))[0])
            return ints[0]
        if len(ints) != 2:
            raise ValueError(f"{kind} points take two vectors")
        if self.size ** 2 >= 2 ** 62:
            raise CapExceeded("pair encoding overflows 64 bits")
        a, b = ints
        if kind == "set":
            a, b = min(a, b), max(a, b)
        return a + b * self.size

    def unpack(self, kind: str, pt: int) -> list[np.ndarray]:
        if kind in ("vec", "line"):
            return [self.to_vectors(pt)]
        return [self.to_vectors(pt % self.size), self.to_vectors(pt // self.size)]


@functools.lru_cache(maxsize=None)
def ambient(spec: FieldSpec, n: int) -> Ambient:
    return Ambient(spec, n)


@dataclass(frozen=True)
class ActionPoint:
    """A vector, line, ordered pair or unordered pair of field vectors."""

    kind: str
    vectors: tuple

    @classmethod
    def of(cls, kind: str, *vectors) -> "ActionPoint":
        return cls(kind, tuple(tuple(int(x) for x in v) for v in vectors))

    def encode(self, amb: Ambient) -> int:
        return amb.point(self.kind, *[np.array(v) for v in self.vectors])


# ---------------------------------------------------------------------------
# point sets


class PointIndex:
    """Point -> position map; a dense table when the point space is small."""

    def __init__(self, space_size: int):
        self.dense = space_size <= DENSE_INDEX_LIMIT
        if self.dense:
            self.table = np.full(space_size, -1, dtype=np.int32)
        else:
            self.keys = np.empty(0, dtype=np.int64)
            self.pos = np.empty(0, dtype=np.int64)

    def add(self, pts, positions):
        pts = np.asarray(pts, dtype=np.int64)
        if self.dense:
            self.table[pts] = positions
            return
        keys = np.concatenate([self.keys, pts])
        pos = np.concatenate([self.pos, np.asarray(positions, dtype=np.int64)])
        order = np.argsort(keys, kind="stable")
        self.keys, self.pos = keys[order], pos[order]

    def lookup(self, pts) -> np.ndarray:
        pts = np.asarray(pts, dtype=np.int64)
        if self.dense:
            return self.table[pts].astype(np.int64)
        if self.keys.size == 0:
            return np.full(pts.shape, -1, dtype=np.int64)
        i = np.minimum(np.searchsorted(self.keys, pts), self.keys.size - 1)
        return np.where(self.keys[i] == pts, self.pos[i], -1)


class PointSet:
    """Membership set used by plain orbit enumeration."""

    def __init__(self, space_size: int):
        self.dense = space_size <= DENSE_SEEN_LIMIT
        if self.dense:
            self.seen = np.zeros(space_size, dtype=bool)
        else:
            self.sorted = np.empty(0, dtype=np.int64)

    def fresh(self, pts) -> np.ndarray:
        """Add pts, returning the sorted points not seen before."""
        pts = np.unique(np.asarray(pts, dtype=np.int64))
        if self.dense:
            new = pts[~self.seen[pts]]
            self.seen[new] = True
            return new
        new = pts[~np.isin(pts, self.sorted, assume_unique=True)]
        self.sorted = np.union1d(self.sorted, new)
        return new


def orbit(gens, start: int, amb: Ambient, kind: str = "vec", cap: int = DEFAULT_CAP) -> np.ndarray:
    """Sorted orbit of an encoded point under the prime matrices ``gens``.

    Breadth-first; raises CapExceeded once more than ``cap`` points are seen.
    """
    seen = PointSet(amb.space_size(kind))
    frontier = seen.fresh([start])
    parts = [frontier]
    total = 1
    while frontier.size and gens:
        # deduplicate per generator so memory tracks the orbit, not gens x orbit
        found = []
        for g in gens:
            images = [amb.image(kind, frontier[s:s + CHUNK * 8], g)
                      for s in range(0, frontier.size, CHUNK * 8)]
            found.append(seen.fresh(np.concatenate(images)))
            total += found[-1].size
            if total > cap:
                raise CapExceeded(f"orbit exceeds cap {cap}")
        frontier = np.concatenate(found)
        parts.append(frontier)
    return np.sort(np.concatenate(parts))


# ---------------------------------------------------------------------------
# stabilizer chains


class Level:
    """One base point with its basic orbit and transversal."""

    def __init__(self, amb: Ambient, kind: str, base: int, cap: int):
        if kind not in KINDS:
            raise ValueError(f"unknown point kind {kind!r}")
        self.amb = amb
        self.kind = kind
        self.base = int(base)
        self.cap = cap
        self.gens: list[np.ndarray] = []
        self.gen_invs: list[np.ndarray] = []
        self.orbit = np.array([self.base], dtype=np.int64)
        self.reps = amb.identity[None].copy()
        self.inv_reps = amb.identity[None].copy()
        self.index = PointIndex(amb.space_size(kind))
        self.index.add(self.orbit, [0])

    def __len__(self):
        return self.orbit.size

    def add_generator(self, g: np.ndarray, ginv: np.ndarray):
        self.gens.append(g)
        self.gen_invs.append(ginv)
        frontier = self._expand(np.arange(self.orbit.size), [len(self.gens) - 1])
        while frontier.size:
            frontier = self._expand(frontier, range(len(self.gens)))

    def _expand(self, src: np.ndarray, gen_ids) -> np.ndarray:
        amb, p = self.amb, self.amb.p
        start = self.orbit.size
        pts, reps, invs = [], [], []
        count = start
        for k in gen_ids:
            g, ginv = self.gens[k], self.gen_invs[k]
            for s in range(0, src.size, CHUNK):
                chunk = src[s:s + CHUNK]
                img = amb.image(self.kind, self.orbit[chunk], g)
                fresh = self.index.lookup(img) < 0
                if not fresh.any():
                    continue
                img, first = np.unique(img[fresh], return_index=True)
                parents = chunk[fresh][first]
                self.index.add(img, np.arange(count, count + img.size))
                count += img.size
                if count > self.cap:
                    raise CapExceeded(f"basic orbit exceeds cap {self.cap}")
                if 2 * count * amb.N * amb.N > TRANSVERSAL_BUDGET:
                    raise CapExceeded("transversal exceeds the memory budget")
                pts.append(img)
                reps.append(mulmod(self.reps[parents], g, p))
                invs.append(mulmod(ginv, self.inv_reps[parents], p))
        if pts:
            self.orbit = np.concatenate([self.orbit] + pts)
            self.reps = np.concatenate([self.reps] + reps)
            self.inv_reps = np.concatenate([self.inv_reps] + invs)
        return np.arange(start, self.orbit.size)

    def rep_of(self, pt: int) -> np.ndarray | None:
        i = int(self.index.lookup(np.array([pt]))[0])
        return None if i < 0 else self.reps[i]


class StabChain:
    """Base, strong generators and transversals of a matrix group."""

    def __init__(self, amb: Ambient, levels: list[Level] | None = None):
        self.amb = amb
        self.levels = levels if levels is not None else []

    @property
    def order(self) -> int:
        return math.prod(len(lv) for lv in self.levels)

    @property
    def base(self) -> list[tuple[str, int]]:
        return [(lv.kind, lv.base) for lv in self.levels]

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(lv) for lv in self.levels]

    def strong_generators(self, level: int = 0) -> list[np.ndarray]:
        if level >= len(self.levels):
            return []
        return list(self.levels[level].gens)

    def sub(self, k: int) -> "StabChain":
        """Chain of the pointwise stabilizer of the first k base points."""
        return StabChain(self.amb, self.levels[k:])

    def sift(self, G, start: int = 0) -> tuple[np.ndarray, np.ndarray]:
        """Sift a batch of matrices from level ``start``.

        Returns the residues and, per element, the level at which it left
        the chain (``len(levels)`` if it went all the way down).
        """
        G = np.array(G, dtype=np.uint8, copy=True)
        if G.ndim == 2:
            G = G[None]
        drop = np.full(G.shape[0], len(self.levels), dtype=np.int64)
        active = np.arange(G.shape[0])
        for j in range(start, len(self.levels)):
            if not active.size:
                break
            lv = self.levels[j]
            img = self.amb.image_each(lv.kind, np.full(active.size, lv.base), G[active])
            pos = lv.index.lookup(img)
            bad = pos < 0
            drop[active[bad]] = j
            active, pos = active[~bad], pos[~bad]
            if active.size:
                G[active] = mulmod(G[active], lv.inv_reps[pos], self.amb.p)
        return G, drop

    def contains(self, M) -> bool:
        R, drop = self.sift(M)
        return bool(drop[0] == len(self.levels) and is_identity_batch(R)[0])

    def summary(self) -> str:
        lines = [f"ambient p={self.amb.p} N={self.amb.N}", f"order {self.order}"]
        for i, lv in enumerate(self.levels):
            lines.append(f"level {i}: kind={lv.kind} base={lv.base} "
                         f"orbit={len(lv)} gens={len(lv.gens)}")
        return "\n".join(lines) + "\n"


def _product_replacement(gens, p: int, rng, slots: int = 10, warmup: int = 40):
    pool = [gens[i % len(gens)] for i in range(max(slots, len(gens)))]
    acc = np.eye(gens[0].shape[0], dtype=np.uint8)

    def step():
        nonlocal acc
        i, j = rng.choice(len(pool), size=2, replace=False)
        if rng.random() < 0.5:
            pool[i] = mulmod(pool[i], pool[j], p)
        else:
            pool[i] = mulmod(pool[j], pool[i], p)
        acc = mulmod(acc, pool[i], p)
        return acc

    for _ in range(warmup):
        step()
    return step


class _Builder:
    def __init__(self, amb: Ambient, base_hint, cap: int):
        self.amb = amb
        self.cap = cap
        self.chain = StabChain(amb)
        for kind, pt in base_hint:
            self.chain.levels.append(Level(amb, kind, pt, cap))

    def new_base_point(self, R: np.ndarray) -> int:
        moved = np.flatnonzero(np.any(R != self.amb.identity, axis=1))
        return int(self.amb.p ** int(moved[0]))

    def add(self, R: np.ndarray, drop: int, low: int = 0):
        """Add residue R (fixing base points < drop) to levels low..drop."""
        levels = self.chain.levels
        if drop == len(levels):
            levels.append(Level(self.amb, "vec", self.new_base_point(R), self.cap))
        Rinv = inverse_mod(R, self.amb.p)
        for k in range(low, drop + 1):
            levels[k].add_generator(R, Rinv)

    def sift_one(self, g) -> tuple[np.ndarray, int] | None:
        R, drop = self.chain.sift(g)
        d = int(drop[0])
        if d == len(self.chain.levels) and is_identity_batch(R)[0]:
            return None
        return R[0], d

    def random_phase(self, gens, claimed, rng, patience: int):
        step = _product_replacement(gens, self.amb.p, rng)
        quiet = 0
        limit = 100000
        while quiet < patience and limit:
            limit -= 1
            if claimed is not None and self.chain.order == claimed:
                return
            hit = self.sift_one(step())
            if hit is None:
                quiet += 1
            else:
                quiet = 0
                self.add(*hit)

    def schreier_residue(self, j: int):
        """First nontrivial sifted Schreier generator of level j, if any."""
        lv = self.chain.levels[j]
        p = self.amb.p
        for g in lv.gens:
            for s in range(0, lv.orbit.size, CHUNK):
                chunk = np.arange(s, min(s + CHUNK, lv.orbit.size))
                img = self.amb.image(lv.kind, lv.orbit[chunk], g)
                t = lv.index.lookup(img)
                if np.any(t < 0):
                    raise ChainError("basic orbit is not closed")
                S = mulmod(mulmod(lv.reps[chunk], g, p), lv.inv_reps[t], p)
                R, drop = self.chain.sift(S, j + 1)
                bad = (drop < len(self.chain.levels)) | ~is_identity_batch(R)
                if bad.any():
                    i = int(np.flatnonzero(bad)[0])
                    return R[i], int(drop[i])
        return None

    def verify(self, gens):
        while True:
            j = len(self.chain.levels) - 1
            while j >= 0:
                hit = self.schreier_residue(j)
                if hit is None:
                    j -= 1
                    continue
                R, drop = hit
                self.add(R, drop, low=j + 1)
                j = drop
            pending = None
            for g in gens:
                pending = self.sift_one(g)
                if pending is not None:
                    break
            if pending is None:
                return
            self.add(*pending)


def build_chain(gens, amb: Ambient, base_hint=(), claimed_order: int | None = None,
                seed: int = 0, cap: int = DEFAULT_CAP, patience: int = 30) -> StabChain:
    """Stabilizer chain of the group generated by prime matrices ``gens``.

    A seeded random Schreier-Sims phase is followed by a deterministic pass
    that sifts every Schreier generator of every level and finally every
    input generator, so the result does not depend on the random phase
    being lucky.  ``base_hint`` is a list of (kind, encoded point) used as
    the first base points, in order.
    """
    gens = [np.asarray(g, dtype=np.uint8) for g in gens]
    gens = [g for g in gens if not is_identity_batch(g)]
    b = _Builder(amb, base_hint, cap)
    if gens:
        rng = np.random.default_rng(seed)
        b.random_phase(gens, claimed_order, rng, patience)
        b.verify(gens)
    return b.chain


# ---------------------------------------------------------------------------
# groups


def element_from_prime(spec: FieldSpec, n: int, P) -> SemilinearElement:
    """Recover (matrix, frob) from the prime matrix of a semilinear map."""
    P = np.asarray(P, dtype=np.uint8)
    amb = ambient(spec, n)
    frob = 0
    if spec.e > 1:
        gen = int(spec.gen.value)
        S = prime_matrix(spec, spec.mul(gen, spec.identity(n)))
        left = mulmod(S, P, spec.p)
        for k in range(spec.e):
            Sk = prime_matrix(spec, spec.mul(int(spec.frob(gen, k)), spec.identity(n)))
            if np.array_equal(left, mulmod(P, Sk, spec.p)):
                frob = k
                break
        else:
            raise ChainError("prime matrix is not semilinear")
    rows = [(n - 1 - i) * spec.e for i in range(n)]
    A = amb.to_vectors(amb.encode(P[rows]))
    return SemilinearElement(spec, A, frob, check=False)


class GroupHandle:
    """A matrix group given by generators, with a lazily built chain."""

    def __init__(self, spec: FieldSpec, dim: int, generators=(), prime_gens=None,
                 claimed_order: int | None = None, name: str = "", seed: int | None = None,
                 cap: int | None = None):
        self.spec = spec
        self.dim = dim
        self.ambient = ambient(spec, dim)
        self._elements = list(generators) if generators else None
        if prime_gens is None:
            prime_gens = [g.prime_matrix() for g in generators]
        self.prime_gens = [np.asarray(g, dtype=np.uint8) for g in prime_gens]
        self.claimed_order = claimed_order
        self.name = name
        self.seed = SETTINGS.seed if seed is None else seed
        self.cap = SETTINGS.cap if cap is None else cap
        self._chain: StabChain | None = None

    def __repr__(self):
        label = self.name or "group"
        return f"GroupHandle({label}, GF({self.spec.order})^{self.dim}, gens={len(self.prime_gens)})"

    @property
    def ambient_dim(self) -> int:
        return self.dim

    @property
    def generators(self) -> list[SemilinearElement]:
        if self._elements is None:
            self._elements = [element_from_prime(self.spec, self.dim, P) for P in self.prime_gens]
        return self._elements

    def with_chain(self, chain: StabChain) -> "GroupHandle":
        self._chain = chain
        return self

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = build_chain(self.prime_gens, self.ambient,
                                      claimed_order=self.claimed_order,
                                      seed=self.seed, cap=self.cap)
        return self._chain

    def chain_with_base(self, base_hint) -> StabChain:
        known = self._chain.order if self._chain is not None else self.claimed_order
        return build_chain(self.prime_gens, self.ambient, base_hint=base_hint,
                           claimed_order=known, seed=self.seed, cap=self.cap)

    @property
    def order(self) -> int:
        return self.chain.order

    def order_matches(self) -> bool:
        return self.claimed_order is not None and self.order == self.claimed_order

    def contains(self, g) -> bool:
        M = g.prime_matrix() if isinstance(g, SemilinearElement) else g
        return self.chain.contains(M)

    def orbit(self, point, kind: str = "vec", cap: int | None = None) -> np.ndarray:
        if isinstance(point, ActionPoint):
            kind, point = point.kind, point.encode(self.ambient)
        return orbit(self.prime_gens, int(point), self.ambient, kind, cap or self.cap)

    def extend(self, extra, claimed_order: int | None = None, name: str = "") -> "GroupHandle":
        """The group generated by these generators and ``extra``."""
        extra = list(extra)
        mats = [g.prime_matrix() if isinstance(g, SemilinearElement) else g for g in extra]
        elems = None
        if self._elements is not None and all(isinstance(g, SemilinearElement) for g in extra):
            elems = self._elements + extra
        h = GroupHandle(self.spec, self.dim, prime_gens=self.prime_gens + mats,
                        claimed_order=claimed_order, name=name, seed=self.seed, cap=self.cap)
        h._elements = elems
        return h


def _as_point(handle: GroupHandle, point, kind: str) -> tuple[str, int]:
    if isinstance(point, ActionPoint):
        return point.kind, point.encode(handle.ambient)
    return kind, int(point)


def membership(group, g) -> bool:
    """True iff g sifts to the identity through the chain of ``group``."""
    chain = group.chain if isinstance(group, GroupHandle) else group
    M = g.prime_matrix() if isinstance(g, SemilinearElement) else g
    return chain.contains(M)


def stabilizer(handle: GroupHandle, point, kind: str = "vec") -> GroupHandle:
    """Full stabilizer of a point, read off a chain based at that point."""
    kind, pt = _as_point(handle, point, kind)
    chain = handle.chain_with_base([(kind, pt)])
    sub = chain.sub(1)
    gens = chain.strong_generators(1)
    out = GroupHandle(handle.spec, handle.dim, prime_gens=gens,
                      name=f"{handle.name}_stab", seed=handle.seed, cap=handle.cap)
    out.claimed_order = sub.order
    return out.with_chain(sub)


@dataclass
class PairStabilizer:
    pointwise: GroupHandle
    setwise: GroupHandle
    swap_exists: bool
    swap: np.ndarray | None


def setwise_pair_stabilizer(handle: GroupHandle, a, b) -> PairStabilizer:
    """Stabilizer of the unordered pair {a, b} of vectors.

    With a chain based at (a, b), an element taking a to b is h * u_b for h
    fixing a, and it takes b to a exactly when a^(u_b^-1) lies in the orbit
    of b under the stabilizer of a.
    """
    amb = handle.ambient
    pa, pb = amb.point("vec", a), amb.point("vec", b)
    if pa == pb:
        raise ValueError("pair points must differ")
    chain = handle.chain_with_base([("vec", pa), ("vec", pb)])
    point = GroupHandle(handle.spec, handle.dim, prime_gens=chain.strong_generators(2),
                        claimed_order=chain.sub(2).order, name=f"{handle.name}_pt",
                        seed=handle.seed, cap=handle.cap).with_chain(chain.sub(2))
    lv0, lv1 = chain.levels[0], chain.levels[1]
    swap = None
    ub = lv0.rep_of(pb)
    if ub is not None:
        target = int(amb.image("vec", [pa], inverse_mod(ub, amb.p))[0])
        h = lv1.rep_of(target)
        if h is not None:
            swap = mulmod(h, ub, amb.p)
    setwise = GroupHandle(handle.spec, handle.dim,
                          prime_gens=point.prime_gens + ([swap] if swap is not None else []),
                          claimed_order=point.claimed_order * (2 if swap is not None else 1),
                          name=f"{handle.name}_set", seed=handle.seed, cap=handle.cap)
    return PairStabilizer(point, setwise, swap is not None, swap)


def parity_kernel(handle: GroupHandle, parity, samples: int = 64,
                  seed: int | None = None) -> GroupHandle:
    """Kernel of a homomorphism ``parity`` (prime matrix -> 0/1).

    Generators are the Schreier generators for coset representatives {1, o}
    for an odd generator o.  The homomorphism property is checked on random
    products first, and the index is checked against chain orders.
    """
    p = handle.ambient.p
    gens = handle.prime_gens
    par = [int(parity(g)) for g in gens]
    rng = np.random.default_rng(handle.seed if seed is None else seed)
    step = _product_replacement(gens, p, rng, warmup=10) if gens else None
    for _ in range(samples if gens else 0):
        x, y = step(), gens[rng.integers(len(gens))]
        if int(parity(mulmod(x, y, p))) != int(parity(x)) ^ int(parity(y)):
            raise ChainError("parity is not multiplicative on sampled products")
    odd = [g for g, k in zip(gens, par) if k]
    if not odd:
        return handle
    o = odd[0]
    oinv = inverse_mod(o, p)
    kernel = []
    for g, k in zip(gens, par):
        if k:
            kernel += [mulmod(g, oinv, p), mulmod(o, g, p)]
        else:
            kernel += [g, mulmod(mulmod(o, g, p), oinv, p)]
    known = handle.order // 2 if handle._chain is not None or handle.claimed_order else None
    out = GroupHandle(handle.spec, handle.dim, prime_gens=kernel, claimed_order=known,
                      name=f"{handle.name}_ker", seed=handle.seed, cap=handle.cap)
    if known is not None and out.order != known:
        raise ChainError("kernel does not have index 2")
    return out
