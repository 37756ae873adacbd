"""Brute-force factorization checks on small permutation groups.

Permutations are tuples of images on 0..n-1, and ``mul(a, b)`` applies a
first.  Groups are explicit frozensets of elements, so every check here is
an exact enumeration.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

MAX_ELEMENTS = 10 ** 5
MAX_PRODUCTS = 10 ** 8


class FactorCapError(RuntimeError):
    pass


def mul(a: tuple, b: tuple) -> tuple:
    return tuple(b[i] for i in a)


def inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def conj(a: tuple, x: tuple) -> tuple:
    """x^-1 a x."""
    return mul(mul(inv(x), a), x)


def sign(a: tuple) -> int:
    seen, parity = set(), 0
    for i in range(len(a)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = a[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def from_cycles(n: int, *cycles) -> tuple:
    perm = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
    return tuple(perm)


@dataclass(frozen=True)
class SmallGroup:
    """A permutation group stored as its full element set."""

    degree: int
    elements: frozenset = field(repr=False)

    def __post_init__(self):
        if len(self.elements) > MAX_ELEMENTS:
            raise FactorCapError("group exceeds the element cap")
        e = self.identity
        if e not in self.elements:
            raise ValueError("element set lacks the identity")
        for a in self.elements:
            if inv(a) not in self.elements:
                raise ValueError("element set is not closed under inverses")
        # closure is checked on generators: products with a small generating
        # subset reach everything iff the set is closed
        gens = _small_generating_set(self.elements, self.degree)
        for a in self.elements:
            for g in gens:
                if mul(a, g) not in self.elements:
                    raise ValueError("element set is not closed under multiplication")

    @classmethod
    def generated(cls, degree: int, gens) -> "SmallGroup":
        return cls(degree, closure(degree, gens))

    @property
    def identity(self) -> tuple:
        return tuple(range(self.degree))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def conjugate(self, x: tuple) -> "SmallGroup":
        return SmallGroup(self.degree, frozenset(conj(a, x) for a in self.elements))

    def intersection(self, other: "SmallGroup") -> "SmallGroup":
        return SmallGroup(self.degree, self.elements & other.elements)

    def join(self, other: "SmallGroup") -> "SmallGroup":
        gens = (_small_generating_set(self.elements, self.degree)
                + _small_generating_set(other.elements, self.degree))
        return SmallGroup.generated(self.degree, gens)

    def is_subgroup_of(self, other: "SmallGroup") -> bool:
        return self.elements <= other.elements

    def is_normal_in(self, other: "SmallGroup") -> bool:
        gens = _small_generating_set(other.elements, self.degree)
        return all(conj(a, g) in self.elements for a in self.elements for g in gens)

    def normal_closure_in(self, other: "SmallGroup") -> "SmallGroup":
        gens = _small_generating_set(other.elements, self.degree)
        cur = self
        while True:
            extra = [conj(a, g) for a in _small_generating_set(cur.elements, self.degree)
                     for g in gens]
            if all(x in cur.elements for x in extra):
                return cur
            cur = SmallGroup.generated(self.degree, list(_small_generating_set(
                cur.elements, self.degree)) + extra)


def closure(degree: int, gens) -> frozenset:
    """Element set of the group generated by ``gens``."""
    e = tuple(range(degree))
    gens = [tuple(g) for g in gens]
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        if len(seen) > MAX_ELEMENTS:
            raise FactorCapError("generated group exceeds the element cap")
        frontier = nxt
    return frozenset(seen)


def _small_generating_set(elements, degree: int) -> list[tuple]:
    """A generating set picked greedily in sorted order."""
    gens: list[tuple] = []
    span = {tuple(range(degree))}
    for a in sorted(elements):
        if a in span:
            continue
        gens.append(a)
        span = closure(degree, gens)
        if len(span) >= len(elements):
            break
    return gens


def product_set(H: SmallGroup, K: SmallGroup) -> frozenset:
    if H.order * K.order > MAX_PRODUCTS:
        raise FactorCapError("product enumeration exceeds the cap")
    return frozenset(mul(h, k) for h in H.elements for k in K.elements)


def is_factorization(G: SmallGroup, H: SmallGroup, K: SmallGroup) -> bool:
    """True iff the product set HK is all of G."""
    if not (H.is_subgroup_of(G) and K.is_subgroup_of(G)):
        raise ValueError("H and K must be subgroups of G")
    return len(product_set(H, K)) == G.order


def is_factorization_by_count(G: SmallGroup, H: SmallGroup, K: SmallGroup) -> bool:
    return H.order * K.order == G.order * H.intersection(K).order


def contains_product(H: SmallGroup, K: SmallGroup, N: SmallGroup) -> bool:
    """HK contains every element of N."""
    return N.elements <= product_set(H, K)


def cosets(G: SmallGroup, N: SmallGroup) -> dict:
    """Element -> canonical representative of its coset Na."""
    rep = {}
    for a in G.elements:
        if a in rep:
            continue
        coset = [mul(n, a) for n in N.elements]
        r = min(coset)
        for c in coset:
            rep[c] = r
    return rep


def quotient_reduction_check(G: SmallGroup, H: SmallGroup, K: SmallGroup,
                             N: SmallGroup) -> bool:
    """Both sides of: G = HK iff (HK contains N and G/N = (HN/N)(KN/N))."""
    if not N.is_normal_in(G):
        raise ValueError("N must be normal in G")
    left = is_factorization(G, H, K)
    rep = cosets(G, N)
    hq = {rep[h] for h in H.elements}
    kq = {rep[k] for k in K.elements}
    quotient = {rep[mul(a, b)] for a in hq for b in kq}
    right = contains_product(H, K, N) and len(quotient) == len(set(rep.values()))
    return left == right


def is_factor_pair(L: SmallGroup, H: SmallGroup, K: SmallGroup) -> bool:
    return contains_product(H, K, L)


def conjugate_pair_checks(L: SmallGroup, H: SmallGroup, K: SmallGroup, alpha: tuple,
                          x: tuple, y: tuple, G: SmallGroup | None = None) -> bool:
    """Conjugated factor pairs stay factor pairs.

    With ``alpha`` in the ambient normalizer of L and x, y in L, (H^alpha,
    K^alpha) and (H^x, K^y) are factor pairs whenever (H, K) is.  If G is
    given and G = HK, then also G = H^x K^y with |H^x n K^y| = |H n K| for
    x, y in G.
    """
    if not is_factor_pair(L, H, K):
        raise ValueError("(H, K) is not a factor pair of L")
    ok = is_factor_pair(L, H.conjugate(alpha), K.conjugate(alpha))
    Hx, Ky = H.conjugate(x), K.conjugate(y)
    ok = ok and is_factor_pair(L, Hx, Ky)
    if G is not None and is_factorization(G, H, K):
        ok = ok and is_factorization(G, Hx, Ky)
        ok = ok and Hx.intersection(Ky).order == H.intersection(K).order
    return ok


def mixed_product_identity(G: SmallGroup, H: SmallGroup, K: SmallGroup,
                           L: SmallGroup) -> bool:
    """HL n KL = (H n KL)(K n HL) for G = HK and L normal in G."""
    if not is_factorization(G, H, K):
        raise ValueError("G = HK does not hold")
    if not L.is_normal_in(G):
        raise ValueError("L must be normal in G")
    HL = frozenset(product_set(H, L))
    KL = frozenset(product_set(K, L))
    left = HL & KL
    A = SmallGroup(G.degree, H.elements & KL)
    B = SmallGroup(G.degree, K.elements & HL)
    return left == product_set(A, B)


# ---------------------------------------------------------------------------
# standard small groups and random corpora


def symmetric(n: int) -> SmallGroup:
    return SmallGroup(n, frozenset(itertools.permutations(range(n))))


def alternating(n: int) -> SmallGroup:
    return SmallGroup(n, frozenset(p for p in itertools.permutations(range(n)) if not sign(p)))


@dataclass
class Ambient:
    """A small group G with a normal subgroup L (L simple, or the socle-like
    piece used by the quotient checks) and a supergroup acting on L."""

    name: str
    G: SmallGroup
    L: SmallGroup
    over: SmallGroup


def ambients() -> list[Ambient]:
    s4, a4 = symmetric(4), alternating(4)
    s5, a5 = symmetric(5), alternating(5)
    s6, a6 = symmetric(6), alternating(6)
    return [
        Ambient("S4", s4, a4, s4),
        Ambient("S5", s5, a5, s5),
        Ambient("A5", a5, a5, s5),
        Ambient("A6", a6, a6, s6),
    ]


def random_subgroup(G: SmallGroup, rng: random.Random, max_gens: int = 2) -> SmallGroup:
    elems = sorted(G.elements)
    gens = [rng.choice(elems) for _ in range(rng.randint(1, max_gens))]
    return SmallGroup.generated(G.degree, gens)


def find_factorizations(amb: Ambient, rng: random.Random, want: int, tries: int = 4000,
                        proper: bool = True) -> list[tuple[SmallGroup, SmallGroup]]:
    """Random pairs (H, K) with G = HK, neither containing L when proper."""
    out = []
    for _ in range(tries):
        H = random_subgroup(amb.G, rng)
        K = random_subgroup(amb.G, rng)
        if proper and (amb.L.is_subgroup_of(H) or amb.L.is_subgroup_of(K)):
            continue
        if is_factorization_by_count(amb.G, H, K):
            out.append((H, K))
            if len(out) >= want:
                break
    return out


@dataclass
class CorpusResult:
    samples: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.samples.values())

    @property
    def ok(self) -> bool:
        return not self.failures


def run_corpus(samples_per_check: int = 130, seed: int = 0) -> CorpusResult:
    """Randomized evaluation of the four factorization checks plus the two counting
    routes for factorizations."""
    rng = random.Random(seed)
    res = CorpusResult()
    ambs = ambients()

    def record(name, ok, info):
        res.samples[name] = res.samples.get(name, 0) + 1
        if not ok:
            res.failures.append((name, info))

    for i in range(samples_per_check):
        amb = ambs[i % len(ambs)]
        G = amb.G
        H, K = random_subgroup(G, rng), random_subgroup(G, rng)
        record("counting", is_factorization(G, H, K) == is_factorization_by_count(G, H, K),
               (amb.name, H.order, K.order))
        N = random_subgroup(G, rng, 1).normal_closure_in(G)
        record("quotient", quotient_reduction_check(G, H, K, N), (amb.name, N.order))

    pairs = {a.name: find_factorizations(a, rng, 12) for a in ambs}
    for i in range(samples_per_check):
        amb = ambs[i % len(ambs)]
        if not pairs[amb.name]:
            continue
        H, K = pairs[amb.name][i % len(pairs[amb.name])]
        G = amb.G
        alpha = rng.choice(sorted(amb.over.elements))
        x = rng.choice(sorted(G.elements))
        y = rng.choice(sorted(G.elements))
        record("conjugate", conjugate_pair_checks(amb.L, H, K, alpha, x, y, G),
               (amb.name, H.order, K.order))
        record("mixed", mixed_product_identity(G, H, K, amb.L), (amb.name, H.order, K.order))
    return res
