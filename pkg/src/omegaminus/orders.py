"""Exact orders of classical, alternating and sporadic groups.

Everything is Python integers.  ``identity_suite`` evaluates, for each
factorization row, both sides of every counting equality used to establish
it, and reports the residuals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

FAMILIES = ("Omega_minus", "Omega_plus", "Omega_odd", "Sp", "SU", "GammaO_minus",
            "O_minus", "sporadic", "alternating")

SPORADIC = {
    "M12": 95040,
    "J3": 50232960,
    "3.J3": 150698880,
}

FORMULAS = {
    "Omega_minus": "q^(m(m-1)) (q^m+1) prod_{i<m}(q^(2i)-1) / gcd(2,q-1), dim 2m",
    "Omega_plus": "q^(m(m-1)) (q^m-1) prod_{i<m}(q^(2i)-1) / gcd(2,q-1), dim 2m",
    "Omega_odd": "q^(m^2) prod_{i<=m}(q^(2i)-1) / gcd(2,q-1), dim 2m+1",
    "Sp": "q^(m^2) prod_{i<=m}(q^(2i)-1), dim 2m",
    "SU": "q^(n(n-1)/2) prod_{2<=i<=n}(q^i-(-1)^i)",
    "GammaO_minus": "f |O_2m^-(q)|, q = p^f",
    "O_minus": "2 q^(m(m-1)) (q^m+1) prod_{i<m}(q^(2i)-1)",
    "sporadic": "shipped constant",
    "alternating": "n!/2",
}


class OrderError(ValueError):
    pass


def prime_power(q: int) -> tuple[int, int]:
    """(p, f) with q = p^f, or OrderError."""
    if q < 2:
        raise OrderError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    f, r = 0, q
    while r % p == 0:
        r //= p
        f += 1
    if r != 1:
        raise OrderError(f"{q} is not a prime power")
    return p, f


def _prod(terms) -> int:
    return math.prod(terms)


@dataclass(frozen=True)
class GroupOrderSpec:
    family: str
    params: tuple = ()
    cofactor: int = 1


def order(spec: GroupOrderSpec) -> int:
    fam, params = spec.family, tuple(spec.params)
    if fam not in FAMILIES:
        raise OrderError(f"unknown family {fam!r}")
    if fam == "sporadic":
        (name,) = params
        if name not in SPORADIC:
            raise OrderError(f"no shipped order for {name!r}")
        return SPORADIC[name] * spec.cofactor
    if fam == "alternating":
        (n,) = params
        if not 1 <= n <= 16:
            raise OrderError("alternating groups are tabulated for n <= 16")
        return max(1, math.factorial(n) // 2) * spec.cofactor
    dim, q = params
    p, f = prime_power(q)
    g = 1 if p == 2 else 2
    if fam == "SU":
        if dim < 1:
            raise OrderError("SU needs n >= 1")
        base = q ** (dim * (dim - 1) // 2) * _prod(q ** i - (-1) ** i for i in range(2, dim + 1))
        return base * spec.cofactor
    if fam == "Omega_odd":
        if dim < 1 or dim % 2 == 0:
            raise OrderError("Omega_odd needs odd dimension")
        m = dim // 2
        return q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // g * spec.cofactor
    if dim < 2 or dim % 2:
        raise OrderError(f"{fam} needs even dimension")
    m = dim // 2
    if fam == "Sp":
        return q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1)) * spec.cofactor
    sign = -1 if fam in ("Omega_minus", "GammaO_minus", "O_minus") else 1
    so = q ** (m * (m - 1)) * (q ** m - sign) * _prod(q ** (2 * i) - 1 for i in range(1, m))
    if fam in ("Omega_minus", "Omega_plus"):
        return so // g * spec.cofactor
    full = 2 * so
    if fam == "O_minus":
        return full * spec.cofactor
    return f * full * spec.cofactor


def omega_minus(dim: int, q: int) -> int:
    return order(GroupOrderSpec("Omega_minus", (dim, q)))


def omega_odd(dim: int, q: int) -> int:
    return order(GroupOrderSpec("Omega_odd", (dim, q)))


def su(n: int, q: int) -> int:
    return order(GroupOrderSpec("SU", (n, q)))


def gamma_o_minus(dim: int, q: int) -> int:
    return order(GroupOrderSpec("GammaO_minus", (dim, q)))


def o_minus(dim: int, q: int) -> int:
    return order(GroupOrderSpec("O_minus", (dim, q)))


def alternating(n: int) -> int:
    return order(GroupOrderSpec("alternating", (n,)))


def sporadic(name: str) -> int:
    return order(GroupOrderSpec("sporadic", (name,)))


def table_dump(specs) -> list[dict]:
    """Rows of (family, params, order, formula) for display."""
    return [{"family": s.family, "params": list(s.params), "cofactor": s.cofactor,
             "order": order(s), "formula": FORMULAS[s.family]} for s in specs]


# ---------------------------------------------------------------------------
# row identities


ROW_FIELDS = {3: (2,), 4: (2,), 5: (4,), 6: (2,), 7: (4,), 8: (2,), 9: (4,)}


def row_constraint_error(row: int, m: int | None, q: int | None) -> str | None:
    """Why (row, m, q) is outside the row's range, or None."""
    if row not in range(1, 12):
        return f"row {row} does not exist"
    if row in (10, 11):
        return None
    if m is None or q is None:
        return f"row {row} needs m and q"
    try:
        prime_power(q)
    except OrderError as exc:
        return str(exc)
    if m < 4:
        return "m must be at least 4"
    if row <= 5 and m % 2 == 0:
        return f"row {row} requires odd m"
    if row in (6, 7) and m % 2:
        return f"row {row} requires even m"
    if row in (8, 9) and (m % 2 or (m // 2) % 2 == 0):
        return f"row {row} requires m/2 odd"
    if row in ROW_FIELDS and q not in ROW_FIELDS[row]:
        return f"row {row} requires q in {ROW_FIELDS[row]}"
    return None


@dataclass
class Identity:
    name: str
    values: dict[str, int]

    @property
    def residuals(self) -> dict[str, int]:
        first = next(iter(self.values.values()))
        return {k: v - first for k, v in self.values.items()}

    @property
    def ok(self) -> bool:
        return len(set(self.values.values())) == 1


@dataclass
class IdentityResult:
    row: int
    m: int | None
    q: int | None
    identities: list[Identity] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.identities)

    def as_dict(self) -> dict:
        return {
            "row": self.row, "m": self.m, "q": self.q, "pass": self.ok,
            "identities": [{"name": i.name, "values": {k: str(v) for k, v in i.values.items()},
                            "residuals": {k: str(v) for k, v in i.residuals.items()},
                            "pass": i.ok} for i in self.identities],
            "findings": self.findings,
        }


def _ratio(a: int, b: int) -> int:
    """Exact quotient; a non-integral ratio is an identity failure."""
    if a % b:
        raise OrderError(f"{a} is not divisible by {b}")
    return a // b


def identity_suite(row: int, m: int | None = None, q: int | None = None) -> IdentityResult:
    why = row_constraint_error(row, m, q)
    if why:
        raise OrderError(why)
    res = IdentityResult(row, m, q)
    add = lambda name, **vals: res.identities.append(Identity(name, vals))  # noqa: E731

    if row == 1:
        add("index", su_ratio=_ratio(su(m, q), su(m - 1, q)),
            closed=q ** (m - 1) * (q ** m + 1),
            omega_ratio=_ratio(omega_minus(2 * m, q), omega_odd(2 * m - 1, q)))
    elif row == 2:
        add("index", su_ratio=_ratio(su(m, q), q ** (2 * m - 3) * su(m - 2, q)),
            closed=(q ** m + 1) * (q ** (m - 1) - 1),
            omega_ratio=_ratio(omega_minus(2 * m, q), q ** (2 * m - 2) * omega_minus(2 * m - 2, q)))
    elif row == 3:
        add("index", su_ratio=_ratio(su(m, 2), su(m - 2, 2)),
            closed=2 ** (2 * m - 3) * (2 ** m + 1) * (2 ** (m - 1) - 1),
            omega_ratio=_ratio(omega_minus(2 * m, 2), 2 * omega_minus(2 * m - 2, 2)))
    elif row in (4, 5):
        f = prime_power(q)[1]
        z, y = gamma_o_minus(2 * m, q), 2 * f * su(m, q)
        x, xy = 2 * f * omega_minus(2 * m - 2, q), su(m - 2, q)
        add("index", su_ratio=_ratio(y, xy),
            closed=2 * f * q ** (2 * m - 3) * (q ** m + 1) * (q ** (m - 1) - 1),
            gamma_ratio=_ratio(z, x))
        add("product", xy_product=x * y, z_times_intersection=z * xy)
    elif row in (6, 7):
        f = prime_power(q)[1]
        x = gamma_o_minus(m, q * q)
        index = q ** (m - 1) * (q ** m + 1)
        add("index", closed=index,
            stabilizer_ratio=_ratio(gamma_o_minus(2 * m, q), 2 * f * omega_odd(2 * m - 1, q)))
        inter = _ratio(x, index)
        add("intersection", computed=inter, extension_reading=2 * omega_odd(m - 1, q * q))
        literal = 2 * omega_odd(m - 1, q)
        res.findings.append({
            "kind": "display-discrepancy",
            "computed": str(inter),
            "two_omega_q_squared": str(2 * omega_odd(m - 1, q * q)),
            "two_omega_q": str(literal),
            "matches_q_squared": inter == 2 * omega_odd(m - 1, q * q),
            "matches_q": inter == literal,
        })
    elif row in (8, 9):
        f = prime_power(q)[1]
        l = m // 2
        x = 4 * f * su(l, q * q)
        a = gamma_o_minus(m, q * q)
        ay = 2 * omega_odd(m - 1, q * q)
        inter = _ratio(x * ay, a)
        add("intersection", computed=inter, closed=2 * su(l - 1, q * q))
        add("index", x_ratio=_ratio(x, inter), closed=q ** (m - 1) * (q ** m + 1),
            stabilizer_ratio=_ratio(gamma_o_minus(2 * m, q), 2 * f * omega_odd(2 * m - 1, q)))
    elif row == 10:
        py = 2 ** 8 * omega_minus(8, 2)
        add("index", omega_ratio=_ratio(omega_minus(10, 2), py),
            closed=(2 ** 5 + 1) * (2 ** 4 - 1),
            a12_ratio=_ratio(alternating(12), 2 * alternating(4) * alternating(8)),
            m12_ratio=_ratio(sporadic("M12"), 2 ** 5 * 6))
    elif row == 11:
        add("index", j3_ratio=_ratio(sporadic("3.J3"), 2 ** 6 * 3 * 6),
            closed=(2 ** 9 + 1) * (2 ** 8 - 1),
            omega_ratio=_ratio(omega_minus(18, 2), 2 ** 16 * omega_minus(16, 2)))
    return res


def compatible_parameters(row: int, m_max: int = 20, qs=(2, 3, 4, 5, 8, 9)) -> list[tuple]:
    """All (m, q) in range for which the row's constraints hold."""
    if row in (10, 11):
        return [(None, None)]
    return [(m, q) for m in range(4, m_max + 1) for q in qs
            if row_constraint_error(row, m, q) is None]


def row11_display() -> str:
    j3 = sporadic("3.J3")
    inter = 2 ** 6 * 3 * 6
    return (f"{j3:,} / {inter:,} = {j3 // inter:,} = (2^9+1)(2^8-1) = "
            f"{(2 ** 9 + 1) * (2 ** 8 - 1):,}")
