"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
Criterion 13 runs only when OMEGAMINUS_LONG=1 is set.
"""
import os
import time

import pytest

from conftest import ACCEPTANCE_LINES
from omegaminus import factorcore, orders
from omegaminus import gens as G
from omegaminus.forms import hermitian_standard, minus_standard_space
from omegaminus.verify import verify_row


def record(n, checks: dict, elapsed: float, budget: float):
    checks = dict(checks)
    checks["within time budget"] = elapsed <= budget
    bad = [k for k, ok in checks.items() if not ok]
    status = "PASS" if not bad else "FAIL"
    line = f"criterion {n}: {status} ({elapsed:.1f}s of {budget:.0f}s)"
    if bad:
        line += " failing: " + ", ".join(bad)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not bad, line


def timed(fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t


def test_criterion_01_identity_suite():
    t = time.perf_counter()
    results = [orders.identity_suite(r, m, q) for r in range(1, 12)
               for m, q in orders.compatible_parameters(r, m_max=20, qs=(2, 3, 4, 5, 8, 9))]
    elapsed = time.perf_counter() - t
    record(1, {"all identities exact": all(res.ok for res in results),
               "every row covered": {res.row for res in results} == set(range(1, 12))},
           elapsed, 1)


def test_criterion_02_generator_gates():
    t = time.perf_counter()
    checks = {}
    for dim, q in [(8, 2), (8, 3), (8, 4), (10, 2), (12, 2)]:
        h = G.omega_minus_gens(minus_standard_space(dim // 2, q), check=False)
        checks[f"Omega_{dim}^-({q})"] = h.order == orders.omega_minus(dim, q)
    for n, q in [(3, 2), (3, 4), (4, 2), (4, 3), (5, 2), (5, 3)]:
        h = G.su_gens(hermitian_standard(n, q), check=False)
        checks[f"SU_{n}({q})"] = h.order == orders.su(n, q)
    record(2, checks, time.perf_counter() - t, 300)


def test_criterion_03_row1(row_reports):
    (a, ta), (b, tb) = timed(row_reports, 1, 5, 2), timed(row_reports, 1, 5, 3)
    record(3, {
        "(5,2) verified": a.status == "verified",
        "(5,2) orbit sets equal": a.checks["orbit_sets_equal"],
        "(5,2) orbit 528": a.orbit_size == 528 == 2 ** 4 * (2 ** 5 + 1),
        "(5,2) stabilizer 25920": a.intersection_order == 25920,
        "(5,3) verified": b.status == "verified",
        "(5,3) orbit sets equal": b.checks["orbit_sets_equal"],
        "(5,3) orbit 19764": b.orbit_size == 19764,
        "(5,3) stabilizer |SU_4(3)|": b.intersection_order == 13063680 == orders.su(4, 3),
    }, ta + tb, 120)


def test_criterion_04_row2(row_reports):
    rep, t = timed(row_reports, 2, 5, 2)
    record(4, {
        "verified": rep.status == "verified",
        "orbit = all 495 singular vectors": rep.checks["orbit_is_full_value_set"]
        and rep.orbit_size == 495,
        "orbit = Z-orbit": rep.checks["orbit_sets_equal"],
        "stabilizer 27648 = q^(2m-3)|SU_(m-2)(q)|": rep.intersection_order == 27648
        == 2 ** 7 * orders.su(3, 2),
    }, t, 60)


def test_criterion_05_row3(row_reports):
    rep, t = timed(row_reports, 3, 5, 2)
    record(5, {
        "verified": rep.status == "verified",
        "orbit = Z-orbit": rep.checks["orbit_sets_equal"],
        "orbit 63360": rep.orbit_size == 63360,
        "swap absent": rep.checks["swap_absent"],
        "pointwise stabilizer 216": rep.details["pointwise_stabilizer_order"] == 216,
    }, t, 120)


def test_criterion_06_row4(row_reports):
    rep, t = timed(row_reports, 4, 5, 2)
    record(6, {
        "verified": rep.status == "verified",
        "|X n Y| = 216": rep.intersection_order == 216,
        "|X| = 394,813,440": rep.x_order == 394813440,
        "|Y| = 27,371,520": rep.y_order == 27371520,
        "|Z| = 50,030,759,116,800": rep.z_order == 50030759116800,
        "|X||Y| = |Z||X n Y|": rep.x_order * rep.y_order == rep.z_order * rep.intersection_order,
    }, t, 180)


def test_criterion_07_row6(row_reports):
    rep, t = timed(row_reports, 6, 4, 2)
    (finding,) = [f for f in rep.findings if f["kind"] == "display-discrepancy"]
    record(7, {
        "verified": rep.status == "verified",
        "orbit = all 136 Q=1 vectors": rep.checks["orbit_is_full_value_set"]
        and rep.orbit_size == 136,
        "|X| = 16,320": rep.x_order == 16320,
        "stabilizer 120 = 2|Omega_3(4)|": rep.intersection_order == 120
        == 2 * orders.omega_odd(3, 4),
        "discrepancy resolved toward q^2": finding["matches_q_squared"]
        and not finding["matches_q"],
    }, t, 60)


def test_criterion_08_row7(row_reports):
    rep, t = timed(row_reports, 7, 4, 4)
    record(8, {
        "verified": rep.status == "verified",
        "orbit = Z-orbit": rep.checks["orbit_sets_equal"],
        "orbit 16448": rep.orbit_size == 16448 == 4 ** 3 * (4 ** 4 + 1),
        "stabilizer 8160 = 2|Omega_3(16)|": rep.intersection_order == 8160
        == 2 * orders.omega_odd(3, 16),
    }, t, 300)


def test_criterion_09_row8(row_reports):
    rep, t = timed(row_reports, 8, 6, 2)
    ext = rep.details["extension_needed"]
    record(9, {
        "verified": rep.status == "verified",
        "orbit = all 2080 Q=1 vectors": rep.checks["orbit_is_full_value_set"]
        and rep.orbit_size == 2080,
        "stabilizer 120 = 2|SU_2(4)|": rep.intersection_order == 120 == 2 * orders.su(2, 4),
        "extension requirement recorded": ext["needed"] in ("SU", "SU.2", "SU.4"),
    }, t, 180)


def test_criterion_10_row10(row_reports):
    rep, t = timed(row_reports, 10)
    subs = rep.details["subgroups"]
    record(10, {
        "verified": rep.status == "verified",
        "minus type with 495 singular vectors": rep.checks["ambient_minus_type"],
        "A12 orbit all 495": subs["A12"]["orbit_size"] == 495 and rep.checks["A12_orbit_equal"],
        "A12 stabilizer 483840": subs["A12"]["stabilizer_order"] == 483840,
        "M12 orbit all 495": subs["M12"]["orbit_size"] == 495 and rep.checks["M12_orbit_equal"],
        "M12 stabilizer 192": subs["M12"]["stabilizer_order"] == 192,
    }, t, 120)


def test_criterion_11_row11(row_reports):
    rep, t = timed(row_reports, 11)
    record(11, {
        "arithmetic-only": rep.status == "arithmetic-only",
        "150,698,880 / 1,152 = 130,815": 150698880 // 1152 == 130815
        and 150698880 % 1152 == 0 and orders.sporadic("3.J3") == 150698880,
        "= (2^9+1)(2^8-1)": (2 ** 9 + 1) * (2 ** 8 - 1) == 130815,
        "display": rep.details["display"].startswith("150,698,880 / 1,152 = 130,815"),
    }, t, 5)


def test_criterion_12_small_group_corpus():
    res, t = timed(factorcore.run_corpus, samples_per_check=130, seed=0)
    record(12, {
        "at least 500 samples": res.total >= 500,
        "zero failures": res.ok,
        "every check sampled": set(res.samples) == {"counting", "quotient", "conjugate", "mixed"},
    }, t, 120)


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("OMEGAMINUS_LONG") != "1",
                    reason="optional long run; set OMEGAMINUS_LONG=1")
def test_criterion_13_optional_rows():
    (a, ta), (b, tb) = timed(verify_row, 5, 5, 4), timed(verify_row, 9, 6, 4)
    record(13, {"row 5 (5,4) verified": a.status == "verified",
                "row 9 (6,4) verified": b.status == "verified"}, ta + tb, 7200)
