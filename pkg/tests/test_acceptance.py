"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
Criterion 7 is marked as a strict expected failure: the quantity it pins,
(exact/asym - 1) * L at x = L/2, is measurably proportional to 1/L (the
deviation itself falls off as 1/L^2), so no implementation can make it
L-independent; see the companion second-order test in test_asymptotics.py
and the analysis in the project notes.
"""

import math
import time

import pytest

from refs import (
    AMPLITUDE_HALF_PRINTED,
    GLAISHER_A_PRINTED,
    SUB_COEFF,
    momentum_filling_energy,
    rel,
)
from xxchain import (
    INFINITE,
    LatticeSpec,
    asym_finite,
    asymptotic_params,
    correlator,
    correlator_det,
    ed_correlator,
    ed_ground_state,
    glaisher,
    log_r_series,
    lukyanov_integral,
    r_det,
    r_value,
)

PI = math.pi


def verdict(num: int, label: str, ok: bool, detail: str) -> None:
    print(f"criterion {num} [{label}]: {'PASS' if ok else 'FAIL'} ({detail})")


def test_criterion_1_route_equivalence_desk_scale():
    t0 = time.perf_counter()
    worst = 0.0
    for L in (6, 10, 14):
        lat = LatticeSpec.finite(L)
        for x in range(1, L):
            ed = ed_correlator(L, x)
            det = correlator_det(x, lat)
            prod = correlator(x, lat).value
            worst = max(worst, rel(ed, det), rel(ed, prod), rel(det, prod))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-10 and elapsed <= 10.0
    verdict(1, "ED vs det vs product, L=6,10,14", ok,
            f"worst rel err {worst:.2e}, runtime {elapsed:.2f}s")
    assert worst <= 1e-10
    assert elapsed <= 10.0


def test_criterion_2_identity_suite():
    worst_r = 0.0
    for lat in (LatticeSpec.finite(62), LatticeSpec.finite(122), INFINITE):
        for N in range(1, 16):
            worst_r = max(worst_r, rel(r_det(N, lat), r_value(N, lat).value))
    worst_s = max(
        abs(log_r_series(N) - r_value(N, INFINITE).log_abs) for N in (10, 100, 1000)
    )
    ok = worst_r <= 1e-9 and worst_s <= 1e-10
    verdict(2, "r_det=r_value and series identity", ok,
            f"det-product rel {worst_r:.2e}, series abs {worst_s:.2e}")
    assert worst_r <= 1e-9
    assert worst_s <= 1e-10


def test_criterion_3_headline_constants(report):
    t0 = time.perf_counter()
    d_half = abs(report.amplitude_half - AMPLITUDE_HALF_PRINTED)
    d_a = abs(report.glaisher_a - GLAISHER_A_PRINTED)
    b_closed = 2.0 ** (1.0 / 12.0) * math.exp(0.25) * report.glaisher_a**-3.0
    d_b = abs(b_closed - math.exp(report.ln_b_fit))
    elapsed = time.perf_counter() - t0
    ok = d_half <= 1e-6 and d_a <= 1e-6 and d_b <= 1e-7
    verdict(3, "C0/2sqrt(pi), Glaisher A, B", ok,
            f"|dC0/2sqrt(pi)|={d_half:.2e}, |dA|={d_a:.2e}, |dB|={d_b:.2e}, "
            f"report reuse time {elapsed:.2f}s")
    assert d_half <= 1e-6
    assert d_a <= 1e-6
    assert d_b <= 1e-7


def test_criterion_3_runtime_budget():
    from xxchain import amplitude_report

    t0 = time.perf_counter()
    amplitude_report()
    elapsed = time.perf_counter() - t0
    verdict(3, "constants runtime", elapsed <= 30.0, f"fresh report in {elapsed:.2f}s")
    assert elapsed <= 30.0


def test_criterion_4_four_lnb_routes(report):
    vals = {
        "series": report.ln_b_series,
        "integral": report.ln_b_integral,
        "gamma": report.ln_b_gamma_product,
        "fit": report.ln_b_fit,
    }
    dev = max(abs(a - b) for a in vals.values() for b in vals.values())
    ok = dev <= 1e-7
    verdict(4, "four ln B routes", ok, f"pairwise max dev {dev:.2e}")
    assert dev <= 1e-7


def test_criterion_5_subleading_coefficient(report):
    err = rel(report.sub_coeff_fitted, SUB_COEFF)
    ok = err <= 0.01
    verdict(5, "subleading -(1/8) C0/sqrt(pi)", ok,
            f"fitted {report.sub_coeff_fitted:.7f} vs {SUB_COEFF:.7f}, rel {err:.2e}")
    assert err <= 0.01


def test_criterion_6_n_squared_correction():
    ln_b = math.log(2.0) / 12.0 + 3.0 * glaisher()[1]
    g = {
        N: (r_value(N, INFINITE).log_abs + 0.25 * math.log(N) - ln_b) * N * N
        for N in (100, 1000, 10000)
    }
    extrap = (g[10000] * 10000**2 - g[1000] * 1000**2) / (10000**2 - 1000**2)
    err = abs(extrap - (-1.0 / 64.0))
    ok = err <= 1e-3
    verdict(6, "-1/(64 N^2) correction", ok,
            f"extrapolated {extrap:.8f} vs {-1.0 / 64.0:.8f}, err {err:.2e}")
    assert err <= 1e-3


@pytest.mark.xfail(
    strict=True,
    reason="measured deviation from the finite-ring form at x = L/2 scales as 1/L^2, "
    "so (exact/asym - 1)*L halves with each doubling of L instead of being "
    "L-independent; see notes",
)
def test_criterion_7_finite_size_scaling():
    params = asymptotic_params()
    devs = {}
    for L in (258, 514, 1026):
        x = L // 2
        exact = correlator(x, LatticeSpec.finite(L)).value
        devs[L] = (exact / asym_finite(x, L, params) - 1.0) * L
    mean = sum(devs.values()) / len(devs)
    spread_ok = all(abs(v / mean - 1.0) <= 0.20 for v in devs.values())
    verdict(7, "deviation*L L-independent at x=L/2", spread_ok,
            "dev*L = " + ", ".join(f"L={L}: {v:.6f}" for L, v in devs.items()))
    assert spread_ok


def test_criterion_8_energy_identities():
    d_inf = abs(2.0 * correlator(1, INFINITE).value - (-2.0 / PI))
    e6, _ = ed_ground_state(6)
    d_ed = abs(e6 - (-4.0))
    ok = d_inf <= 1e-12 and d_ed <= 1e-10
    verdict(8, "energy identities", ok,
            f"|2G(1)+2/pi|={d_inf:.2e}, |E0(6)+4|={d_ed:.2e}")
    assert d_inf <= 1e-12
    assert d_ed <= 1e-10
    # cross-check the ED oracle against the independent momentum filling
    assert abs(e6 - momentum_filling_energy(6)) <= 1e-11


def test_criterion_9_lukyanov_integral():
    quad_value = lukyanov_integral()
    _, zeta_prime = glaisher()
    identity = 4.0 * (math.log(2.0) / 12.0 + 3.0 * zeta_prime)
    err = abs(quad_value - identity)
    ok = err <= 1e-8
    verdict(9, "integral vs 4((ln2)/12 + 3 zeta'(-1))", ok,
            f"quad {quad_value:.10f} vs identity {identity:.10f}, err {err:.2e}")
    assert err <= 1e-8
