"""Acceptance gate: the ten headline properties, one test (and one line) each.

Each test prints a single "criterion NN: PASS/FAIL" line with the measured
figure of merit (visible with ``pytest -s`` or in captured output), then
asserts.  Tolerances and runtime budgets are stated inline; independent
reference values are computed in this file, not imported from the package
internals they check.
"""

import json
import math
import time
from fractions import Fraction

from fluxtube import (
    FluxConfig,
    LOWER,
    RAISE,
    ShootingProblem,
    TubeModel,
    apply_supercharge,
    enumerate_states,
    find_xi_roots,
    hamiltonian_residual,
    inner_product,
    oracle_eigenvalues,
    psi_regular,
    psi_zero_mode,
    vacancy_line_compare,
)
from fluxtube import specfun as sf
from fluxtube.cli import main as cli_main


def _report(num, ok, detail):
    line = f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} — {detail}"
    print(line)
    assert ok, line


# -- 1: U at negative-integer first parameter reduces to a Laguerre polynomial –

def test_criterion_01_u_laguerre_identity():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(9):
        for b in (1.3, 2.0, 2.7, 4.5):
            for z in (0.1, 1.0, 5.0, 20.0):
                ref = (-1.0) ** n * math.factorial(n) * sf.laguerre(n, b - 1.0, z)
                err = abs(sf.kummer_u(-float(n), b, z) - ref) / abs(ref)
                worst = max(worst, err)
    dt = time.perf_counter() - t0
    _report(1, worst <= 1e-8 and dt < 1.0,
            f"max rel err {worst:.3e} (tol 1e-8) over 144 points in {dt:.2f}s")


# -- 2: closed-form spectrum matches direct substitution ------------------------

def _direct_substitution_spectrum(alpha, e_max, m_min, m_max):
    """Independent enumeration from radial exponents and normalizability.

    For each (m, sigma) channel keep every radial exponent e with e > -1,
    read the tower E = (e + m + alpha)/2 + (1 + 2 sigma)/2 + n off the ODE,
    and label attracted-spin states by their supercharge source.
    """
    af = Fraction(alpha)
    ef = Fraction(e_max)
    s_reg = Fraction(1, 2) if af >= 0 else Fraction(-1, 2)
    states = set()
    for m in range(m_min, m_max + 1):
        ma = m + af
        # repelled spin: only the regular exponent |ma| survives
        base = (abs(ma) + ma) / 2 + Fraction(1, 2) + s_reg
        n = 0
        while base + n <= ef:
            e = base + n
            tag = "zero_mode" if e == 0 else "regular"
            nn = 0 if e == 0 else n
            states.add((nn, m, float(s_reg), tag, float(e)))
            n += 1
        # attracted spin: irregular exponent wherever normalizable
        if af >= 0:
            e_att = -ma if ma < 1 else ma
            base = (e_att + ma) / 2
        else:
            e_att = ma if ma > -1 else -ma
            base = (e_att + ma) / 2 + 1
        ma_src = ma - 1 if af >= 0 else ma + 1
        base_src = (abs(ma_src) + ma_src) / 2 + Fraction(1, 2) + s_reg
        n = 0
        while base + n <= ef:
            e = base + n
            if e == 0:
                states.add((0, m, float(-s_reg), "zero_mode", 0.0))
            else:
                states.add((int(e - base_src), m, float(-s_reg),
                            "superpartner", float(e)))
            n += 1
    return states


def test_criterion_02_spectrum_formula():
    t0 = time.perf_counter()
    ok = True
    details = []
    for alpha in (0.5, -0.5):
        got = {(s.label.n, s.label.m, s.label.sigma, s.label.tag, s.energy)
               for s in enumerate_states(FluxConfig(alpha), 5.0, -6, 6)}
        want = _direct_substitution_spectrum(alpha, 5.0, -6, 6)
        ok &= got == want
        zm = {t[1] for t in got if t[3] == "zero_mode"}
        if alpha >= 0:
            ok &= zm == {m for m in range(-6, 7) if m + alpha < 1}
        else:
            ok &= zm == {m for m in range(-6, 7) if m + alpha <= 0}
        details.append(f"alpha={alpha:+g}: {len(got)} states, "
                       f"{len(zm)} zero modes")
    dt = time.perf_counter() - t0
    _report(2, ok and dt < 1.0, "; ".join(details) + f" ({dt:.2f}s)")


# -- 3: supersymmetry ------------------------------------------------------------

def test_criterion_03_susy_identities():
    t0 = time.perf_counter()
    alpha = 0.5
    states = enumerate_states(FluxConfig(alpha), 4.0, -6, 6)
    partner_labels = {(s.label.n, s.label.m, s.label.sigma): s.energy
                      for s in states if s.label.tag == "superpartner"}
    worst_norm = 0.0
    degenerate = True
    n_pairs = 0
    for s in states:
        if s.label.tag != "regular":
            continue
        psi = psi_regular(s.label.n, s.label.m, alpha)
        image = apply_supercharge(psi, RAISE, normalized=False)
        key = (s.label.n, s.label.m + 1, -0.5)
        degenerate &= partner_labels.get(key) == s.energy
        worst_norm = max(worst_norm,
                         abs(inner_product(image, image) - s.energy))
        n_pairs += 1
    worst_zero = 0.0
    n_zero = 0
    for s in states:
        if s.label.tag != "zero_mode":
            continue
        zm = psi_zero_mode(s.label.m, alpha)
        for direction in (RAISE, LOWER):
            img = apply_supercharge(zm, direction, normalized=False)
            worst_zero = max(worst_zero, float(abs(img.values).max()))
        n_zero += 1
    dt = time.perf_counter() - t0
    ok = (degenerate and worst_norm <= 1e-8 and worst_zero <= 1e-10
          and dt < 10.0)
    _report(3, ok,
            f"{n_pairs} pairs degenerate={degenerate}, "
            f"max | ||Q psi||^2 - E | = {worst_norm:.2e} (tol 1e-8), "
            f"{n_zero} zero modes max |image| = {worst_zero:.2e} "
            f"(tol 1e-10) in {dt:.1f}s")


# -- 4: every enumerated state solves the radial eigenvalue equation -------------

def _build_profile(label, alpha):
    if label.tag == "zero_mode":
        return psi_zero_mode(label.m, alpha)
    if label.tag == "superpartner":
        if alpha >= 0:
            return apply_supercharge(psi_regular(label.n, label.m - 1, alpha),
                                     RAISE)
        return apply_supercharge(psi_regular(label.n, label.m + 1, alpha),
                                 LOWER)
    return psi_regular(label.n, label.m, alpha)


def test_criterion_04_hamiltonian_residual():
    t0 = time.perf_counter()
    worst = 0.0
    count = 0
    for alpha in (0.5, -0.5):
        for s in enumerate_states(FluxConfig(alpha), 6.0, -6, 6):
            res = hamiltonian_residual(_build_profile(s.label, alpha))
            worst = max(worst, res)
            count += 1
    dt = time.perf_counter() - t0
    _report(4, worst <= 1e-7 and dt < 30.0,
            f"max residual {worst:.2e} (tol 1e-7) over {count} states "
            f"in {dt:.1f}s")


# -- 5: no vacancy line under the regular-at-origin condition --------------------

def test_criterion_05_vacancy_line():
    t0 = time.perf_counter()
    cmp = vacancy_line_compare(1.0, 3.5, -3, 1)
    target = (0, -1, 0.5, 1.0)
    reg = {(s.label.n, s.label.m, s.label.sigma, s.energy)
           for s in cmp.regular_condition}
    van = {(s.label.n, s.label.m, s.label.sigma, s.energy)
           for s in cmp.vanishing_condition}
    missing = {(s.label.n, s.label.m, s.label.sigma, s.energy)
               for s in cmp.missing_under_vanishing}
    family = {(n, -1, 0.5, float(n + 1)) for n in range(3)}
    ok = (target in reg and target not in van
          and missing == family and missing == reg - van)
    dt = time.perf_counter() - t0
    _report(5, ok and dt < 1.0,
            f"m+alpha=0 family of {len(missing)} states is exactly the "
            f"difference; (n=0, m=-1, sigma=+1/2, E=1) present only under "
            f"regular condition ({dt:.2f}s)")


# -- 6: shrinking shell drives xi_n to -n -----------------------------------------

def test_criterion_06_regularization_limit():
    t0 = time.perf_counter()
    radii = (0.5, 0.2, 0.1, 0.05, 0.02)
    devs = {0: [], 1: [], 2: []}
    for radius in radii:
        model = TubeModel(radius=radius, alpha=0.5, m=0, sigma=0.5)
        roots = find_xi_roots(model, n_max=2)
        for n, r in enumerate(roots):
            devs[n].append(abs(r.xi + n))
    monotone = all(d[i] > d[i + 1]
                   for d in devs.values() for i in range(len(radii) - 1))
    final = max(d[-1] for d in devs.values())
    dt = time.perf_counter() - t0
    _report(6, monotone and final < 0.05 and dt < 60.0,
            f"deviations strictly decreasing over R={radii}, "
            f"final max |xi_n + n| = {final:.2e} (tol 0.05) in {dt:.1f}s")


# -- 7: matching roots against the ODE-shooting oracle ----------------------------

def test_criterion_07_matching_vs_oracle():
    t0 = time.perf_counter()
    worst = 0.0
    n_comp = 0
    for alpha in (0.5, -0.5, 1.5):
        for m in (-1, 0, 1):
            for sigma in (0.5, -0.5):
                for radius in (0.1, 0.3):
                    model = TubeModel(radius=radius, alpha=alpha, m=m,
                                      sigma=sigma)
                    roots = find_xi_roots(model, n_max=2)
                    assert len(roots) == 3, (alpha, m, sigma, radius)
                    e_hi = max(r.energy for r in roots) + 0.4
                    prob = ShootingProblem(alpha=alpha, m=m, sigma=sigma,
                                           shell_radius=radius)
                    ora = oracle_eigenvalues(prob, e_min=-0.3, e_max=e_hi,
                                             count=3)
                    for r, e in zip(roots, ora):
                        worst = max(worst, abs(r.energy - e))
                        n_comp += 1
    dt = time.perf_counter() - t0
    _report(7, worst <= 1e-6 and n_comp == 108 and dt < 300.0,
            f"max |matching - shooting| = {worst:.2e} (tol 1e-6) over "
            f"{n_comp} eigenvalues in {dt:.0f}s")


# -- 8: Gamma alternates sign across each negative integer ------------------------

def test_criterion_08_gamma_sign():
    t0 = time.perf_counter()
    ok = all(sf.gamma_sign(-n + 0.1) == -sf.gamma_sign(-n - 0.1)
             for n in range(6))
    dt = time.perf_counter() - t0
    _report(8, ok, f"sign flips across -n for n=0..5 ({dt * 1e3:.2f}ms)")


# -- 9: small-argument growth of U -------------------------------------------------

def test_criterion_09_u_small_z_asymptotic():
    t0 = time.perf_counter()
    worst = 0.0
    for xi, b in ((0.37, 1.5), (-0.6, 2.2)):
        z = 1e-4
        ref = -sf.gammafn(b - 1.0) / sf.gammafn(xi) * z ** (1.0 - b)
        ratio = sf.kummer_u(xi, b, z) / ref
        worst = max(worst, abs(ratio - (-1.0)))
    dt = time.perf_counter() - t0
    _report(9, worst <= 0.01 and dt < 1.0,
            f"max |ratio + 1| = {worst:.2e} (tol 0.01) at z=1e-4 "
            f"({dt:.2f}s)")


# -- 10: CLI output is deterministic ------------------------------------------------

def test_criterion_10_cli_determinism(tmp_path):
    t0 = time.perf_counter()
    csv_args = ["spectrum", "--alpha", "0.5", "--emax", "4", "--m=-4..4"]
    json_args = ["wavefunction", "--alpha", "-0.5", "--n", "1", "--m", "0",
                 "--superpartner", "--format", "json"]
    blobs = []
    for tag in ("a", "b"):
        c = tmp_path / f"{tag}.csv"
        j = tmp_path / f"{tag}.json"
        assert cli_main(csv_args + ["--output", str(c)]) == 0
        assert cli_main(json_args + ["--output", str(j)]) == 0
        blobs.append((c.read_bytes(), (c.parent / (c.name + ".json")).read_bytes(),
                      j.read_bytes()))
    ok = blobs[0] == blobs[1]
    json.loads(blobs[0][2])  # and it is valid JSON
    dt = time.perf_counter() - t0
    _report(10, ok, f"CSV, sidecar and JSON byte-identical across runs "
                    f"({dt:.2f}s)")
