"""Independent eigenvalue oracle: direct radial shooting, no special functions.

This module deliberately shares no code with the closed-form machinery it
checks.  The radial equation

    psi'' + psi'/r = 4 (V_eff(r) - E) psi,
    V_eff = m_eff^2/(4 r^2) + m_eff/2 + r^2/4 + sigma,

is integrated outward by fixed-step classical RK4 from a two-term Frobenius
start psi = r^k (1 + a1 r^2), k = |m_eff(0)|, a1 = (2 m_eff + 4 sigma - 4E)
/ (4k + 4).  For a flux shell of radius R the angular number is m inside
and m + alpha outside, with the derivative jump

    psi'(R+) - psi'(R-) = (2 sigma alpha / R) psi(R)

applied exactly at the shell (the integration grid lands on R exactly).
Without a shell the point-flux problem uses m + alpha everywhere, which
shoots along the regular branch r^{|m+alpha|}.

The decay defect D(E) = psi(r_max) e^{+r_max^2/4} (up to a positive
renormalization bookkeeping factor) measures the admixture of the growing
solution; its zeros in E are the eigenvalues.  The first 0.05 of the range
is integrated at a 32-fold finer step because the 1/r terms are stiff near
the origin; the state is renormalized every few hundred steps so the
amplitudes never leave floating-point range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from scipy.optimize import brentq

__all__ = ["ShootingProblem", "shoot", "oracle_eigenvalues"]

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@dataclass(frozen=True)
class ShootingProblem:
    """One radial channel to shoot: flux alpha, orbital m, spin sigma.

    ``shell_radius`` switches between the point-flux problem (None: the
    flux enters only through m + alpha) and the shell-regularized problem
    (flux spread on a shell at that radius).  ``h`` is the outer RK4 step;
    the region up to ``inner_edge`` runs at h / ``inner_refine``.
    """

    alpha: float
    m: int
    sigma: float
    shell_radius: float | None = None
    r_max: float = 12.0
    h: float = 1e-3
    r_start: float = 1e-4
    inner_edge: float = 0.05
    inner_refine: int = 32
    renorm_every: int = 500

    def __post_init__(self):
        if self.sigma not in (0.5, -0.5):
            raise ValueError(f"sigma must be +0.5 or -0.5, got {self.sigma!r}")
        if self.shell_radius is not None and not (0.0 < self.shell_radius < self.r_max):
            raise ValueError("shell radius must lie inside (0, r_max)")
        if not (0.0 < self.r_start < self.r_max):
            raise ValueError("need 0 < r_start < r_max")


@njit(cache=True)
def _rk4_region(psi, phi, r0, r1, nsteps, ma, sigma, energy, renorm_every):
    """Integrate one region with fixed angular number; returns (psi, phi, log_scale)."""
    h = (r1 - r0) / nsteps
    log_scale = 0.0
    c0 = ma * ma
    c1 = 2.0 * ma + 4.0 * sigma - 4.0 * energy
    for i in range(nsteps):
        r = r0 + i * h
        rh = r + 0.5 * h
        rf = r + h

        q1 = -phi / r + (c0 / (r * r) + r * r + c1) * psi
        p2 = psi + 0.5 * h * phi
        f2 = phi + 0.5 * h * q1
        q2 = -f2 / rh + (c0 / (rh * rh) + rh * rh + c1) * p2
        p3 = psi + 0.5 * h * f2
        f3 = phi + 0.5 * h * q2
        q3 = -f3 / rh + (c0 / (rh * rh) + rh * rh + c1) * p3
        p4 = psi + h * f3
        f4 = phi + h * q3
        q4 = -f4 / rf + (c0 / (rf * rf) + rf * rf + c1) * p4

        psi = psi + h / 6.0 * (phi + 2.0 * f2 + 2.0 * f3 + f4)
        phi = phi + h / 6.0 * (q1 + 2.0 * q2 + 2.0 * q3 + q4)

        if (i + 1) % renorm_every == 0:
            s = abs(psi)
            if abs(phi) > s:
                s = abs(phi)
            if s > 0.0:
                psi /= s
                phi /= s
                log_scale += math.log(s)
    return psi, phi, log_scale


def _segments(problem: ShootingProblem) -> list[tuple[float, float, bool, float]]:
    """Break [r_start, r_max] into (lo, hi, refined, m_eff) integration spans."""
    cuts = {problem.r_start, problem.r_max}
    if problem.r_start < problem.inner_edge < problem.r_max:
        cuts.add(problem.inner_edge)
    shell = problem.shell_radius
    if shell is not None:
        cuts.add(shell)
    pts = sorted(cuts)
    out = []
    for lo, hi in zip(pts[:-1], pts[1:]):
        mid = 0.5 * (lo + hi)
        inside = shell is not None and mid < shell
        m_eff = float(problem.m) if inside else problem.m + problem.alpha
        refined = mid < problem.inner_edge
        out.append((lo, hi, refined, m_eff))
    return out


def shoot(problem: ShootingProblem, energy: float) -> float:
    """Decay defect D(E); its sign changes bracket eigenvalues."""
    if problem.shell_radius is None:
        k = abs(problem.m + problem.alpha)
        m0 = problem.m + problem.alpha
    else:
        k = abs(float(problem.m))
        m0 = float(problem.m)
    r0 = problem.r_start
    a1 = (2.0 * m0 + 4.0 * problem.sigma - 4.0 * energy) / (4.0 * k + 4.0)
    psi = r0 ** k * (1.0 + a1 * r0 * r0)
    phi = r0 ** (k - 1.0) * (k + (k + 2.0) * a1 * r0 * r0)
    scale = max(abs(psi), abs(phi))
    log_total = math.log(scale)
    psi /= scale
    phi /= scale

    for lo, hi, refined, m_eff in _segments(problem):
        h = problem.h / problem.inner_refine if refined else problem.h
        nsteps = max(1, int(math.ceil((hi - lo) / h - 1e-12)))
        psi, phi, logs = _rk4_region(psi, phi, lo, hi, nsteps, m_eff,
                                     problem.sigma, energy, problem.renorm_every)
        log_total += logs
        if problem.shell_radius is not None and abs(hi - problem.shell_radius) < 1e-15:
            phi += (2.0 * problem.sigma * problem.alpha / problem.shell_radius) * psi

    if psi == 0.0:
        return 0.0
    ex = log_total + 0.25 * problem.r_max ** 2 + math.log(abs(psi))
    return math.copysign(math.exp(min(ex, 600.0)), psi)


def oracle_eigenvalues(problem: ShootingProblem, e_min: float = -0.3,
                       e_max: float = 6.0, step: float = 0.05,
                       xtol: float = 1e-10, count: int | None = None) -> list[float]:
    """Eigenvalues in (e_min, e_max): scan D(E) on a grid, refine by brentq.

    With ``count`` set, the scan window (and the integration range, which must
    reach past the classical turning point) grows until that many roots are
    found; only the first ``count`` are returned.
    """
    if e_max <= e_min:
        raise ValueError("need e_max > e_min")
    for _attempt in range(8):
        wall = math.sqrt(2.0 * max(e_max, 1.0)) + 8.0
        prb = replace(problem, r_max=wall) if problem.r_max < wall else problem
        n = int(math.ceil((e_max - e_min) / step)) + 1
        roots: list[float] = []
        e_prev = e_min
        d_prev = shoot(prb, e_prev)
        for i in range(1, n):
            e_cur = min(e_min + i * step, e_max)
            d_cur = shoot(prb, e_cur)
            if d_prev == 0.0:
                roots.append(e_prev)
            elif d_cur != 0.0 and (d_prev < 0.0) != (d_cur < 0.0):
                roots.append(brentq(lambda e: shoot(prb, e), e_prev, e_cur, xtol=xtol))
            e_prev, d_prev = e_cur, d_cur
            if count is not None and len(roots) >= count:
                return roots[:count]
            if e_cur >= e_max:
                break
        if count is None:
            return roots
        e_max += max(2.0, e_max - e_min)
    raise RuntimeError(
        f"found only {len(roots)} of {count} eigenvalues scanning up to "
        f"E = {e_max:g} (alpha={problem.alpha:g}, m={problem.m}, "
        f"sigma={problem.sigma:+g})")


def refine_step(problem: ShootingProblem, factor: float) -> ShootingProblem:
    """Same problem with the RK4 step scaled by ``factor`` (for convergence studies)."""
    return replace(problem, h=problem.h * factor)
