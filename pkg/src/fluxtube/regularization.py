"""Finite-size flux tube: shell matching, its roots, and the shrinking limit.

The singular point flux is regularized by spreading the same total flux on
an infinitesimally thin shell of radius R.  Inside the shell there is no
flux, so the regular solution carries the bare angular number m:

    psi_in(r)  = r^{|m|}      e^{-r^2/2} M(xi_in,  |m|+1,       r^2),
    xi_in  = (|m| + m + 1 + 2 sigma)/2 - E,

while outside the full m + alpha acts and the decaying solution is

    psi_out(r) = r^{|m+alpha|} e^{-r^2/2} U(xi_out, |m+alpha|+1, r^2),
    xi_out = (|m+alpha| + m + alpha + 1 + 2 sigma)/2 - E.

The shell's delta-function magnetic moment term produces a derivative jump

    psi'(R+) - psi'(R-) = (2 sigma alpha / R) psi(R),

so an eigenvalue is a zero (in E, or equivalently in xi_out) of

    F(E) = psi_out'(R) - psi_in'(R) psi_out(R)/psi_in(R)
           - (2 sigma alpha / R) psi_out(R).

Root scanning uses the pole-free cross form W = F * psi_in(R) =
psi_out' psi_in - psi_in' psi_out - (2 sigma alpha / R) psi_out psi_in,
which is entire in E.  As R -> 0 the roots xi_n approach the nonpositive
integers -n, reproducing the point-flux spectrum; `xi_limit_table` tabulates
that migration, optionally cross-checked against the shooting oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .specfun import kummer_m, kummer_u

__all__ = [
    "TubeModel",
    "MatchResult",
    "LimitRow",
    "inside_solution",
    "outside_solution",
    "matching_function",
    "matching_wronskian",
    "find_xi_roots",
    "xi_limit_table",
    "u_zero_scan",
]


@dataclass(frozen=True)
class TubeModel:
    """A flux shell of radius R in the channel (m, sigma) with total flux alpha."""

    radius: float
    alpha: float
    m: int
    sigma: float

    def __post_init__(self):
        if self.radius <= 0.0:
            raise ValueError(f"shell radius must be positive, got {self.radius}")
        if self.sigma not in (0.5, -0.5):
            raise ValueError(f"sigma must be +0.5 or -0.5, got {self.sigma!r}")

    @property
    def xi_offset(self) -> float:
        """C such that xi_out = C - E."""
        ma = self.m + self.alpha
        return 0.5 * (abs(ma) + ma + 1.0 + 2.0 * self.sigma)

    def xi_from_energy(self, energy: float) -> float:
        return self.xi_offset - energy

    def energy_from_xi(self, xi: float) -> float:
        return self.xi_offset - xi


def inside_solution(model: TubeModel, energy: float, r: float) -> tuple[float, float]:
    """(psi_in, dpsi_in/dr) of the interior regular solution at radius r."""
    am = abs(float(model.m))
    b = am + 1.0
    a = 0.5 * (am + model.m + 1.0 + 2.0 * model.sigma) - energy
    z = r * r
    m0 = kummer_m(a, b, z)
    m1 = kummer_m(a + 1.0, b + 1.0, z)
    ez = math.exp(-0.5 * z)
    val = r ** am * ez * m0
    der = ez * (am * r ** (am - 1.0) * m0
                + r ** (am + 1.0) * (2.0 * (a / b) * m1 - m0))
    return val, der


def outside_solution(model: TubeModel, energy: float, r: float) -> tuple[float, float]:
    """(psi_out, dpsi_out/dr) of the exterior decaying solution at radius r."""
    ma = model.m + model.alpha
    am = abs(ma)
    b = am + 1.0
    a = model.xi_from_energy(energy)
    z = r * r
    u0 = kummer_u(a, b, z)
    u1 = kummer_u(a + 1.0, b + 1.0, z)
    ez = math.exp(-0.5 * z)
    val = r ** am * ez * u0
    der = ez * (am * r ** (am - 1.0) * u0
                - r ** (am + 1.0) * (2.0 * a * u1 + u0))
    return val, der


def _terms(model: TubeModel, energy: float) -> tuple[float, float, float, float, float]:
    r = model.radius
    vi, di = inside_solution(model, energy, r)
    vo, do = outside_solution(model, energy, r)
    jump = 2.0 * model.sigma * model.alpha / r
    return vi, di, vo, do, jump


def matching_function(model: TubeModel, energy: float) -> float:
    """F(E): the logarithmic-derivative jump defect at the shell.

    Zero exactly at shell eigenvalues.  Normalized against the interior
    amplitude; if psi_in(R) happens to vanish the roles are swapped so the
    value stays finite (the cross form `matching_wronskian` has no such
    poles and is what the root scan uses).
    """
    vi, di, vo, do, jump = _terms(model, energy)
    w = do * vi - di * vo - jump * vo * vi
    if abs(vi) >= abs(vo):
        if vi == 0.0:
            raise ZeroDivisionError("both solutions vanish at the shell")
        return w / vi
    return w / vo


def matching_wronskian(model: TubeModel, energy: float) -> tuple[float, float]:
    """(W, scale): pole-free cross form and the sum of its term magnitudes."""
    vi, di, vo, do, jump = _terms(model, energy)
    t1 = do * vi
    t2 = -di * vo
    t3 = -jump * vo * vi
    return t1 + t2 + t3, abs(t1) + abs(t2) + abs(t3)


@dataclass(frozen=True)
class MatchResult:
    """One shell eigenvalue: root of the matching condition."""

    xi: float
    energy: float
    radius: float
    bracket: tuple[float, float]
    iterations: int
    residual: float  # |W| at the root over the sum of |term| magnitudes


def find_xi_roots(model: TubeModel, n_max: int = 2, *,
                  xi_start: float | None = None, step: float = 0.02,
                  xtol: float = 1e-13) -> list[MatchResult]:
    """The matching roots xi_0 > xi_1 > ... > xi_{n_max}, scanning downward.

    Starts below every possible level (xi_start defaults to the xi of
    E = -0.3) and walks down in xi, refining every sign change of the
    cross form with brentq.  Roots come out ordered by decreasing xi =
    increasing energy.  In the channel that carries the regular tower
    (sigma matching the sign of alpha, and the repelled spin for alpha > 0)
    the n-th entry is the shell counterpart of the point-flux level with
    xi = -n; in the attracted channel the list instead starts with the
    pinned zero mode where one exists.  Fewer results than requested means
    the scan floor was reached.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    n_roots = n_max + 1
    if xi_start is None:
        xi_start = model.xi_offset + 0.3
    xi_floor = -(n_roots - 1) - 1.7

    def w_of_xi(xi: float) -> float:
        return matching_wronskian(model, model.energy_from_xi(xi))[0]

    results: list[MatchResult] = []
    xi_prev = xi_start
    w_prev = w_of_xi(xi_prev)
    xi_cur = xi_prev
    while xi_cur > xi_floor and len(results) < n_roots:
        xi_cur = xi_prev - step
        w_cur = w_of_xi(xi_cur)
        if w_prev == 0.0 or (w_cur != 0.0 and (w_prev < 0.0) != (w_cur < 0.0)):
            if w_prev == 0.0:
                root, iters = xi_prev, 0
            else:
                root, info = brentq(w_of_xi, xi_cur, xi_prev, xtol=xtol,
                                    full_output=True)
                iters = info.iterations
            energy = model.energy_from_xi(root)
            w, scale = matching_wronskian(model, energy)
            residual = abs(w) / scale if scale > 0.0 else abs(w)
            results.append(MatchResult(root, energy, model.radius,
                                       (xi_cur, xi_prev), iters, residual))
        xi_prev, w_prev = xi_cur, w_cur
    return results


@dataclass(frozen=True)
class LimitRow:
    """One (R, n) cell of the shrinking-shell table."""

    radius: float
    n: int
    xi: float | None
    energy: float | None
    deviation: float | None  # xi - (-n), signed
    residual: float | None
    oracle_energy: float | None = None
    oracle_diff: float | None = None
    note: str = ""


def xi_limit_table(m: int, sigma: float, alpha: float, radii, n_max: int = 2, *,
                   verify: bool = False) -> list[LimitRow]:
    """Migration of the shell roots toward the point-flux tower as R shrinks.

    For each shell radius the first ``n_max + 1`` roots are tabulated with
    their deviation xi_n + n from the limit.  The xi = -n tower is the
    structure of the channel carrying the regular point-flux branch (sigma
    matching the sign of alpha); in the attracted channel the limit set
    mixes zero modes and superpartner levels, so there the deviation column
    is reported but is not expected to shrink.  ``verify=True`` recomputes
    each energy with the independent shooting oracle and reports the
    difference (slower: one ODE scan per radius).
    """
    rows: list[LimitRow] = []
    for radius in radii:
        model = TubeModel(radius, alpha, m, sigma)
        roots = find_xi_roots(model, n_max=n_max)
        oracle_evs: list[float] | None = None
        if verify:
            from .oracle import ShootingProblem, oracle_eigenvalues

            e_hi = model.energy_from_xi(-(n_max + 0.6))
            problem = ShootingProblem(alpha=alpha, m=m, sigma=sigma,
                                      shell_radius=radius,
                                      r_max=math.sqrt(2.0 * max(e_hi, 1.0)) + 8.0)
            oracle_evs = oracle_eigenvalues(problem, e_min=-0.3, e_max=e_hi)
        for n in range(n_max + 1):
            if n >= len(roots):
                rows.append(LimitRow(radius, n, None, None, None, None,
                                     note="root not found"))
                continue
            res = roots[n]
            o_e = o_d = None
            note = ""
            if verify:
                if oracle_evs is not None and n < len(oracle_evs):
                    o_e = oracle_evs[n]
                    o_d = res.energy - o_e
                else:
                    note = "oracle root missing"
            rows.append(LimitRow(radius, n, res.xi, res.energy,
                                 res.xi + n, res.residual, o_e, o_d, note))
    return rows


def u_zero_scan(b: float, z: float, a_range: tuple[float, float] = (-5.5, 0.5),
                steps: int = 600) -> list[tuple[float, float]]:
    """Sign-change intervals of a -> U(a, b, z) on a_range (one per zero).

    For small z the zeros sit near the nonpositive integers (where
    1/Gamma(a) kills the z^{1-b} singular part), which is the structural
    reason the shell roots migrate to xi = -n.  Returns the bracketing
    (a_lo, a_hi) grid intervals; empty if the function keeps one sign.
    """
    a_lo, a_hi = a_range
    if not (a_lo < a_hi) or steps < 2:
        raise ValueError("need a_lo < a_hi and steps >= 2")
    grid = [a_lo + (a_hi - a_lo) * i / steps for i in range(steps + 1)]
    f = lambda a: kummer_u(a, b, z)
    intervals: list[tuple[float, float]] = []
    f_prev = f(grid[0])
    for a_prev, a_cur in zip(grid[:-1], grid[1:]):
        f_cur = f(a_cur)
        if f_prev == 0.0 or (f_cur != 0.0 and (f_prev < 0.0) != (f_cur < 0.0)):
            intervals.append((a_prev, a_cur))
        f_prev = f_cur
    return intervals
