"""
A flux shell shrinking onto the singular tube
=============================================

Spreading the flux on a thin shell of radius R makes the problem
completely regular: inside the shell there is no flux at all, outside it
the full tube strength, and the spin couples only through a delta term on
the shell itself.  Quantized energies follow from a matching condition at
R.  As R -> 0 the levels converge to the singular-tube spectrum computed
from the regular-at-origin condition — including the zero mode, which the
shell pins at E = 0 exactly for every finite radius.
"""

from fluxtube import TubeModel, find_xi_roots, xi_limit_table

# The spectral parameter xi = (|m+alpha| + m+alpha + 1 + 2 sigma)/2 - E
# of the n-th level must approach -n.  Watch it happen in the repelled
# m = 0 channel at alpha = 0.5:
print("xi_n(R) -> -n  (alpha = 0.5, m = 0, spin up)")
print(f"{'R':>6} {'xi_0':>12} {'xi_1':>12} {'xi_2':>12}")
for radius in (0.5, 0.2, 0.1, 0.05, 0.02):
    roots = find_xi_roots(TubeModel(radius, 0.5, 0, 0.5), n_max=2)
    print(f"{radius:6.2f} " + " ".join(f"{r.xi:12.6f}" for r in roots))

# The attracted spin channel carries the zero mode.  The lowest matching
# root sits at E = 0 for *every* shell radius — no limit needed — while
# the excited levels drift down onto the singular-tube partner energies:
print("\nenergies in the attracted channel (alpha = 0.5, m = 0, spin down)")
print(f"{'R':>6} {'E_0':>14} {'E_1':>12} {'E_2':>12}")
for radius in (0.5, 0.2, 0.1, 0.05):
    roots = find_xi_roots(TubeModel(radius, 0.5, 0, -0.5), n_max=2)
    print(f"{radius:6.2f} " + " ".join(f"{r.energy:{w}.{p}f}"
          for r, w, p in zip(roots, (14, 12, 12), (10, 6, 6))))

# xi_limit_table packages the same sweep, with deviations |xi_n + n| and
# matching residuals; verify=True would cross-check every root against an
# independent ODE-shooting oracle.
rows = xi_limit_table(0, 0.5, 0.5, radii=(0.3, 0.1, 0.05), n_max=1)
print("\nsummary table")
for row in rows:
    print(f"  R={row.radius:5.2f} n={row.n}  xi={row.xi:11.6f}  "
          f"|xi+n|={row.deviation:9.3e}  residual={row.residual:.1e}")
