"""
Landau levels pierced by a flux tube
====================================

A charged spin-1/2 particle in a uniform magnetic field has the familiar
evenly spaced Landau levels.  Threading a singular flux tube of strength
alpha (in units of the flux quantum) through the origin shifts every level
that can feel the origin — and leaves exact zero-energy modes behind.
"""

from fluxtube import FluxConfig, enumerate_states, magnetic_units

# With no tube at all the spectrum is pure Landau: integer energies in
# units of hbar*omega, massively degenerate in m.
for alpha in (0.0, 0.5):
    states = enumerate_states(FluxConfig(alpha), e_max=3.2, m_min=-3, m_max=3)
    print(f"\nalpha = {alpha}:  {len(states)} states with E <= 3.2, "
          f"m in [-3, 3]")
    print(f"{'E':>6} {'n':>3} {'m':>3} {'sigma':>6} {'m+sigma':>8}  tag")
    for s in states:
        print(f"{s.energy:6.2f} {s.label.n:3d} {s.label.m:3d} "
              f"{s.label.sigma:+6.1f} {s.label.m + s.label.sigma:8.1f}  "
              f"{s.label.tag}")

# The tube fractures each Landau level: states with m + alpha > 0 are
# pushed up by the flux, states that can see the attractive contact term
# come down, and the spin-down channel keeps one exact E = 0 state for
# every m with m + alpha < 1.
zero = [s for s in enumerate_states(FluxConfig(0.5), 0.5, -6, 6)
        if s.label.tag == "zero_mode"]
print(f"\nzero modes at alpha = 0.5: m = {sorted(s.label.m for s in zero)}")

# Everything above is dimensionless.  The magnetic length lambda and the
# cyclotron quantum hbar*omega restore SI units for any field strength:
units = magnetic_units(1.0)
print(f"\nat B = 1 T:  lambda = {units.lambda_m:.6e} m,  "
      f"hbar*omega = {units.hbar_omega_mev:.8f} meV")
