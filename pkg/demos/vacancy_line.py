"""
The vacancy line is a boundary-condition artifact
=================================================

At integer flux alpha the channel m = -alpha has radial exponent zero for
the repelled spin component: those eigenfunctions tend to a nonzero
constant at the origin.  Demanding that wavefunctions *vanish* at the
origin silently deletes the whole family — an apparent line of missing
states in the (E, m + sigma) plane.  The physical regular-at-origin
condition keeps them, and the line closes.
"""

from fluxtube import vacancy_line_compare

cmp = vacancy_line_compare(alpha=1.0, e_max=4.5, m_min=-4, m_max=2)

print(f"alpha = {cmp.alpha}:")
print(f"  states with E <= 4.5 under regular-at-origin:   "
      f"{len(cmp.regular_condition)}")
print(f"  states with E <= 4.5 under vanishing-at-origin: "
      f"{len(cmp.vanishing_condition)}")

# The difference is exactly the m + alpha = 0 family, one state per level:
print("\nmissing under the vanishing condition:")
for s in cmp.missing_under_vanishing:
    print(f"  E = {s.energy:4.1f}  (n={s.label.n}, m={s.label.m}, "
          f"sigma={s.label.sigma:+.1f}, m+sigma={s.label.m + s.label.sigma:+.1f})")

# Deleting them would also orphan their supersymmetric partners:
print()
for note in cmp.pairing_notes:
    print(f"  {note}")
