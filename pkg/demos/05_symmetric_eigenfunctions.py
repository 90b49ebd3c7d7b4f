"""Closed-curve anatomy of the half-sum and half-difference eigenfunctions.

At theta = pi/4 and 3pi/4 the nodal sets decompose into the boundary, the
diagonals that belong to them, and a stack of disjoint simple closed
curves winding between the lattice rings: r - 1 curves for even R = 2r on
either side, and r resp. r - 1 curves for odd R.  The counts fall out of
the factored Chebyshev polynomial and are cross-checked against raw grid
extraction with the diagonal bands removed; the checkerboard containment
is audited along the way.
"""

import math

from squarenodal import nodal_topology

print(" R   plus curves (expect)   minus curves (expect)   domains +/-   ok")
for R in range(2, 13):
    rep = nodal_topology.verify_z_structure(R)
    p, m = rep.plus, rep.minus
    print(
        f"{R:2d}   {p.closed_curves} ({p.expected_curves})"
        f"{'':14s}{m.closed_curves} ({m.expected_curves})"
        f"{'':12s}{p.domain_count:2d} / {m.domain_count:2d}     {rep.ok}"
    )

print()
print("grid arcs = curves x diagonal cuts:")
rep = nodal_topology.verify_z_structure(9)
print(
    f"  R=9 plus: {rep.plus.grid_arcs} arcs / divisor {rep.plus.arc_divisor} "
    f"= {rep.plus.grid_arcs // rep.plus.arc_divisor} curves"
)
print(
    f"  R=9 minus: {rep.minus.grid_arcs} arcs / divisor {rep.minus.arc_divisor} "
    f"= {rep.minus.grid_arcs // rep.minus.arc_divisor} curves"
)

print()
print("checkerboard containment (violations must be 0):")
for R, theta in ((8, 0.2 * math.pi), (9, 0.6 * math.pi), (12, 0.3)):
    bad = nodal_topology.checkerboard_violations(R, theta)
    print(f"  R = {R:2d}, theta = {theta/math.pi:.3f} pi: {bad} violations")
