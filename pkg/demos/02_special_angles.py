"""Extremum angles and the catalog of special mixing angles for R = 8 and 9.

Everything topological about the nodal sets of the eigenvalue 1 + R^2
reduces to the profile t -> U_{R-1}(cos t): the angles q_j where it turns
around, the extremum sizes M_j, and the mixing angles theta at which two
profile values can cancel.  Those cancellation angles are the only
parameters at which the nodal topology can change.
"""

import math

from squarenodal import chebyshev

for R in (8, 9):
    cat = chebyshev.build_catalog(R)
    tcat = chebyshev.build_theta_catalog(R)
    print(f"R = {R}")
    print("  q/pi:      " + " ".join(f"{v/math.pi:.6f}" for v in cat.q))
    print("  M_j:       " + " ".join(f"{v:+.6f}" for v in cat.extrema))
    print("  T_o/pi:    " + " ".join(f"{v/math.pi:.6f}" for v in tcat.T_o))
    print("  T_x/pi:    " + " ".join(f"{v/math.pi:.6f}" for v in tcat.T_x))
    print("  T_y/pi:    " + " ".join(f"{v/math.pi:.6f}" for v in tcat.T_y))
    print(f"  theta_minus/pi: {cat.theta_minus/math.pi:.12f}")
    print(f"  minimum of U_{R-1} on [-1,1]: {cat.min_value:.6f} at u = {cat.min_location:.6f}")
    print()

print("structure notes:")
print("  even R: theta_minus = pi/4 exactly (the profile reaches -R at u = -1)")
print("  pairs (i, j) and (j, i) give angles summing to pi/2 modulo pi")
tcat8 = chebyshev.build_theta_catalog(8)
i, j = 2, 5
a, b = tcat8.interior[(i, j)], tcat8.interior[(j, i)]
print(f"  example, R=8: theta({i},{j}) + theta({j},{i}) = {(a + b)/math.pi:.6f} pi")
