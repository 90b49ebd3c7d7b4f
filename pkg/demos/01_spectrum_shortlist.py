"""Walk the spectrum of the square and shortlist the Courant-sharp suspects.

The Dirichlet eigenvalues of (0, pi)^2 are the integers m^2 + n^2.  An
index k whose eigenfunctions can have k nodal domains must open a new
cluster and satisfy the Faber-Krahn inequality k / lambda_k <= pi / j01^2,
and the counting-function estimate caps the eigenvalue at 68.  Running the
filter leaves six indices; the nodal-topology demos settle the last three.
"""

from squarenodal import spectrum

entries = spectrum.enumerate_spectrum(73)
print(f"spectrum through 73: {len(entries)} indexed eigenvalues")
row = []
for e in entries:
    row.append(f"l_{e.k}={e.eigenvalue}")
    if len(row) == 6:
        print("  " + "  ".join(row))
        row = []
if row:
    print("  " + "  ".join(row))

print()
j01 = spectrum.bessel_j0_first_zero()
print(f"first zero of J_0 (series + bisection): {j01:.15f}")
print(f"Faber-Krahn ratio pi/j01^2 = {spectrum.faber_krahn_ratio():.12f} < 0.54323")
print(f"eigenvalue cap from the two bounds: {spectrum.candidate_eigenvalue_bound():.2f}")

print()
print("k, lambda_k, first-of-cluster, k/lambda_k, survives")
for audit in spectrum.courant_audit():
    if not audit.is_first_of_cluster:
        continue
    ratio = audit.k / audit.eigenvalue
    mark = "  <-- candidate" if audit.candidate else ""
    print(
        f"  {audit.k:2d}  {audit.eigenvalue:2d}   {str(audit.is_first_of_cluster):5s} "
        f"  {ratio:.4f}{mark}"
    )

print()
print(f"shortlist: {sorted(spectrum.courant_sharp_candidates())}")
print("indices 1, 2, 4 are Courant sharp outright; 5, 7, 9 fall to the sweeps")
