"""Nodal sets of Dirichlet eigenfunctions of the square (0, pi)^2.

The package enumerates the spectrum, audits which indices can be Courant
sharp, evaluates the one-parameter eigenfunction families with their
gradients and Hessians, classifies every critical zero of the (1, R)
families, counts and dissects nodal domains on sign grids, and verifies
the classical structure results at desk scale.
"""

from .chebyshev import (
    ChebyshevCatalog,
    SpecialThetaCatalog,
    build_catalog,
    build_theta_catalog,
    u_eval,
    u_eval_with_derivatives,
)
from .critical_zeroes import (
    CriticalZero,
    case3_critical_zeroes,
    critical_zero_inventory,
    edge_critical_zeroes,
    find_critical_zeroes_numeric,
    interior_critical_zeroes,
    vertex_classification,
)
from .eigenfunction import SubstitutedForm, ThetaFamily
from .nodal_topology import (
    CheckerboardMask,
    DesingularizationReport,
    NodalGrid,
    NodalSummary,
    QPattern,
    QPatternKind,
    ResolutionInstability,
    SweepReport,
    SweepSample,
    ZStructureReport,
    boundary_hit_count,
    build_checkerboard,
    build_grid,
    checkerboard_violations,
    classify_q_pattern,
    closed_curve_count,
    count_nodal_domains,
    desingularization_check,
    interior_components_touch_lattice,
    lattice_points,
    nodal_summary,
    sweep,
    verify_z_structure,
)
from .render import RenderSpec, marching_segments, render_nodal_svg
from .spectrum import (
    CourantAudit,
    Mode,
    SpectrumEntry,
    bessel_j0_first_zero,
    counting_function,
    courant_audit,
    courant_sharp_candidates,
    enumerate_spectrum,
    faber_krahn_pass,
    faber_krahn_ratio,
    first_index_of_eigenvalue,
    pleijel_lower_bound,
)

__version__ = "0.1.0"
