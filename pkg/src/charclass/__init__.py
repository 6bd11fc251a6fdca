"""Exact characteristic classes of singular projective hypersurfaces.

Chow-ring arithmetic for P^n and its point blowups, Milnor numbers from
truncated local algebras, Fulton / mu / CSM / logarithmic Chern classes, and
executable checks of the identities relating them.
"""

from .chow import (
    Ambient,
    ChowClass,
    LineBundleClass,
    chern_dual,
    chern_tangent,
    chow_mul,
    class_dual,
    class_tensor,
    degree_int,
    inv_unit,
    parse_ambient,
    parse_chow_expr,
    pullback,
    pushforward,
    render_class,
)
from .classes import (
    HypersurfaceSpec,
    IdentityMismatchError,
    chi_complement,
    csm_hypersurface,
    csm_nc_union,
    csm_smooth_ci,
    euler,
    fulton_divisor,
    hypersurface_report,
    log_chern_dual,
    mu_class_isolated,
    multilog_chern_dual,
    nc_log_chern_dual,
)
from .milnor import (
    MilnorResult,
    SingularityData,
    SingularPoint,
    milnor_at,
    total_milnor_affine,
    verify_singular_point,
)
from .fixtures import FIXTURES, standard_nodal
from .poly import Poly, dehomogenize, gradient, parse_poly, to_text, translate_to_origin
from .verify import (
    VerificationReport,
    verify_aluffi_nc,
    verify_cor13,
    verify_multilog,
    verify_thm12_identity_map,
    verify_thm12_point_blowup,
)

__version__ = "0.1.0"
