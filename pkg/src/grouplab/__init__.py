"""grouplab: finite-group computation engine and nilpotency verification.

Core objects: ``FiniteGroup`` (fully enumerated multiplication
structure), ``Subgroup``/``SubgroupLattice`` (bit-vector subgroup
algebra), ``Section`` (subgroup quotients) and the verification drivers
built on top of them. The hot kernels run on a compiled backend when the
extension is built, with a pure-Python fallback selected at import time.
"""

from ._kernels import BACKEND as kernel_backend
from .errors import (
    CapExceeded,
    CertificateFailure,
    GroupLabError,
    InvalidAction,
    InvalidSpec,
    LatticeCapExceeded,
    NilpotencyTestDisagreement,
    NotNormal,
    NotSchmidt,
    ParseError,
)
from .groups import (
    FiniteGroup,
    alternating,
    build_group,
    commutator,
    cyclic,
    dihedral,
    direct_product,
    extraspecial,
    from_cayley_file,
    from_cayley_text,
    group375,
    semidirect_product,
    symmetric,
)
from .invariants import (
    GroupProfile,
    center,
    derived_series,
    derived_subgroup,
    element_order,
    exponent,
    phi,
    profile,
)
from .lattice import (
    Subgroup,
    SubgroupLattice,
    all_subgroups,
    frattini,
    is_normal,
    maximal_subgroups,
    sylow_subgroups,
    verify_schmidt_lattice,
)
from .nilpotency import (
    SchmidtCertificate,
    is_nilpotent_lcs,
    is_nilpotent_sylow,
    is_schmidt,
    lower_central_series,
    nilpotency_checked,
    schmidt_certificate,
)
from .perms import Permutation, close_generators
from .sections import Section, as_group, quotient, sections
from .specs import ActionSpec, GroupSpec, parse_spec
from .verify import (
    DEFAULT_CATALOG,
    FamilyCheck,
    TheoremReport,
    check_condition2,
    family_phi_checks,
    find_witness,
    run_suite,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "ActionSpec",
    "CapExceeded",
    "CertificateFailure",
    "DEFAULT_CATALOG",
    "FamilyCheck",
    "FiniteGroup",
    "GroupLabError",
    "GroupProfile",
    "GroupSpec",
    "InvalidAction",
    "InvalidSpec",
    "LatticeCapExceeded",
    "NilpotencyTestDisagreement",
    "NotNormal",
    "NotSchmidt",
    "ParseError",
    "Permutation",
    "SchmidtCertificate",
    "Section",
    "Subgroup",
    "SubgroupLattice",
    "TheoremReport",
    "all_subgroups",
    "alternating",
    "as_group",
    "build_group",
    "center",
    "check_condition2",
    "close_generators",
    "commutator",
    "cyclic",
    "derived_series",
    "derived_subgroup",
    "dihedral",
    "direct_product",
    "element_order",
    "exponent",
    "extraspecial",
    "family_phi_checks",
    "find_witness",
    "frattini",
    "from_cayley_file",
    "from_cayley_text",
    "group375",
    "is_nilpotent_lcs",
    "is_nilpotent_sylow",
    "is_normal",
    "is_schmidt",
    "kernel_backend",
    "lower_central_series",
    "maximal_subgroups",
    "nilpotency_checked",
    "parse_spec",
    "phi",
    "profile",
    "quotient",
    "run_suite",
    "schmidt_certificate",
    "sections",
    "semidirect_product",
    "sylow_subgroups",
    "symmetric",
    "verify_schmidt_lattice",
    "verify_theorem",
]
