"""Nonabelian q-tensor squares of small finite groups.

Finite groups are dense Cayley tables; the q-tensor square and q-exterior
square are realized from their defining presentations by coset
enumeration, and the derived invariants (q-Schur and Bogomolov multipliers,
exterior centers) and isoclinism relations are computed on the realized
groups.
"""

from .catalog import builtin, group_from_json, group_to_json, load_group
from .cohomology import schur_multiplier_cohomology
from .errors import (
    EnumerationLimit,
    HypothesisNotMet,
    InternalInconsistency,
    InvalidAmalgam,
    InvalidGroup,
    NotAbelian,
    NotNormal,
    OrderLimit,
    QTensorError,
    SearchCap,
)
from .fp import Presentation, abelianized_invariants, coset_enumerate, realize, tietze_simplify
from .groups import (
    AbelianInvariants,
    FiniteGroup,
    Homomorphism,
    Subgroup,
    abelian_invariants,
    are_isomorphic,
    center,
    derived_subgroup,
    find_isomorphism,
    frattini_subgroup,
    minimal_generator_count,
    product,
    quotient,
)
from .isoclinism import IsoclinismWitness, check, check_weak
from .tensor import (
    CenterTower,
    QTensorSquare,
    WedgeSquare,
    build_presentation,
    center_tower,
    conjugation_action,
    eta,
    exterior_center,
    invariant_report,
    is_capable,
    multipliers,
    realize_tensor,
    realize_wedge,
    schur_multiplier,
    splitting_alpha,
    splitting_beta,
    wedge,
)

__all__ = [name for name in dir() if not name.startswith("_")]
