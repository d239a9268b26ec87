"""Coloured quiver mutation of type A_n.

Mutation (two cross-checked implementations), recognition of the
combinatorial mutation class, canonical forms and class enumeration,
weight/energy analysis, zero-part extraction, and a constructive
reduction of any member to a line quiver.
"""

from .core import (
    Arrow,
    ColouredQuiver,
    InvalidQuiverError,
    QuiverError,
    SimpleView,
    UnderlyingGraph,
    ValidationReport,
    is_connected,
    is_simple,
    linear_quiver,
    quiver_from_json,
    quiver_from_json_str,
    quiver_to_json,
    quiver_to_json_str,
    relabel,
    simple_view,
    underlying_graph,
    validate,
)
from .mutation import (
    MutationSequence,
    MutationStep,
    NotAMemberError,
    inverse_in_class,
    mutate,
    mutate_formula,
    mutate_power,
    mutate_steps,
)
from .classify import (
    CliqueDecomposition,
    MembershipVerdict,
    find_hole,
    is_member,
    require_member,
    triangle_sums,
    vertex_split,
)
from .enumeration import (
    BudgetExceeded,
    ClassLimitExceeded,
    MutationClass,
    TheoremAReport,
    are_isomorphic,
    canonical_form,
    generate_members,
    generate_member_representatives,
    labelled_class_size,
    mutation_class,
    verify_theorem_A,
)
from .analysis import (
    CliqueEnergy,
    EnergyReport,
    ZeroPart,
    all_cliques,
    allowed_cycle_weights,
    clique_energy,
    clique_number,
    maximal_cliques,
    path_weight,
    verify_energy,
    zero_part,
    zero_part_cycles,
    zero_part_valency,
)
from .reduction import (
    AlreadyLinearError,
    ExtremalWitness,
    find_almost_extremal,
    line_colours,
    make_extremal,
    recolour_line,
    reduce_to_line,
    shrink_extremal,
    verify_reduction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
