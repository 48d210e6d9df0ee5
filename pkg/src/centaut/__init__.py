"""Central automorphism minimality analysis for finite p-groups.

The library answers one question about a nonabelian p-group given as a
Cayley table: does it admit only the central automorphisms it must have
(those induced by its second center), or extra ones?  Structural rules
decide most cases from invariant data; a brute-force enumeration of the
candidate maps provides the ground truth they are verified against.
"""

from .abelian import (
    AbelianBasis,
    AbelianInvariants,
    abelian_basis,
    abelian_invariants,
    embeds_bruteforce,
    embeds_invariants,
    hom_invariants,
)
from .central import (
    DEFAULT_HOM_CAP,
    CentralAutReport,
    adney_yen_check,
    all_automorphisms,
    central_automorphism_count,
    is_central_automorphism,
    is_minimal_bruteforce,
    stability_count,
)
from .criteria import (
    MINIMAL,
    NOT_MINIMAL,
    UNDECIDED,
    NecessaryConditions,
    Verdict,
    classify,
    classify_report,
    coclass_predicate,
    evaluate_rules,
    necessary_conditions,
    order_predicate,
    theorem21_predicate,
)
from .errors import CentautError
from .families import builtin, central_product, list_builtins, parse_group_spec
from .groupio import (
    Manifest,
    ManifestEntry,
    default_corpus,
    read_group,
    read_manifest,
    resolve_source,
    write_group,
    write_manifest,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    Group,
    Permutation,
    direct_product,
    element_order,
    group_from_cayley_table,
    group_from_permutations,
    semidirect_product,
)
from .harness import (
    AnalysisRecord,
    VerificationReport,
    analyze_source,
    format_report,
    run_verification,
)
from .structure import (
    StructureReport,
    Subgroup,
    abelianization,
    center,
    central_series,
    closure,
    derived_subgroup,
    frattini_subgroup,
    minimal_generator_count,
    quotient,
    socle_of,
    structure_report,
)

__version__ = "0.1.0"
