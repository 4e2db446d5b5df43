from .algebra import (
    affine,
    column_minima,
    column_sums,
    cyclic_aggregate_min,
    cyclic_aggregate_sum,
    meet,
    mix,
    negate,
    permute,
    subjective_mix,
)
from .concepts import (
    ANTI_BENTHAM,
    BENTHAM,
    RAWLS,
    SUB_BENTHAM,
    SUB_RAWLS,
    UNANIMOUS,
    ConceptKind,
    SolutionConceptId,
    anti_bentham,
    bentham,
    dictator,
    dictator_concept,
    evaluate,
    format_set,
    rawls,
    sub_bentham,
    sub_rawls,
    unanimous,
)
from .profile import (
    Alternative,
    BeliefMatrix,
    LinearOrder,
    MixtureWeight,
    Permutation,
    PerturbationFamily,
    ProfileError,
    UtilityProfile,
    format_rational,
    grid_profiles,
    perturbation_member,
    to_rational,
)

__all__ = [
    "ANTI_BENTHAM",
    "BENTHAM",
    "RAWLS",
    "SUB_BENTHAM",
    "SUB_RAWLS",
    "UNANIMOUS",
    "Alternative",
    "BeliefMatrix",
    "ConceptKind",
    "LinearOrder",
    "MixtureWeight",
    "Permutation",
    "PerturbationFamily",
    "ProfileError",
    "SolutionConceptId",
    "UtilityProfile",
    "affine",
    "anti_bentham",
    "bentham",
    "column_minima",
    "column_sums",
    "cyclic_aggregate_min",
    "cyclic_aggregate_sum",
    "dictator",
    "dictator_concept",
    "evaluate",
    "format_rational",
    "format_set",
    "grid_profiles",
    "meet",
    "mix",
    "negate",
    "permute",
    "perturbation_member",
    "rawls",
    "sub_bentham",
    "sub_rawls",
    "subjective_mix",
    "to_rational",
    "unanimous",
]
