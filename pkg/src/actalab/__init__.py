"""actalab: finite monoids, finite acts, tensor products and tossings,
interpolation and flatness conditions, axiom schemas, replacement skeletons.
"""

from .act import (
    Act,
    ActCongruence,
    ActMorphism,
    congruence_closure,
    enumerate_acts,
    free_right_act,
    morphism_is_valid,
    quotient_act,
    regular_act,
    restrict_act,
    subact_generated,
    validate_act,
)
from .axioms import (
    AxiomSet,
    Sentence,
    Term,
    act_axioms,
    emit_axioms,
    model_check,
    sentence_to_text,
    torsion_free_axioms,
    verify_axiomatisation,
)
from .conditions import (
    ConditionReport,
    check_condition,
    check_flat_bounded,
    check_pwf,
    check_wf,
    condition_profile,
)
from .errors import ActalabError, ValidationError
from .monoid import (
    FiniteMonoid,
    PairSubact,
    RightIdeal,
    R_set,
    ideal_intersection,
    is_left_cancellable,
    min_generating_set,
    monoid_from_indices,
    principal_right_ideal,
    r_set,
    validate_monoid,
)
from .replacement import ReplacementSet, replacement_skeletons, verify_replacement
from .tensor import (
    Skeleton,
    TensorProduct,
    Tossing,
    eval_delta,
    eval_gamma,
    find_tossing,
    format_tossing,
    induced_morphism,
    standard_tossing_act,
    tensor_equal,
    tensor_product,
    validate_tossing,
)
from .zoo import FAMILIES, build, designated_pair, family_report

__version__ = "0.1.0"
