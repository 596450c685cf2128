"""Symbolic calculator for Knapp-Stein and Arthur R-groups of classical
p-adic groups, with a brute-force Weyl-quotient oracle."""

from .centralizer import (
    CentralizerDescriptor,
    ElementaryTwoGroup,
    Factor,
    FactorKind,
    arthur_r_group,
    centralizer,
    component_group,
    descriptor_rank,
)
from .jordan import (
    JordanData,
    is_reducible,
    jordan_parity_ok,
    parameter_of_sigma,
    validate_jordan,
)
from .levi import (
    DeltaFactor,
    FuzzBounds,
    InducingData,
    LeviShape,
    VerificationResult,
    WitnessRow,
    arthur_r_group_of_induced,
    knapp_stein_r_group,
    parameter_of_induced,
    random_instance,
    verify_theorem,
)
from .params import (
    Classification,
    CuspidalSymbol,
    DualityType,
    Family,
    GroupSpec,
    Parameter,
    ParameterEntry,
    Summand,
    canonicalize,
    classify,
    tensor_type,
    validate_parameter,
)
from .unitary import (
    UnitaryCuspidalSymbol,
    UnitaryJordanData,
    UnitarySummand,
    lambda_tensor,
    unitary_centralizer,
    unitary_jordan_condition,
    unitary_maximal_levi_r_group,
    validate_unitary_jordan,
)
from .weyl import SignedPermGroup, weyl_of_factor, weyl_quotient

__all__ = [
    "CentralizerDescriptor",
    "Classification",
    "CuspidalSymbol",
    "DeltaFactor",
    "DualityType",
    "ElementaryTwoGroup",
    "Factor",
    "FactorKind",
    "Family",
    "FuzzBounds",
    "GroupSpec",
    "InducingData",
    "JordanData",
    "LeviShape",
    "Parameter",
    "ParameterEntry",
    "SignedPermGroup",
    "Summand",
    "UnitaryCuspidalSymbol",
    "UnitaryJordanData",
    "UnitarySummand",
    "VerificationResult",
    "WitnessRow",
    "arthur_r_group",
    "arthur_r_group_of_induced",
    "canonicalize",
    "centralizer",
    "classify",
    "component_group",
    "descriptor_rank",
    "is_reducible",
    "jordan_parity_ok",
    "knapp_stein_r_group",
    "lambda_tensor",
    "parameter_of_induced",
    "parameter_of_sigma",
    "random_instance",
    "tensor_type",
    "unitary_centralizer",
    "unitary_jordan_condition",
    "unitary_maximal_levi_r_group",
    "validate_jordan",
    "validate_parameter",
    "validate_unitary_jordan",
    "verify_theorem",
    "weyl_of_factor",
    "weyl_quotient",
]
