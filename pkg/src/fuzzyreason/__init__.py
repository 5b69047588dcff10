"""Discrete fuzzy reasoning: FMP/FMT inference methods and reductive-property scoring."""

from .core import (
    FAMILIES,
    GOEDEL,
    GOGUEN,
    LUKASIEWICZ,
    R0,
    RESIDUAL_FAMILIES,
    ZADEH,
    DiscreteFuzzySet,
    MembershipError,
    OperatorFamily,
    UniverseMismatchError,
    complement,
    get_family,
    implies,
    intersection,
    is_disjoint,
    power_hedge,
    tnorm,
)
from .evaluation import (
    CaseSpec,
    Direction,
    RpcfResult,
    TargetMode,
    class_cases,
    dmm_base,
    expected_target,
    generate_premise,
    make_case,
    rpcf_aggregate,
    rpcf_overall,
    rpcf_single,
)
from .inference import (
    AarsForm,
    DmmBase,
    FuzzyRule,
    InferenceOutcome,
    SignForm,
    aars_fmp,
    aars_fmt,
    cri_fmp,
    cri_fmt,
    dmm_fmp,
    dmm_fmt,
    qip_fmp,
    qip_fmt,
    tip_fmp,
    tip_fmt,
)

__version__ = "0.1.0"
