from .algebra import (
    BigradedUModule,
    Bigrading,
    F2Matrix,
    ModuleElement,
    Monomial,
    TorsionSummand,
    tensor_and_tor,
)
from .common import (
    CanonicalCorner,
    CheckStatus,
    DestabilizationType,
    GridHomologyError,
    InputError,
    NeedDeeperProbe,
    OutputFormat,
    StateClass,
    VerificationFailure,
)
from .complexes import (
    ChainComplex,
    ChainMap,
    ComplexSlice,
    ConeComplex,
    GridComplex,
    build_minus_complex,
    cone,
    tensor,
)
from .config import RunConfig, Window
from .connect import (
    ConnectComplex,
    ConnectedSum,
    Destabilization,
    build_C,
    check_f,
    classify,
    destabilize,
    eta,
    eta_composite,
    hexagons,
    inclusion_quasi_iso_check,
    map_f,
    quotient_acyclicity_check,
    split_IN,
)
from .grid import (
    GridDiagram,
    connect,
    connected_sum_diagram,
    FIXTURE_DIR,
    load_diagram,
    load_fixture,
    make_diagram,
    mirror,
    parse_text,
    prepare_summand_left,
    prepare_summand_right,
    render_text,
    save_diagram,
    translate,
)
from .homology import (
    UModuleResult,
    blocked_homology,
    hat_homology,
    homology_iso_check,
    homology_slice,
    induced_map_is_iso,
    is_acyclic,
    locate_class,
    module_structure,
    tau,
)
from .legendrian import additivity_check, canonical_state, lambda_class, theta
from .report import CheckResult, HomologyReport, VerificationEvent, VerificationLog, VerificationReport
from .states import State, alexander, bigrading, enumerate_states, maslov

__all__ = [
    "additivity_check",
    "alexander",
    "BigradedUModule",
    "Bigrading",
    "bigrading",
    "blocked_homology",
    "build_C",
    "build_minus_complex",
    "CanonicalCorner",
    "canonical_state",
    "ChainComplex",
    "ChainMap",
    "check_f",
    "CheckResult",
    "CheckStatus",
    "classify",
    "ComplexSlice",
    "cone",
    "ConeComplex",
    "connect",
    "ConnectComplex",
    "connected_sum_diagram",
    "ConnectedSum",
    "Destabilization",
    "DestabilizationType",
    "destabilize",
    "enumerate_states",
    "eta",
    "eta_composite",
    "F2Matrix",
    "FIXTURE_DIR",
    "GridComplex",
    "GridDiagram",
    "GridHomologyError",
    "hat_homology",
    "hexagons",
    "homology_iso_check",
    "homology_slice",
    "HomologyReport",
    "inclusion_quasi_iso_check",
    "induced_map_is_iso",
    "InputError",
    "is_acyclic",
    "lambda_class",
    "load_diagram",
    "load_fixture",
    "locate_class",
    "make_diagram",
    "map_f",
    "maslov",
    "mirror",
    "module_structure",
    "ModuleElement",
    "Monomial",
    "NeedDeeperProbe",
    "OutputFormat",
    "parse_text",
    "prepare_summand_left",
    "prepare_summand_right",
    "quotient_acyclicity_check",
    "render_text",
    "RunConfig",
    "save_diagram",
    "split_IN",
    "State",
    "StateClass",
    "tau",
    "tensor",
    "tensor_and_tor",
    "theta",
    "TorsionSummand",
    "translate",
    "UModuleResult",
    "VerificationEvent",
    "VerificationFailure",
    "VerificationLog",
    "VerificationReport",
    "Window",
]

# VerificationReport holds a VerificationLog field
VerificationReport.model_rebuild()
