from .compare import (
    homology_dimensions,
    homology_iso_check,
    induced_map_is_iso,
    is_acyclic,
    required_range,
)
from .module import (
    ClassLocation,
    LineHomology,
    UModuleResult,
    default_probe_depth,
    hat_homology,
    locate_class,
    module_structure,
    probe_bottom,
    tau,
)
from .slices import HomologySlice, blocked_homology, homology_slice, u_action

__all__ = [
    "homology_dimensions",
    "homology_iso_check",
    "induced_map_is_iso",
    "is_acyclic",
    "required_range",
    "ClassLocation",
    "LineHomology",
    "UModuleResult",
    "default_probe_depth",
    "hat_homology",
    "locate_class",
    "module_structure",
    "probe_bottom",
    "tau",
    "HomologySlice",
    "blocked_homology",
    "homology_slice",
    "u_action",
]
