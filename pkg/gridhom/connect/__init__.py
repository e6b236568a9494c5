from .classify import (
    BC0,
    BlockDecomposition,
    ConnectGeometry,
    check_connect_diagram,
    class_sizes,
    classify,
    summand_diagrams,
)
from .destabilize import H_O1, Destabilization, H_Hex, INSplit, destabilize, hexagons, split_IN
from .eta import ConnectedSum, eta, eta_composite, eta_failures
from .hexagons import Hexagon, empty_hexagons, hexagon_contents, hexagons_from
from .subcomplex import (
    ConnectComplex,
    FMap,
    build_C,
    check_f,
    closure_failures,
    connect_boundary,
    inclusion_map,
    inclusion_quasi_iso_check,
    map_f,
    quotient_acyclicity_check,
)

__all__ = [
    "BC0",
    "BlockDecomposition",
    "ConnectComplex",
    "ConnectGeometry",
    "ConnectedSum",
    "Destabilization",
    "FMap",
    "H_Hex",
    "H_O1",
    "Hexagon",
    "INSplit",
    "build_C",
    "check_connect_diagram",
    "check_f",
    "class_sizes",
    "classify",
    "closure_failures",
    "connect_boundary",
    "destabilize",
    "empty_hexagons",
    "eta",
    "eta_composite",
    "eta_failures",
    "hexagon_contents",
    "hexagons",
    "hexagons_from",
    "inclusion_map",
    "inclusion_quasi_iso_check",
    "map_f",
    "quotient_acyclicity_check",
    "split_IN",
    "summand_diagrams",
]
