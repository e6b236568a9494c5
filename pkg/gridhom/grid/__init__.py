from .diagram import (
    FIXTURE_DIR,
    GridDiagram,
    Square,
    from_json,
    is_valid,
    load_diagram,
    load_fixture,
    make_diagram,
    mirror,
    parse_text,
    render_text,
    save_diagram,
    to_json,
    translate,
    transpose,
    validate,
)
from .summands import (
    MarkingLabels,
    canonical_marking_labels,
    connect,
    connected_sum_diagram,
    destabilized_diagram,
    has_bottom_right_x,
    has_top_left_x,
    normalize_left,
    normalize_right,
    prepare_summand_left,
    prepare_summand_right,
)

__all__ = [
    "FIXTURE_DIR",
    "GridDiagram",
    "MarkingLabels",
    "Square",
    "canonical_marking_labels",
    "connect",
    "connected_sum_diagram",
    "destabilized_diagram",
    "from_json",
    "has_bottom_right_x",
    "has_top_left_x",
    "is_valid",
    "load_diagram",
    "load_fixture",
    "make_diagram",
    "mirror",
    "normalize_left",
    "normalize_right",
    "parse_text",
    "prepare_summand_left",
    "prepare_summand_right",
    "render_text",
    "save_diagram",
    "to_json",
    "translate",
    "transpose",
    "validate",
]
