"""Tests for gridhom.grid.diagram."""

import json

import pytest

from gridhom.common import BadCharacter, NotAKnot, NotPermutation, RaggedRows, SharedSquare
from gridhom.grid import (
    GridDiagram,
    from_json,
    is_valid,
    load_diagram,
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


class TestParseText:
    """Test the text grid format."""

    def test_parse_unknot(self):
        """Test that the top line is the top row."""
        d = parse_text("OX\nXO")
        assert d.o_row == (2, 1)
        assert d.x_row == (1, 2)

    def test_parse_ignores_spaces_and_blank_lines(self):
        """Test that padding is ignored."""
        assert parse_text("\nO X\nX O\n\n") == parse_text("OX\nXO")

    def test_parse_trefoil(self, trefoil_right):
        """Test the bundled right-handed trefoil."""
        assert trefoil_right.o_row == (5, 4, 3, 2, 1)
        assert trefoil_right.x_row == (3, 2, 1, 5, 4)

    def test_ragged_rows(self):
        """Test that a short line is rejected."""
        with pytest.raises(RaggedRows, match="line 2 has 1 squares"):
            parse_text("OX\nX")

    def test_empty_text(self):
        """Test that empty input is rejected."""
        with pytest.raises(RaggedRows, match="empty"):
            parse_text("\n\n")

    def test_bad_character(self):
        """Test that unknown characters are rejected."""
        with pytest.raises(BadCharacter, match="unexpected 'A'"):
            parse_text("OA\nXO")

    def test_missing_marking(self):
        """Test that every column missing a marking is reported."""
        with pytest.raises(NotPermutation, match=r"columns \[2\] have no O; columns \[1\] have no X"):
            parse_text("O.\n.X")

    def test_missing_x_only(self):
        """Test a grid whose O's are complete but whose X is missing."""
        with pytest.raises(NotPermutation, match=r"^columns \[2\] have no X$"):
            parse_text("XO\nO.")

    def test_repeated_row(self):
        """Test that two O's in one row are rejected."""
        with pytest.raises(NotPermutation, match="o_row is not a permutation"):
            parse_text("OO\nXX")

    def test_render_round_trip(self, trefoil_left):
        """Test that rendering reproduces the parsed text."""
        assert render_text(trefoil_left) == ".X..O\nX..O.\n..O.X\n.O.X.\nO.X.."
        assert parse_text(render_text(trefoil_left)) == trefoil_left


class TestValidate:
    """Test the marking conditions."""

    def test_shared_square(self):
        """Test that an O and X in one square are rejected."""
        with pytest.raises(SharedSquare, match="column 1, row 1"):
            make_diagram([1, 2], [1, 2])

    def test_link_rejected(self):
        """Test that a two-component link is rejected."""
        with pytest.raises(NotAKnot, match="2-component link"):
            make_diagram([1, 2, 3, 4], [2, 1, 4, 3])

    def test_wrong_length(self):
        """Test that short row lists are rejected."""
        with pytest.raises(NotPermutation, match="has 1 entries, expected 2"):
            validate(GridDiagram(n=2, o_row=(1,), x_row=(2, 1)))

    def test_is_valid(self, unknot2):
        """Test the boolean form of validation."""
        assert is_valid(unknot2)
        assert not is_valid(GridDiagram(n=2, o_row=(1, 1), x_row=(2, 2)))

    def test_component_count(self):
        """Test counting link components."""
        d = GridDiagram(n=4, o_row=(1, 2, 3, 4), x_row=(2, 1, 4, 3))
        assert d.component_count() == 2

    def test_marking_at(self, unknot2):
        """Test marking lookup with wrap-around."""
        assert unknot2.marking_at((0, 1)) == "O"
        assert unknot2.marking_at((0, 0)) == "X"
        assert unknot2.marking_at((2, 3)) == "O"


class TestCodecs:
    """Test JSON and file codecs."""

    def test_json_round_trip(self, trefoil_right):
        """Test that JSON carries 1-based rows."""
        text = to_json(trefoil_right)
        assert json.loads(text) == {"n": 5, "o_row": [5, 4, 3, 2, 1], "x_row": [3, 2, 1, 5, 4]}
        assert from_json(text) == trefoil_right

    def test_from_json_validates(self):
        """Test that JSON input is validated."""
        with pytest.raises(SharedSquare):
            from_json('{"n": 2, "o_row": [1, 2], "x_row": [1, 2]}')

    def test_load_diagram_detects_json(self, tmp_path, unknot2):
        """Test that load_diagram reads both formats."""
        json_path = tmp_path / "u.json"
        text_path = tmp_path / "u.txt"
        save_diagram(unknot2, json_path)
        save_diagram(unknot2, text_path)
        assert text_path.read_text() == "OX\nXO\n"
        assert load_diagram(json_path) == unknot2
        assert load_diagram(text_path) == unknot2


class TestMoves:
    """Test toroidal moves and symmetries."""

    def test_translate_columns(self, unknot2, unknot2b):
        """Test a one-column shift of the 2x2 unknot."""
        assert translate(unknot2, 1, 0) == unknot2b

    def test_translate_full_turn_is_identity(self, trefoil_right):
        """Test that shifting by n returns the same diagram."""
        assert translate(trefoil_right, 5, -5) == trefoil_right

    def test_translate_keeps_validity(self, trefoil_left):
        """Test that translates are valid diagrams."""
        validate(translate(trefoil_left, 2, 3))

    def test_mirror_swaps_trefoils(self, trefoil_left, trefoil_right):
        """Test that reflecting the columns gives the other trefoil."""
        assert mirror(trefoil_left) == trefoil_right
        assert mirror(mirror(trefoil_right)) == trefoil_right

    def test_transpose(self, unknot2, trefoil_right):
        """Test that transposing twice is the identity."""
        assert transpose(unknot2) == unknot2
        assert transpose(transpose(trefoil_right)) == trefoil_right
