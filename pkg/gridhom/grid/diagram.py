"""Grid diagrams: model, validation, text and JSON codecs, toroidal moves."""

from __future__ import annotations

import json
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from ..common import BadCharacter, NotAKnot, NotPermutation, RaggedRows, SharedSquare

Square = tuple[int, int]


class GridDiagram(BaseModel):
    """
    An n x n toroidal grid with one O and one X in every row and column.

    Columns are numbered left to right and rows bottom to top. ``o_row[i]``
    and ``x_row[i]`` are the 1-based rows of the O and X in column ``i + 1``,
    matching the JSON format. Internally everything else is 0-based: square
    ``(i, j)`` is column ``i``, row ``j`` and occupies [i, i+1] x [j, j+1];
    lattice point ``(x, y)`` lies on vertical circle ``x`` and horizontal
    circle ``y``.

    Construction does not check the marking conditions; call
    :func:`validate` (or build through :func:`parse_text` / :func:`from_json`,
    which validate) to get a diagram known to describe a knot.

    Example:
        >>> d = GridDiagram(n=2, o_row=(2, 1), x_row=(1, 2))
        >>> validate(d)
        >>> print(render_text(d))
        OX
        XO
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Grid size")
    o_row: tuple[int, ...] = Field(..., description="1-based row of the O in each column")
    x_row: tuple[int, ...] = Field(..., description="1-based row of the X in each column")

    @property
    def o_rows(self) -> tuple[int, ...]:
        """0-based O row per column."""
        return tuple(r - 1 for r in self.o_row)

    @property
    def x_rows(self) -> tuple[int, ...]:
        """0-based X row per column."""
        return tuple(r - 1 for r in self.x_row)

    def o_column_of_row(self, row: int) -> int:
        """Column of the O in a 0-based row."""
        return self.o_rows.index(row)

    def marking_at(self, square: Square) -> str:
        """``'O'``, ``'X'`` or ``'.'`` for a 0-based square."""
        i, j = square[0] % self.n, square[1] % self.n
        if self.o_rows[i] == j:
            return "O"
        if self.x_rows[i] == j:
            return "X"
        return "."

    def component_count(self) -> int:
        """Number of cycles of the column map O-row -> X-column."""
        x_col = {r: i for i, r in enumerate(self.x_rows)}
        seen = [False] * self.n
        cycles = 0
        for start in range(self.n):
            if seen[start]:
                continue
            cycles += 1
            col = start
            while not seen[col]:
                seen[col] = True
                col = x_col[self.o_rows[col]]
        return cycles

    def __str__(self) -> str:
        return render_text(self)


def validate(d: GridDiagram) -> None:
    """Check the permutation, shared-square and single-component conditions.

    Raises:
        NotPermutation: o_row or x_row is not a bijection onto 1..n.
        SharedSquare: an O and an X occupy the same square.
        NotAKnot: the diagram has more than one component.
    """
    expected = set(range(1, d.n + 1))
    for name, rows in (("o_row", d.o_row), ("x_row", d.x_row)):
        if len(rows) != d.n:
            raise NotPermutation(f"{name} has {len(rows)} entries, expected {d.n}")
        if set(rows) != expected:
            raise NotPermutation(f"{name} is not a permutation of 1..{d.n}: {list(rows)}")
    for i, (o, x) in enumerate(zip(d.o_row, d.x_row)):
        if o == x:
            raise SharedSquare(f"O and X share square (column {i + 1}, row {o})")
    components = d.component_count()
    if components != 1:
        raise NotAKnot(f"diagram describes a {components}-component link")


def is_valid(d: GridDiagram) -> bool:
    try:
        validate(d)
    except ValueError:
        return False
    return True


def make_diagram(o_row: list[int] | tuple[int, ...], x_row: list[int] | tuple[int, ...]) -> GridDiagram:
    """Build and validate a diagram from 1-based row lists."""
    d = GridDiagram(n=len(o_row), o_row=tuple(o_row), x_row=tuple(x_row))
    validate(d)
    return d


def parse_text(text: str) -> GridDiagram:
    """
    Parse the text grid format.

    ``n`` lines of ``n`` characters from ``O``, ``X`` and ``.``; the first
    line is the top row. Spaces inside a line are ignored and blank lines
    at either end are dropped.

    Raises:
        BadCharacter, RaggedRows: malformed text.
        NotPermutation, SharedSquare, NotAKnot: invalid diagram.
    """
    lines = [line.replace(" ", "").replace("\t", "") for line in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise RaggedRows("grid text is empty")
    n = len(lines)
    o_row: list[int | None] = [None] * n
    x_row: list[int | None] = [None] * n
    for t, line in enumerate(lines):
        if len(line) != n:
            raise RaggedRows(
                f"line {t + 1} has {len(line)} squares, expected {n} for an {n}x{n} grid"
            )
        row = n - t
        for i, ch in enumerate(line):
            if ch not in "OX.":
                raise BadCharacter(f"unexpected {ch!r} at line {t + 1}, column {i + 1}")
            if ch == ".":
                continue
            target = o_row if ch == "O" else x_row
            if target[i] is not None:
                raise NotPermutation(f"column {i + 1} has more than one {ch}")
            target[i] = row
    problems = []
    for name, rows in (("O", o_row), ("X", x_row)):
        missing = [i + 1 for i, r in enumerate(rows) if r is None]
        if missing:
            problems.append(f"columns {missing} have no {name}")
    if problems:
        raise NotPermutation("; ".join(problems))
    d = GridDiagram(
        n=n,
        o_row=tuple(r for r in o_row if r is not None),
        x_row=tuple(r for r in x_row if r is not None),
    )
    validate(d)
    return d


def render_text(d: GridDiagram) -> str:
    """Render in the text grid format, top row first, no trailing newline."""
    lines = []
    for j in reversed(range(d.n)):
        lines.append("".join(d.marking_at((i, j)) for i in range(d.n)))
    return "\n".join(lines)


def to_json(d: GridDiagram) -> str:
    return json.dumps({"n": d.n, "o_row": list(d.o_row), "x_row": list(d.x_row)})


def from_json(text: str) -> GridDiagram:
    data = json.loads(text)
    d = GridDiagram(n=data["n"], o_row=tuple(data["o_row"]), x_row=tuple(data["x_row"]))
    validate(d)
    return d


def load_diagram(path: str | Path) -> GridDiagram:
    """Read a diagram file, choosing JSON or text format from its content."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return from_json(text)
    return parse_text(text)


FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name: str) -> GridDiagram:
    """Load a bundled diagram, e.g. ``load_fixture("trefoil5")``."""
    return load_diagram(FIXTURE_DIR / f"{name}.txt")


def save_diagram(d: GridDiagram, path: str | Path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(to_json(d) + "\n")
    else:
        path.write_text(render_text(d) + "\n")


def translate(d: GridDiagram, dx: int, dy: int) -> GridDiagram:
    """Shift every marking by (dx, dy) around the torus."""
    n = d.n
    o_row = [0] * n
    x_row = [0] * n
    for i in range(n):
        o_row[(i + dx) % n] = (d.o_rows[i] + dy) % n + 1
        x_row[(i + dx) % n] = (d.x_rows[i] + dy) % n + 1
    return GridDiagram(n=n, o_row=tuple(o_row), x_row=tuple(x_row))


def mirror(d: GridDiagram) -> GridDiagram:
    """Reflect the columns; the result represents the mirror knot."""
    return GridDiagram(n=d.n, o_row=d.o_row[::-1], x_row=d.x_row[::-1])


def transpose(d: GridDiagram) -> GridDiagram:
    """Reflect across the diagonal, exchanging rows and columns."""
    o_row = [0] * d.n
    x_row = [0] * d.n
    for i, r in enumerate(d.o_rows):
        o_row[r] = i + 1
    for i, r in enumerate(d.x_rows):
        x_row[r] = i + 1
    return GridDiagram(n=d.n, o_row=tuple(o_row), x_row=tuple(x_row))
