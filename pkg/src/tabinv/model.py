"""Shapes, cells and standard Young tableaux.

Coordinates are French: cell (i, j) sits in row i (counted from the bottom,
starting at 1) and column j.  A skew shape is a pair of partitions
outer/inner with inner contained in outer; a straight shape has empty inner.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Cell = tuple[int, int]  # (row, col), both 1-based


class ShapeError(ValueError):
    """Raised for malformed partitions or shapes."""


class TableauError(ValueError):
    """Raised for fillings that are not standard Young tableaux."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


def _check_parts(parts: tuple[int, ...], what: str) -> None:
    for p in parts:
        if not isinstance(p, int) or p <= 0:
            raise ShapeError(f"{what} parts must be positive integers, got {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ShapeError(f"{what} parts not weakly decreasing: {parts}")


@dataclass(frozen=True)
class Shape:
    """A straight or skew Ferrers diagram, outer minus inner."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        _check_parts(self.outer, "outer")
        _check_parts(self.inner, "inner")
        if len(self.inner) > len(self.outer):
            raise ShapeError(f"inner {self.inner} has more parts than outer {self.outer}")
        for i, q in enumerate(self.inner):
            if q > self.outer[i]:
                raise ShapeError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    @property
    def width(self) -> int:
        return self.outer[0] if self.outer else 0

    def inner_at(self, i: int) -> int:
        """Inner width of row i (1-based); 0 when inner has no such part."""
        return self.inner[i - 1] if i <= len(self.inner) else 0

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.outer) and self.inner_at(i) < j <= self.outer[i - 1]

    def cells(self) -> list[Cell]:
        """All cells, row by row from the bottom."""
        return [
            (i, j)
            for i in range(1, self.n_rows + 1)
            for j in range(self.inner_at(i) + 1, self.outer[i - 1] + 1)
        ]

    def conjugate(self) -> "Shape":
        return Shape(_conjugate_parts(self.outer), _conjugate_parts(self.inner))

    def remove_cell(self, cell: Cell) -> "Shape":
        """Shape with one outer corner cell removed."""
        if cell not in self or cell not in corner_cells(self):
            raise ShapeError(f"cell {cell} is not a removable corner of {self}")
        i, j = cell
        outer = list(self.outer)
        outer[i - 1] -= 1
        if outer[-1] == 0:
            outer.pop()
        return Shape(tuple(outer), self.inner)


def _conjugate_parts(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def corner_cells(s: Shape) -> set[Cell]:
    """Cells with no neighbor above or to the right (removable corners)."""
    return {
        (i, j)
        for (i, j) in s.cells()
        if (i + 1, j) not in s and (i, j + 1) not in s
    }


def inner_corner_cells(s: Shape) -> set[Cell]:
    """Cells with no neighbor below or to the left."""
    return {
        (i, j)
        for (i, j) in s.cells()
        if (i - 1, j) not in s and (i, j - 1) not in s
    }


def parse_shape(text: str) -> Shape:
    """Parse "4,3,1" or "6,5,4/3,1" into a Shape."""

    def parse_parts(chunk: str) -> tuple[int, ...]:
        chunk = chunk.strip()
        if not chunk:
            return ()
        try:
            return tuple(int(tok) for tok in chunk.split(","))
        except ValueError:
            raise ShapeError(f"non-numeric token in shape {text!r}") from None

    if text.count("/") > 1:
        raise ShapeError(f"too many '/' in shape {text!r}")
    outer_str, _, inner_str = text.partition("/")
    outer = parse_parts(outer_str)
    if not outer:
        raise ShapeError("empty outer partition")
    shape = Shape(outer, parse_parts(inner_str))
    if shape.size == 0:
        raise ShapeError(f"shape {text!r} has no cells")
    return shape


def format_shape(s: Shape) -> str:
    out = ",".join(str(p) for p in s.outer)
    if s.inner:
        out += "/" + ",".join(str(p) for p in s.inner)
    return out


@dataclass(frozen=True)
class Tableau:
    """A shape plus contents; rows are stored bottom-up, None on inner cells.

    Construction checks only structural agreement with the shape; use
    make_tableau / validate_filling for the standardness conditions.
    """

    shape: Shape
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.shape.n_rows:
            raise TableauError([f"expected {self.shape.n_rows} rows, got {len(self.rows)}"])
        for i, row in enumerate(self.rows, start=1):
            if len(row) != self.shape.outer[i - 1]:
                raise TableauError([f"row {i} has {len(row)} entries, expected {self.shape.outer[i - 1]}"])
            inner = self.shape.inner_at(i)
            for j, v in enumerate(row, start=1):
                if (v is None) != (j <= inner):
                    raise TableauError([f"placeholder/shape mismatch at cell ({i},{j})"])

    @property
    def n(self) -> int:
        return self.shape.size

    def content(self, cell: Cell) -> int:
        i, j = cell
        v = self.rows[i - 1][j - 1]
        assert v is not None
        return v

    def positions(self) -> list[Cell]:
        """positions()[c] is the cell holding content c (index 0 unused)."""
        pos: list[Cell] = [(0, 0)] * (self.n + 1)
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                if v is not None:
                    pos[v] = (i, j)
        return pos

    def replace(self, updates: dict[Cell, int]) -> "Tableau":
        """New tableau with the given cells overwritten."""
        rows = [list(r) for r in self.rows]
        for (i, j), v in updates.items():
            rows[i - 1][j - 1] = v
        return Tableau(self.shape, tuple(tuple(r) for r in rows))


def validate_filling(shape: Shape, rows: list[list[int | None]]) -> list[str]:
    """All standardness violations of a raw filling; empty list means valid."""
    violations: list[str] = []
    n = shape.size
    seen: dict[int, Cell] = {}
    for (i, j) in shape.cells():
        if i > len(rows) or j > len(rows[i - 1]) or rows[i - 1][j - 1] is None:
            violations.append(f"missing entry at cell ({i},{j})")
            continue
        v = rows[i - 1][j - 1]
        if not isinstance(v, int) or not 1 <= v <= n:
            violations.append(f"content {v} at cell ({i},{j}) outside 1..{n}")
        elif v in seen:
            violations.append(f"duplicate content {v} at cells {seen[v]} and ({i},{j})")
        else:
            seen[v] = (i, j)

    def entry(i: int, j: int) -> int | None:
        if (i, j) not in shape or i > len(rows) or j > len(rows[i - 1]):
            return None
        return rows[i - 1][j - 1]

    for (i, j) in shape.cells():
        v = entry(i, j)
        if v is None:
            continue
        right = entry(i, j + 1)
        if right is not None and v >= right:
            violations.append(f"row not increasing: cell ({i},{j})={v} vs ({i},{j + 1})={right}")
        above = entry(i + 1, j)
        if above is not None and v >= above:
            violations.append(f"column not increasing: cell ({i},{j})={v} vs ({i + 1},{j})={above}")
    return violations


def make_tableau(shape: Shape, rows: list[list[int | None]]) -> Tableau:
    """Validate a raw filling and wrap it in a Tableau; raises TableauError."""
    violations = validate_filling(shape, rows)
    if violations:
        raise TableauError(violations)
    return Tableau(shape, tuple(tuple(r) for r in rows))


def tableau_from_rows(rows: list[list[int]], inner: tuple[int, ...] = ()) -> Tableau:
    """Convenience constructor from plain bottom-up rows of a straight shape,
    or rows of cells only together with an explicit inner partition."""
    outer = tuple(len(r) + (inner[i] if i < len(inner) else 0) for i, r in enumerate(rows))
    shape = Shape(outer, inner)
    full: list[list[int | None]] = []
    for i, r in enumerate(rows, start=1):
        full.append([None] * shape.inner_at(i) + list(r))
    return make_tableau(shape, full)


def conjugate(t: Tableau) -> Tableau:
    """Transpose across the main diagonal; content of (i,j) moves to (j,i)."""
    shape = t.shape.conjugate()
    rows: list[list[int | None]] = [
        [None] * shape.outer[i - 1] for i in range(1, shape.n_rows + 1)
    ]
    for (i, j) in t.shape.cells():
        rows[j - 1][i - 1] = t.content((i, j))
    return make_tableau(shape, rows)


def rotate_complement(t: Tableau) -> Tableau:
    """Rotate 180 degrees inside the bounding box and complement contents.

    Cell (i, j) goes to (R+1-i, C+1-j) for an R-row, C-column bounding box and
    content c becomes n+1-c.  An involution on tableaux whose shape has no
    leading empty rows or columns.
    """
    n = t.n
    big_r, big_c = t.shape.n_rows, t.shape.width
    padded_inner = [t.shape.inner_at(i) for i in range(1, big_r + 1)]
    outer = [big_c - padded_inner[big_r - i] for i in range(1, big_r + 1)]
    inner = [big_c - t.shape.outer[big_r - i] for i in range(1, big_r + 1)]
    while outer and outer[-1] == 0:
        outer.pop()
        inner.pop()
    while inner and inner[-1] == 0:
        inner.pop()
    shape = Shape(tuple(outer), tuple(inner))
    rows: list[list[int | None]] = [
        [None] * shape.outer[i - 1] for i in range(1, shape.n_rows + 1)
    ]
    for (i, j) in t.shape.cells():
        rows[big_r - i][big_c - j] = n + 1 - t.content((i, j))
    return make_tableau(shape, rows)


# --- text format -----------------------------------------------------------
#
# Optional first line "shape: <shape-string>", then rows from bottom to top,
# space separated, with "." for absent inner cells.


def tableau_to_text(t: Tableau) -> str:
    lines = [f"shape: {format_shape(t.shape)}"]
    for row in t.rows:
        lines.append(" ".join("." if v is None else str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_tableau_text(text: str) -> Tableau:
    lines = [ln for ln in (ln.strip() for ln in text.splitlines()) if ln]
    if not lines:
        raise TableauError(["empty tableau input"])
    declared: Shape | None = None
    if lines[0].lower().startswith("shape:"):
        declared = parse_shape(lines[0].split(":", 1)[1])
        lines = lines[1:]
    raw: list[list[int | None]] = []
    for ln in lines:
        row: list[int | None] = []
        for tok in ln.split():
            if tok == ".":
                row.append(None)
            else:
                try:
                    row.append(int(tok))
                except ValueError:
                    raise TableauError([f"bad token {tok!r} in tableau row"]) from None
        raw.append(row)
    if declared is None:
        outer, inner = [], []
        for i, row in enumerate(raw, start=1):
            dots = 0
            while dots < len(row) and row[dots] is None:
                dots += 1
            if any(v is None for v in row[dots:]):
                raise TableauError([f"interior '.' placeholder in row {i}"])
            outer.append(len(row))
            inner.append(dots)
        while inner and inner[-1] == 0:
            inner.pop()
        try:
            declared = Shape(tuple(outer), tuple(inner))
        except ShapeError as e:
            raise TableauError([str(e)]) from None
    else:
        if len(raw) != declared.n_rows:
            raise TableauError([f"shape declares {declared.n_rows} rows, got {len(raw)}"])
        for i, row in enumerate(raw, start=1):
            if len(row) != declared.outer[i - 1]:
                raise TableauError([f"row {i} has {len(row)} entries, shape expects {declared.outer[i - 1]}"])
            for j, v in enumerate(row, start=1):
                if (v is None) != (j <= declared.inner_at(i)):
                    raise TableauError([f"placeholder/shape mismatch at cell ({i},{j})"])
    return make_tableau(declared, raw)


def tableau_to_json_dict(t: Tableau) -> dict:
    return {
        "shape": list(t.shape.outer),
        "inner": list(t.shape.inner),
        "rows": [list(row) for row in t.rows],
    }


def tableau_from_json_dict(d: dict) -> Tableau:
    shape = Shape(tuple(d["shape"]), tuple(d.get("inner", ())))
    return make_tableau(shape, [list(row) for row in d["rows"]])


def render(t: Tableau) -> str:
    """Aligned display rendering, top row first (French convention)."""
    width = max(len(str(t.n)), 1) + 1
    lines = []
    for row in reversed(t.rows):
        lines.append("".join(("." if v is None else str(v)).rjust(width) for v in row).rstrip())
    return "\n".join(lines) + "\n"
