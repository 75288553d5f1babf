"""Inversion paths, cycling maps and the tableau inversion statistic.

The forward map cycles contents inside blocks determined by a monotone
South-West lattice path; the composite over all pivots sends the inversion
statistic to the major index.  A North-East variant plays the same role for
the co-major index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Cell, Shape, Tableau, validate_filling
from .stats import descent_set

BELOW = "below"  # weakly SE of a path
ABOVE = "above"  # weakly NW of a path


class AlgorithmError(RuntimeError):
    """Internal consistency failure; signals a bug, never bad user input."""


@dataclass(frozen=True)
class LatticePath:
    """A monotone unit-step path; start is a lattice point (x, y)."""

    start: tuple[int, int]
    steps: str  # "S"/"W" for SW paths, "N"/"E" for NE paths


@dataclass(frozen=True)
class BlockPartition:
    """Cycling blocks for one pivot; cells listed in increasing content order."""

    k: int
    anchor_side: str
    blocks: tuple[tuple[Cell, ...], ...]

    def content_blocks(self, t: Tableau) -> list[list[int]]:
        return [[t.content(c) for c in block] for block in self.blocks]


def _content_or_zero(t: Tableau, i: int, j: int) -> int:
    """Content of cell (i, j), with 0 for cells outside the shape."""
    s = t.shape
    if 1 <= i <= s.n_rows and s.inner_at(i) < j <= s.outer[i - 1]:
        v = t.rows[i - 1][j - 1]
        return v if v is not None else 0
    return 0


class _SwSides:
    """Side classification against a (possibly partial) SW path.

    Queries are O(1) after recording the height of the West step crossing
    each column.  For a partial path, cells strictly SW of the current
    endpoint are undetermined and classify as None.
    """

    def __init__(self, start: tuple[int, int], steps: str):
        self.sx, self.sy = start
        x, y = start
        heights: dict[int, int] = {}
        for st in steps:
            if st == "W":
                heights[x] = y
                x -= 1
            elif st == "S":
                y -= 1
            else:
                raise AlgorithmError(f"bad SW step {st!r}")
        self.heights = heights
        self.end = (x, y)

    def side(self, cell: Cell) -> str | None:
        i, j = cell
        if j > self.sx:
            return BELOW if i <= self.sy + 1 else ABOVE
        if j in self.heights:
            return BELOW if self.heights[j] >= i else ABOVE
        ex, ey = self.end
        if j <= ex and i <= ey:
            return None
        return ABOVE


def classify_side(path: LatticePath, cell: Cell) -> str:
    """BELOW (weakly SE) or ABOVE (weakly NW) for a complete SW path."""
    side = _SwSides(path.start, path.steps).side(cell)
    if side is None:
        raise AlgorithmError(f"cell {cell} undetermined against complete path {path}")
    return side


def inversion_path(t: Tableau, k: int) -> LatticePath:
    """The SW lattice path from the lower-left corner of the cell holding k.

    At each interior corner the path steps toward the larger of the two
    neighbor contents below and to the left; absent cells count as 0 and a
    double absence steps South.  The path ends at the origin.
    """
    if not 1 <= k <= t.n:
        raise ValueError(f"content {k} outside 1..{t.n}")
    i, j = t.positions()[k]
    x, y = j - 1, i - 1
    steps: list[str] = []
    while x > 0 or y > 0:
        if y == 0:
            steps.append("W")
            x -= 1
        elif x == 0:
            steps.append("S")
            y -= 1
        else:
            below = _content_or_zero(t, y, x + 1)
            left = _content_or_zero(t, y + 1, x)
            if left > below:
                steps.append("W")
                x -= 1
            else:
                steps.append("S")
                y -= 1
    return LatticePath((j - 1, i - 1), "".join(steps))


def forward_blocks(t: Tableau, k: int, path: LatticePath) -> BlockPartition:
    """Partition of the contents below k into cycling blocks.

    Scanned in increasing content order: a content on the anchor side (the
    side of the cell holding 1) opens a block, one on the other side extends
    the current block.
    """
    pos = t.positions()
    if path.start != (pos[k][1] - 1, pos[k][0] - 1):
        raise AlgorithmError(f"path {path} does not start at the cell of {k}")
    sides = _SwSides(path.start, path.steps)
    anchor = sides.side(pos[1])
    blocks: list[list[Cell]] = []
    for c in range(1, k):
        if sides.side(pos[c]) == anchor:
            blocks.append([pos[c]])
        else:
            if not blocks:
                raise AlgorithmError(f"content {c} opens no block for pivot {k}")
            blocks[-1].append(pos[c])
    return BlockPartition(k, anchor, tuple(tuple(b) for b in blocks))


def _cycle(t: Tableau, bp: BlockPartition) -> Tableau:
    """Forward cycling: the first cell of each block takes the block's largest
    content, every other cell's content drops by 1."""
    updates: dict[Cell, int] = {}
    for block in bp.blocks:
        if len(block) == 1:
            continue
        contents = [t.content(c) for c in block]
        updates[block[0]] = contents[-1]
        for cell, c in zip(block[1:], contents[1:]):
            updates[cell] = c - 1
    return t.replace(updates) if updates else t


def _check_valid(t: Tableau, context: str) -> Tableau:
    violations = validate_filling(t.shape, [list(r) for r in t.rows])
    if violations:
        raise AlgorithmError(f"{context} produced an invalid tableau: {violations}")
    return t


def psi_k(t: Tableau, k: int) -> Tableau:
    """One forward cycling step for pivot k (identity for k <= 2)."""
    result, _, _ = _psi_k_full(t, k)
    return result


def _psi_k_full(t: Tableau, k: int) -> tuple[Tableau, LatticePath, BlockPartition]:
    if not 1 <= k <= t.n:
        raise ValueError(f"pivot {k} outside 1..{t.n}")
    path = inversion_path(t, k)
    if k <= 2:
        return t, path, BlockPartition(k, ABOVE, ())
    bp = forward_blocks(t, k, path)
    return _check_valid(_cycle(t, bp), f"psi_{k}"), path, bp


def psi(t: Tableau) -> Tableau:
    """Composite forward map, pivots n down to 3; sends Inv to maj."""
    for k in range(t.n, 2, -1):
        t = psi_k(t, k)
    return t


@dataclass(frozen=True)
class MapStage:
    k: int
    path: LatticePath
    blocks: tuple[tuple[Cell, ...], ...]
    result: Tableau


def psi_trace(t: Tableau) -> tuple[Tableau, list[MapStage]]:
    stages = []
    for k in range(t.n, 2, -1):
        t, path, bp = _psi_k_full(t, k)
        stages.append(MapStage(k, path, bp.blocks, t))
    return t, stages


def phi_k(s: Tableau, k: int) -> Tableau:
    """Inverse of psi_k, by reverse cycling along the reconstructed path."""
    result, _, _ = _phi_k_full(s, k)
    return result


def _phi_k_full(s: Tableau, k: int) -> tuple[Tableau, LatticePath, tuple[tuple[Cell, ...], ...]]:
    if not 1 <= k <= s.n:
        raise ValueError(f"pivot {k} outside 1..{s.n}")
    pos = s.positions()
    r, sc = pos[k]
    if k <= 2:
        return s, LatticePath((sc - 1, r - 1), ""), ()
    des = (k - 1) in descent_set(s)
    anchor = BELOW if des else ABOVE
    other = ABOVE if des else BELOW
    shape = s.shape
    used: set[Cell] = set()
    found: list[tuple[Cell, ...]] = []
    cur = s

    def find_and_cycle(sides: _SwSides) -> Tableau:
        """One pass: consume every simple block currently identifiable."""
        nonlocal cur
        posc = cur.positions()
        updates: dict[Cell, int] = {}
        c = k - 1
        while c >= 1 and posc[c] in used:
            c -= 1
        while c >= 1:
            cell = posc[c]
            side = sides.side(cell)
            if side is None:
                break
            if side == other:
                raise AlgorithmError(
                    f"phi_{k}: top unused content {c} on the non-anchor side"
                )
            block = [cell]
            c2 = c - 1
            while c2 >= 1 and posc[c2] not in used and sides.side(posc[c2]) == other:
                block.append(posc[c2])
                c2 -= 1
            if c2 >= 1:
                nxt = posc[c2]
                nxt_side = sides.side(nxt)
                if nxt_side is None:
                    break  # block not simple yet; retry after the path grows
                if nxt_side == other:
                    raise AlgorithmError(f"phi_{k}: non-maximal block ending at {c2 + 1}")
            low = c2 + 1
            updates[block[0]] = low
            for offset, cl in enumerate(block[1:], start=1):
                updates[cl] = c - offset + 1
            used.update(block)
            found.append(tuple(block))
            c = low - 1
        if updates:
            cur = cur.replace(updates)
        return cur

    x, y = sc - 1, r - 1
    steps: list[str] = []
    while x > 0 and y > 0:
        find_and_cycle(_SwSides((sc - 1, r - 1), "".join(steps)))
        i, j = y + 1, x + 1
        below_cell, left_cell = (i - 1, j), (i, j - 1)
        b_in, l_in = below_cell in shape, left_cell in shape
        if not l_in:
            step = "S"  # forced for absent neighbors, mirroring the forward rule
        elif not b_in:
            step = "W"
        elif des:
            cb, cl = cur.content(below_cell), cur.content(left_cell)
            step = "S" if (below_cell in used and cb > cl) else "W"
        else:
            cb, cl = cur.content(below_cell), cur.content(left_cell)
            step = "W" if (left_cell in used and cl > cb) else "S"
        steps.append(step)
        if step == "S":
            y -= 1
        else:
            x -= 1
    steps.extend("S" * y + "W" * x)
    path = LatticePath((sc - 1, r - 1), "".join(steps))
    find_and_cycle(_SwSides(path.start, path.steps))
    posc = cur.positions()
    missing = [c for c in range(1, k) if posc[c] not in used]
    if missing:
        raise AlgorithmError(f"phi_{k}: contents {missing} never joined a simple block")
    return _check_valid(cur, f"phi_{k}"), path, tuple(found)


def phi(s: Tableau) -> Tableau:
    """Inverse composite map, pivots 3 up to n."""
    for k in range(3, s.n + 1):
        s = phi_k(s, k)
    return s


def phi_trace(s: Tableau) -> tuple[Tableau, list[MapStage]]:
    stages = []
    for k in range(3, s.n + 1):
        s, path, blocks = _phi_k_full(s, k)
        stages.append(MapStage(k, path, blocks, s))
    return s, stages


@dataclass
class InversionPathSet:
    """One SW path per cell, except one exempt cell."""

    paths: dict[Cell, LatticePath]
    exempt: Cell


def inversion_path_set(t: Tableau) -> InversionPathSet:
    """The n-1 inversion paths, recorded along the forward cascade."""
    cur = t
    paths: dict[Cell, LatticePath] = {}
    for k in range(t.n, 1, -1):
        path = inversion_path(cur, k)
        start_cell = (path.start[1] + 1, path.start[0] + 1)
        if start_cell in paths:
            raise AlgorithmError(f"duplicate path start cell {start_cell}")
        paths[start_cell] = path
        cur = psi_k(cur, k)
    exempt = [c for c in t.shape.cells() if c not in paths]
    if len(exempt) != 1:
        raise AlgorithmError(f"expected exactly one exempt cell, got {exempt}")
    return InversionPathSet(paths, exempt[0])


def inversion_pairs(t: Tableau) -> set[tuple[Cell, Cell]]:
    """Ordered cell pairs whose smaller content lies below the larger cell's
    inversion path.

    The exempt cell anchors pairs through the trivial (empty) path at its
    own lower-left corner, so every smaller content weakly south-east of it
    counts.  On a straight shape the exempt cell is (1, 1), which holds 1
    and therefore anchors nothing; on skew shapes the rule is what makes
    the statistic match the major index of the composite map.
    """
    ips = inversion_path_set(t)
    cells = t.shape.cells()
    pairs: set[tuple[Cell, Cell]] = set()
    anchored = dict(ips.paths)
    ex = ips.exempt
    anchored[ex] = LatticePath((ex[1] - 1, ex[0] - 1), "")
    for cell, path in anchored.items():
        sides = _SwSides(path.start, path.steps)
        big = t.content(cell)
        for other_cell in cells:
            if other_cell == cell or t.content(other_cell) >= big:
                continue
            if sides.side(other_cell) == BELOW:
                pairs.add((cell, other_cell))
    return pairs


def inv_statistic(t: Tableau) -> int:
    return len(inversion_pairs(t))


def inv_code(t: Tableau) -> list[int]:
    """Per-content inversion counts: entry k-1 is the number of pairs whose
    larger cell holds k.  Sums to the inversion statistic."""
    code = [0] * t.n
    for big_cell, _ in inversion_pairs(t):
        code[t.content(big_cell) - 1] += 1
    return code


# --- NE (comaj) variant ----------------------------------------------------


class _NeSides:
    """Side classification against a complete NE path."""

    def __init__(self, start: tuple[int, int], steps: str, n_rows: int):
        self.sx, self.sy = start
        self.top = n_rows
        heights: dict[int, int] = {}
        x, y = start
        for st in steps:
            if st == "E":
                heights[x + 1] = y
                x += 1
            elif st == "N":
                y += 1
            else:
                raise AlgorithmError(f"bad NE step {st!r}")
        self.heights = heights

    def side(self, cell: Cell) -> str:
        i, j = cell
        if j <= self.sx:
            return BELOW if i < self.sy else ABOVE
        return BELOW if i <= self.heights.get(j, self.top) else ABOVE


def ne_inversion_path(t: Tableau, k: int) -> LatticePath:
    """The NE lattice path from the upper-right corner of the cell holding k.

    The exact mirror of the SW path under 180-degree rotation: steps East
    when the content above beats the content to the right (absent cells
    count 0, double absence steps North) and ends, clamped at the bounding
    box border, in the box's upper-right corner.
    """
    if not 1 <= k <= t.n:
        raise ValueError(f"content {k} outside 1..{t.n}")
    i, j = t.positions()[k]
    n_rows, width = t.shape.n_rows, t.shape.width
    x, y = j, i
    steps: list[str] = []
    while y < n_rows or x < width:
        if y == n_rows:
            steps.append("E")
            x += 1
        elif x == width:
            steps.append("N")
            y += 1
        else:
            above = _content_or_zero(t, y + 1, x)
            right = _content_or_zero(t, y, x + 1)
            if above > right:
                steps.append("E")
                x += 1
            else:
                steps.append("N")
                y += 1
    return LatticePath((j, i), "".join(steps))


def ne_blocks(t: Tableau, k: int, path: LatticePath) -> BlockPartition:
    """Blocks for the NE variant: contents above k scanned downward, anchored
    on the side holding the cell of n."""
    pos = t.positions()
    sides = _NeSides(path.start, path.steps, t.shape.n_rows)
    anchor = sides.side(pos[t.n])
    blocks: list[list[Cell]] = []
    for c in range(t.n, k, -1):
        if sides.side(pos[c]) == anchor:
            blocks.append([pos[c]])
        else:
            if not blocks:
                raise AlgorithmError(f"content {c} opens no NE block for pivot {k}")
            blocks[-1].append(pos[c])
    return BlockPartition(k, anchor, tuple(tuple(b) for b in blocks))


def _ne_cycle(t: Tableau, bp: BlockPartition) -> Tableau:
    """NE cycling: the first cell of each block takes the block's smallest
    content, every other cell's content rises by 1."""
    updates: dict[Cell, int] = {}
    for block in bp.blocks:
        if len(block) == 1:
            continue
        contents = [t.content(c) for c in block]
        updates[block[0]] = contents[-1]
        for cell, c in zip(block[1:], contents[1:]):
            updates[cell] = c + 1
    return t.replace(updates) if updates else t


def comaj_map(t: Tableau) -> Tableau:
    """Composite NE-variant map, pivots 1 up to n-2; fixes the cell of 1."""
    one_cell = t.positions()[1] if t.n else None
    cur = t
    for k in range(1, t.n - 1):
        path = ne_inversion_path(cur, k)
        bp = ne_blocks(cur, k, path)
        cur = _check_valid(_ne_cycle(cur, bp), f"ne_psi_{k}")
    if t.n and cur.positions()[1] != one_cell:
        raise AlgorithmError("comaj map moved the cell containing 1")
    return cur


def ne_inversion_path_set(t: Tableau) -> InversionPathSet:
    cur = t
    paths: dict[Cell, LatticePath] = {}
    for k in range(1, t.n):
        path = ne_inversion_path(cur, k)
        start_cell = (path.start[1], path.start[0])
        if start_cell in paths:
            raise AlgorithmError(f"duplicate NE path start cell {start_cell}")
        paths[start_cell] = path
        if k <= t.n - 2:
            cur = _check_valid(_ne_cycle(cur, ne_blocks(cur, k, path)), f"ne_psi_{k}")
    exempt = [c for c in t.shape.cells() if c not in paths]
    if len(exempt) != 1:
        raise AlgorithmError(f"expected exactly one NE-exempt cell, got {exempt}")
    return InversionPathSet(paths, exempt[0])


def cinv_statistic(t: Tableau) -> int:
    """Pairs of cells whose larger content lies weakly NW of the smaller
    cell's NE inversion path.

    Mirroring the SW statistic, the exempt cell anchors pairs through the
    trivial path at its own upper-right corner (every larger content weakly
    north-west of it counts)."""
    ips = ne_inversion_path_set(t)
    cells = t.shape.cells()
    n_rows = t.shape.n_rows
    count = 0
    anchored = dict(ips.paths)
    ex = ips.exempt
    anchored[ex] = LatticePath((ex[1], ex[0]), "")
    for cell, path in anchored.items():
        sides = _NeSides(path.start, path.steps, n_rows)
        small = t.content(cell)
        for other_cell in cells:
            if other_cell == cell or t.content(other_cell) <= small:
                continue
            if sides.side(other_cell) == ABOVE:
                count += 1
    return count
