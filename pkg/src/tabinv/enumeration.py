"""Exhaustive SYT generation, distribution polynomials and equidistribution
checks, with an independent brute-force counting oracle."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .inversion import cinv_statistic, inv_statistic
from .model import Cell, Shape, Tableau, corner_cells, make_tableau, validate_filling
from .stats import comaj, maj

STATISTICS: dict[str, Callable[[Tableau], int]] = {
    "maj": maj,
    "comaj": comaj,
    "inv": inv_statistic,
    "cinv": cinv_statistic,
}


def normalize_shape(s: Shape) -> Shape:
    """Translate a skew shape so row 1 and column 1 are occupied.

    Strips empty leading/trailing rows and shifts columns left; straight
    shapes are already normal.
    """
    outer = list(s.outer)
    inner = [s.inner_at(i) for i in range(1, s.n_rows + 1)]
    while outer and outer[0] == inner[0]:
        outer.pop(0)
        inner.pop(0)
    while outer and outer[-1] == inner[-1]:
        outer.pop()
        inner.pop()
    if not outer:
        return Shape((), ())
    shift = min(q for p, q in zip(outer, inner) if p > q)
    outer = [max(p - shift, 0) for p in outer]
    inner = [max(q - shift, 0) for q in inner]
    while inner and inner[-1] == 0:
        inner.pop()
    return Shape(tuple(outer), tuple(inner))


def _corners_by_row(s: Shape) -> list[Cell]:
    return sorted(corner_cells(s), key=lambda c: -c[0])


def _assignments(s: Shape, k: int) -> Iterator[dict[Cell, int]]:
    """All SYT fillings as cell->content dicts, largest content placed in each
    removable corner, corners visited in descending row order."""
    if k == 0:
        yield {}
        return
    for corner in _corners_by_row(s):
        for partial in _assignments(s.remove_cell(corner), k - 1):
            full = dict(partial)
            full[corner] = k
            yield full


def _tableau_from_assignment(s: Shape, assignment: dict[Cell, int]) -> Tableau:
    rows: list[list[int | None]] = [
        [None] * s.outer[i - 1] for i in range(1, s.n_rows + 1)
    ]
    for (i, j), v in assignment.items():
        rows[i - 1][j - 1] = v
    return make_tableau(s, rows)


def enumerate_syt(s: Shape) -> Iterator[Tableau]:
    """Every SYT of s exactly once, in a deterministic order."""
    for assignment in _assignments(s, s.size):
        yield _tableau_from_assignment(s, assignment)


@lru_cache(maxsize=None)
def _count_syt_cached(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    s = Shape(outer, inner)
    if s.size == 0:
        return 1
    total = 0
    for corner in corner_cells(s):
        sub = normalize_shape(s.remove_cell(corner))
        total += _count_syt_cached(sub.outer, sub.inner)
    return total


def count_syt(s: Shape) -> int:
    """Number of SYT of s, via the memoized corner-removal recurrence."""
    norm = normalize_shape(s)
    return _count_syt_cached(norm.outer, norm.inner)


def brute_force_count(s: Shape) -> int:
    """Independent oracle: filter all n! placements through validation.

    Only sensible for small n; used to certify the fast enumerator.
    """
    n = s.size
    cells = s.cells()
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        rows: list[list[int | None]] = [
            [None] * s.outer[i - 1] for i in range(1, s.n_rows + 1)
        ]
        for (i, j), v in zip(cells, perm):
            rows[i - 1][j - 1] = v
        if not validate_filling(s, rows):
            count += 1
    return count


def partitions_of(n: int, max_rows: int | None = None, max_part: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of n in reverse-lexicographic order."""
    result: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, acc: list[int]):
        if remaining == 0:
            result.append(tuple(acc))
            return
        if max_rows is not None and len(acc) == max_rows:
            return
        for part in range(min(remaining, largest), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n if max_part is None else min(n, max_part), [])
    return result


def skew_catalog(max_cells: int = 8, max_rows: int = 4, max_width: int = 4) -> list[Shape]:
    """All skew shapes outer/inner with at most max_cells cells, at most
    max_rows rows and first part at most max_width, deduplicated by
    translation."""
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    shapes: list[Shape] = []
    outers: list[tuple[int, ...]] = []
    for total in range(1, max_rows * max_width + 1):
        outers.extend(partitions_of(total, max_rows=max_rows, max_part=max_width))
    for outer in outers:
        inner_choices = [[]]
        for i, part in enumerate(outer):
            new_choices = []
            for prefix in inner_choices:
                upper = min(part, prefix[-1] if prefix else part)
                for q in range(0, upper + 1):
                    new_choices.append(prefix + [q])
            inner_choices = new_choices
        for inner in inner_choices:
            parts = tuple(q for q in inner if q > 0)
            if len(parts) != len([q for q in inner[: len(parts)]]):
                continue  # zeros must be trailing
            n = sum(outer) - sum(parts)
            if not 1 <= n <= max_cells:
                continue
            norm = normalize_shape(Shape(outer, parts))
            key = (norm.outer, norm.inner)
            if key not in seen:
                seen.add(key)
                shapes.append(norm)
    shapes.sort(key=lambda s: (s.size, s.outer, s.inner))
    return shapes


@dataclass(frozen=True)
class DistributionPolynomial:
    """Nonnegative integer coefficients; index is the exponent of q."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.coefficients and self.coefficients[-1] == 0:
            raise ValueError("coefficients not in canonical form (trailing zero)")

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    @staticmethod
    def from_values(values: list[int]) -> "DistributionPolynomial":
        if not values:
            return DistributionPolynomial(())
        coeffs = [0] * (max(values) + 1)
        for v in values:
            coeffs[v] += 1
        return DistributionPolynomial(tuple(coeffs))


def distribution(s: Shape, stat: str, workers: int = 1) -> DistributionPolynomial:
    """Distribution polynomial of a statistic over all SYT of s."""
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}; choose from {sorted(STATISTICS)}")
    if workers > 1:
        return _parallel_distribution(s, stat, workers)
    fn = STATISTICS[stat]
    return DistributionPolynomial.from_values([fn(t) for t in enumerate_syt(s)])


def _syt_with_top_corner(s: Shape, corner: Cell) -> Iterator[Tableau]:
    """SYT of s whose largest content sits in the given corner."""
    n = s.size
    for partial in _assignments(s.remove_cell(corner), n - 1):
        full = dict(partial)
        full[corner] = n
        yield _tableau_from_assignment(s, full)


def _corner_values(s: Shape, corner: Cell, stat: str) -> list[int]:
    fn = STATISTICS[stat]
    return [fn(t) for t in _syt_with_top_corner(s, corner)]


def _parallel_distribution(s: Shape, stat: str, workers: int) -> DistributionPolynomial:
    corners = _corners_by_row(s)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(_corner_values, [s] * len(corners), corners, [stat] * len(corners)))
    values: list[int] = []
    for chunk in chunks:
        values.extend(chunk)
    return DistributionPolynomial.from_values(values)


@dataclass
class ClassReport:
    """One equidistribution comparison, optionally restricted to the class of
    tableaux with a pinned content in a given cell."""

    stat_a: str
    stat_b: str
    pinned_cell: Cell | None
    poly_a: DistributionPolynomial
    poly_b: DistributionPolynomial

    @property
    def ok(self) -> bool:
        return self.poly_a == self.poly_b


@dataclass
class EquidistributionReport:
    shape: Shape
    classes: list[ClassReport]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.classes)


def equidistribution_report(s: Shape) -> EquidistributionReport:
    """Compare Inv against maj and cinv against comaj.

    Straight shapes are compared globally; skew shapes per class, pinning the
    cell holding n (Inv/maj) respectively the cell holding 1 (cinv/comaj).
    """
    tableaux = list(enumerate_syt(s))
    values = {name: [fn(t) for t in tableaux] for name, fn in STATISTICS.items()}
    classes: list[ClassReport] = []

    def compare(a: str, b: str, pin_content: int | None):
        if pin_content is None:
            groups: dict[Cell | None, list[int]] = {None: list(range(len(tableaux)))}
        else:
            groups = {}
            for idx, t in enumerate(tableaux):
                groups.setdefault(t.positions()[pin_content], []).append(idx)
        for cell in sorted(groups, key=lambda c: c or (0, 0)):
            idxs = groups[cell]
            classes.append(
                ClassReport(
                    a,
                    b,
                    cell,
                    DistributionPolynomial.from_values([values[a][i] for i in idxs]),
                    DistributionPolynomial.from_values([values[b][i] for i in idxs]),
                )
            )

    straight = s.is_straight
    compare("inv", "maj", None if straight else s.size)
    compare("cinv", "comaj", None if straight else 1)
    return EquidistributionReport(s, classes)
