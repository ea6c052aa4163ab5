"""Grey-square figures whose cell counts are termirial values.

The size-n figure at order 0 is a row of n unit cells.  Each next order
halves the cell side and stacks the previous-order figures for 1..n as
bands, bottom to top, left-aligned; the grey-cell count therefore
telescopes to termirial_p(n, p).  Halving the side quarters a cell's
area, so the surface ratio between consecutive orders is 4*(n+p)/(p+1),
which falls to 4 as the order grows; its base-2 log is the dimension
estimate that tends to 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .budget import DEFAULT_CELL_BUDGET, check_budget
from .core import termirial_p

# The builder recurses once per order; far above any count the cell
# budget would allow anyway.
MAX_BUILD_ORDER = 500

SVG_CELL_PX = 10
SVG_FILL = "#808080"


@dataclass(frozen=True)
class FractalFigure:
    """Grey cells of the order-p figure for n, on a 2^p-per-unit grid."""

    n: int
    p: int
    cell_side: Fraction  # in units of the base square side
    grey_cells: frozenset[tuple[int, int]]

    @property
    def width(self) -> int:
        return 1 + max(x for x, _ in self.grey_cells)

    @property
    def height(self) -> int:
        return 1 + max(y for _, y in self.grey_cells)


def build(n: int, p: int, budget: int = DEFAULT_CELL_BUDGET) -> FractalFigure:
    """Construct the order-p figure for n.

    Raises BudgetExceededError when the figure would hold more than
    budget cells, and ValueError for n >= 2 with p > MAX_BUILD_ORDER.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if p < 0:
        raise ValueError(f"order must be >= 0, got {p}")
    if n > 1 and p > MAX_BUILD_ORDER:
        raise ValueError(f"figures for n >= 2 are built per order and capped at order {MAX_BUILD_ORDER}")
    check_budget(termirial_p(n, p), budget, f"grey cells of figure ({n}, {p})")
    return FractalFigure(n=n, p=p, cell_side=Fraction(1, 2**p), grey_cells=frozenset(_cells(n, p)))


def _cells(n: int, p: int) -> set[tuple[int, int]]:
    if n == 1:
        return {(0, 0)}  # every band stack of a single cell is that cell
    if p == 0:
        return {(x, 0) for x in range(n)}
    cells: set[tuple[int, int]] = set()
    y_offset = 0
    for k in range(1, n + 1):
        band = _cells(k, p - 1)
        cells.update((x, y + y_offset) for x, y in band)
        y_offset += 1 + max(y for _, y in band)
    return cells


@dataclass(frozen=True)
class SurfaceReport:
    """Grey-surface ratio between orders p-1 and p, and its log2 reading.

    ratio is exactly 4*(n+p)/(p+1): the order-(p-1) figure keeps cells of
    twice the side, so the ratio is the cell-count ratio times the 4x
    area refinement.  measured is True when both figures fit the cell
    budget and the ratio was cross-checked against actual builds.
    """

    n: int
    p: int
    ratio: Fraction
    dimension_estimate: float
    measured: bool


def surface_report(n: int, p: int, budget: int = DEFAULT_CELL_BUDGET) -> SurfaceReport:
    """Surface ratio of the (n, p) figure against the (n, p-1) figure.

    Within the cell budget the ratio is measured from two built figures
    and must equal the closed form exactly as rationals; past the budget
    only the closed form is reported, which is what makes large-order
    dimension estimates cheap.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if p < 1:
        raise ValueError(f"the ratio compares order p to p-1, so p must be >= 1, got {p}")
    closed = Fraction(4 * (n + p), p + 1)
    measured = False
    if termirial_p(n, p) <= budget and (n == 1 or p <= MAX_BUILD_ORDER):
        fine = build(n, p, budget=budget)
        coarse = build(n, p - 1, budget=budget)
        measured_ratio = 4 * Fraction(len(fine.grey_cells), len(coarse.grey_cells))
        if measured_ratio != closed:
            raise AssertionError(f"measured ratio {measured_ratio} != closed form {closed} at ({n}, {p})")
        measured = True
    return SurfaceReport(n=n, p=p, ratio=closed, dimension_estimate=math.log2(closed), measured=measured)


def render(fig: FractalFigure, fmt: str = "ascii") -> str:
    """Render a figure as an ASCII grid or a minimal SVG document.

    Output is deterministic: cells are emitted in sorted order, '#' for
    grey and '.' for empty in ASCII, one rect per grey cell in SVG.
    """
    if fmt == "ascii":
        return _render_ascii(fig)
    if fmt == "svg":
        return _render_svg(fig)
    raise ValueError(f"unknown format {fmt!r}; expected 'ascii' or 'svg'")


def _render_ascii(fig: FractalFigure) -> str:
    width, height = fig.width, fig.height
    rows = []
    for y in range(height - 1, -1, -1):
        rows.append("".join("#" if (x, y) in fig.grey_cells else "." for x in range(width)))
    return "\n".join(rows)


def _render_svg(fig: FractalFigure) -> str:
    width = fig.width * SVG_CELL_PX
    height = fig.height * SVG_CELL_PX
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}">'
    ]
    for x, y in sorted(fig.grey_cells):
        px = x * SVG_CELL_PX
        py = (fig.height - 1 - y) * SVG_CELL_PX
        lines.append(
            f'  <rect x="{px}" y="{py}" width="{SVG_CELL_PX}" height="{SVG_CELL_PX}" '
            f'fill="{SVG_FILL}" stroke="#000000" stroke-width="1"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines)
