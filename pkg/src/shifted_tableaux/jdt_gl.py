"""Weight-preserving factorization of primed shifted tableaux.

``decompose`` slides every primed entry k' north-west into column k, one
letter at a time in increasing order and top to bottom within a letter.
The result splits the shifted shape into a staircase block (family PD, or QD
when the input allows diagonal primes) juxtaposed with an ordinary tableau of
shape mu - staircase.  ``compose`` runs the slides in reverse and is a two-
sided inverse; both directions preserve the full primed/unprimed weight and
the main-diagonal entries.

Move discipline (all comparisons in the entry total order):

* off the home column, k' swaps with its northern neighbour b when b >= d and
  with its western neighbour d otherwise (top row: always west);
* inside column k, k' keeps swapping north while the unprimed entry above is
  >= its current row index, so it comes to rest below another k', below an
  entry sitting in its own row, or in the top row;
* the reverse slide treats k' as larger than letters < k and smaller than the
  rest, moving east/south towards the smaller eligible neighbour (ties go
  south) until neither neighbour may pass.

The path of each k' stays strictly south of the previous one; that this holds
is asserted rather than handled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .entries import Entry
from .partitions import (Partition, StrictPartition, lambda_from_mu,
                         mu_from_lambda, staircase)
from .tableaux import Shape, Tableau, validate, weight_monomial


class SlideError(AssertionError):
    """A configuration the sliding argument proves impossible."""


@dataclass(frozen=True)
class GlDecomposition:
    pd: Tableau
    t: Tableau
    trace: Optional[list] = field(default=None, compare=False)


Grid = dict  # (row, col) -> Entry


def _record(trace, op, entry, src, dst):
    if trace is not None:
        trace.append({"op": op, "entry": str(entry), "from": list(src), "to": list(dst)})


def _slide_nw(grid: Grid, shape: Shape, pos: tuple[int, int], k: int, trace) -> tuple[int, int]:
    """Slide one k' from pos into column k; returns its resting cell."""
    r, c = pos
    e = grid[(r, c)]
    while True:
        if c > k:
            north = grid.get((r - 1, c))
            west = grid.get((r, c - 1))
            if west is None or west.primed:
                raise SlideError(f"primed or missing western neighbour at {(r, c)}")
            if north is not None and north.primed:
                raise SlideError(f"primed northern neighbour at {(r, c)}")
            if north is not None and north >= west:
                grid[(r, c)], grid[(r - 1, c)] = north, e
                _record(trace, "slide", e, (r, c), (r - 1, c))
                r -= 1
            else:
                grid[(r, c)], grid[(r, c - 1)] = west, e
                _record(trace, "slide", e, (r, c), (r, c - 1))
                c -= 1
        else:
            north = grid.get((r - 1, c))
            if north is not None and north.primed and north.letter != k:
                raise SlideError(f"foreign prime {north} above column-{k} resting spot")
            if north is None or north.primed or north.letter < r:
                return (r, c)
            grid[(r, c)], grid[(r - 1, c)] = north, e
            _record(trace, "slide", e, (r, c), (r - 1, c))
            r -= 1


def _settle_column(grid: Grid, shape: Shape, k: int) -> None:
    """Sort unprimed survivors of column k and assert each sits in its own row."""
    rows = [r for r in range(1, min(k, shape.rows) + 1) if shape.contains(r, k)]
    unprimed = sorted((grid[(r, k)] for r in rows if not grid[(r, k)].primed))
    spots = [r for r in rows if not grid[(r, k)].primed]
    for r, e in zip(spots, unprimed):
        grid[(r, k)] = e
        if e.letter != r:
            raise SlideError(f"column {k} survivor {e} not in its own row {r}")


def decompose(tab: Tableau, trace: bool = False) -> GlDecomposition:
    """Factor a PST (resp. QST) into a PD (resp. QD) and an ordinary tableau."""
    if tab.symplectic or tab.family not in ("PST", "QST"):
        raise ValueError("decompose expects an unbarred PST or QST")
    v = validate(tab)
    if v is not None:
        raise ValueError(f"invalid tableau: {v}")
    n = tab.n
    mu = StrictPartition(tab.shape.parts)
    if mu.length != n:
        raise ValueError(f"shape {mu} must have exactly n={n} rows")
    lam = lambda_from_mu(mu, n)

    grid = tab.grid()
    diag_before = [grid[(i, i)] for i in range(1, n + 1)]
    log: Optional[list] = [] if trace else None

    for k in range(1, n + 1):
        primes = sorted((rc for rc, e in grid.items()
                         if e.primed and e.letter == k), key=lambda rc: rc[0])
        rows_seen = set()
        for pos in primes:
            r, c = _slide_nw(grid, tab.shape, pos, k, log)
            if r in rows_seen:
                raise SlideError(f"two {k}' settled in row {r}")
            rows_seen.add(r)
        _settle_column(grid, tab.shape, k)

    if [grid[(i, i)] for i in range(1, n + 1)] != diag_before:
        raise SlideError("main diagonal not preserved")

    pd_rows = tuple(tuple(grid[(r, c)] for c in range(r, n + 1))
                    for r in range(1, n + 1))
    pd_family = "PD" if tab.family == "PST" else "QD"
    pd = Tableau(Shape(staircase(n).parts, True), pd_family, n, False, pd_rows)
    t_rows = tuple(tuple(grid[(r, c)] for c in range(n + 1, n + 1 + lam.part(r)))
                   for r in range(1, lam.length + 1))
    t = Tableau(Shape(lam.parts, False), "T", n, False, t_rows)

    for part, label in ((pd, pd_family), (t, "T")):
        bad = validate(part)
        if bad is not None:
            raise SlideError(f"{label} block invalid after slides: {bad}")
    if weight_monomial(pd) * weight_monomial(t) != weight_monomial(tab):
        raise SlideError("weight not preserved")
    return GlDecomposition(pd, t, log)


def _slide_se(grid: Grid, shape: Shape, pos: tuple[int, int], k: int, trace) -> tuple[int, int]:
    """Reverse slide: move one k' east/south past unprimed letters < k."""
    r, c = pos
    e = grid[(r, c)]

    def passable(x: Optional[Entry]) -> bool:
        return x is not None and not x.primed and x.letter < k

    while True:
        east = grid.get((r, c + 1))
        south = grid.get((r + 1, c))
        go_east = passable(east) and (not passable(south) or east < south)
        go_south = passable(south) and not go_east
        if go_east:
            grid[(r, c)], grid[(r, c + 1)] = east, e
            _record(trace, "slide", e, (r, c), (r, c + 1))
            c += 1
        elif go_south:
            grid[(r, c)], grid[(r + 1, c)] = south, e
            _record(trace, "slide", e, (r, c), (r + 1, c))
            r += 1
        else:
            return (r, c)


def compose(pd: Tableau, t: Tableau, trace: bool = False) -> Tableau:
    """Juxtapose a PD/QD with an ordinary tableau and undo the slides."""
    if pd.symplectic or t.symplectic:
        raise ValueError("compose expects unbarred blocks")
    if pd.family not in ("PD", "QD") or t.family != "T":
        raise ValueError("compose expects (PD or QD, T)")
    if pd.n != t.n:
        raise ValueError("alphabet bounds differ")
    for part in (pd, t):
        bad = validate(part)
        if bad is not None:
            raise ValueError(f"invalid block: {bad}")
    n = pd.n
    lam = Partition(t.shape.parts)
    mu = mu_from_lambda(lam, n)
    shape = Shape(mu.parts, True)

    grid: Grid = {}
    for r, c, e in pd.cells():
        grid[(r, c)] = e
    for r, c, e in t.cells():
        grid[(r, n + c)] = e

    log: Optional[list] = [] if trace else None
    for k in range(n, 0, -1):
        primes = sorted((rc for rc, e in grid.items()
                         if e.primed and e.letter == k),
                        key=lambda rc: rc[0], reverse=True)
        for pos in primes:
            if pos[1] != k:
                raise SlideError(f"{k}' started outside column {k}")
            _slide_se(grid, shape, pos, k, log)

    rows = tuple(tuple(grid[(r, c)] for c in shape.col_range(r))
                 for r in range(1, shape.rows + 1))
    out = Tableau(shape, "PST" if pd.family == "PD" else "QST", n, False, rows)
    bad = validate(out)
    if bad is not None:
        raise SlideError(f"composed tableau invalid: {bad}")
    return out
