"""Weight- and bar-preserving factorization of barred primed shifted tableaux.

The forward map processes letters k = 1..n, for each running three phases:

1. every barred prime k~' slides north-west into column k exactly like the
   unbarred case, except that inside column k it only moves up while the
   unprimed entry above is >= k-bar of its current row (so unprimed entries
   never sink below their own row);
2. every unbarred prime k' does the same, except that a slide blocked on the
   left by a settled k~' annihilates: the horizontal pair (k~', k') in row i
   becomes (i, i~);
3. any vertical pair (i~ over i) left in column k, lowest first with i
   necessarily in row i, becomes the vertical pair (k', k~') which then
   floats north while the unprimed entry above may legally drop a row.

Each elementary step swaps entries or trades a zero-weight pair for another
zero-weight pair with one bar, so weight and bar totals are preserved.  The
reverse map undoes phase 3 top-down (lowering primes, turning k'/k~' stacks
back into i~/i when the entry east allows it), then phase 2 bottom-up
(restoring (i, i~) rows to (k~', k') pairs before sliding), then phase 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .entries import Entry
from .partitions import Partition, StrictPartition, lambda_from_mu, mu_from_lambda, staircase
from .jdt_gl import SlideError, _record
from .tableaux import Shape, Tableau, sp_stats, validate, weight_monomial

Grid = dict


@dataclass(frozen=True)
class SpDecomposition:
    qd: Tableau
    t: Tableau
    trace: Optional[list] = field(default=None, compare=False)


def _bar(i: int) -> Entry:
    return Entry(i, barred=True)


def _slide_nw_sp(grid: Grid, pos: tuple[int, int], k: int, barred: bool, trace):
    """Phase 1/2 slide of one prime; returns its resting cell or None if annihilated."""
    r, c = pos
    e = grid[(r, c)]
    kbar_prime = Entry(k, primed=True, barred=True)
    while True:
        if c > k:
            west = grid[(r, c - 1)]
            north = grid.get((r - 1, c))
            if north is not None and north.primed:
                raise SlideError(f"primed northern neighbour {north} at {(r, c)}")
            if west.primed:
                if barred or west != kbar_prime:
                    raise SlideError(f"prime {e} blocked by {west} at {(r, c)}")
                if c - 1 != k:
                    raise SlideError(f"settled {west} found outside column {k}")
                if north is not None and north >= _bar(r):
                    grid[(r, c)], grid[(r - 1, c)] = north, e
                    _record(trace, "slide", e, (r, c), (r - 1, c))
                    r -= 1
                    continue
                grid[(r, c - 1)] = Entry(r)
                grid[(r, c)] = _bar(r)
                _record(trace, "annihilate", e, (r, c), (r, c - 1))
                return None
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
            if north is None or north.primed or north < _bar(r):
                return (r, c)
            grid[(r, c)], grid[(r - 1, c)] = north, e
            _record(trace, "slide", e, (r, c), (r - 1, c))
            r -= 1


def _float_north(grid: Grid, pos: tuple[int, int], trace) -> None:
    """Move a fresh prime up column k while the entry above may drop a row."""
    r, c = pos
    e = grid[(r, c)]
    while r > 1:
        north = grid.get((r - 1, c))
        if north is None or north.primed or north.letter < r:
            return
        grid[(r, c)], grid[(r - 1, c)] = north, e
        _record(trace, "slide", e, (r, c), (r - 1, c))
        r -= 1


def _chi_pass(grid: Grid, k: int, trace) -> None:
    """Convert vertical (i~, i) pairs in column k, lowest first."""
    while True:
        pair_row = None
        for r in range(k, 1, -1):
            lower = grid.get((r, k))
            upper = grid.get((r - 1, k))
            if (lower is not None and upper is not None
                    and not lower.primed and not upper.primed
                    and not lower.barred and upper.barred
                    and lower.letter == upper.letter):
                pair_row = r
                break
        if pair_row is None:
            return
        i = grid[(pair_row, k)].letter
        if i != pair_row:
            raise SlideError(f"vertical pair ({i}~,{i}) with {i} off row {i}")
        grid[(pair_row - 1, k)] = Entry(k, primed=True)
        grid[(pair_row, k)] = Entry(k, primed=True, barred=True)
        _record(trace, "create", Entry(k, primed=True), (pair_row - 1, k), (pair_row, k))
        _float_north(grid, (pair_row - 1, k), trace)
        _float_north(grid, (pair_row, k), trace)


def decompose_sp(tab: Tableau, trace: bool = False) -> SpDecomposition:
    """Factor a barred QST into a QD and an ordinary symplectic tableau."""
    if not tab.symplectic or tab.family not in ("PST", "QST"):
        raise ValueError("decompose_sp expects a barred PST or QST")
    as_qst = Tableau(tab.shape, "QST", tab.n, True, tab.rows)
    v = validate(as_qst)
    if v is not None:
        raise ValueError(f"invalid tableau: {v}")
    n = tab.n
    mu = StrictPartition(tab.shape.parts)
    if mu.length != n:
        raise ValueError(f"shape {mu} must have exactly n={n} rows")
    lam = lambda_from_mu(mu, n)

    grid = tab.grid()
    log: Optional[list] = [] if trace else None

    for k in range(1, n + 1):
        for barred in (True, False):
            want = Entry(k, primed=True, barred=barred)
            primes = sorted((rc for rc, e in grid.items() if e == want),
                            key=lambda rc: rc[0])
            rows_seen = set()
            for pos in primes:
                rest = _slide_nw_sp(grid, pos, k, barred, log)
                if rest is not None:
                    if rest[0] in rows_seen:
                        raise SlideError(f"two {want} settled in row {rest[0]}")
                    rows_seen.add(rest[0])
        _chi_pass(grid, k, log)
        for r in range(1, k + 1):
            e = grid[(r, k)]
            if not e.primed and e.letter != r:
                raise SlideError(f"column {k} survivor {e} off its row {r}")

    qd_rows = tuple(tuple(grid[(r, c)] for c in range(r, n + 1))
                    for r in range(1, n + 1))
    qd = Tableau(Shape(staircase(n).parts, True), "QD", n, True, qd_rows)
    t_rows = tuple(tuple(grid[(r, c)] for c in range(n + 1, n + 1 + lam.part(r)))
                   for r in range(1, lam.length + 1))
    t = Tableau(Shape(lam.parts, False), "T", n, True, t_rows)

    for part in (qd, t):
        bad = validate(part)
        if bad is not None:
            raise SlideError(f"block invalid after slides: {bad}")
    if (weight_monomial(qd, deform=True) * weight_monomial(t, deform=True)
            != weight_monomial(tab, deform=True)):
        raise SlideError("weight or bar count not preserved")
    return SpDecomposition(qd, t, log)


def _slide_se_sp(grid: Grid, pos: tuple[int, int], entity: Entry, trace) -> tuple[int, int]:
    """Reverse slide east/south past unprimed entries below the entity's order."""
    r, c = pos

    def passable(x: Optional[Entry]) -> bool:
        return x is not None and not x.primed and x < entity

    e = grid[(r, c)]
    while True:
        east = grid.get((r, c + 1))
        south = grid.get((r + 1, c))
        go_east = passable(east) and (not passable(south) or east < south)
        if go_east:
            grid[(r, c)], grid[(r, c + 1)] = east, e
            _record(trace, "slide", e, (r, c), (r, c + 1))
            c += 1
        elif passable(south):
            grid[(r, c)], grid[(r + 1, c)] = south, e
            _record(trace, "slide", e, (r, c), (r + 1, c))
            r += 1
        else:
            return (r, c)


def _chi_inverse(grid: Grid, k: int, trace) -> None:
    """Lower each k' in column k top-down, converting k'/k~' stacks to i~/i."""
    kp = Entry(k, primed=True)
    kbp = Entry(k, primed=True, barred=True)
    tokens = sorted(r for r in range(1, k + 1) if grid.get((r, k)) == kp)
    for r in tokens:
        while True:
            below = grid.get((r + 1, k))
            if below is None or below == kp:
                break
            if below == kbp:
                east = grid.get((r, k + 1))
                if east is None or east >= _bar(r + 1):
                    grid[(r, k)] = _bar(r + 1)
                    grid[(r + 1, k)] = Entry(r + 1)
                    _record(trace, "uncreate", kp, (r, k), (r + 1, k))
                break
            if below.primed:
                raise SlideError(f"foreign prime {below} in column {k}")
            east = grid.get((r, k + 1))
            if east is not None and east < below:
                break
            grid[(r, k)], grid[(r + 1, k)] = below, kp
            _record(trace, "slide", kp, (r, k), (r + 1, k))
            r += 1


def _psi_inverse(grid: Grid, k: int, trace) -> None:
    """Slide k' entries out south-east, most southerly first, reviving
    annihilated (i, i~) rows into (k~', k') pairs as they are reached."""
    kp = Entry(k, primed=True)
    kbp = Entry(k, primed=True, barred=True)
    items = []
    for r in range(1, k + 1):
        if grid.get((r, k)) == kp:
            items.append((r, "prime"))
        elif (grid.get((r, k)) == Entry(r) and grid.get((r, k + 1)) == _bar(r)):
            north = grid.get((r - 1, k + 1))
            if north is None or (not north.primed and north < _bar(r)):
                items.append((r, "pair"))
    for r, kind in sorted(items, reverse=True):
        if kind == "pair":
            grid[(r, k)] = kbp
            grid[(r, k + 1)] = kp
            _record(trace, "unannihilate", kp, (r, k), (r, k + 1))
            _slide_se_sp(grid, (r, k + 1), kp, trace)
        else:
            _slide_se_sp(grid, (r, k), kp, trace)


def compose_sp(qd: Tableau, t: Tableau, trace: bool = False) -> Tableau:
    """Juxtapose a QD with an ordinary symplectic tableau and undo the slides."""
    if not (qd.symplectic and t.symplectic):
        raise ValueError("compose_sp expects barred blocks")
    if qd.family != "QD" or t.family != "T":
        raise ValueError("compose_sp expects (QD, T)")
    if qd.n != t.n:
        raise ValueError("alphabet bounds differ")
    for part in (qd, t):
        bad = validate(part)
        if bad is not None:
            raise ValueError(f"invalid block: {bad}")
    n = qd.n
    lam = Partition(t.shape.parts)
    mu = mu_from_lambda(lam, n)
    shape = Shape(mu.parts, True)

    grid: Grid = {}
    for r, c, e in qd.cells():
        grid[(r, c)] = e
    for r, c, e in t.cells():
        grid[(r, n + c)] = e

    log: Optional[list] = [] if trace else None
    for k in range(n, 0, -1):
        _chi_inverse(grid, k, log)
        _psi_inverse(grid, k, log)
        kbp = Entry(k, primed=True, barred=True)
        for pos in sorted((rc for rc, e in grid.items() if e == kbp),
                          key=lambda rc: rc[0], reverse=True):
            if pos[1] != k:
                raise SlideError(f"{kbp} started outside column {k}")
            _slide_se_sp(grid, pos, kbp, log)

    rows = tuple(tuple(grid[(r, c)] for c in shape.col_range(r))
                 for r in range(1, shape.rows + 1))
    out = Tableau(shape, "QST", n, True, rows)
    bad = validate(out)
    if bad is not None:
        raise SlideError(f"composed tableau invalid: {bad}")
    return out
