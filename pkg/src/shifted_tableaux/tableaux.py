"""Shapes, tableau families, validation, enumeration and statistics.

Families:

====== ======================= ==============================================
family shape                   rules (gl mode / sp mode additions)
====== ======================= ==============================================
T      ordinary F^lambda       rows weak, columns strict / letter >= row
ST     shifted SF^mu           rows weak, columns weak, diagonals strict /
                               k-th diagonal entry has letter k
PST    shifted SF^mu           rows weak, columns weak, no repeated unprimed
                               in a column, no repeated primed in a row, no
                               primes on the diagonal / diagonal letter k
QST    shifted SF^mu           as PST but primes allowed on the diagonal /
                               diagonal letter k, primes and bars free
PD     shifted staircase       unprimed k only in row k, primed k' only in
                               column k, no primes on the diagonal
QD     shifted staircase       as PD with diagonal primes allowed
====== ======================= ==============================================

In sp mode the alphabet gains barred letters; "letter" rules are bar-blind.
PD/QD carry no ordering constraints at all, only the positional ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .entries import Entry, alphabet, parse_entry
from .partitions import Partition, StrictPartition, staircase

FAMILIES = ("T", "ST", "PST", "QST", "PD", "QD")
PRIMED_FAMILIES = ("PST", "QST", "PD", "QD")


class EnumerationLimit(Exception):
    """Raised when an enumeration exceeds its configured ceiling."""


@dataclass(frozen=True)
class Shape:
    parts: tuple[int, ...]
    shifted: bool

    def __post_init__(self):
        if self.shifted:
            StrictPartition(self.parts)
        else:
            Partition(self.parts)

    @classmethod
    def from_partition(cls, p: Partition, shifted: bool) -> "Shape":
        return cls(tuple(p.parts), shifted)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def col_range(self, r: int) -> range:
        """Columns occupied by row r (1-indexed)."""
        start = r if self.shifted else 1
        return range(start, start + self.parts[r - 1])

    def cells(self) -> Iterator[tuple[int, int]]:
        for r in range(1, self.rows + 1):
            for c in self.col_range(r):
                yield (r, c)

    def contains(self, r: int, c: int) -> bool:
        return 1 <= r <= self.rows and c in self.col_range(r)

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class Violation:
    rule: str
    cell: Optional[tuple[int, int]]
    message: str

    def __str__(self):
        at = f" at {self.cell}" if self.cell else ""
        return f"{self.rule}{at}: {self.message}"


@dataclass(frozen=True)
class Tableau:
    shape: Shape
    family: str
    n: int
    symplectic: bool
    rows: tuple[tuple[Entry, ...], ...] = field(default=())

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if len(self.rows) != self.shape.rows:
            raise ValueError(f"{len(self.rows)} rows for shape {self.shape.parts}")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != self.shape.parts[r - 1]:
                raise ValueError(f"row {r} has {len(row)} cells, shape wants "
                                 f"{self.shape.parts[r - 1]}")

    def entry(self, r: int, c: int) -> Entry:
        return self.rows[r - 1][c - self.shape.col_range(r).start]

    def cells(self) -> Iterator[tuple[int, int, Entry]]:
        for r, c in self.shape.cells():
            yield r, c, self.entry(r, c)

    def grid(self) -> dict[tuple[int, int], Entry]:
        return {(r, c): e for r, c, e in self.cells()}

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "shifted": self.shape.shifted,
            "family": self.family,
            "n": self.n,
            "mode": "sp" if self.symplectic else "gl",
            "rows": [[str(e) for e in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        if isinstance(data, str):
            data = json.loads(data)
        rows = tuple(tuple(parse_entry(s) for s in row) for row in data["rows"])
        mode = data.get("mode")
        if mode is None:
            mode = "sp" if any(e.barred for row in rows for e in row) else "gl"
        return cls(
            shape=Shape(tuple(data["shape"]), bool(data["shifted"])),
            family=data["family"],
            n=int(data["n"]),
            symplectic=(mode == "sp"),
            rows=rows,
        )

    def render(self) -> str:
        """Aligned plain-text grid, shifted rows indented to their diagonal."""
        width = max((len(str(e)) for row in self.rows for e in row), default=1) + 1
        lines = []
        for r, row in enumerate(self.rows, start=1):
            indent = " " * width * (r - 1) if self.shape.shifted else ""
            lines.append(indent + "".join(str(e).ljust(width) for e in row).rstrip())
        return "\n".join(lines)


def tableau_from_rows(rows, family: str, n: int, shifted: bool,
                      symplectic: bool = False) -> Tableau:
    """Convenience constructor from nested entry strings or Entry values."""
    entry_rows = tuple(
        tuple(e if isinstance(e, Entry) else parse_entry(e) for e in row)
        for row in rows)
    shape = Shape(tuple(len(row) for row in entry_rows), shifted)
    return Tableau(shape, family, n, symplectic, entry_rows)


# -- validation ----------------------------------------------------------


def _cell_violation(t: Tableau, grid, r: int, c: int, e: Entry) -> Optional[Violation]:
    fam, sp = t.family, t.symplectic
    prefix = fam
    if e.letter > t.n:
        return Violation("alphabet", (r, c), f"letter {e.letter} exceeds n={t.n}")
    if e.barred and not sp:
        return Violation("alphabet", (r, c), "barred entry outside sp mode")
    if e.primed and fam in ("T", "ST"):
        return Violation("alphabet", (r, c), f"primed entry in family {fam}")

    if fam in ("PD", "QD"):
        if e.primed:
            if e.letter != c:
                return Violation(prefix + "2", (r, c), f"primed {e} off column {e.letter}")
        elif e.letter != r:
            return Violation(prefix + "1", (r, c), f"unprimed {e} off row {e.letter}")
        if fam == "PD" and c == r and e.primed:
            return Violation("PD3", (r, c), "primed entry on the main diagonal")
        return None

    west = grid.get((r, c - 1))
    north = grid.get((r - 1, c))
    if west is not None and e < west:
        return Violation(prefix + "1", (r, c), f"{e} < western neighbour {west}")
    if north is not None:
        if fam == "T":
            if e <= north:
                return Violation("T2", (r, c), f"{e} <= northern neighbour {north}")
        else:
            if e < north:
                return Violation(prefix + "2", (r, c), f"{e} < northern neighbour {north}")
            if fam in ("PST", "QST") and e == north and not e.primed:
                return Violation(prefix + "3", (r, c), f"repeated unprimed {e} in column")
    if fam in ("PST", "QST") and e.primed and west == e:
        return Violation(prefix + "4", (r, c), f"repeated primed {e} in row")
    if fam == "ST":
        nw = grid.get((r - 1, c - 1))
        if nw is not None and not nw < e:
            return Violation("ST3", (r, c), f"diagonal not strict: {nw} !< {e}")
    if fam == "T" and sp and e.letter < r:
        return Violation("T3bar", (r, c), f"{e} below row {e.letter}")
    if c == r and t.shape.shifted:
        if fam == "PST" and e.primed:
            return Violation("PST5", (r, c), "primed entry on the main diagonal")
        if sp and fam in ("ST", "PST", "QST") and e.letter != r:
            rule = {"ST": "ST4bar", "PST": "PST5bar", "QST": "QST5bar"}[fam]
            return Violation(rule, (r, c), f"diagonal entry {e} has letter != {r}")
    return None


def validate(t: Tableau) -> Optional[Violation]:
    """First family-rule violation, or None when the tableau is valid."""
    if t.family == "T":
        if t.shape.shifted:
            return Violation("shape", None, "family T needs an ordinary shape")
    else:
        if not t.shape.shifted:
            return Violation("shape", None, f"family {t.family} needs a shifted shape")
    if t.family in ("PD", "QD") and t.shape.parts != staircase(t.n).parts:
        return Violation("shape", None, f"family {t.family} needs the staircase of {t.n}")
    grid = t.grid()
    for r, c, e in t.cells():
        v = _cell_violation(t, grid, r, c, e)
        if v is not None:
            return v
    return None


def is_valid(t: Tableau) -> bool:
    return validate(t) is None


# -- enumeration ----------------------------------------------------------


def enumerate_tableaux(shape: Shape, family: str, n: int, symplectic: bool = False,
                       limit: int | None = None,
                       ceiling: int | None = None) -> Iterator[Tableau]:
    """All valid fillings, exactly once each, in row-major lexicographic order.

    Backtracks cell by cell with incremental rule checks; ``limit`` truncates
    the stream while ``ceiling`` raises EnumerationLimit when exceeded.
    """
    letters = alphabet(n, primes=family in PRIMED_FAMILIES, barred=symplectic)
    cells = list(shape.cells())
    probe = Tableau(shape, family, n, symplectic,
                    tuple(tuple(Entry(1) for _ in shape.col_range(r))
                          for r in range(1, shape.rows + 1)))
    grid: dict[tuple[int, int], Entry] = {}
    emitted = 0

    def rebuild() -> Tableau:
        rows = tuple(tuple(grid[(r, c)] for c in shape.col_range(r))
                     for r in range(1, shape.rows + 1))
        return Tableau(shape, family, n, symplectic, rows)

    def walk(i: int):
        nonlocal emitted
        if i == len(cells):
            emitted += 1
            if ceiling is not None and emitted > ceiling:
                raise EnumerationLimit(f"more than {ceiling} tableaux")
            yield rebuild()
            return
        r, c = cells[i]
        for e in letters:
            if _cell_violation(probe, grid, r, c, e) is None:
                grid[(r, c)] = e
                yield from walk(i + 1)
                del grid[(r, c)]

    for t in walk(0):
        yield t
        if limit is not None:
            limit -= 1
            if limit <= 0:
                return


# -- statistics -----------------------------------------------------------


def _components(cells_by_entry: dict[Entry, list[tuple[int, int]]]) -> dict[Entry, int]:
    """Connected components of equal-entry cells under shared-edge adjacency."""
    out = {}
    for e, cells in cells_by_entry.items():
        todo = set(cells)
        count = 0
        while todo:
            count += 1
            stack = [todo.pop()]
            while stack:
                r, c = stack.pop()
                for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                    if nb in todo:
                        todo.remove(nb)
                        stack.append(nb)
        out[e] = count
    return out


def _cells_by_entry(t: Tableau) -> dict[Entry, list[tuple[int, int]]]:
    by: dict[Entry, list[tuple[int, int]]] = {}
    for r, c, e in t.cells():
        by.setdefault(e, []).append((r, c))
    return by


@dataclass(frozen=True)
class GlStats:
    wgt: tuple[int, ...]
    strips: int
    height: int


@dataclass(frozen=True)
class SpStats:
    wgt: tuple[int, ...]
    bar: int
    strips: int
    var: int


def gl_stats(t: Tableau) -> GlStats:
    """Letter multiplicities, strip-component count, and the height statistic."""
    if t.family != "ST" or t.symplectic:
        raise ValueError("gl statistics are defined on unbarred ST tableaux")
    v = validate(t)
    if v is not None:
        raise ValueError(f"invalid tableau: {v}")
    by = _cells_by_entry(t)
    con = _components(by)
    wgt = [0] * t.n
    height = 0
    for e, cells in by.items():
        wgt[e.letter - 1] = len(cells)
        height += len({r for r, _ in cells}) - con[e]
    return GlStats(tuple(wgt), sum(con.values()), height)


def sp_stats(t: Tableau) -> SpStats:
    """Signed weight, barred count, strips, and the row/column variation."""
    if t.family != "ST" or not t.symplectic:
        raise ValueError("sp statistics are defined on barred ST tableaux")
    v = validate(t)
    if v is not None:
        raise ValueError(f"invalid tableau: {v}")
    by = _cells_by_entry(t)
    con = _components(by)
    wgt = [0] * t.n
    bar = 0
    var = 0
    for e, cells in by.items():
        wgt[e.letter - 1] += -len(cells) if e.barred else len(cells)
        if e.barred:
            bar += len(cells)
            var += len({c for _, c in cells}) - con[e]
        else:
            var += len({r for r, _ in cells}) - con[e]
    return SpStats(tuple(wgt), bar, sum(con.values()), var)


def weight_monomial(t: Tableau, deform: bool = False):
    """Product over cells of x_k / y_k (primed), inverted with t^2 when barred."""
    from .polynomials import LaurentPoly, _KINDS, _mono

    exps: dict = {}
    for _, _, e in t.cells():
        kind = _KINDS["y"] if e.primed else _KINDS["x"]
        key = (kind, e.letter)
        exps[key] = exps.get(key, 0) + (-1 if e.barred else 1)
        if e.barred and deform:
            tkey = (_KINDS["t"], 0)
            exps[tkey] = exps.get(tkey, 0) + 2
    return LaurentPoly({_mono(exps.items()): 1})


def strip_primes(t: Tableau) -> Tableau:
    """Delete primes, mapping PST/QST to ST and PD/QD stay positional-free T-like."""
    target = {"PST": "ST", "QST": "ST"}.get(t.family, t.family)
    rows = tuple(tuple(e.unprimed() for e in row) for row in t.rows)
    return Tableau(t.shape, target, t.n, t.symplectic, rows)
