"""Tableau entries: a letter with optional prime and (symplectic mode) optional bar.

The two total orders in use are
    1' < 1 < 2' < 2 < ... < n' < n                       (unbarred alphabet)
    1~' < 1~ < 1' < 1 < 2~' < 2~ < 2' < 2 < ...          (barred alphabet)
and both are realised by one ordinal so every comparison is an integer compare.
Bars render as ``~`` in text and JSON ("3~" and "3~'").
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

# position of each (barred, primed) combination inside one letter block
_OFFSET = {(True, True): 0, (True, False): 1, (False, True): 2, (False, False): 3}


@total_ordering
@dataclass(frozen=True)
class Entry:
    letter: int
    primed: bool = False
    barred: bool = False

    def __post_init__(self):
        if self.letter < 1:
            raise ValueError(f"letter must be positive, got {self.letter}")

    @property
    def ordinal(self) -> int:
        return 4 * (self.letter - 1) + _OFFSET[(self.barred, self.primed)]

    def __lt__(self, other: "Entry") -> bool:
        return self.ordinal < other.ordinal

    def unprimed(self) -> "Entry":
        return Entry(self.letter, False, self.barred)

    def unbarred(self) -> "Entry":
        return Entry(self.letter, self.primed, False)

    def __str__(self):
        text = f"{self.letter}~" if self.barred else str(self.letter)
        return text + "'" if self.primed else text

    def __repr__(self):
        return f"Entry({self})"


def parse_entry(text: str) -> Entry:
    text = text.strip()
    primed = text.endswith("'")
    if primed:
        text = text[:-1]
    barred = text.endswith("~")
    if barred:
        text = text[:-1]
    return Entry(int(text), primed=primed, barred=barred)


def alphabet(n: int, primes: bool, barred: bool) -> list[Entry]:
    """All admissible entries for letters 1..n in increasing order."""
    out = []
    for letter in range(1, n + 1):
        for b in ([True, False] if barred else [False]):
            for p in ([True, False] if primes else [False]):
                out.append(Entry(letter, primed=p, barred=b))
    return sorted(out, key=lambda e: e.ordinal)
