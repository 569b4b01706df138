"""Partitions, strict partitions and the staircase arithmetic used throughout."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of non-negative integers, trailing zeros stripped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(p) for p in text.split(",")))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-indexed; zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Column-count conjugate: the k-th part counts parts >= k."""
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p >= k)
                               for k in range(1, self.parts[0] + 1)))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True)
class StrictPartition(Partition):
    """A strictly decreasing tuple of positive integers."""

    def __post_init__(self):
        super().__post_init__()
        if any(self.parts[i] <= self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts not strictly decreasing: {self.parts}")

    @classmethod
    def from_string(cls, text: str) -> "StrictPartition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(p) for p in text.split(",")))


def staircase(n: int) -> StrictPartition:
    """The staircase (n, n-1, ..., 1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return StrictPartition(tuple(range(n, 0, -1)))


def mu_from_lambda(lam: Partition, n: int) -> StrictPartition:
    """Shift lam by the staircase: mu_i = lam_i + (n - i + 1), always of length n."""
    if n < 1:
        raise ValueError("n must be positive")
    if lam.length > n:
        raise ValueError(f"partition {lam} has more than n={n} parts")
    return StrictPartition(tuple(lam.part(i) + (n - i + 1) for i in range(1, n + 1)))


def lambda_from_mu(mu: StrictPartition, n: int) -> Partition:
    """Inverse of mu_from_lambda; rejects mu that is not a staircase shift."""
    if mu.length != n:
        raise ValueError(f"{mu} does not have length n={n}")
    parts = tuple(mu.part(i) - (n - i + 1) for i in range(1, n + 1))
    if any(p < 0 for p in parts):
        raise ValueError(f"{mu} is not of the form lambda + staircase({n})")
    return Partition(parts)


def rect_complement_conjugate(lam: Partition, n: int, m: int) -> Partition:
    """Conjugate of the complement of lam in the n x (m-n) rectangle."""
    if m <= n:
        raise ValueError("m must exceed n")
    if lam.length > n or lam.part(1) > m - n:
        raise ValueError(f"{lam} does not fit in the {n}x{m - n} rectangle")
    complement = Partition(tuple(m - n - lam.part(n - i + 1) for i in range(1, n + 1)))
    return complement.conjugate()
