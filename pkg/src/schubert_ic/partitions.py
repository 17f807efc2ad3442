"""Partitions, rectangles and the partition maps used on Schur-basis indices."""

from __future__ import annotations

import os
from math import comb
from typing import Iterable, NamedTuple

DEFAULT_ENUM_LIMIT = 64
ENUM_LIMIT_ENV = "SCHUBERT_ENUM_LIMIT"


class PartitionError(ValueError):
    pass


class EnumerationLimitError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the configured cap."""


class ClassificationError(RuntimeError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition([2, 1, 0])``
    and ``Partition([2, 1])`` are the same object value.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise PartitionError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the comma-separated text form; ``""`` is the zero partition."""
        text = text.strip().strip("()")
        if not text:
            return cls()
        try:
            return cls(int(x) for x in text.split(","))
        except ValueError as exc:
            raise PartitionError(f"cannot parse partition {text!r}: {exc}") from None

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """0-based part access, zero past the end."""
        return self[i] if i < len(self) else 0

    def padded(self, rows: int) -> tuple[int, ...]:
        if len(self) > rows:
            raise PartitionError(f"{self} has more than {rows} parts")
        return tuple(self) + (0,) * (rows - len(self))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"Partition(({', '.join(str(x) for x in self)}{',' if len(self) == 1 else ''}))"


EMPTY = Partition()


class Rectangle(NamedTuple):
    rows: int
    cols: int

    @property
    def area(self) -> int:
        return self.rows * self.cols

    def __str__(self) -> str:
        return f"{self.rows}x{self.cols}"


def enum_limit() -> int:
    value = os.environ.get(ENUM_LIMIT_ENV)
    if value is None or not value.strip():
        return DEFAULT_ENUM_LIMIT
    return int(value)


def contains(rect: Rectangle, lam: Partition) -> bool:
    if not lam:
        return True
    return len(lam) <= rect.rows and lam[0] <= rect.cols


def _box_partitions(rows: int, cols: int, weight: int) -> list[Partition]:
    # lexicographically descending
    out = []

    def rec(prefix, remaining, slots, cap):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if slots == 0 or remaining > slots * cap:
            return
        for x in range(min(cap, remaining), 0, -1):
            prefix.append(x)
            rec(prefix, remaining - x, slots - 1, x)
            prefix.pop()

    rec([], weight, rows, cols)
    return out


def enumerate_by_weight(rect: Rectangle, limit: int | None = None) -> list[list[Partition]]:
    """All partitions inside ``rect``, grouped by weight ``0..rows*cols``."""
    if rect.rows < 0 or rect.cols < 0:
        raise PartitionError(f"negative rectangle {rect}")
    limit = enum_limit() if limit is None else limit
    if rect.area > limit:
        raise EnumerationLimitError(
            f"rectangle {rect} has area {rect.area} > enumeration limit {limit}; "
            "use the closed-form Gaussian binomial instead"
        )
    return [_box_partitions(rect.rows, rect.cols, w) for w in range(rect.area + 1)]


def partitions_in(rect: Rectangle, limit: int | None = None) -> list[Partition]:
    """Flat basis list in the canonical order (by weight, then lex descending)."""
    return [lam for level in enumerate_by_weight(rect, limit) for lam in level]


def basis_count(rect: Rectangle) -> int:
    return comb(rect.rows + rect.cols, rect.rows)


def add_to_parts(lam: Partition, rows: int, amount: int) -> Partition:
    if len(lam) > rows:
        raise PartitionError(f"{lam} has more than {rows} parts")
    return Partition(x + amount for x in lam.padded(rows))


def gysin_compose(mu: Partition, lam: Partition, head_rows: int, shift: int) -> Partition:
    """Concatenate ``mu`` raised by ``shift`` on ``head_rows`` rows with ``lam``."""
    if shift < 0:
        raise PartitionError("shift must be nonnegative")
    if lam and lam[0] > shift:
        raise PartitionError(f"not a partition: lam_1={lam[0]} exceeds shift {shift}")
    head = add_to_parts(mu, head_rows, shift)
    return Partition(head.padded(head_rows) + tuple(lam))


def gysin_split(nu: Partition, head_rows: int, shift: int) -> tuple[Partition, Partition]:
    """Inverse of :func:`gysin_compose` on its image."""
    padded = nu.padded(max(head_rows, len(nu)))
    head, tail = padded[:head_rows], padded[head_rows:]
    if any(x < shift for x in head):
        raise PartitionError(f"{nu} is not in the image of gysin_compose")
    return Partition(x - shift for x in head), Partition(tail)


def classify_stratum(nu: Partition, p: int, l: int, c: int) -> int:
    """Stratum index q in [l, p] whose Gysin image contains ``nu``.

    Class q means the first p-q parts are >= c+1-q and the remaining
    q-l parts are <= c+1-q (``nu`` padded to p-l parts).
    """
    parts = nu.padded(p - l)
    hits = []
    for q in range(l, p + 1):
        t = c + 1 - q
        head, tail = parts[: p - q], parts[p - q:]
        if all(x >= t for x in head) and all(x <= t for x in tail):
            hits.append(q)
    if len(hits) != 1:
        raise ClassificationError(f"{nu} matched classes {hits} for p={p}, l={l}, c={c}")
    return hits[0]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for x in lam if x > j) for j in range(lam[0]))
