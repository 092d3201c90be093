"""Z2 x Z2 grading vectors."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Grading:
    """An element ``(a1, a2)`` of Z2 x Z2."""

    a1: int
    a2: int

    def __post_init__(self) -> None:
        if self.a1 not in (0, 1) or self.a2 not in (0, 1):
            raise ValueError(f"grading components must be bits, got ({self.a1}, {self.a2})")

    @property
    def code(self) -> int:
        # packed form used by the matrix kernels: a1 is the high bit
        return (self.a1 << 1) | self.a2

    @classmethod
    def from_code(cls, code: int) -> Grading:
        return _BY_CODE[code]

    def __add__(self, other: Grading) -> Grading:
        return _BY_CODE[self.code ^ other.code]

    def pairing(self, other: Grading) -> int:
        return grading_pairing(self, other)

    def self_pairing(self) -> int:
        return grading_pairing(self, self)

    def __iter__(self):
        yield self.a1
        yield self.a2

    def __str__(self) -> str:
        return f"({self.a1},{self.a2})"


_BY_CODE = {c: Grading(c >> 1, c & 1) for c in range(4)}

G00 = _BY_CODE[0b00]
G01 = _BY_CODE[0b01]
G10 = _BY_CODE[0b10]
G11 = _BY_CODE[0b11]

ALL_GRADINGS = (G00, G11, G10, G01)


def grading_add(a: Grading, b: Grading) -> Grading:
    return a + b


def grading_pairing(a: Grading, b: Grading) -> int:
    """Return ``a1*b1 + a2*b2 mod 2``; the bracket sign is ``(-1)**pairing``."""
    return (a.a1 * b.a1 + a.a2 * b.a2) & 1


def code_pairing(c1: int, c2: int) -> int:
    x = c1 & c2
    return ((x >> 1) ^ x) & 1
