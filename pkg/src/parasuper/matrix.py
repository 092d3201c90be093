"""Graded matrices over Q(sqrt 2) and the general graded bracket.

A matrix lives on an :class:`IndexGradingScheme`, which assigns a grading to
every row/column label.  The unit matrix ``e_ij`` then has degree
``d_i + d_j`` and a general matrix splits into four homogeneous components.
Entries are stored sparsely, keyed by (row, column) *positions*.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import GradingMismatchError
from .grading import ALL_GRADINGS, Grading, code_pairing
from .scalar import ONE, QSqrt2

Label = Hashable


@dataclass(frozen=True)
class IndexGradingScheme:
    """Row/column labels in matrix order, each carrying a grading."""

    labels: tuple[Label, ...]
    grades: tuple[Grading, ...]
    position: Mapping[Label, int] = field(init=False, repr=False, compare=False)
    codes: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.grades):
            raise ValueError("every label needs exactly one grading")
        if not self.labels:
            raise ValueError("a scheme needs at least one index")
        pos = {lab: p for p, lab in enumerate(self.labels)}
        if len(pos) != len(self.labels):
            raise ValueError("duplicate index labels")
        object.__setattr__(self, "position", pos)
        object.__setattr__(self, "codes", tuple(g.code for g in self.grades))

    @classmethod
    def linear(cls, grades: Sequence[Grading]) -> IndexGradingScheme:
        """Scheme over the 1-based integer segment ``1..len(grades)``."""
        return cls(tuple(range(1, len(grades) + 1)), tuple(grades))

    @property
    def total_dim(self) -> int:
        return len(self.labels)

    def grade_of(self, label: Label) -> Grading:
        return self.grades[self.position[label]]

    def degree(self, i: Label, j: Label) -> Grading:
        return self.grade_of(i) + self.grade_of(j)


class GradedMatrix:
    """Square sparse matrix with exact entries on a graded index scheme.

    Instances are immutable; arithmetic returns new matrices.
    """

    __slots__ = ("scheme", "_entries")

    def __init__(self, scheme: IndexGradingScheme, entries: Mapping[tuple[Label, Label], object] | None = None):
        self.scheme = scheme
        ent: dict[tuple[int, int], QSqrt2] = {}
        n = scheme.total_dim
        for (i, j), v in (entries or {}).items():
            try:
                key = (scheme.position[i], scheme.position[j])
            except KeyError:
                raise IndexError(f"index ({i!r}, {j!r}) outside the scheme") from None
            val = QSqrt2.coerce(v)
            if key in ent:
                val = ent[key] + val
            ent[key] = val
        self._entries = {k: v for k, v in ent.items() if v}
        assert all(0 <= r < n and 0 <= c < n for r, c in self._entries)

    @classmethod
    def _from_positions(cls, scheme: IndexGradingScheme, entries: dict[tuple[int, int], QSqrt2]) -> GradedMatrix:
        obj = object.__new__(cls)
        obj.scheme = scheme
        obj._entries = {k: v for k, v in entries.items() if v}
        return obj

    @classmethod
    def zero(cls, scheme: IndexGradingScheme) -> GradedMatrix:
        return cls._from_positions(scheme, {})

    @classmethod
    def unit(cls, scheme: IndexGradingScheme, i: Label, j: Label) -> GradedMatrix:
        """The matrix unit ``e_ij`` (1 in place (i, j), zeros elsewhere)."""
        return cls(scheme, {(i, j): ONE})

    # -- access ---------------------------------------------------------
    @property
    def entries(self) -> dict[tuple[int, int], QSqrt2]:
        """Nonzero entries keyed by positions, sorted by (row, col)."""
        return dict(sorted(self._entries.items()))

    def items(self) -> Iterator[tuple[tuple[Label, Label], QSqrt2]]:
        labels = self.scheme.labels
        for (r, c), v in sorted(self._entries.items()):
            yield (labels[r], labels[c]), v

    def entry(self, i: Label, j: Label) -> QSqrt2:
        pos = self.scheme.position
        return self._entries.get((pos[i], pos[j]), QSqrt2())

    def __len__(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def vector(self) -> dict[int, QSqrt2]:
        """Flatten to ``{row*dim + col: value}`` for exact linear algebra."""
        n = self.scheme.total_dim
        return {r * n + c: v for (r, c), v in self._entries.items()}

    @classmethod
    def from_vector(cls, scheme: IndexGradingScheme, vec: Mapping[int, QSqrt2]) -> GradedMatrix:
        n = scheme.total_dim
        return cls._from_positions(scheme, {divmod(k, n): v for k, v in vec.items()})

    # -- grading --------------------------------------------------------
    def entry_degree_codes(self) -> set[int]:
        codes = self.scheme.codes
        return {codes[r] ^ codes[c] for r, c in self._entries}

    def is_homogeneous(self) -> bool:
        return len(self.entry_degree_codes()) <= 1

    @property
    def degree(self) -> Grading | None:
        """Grading of a nonzero homogeneous matrix; ``None`` otherwise."""
        found = self.entry_degree_codes()
        if len(found) != 1:
            return None
        return Grading.from_code(found.pop())

    def components(self) -> dict[Grading, GradedMatrix]:
        return homogeneous_components(self)

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: GradedMatrix) -> None:
        if other.scheme is not self.scheme and other.scheme != self.scheme:
            raise GradingMismatchError("matrices are defined on different grading schemes")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.scheme == other.scheme and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __add__(self, other: GradedMatrix) -> GradedMatrix:
        self._check(other)
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out[k] + v if k in out else v
        return GradedMatrix._from_positions(self.scheme, out)

    def __neg__(self) -> GradedMatrix:
        return GradedMatrix._from_positions(self.scheme, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: GradedMatrix) -> GradedMatrix:
        return self + (-other)

    def scale(self, c: QSqrt2 | int) -> GradedMatrix:
        c = QSqrt2.coerce(c)
        if not c:
            return GradedMatrix.zero(self.scheme)
        return GradedMatrix._from_positions(self.scheme, {k: c * v for k, v in self._entries.items()})

    def __rmul__(self, c: QSqrt2 | int) -> GradedMatrix:
        return self.scale(c)

    def __matmul__(self, other: GradedMatrix) -> GradedMatrix:
        self._check(other)
        rows = _rows(other._entries)
        out: dict[tuple[int, int], QSqrt2] = {}
        for (i, j), u in self._entries.items():
            for l, v in rows.get(j, ()):
                k = (i, l)
                p = u * v
                out[k] = out[k] + p if k in out else p
        return GradedMatrix._from_positions(self.scheme, out)

    def __repr__(self) -> str:
        body = ", ".join(f"({i!r},{j!r}): {v}" for (i, j), v in self.items())
        return f"GradedMatrix({{{body}}})"

    def to_json(self) -> list[dict]:
        return [{"row": i, "col": j, "value": v.to_json()} for (i, j), v in self.items()]


def _rows(entries: Mapping[tuple[int, int], QSqrt2]) -> dict[int, list[tuple[int, QSqrt2]]]:
    rows: dict[int, list[tuple[int, QSqrt2]]] = defaultdict(list)
    for (r, c), v in entries.items():
        rows[r].append((c, v))
    return rows


def homogeneous_components(m: GradedMatrix) -> dict[Grading, GradedMatrix]:
    """Split ``m`` into its four homogeneous pieces, keyed by grading.

    Entry (i, j) goes to the component of grading ``d_i + d_j``; every
    grading is present in the result, possibly as a zero matrix.
    """
    codes = m.scheme.codes
    parts: dict[int, dict[tuple[int, int], QSqrt2]] = {g.code: {} for g in ALL_GRADINGS}
    for (r, c), v in m._entries.items():
        parts[codes[r] ^ codes[c]][(r, c)] = v
    return {g: GradedMatrix._from_positions(m.scheme, parts[g.code]) for g in ALL_GRADINGS}


def graded_bracket(x: GradedMatrix, y: GradedMatrix) -> GradedMatrix:
    """General bracket ``[[x, y]]``, bilinear over homogeneous pieces.

    For homogeneous ``x`` of degree a and ``y`` of degree b this is
    ``x y - (-1)**(a.b) y x``.  Each matrix unit is homogeneous, so expanding
    both operands entrywise is the same bilinear extension as splitting into
    the four components first, and cheaper.
    """
    x._check(y)
    codes = x.scheme.codes
    xe, ye = x._entries, y._entries
    out: dict[tuple[int, int], QSqrt2] = {}
    yrows = _rows(ye)
    for (i, j), u in xe.items():
        for l, v in yrows.get(j, ()):
            k = (i, l)
            p = u * v
            out[k] = out[k] + p if k in out else p
    xrows = _rows(xe)
    for (k_, i), v in ye.items():
        gy = codes[k_] ^ codes[i]
        for j, u in xrows.get(i, ()):
            gx = codes[i] ^ codes[j]
            p = v * u
            key = (k_, j)
            if code_pairing(gx, gy):
                out[key] = out[key] + p if key in out else p
            else:
                out[key] = out[key] - p if key in out else -p
    return GradedMatrix._from_positions(x.scheme, out)


def commutator(x: GradedMatrix, y: GradedMatrix) -> GradedMatrix:
    """Plain ``xy - yx`` with no grading sign."""
    return x @ y - y @ x


def anticommutator(x: GradedMatrix, y: GradedMatrix) -> GradedMatrix:
    """Plain ``xy + yx``."""
    return x @ y + y @ x


def linear_combination(scheme: IndexGradingScheme, terms: Iterable[tuple[QSqrt2 | int, GradedMatrix]]) -> GradedMatrix:
    out = GradedMatrix.zero(scheme)
    for c, m in terms:
        if c:
            out = out + m.scale(c)
    return out
