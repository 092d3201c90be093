"""Incremental exact row reduction over Q(sqrt 2) on sparse vectors."""

from __future__ import annotations

from typing import Hashable, Mapping

from .scalar import QSqrt2

Vector = dict[int, QSqrt2]


def _axpy(target: Vector, coef: QSqrt2, src: Mapping[int, QSqrt2]) -> None:
    # target -= coef * src, dropping cancelled entries
    for k, v in src.items():
        nv = target.get(k)
        nv = -(coef * v) if nv is None else nv - coef * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class ExactSpan:
    """Span of a growing list of vectors, kept in echelon form.

    Every echelon row remembers how it is written in terms of the accepted
    members, so membership tests also return exact coordinates.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[int, Vector, Vector]] = []  # pivot, row, combination
        self.members: list[Hashable] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Mapping[int, QSqrt2]) -> tuple[Vector, Vector]:
        res: Vector = {k: v for k, v in vec.items() if v}
        comb: Vector = {}
        for pivot, row, rcomb in self._rows:
            c = res.get(pivot)
            if c is None:
                continue
            _axpy(res, c, row)
            for m, t in rcomb.items():
                nv = comb.get(m)
                nv = c * t if nv is None else nv + c * t
                if nv:
                    comb[m] = nv
                else:
                    comb.pop(m, None)
        return res, comb

    def contains(self, vec: Mapping[int, QSqrt2]) -> bool:
        return not self._reduce(vec)[0]

    def coordinates(self, vec: Mapping[int, QSqrt2]) -> dict[int, QSqrt2] | None:
        """Coefficients on ``members`` (by member number), or ``None`` if outside the span."""
        res, comb = self._reduce(vec)
        if res:
            return None
        return dict(sorted(comb.items()))

    def add(self, vec: Mapping[int, QSqrt2], tag: Hashable = None) -> bool:
        """Adjoin ``vec`` if it is independent of the current span."""
        res, comb = self._reduce(vec)
        if not res:
            return False
        k = len(self.members)
        self.members.append(tag if tag is not None else k)
        pivot = min(res)
        inv = res[pivot].inverse()
        row = {c: v * inv for c, v in res.items()}
        # res = vec - sum(comb) so the new row is (e_k - comb) / pivot value
        rcomb = {m: -(t * inv) for m, t in comb.items()}
        rcomb[k] = inv
        self._rows.append((pivot, row, rcomb))
        return True


def rank(vectors) -> int:
    span = ExactSpan()
    for v in vectors:
        span.add(v)
    return span.rank
