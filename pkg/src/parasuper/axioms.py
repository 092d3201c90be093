"""Checks of the grading, graded-symmetry and graded-Jacobi identities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .errors import PreconditionError
from .grading import G00, Grading, grading_add
from .matrix import GradedMatrix, graded_bracket

Bracket = Callable[[GradedMatrix, GradedMatrix], GradedMatrix]


@dataclass(frozen=True)
class Check:
    ok: bool
    witness: dict[str, Any] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _homogeneous_degree(m: GradedMatrix, name: str) -> Grading:
    if not m.is_homogeneous():
        raise PreconditionError(f"{name} must be homogeneous")
    # the zero matrix is homogeneous of every degree; any choice gives the same sign
    return m.degree or G00


def _first_difference(lhs: GradedMatrix, rhs: GradedMatrix) -> dict[str, Any]:
    diff = lhs - rhs
    (i, j), _ = next(diff.items())
    return {"entry": [i, j], "lhs": lhs.entry(i, j).to_json(), "rhs": rhs.entry(i, j).to_json()}


def verify_grading(x: GradedMatrix, y: GradedMatrix, bracket: Bracket = graded_bracket) -> Check:
    """deg [[x, y]] == deg x + deg y (or the bracket vanishes)."""
    a = _homogeneous_degree(x, "x")
    b = _homogeneous_degree(y, "y")
    z = bracket(x, y)
    if z.is_zero() or x.is_zero() or y.is_zero():
        return Check(z.is_zero())
    if z.degree == grading_add(a, b):
        return Check(True)
    return Check(False, {"expected": list(grading_add(a, b)), "found": sorted(z.entry_degree_codes())})


def verify_symmetry(x: GradedMatrix, y: GradedMatrix, bracket: Bracket = graded_bracket) -> Check:
    """[[x, y]] == -(-1)**(a.b) [[y, x]] for homogeneous x, y."""
    a = _homogeneous_degree(x, "x")
    b = _homogeneous_degree(y, "y")
    lhs = bracket(x, y)
    rhs = bracket(y, x)
    rhs = rhs if a.pairing(b) else -rhs
    if lhs == rhs:
        return Check(True)
    return Check(False, _first_difference(lhs, rhs))


def verify_jacobi(x: GradedMatrix, y: GradedMatrix, z: GradedMatrix, bracket: Bracket = graded_bracket) -> Check:
    """[[x,[[y,z]]]] == [[[[x,y]],z]] + (-1)**(a.b) [[y,[[x,z]]]].

    ``x`` and ``y`` must be homogeneous; ``z`` is arbitrary.
    """
    a = _homogeneous_degree(x, "x")
    b = _homogeneous_degree(y, "y")
    lhs = bracket(x, bracket(y, z))
    t1 = bracket(bracket(x, y), z)
    t2 = bracket(y, bracket(x, z))
    rhs = t1 - t2 if a.pairing(b) else t1 + t2
    if lhs == rhs:
        return Check(True)
    return Check(False, _first_difference(lhs, rhs))


def verify_bracket_branch(x: GradedMatrix, y: GradedMatrix) -> Check:
    """The graded bracket is the commutator iff the pairing is 0, else the anticommutator."""
    a = _homogeneous_degree(x, "x")
    b = _homogeneous_degree(y, "y")
    got = graded_bracket(x, y)
    plain = x @ y + y @ x if a.pairing(b) else x @ y - y @ x
    if got == plain:
        return Check(True)
    return Check(False, _first_difference(got, plain))
