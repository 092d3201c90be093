"""The orthosymplectic superalgebra osp(2m1+1,2m2|2n,0) inside gl(2m1+1,2m2|2n,0).

Rows and columns carry signed labels ``0, 1, -1, 2, -2, ..., N, -N`` with
``N = m1 + m2 + n``.  The algebra is the span of

    x_ij = e_{i,-j} - s_ij e_{j,-i},   s_ij = (-1)**(d_i.d_j + d_ij.d_ij) phi_i phi_j

where ``phi`` is -1 exactly on the negative symplectic labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import EmptyAlgebraError, GradingMismatchError
from .grading import G00, G10, G11, Grading
from .linalg import ExactSpan
from .matrix import GradedMatrix, IndexGradingScheme, graded_bracket
from .report import DEFAULT_WITNESS_LIMIT, VerificationReport
from .scalar import QSqrt2


def signed_position(i: int) -> int:
    """Matrix slot of a signed label: 0 -> 0, +k -> 2k-1, -k -> 2k."""
    if i == 0:
        return 0
    return 2 * i - 1 if i > 0 else -2 * i


@dataclass(frozen=True)
class SignedIndexScheme:
    m1: int
    m2: int
    n: int
    grading: IndexGradingScheme = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        labels = [0]
        for k in range(1, self.N + 1):
            labels += [k, -k]
        object.__setattr__(
            self, "grading", IndexGradingScheme(tuple(labels), tuple(self.grade_of(i) for i in labels))
        )

    @property
    def N(self) -> int:
        return self.m1 + self.m2 + self.n

    @property
    def m(self) -> int:
        return self.m1 + self.m2

    @property
    def labels(self) -> tuple[int, ...]:
        return self.grading.labels

    @property
    def nonzero_labels(self) -> tuple[int, ...]:
        return self.grading.labels[1:]

    def grade_of(self, i: int) -> Grading:
        a = abs(i)
        if a > self.N:
            raise IndexError(f"label {i} outside 0, ±1..±{self.N}")
        if a <= self.m1:
            return G00
        if a <= self.m1 + self.m2:
            return G11
        return G10

    def phi(self, i: int) -> int:
        if abs(i) > self.N:
            raise IndexError(f"label {i} outside 0, ±1..±{self.N}")
        return -1 if i < -self.m else 1

    def position(self, i: int) -> int:
        return signed_position(i)

    def sign(self, i: int, j: int) -> int:
        """``(-1)**(d_i.d_j + d_ij.d_ij) * phi_i * phi_j``."""
        di, dj = self.grade_of(i), self.grade_of(j)
        e = di.pairing(dj) + (di + dj).self_pairing()
        return (-1) ** e * self.phi(i) * self.phi(j)

    def is_symplectic(self, i: int) -> bool:
        return abs(i) > self.m


@dataclass(frozen=True)
class OspGenerator:
    i: int
    j: int
    realization: GradedMatrix = field(repr=False, compare=False)
    degree: Grading

    @property
    def label(self) -> str:
        return f"x[{self.i},{self.j}]"


@dataclass(frozen=True)
class CanonicalBasis:
    pairs: tuple[tuple[int, int], ...]
    span: ExactSpan = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.pairs)


class OspAlgebra:
    """Matrix realization of osp(2m1+1, 2m2 | 2n, 0).

    ``flip_sign`` replaces the minus sign of the embedding by a plus; it
    exists only to build deliberately broken algebras for negative controls
    and always skips construction-time validation.
    """

    def __init__(self, m1: int, m2: int, n: int, *, validate: bool = True, flip_sign: bool = False) -> None:
        dims = (m1, m2, n)
        if any(not isinstance(x, int) or x < 0 for x in dims):
            raise ValueError(f"parameters must be non-negative integers, got {dims}")
        if sum(dims) == 0:
            raise EmptyAlgebraError("osp(1,0|0,0) has no generators; need m1+m2+n >= 1")
        self.m1, self.m2, self.n = m1, m2, n
        self.flip_sign = flip_sign
        self.signed = SignedIndexScheme(m1, m2, n)
        self.scheme = self.signed.grading
        labels = self.signed.labels
        self._x: dict[tuple[int, int], OspGenerator] = {}
        for i, j in product(labels, repeat=2):
            self._x[i, j] = OspGenerator(i, j, self._embed(i, j), self.scheme.degree(i, j))
        self._basis: CanonicalBasis | None = None
        if validate and not flip_sign:
            self.validate()

    def _embed(self, i: int, j: int) -> GradedMatrix:
        s = self.signed.sign(i, j)
        if self.flip_sign:
            s = -s
        return GradedMatrix.unit(self.scheme, i, -j) - GradedMatrix.unit(self.scheme, j, -i).scale(s)

    # -- naming ---------------------------------------------------------
    @property
    def params(self) -> dict[str, int]:
        return {"m1": self.m1, "m2": self.m2, "n": self.n}

    @property
    def name(self) -> str:
        return f"osp({2 * self.m1 + 1},{2 * self.m2}|{2 * self.n},0)"

    @property
    def N(self) -> int:
        return self.signed.N

    @property
    def matrix_size(self) -> int:
        return self.scheme.total_dim

    @property
    def labels(self) -> tuple[int, ...]:
        return self.signed.labels

    def x(self, i: int, j: int) -> GradedMatrix:
        return self._x[i, j].realization

    def generator(self, i: int, j: int) -> OspGenerator:
        return self._x[i, j]

    def generators(self) -> list[OspGenerator]:
        return [self._x[i, j] for i, j in product(self.labels, repeat=2)]

    def short_roots(self) -> list[GradedMatrix]:
        return [self.x(0, i) for i in self.signed.nonzero_labels]

    # -- structural checks ----------------------------------------------
    def antisymmetry_defect(self, i: int, j: int) -> GradedMatrix:
        """x_ij + s_ij x_ji, which must vanish."""
        return self.x(i, j) + self.x(j, i).scale(self.signed.sign(i, j))

    def validate(self) -> None:
        for i, j in product(self.labels, repeat=2):
            if not self.antisymmetry_defect(i, j).is_zero():
                raise AssertionError(f"x[{i},{j}] violates the symmetry relation")
        for i in self.labels:
            if not self.signed.is_symplectic(i) and not self.x(i, i).is_zero():
                raise AssertionError(f"x[{i},{i}] should vanish")
        for g in self._x.values():
            if not g.realization.is_zero() and g.realization.degree != g.degree:
                raise AssertionError(f"x[{g.i},{g.j}] is not homogeneous of degree {g.degree}")

    # -- closed form ----------------------------------------------------
    def closed_form(self, i: int, j: int, k: int, l: int) -> GradedMatrix:
        """Four-term right-hand side for [[x_ij, x_kl]]."""
        sg = self.signed
        out = GradedMatrix.zero(self.scheme)
        if j == -k:
            out = out + self.x(i, l)
        if j == -l:
            out = out - self.x(i, k).scale(sg.sign(k, l))
        if i == -k:
            out = out - self.x(j, l).scale(sg.sign(i, j))
        if i == -l:
            e = self.scheme.degree(i, j).pairing(self.scheme.degree(i, k))
            out = out - self.x(k, j).scale((-1) ** e)
        return out

    # -- basis, rank, coordinates ---------------------------------------
    def canonical_basis(self, order: Sequence[tuple[int, int]] | None = None) -> CanonicalBasis:
        """Greedy independent subset of the x_ij in (row-major) label order."""
        if order is None and self._basis is not None:
            return self._basis
        pairs = list(order) if order is not None else list(product(self.labels, repeat=2))
        span = ExactSpan()
        chosen = []
        for p in pairs:
            if span.add(self._x[p].realization.vector(), tag=p):
                chosen.append(p)
        basis = CanonicalBasis(tuple(chosen), span)
        if order is None:
            self._basis = basis
        return basis

    def basis_matrices(self) -> list[GradedMatrix]:
        return [self.x(i, j) for i, j in self.canonical_basis().pairs]

    def dimension(self) -> int:
        return len(self.canonical_basis())

    def decompose(self, element: GradedMatrix, basis: CanonicalBasis | None = None) -> list[QSqrt2] | None:
        """Exact coordinates of ``element`` on ``basis``; ``None`` if not in the span."""
        if element.scheme != self.scheme:
            raise GradingMismatchError("element does not live on this algebra's index scheme")
        basis = basis or self.canonical_basis()
        coords = basis.span.coordinates(element.vector())
        if coords is None:
            return None
        return [coords.get(k, QSqrt2()) for k in range(len(basis))]

    def describe(self, element: GradedMatrix) -> dict:
        """JSON-ready rendering: basis coordinates when possible, raw entries otherwise."""
        coords = self.decompose(element)
        if coords is None:
            return {"in_span": False, "entries": element.to_json()}
        pairs = self.canonical_basis().pairs
        return {
            "in_span": True,
            "coordinates": {f"x[{i},{j}]": c.to_json() for (i, j), c in zip(pairs, coords) if c},
        }


def build_osp(m1: int, m2: int, n: int, **kwargs) -> OspAlgebra:
    return OspAlgebra(m1, m2, n, **kwargs)


def check_osp_closed_form(alg: OspAlgebra, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    report = VerificationReport("osp-closed-form", alg.params, witness_limit=witness_limit)
    for i, j, k, l in product(alg.labels, repeat=4):
        lhs = graded_bracket(alg.x(i, j), alg.x(k, l))
        rhs = alg.closed_form(i, j, k, l)
        report.record(
            lhs == rhs,
            lambda: {"case": {"i": i, "j": j, "k": k, "l": l}, "lhs": alg.describe(lhs), "rhs": alg.describe(rhs)},
        )
    return report


def check_structure(alg: OspAlgebra, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    """Symmetry relation for all pairs, x_ii vanishing pattern, and bracket branch rule."""
    from .axioms import verify_bracket_branch

    report = VerificationReport("structure", alg.params, witness_limit=witness_limit)
    for i, j in product(alg.labels, repeat=2):
        defect = alg.antisymmetry_defect(i, j)
        report.record(defect.is_zero(), lambda: {"check": "symmetry", "case": {"i": i, "j": j}, "defect": defect.to_json()})
    for i in alg.labels:
        x = alg.x(i, i)
        expect_zero = not alg.signed.is_symplectic(i)
        report.record(
            x.is_zero() == expect_zero,
            lambda: {"check": "diagonal", "case": {"i": i}, "expected_zero": expect_zero, "value": x.to_json()},
        )
    mats = alg.basis_matrices()
    for a, b in product(range(len(mats)), repeat=2):
        c = verify_bracket_branch(mats[a], mats[b])
        report.record(c.ok, lambda: {"check": "branch", "case": {"p": a, "q": b}, **(c.witness or {})})
    return report


def closure_span(alg: OspAlgebra, seeds: Iterable[GradedMatrix], max_rounds: int = 50) -> tuple[int, int]:
    """Bracket span-basis pairs until the span stops growing.

    Returns ``(rank, rounds)`` where ``rounds`` counts bracketing passes
    including the final one that added nothing.
    """
    span = ExactSpan()
    current: list[GradedMatrix] = []
    for s in seeds:
        if span.add(s.vector()):
            current.append(s)
    rounds = 0
    while rounds < max_rounds:
        rounds += 1
        grew = False
        snapshot = list(current)
        for a in range(len(snapshot)):
            for b in range(a, len(snapshot)):
                z = graded_bracket(snapshot[a], snapshot[b])
                if not z.is_zero() and span.add(z.vector()):
                    current.append(z)
                    grew = True
        if not grew:
            break
    return span.rank, rounds
