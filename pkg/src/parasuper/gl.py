"""The general linear superalgebra gl(m1,m2|n1,n2) realized by matrix units."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import EmptyAlgebraError
from .grading import G00, G01, G10, G11, Grading
from .matrix import GradedMatrix, IndexGradingScheme, graded_bracket
from .report import DEFAULT_WITNESS_LIMIT, VerificationReport


@dataclass(frozen=True)
class GlBasisElement:
    i: int
    j: int
    realization: GradedMatrix = field(repr=False, compare=False)
    degree: Grading

    @property
    def label(self) -> str:
        return f"e[{self.i},{self.j}]"


@dataclass(frozen=True)
class GlAlgebra:
    m1: int
    m2: int
    n1: int
    n2: int
    scheme: IndexGradingScheme = field(repr=False)
    basis: tuple[GlBasisElement, ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"gl({self.m1},{self.m2}|{self.n1},{self.n2})"

    @property
    def params(self) -> dict[str, int]:
        return {"m1": self.m1, "m2": self.m2, "n1": self.n1, "n2": self.n2}

    @property
    def total_dim(self) -> int:
        return self.scheme.total_dim

    @property
    def cartan(self) -> tuple[GradedMatrix, ...]:
        """Diagonal units ``h_i = e_ii``."""
        n = self.total_dim
        return tuple(self.e(i, i) for i in range(1, n + 1))

    def e(self, i: int, j: int) -> GradedMatrix:
        n = self.total_dim
        return self.basis[(i - 1) * n + (j - 1)].realization

    def d(self, i: int) -> Grading:
        return self.scheme.grade_of(i)


def gl_grades(m1: int, m2: int, n1: int, n2: int) -> list[Grading]:
    return [G00] * m1 + [G11] * m2 + [G10] * n1 + [G01] * n2


def build_gl(m1: int, m2: int, n1: int, n2: int) -> GlAlgebra:
    """Build gl(m1,m2|n1,n2) with its full matrix-unit basis.

    Indices are 1-based; the first ``m1`` have grading (0,0), then ``m2``
    of (1,1), ``n1`` of (1,0) and ``n2`` of (0,1).
    """
    dims = (m1, m2, n1, n2)
    if any(not isinstance(x, int) or x < 0 for x in dims):
        raise ValueError(f"dimensions must be non-negative integers, got {dims}")
    if sum(dims) == 0:
        raise EmptyAlgebraError("gl(0,0|0,0) is empty")
    scheme = IndexGradingScheme.linear(gl_grades(*dims))
    n = scheme.total_dim
    basis = tuple(
        GlBasisElement(i, j, GradedMatrix.unit(scheme, i, j), scheme.degree(i, j))
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    return GlAlgebra(m1, m2, n1, n2, scheme, basis)


def gl_closed_form(alg: GlAlgebra, i: int, j: int, k: int, l: int) -> GradedMatrix:
    """delta_jk e_il - (-1)**(d_ij.d_kl) delta_il e_kj."""
    out = GradedMatrix.zero(alg.scheme)
    if j == k:
        out = out + alg.e(i, l)
    if i == l:
        sign = -1 if alg.scheme.degree(i, j).pairing(alg.scheme.degree(k, l)) else 1
        out = out - alg.e(k, j).scale(sign)
    return out


def check_gl_closed_form(alg: GlAlgebra, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    report = VerificationReport("gl-closed-form", alg.params, witness_limit=witness_limit)
    n = alg.total_dim
    for i, j, k, l in product(range(1, n + 1), repeat=4):
        lhs = graded_bracket(alg.e(i, j), alg.e(k, l))
        rhs = gl_closed_form(alg, i, j, k, l)
        report.record(
            lhs == rhs,
            lambda: {"case": {"i": i, "j": j, "k": k, "l": l}, "lhs": lhs.to_json(), "rhs": rhs.to_json()},
        )
    return report


def check_cartan(alg: GlAlgebra, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    """h_i commute pairwise and act on e_ij with weight delta_ki - delta_kj."""
    report = VerificationReport("cartan", alg.params, witness_limit=witness_limit)
    n = alg.total_dim
    h = alg.cartan
    for a, b in product(range(n), repeat=2):
        z = graded_bracket(h[a], h[b])
        report.record(z.is_zero(), lambda: {"case": {"h": [a + 1, b + 1]}, "lhs": z.to_json(), "rhs": []})
    for k, i, j in product(range(1, n + 1), repeat=3):
        lhs = graded_bracket(h[k - 1], alg.e(i, j))
        rhs = alg.e(i, j).scale(int(k == i) - int(k == j))
        report.record(
            lhs == rhs,
            lambda: {"case": {"k": k, "i": i, "j": j}, "lhs": lhs.to_json(), "rhs": rhs.to_json()},
        )
    return report
