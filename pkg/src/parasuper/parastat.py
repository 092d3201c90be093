"""Parafermion / paraboson generators built from short root vectors.

Generators are keyed by their physical sign ``sigma`` (the superscript).
With ``zeta = -sigma`` they are realized as

    a_i^sigma  = zeta * c * x_{0, zeta*i}           degree (0,0)
    at_i^sigma = zeta * c * x_{0, zeta*(m1+i)}      degree (1,1)
    b_i^sigma  = zeta * c * x_{0, zeta*(m1+m2+i)}   degree (1,0)

with normalization ``c = sqrt(2)``.  Relation families are tables of
left-nested triple brackets whose written bracket type (commutator or
anticommutator) is checked against the operand degrees before any case is
evaluated.  Each case can be evaluated two ways: by multiplying matrices, or
by substituting into the closed-form short-root triple relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .errors import PreconditionError
from .grading import G00, G10, G11, Grading
from .matrix import GradedMatrix, anticommutator, commutator, graded_bracket, linear_combination
from .osp import OspAlgebra, closure_span
from .report import DEFAULT_WITNESS_LIMIT, VerificationReport
from .scalar import QSqrt2, SQRT2

FAMILY_DEGREE = {"a": G00, "at": G11, "b": G10}
SIGNS = (1, -1)
COMM, ANTI = "[]", "{}"


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


@dataclass(frozen=True)
class ParaGenerator:
    family: str  # "a", "at" (tilde a) or "b"
    site: int
    sign: int  # physical superscript, +1 or -1
    label: int = field(compare=False)  # signed short-root label s with g = coef * x_{0,s}
    coef: QSqrt2 = field(compare=False)
    realization: GradedMatrix = field(repr=False, compare=False)

    @property
    def degree(self) -> Grading:
        return FAMILY_DEGREE[self.family]

    @property
    def name(self) -> str:
        return f"{self.family}{self.site}{_sign_char(self.sign)}"


def family_size(alg: OspAlgebra, family: str) -> int:
    return {"a": alg.m1, "at": alg.m2, "b": alg.n}[family]


def family_offset(alg: OspAlgebra, family: str) -> int:
    return {"a": 0, "at": alg.m1, "b": alg.m1 + alg.m2}[family]


def make_generator(alg: OspAlgebra, family: str, site: int, sign: int, norm: QSqrt2 = SQRT2) -> ParaGenerator:
    if not 1 <= site <= family_size(alg, family):
        raise PreconditionError(f"{family}_{site} does not exist for {alg.name}")
    zeta = -sign
    label = zeta * (family_offset(alg, family) + site)
    coef = norm * zeta
    return ParaGenerator(family, site, sign, label, coef, alg.x(0, label).scale(coef))


def make_generators(alg: OspAlgebra, norm: QSqrt2 = SQRT2) -> list[ParaGenerator]:
    """All ``2(m1+m2+n)`` generators, ordered a, at, b; by site; + before -."""
    return [
        make_generator(alg, fam, site, sign, norm)
        for fam in ("a", "at", "b")
        for site in range(1, family_size(alg, fam) + 1)
        for sign in SIGNS
    ]


# -- short-root triples ---------------------------------------------------

def short_root_triple_rhs(alg: OspAlgebra, i: int, j: int, k: int) -> dict[int, QSqrt2]:
    """[[[[x_0i, x_0j]], x_0k]] as ``{s: coefficient of x_{0,s}}``."""
    sg = alg.signed
    out: dict[int, QSqrt2] = {}
    if j == -k:
        out[i] = out.get(i, QSqrt2()) - sg.phi(j)
    if i == -k:
        e = sg.grade_of(i).pairing(sg.grade_of(j))
        out[j] = out.get(j, QSqrt2()) + (-1) ** e * sg.phi(i)
    return {s: c for s, c in out.items() if c}


def _short_root_matrix(alg: OspAlgebra, combo: dict[int, QSqrt2]) -> GradedMatrix:
    return linear_combination(alg.scheme, ((c, alg.x(0, s)) for s, c in combo.items()))


def check_short_root_triples(alg: OspAlgebra, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    report = VerificationReport("short-root-triples", alg.params, witness_limit=witness_limit)
    labels = alg.signed.nonzero_labels
    for i, j, k in product(labels, repeat=3):
        lhs = graded_bracket(graded_bracket(alg.x(0, i), alg.x(0, j)), alg.x(0, k))
        rhs = _short_root_matrix(alg, short_root_triple_rhs(alg, i, j, k))
        report.record(
            lhs == rhs,
            lambda: {"case": {"i": i, "j": j, "k": k}, "lhs": alg.describe(lhs), "rhs": alg.describe(rhs)},
        )
    return report


# -- relation tables ------------------------------------------------------

# right-hand side: list of (coefficient, operand slot) given sites and signs
Rhs = Callable[[tuple[int, int, int], tuple[int, int, int]], list[tuple[int, int]]]


def _d(p: int, q: int) -> int:
    return int(p == q)


@dataclass(frozen=True)
class Shape:
    """``outer(inner(op0, op1), op2) = rhs``; brackets are COMM or ANTI as written."""

    text: str
    operands: tuple[str, str, str]
    inner: str
    outer: str
    rhs: Rhs


def _zero(_s, _z):
    return []


def _green_fermi(s, z):
    (i, j, k), (ze, et, xi) = s, z
    return [(abs(xi - et) * _d(j, k), 0), (-abs(xi - ze) * _d(i, k), 1)]


def _green_bose(s, z):
    (i, j, k), (ze, et, xi) = s, z
    return [((xi - et) * _d(j, k), 0), ((xi - ze) * _d(i, k), 1)]


def _fermi_mixed_first(s, z):  # [[a_i, X_j], a_k] = -|xi-zeta| d_ik X_j
    (i, _j, k), (ze, _et, xi) = s, z
    return [(-abs(xi - ze) * _d(i, k), 1)]


def _fermi_mixed_second(s, z):  # [[a_i, at_j], at_k] = |xi-eta| d_jk a_i
    (_i, j, k), (_ze, et, xi) = s, z
    return [(abs(xi - et) * _d(j, k), 0)]


def _bose_mixed_first(s, z):  # {{at_i, b_j}, at_k} = |xi-zeta| d_ik b_j
    (i, _j, k), (ze, _et, xi) = s, z
    return [(abs(xi - ze) * _d(i, k), 1)]


def _boson_second(s, z):  # (xi-eta) d_jk X_i
    (_i, j, k), (_ze, et, xi) = s, z
    return [((xi - et) * _d(j, k), 0)]


def _green_fermi_shape(f: str, label: str) -> Shape:
    return Shape(f"[[{label}_i,{label}_j],{label}_k]", (f, f, f), COMM, COMM, _green_fermi)


GREEN_BOSE = Shape("[{b_i,b_j},b_k]", ("b", "b", "b"), ANTI, COMM, _green_bose)


def _relative_fermi(f: str, label: str) -> tuple[Shape, ...]:
    return (
        Shape(f"[[{label}_i,{label}_j],b_k]", (f, f, "b"), COMM, COMM, _zero),
        Shape(f"[{{b_i,b_j}},{label}_k]", ("b", "b", f), ANTI, COMM, _zero),
        Shape(f"[[{label}_i,b_j],{label}_k]", (f, "b", f), COMM, COMM, _fermi_mixed_first),
        Shape(f"{{[{label}_i,b_j],b_k}}", (f, "b", "b"), COMM, ANTI, _boson_second),
    )


def _relative_bose(f: str, label: str) -> tuple[Shape, ...]:
    return (
        Shape(f"[[{label}_i,{label}_j],b_k]", (f, f, "b"), COMM, COMM, _zero),
        Shape(f"[{{b_i,b_j}},{label}_k]", ("b", "b", f), ANTI, COMM, _zero),
        Shape(f"{{{{{label}_i,b_j}},{label}_k}}", (f, "b", f), ANTI, ANTI, _bose_mixed_first),
        Shape(f"[{{{label}_i,b_j}},b_k]", (f, "b", "b"), ANTI, COMM, _boson_second),
    )


FAMILIES: dict[str, tuple[Shape, ...]] = {
    "a1": (_green_fermi_shape("a", "a"),),
    "a2": (_green_fermi_shape("at", "at"),),
    "a3": (
        Shape("[[a_i,a_j],at_k]", ("a", "a", "at"), COMM, COMM, _zero),
        Shape("[[at_i,at_j],a_k]", ("at", "at", "a"), COMM, COMM, _zero),
        Shape("[[a_i,at_j],a_k]", ("a", "at", "a"), COMM, COMM, _fermi_mixed_first),
        Shape("[[a_i,at_j],at_k]", ("a", "at", "at"), COMM, COMM, _fermi_mixed_second),
    ),
    "b1": (GREEN_BOSE,),
    "ab1": _relative_fermi("a", "a"),
    "ab2": _relative_bose("at", "at"),
    # operands (a_i, at_j, b_k) appear in three different bracket orders
    "ab3": (
        Shape("{[a_i,at_j],b_k}", ("a", "at", "b"), COMM, ANTI, _zero),
        Shape("[{at_j,b_k},a_i]", ("at", "b", "a"), ANTI, COMM, _zero),
        Shape("{[b_k,a_i],at_j}", ("b", "a", "at"), COMM, ANTI, _zero),
    ),
}

DEGENERATE_CASES = ("green-parafermi", "green-paraboson", "gm-relative-fermi", "gm-relative-bose")


def degenerate_shapes(case: str, alg: OspAlgebra) -> tuple[Shape, ...]:
    """Select the generator families for a classic (degenerate) relation set."""
    if case == "green-parafermi":
        if alg.m1 >= 1:
            return (_green_fermi_shape("a", "a"),)
        if alg.m2 >= 1:
            return (_green_fermi_shape("at", "at"),)
        raise PreconditionError("green-parafermi needs m1 >= 1 or m2 >= 1")
    if case == "green-paraboson":
        if alg.n < 1:
            raise PreconditionError("green-paraboson needs n >= 1")
        return (GREEN_BOSE,)
    if case == "gm-relative-fermi":
        if alg.m1 < 1 or alg.n < 1:
            raise PreconditionError("gm-relative-fermi needs m1 >= 1 and n >= 1")
        return _relative_fermi("a", "a")
    if case == "gm-relative-bose":
        if alg.m2 < 1 or alg.n < 1:
            raise PreconditionError("gm-relative-bose needs m2 >= 1 and n >= 1")
        return _relative_bose("at", "at")
    raise KeyError(f"unknown degenerate case {case!r}")


def bracket_type_consistent(shape: Shape) -> bool:
    """Written bracket types agree with the graded bracket of the operand degrees."""
    d0, d1, d2 = (FAMILY_DEGREE[f] for f in shape.operands)
    inner_ok = (shape.inner == ANTI) == bool(d0.pairing(d1))
    outer_ok = (shape.outer == ANTI) == bool((d0 + d1).pairing(d2))
    return inner_ok and outer_ok


def _plain(kind: str, x: GradedMatrix, y: GradedMatrix) -> GradedMatrix:
    return anticommutator(x, y) if kind == ANTI else commutator(x, y)


class _Generators:
    def __init__(self, alg: OspAlgebra, norm: QSqrt2) -> None:
        self.alg = alg
        self.norm = norm
        self._cache: dict[tuple[str, int, int], ParaGenerator] = {}

    def __call__(self, family: str, site: int, sign: int) -> ParaGenerator:
        key = (family, site, sign)
        if key not in self._cache:
            self._cache[key] = make_generator(self.alg, family, site, sign, self.norm)
        return self._cache[key]


def _cases(alg: OspAlgebra, shape: Shape):
    ranges = [range(1, family_size(alg, f) + 1) for f in shape.operands]
    for sites in product(*ranges):
        for signs in product(SIGNS, repeat=3):
            yield sites, signs


def evaluate_matrix(shape: Shape, gens: _Generators, sites, signs) -> tuple[GradedMatrix, GradedMatrix]:
    """(lhs, rhs) by direct matrix products with the written bracket types."""
    g = [gens(f, s, z) for f, s, z in zip(shape.operands, sites, signs)]
    lhs = _plain(shape.outer, _plain(shape.inner, g[0].realization, g[1].realization), g[2].realization)
    rhs = linear_combination(gens.alg.scheme, ((c, g[slot].realization) for c, slot in shape.rhs(sites, signs)))
    return lhs, rhs


def evaluate_formula(shape: Shape, gens: _Generators, sites, signs) -> tuple[dict[int, QSqrt2], dict[int, QSqrt2]]:
    """(lhs, rhs) as short-root coordinates via the closed-form triple relation.

    Valid only for bracket-type-consistent shapes, where the written brackets
    are the graded ones.
    """
    g = [gens(f, s, z) for f, s, z in zip(shape.operands, sites, signs)]
    scale = g[0].coef * g[1].coef * g[2].coef
    lhs = {s: scale * c for s, c in short_root_triple_rhs(gens.alg, g[0].label, g[1].label, g[2].label).items()}
    rhs: dict[int, QSqrt2] = {}
    for c, slot in shape.rhs(sites, signs):
        if c:
            s = g[slot].label
            rhs[s] = rhs.get(s, QSqrt2()) + g[slot].coef * c
    return {s: v for s, v in lhs.items() if v}, {s: v for s, v in rhs.items() if v}


def _run_shapes(
    name: str,
    shapes: tuple[Shape, ...],
    alg: OspAlgebra,
    *,
    method: str = "matrix",
    norm: QSqrt2 = SQRT2,
    rhs_factor: QSqrt2 | int = 1,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> VerificationReport:
    report = VerificationReport(name, alg.params, witness_limit=witness_limit)
    gens = _Generators(alg, norm)
    per_shape = {}
    for shape in shapes:
        before_total, before_fail = report.total, report.failures
        consistent = bracket_type_consistent(shape)
        for sites, signs in _cases(alg, shape):
            case = {"shape": shape.text, "sites": list(sites), "signs": [_sign_char(z) for z in signs]}
            if not consistent:
                report.record(False, lambda: {"case": case, "reason": "written bracket type disagrees with grading"})
                continue
            if method == "matrix":
                lhs, rhs = evaluate_matrix(shape, gens, sites, signs)
                rhs = rhs.scale(rhs_factor)
                report.record(
                    lhs == rhs,
                    lambda: {"case": case, "lhs": alg.describe(lhs), "rhs": alg.describe(rhs)},
                )
            elif method == "formula":
                lf, rf = evaluate_formula(shape, gens, sites, signs)
                rf = {s: v * rhs_factor for s, v in rf.items() if v * rhs_factor}
                report.record(
                    lf == rf,
                    lambda: {
                        "case": case,
                        "lhs": {f"x[0,{s}]": v.to_json() for s, v in sorted(lf.items())},
                        "rhs": {f"x[0,{s}]": v.to_json() for s, v in sorted(rf.items())},
                    },
                )
            else:
                raise ValueError(f"unknown method {method!r}")
        per_shape[shape.text] = {"cases": report.total - before_total, "failures": report.failures - before_fail}
    report.details["shapes"] = per_shape
    if report.total == 0:
        missing = sorted({f for s in shapes for f in s.operands if family_size(alg, f) == 0})
        report.vacuous_reason = f"no generators of type {', '.join(missing)} for {alg.params}"
    return report


def verify_family(family: str, alg: OspAlgebra, **kwargs) -> VerificationReport:
    """Exhaustively check one relation family (a1, a2, a3, b1, ab1, ab2, ab3)."""
    if family not in FAMILIES:
        raise KeyError(f"unknown relation family {family!r}")
    return _run_shapes(family, FAMILIES[family], alg, **kwargs)


def verify_degenerate(case: str, alg: OspAlgebra, **kwargs) -> VerificationReport:
    """Check a classic relation set; raises PreconditionError if its generators are absent."""
    return _run_shapes(case, degenerate_shapes(case, alg), alg, **kwargs)


def check_substitution(alg: OspAlgebra, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    """Matrix path and short-root formula path agree case by case for every family."""
    report = VerificationReport("substitution", alg.params, witness_limit=witness_limit)
    gens = _Generators(alg, SQRT2)
    for fam, shapes in FAMILIES.items():
        for shape in shapes:
            if not bracket_type_consistent(shape):
                continue
            for sites, signs in _cases(alg, shape):
                lm, rm = evaluate_matrix(shape, gens, sites, signs)
                lf, rf = evaluate_formula(shape, gens, sites, signs)
                lf_m = _short_root_matrix(alg, lf)
                rf_m = _short_root_matrix(alg, rf)
                matrix_verdict = lm == rm
                formula_verdict = lf == rf
                report.record(
                    matrix_verdict == formula_verdict and lm == lf_m and rm == rf_m,
                    lambda: {
                        "case": {"family": fam, "shape": shape.text, "sites": list(sites),
                                 "signs": [_sign_char(z) for z in signs]},
                        "matrix_pass": matrix_verdict,
                        "formula_pass": formula_verdict,
                    },
                )
    if report.total == 0:
        report.vacuous_reason = "no relation family has cases"
    return report


def closure_dimension(alg: OspAlgebra) -> dict[str, int | bool]:
    """Grow the span of the 2N short root vectors under brackets to a fixpoint."""
    rank, rounds = closure_span(alg, alg.short_roots())
    dim = alg.dimension()
    return {"generators": 2 * alg.N, "closure_rank": rank, "rounds": rounds, "dimension": dim, "generates": rank == dim}


def check_closure(alg: OspAlgebra, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    report = VerificationReport("closure", alg.params, witness_limit=witness_limit)
    info = closure_dimension(alg)
    report.details.update(info)
    report.record(bool(info["generates"]), lambda: dict(info))
    return report
