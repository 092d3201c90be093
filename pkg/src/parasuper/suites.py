"""Named verification suites, as run by the command line."""

from __future__ import annotations

import random
from itertools import product
from typing import Callable

from .axioms import verify_jacobi, verify_symmetry
from .errors import PreconditionError
from .gl import GlAlgebra, check_cartan, check_gl_closed_form
from .matrix import GradedMatrix, linear_combination
from .osp import OspAlgebra, check_osp_closed_form, check_structure
from .parastat import (
    DEGENERATE_CASES,
    FAMILIES,
    check_closure,
    check_short_root_triples,
    check_substitution,
    verify_degenerate,
    verify_family,
)
from .report import DEFAULT_WITNESS_LIMIT, VerificationReport
from .scalar import QSqrt2

DEFAULT_SEED = 20131

OSP_SUITES = (
    "axioms",
    "structure",
    "osp-closed-form",
    "short-root-triples",
    *FAMILIES,
    *DEGENERATE_CASES,
    "substitution",
    "closure",
)
GL_SUITES = ("axioms", "gl-closed-form", "cartan")


def _random_scalar(rng: random.Random) -> QSqrt2:
    return QSqrt2(rng.randint(-3, 3), rng.randint(-2, 2))


def check_axioms(
    basis: list[GradedMatrix],
    params: dict[str, int],
    *,
    seed: int = DEFAULT_SEED,
    samples: int = 20,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> VerificationReport:
    """Symmetry for all basis pairs, Jacobi for all basis triples, plus random
    Jacobi checks with a non-homogeneous third argument."""
    report = VerificationReport("axioms", params, witness_limit=witness_limit)
    n = len(basis)
    for p, q in product(range(n), repeat=2):
        c = verify_symmetry(basis[p], basis[q])
        report.record(c.ok, lambda: {"check": "symmetry", "case": [p, q], **(c.witness or {})})
    for p, q, r in product(range(n), repeat=3):
        c = verify_jacobi(basis[p], basis[q], basis[r])
        report.record(c.ok, lambda: {"check": "jacobi", "case": [p, q, r], **(c.witness or {})})
    rng = random.Random(seed)
    scheme = basis[0].scheme
    for _ in range(samples):
        p, q = rng.randrange(n), rng.randrange(n)
        z = linear_combination(scheme, ((_random_scalar(rng), basis[rng.randrange(n)]) for _ in range(3)))
        c = verify_jacobi(basis[p], basis[q], z)
        report.record(c.ok, lambda: {"check": "jacobi-random", "case": [p, q], **(c.witness or {})})
    return report


def run_osp_suite(name: str, alg: OspAlgebra, *, seed: int = DEFAULT_SEED, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    if name == "axioms":
        return check_axioms(alg.basis_matrices(), alg.params, seed=seed, witness_limit=witness_limit)
    simple: dict[str, Callable[..., VerificationReport]] = {
        "structure": check_structure,
        "osp-closed-form": check_osp_closed_form,
        "short-root-triples": check_short_root_triples,
        "substitution": check_substitution,
        "closure": check_closure,
    }
    if name in simple:
        return simple[name](alg, witness_limit=witness_limit)
    if name in FAMILIES:
        return verify_family(name, alg, witness_limit=witness_limit)
    if name in DEGENERATE_CASES:
        try:
            return verify_degenerate(name, alg, witness_limit=witness_limit)
        except PreconditionError as exc:
            return VerificationReport(name, alg.params, witness_limit=witness_limit, vacuous_reason=str(exc))
    raise KeyError(name)


def run_gl_suite(name: str, alg: GlAlgebra, *, seed: int = DEFAULT_SEED, witness_limit: int = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    if name == "axioms":
        return check_axioms([b.realization for b in alg.basis], alg.params, seed=seed, witness_limit=witness_limit)
    if name == "gl-closed-form":
        return check_gl_closed_form(alg, witness_limit=witness_limit)
    if name == "cartan":
        return check_cartan(alg, witness_limit=witness_limit)
    raise KeyError(name)
