"""Structure-constant tables as JSON."""

from __future__ import annotations

import json
from itertools import product
from typing import Any

from .gl import GlAlgebra
from .matrix import graded_bracket
from .osp import OspAlgebra
from .scalar import QSqrt2

FORMAT_ID = "parasuper.structure-constants/1"


def structure_constants(alg: GlAlgebra | OspAlgebra) -> dict[str, Any]:
    """bracket(basis_p, basis_q) = sum_r c * basis_r for every ordered pair (p, q).

    Zero coefficients are omitted; triples are sorted by (p, q, r).
    """
    if isinstance(alg, GlAlgebra):
        kind = "gl"
        items = [(b.label, [b.i, b.j], b.degree, b.realization) for b in alg.basis]
        n = alg.total_dim

        def coords(m):
            # the matrix-unit basis is the standard coordinate system
            return {(i - 1) * n + (j - 1): v for (i, j), v in m.items()}
    else:
        kind = "osp"
        items = [(g.label, [g.i, g.j], g.degree, g.realization)
                 for g in (alg.generator(i, j) for i, j in alg.canonical_basis().pairs)]

        def coords(m):
            c = alg.decompose(m)
            if c is None:
                raise ValueError("bracket left the span; the algebra is not closed")
            return {r: v for r, v in enumerate(c) if v}

    mats = [it[3] for it in items]
    triples = []
    for p, q in product(range(len(mats)), repeat=2):
        z = graded_bracket(mats[p], mats[q])
        for r, v in sorted(coords(z).items()):
            triples.append({"p": p, "q": q, "r": r, "coefficient": v.to_json()})
    return {
        "format": FORMAT_ID,
        "algebra": kind,
        "name": alg.name,
        "params": alg.params,
        "matrix_size": alg.scheme.total_dim,
        "basis": [{"label": lab, "indices": idx, "grading": list(deg)} for lab, idx, deg, _ in items],
        "brackets": triples,
    }


def dumps(data: dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def load_structure_constants(text: str) -> dict[str, Any]:
    """Parse an export back, turning coefficients into :class:`QSqrt2`."""
    data = json.loads(text)
    if data.get("format") != FORMAT_ID:
        raise ValueError(f"unrecognized format {data.get('format')!r}")
    table = {}
    for t in data["brackets"]:
        table[t["p"], t["q"], t["r"]] = QSqrt2.from_json(t["coefficient"])
    data["table"] = table
    return data
