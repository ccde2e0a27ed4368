"""JSON wire formats for operators, presentations, bialgebras, and loops.

Algebraic payloads carry exact fraction strings only; the holonomy output
is the sole float-bearing format. All tensor indices on the wire are
1-based, matching the coefficient conventions of the library.
"""

from __future__ import annotations

from fractions import Fraction

from .bialgebra import FinDimBialgebra, SigmaTable
from .frt import LongPresentation
from .kz import LoopSpec
from .linalg import F0
from .scalars import frac_str, parse_frac
from .tensor_ops import TensorOp2

FORMAT_VERSION = "1"


def operator_to_json(r: TensorOp2) -> dict:
    entries = []
    for v in range(1, r.dim + 1):
        for u in range(1, r.dim + 1):
            for i in range(1, r.dim + 1):
                for j in range(1, r.dim + 1):
                    x = r.coeff(u, v, j, i)
                    if x:
                        entries.append(
                            {"v": v, "u": u, "i": i, "j": j, "coeff": frac_str(x)}
                        )
    return {"dim": r.dim, "entries": entries}


def operator_from_json(obj) -> TensorOp2:
    if not isinstance(obj, dict) or "dim" not in obj:
        raise ValueError("operator JSON must be an object with a 'dim' key")
    n = obj["dim"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("'dim' must be a positive integer")
    coeffs = [[[[F0] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    seen = set()
    for e in obj.get("entries", []):
        try:
            v, u, i, j = e["v"], e["u"], e["i"], e["j"]
            x = parse_frac(e["coeff"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed operator entry {e!r}") from exc
        for idx in (v, u, i, j):
            if not isinstance(idx, int) or not 1 <= idx <= n:
                raise ValueError(f"index out of range in entry {e!r}")
        key = (v, u, i, j)
        if key in seen:
            raise ValueError(f"duplicate entry for (v,u,i,j)={key}")
        seen.add(key)
        coeffs[u - 1][v - 1][j - 1][i - 1] = x
    return TensorOp2.from_coeffs(n, coeffs)


def presentation_to_json(pres: LongPresentation) -> dict:
    n = pres.quotient.n
    m = pres.num_generators
    relations = [[frac_str(x) for x in row] for row in pres.quotient.rows]
    delta = {}
    for a in range(m):
        triples = []
        for p in range(m):
            for q in range(m):
                c = pres.delta[a][p][q]
                if c:
                    triples.append([frac_str(c), pres.names[p], pres.names[q]])
        delta[pres.names[a]] = triples
    return {
        "dim": n,
        "relations": relations,
        "generators": list(pres.names),
        "naming": dict(pres.naming),
        "delta": delta,
        "epsilon": {pres.names[a]: frac_str(pres.eps[a]) for a in range(m)},
        "sigma": [[frac_str(x) for x in row] for row in pres.sigma_gen],
    }


def bialgebra_from_json(obj) -> FinDimBialgebra:
    try:
        d = obj["dim"]
        basis = obj["basis"]
        mult = [
            [[parse_frac(x) for x in cell] for cell in row] for row in obj["mult"]
        ]
        unit = [parse_frac(x) for x in obj["unit"]]
        comult = [
            [[parse_frac(x) for x in cell] for cell in row] for row in obj["comult"]
        ]
        counit = [parse_frac(x) for x in obj["counit"]]
    except (KeyError, TypeError) as exc:
        raise ValueError("malformed bialgebra JSON") from exc
    if len(basis) != d:
        raise ValueError("basis length disagrees with 'dim'")
    return FinDimBialgebra(basis, mult, unit, comult, counit)


def bialgebra_to_json(b: FinDimBialgebra) -> dict:
    return {
        "dim": b.d,
        "basis": list(b.basis),
        "mult": [[[frac_str(x) for x in cell] for cell in row] for row in b.mult],
        "unit": [frac_str(x) for x in b.unit],
        "comult": [[[frac_str(x) for x in cell] for cell in row] for row in b.comult],
        "counit": [frac_str(x) for x in b.counit],
    }


def sigma_from_json(obj) -> SigmaTable:
    try:
        table = [[parse_frac(x) for x in row] for row in obj["table"]]
    except (KeyError, TypeError) as exc:
        raise ValueError("malformed sigma JSON") from exc
    return SigmaTable(table)


def sigma_to_json(s: SigmaTable) -> dict:
    return {"table": [[frac_str(x) for x in row] for row in s.table]}


def _complex_pair(z):
    z = complex(z)
    return [z.real, z.imag]


def loop_from_json(obj) -> LoopSpec:
    try:
        base = [complex(re, im) for re, im in obj["base"]]
        kind = obj["kind"]
        steps = obj["steps"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError("malformed loop JSON") from exc
    if kind == "circle":
        try:
            moving = obj["moving"]
            center = obj["center"]
            radius = obj["radius"]
        except KeyError as exc:
            raise ValueError("circle loop JSON needs moving/center/radius") from exc
        if isinstance(center, list):
            center = complex(center[0], center[1])
        elif isinstance(center, int):
            center = center - 1
        else:
            raise ValueError("'center' must be a 1-based index or [re, im]")
        return LoopSpec(
            base, "circle", steps, moving=moving - 1, center=center, radius=radius
        )
    if kind == "polygon":
        try:
            waypoints = [
                [complex(re, im) for re, im in path] for path in obj["waypoints"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError("polygon loop JSON needs waypoint paths") from exc
        return LoopSpec(base, "polygon", steps, waypoints=waypoints)
    raise ValueError(f"unknown loop kind {kind!r}")


def loop_to_json(loop: LoopSpec) -> dict:
    out = {
        "base": [_complex_pair(z) for z in loop.base],
        "kind": loop.kind,
        "steps": loop.steps,
    }
    if loop.kind == "circle":
        out["moving"] = loop.moving + 1
        out["center"] = _complex_pair(loop.center)
        out["radius"] = loop.radius
    else:
        out["waypoints"] = [
            [_complex_pair(z) for z in path] for path in loop.waypoints
        ]
    return out


def holonomy_to_json(w, h, big_n, n) -> dict:
    return {
        "h": _complex_pair(h),
        "N": big_n,
        "n": n,
        "matrix": [[_complex_pair(z) for z in row] for row in w],
    }
