"""JSON interchange format for graded modules and morphisms.

A module file looks like::

    {
      "scheme": "Z2", "n": 3, "m": 5,
      "components": [{"degree": [0, 0], "dim": 1}, ...],
      "d0": [{"from": [0, 0], "matrix": [["1"]]}, ...],
      "d1": [...]
    }

Scalars are strings such as ``"1/2 + 3*t^2"`` (``t`` a primitive nm-th root of
unity) or plain integers.  A morphism file has ``source`` and ``target``
module objects and a ``blocks`` list of ``{"degree": [a, b], "matrix": ...}``.
Serialization is canonical: degrees sorted, zero blocks omitted.
"""

import json

from cyclocat.linalg import Matrix
from cyclocat.modules import (
    CYCLIC,
    Z2,
    GradedModule,
    GradingScheme,
    ModuleError,
    ModuleMorphism,
    validate,
    validate_morphism,
)


class FormatError(ValueError):
    """The input does not describe a valid module or morphism."""


def _matrix_json(M):
    return [[str(x) for x in row] for row in M.rows]


def module_to_dict(M):
    sch = M.scheme
    out = {
        "scheme": sch.kind,
        "n": sch.n,
        "m": sch.m,
        "components": [{"degree": list(g), "dim": M.dims[g]} for g in sorted(M.dims)],
    }
    for which in (0, 1):
        out[f"d{which}"] = [{"from": list(g), "matrix": _matrix_json(M.d[which][g])} for g in sorted(M.d[which])]
    return out


def morphism_to_dict(f):
    return {
        "source": module_to_dict(f.source),
        "target": module_to_dict(f.target),
        "blocks": [{"degree": list(g), "matrix": _matrix_json(f.blocks[g])} for g in sorted(f.blocks)],
    }


def _render(obj, level):
    """JSON with one line per record; nested modules and record lists are expanded."""
    pad = "  " * (level + 1)
    end = "  " * level
    if isinstance(obj, dict) and any(isinstance(v, dict) or _is_record_list(v) for v in obj.values()):
        items = [f"{pad}{json.dumps(k)}: {_render(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if _is_record_list(obj) and obj:
        return "[\n" + ",\n".join(pad + _render(v, level + 1) for v in obj) + "\n" + end + "]"
    return json.dumps(obj)


def _is_record_list(v):
    return isinstance(v, list) and all(isinstance(x, dict) for x in v)


def dumps(obj):
    return _render(obj, 0) + "\n"


def module_to_json(M):
    return dumps(module_to_dict(M))


def morphism_to_json(f):
    return dumps(morphism_to_dict(f))


def _degree(value, where):
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)):
        raise FormatError(f"{where}: a degree must be a list of two integers, got {value!r}")
    return tuple(value)


def _scalar(field, value, where):
    if isinstance(value, bool):
        raise FormatError(f"{where}: boolean is not a scalar")
    if isinstance(value, int):
        return field.coerce(value)
    if isinstance(value, str):
        try:
            return field.parse(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"{where}: {exc}") from None
    raise FormatError(f"{where}: cannot read scalar {value!r}")


def _matrix(field, rows, nrows, ncols, where):
    if not isinstance(rows, list) or len(rows) != nrows:
        raise FormatError(f"{where}: expected {nrows} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != ncols:
            raise FormatError(f"{where}: row {i} must have {ncols} entries")
        out.append(tuple(_scalar(field, x, f"{where}[{i}][{j}]") for j, x in enumerate(row)))
    return Matrix._raw(field, tuple(out), ncols)


def module_from_dict(data, where="module"):
    if not isinstance(data, dict):
        raise FormatError(f"{where}: expected an object")
    for key in ("scheme", "n", "m", "components"):
        if key not in data:
            raise FormatError(f"{where}: missing key {key!r}")
    kind = data["scheme"]
    if kind not in (Z2, CYCLIC):
        raise FormatError(f"{where}: scheme must be {Z2!r} or {CYCLIC!r}, got {kind!r}")
    n, m = data["n"], data["m"]
    if not all(isinstance(v, int) and not isinstance(v, bool) and v >= 1 for v in (n, m)):
        raise FormatError(f"{where}: n and m must be positive integers")
    try:
        sch = GradingScheme(kind, n, m)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None
    dims = {}
    comps = data["components"]
    if not isinstance(comps, list):
        raise FormatError(f"{where}.components: expected a list")
    for i, rec in enumerate(comps):
        loc = f"{where}.components[{i}]"
        if not isinstance(rec, dict) or "degree" not in rec or "dim" not in rec:
            raise FormatError(f"{loc}: expected {{degree, dim}}")
        g = sch.norm(_degree(rec["degree"], loc))
        k = rec["dim"]
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise FormatError(f"{loc}: dim must be a nonnegative integer")
        if g in dims:
            raise FormatError(f"{loc}: degree {list(g)} listed twice")
        dims[g] = k
    blocks = ({}, {})
    for which in (0, 1):
        recs = data.get(f"d{which}", [])
        if not isinstance(recs, list):
            raise FormatError(f"{where}.d{which}: expected a list")
        for i, rec in enumerate(recs):
            loc = f"{where}.d{which}[{i}]"
            if not isinstance(rec, dict) or "from" not in rec or "matrix" not in rec:
                raise FormatError(f"{loc}: expected {{from, matrix}}")
            g = sch.norm(_degree(rec["from"], loc))
            if g in blocks[which]:
                raise FormatError(f"{loc}: block from {list(g)} listed twice")
            h = sch.add(g, sch.step(which))
            blocks[which][g] = _matrix(sch.field, rec["matrix"], dims.get(h, 0), dims.get(g, 0), loc)
    try:
        M = GradedModule(sch, dims, blocks[0], blocks[1], check=False)
    except ModuleError as exc:
        raise FormatError(f"{where}: {exc}") from None
    problems = validate(M)
    if problems:
        raise FormatError(f"{where}: invalid module: {problems[0]}")
    return M


def morphism_from_dict(data):
    if not isinstance(data, dict):
        raise FormatError("morphism: expected an object")
    for key in ("source", "target", "blocks"):
        if key not in data:
            raise FormatError(f"morphism: missing key {key!r}")
    X = module_from_dict(data["source"], "source")
    Y = module_from_dict(data["target"], "target")
    if X.scheme != Y.scheme:
        raise FormatError("morphism: source and target use different schemes")
    blocks = {}
    recs = data["blocks"]
    if not isinstance(recs, list):
        raise FormatError("morphism.blocks: expected a list")
    for i, rec in enumerate(recs):
        loc = f"blocks[{i}]"
        if not isinstance(rec, dict) or "degree" not in rec or "matrix" not in rec:
            raise FormatError(f"{loc}: expected {{degree, matrix}}")
        g = X.scheme.norm(_degree(rec["degree"], loc))
        if g in blocks:
            raise FormatError(f"{loc}: degree {list(g)} listed twice")
        blocks[g] = _matrix(X.field, rec["matrix"], Y.dim(g), X.dim(g), loc)
    try:
        f = ModuleMorphism(X, Y, blocks, check=False)
    except ModuleError as exc:
        raise FormatError(f"morphism: {exc}") from None
    problems = validate_morphism(f)
    if problems:
        raise FormatError(f"morphism: {problems[0]}")
    return f


def _load_json(text, where):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{where}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


def module_from_json(text):
    return module_from_dict(_load_json(text, "module"))


def morphism_from_json(text):
    return morphism_from_dict(_load_json(text, "morphism"))


def read_module(path):
    with open(path, encoding="utf-8") as fh:
        return module_from_json(fh.read())


def write_module(M, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(module_to_json(M))


def read_morphism(path):
    with open(path, encoding="utf-8") as fh:
        return morphism_from_json(fh.read())


def write_morphism(f, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(morphism_to_json(f))
