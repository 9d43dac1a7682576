"""Structured-text schemas ring.v1, mtc.v1 and bundle.v1.

Emission is canonical: fixed key order, floats printed with 17 significant
digits, exact scalars as cyclotomic coefficient vectors.  emit -> parse ->
emit is byte-identical.
"""
from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .condense import Ambient, CondensableAlgebra, CondensationBundle
from .cyclotomic import Cyc, as_mpc, exact_scalar
from .errors import SchemaError
from .modular import ModularData
from .ring import BasedRing, DimVector, fp_dims

SCHEMAS = ("ring.v1", "mtc.v1", "bundle.v1")


# ------------------------------------------------------------------ scalars


def emit_scalar(x) -> dict:
    ex = exact_scalar(x)
    if ex is not None:
        return {"cyclotomic": {"order": ex.order,
                               "coeffs": [str(c) for c in ex.coeffs]}}
    z = as_mpc(x)
    return {"re": float(z.real), "im": float(z.imag)}


def parse_scalar(obj, where: str = "scalar"):
    if isinstance(obj, bool):
        raise SchemaError(f"{where}: booleans are not scalars")
    if isinstance(obj, int):
        return Cyc.rational(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict) and set(obj) == {"cyclotomic"}:
        body = obj["cyclotomic"]
        if not isinstance(body, dict) or set(body) != {"order", "coeffs"}:
            raise SchemaError(f"{where}: cyclotomic needs order and coeffs")
        try:
            return Cyc(int(body["order"]),
                       [Fraction(str(c)) for c in body["coeffs"]])
        except (ValueError, ZeroDivisionError) as err:
            raise SchemaError(f"{where}: bad cyclotomic value ({err})")
    if isinstance(obj, dict) and set(obj) == {"re", "im"}:
        try:
            z = complex(float(obj["re"]), float(obj["im"]))
        except (TypeError, ValueError):
            raise SchemaError(f"{where}: re/im must be numbers")
        return z.real if z.imag == 0.0 else z
    raise SchemaError(f"{where}: not a recognized scalar encoding")


# ---------------------------------------------------------------- canonical


def _canon(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, float):
        return f"{obj:.17g}"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        inner = ", ".join(f"{json.dumps(str(k))}: {_canon(v)}"
                          for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_canon(v) for v in obj) + "]"
    raise SchemaError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    """Canonical single-line JSON with a trailing newline."""
    return _canon(obj) + "\n"


# ------------------------------------------------------------------ helpers


def _need(obj, key, kind, where):
    if key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise SchemaError(f"{where}: field {key!r} has the wrong type")
    return val


def _int_list(obj, key, where):
    val = _need(obj, key, list, where)
    out = []
    for v in val:
        if isinstance(v, bool) or not isinstance(v, int):
            raise SchemaError(f"{where}: field {key!r} must hold integers")
        out.append(v)
    return out


# ------------------------------------------------------------------ ring.v1


def emit_ring(ring: BasedRing) -> dict:
    r = ring.rank
    flat = [int(v) for v in np.asarray(ring.fusion).reshape(r * r * r)]
    return {"schema": "ring.v1", "rank": r, "labels": list(ring.labels),
            "unit": 0, "dual": list(ring.dual), "fusion": flat}


def parse_ring(obj) -> BasedRing:
    where = "ring.v1"
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    r = _need(obj, "rank", int, where)
    labels = _need(obj, "labels", list, where)
    if obj.get("unit", 0) != 0:
        raise SchemaError(f"{where}: unit must be index 0")
    dual = _int_list(obj, "dual", where)
    flat = _int_list(obj, "fusion", where)
    if len(labels) != r or len(dual) != r:
        raise SchemaError(f"{where}: labels/dual length disagrees with rank")
    if len(flat) != r * r * r:
        raise SchemaError(f"{where}: fusion needs rank^3 entries, got "
                          f"{len(flat)}")
    fusion = np.array(flat, dtype=np.int64).reshape(r, r, r)
    return BasedRing(labels=tuple(str(x) for x in labels), fusion=fusion,
                     dual=tuple(dual))


# ------------------------------------------------------------------- mtc.v1


def emit_modular(md: ModularData) -> dict:
    return {"schema": "mtc.v1", "rank": md.rank, "labels": list(md.labels),
            "dual": list(md.dual),
            "s_matrix": [[emit_scalar(v) for v in row] for row in md.s],
            "twists": [emit_scalar(t) for t in md.twists]}


def parse_modular(obj) -> ModularData:
    where = "mtc.v1"
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    r = _need(obj, "rank", int, where)
    labels = _need(obj, "labels", list, where)
    dual = _int_list(obj, "dual", where)
    s_rows = _need(obj, "s_matrix", list, where)
    twists = _need(obj, "twists", list, where)
    if len(labels) != r or len(dual) != r:
        raise SchemaError(f"{where}: labels/dual length disagrees with rank")
    if len(s_rows) != r or any(not isinstance(row, list) or len(row) != r
                               for row in s_rows):
        raise SchemaError(f"{where}: s_matrix must be rank x rank")
    if len(twists) != r:
        raise SchemaError(f"{where}: need one twist per label")
    s = tuple(tuple(parse_scalar(v, f"{where}: s_matrix") for v in row)
              for row in s_rows)
    tw = tuple(parse_scalar(t, f"{where}: twists") for t in twists)
    return ModularData(labels=tuple(str(x) for x in labels),
                       dual=tuple(dual), s=s, twists=tw)


# ----------------------------------------------------------------- bundle.v1


def _emit_ambient(amb: Ambient) -> dict:
    if amb.modular is not None:
        return {"mtc": emit_modular(amb.modular)}
    dims = [emit_scalar(v) for v in amb.dims.values]
    twists = (None if amb.twists is None
              else [emit_scalar(t) for t in amb.twists])
    if amb.ring is not None:
        return {"ring": emit_ring(amb.ring), "dims": dims, "twists": twists}
    return {"table": {"labels": list(amb.labels), "dual": list(amb.dual),
                      "dims": dims, "twists": twists}}


def _parse_dims(raw, where) -> DimVector:
    vals = [parse_scalar(v, where) for v in raw]
    source = "exact" if all(isinstance(v, Cyc) for v in vals) else "given"
    return DimVector(values=tuple(vals), source=source)


def _parse_ambient(obj) -> Ambient:
    where = "bundle.v1: ambient"
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    if set(obj) == {"mtc"}:
        return Ambient.from_modular(parse_modular(obj["mtc"]))
    if set(obj) == {"ring", "dims", "twists"}:
        ring = parse_ring(obj["ring"])
        dims = _parse_dims(_need(obj, "dims", list, where), where)
        tw = obj["twists"]
        twists = (None if tw is None
                  else tuple(parse_scalar(t, f"{where}: twists") for t in tw))
        return Ambient.from_ring(ring, dims, twists=twists)
    if set(obj) == {"table"}:
        t = obj["table"]
        if not isinstance(t, dict):
            raise SchemaError(f"{where}: table must be an object")
        labels = _need(t, "labels", list, where)
        dual = _int_list(t, "dual", where)
        dims = _parse_dims(_need(t, "dims", list, where), where)
        tw = t.get("twists")
        twists = (None if tw is None
                  else tuple(parse_scalar(x, f"{where}: twists") for x in tw))
        if twists is None:
            raise SchemaError(f"{where}: a bare table needs twists")
        return Ambient.from_table(labels, dual, dims, twists)
    raise SchemaError(f"{where}: expected mtc, ring or table form")


def emit_bundle(b: CondensationBundle) -> dict:
    induction = (None if b.induction is None
                 else [[int(v) for v in row] for row in np.asarray(b.induction)])
    return {"schema": "bundle.v1",
            "ambient": _emit_ambient(b.ambient),
            "mult": [int(v) for v in b.mult],
            "module_ring": emit_ring(b.module_ring),
            "dA": [emit_scalar(v) for v in b.dA.values],
            "induction": induction,
            "local": [int(v) for v in b.local]}


def parse_bundle(obj) -> CondensationBundle:
    where = "bundle.v1"
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    amb = _parse_ambient(_need(obj, "ambient", dict, where))
    mult = tuple(_int_list(obj, "mult", where))
    module = parse_ring(_need(obj, "module_ring", dict, where))
    raw_da = obj.get("dA")
    if raw_da is None:
        dA = DimVector(values=tuple(float(v) for v in fp_dims(module)),
                       source="fp")
    else:
        dA = _parse_dims(raw_da, f"{where}: dA")
    raw_m = obj.get("induction")
    if raw_m is None:
        induction = None
    else:
        if (not isinstance(raw_m, list)
                or any(not isinstance(row, list) for row in raw_m)
                or any(isinstance(v, bool) or not isinstance(v, int)
                       for row in raw_m for v in row)):
            raise SchemaError(f"{where}: induction must be an integer matrix")
        induction = np.array(raw_m, dtype=np.int64)
    local = tuple(_int_list(obj, "local", where))
    alg = CondensableAlgebra(ambient=amb, mult=mult)
    return CondensationBundle(algebra=alg, module_ring=module, dA=dA,
                              induction=induction, local=local)


# ------------------------------------------------------------------ generic


def detect(obj) -> str:
    """Schema name for a parsed JSON object, by tag or by shape."""
    if not isinstance(obj, dict):
        raise SchemaError("top level must be a JSON object")
    tag = obj.get("schema")
    if tag is not None:
        if tag not in SCHEMAS:
            raise SchemaError(f"unknown schema {tag!r}")
        return tag
    if "fusion" in obj:
        return "ring.v1"
    if "s_matrix" in obj:
        return "mtc.v1"
    if "mult" in obj and "module_ring" in obj:
        return "bundle.v1"
    raise SchemaError("object matches no known schema")


_PARSERS = {"ring.v1": parse_ring, "mtc.v1": parse_modular,
            "bundle.v1": parse_bundle}
_EMITTERS = {BasedRing: emit_ring, ModularData: emit_modular,
             CondensationBundle: emit_bundle}


def parse_any(obj):
    """Parse a JSON object into the matching domain type."""
    return _PARSERS[detect(obj)](obj)


def emit_any(value) -> dict:
    for cls, fn in _EMITTERS.items():
        if isinstance(value, cls):
            return fn(value)
    raise SchemaError(f"cannot emit {type(value).__name__}")


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(f"not valid JSON: {err}")
    return parse_any(obj)


def read_path(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def write_path(value, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(emit_any(value)))
