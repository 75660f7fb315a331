"""JSON interchange: the sparse ``hopf-v1`` algebra document and constructor documents."""
from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np

from .constructors import (
    GroupTable,
    RestrictedLieData,
    group_algebra,
    h_delta,
    restricted_enveloping,
)
from .gf_linear import PrimeField
from .hopf_core import HopfAlgebraData, co_opposite, dual, opposite, tensor

__all__ = [
    "SCHEMA",
    "DocumentError",
    "to_document",
    "from_document",
    "dumps",
    "build",
    "load",
]

SCHEMA = "hopf-v1"


class DocumentError(ValueError):
    """Malformed or inconsistent input document."""


def _sparse(tensor: np.ndarray) -> list[list[int]]:
    # argwhere walks indices in lexicographic order, which is the canonical sort
    return [[*map(int, idx), int(tensor[tuple(idx)])] for idx in np.argwhere(tensor)]


def to_document(H: HopfAlgebraData, degrees=None) -> dict:
    doc = {
        "schema": SCHEMA,
        "name": H.name,
        "p": H.p,
        "dim": H.dim,
        "labels": list(H.labels),
        "mult": _sparse(H.mult),
        "unit": [int(v) for v in H.unit],
        "comult": _sparse(H.comult),
        "counit": [int(v) for v in H.counit],
        "antipode": _sparse(H.antipode),
    }
    if degrees is not None:
        doc["degrees"] = [int(v) for v in degrees]
    return doc


def dumps(doc: dict) -> str:
    """Canonical text: sorted keys, one sparse entry per line."""
    parts = []
    for key in sorted(doc):
        val = doc[key]
        if isinstance(val, list) and val and isinstance(val[0], list):
            body = ",\n  ".join(json.dumps(e, separators=(",", ":")) for e in val)
            text = "[\n  " + body + "\n ]"
        else:
            text = json.dumps(val)
        parts.append(f" {json.dumps(key)}: {text}")
    return "{\n" + ",\n".join(parts) + "\n}"


def _fill(shape, entries, p, what):
    out = np.zeros(shape, dtype=np.int64)
    for e in entries:
        if len(e) != len(shape) + 1:
            raise DocumentError(f"{what}: entry {e} has the wrong length")
        *idx, c = (int(v) for v in e)
        if any(not 0 <= i < n for i, n in zip(idx, shape)):
            raise DocumentError(f"{what}: index {idx} out of range")
        if not 0 <= c < p:
            raise DocumentError(f"{what}: coefficient {c} not in [0, {p})")
        out[tuple(idx)] = c
    return out


def from_document(doc: dict) -> HopfAlgebraData:
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"expected schema {SCHEMA!r}")
    try:
        p, d = int(doc["p"]), int(doc["dim"])
        field = PrimeField(p)
        if d < 1:
            raise DocumentError("dim must be positive")
        mult = _fill((d, d, d), doc["mult"], p, "mult")
        comult = _fill((d, d, d), doc["comult"], p, "comult")
        antipode = _fill((d, d), doc["antipode"], p, "antipode")
        unit, counit = (np.asarray(doc[k], dtype=np.int64) for k in ("unit", "counit"))
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"missing or malformed field: {exc}") from exc
    except DocumentError:
        raise
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    if unit.shape != (d,) or counit.shape != (d,):
        raise DocumentError("unit and counit must have length dim")
    if ((unit < 0) | (unit >= p)).any() or ((counit < 0) | (counit >= p)).any():
        raise DocumentError("unit/counit coefficients must lie in [0, p)")
    labels = tuple(doc.get("labels") or ())
    if labels and len(labels) != d:
        raise DocumentError("labels must have length dim")
    try:
        return HopfAlgebraData(field, mult, unit, comult, counit, antipode, labels, doc.get("name", ""))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def _least_prime_factor(n: int) -> int:
    if n < 2:
        raise DocumentError("trivial group: give the characteristic explicitly as 'p'")
    return next(k for k in range(2, n + 1) if n % k == 0)


def build(doc: dict) -> HopfAlgebraData:
    """Turn an algebra or constructor document into HopfAlgebraData."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if "schema" in doc:
        return from_document(doc)
    kind = doc.get("kind")
    try:
        if kind == "group":
            G = GroupTable.from_json(doc["cayley"])
            p = int(doc["p"]) if "p" in doc else _least_prime_factor(G.order)
            return group_algebra(G, p)
        if kind == "lie":
            return restricted_enveloping(RestrictedLieData.from_json(doc))
        if kind == "h_delta":
            return h_delta(int(doc["p"]), int(doc["delta"]))
        if kind in ("dual", "op", "cop", "tensor"):
            subs = doc["of"]
            arity = 2 if kind == "tensor" else 1
            if not isinstance(subs, list) or len(subs) != arity:
                raise DocumentError(f"{kind} document: malformed 'of', expected {arity} subdocument(s)")
            if kind == "tensor":
                return tensor(build(subs[0]), build(subs[1]))
            return {"dual": dual, "op": opposite, "cop": co_opposite}[kind](build(subs[0]))
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"{kind} document: missing or malformed field {exc}") from exc
    except DocumentError:
        raise
    except ValueError as exc:
        # invalid Cayley tables, Lie data, fields: the input is at fault
        raise DocumentError(str(exc)) from exc
    raise DocumentError(f"unknown document kind {kind!r}")


def load(path) -> HopfAlgebraData:
    """Read a document from disk ('-' is stdin)."""
    try:
        text = Path(path).read_text() if str(path) != "-" else sys.stdin.read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(str(exc)) from exc
    return build(doc)
