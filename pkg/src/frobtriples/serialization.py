"""JSON rendering with exact integers.

Integers that do not fit in a signed 64-bit word are written as
``{"bigint": true, "value": "<decimal>"}`` so that consumers with 64-bit
number types never see a silently rounded value.  Dataclasses are tagged
with their type name and rebuilt on parse.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

_REGISTRY: dict[str, type] = {}


def register(cls: type) -> type:
    _REGISTRY[cls.__name__] = cls
    return cls


def _registry() -> dict[str, type]:
    if not _REGISTRY:
        # Imported here: the result modules import nothing from this one.
        from . import closed_forms, regimes, semigroup, staircase, sweep, triples

        for cls in (
            semigroup.GeneratorSet,
            semigroup.PAperySet,
            semigroup.SemigroupStats,
            triples.TripleParams,
            triples.Triple,
            regimes.RegimeLabel,
            staircase.Staircase,
            closed_forms.CornerSpec,
            closed_forms.ClosedFormResult,
            sweep.SweepRow,
            sweep.ReportDocument,
        ):
            register(cls)
    return _REGISTRY


def _encode(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        if INT64_MIN <= obj <= INT64_MAX:
            return obj
        return {"bigint": True, "value": str(obj)}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {"type": type(obj).__name__}
        for f in dataclasses.fields(obj):
            if f.metadata.get("serialize", True):
                out[f.name] = _encode(getattr(obj, f.name))
        return out
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    if hasattr(obj, "tolist"):  # numpy arrays and scalars
        return _encode(obj.tolist())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _as_tuple(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_as_tuple(v) for v in value)
    return value


def _decode(obj: Any) -> Any:
    if isinstance(obj, list):
        return [_decode(v) for v in obj]
    if not isinstance(obj, dict):
        return obj
    if obj.get("bigint") is True and set(obj) == {"bigint", "value"}:
        return int(obj["value"])
    fields = {k: _decode(v) for k, v in obj.items()}
    name = fields.pop("type", None)
    cls = _registry().get(name) if isinstance(name, str) else None
    if cls is None:
        if name is not None:
            fields["type"] = name
        return fields
    kwargs = {}
    for f in dataclasses.fields(cls):
        if f.name not in fields:
            continue
        v = fields[f.name]
        if str(f.type).startswith("tuple"):
            v = _as_tuple(v)
        kwargs[f.name] = v
    return cls(**kwargs)


def to_payload(obj: Any) -> Any:
    return _encode(obj)


def from_payload(payload: Any) -> Any:
    return _decode(payload)


def dumps(obj: Any, indent: int | None = 2) -> str:
    return json.dumps(_encode(obj), indent=indent, ensure_ascii=False)


def loads(text: str) -> Any:
    return _decode(json.loads(text))
