"""Rendering of results as JSON-compatible values; invariants stay exact as "k/n" strings."""
import json

from enum import Enum
from functools import singledispatch
from typing import Any, Dict

from models.curve_descriptor import ConicCover, DiagonalForm, ModelCurve
from models.invariant_class import CyclicSubgroup, InvariantClass, RelativeBrauerShape
from models.pi_triple import AdmissibilityResult, PITriple
from models.place import Place, QuaternionSymbol
from models.reports import Conclusion, DeductionReport, GlobalReport, PlaceVerdict
from models.special_fibre import FibreComponent, SpecialFibre


@singledispatch
def encode(obj: Any) -> Any:
    raise TypeError(f"No JSON encoding for {type(obj).__name__}: {obj!r}")


@encode.register(type(None))
@encode.register(bool)
@encode.register(int)
@encode.register(str)
def _(obj):
    return obj


@encode.register(list)
@encode.register(tuple)
def _(obj):
    return [encode(item) for item in obj]


@encode.register(dict)
def _(obj):
    return {str(encode(key)) if not isinstance(key, str) else key: encode(value) for key, value in obj.items()}


@encode.register(Enum)
def _(obj):
    return obj.value


@encode.register(InvariantClass)
@encode.register(Place)
def _(obj):
    return str(obj)


@encode.register(CyclicSubgroup)
def _(obj):
    return {"order": obj.order}


@encode.register(RelativeBrauerShape)
def _(obj):
    return {"period": obj.period, "index": obj.index, "full_order": obj.full.order,
            "degree_zero_order": obj.degree_zero.order, "ns_order": obj.ns_order}


@encode.register(QuaternionSymbol)
def _(obj):
    return {"a": obj.a, "b": obj.b}


@encode.register(PITriple)
def _(obj):
    return {"g": obj.g, "pe": obj.pe, "ix": obj.ix}


@encode.register(AdmissibilityResult)
def _(obj):
    return {"triple": encode(obj.triple), "admissible": obj.admissible, "violations": list(obj.violations)}


@encode.register(FibreComponent)
def _(obj):
    return {"label": obj.label, "e": obj.e, "f": obj.f}


@encode.register(SpecialFibre)
def _(obj):
    return {"components": encode(obj.components),
            "dual_graph": None if obj.dual_graph is None else [list(edge) for edge in obj.dual_graph]}


@encode.register(DiagonalForm)
def _(obj):
    return {"kind": obj.kind, "n": obj.n, "a": obj.a, "b": obj.b}


@encode.register(ConicCover)
def _(obj):
    return {"kind": obj.kind, "a": obj.a, "b": obj.b, "cover_degree": obj.cover_degree, "genus": obj.genus}


@encode.register(ModelCurve)
def _(obj):
    return {"kind": obj.kind, "genus": obj.genus, "place_prime": obj.place_prime, "fibre": encode(obj.fibre)}


@encode.register(Conclusion)
def _(obj):
    return {"statement": obj.statement, "rule": obj.rule.value}


@encode.register(DeductionReport)
def _(obj):
    return {"conclusions": encode(obj.conclusions),
            "surviving_triples": None if obj.surviving_triples is None else encode(obj.surviving_triples),
            "notes": list(obj.notes)}


@encode.register(PlaceVerdict)
def _(obj):
    return {"place": str(obj.place), "verdict": obj.verdict.value,
            "reason": None if obj.reason is None else obj.reason.value,
            "supporting": [rule.value for rule in obj.supporting],
            "has_local_points_known": obj.has_local_points_known,
            "invariant": None if obj.invariant is None else str(obj.invariant),
            "detail": obj.detail}


@encode.register(GlobalReport)
def _(obj):
    return {"curve": encode(obj.curve), "genus": obj.genus,
            "place_verdicts": encode(obj.place_verdicts),
            "verdict": obj.global_conclusion.value,
            "witness": None if obj.witness is None else str(obj.witness),
            "real_points": obj.real_points,
            "rational_points_excluded": obj.rational_points_excluded,
            "finite_obstruction_with_real_points": obj.finite_obstruction_with_real_points,
            "notes": list(obj.notes)}


def document(schema: str, payload: Dict[str, Any]) -> Dict[str, Any]:
    """A top-level document: the schema tag followed by the encoded payload."""
    return {"schema": schema, **encode(payload)}


def dumps(doc: Dict[str, Any], indent: int = 2) -> str:
    return json.dumps(doc, indent=indent or None)
