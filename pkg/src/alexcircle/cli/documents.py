"""JSON documents for tuples, reductions, assembly plans and collapse decompositions.

Canonical rendering: keys in schema order, no whitespace, UTF-8, one
trailing newline.  b is always a plain integer; its regime is re-derived on
parse, so a document can never carry a stale regime.

TupleDocument keys, in order::

    b, epsilon, g, f, k1, t, k2, s, k3, seifert, r, q   [, format_version]
"""

from __future__ import annotations

import json

from ..assembly import AssemblyPlan, BaseSurface, BlockKind, BlockSpec, BundleClass, Route
from ..collapse import (
    UNDETERMINED,
    CollapseDecomposition,
    CollapsePiece,
    InteriorData,
    PartialTuple,
    PieceKind,
    SeifertPartDescriptor,
    Type0Variant,
)
from ..core import EpsilonClass, InvariantTuple, ObstructionTerm, SeifertPair, b_regime
from ..errors import ParseError
from ..reduce import ReductionResult

FORMAT_VERSION = "1"
TUPLE_KEYS = ("b", "epsilon", "g", "f", "k1", "t", "k2", "s", "k3", "seifert", "r", "q")
_COUNT_KEYS = ("f", "k1", "t", "k2", "s", "k3")


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


def loads(text: str, what: str = "document"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(what, f"invalid JSON ({exc.msg} at line {exc.lineno} column {exc.colno})") from None


def _int(obj: dict, key: str, label: str | None = None) -> int:
    label = label or key
    if key not in obj:
        raise ParseError(label, "missing key")
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(label, f"expected an integer, got {v!r}")
    return v


def _epsilon(value, label: str) -> EpsilonClass:
    eps = EpsilonClass.parse(value) if isinstance(value, str) else None
    if eps is None:
        tags = ", ".join(e.value for e in EpsilonClass)
        raise ParseError(label, f"expected one of {tags}, got {value!r}")
    return eps


def _int_list(value, label: str) -> list[int]:
    if not isinstance(value, list):
        raise ParseError(label, f"expected an array of integers, got {value!r}")
    for x in value:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ParseError(label, f"expected integers, got {x!r}")
    return value


def _pairs(value, label: str) -> list[SeifertPair]:
    if not isinstance(value, list):
        raise ParseError(label, "expected an array of [alpha, beta] pairs")
    out = []
    for item in value:
        if not (isinstance(item, list) and len(item) == 2):
            raise ParseError(label, f"expected an [alpha, beta] pair, got {item!r}")
        out.append(SeifertPair(*_int_list(item, label)))
    return out


def _check_keys(obj, allowed, required, what: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(what, "expected a JSON object")
    for key in obj:
        if key not in allowed:
            raise ParseError(key, "unknown key")
    for key in required:
        if key not in obj:
            raise ParseError(key, "missing key")


def parse_tuple(obj) -> InvariantTuple:
    """TupleDocument -> InvariantTuple.  Only the JSON shape is checked here;
    value rules (parity, ranges, coprimality, regimes) are left to validation."""
    _check_keys(obj, TUPLE_KEYS + ("format_version",), TUPLE_KEYS, "tuple")
    if "format_version" in obj and obj["format_version"] != FORMAT_VERSION:
        raise ParseError("format_version", f"unsupported version {obj['format_version']!r}")
    return InvariantTuple.build(
        b=_int(obj, "b"),
        epsilon=_epsilon(obj["epsilon"], "epsilon"),
        g=_int(obj, "g"),
        **{key: _int(obj, key) for key in _COUNT_KEYS},
        seifert=_pairs(obj["seifert"], "seifert"),
        r=_int_list(obj["r"], "r"),
        q=_int_list(obj["q"], "q"),
    )


def tuple_document(tup: InvariantTuple) -> dict:
    doc = tup.fields()
    doc["epsilon"] = EpsilonClass(doc["epsilon"]).value
    doc["seifert"] = [[p.alpha, p.beta] for p in doc["seifert"]]
    doc["r"] = list(doc["r"])
    doc["q"] = list(doc["q"])
    return doc


def serialize_tuple(tup: InvariantTuple) -> str:
    return dumps(tuple_document(tup))


def reduction_document(result: ReductionResult) -> dict:
    return {
        "manifold": tuple_document(result.manifold.as_tuple()),
        "summands": result.summand_count,
    }


# -- assembly plans ---------------------------------------------------------

def plan_document(plan: AssemblyPlan) -> dict:
    blocks = []
    for blk in plan.blocks:
        entry = {"boundary_index": blk.boundary_index, "kind": blk.kind.value}
        if blk.seifert is not None:
            entry["alpha"], entry["beta"] = blk.seifert.alpha, blk.seifert.beta
        if blk.singular is not None:
            entry["singular"] = blk.singular
        blocks.append(entry)
    return {
        "base": {
            "genus": plan.base.genus,
            "orientable": plan.base.orientable,
            "boundary_count": plan.base.boundary_count,
        },
        "bundle": {"epsilon": plan.bundle.epsilon.value, "k": plan.bundle.k},
        "obstruction": plan.obstruction.value,
        "blocks": blocks,
        "route": plan.route.value,
    }


def parse_plan(obj) -> AssemblyPlan:
    keys = ("base", "bundle", "obstruction", "blocks", "route")
    _check_keys(obj, keys, keys, "plan")
    base = obj["base"]
    _check_keys(base, ("genus", "orientable", "boundary_count"), ("genus", "orientable", "boundary_count"), "base")
    if not isinstance(base["orientable"], bool):
        raise ParseError("base.orientable", "expected a boolean")
    bundle = obj["bundle"]
    _check_keys(bundle, ("epsilon", "k"), ("epsilon", "k"), "bundle")
    eps = _epsilon(bundle["epsilon"], "bundle.epsilon")
    if not isinstance(obj["blocks"], list):
        raise ParseError("blocks", "expected an array")
    blocks = [_parse_block(entry, i) for i, entry in enumerate(obj["blocks"])]
    try:
        route = Route(obj["route"])
    except ValueError:
        raise ParseError("route", f"expected boundary_gluing or connected_sum, got {obj['route']!r}") from None

    def count(*kinds):
        return sum(1 for b in blocks if b.kind in kinds)

    f = count(BlockKind.SIMPLE_F, BlockKind.TWISTED_F)
    t = count(BlockKind.SIMPLE_SE, BlockKind.TWISTED_SE)
    s = count(BlockKind.SIMPLE_SF, BlockKind.TWISTED_SF)
    pairs = [b.seifert for b in blocks if b.seifert is not None]
    b_value = _int(obj, "obstruction")
    return AssemblyPlan(
        base=BaseSurface(_int(base, "genus", "base.genus"), base["orientable"], _int(base, "boundary_count", "base.boundary_count")),
        bundle=BundleClass(eps, _int(bundle, "k", "bundle.k")),
        obstruction=ObstructionTerm(b_value, b_regime(eps, f, t, s, pairs)),
        blocks=tuple(blocks),
        route=route,
    )


def _parse_block(entry, i: int) -> BlockSpec:
    label = f"blocks[{i}]"
    _check_keys(entry, ("boundary_index", "kind", "alpha", "beta", "singular"), ("boundary_index", "kind"), label)
    try:
        kind = BlockKind(entry["kind"])
    except ValueError:
        raise ParseError(f"{label}.kind", f"unknown block kind {entry['kind']!r}") from None
    seifert = None
    if "alpha" in entry or "beta" in entry:
        seifert = SeifertPair(_int(entry, "alpha", f"{label}.alpha"), _int(entry, "beta", f"{label}.beta"))
    singular = _int(entry, "singular", f"{label}.singular") if "singular" in entry else None
    return BlockSpec(kind, _int(entry, "boundary_index", f"{label}.boundary_index"), seifert, singular)


# -- collapse decompositions ------------------------------------------------

def parse_decomposition(obj) -> CollapseDecomposition:
    _check_keys(obj, ("pieces", "bpt", "interior"), ("pieces", "bpt"), "decomposition")
    if not isinstance(obj["pieces"], list):
        raise ParseError("pieces", "expected an array")
    pieces = [_parse_piece(p, i) for i, p in enumerate(obj["pieces"])]
    interior = None
    if obj.get("interior") is not None:
        data = obj["interior"]
        keys = ("b", "epsilon", "g", "seifert")
        _check_keys(data, keys, keys, "interior")
        interior = InteriorData(
            b=_int(data, "b", "interior.b"),
            epsilon=_epsilon(data["epsilon"], "interior.epsilon"),
            g=_int(data, "g", "interior.g"),
            seifert=tuple(_pairs(data["seifert"], "interior.seifert")),
        )
    return CollapseDecomposition(tuple(pieces), SeifertPartDescriptor(_int(obj, "bpt"), interior))


def _parse_piece(entry, i: int) -> CollapsePiece:
    label = f"pieces[{i}]"
    _check_keys(entry, ("kind", "N", "variant"), ("kind",), label)
    try:
        kind = PieceKind(entry["kind"])
    except ValueError:
        raise ParseError(f"{label}.kind", f"unknown piece kind {entry['kind']!r}") from None
    if kind is PieceKind.TYPE0:
        if "N" in entry:
            raise ParseError(f"{label}.N", "type0 pieces take a variant, not N")
        try:
            return CollapsePiece.type0(entry.get("variant"))
        except ValueError:
            names = ", ".join(v.value for v in Type0Variant)
            raise ParseError(f"{label}.variant", f"expected one of {names}") from None
    if "variant" in entry:
        raise ParseError(f"{label}.variant", f"{kind.value} takes N, not a variant")
    N = _int(entry, "N", f"{label}.N")
    if N < 1:
        raise ParseError(f"{label}.N", "type N must be >= 1; type-0 pieces use kind type0")
    return CollapsePiece(kind, N=N)


def partial_document(partial: PartialTuple) -> dict:
    c = partial.census

    def slot(value, render):
        return "undetermined" if value is UNDETERMINED else render(value)

    return {
        "b": slot(partial.b, int),
        "epsilon": slot(partial.epsilon, lambda e: EpsilonClass(e).value),
        "g": slot(partial.g, int),
        "f": c.f,
        "k1": c.k1,
        "t": c.t,
        "k2": c.k2,
        "s": c.s,
        "k3": c.k3,
        "seifert": slot(partial.seifert, lambda ps: [[p.alpha, p.beta] for p in ps]),
        "r": list(partial.singular.r),
        "q": list(partial.singular.q),
        "undetermined": list(partial.undetermined),
    }
