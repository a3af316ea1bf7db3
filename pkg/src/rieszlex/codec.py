"""JSON encoding of descriptors and elements.

Numbers are written as strings ("p/q" or "n") so no precision is lost; the
element encoding is shape-directed, so decoding needs the descriptor.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import ShapeMismatch
from .groups import Descriptor, Free, Int, Lex, Mat, Matrix, Prod, Rat, Trivial

FORMAT = 1


def encode_descriptor(desc: Descriptor) -> dict:
    match desc:
        case Int():
            return {"type": "Int"}
        case Rat():
            return {"type": "Rat"}
        case Matrix():
            return {"type": "Matrix"}
        case Free(k=k, vals=vals, abelian=ab):
            out = {"type": "Free", "k": k, "vals": [str(v) for v in vals]}
            if ab:
                out["abelian"] = True
            return out
        case Prod(children=cs, strict=strict):
            return {
                "type": "Prod",
                "mode": "strict" if strict else "product",
                "children": [encode_descriptor(c) for c in cs],
            }
        case Lex(first=a, second=g):
            return {"type": "Lex", "first": encode_descriptor(a), "second": encode_descriptor(g)}
        case Trivial(child=c):
            return {"type": "Trivial", "child": encode_descriptor(c)}
    raise ShapeMismatch(f"cannot encode {desc!r}")


def decode_descriptor(obj: Any) -> Descriptor:
    if not isinstance(obj, dict) or "type" not in obj:
        raise ShapeMismatch(f"not a descriptor object: {obj!r}")
    t = obj["type"]
    if t == "Int":
        return Int()
    if t == "Rat":
        return Rat()
    if t == "Matrix":
        return Matrix()
    if t == "Free":
        return Free(int(obj["k"]), tuple(_num(v) for v in obj["vals"]), bool(obj.get("abelian", False)))
    if t == "Prod":
        mode = obj.get("mode", "product")
        if mode not in ("product", "strict"):
            raise ShapeMismatch(f"unknown Prod mode {mode!r}")
        return Prod(tuple(decode_descriptor(c) for c in obj["children"]), mode == "strict")
    if t == "Lex":
        return Lex(decode_descriptor(obj["first"]), decode_descriptor(obj["second"]))
    if t == "Trivial":
        return Trivial(decode_descriptor(obj["child"]))
    raise ShapeMismatch(f"unknown descriptor type {t!r}")


def _num(s: Any) -> Fraction:
    if isinstance(s, bool):
        raise ShapeMismatch(f"not a number: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ShapeMismatch(f"numbers are encoded as strings, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ShapeMismatch(f"bad number {s!r}") from exc


def encode_element(desc: Descriptor, x: Any) -> Any:
    match desc:
        case Int() | Rat():
            return str(x)
        case Matrix():
            return [str(x.a), str(x.b)]
        case Free():
            return [[g, s] for g, s in x.letters]
        case Prod(children=cs):
            return [encode_element(c, v) for c, v in zip(cs, x)]
        case Lex(first=a, second=g):
            return [encode_element(a, x[0]), encode_element(g, x[1])]
        case Trivial(child=c):
            return encode_element(c, x)
    raise ShapeMismatch(f"cannot encode element for {desc!r}")


def decode_element(desc: Descriptor, obj: Any) -> Any:
    match desc:
        case Int():
            f = _num(obj)
            if f.denominator != 1:
                raise ShapeMismatch(f"Int expects an integer, got {obj!r}")
            return int(f)
        case Rat():
            return _num(obj)
        case Matrix():
            if not isinstance(obj, list) or len(obj) != 2:
                raise ShapeMismatch(f"matrix expects [a, b], got {obj!r}")
            return Mat(_num(obj[0]), _num(obj[1]))
        case Free():
            if not isinstance(obj, list):
                raise ShapeMismatch(f"word expects a list, got {obj!r}")
            letters = []
            for item in obj:
                if not (isinstance(item, list) and len(item) == 2):
                    raise ShapeMismatch(f"bad letter {item!r}")
                letters.append((int(item[0]), int(item[1])))
            return desc.check(desc.normalize(letters))
        case Prod(children=cs):
            if not isinstance(obj, list) or len(obj) != len(cs):
                raise ShapeMismatch(f"expected {len(cs)} components, got {obj!r}")
            return tuple(decode_element(c, v) for c, v in zip(cs, obj))
        case Lex(first=a, second=g):
            if not isinstance(obj, list) or len(obj) != 2:
                raise ShapeMismatch(f"expected a pair, got {obj!r}")
            return (decode_element(a, obj[0]), decode_element(g, obj[1]))
        case Trivial(child=c):
            return decode_element(c, obj)
    raise ShapeMismatch(f"cannot decode element for {desc!r}")


def dumps(obj: Any) -> str:
    """Canonical, byte-stable JSON text."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
