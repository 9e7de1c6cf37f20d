"""JSON descriptions of codes and codecs.

    {"field": {"p": 23, "e": 1},
     "code": {"type": "tgrs", "k": 5, "alphas": [...], "vs": [...],
              "twists": [{"t": 1, "h": 1, "eta": 1}]},
     "amd": {"b": 1}}

"vs" may be omitted (all ones).  Unknown keys are errors.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .algebra import Field, field_make
from .errors import SpecError
from .gscore import GrsSpec
from .pipeline import AmdCodec
from .rothlempel import RlSpec
from .twisted import TgrsSpec, TwistTriple

AnyCode = Union[GrsSpec, TgrsSpec, RlSpec]

_CODE_KEYS = {
    "grs": ({"type", "k", "alphas"}, {"vs"}),
    "tgrs": ({"type", "k", "alphas", "twists"}, {"vs"}),
    "rl": ({"type", "k", "alphas", "delta"}, {"vs"}),
}


def _keys(obj: Any, where: str, required: set, optional: set = frozenset()):
    if not isinstance(obj, dict):
        raise SpecError(f"{where}: expected an object")
    missing = required - obj.keys()
    if missing:
        raise SpecError(f"{where}: missing key(s) {sorted(missing)}")
    extra = obj.keys() - required - optional
    if extra:
        raise SpecError(f"{where}: unknown key(s) {sorted(extra)}")


def _int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"{where}: expected an integer, got {v!r}")
    return v


def parse_field(obj) -> Field:
    _keys(obj, "field", {"p"}, {"e"})
    try:
        return field_make(_int(obj["p"], "field.p"), _int(obj.get("e", 1), "field.e"))
    except ValueError as exc:
        raise SpecError(f"field: {exc}") from None


def parse_code(obj, F: Field) -> AnyCode:
    if not isinstance(obj, dict) or obj.get("type") not in _CODE_KEYS:
        raise SpecError('code: "type" must be one of grs, tgrs, rl')
    kind = obj["type"]
    req, opt = _CODE_KEYS[kind]
    _keys(obj, f"code ({kind})", req, opt)
    k = _int(obj["k"], "code.k")
    alphas = obj["alphas"]
    if not isinstance(alphas, list):
        raise SpecError("code.alphas: expected a list")
    n = len(alphas) + (1 if kind == "rl" else 0)
    vs = obj.get("vs", [1] * n)
    if not isinstance(vs, list):
        raise SpecError("code.vs: expected a list")
    if kind == "grs":
        return GrsSpec(F, tuple(alphas), tuple(vs), k)
    if kind == "rl":
        return RlSpec(F, tuple(alphas), tuple(vs), k, obj["delta"])
    twists = []
    if not isinstance(obj["twists"], list):
        raise SpecError("code.twists: expected a list")
    for i, tw in enumerate(obj["twists"]):
        _keys(tw, f"code.twists[{i}]", {"t", "h", "eta"})
        twists.append(TwistTriple(_int(tw["t"], "twist.t"), _int(tw["h"], "twist.h"), tw["eta"]))
    return TgrsSpec(F, tuple(alphas), tuple(vs), k, tuple(twists))


def parse_spec(doc) -> Union[AnyCode, AmdCodec]:
    """A bare code, or an AMD codec when an "amd" block is present."""
    _keys(doc, "spec", {"field", "code"}, {"amd"})
    F = parse_field(doc["field"])
    code = parse_code(doc["code"], F)
    if "amd" not in doc:
        return code
    _keys(doc["amd"], "amd", {"b"})
    if isinstance(code, GrsSpec):
        raise SpecError("amd: the outer code must be tgrs or rl")
    b = _int(doc["amd"]["b"], "amd.b")
    if code.k - 2 * b < 1:
        raise SpecError(f"amd: outer dimension {code.k} leaves no room for 2b = {2 * b} tag symbols")
    return AmdCodec.build(code, b)


def load_spec(path) -> Union[AnyCode, AmdCodec]:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc})") from None
    return parse_spec(doc)


# -- symbol formatting ---------------------------------------------------------------


def format_symbol(F: Field, a: int) -> str:
    if F.e == 1:
        return str(int(a))
    return ":".join(str(c) for c in F.to_coeffs(int(a)))


def parse_symbol(F: Field, text: str) -> int:
    text = text.strip()
    try:
        if ":" in text:
            return F.coerce([int(c) for c in text.split(":")])
        return F.coerce(int(text))
    except ValueError as exc:
        raise SpecError(f"bad symbol {text!r}: {exc}") from None


def format_word(F: Field, word) -> str:
    return ",".join(format_symbol(F, a) for a in word)


def parse_word(F: Field, text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [parse_symbol(F, part) for part in text.split(",")]
