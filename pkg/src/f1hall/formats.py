"""JSON formats: quiver files, representation and form literals, element output.

Class encodings (``Rep.encode`` / ``SymmetricForm.encode``) are accepted as
input wherever a literal is, so output of one command can feed another.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from f1hall.f1vect import PartialInjection
from f1hall.forms import SymmetricForm, canonical_isometry_class
from f1hall.lincomb import LinComb
from f1hall.quiverrep import Arrow, Involution, Quiver, Rep, canonical_form


class FormatError(ValueError):
    """Raised for malformed quiver files, literals or encodings."""


BUILTIN_QUIVERS: dict[str, dict] = {
    "point": {"vertices": ["1"], "arrows": [], "involution": {"vertices": {"1": "1"}, "arrows": {}}},
    "a2": {
        "vertices": ["1", "2"],
        "arrows": [{"name": "a", "src": "1", "tgt": "2"}],
        "involution": {"vertices": {"1": "2", "2": "1"}, "arrows": {"a": "a"}},
    },
    "loop": {
        "vertices": ["1"],
        "arrows": [{"name": "l", "src": "1", "tgt": "1"}],
        "involution": {"vertices": {"1": "1"}, "arrows": {"l": "l"}},
    },
}


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FormatError(msg)


def parse_quiver(doc: Any, name: str = "") -> Quiver:
    _require(isinstance(doc, dict), "quiver document must be a JSON object")
    verts = doc.get("vertices")
    _require(
        isinstance(verts, list) and all(isinstance(v, str) for v in verts),
        "'vertices' must be a list of strings",
    )
    index = {v: i for i, v in enumerate(verts)}
    _require(len(index) == len(verts), "vertex names must be unique")
    arrows = []
    for a in doc.get("arrows", []):
        _require(isinstance(a, dict) and {"name", "src", "tgt"} <= a.keys(), f"bad arrow entry {a!r}")
        _require(a["src"] in index and a["tgt"] in index, f"arrow {a['name']!r} has an unknown endpoint")
        arrows.append(Arrow(str(a["name"]), index[a["src"]], index[a["tgt"]]))
    arrow_index = {a.name: k for k, a in enumerate(arrows)}
    _require(len(arrow_index) == len(arrows), "arrow names must be unique")
    inv = None
    if doc.get("involution") is not None:
        s = doc["involution"]
        _require(isinstance(s, dict), "'involution' must be an object")
        vmap, amap = s.get("vertices", {}), s.get("arrows", {})
        _require(set(vmap) == set(index), "involution must map every vertex")
        _require(set(amap) == set(arrow_index), "involution must map every arrow")
        _require(all(t in index for t in vmap.values()), "involution maps to an unknown vertex")
        _require(all(t in arrow_index for t in amap.values()), "involution maps to an unknown arrow")
        inv = Involution(
            tuple(index[vmap[v]] for v in verts),
            tuple(arrow_index[amap[a.name]] for a in arrows),
        )
    try:
        return Quiver(tuple(verts), tuple(arrows), inv, name=name)
    except ValueError as e:
        raise FormatError(str(e)) from e


def quiver_to_json(q: Quiver) -> dict:
    out: dict[str, Any] = {
        "vertices": list(q.vertices),
        "arrows": [{"name": a.name, "src": q.vertices[a.src], "tgt": q.vertices[a.tgt]} for a in q.arrows],
    }
    if q.involution is not None:
        s = q.involution
        out["involution"] = {
            "vertices": {v: q.vertices[s.vertex_map[i]] for i, v in enumerate(q.vertices)},
            "arrows": {a.name: q.arrows[s.arrow_map[k]].name for k, a in enumerate(q.arrows)},
        }
    return out


def load_quiver(source: str) -> Quiver:
    """Load a quiver from a JSON file, or by builtin name (``point``, ``a2``, ``loop``)."""
    if source in BUILTIN_QUIVERS and not Path(source).exists():
        return parse_quiver(BUILTIN_QUIVERS[source], source)
    try:
        text = Path(source).read_text()
    except OSError as e:
        raise FormatError(f"cannot read quiver file {source}: {e.strerror}") from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{source}: invalid JSON: {e}") from e
    return parse_quiver(doc, Path(source).stem)


# -- representations and forms -------------------------------------------------


def parse_rep(q: Quiver, doc: Any) -> Rep:
    _require(isinstance(doc, dict), "representation literal must be a JSON object")
    dims_doc = doc.get("dims", {})
    _require(isinstance(dims_doc, dict), "'dims' must map vertex names to integers")
    _require(set(dims_doc) <= set(q.vertices), "'dims' names an unknown vertex")
    dims = tuple(dims_doc.get(v, 0) for v in q.vertices)
    _require(all(isinstance(x, int) and x >= 0 for x in dims), "dimensions must be non-negative integers")
    maps_doc = doc.get("maps", {})
    _require(isinstance(maps_doc, dict), "'maps' must map arrow names to pair lists")
    _require(set(maps_doc) <= {a.name for a in q.arrows}, "'maps' names an unknown arrow")
    maps = []
    try:
        for a in q.arrows:
            pairs = maps_doc.get(a.name, [])
            maps.append(PartialInjection(dims[a.src], dims[a.tgt], tuple(tuple(p) for p in pairs)))
        return Rep(q, dims, maps)
    except (ValueError, TypeError) as e:
        raise FormatError(f"invalid representation: {e}") from e


def parse_form(q: Quiver, doc: Any) -> SymmetricForm:
    rep = parse_rep(q, doc)
    form_doc = doc.get("form")
    _require(isinstance(form_doc, dict), "form literal needs a 'form' object")
    _require(set(form_doc) <= set(q.vertices), "'form' names an unknown vertex")
    b = tuple(tuple(form_doc.get(v, [])) for v in q.vertices)
    try:
        return SymmetricForm(rep, b)
    except (ValueError, TypeError) as e:
        raise FormatError(f"invalid form: {e}") from e


def rep_to_literal(r: Rep) -> dict:
    q = r.quiver
    return {
        "dims": {v: n for v, n in zip(q.vertices, r.dims)},
        "maps": {a.name: [list(p) for p in m.pairs] for a, m in zip(q.arrows, r.maps)},
    }


def form_to_literal(m: SymmetricForm) -> dict:
    out = rep_to_literal(m.rep)
    out["form"] = {v: list(bi) for v, bi in zip(m.quiver.vertices, m.b)}
    return out


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",")] if text else []


def _decode(q: Quiver, text: str) -> tuple[Rep, list[str]]:
    tokens = text.split(";")
    try:
        dims = tuple(_ints(tokens[0]))
        _require(len(dims) == len(q.vertices), f"encoding {text!r} has the wrong number of dimensions")
        _require(len(tokens) > len(q.arrows), f"encoding {text!r} lists too few arrows")
        maps = []
        for a, tok in zip(q.arrows, tokens[1:]):
            name, _, body = tok.partition("=")
            _require(name == a.name, f"encoding {text!r}: expected arrow {a.name}, got {name!r}")
            pairs = [tuple(int(x) for x in p.split(">")) for p in body.split(",") if p]
            maps.append(PartialInjection(dims[a.src], dims[a.tgt], tuple(pairs)))
        return Rep(q, dims, maps), tokens[1 + len(q.arrows) :]
    except (ValueError, TypeError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(f"bad encoding {text!r}: {e}") from e


def decode_rep(q: Quiver, text: str) -> Rep:
    rep, rest = _decode(q, text)
    _require(not rest, f"encoding {text!r} has trailing fields")
    return rep


def decode_form(q: Quiver, text: str) -> SymmetricForm:
    rep, rest = _decode(q, text)
    _require(len(rest) == 1 and rest[0].startswith("b="), f"encoding {text!r} lacks a form field")
    b = [_ints(part) for part in rest[0][2:].split("/")]
    _require(len(b) == len(q.vertices), f"encoding {text!r}: one permutation per vertex is required")
    try:
        return SymmetricForm(rep, b)
    except ValueError as e:
        raise FormatError(f"invalid form {text!r}: {e}") from e


def read_rep(q: Quiver, text: str) -> Rep:
    """A canonical class from a JSON literal or a class encoding."""
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"invalid JSON literal: {e}") from e
        return canonical_form(parse_rep(q, doc))
    return canonical_form(decode_rep(q, text))


def read_form(q: Quiver, text: str) -> SymmetricForm:
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"invalid JSON literal: {e}") from e
        return canonical_isometry_class(parse_form(q, doc))
    return canonical_isometry_class(decode_form(q, text))


# -- elements ------------------------------------------------------------------


def _encode_label(k: Any) -> Any:
    if isinstance(k, tuple):
        return [x.encode() for x in k]
    return k.encode()


def element_to_json(x: LinComb) -> list[dict]:
    """Sorted ``{"class", "coeff"}`` rows; tensor terms give a list of encodings."""
    return [
        {"class": _encode_label(k), "coeff": f"{c.numerator}/{c.denominator}"} for k, c in x.sorted_items()
    ]


def element_to_text(x: LinComb) -> str:
    if not x:
        return "0"
    rows = []
    for k, c in x.sorted_items():
        label = " ⊗ ".join(f"[{p}]" for p in _encode_label(k)) if isinstance(k, tuple) else f"[{k.encode()}]"
        rows.append(f"{c} {label}")
    return "\n".join(rows)
