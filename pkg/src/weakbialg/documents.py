"""JSON documents for structure-constant data and certificates.

Every matrix is a sparse list of ``[row, col, numerator, denominator]``
entries whose shape is implied by the declared dimensions.  Serialization is
canonical: sorted keys, compact separators, entries in (row, col) order and
reduced fractions, so parse and serialize are mutually inverse on canonical
documents.
"""

import hashlib
import json
from dataclasses import dataclass

from .algebra import Algebra, AlgMorphism, RightModule
from .bialgebroid import RightBialgebroid
from .errors import InputError, ShapeError
from .field import Field
from .frobenius import SepFrobenius
from .functor import MonoidalFunctorFragment, NaturalitySquare
from .linalg import UNIT, BasedSpace, LinMap, Mat
from .weak import WeakBialgebra

KINDS = ("algebra", "wba", "bialgebroid", "sep_frobenius", "module", "fragment")
FORMAT = "weakbialg-document/1"
CERT_FORMAT = "weakbialg-certificate/1"


@dataclass(frozen=True, eq=False)
class InputDocument:
    field: Field
    kind: str
    data: dict
    value: object

    @property
    def dims(self):
        return self.data.get("dims", {})

    def to_bytes(self):
        return canonical_bytes(self.data)


def canonical_bytes(obj):
    return (json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n").encode("utf-8")


def digest(raw):
    return hashlib.sha256(raw).hexdigest()


# ---------------------------------------------------------------------------
# matrices


def encode_mat(M):
    f = M.field
    return [[i, j, *f.to_pair(x)] for i, j, x in M.items()]


def decode_mat(entries, shape, field, locus):
    if not isinstance(entries, list):
        raise InputError("expected a list of [row, col, num, den] entries", locus)
    m, n = shape
    seen = set()
    out = []
    for k, e in enumerate(entries):
        here = f"{locus}[{k}]"
        if not isinstance(e, list) or len(e) not in (3, 4):
            raise InputError("entry must be [row, col, num] or [row, col, num, den]", here)
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise InputError("entries must be integers", here)
        i, j, num = e[0], e[1], e[2]
        den = e[3] if len(e) == 4 else 1
        if not (0 <= i < m and 0 <= j < n):
            raise InputError(f"index ({i}, {j}) out of range for shape ({m}, {n})", here)
        if (i, j) in seen:
            raise InputError(f"duplicate entry at ({i}, {j})", here)
        seen.add((i, j))
        if den == 0:
            raise InputError("zero denominator", here)
        try:
            x = field.convert(num, den)
        except InputError as exc:
            raise InputError(str(exc), here) from None
        out.append((i, j, x))
    return Mat.from_entries(field, shape, out)


def _labels(data, key, n, default_prefix):
    labels = data.get("labels", {}).get(key)
    if labels is None:
        return BasedSpace.standard(n, default_prefix)
    if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
        raise InputError(f"labels must be {n} strings", f"labels.{key}")
    if len(set(labels)) != n:
        raise InputError("labels must be distinct", f"labels.{key}")
    return BasedSpace(tuple(labels))


def _dim(data, key):
    dims = data.get("dims")
    if not isinstance(dims, dict) or key not in dims:
        raise InputError(f"missing dimension {key}", "dims")
    d = dims[key]
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise InputError("dimension must be a nonnegative integer", f"dims.{key}")
    return d


def _get(data, key, locus=None):
    if key not in data:
        raise InputError(f"missing component {key!r}", locus or key)
    return data[key]


# ---------------------------------------------------------------------------
# per-kind encoders and decoders


def _enc_algebra(A, prefix=""):
    return {prefix + "mul": encode_mat(A.mul.mat), prefix + "unit": encode_mat(A.unit)}


def _dec_algebra(data, field, key="A", prefix="", name=None):
    n = _dim(data, key)
    V = _labels(data, key, n, "a" if key == "A" else "r")
    mul = decode_mat(_get(data, prefix + "mul"), (n, n * n), field, prefix + "mul")
    unit = decode_mat(_get(data, prefix + "unit"), (n, 1), field, prefix + "unit")
    return Algebra(V, LinMap(V.tensor(V), V, mul), unit, name or key)


def encode(obj):
    """Canonical JSON-ready document for a supported structure."""
    if isinstance(obj, Algebra):
        kind, dims, labels, comp = "algebra", {"A": obj.dim}, {"A": list(obj.space.labels)}, _enc_algebra(obj)
        f = obj.field
    elif isinstance(obj, WeakBialgebra):
        A = obj.algebra
        f = A.field
        kind, dims, labels = "wba", {"A": A.dim}, {"A": list(A.space.labels)}
        comp = _enc_algebra(A)
        comp["comul"] = encode_mat(obj.comul.mat)
        comp["counit"] = encode_mat(obj.counit.mat)
    elif isinstance(obj, SepFrobenius):
        R = obj.base
        f = R.field
        kind, dims, labels = "sep_frobenius", {"R": R.dim}, {"R": list(R.space.labels)}
        comp = _enc_algebra(R)
        comp["psi"] = encode_mat(obj.psi.mat)
        comp["e"] = encode_mat(obj.e)
    elif isinstance(obj, RightBialgebroid):
        A, R = obj.A, obj.R
        f = A.field
        kind = "bialgebroid"
        dims = {"A": A.dim, "R": R.dim}
        labels = {"A": list(A.space.labels), "R": list(R.space.labels)}
        comp = _enc_algebra(A)
        comp.update(_enc_algebra(R, "R_"))
        comp["s"] = encode_mat(obj.s.map.mat)
        comp["t"] = encode_mat(obj.t.map.mat)
        comp["delta"] = encode_mat(obj.delta_lift.mat)
        comp["eps"] = encode_mat(obj.eps.mat)
    elif isinstance(obj, RightModule):
        A = obj.algebra
        f = A.field
        kind = "module"
        dims = {"A": A.dim, "X": obj.dim}
        labels = {"A": list(A.space.labels), "X": list(obj.space.labels)}
        comp = _enc_algebra(A)
        comp["act"] = encode_mat(obj.act.mat)
        comp["name"] = obj.name
    elif isinstance(obj, MonoidalFunctorFragment):
        return _enc_fragment(obj)
    else:
        raise TypeError(f"cannot encode {type(obj).__name__}")
    doc = {"format": FORMAT, "kind": kind, "field": f.descriptor(), "dims": dims, "labels": labels}
    doc.update(comp)
    return doc


def _enc_fragment(F):
    f = F.field
    objects = [{"name": c, "dim": F.space(c).dim} for c in F.objects]
    doc = {
        "format": FORMAT, "kind": "fragment", "field": f.descriptor(), "name": F.name,
        "dims": {c: F.space(c).dim for c in F.objects},
        "objects": objects, "unit": F.unit,
        "products": sorted([a, b, c] for (a, b), c in F.products.items()),
        "G2": sorted(({"pair": [a, b], "map": encode_mat(m.mat)} for (a, b), m in F.G2.items()),
                     key=lambda d: d["pair"]),
        "G0": encode_mat(F.G0.mat),
        "lunit": sorted(({"object": c, "map": encode_mat(m.mat)} for c, m in F.lunit.items()),
                        key=lambda d: d["object"]),
        "runit": sorted(({"object": c, "map": encode_mat(m.mat)} for c, m in F.runit.items()),
                        key=lambda d: d["object"]),
        "assoc": sorted(({"triple": list(k), "map": encode_mat(m.mat)} for k, m in F.assoc.items()),
                        key=lambda d: d["triple"]),
    }
    if F.G2op is not None:
        doc["G2op"] = sorted(({"pair": [a, b], "map": encode_mat(m.mat)} for (a, b), m in F.G2op.items()),
                             key=lambda d: d["pair"])
    if F.G0op is not None:
        doc["G0op"] = encode_mat(F.G0op.mat)
    if F.naturality:
        doc["naturality"] = [
            {"name": sq.name, "source": list(sq.source), "target": list(sq.target),
             "Gf": encode_mat(sq.Gf.mat), "Gg": encode_mat(sq.Gg.mat), "Gfg": encode_mat(sq.Gfg.mat)}
            for sq in F.naturality]
    return doc


def _dec_fragment(data, field):
    objs = _get(data, "objects")
    if not isinstance(objs, list):
        raise InputError("objects must be a list", "objects")
    spaces = {}
    for k, o in enumerate(objs):
        if not isinstance(o, dict) or not isinstance(o.get("name"), str):
            raise InputError("object must have a string name", f"objects[{k}]")
        d = o.get("dim")
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise InputError("object dim must be a nonnegative integer", f"objects[{k}].dim")
        if o["name"] in spaces:
            raise InputError(f"duplicate object {o['name']!r}", f"objects[{k}]")
        spaces[o["name"]] = BasedSpace.standard(d, f"{o['name']}:")
    unit = _get(data, "unit")
    if unit not in spaces:
        raise InputError(f"unit {unit!r} is not an object", "unit")
    products = {}
    for k, p in enumerate(_get(data, "products")):
        if not (isinstance(p, list) and len(p) == 3 and all(x in spaces for x in p)):
            raise InputError("product must be [a, b, a*b] naming listed objects", f"products[{k}]")
        products[(p[0], p[1])] = p[2]

    def space(c, locus):
        if c not in spaces:
            raise InputError(f"unknown object {c!r}", locus)
        return spaces[c]

    def prod(a, b, locus):
        if (a, b) not in products:
            raise InputError(f"product of {a!r} and {b!r} is not listed", locus)
        return products[(a, b)]

    def maps(key, keyname, width, build):
        out = {}
        for k, item in enumerate(data.get(key, [])):
            loc = f"{key}[{k}]"
            if not isinstance(item, dict) or keyname not in item or "map" not in item:
                raise InputError(f"expected {{{keyname!r}: ..., 'map': ...}}", loc)
            ident = item[keyname]
            if width and not (isinstance(ident, list) and len(ident) == width):
                raise InputError(f"{keyname} must list {width} objects", loc)
            dom, cod = build(ident, loc)
            M = decode_mat(item["map"], (cod.dim, dom.dim), field, loc + ".map")
            out[tuple(ident) if width else ident] = LinMap(dom, cod, M)
        return out

    e = unit
    G2 = maps("G2", "pair", 2, lambda p, loc: (space(p[0], loc).tensor(space(p[1], loc)),
                                                space(prod(p[0], p[1], loc), loc)))
    lunit = maps("lunit", "object", 0, lambda c, loc: (space(prod(e, c, loc), loc), space(c, loc)))
    runit = maps("runit", "object", 0, lambda c, loc: (space(prod(c, e, loc), loc), space(c, loc)))
    assoc = maps("assoc", "triple", 3, lambda t, loc: (
        space(prod(prod(t[0], t[1], loc), t[2], loc), loc),
        space(prod(t[0], prod(t[1], t[2], loc), loc), loc)))
    Ve = spaces[e]
    G0 = LinMap(UNIT, Ve, decode_mat(_get(data, "G0"), (Ve.dim, 1), field, "G0"))
    G2op = None
    if "G2op" in data:
        G2op = maps("G2op", "pair", 2, lambda p, loc: (space(prod(p[0], p[1], loc), loc),
                                                        space(p[0], loc).tensor(space(p[1], loc))))
    G0op = None
    if "G0op" in data:
        G0op = LinMap(Ve, UNIT, decode_mat(data["G0op"], (1, Ve.dim), field, "G0op"))
    squares = []
    for k, sq in enumerate(data.get("naturality", [])):
        loc = f"naturality[{k}]"
        try:
            (a, b), (a2, b2) = sq["source"], sq["target"]
            Gf = LinMap(space(a, loc), space(a2, loc), decode_mat(
                sq["Gf"], (space(a2, loc).dim, space(a, loc).dim), field, loc + ".Gf"))
            Gg = LinMap(space(b, loc), space(b2, loc), decode_mat(
                sq["Gg"], (space(b2, loc).dim, space(b, loc).dim), field, loc + ".Gg"))
            src, tgt = space(prod(a, b, loc), loc), space(prod(a2, b2, loc), loc)
            Gfg = LinMap(src, tgt, decode_mat(sq["Gfg"], (tgt.dim, src.dim), field, loc + ".Gfg"))
        except (KeyError, TypeError, ValueError):
            raise InputError("naturality square needs source, target, Gf, Gg, Gfg", loc) from None
        squares.append(NaturalitySquare((a, b), (a2, b2), Gf, Gg, Gfg, str(sq.get("name", f"square{k}"))))
    try:
        return MonoidalFunctorFragment(field, unit, spaces, products, G2, G0, lunit, runit, assoc,
                                       G2op, G0op, tuple(squares), str(data.get("name", "G")))
    except ShapeError as exc:
        raise InputError(str(exc), "fragment") from None


def decode(data, field):
    kind = data.get("kind")
    try:
        if kind == "algebra":
            return _dec_algebra(data, field)
        if kind == "wba":
            A = _dec_algebra(data, field)
            n = A.dim
            V = A.space
            comul = decode_mat(_get(data, "comul"), (n * n, n), field, "comul")
            counit = decode_mat(_get(data, "counit"), (1, n), field, "counit")
            return WeakBialgebra(A, LinMap(V, V.tensor(V), comul), LinMap(V, UNIT, counit))
        if kind == "sep_frobenius":
            R = _dec_algebra(data, field, "R")
            r = R.dim
            psi = decode_mat(_get(data, "psi"), (1, r), field, "psi")
            e = decode_mat(_get(data, "e"), (r * r, 1), field, "e")
            return SepFrobenius(R, LinMap(R.space, UNIT, psi), e)
        if kind == "bialgebroid":
            A = _dec_algebra(data, field)
            R = _dec_algebra(data, field, "R", "R_")
            n, r = A.dim, R.dim
            s = decode_mat(_get(data, "s"), (n, r), field, "s")
            t = decode_mat(_get(data, "t"), (n, r), field, "t")
            delta = decode_mat(_get(data, "delta"), (n * n, n), field, "delta")
            eps = decode_mat(_get(data, "eps"), (r, n), field, "eps")
            V = A.space
            return RightBialgebroid.from_lift(
                A, R, AlgMorphism(R, A, LinMap(R.space, V, s)),
                AlgMorphism(R.opposite(), A, LinMap(R.space, V, t)),
                LinMap(V, V.tensor(V), delta), LinMap(V, R.space, eps))
        if kind == "module":
            A = _dec_algebra(data, field)
            x = _dim(data, "X")
            X = _labels(data, "X", x, "x")
            act = decode_mat(_get(data, "act"), (x, x * A.dim), field, "act")
            return RightModule(A, X, LinMap(X.tensor(A.space), X, act), str(data.get("name", "X")))
        if kind == "fragment":
            return _dec_fragment(data, field)
    except ShapeError as exc:
        raise InputError(str(exc), kind) from None
    raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", "kind")


# ---------------------------------------------------------------------------
# parsing


def load_json(raw):
    if isinstance(raw, str):
        raw = raw.encode("utf-8")
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"not UTF-8: {exc.reason}", f"byte {exc.start}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None


def parse_input(raw, expect=None, field=None):
    """Validated document from bytes; certificates yield their derived payload.

    ``expect`` is a kind or tuple of kinds; ``field`` overrides the declared
    field.
    """
    data = load_json(raw)
    return document_from_json(data, expect, field)


def document_from_json(data, expect=None, field=None):
    if not isinstance(data, dict):
        raise InputError("top level must be a JSON object", "$")
    if data.get("format") == CERT_FORMAT or "certificate" in data:
        data = _from_certificate(data, expect)
    kinds = (expect,) if isinstance(expect, str) else expect
    kind = data.get("kind")
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", "kind")
    if kinds and kind not in kinds:
        raise InputError(f"expected a {' or '.join(kinds)} document, got {kind}", "kind")
    if field is None:
        if "field" not in data:
            raise InputError("missing field descriptor", "field")
        try:
            field = Field.parse(data["field"])
        except InputError as exc:
            raise InputError(str(exc), "field") from None
    value = decode(data, field)
    return InputDocument(field, kind, encode(value), value)


def _from_certificate(data, expect):
    derived = data.get("derived") or {}
    if not isinstance(derived, dict) or not derived:
        raise InputError("certificate carries no derived structure", "derived")
    kinds = (expect,) if isinstance(expect, str) else (expect or tuple(derived))
    for k in kinds:
        if k in derived:
            return derived[k]
    raise InputError(f"certificate has no derived {' or '.join(kinds)}", "derived")


def serialize(obj):
    """Canonical bytes of a structure or an :class:`InputDocument`."""
    if isinstance(obj, InputDocument):
        return obj.to_bytes()
    return canonical_bytes(encode(obj))


__all__ = [
    "InputDocument", "KINDS", "FORMAT", "CERT_FORMAT", "canonical_bytes", "digest",
    "encode_mat", "decode_mat", "encode", "decode", "parse_input", "document_from_json",
    "load_json", "serialize",
]
