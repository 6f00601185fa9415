"""Command line verifier.

Exit codes: 0 when every check passes, 1 on an axiom failure (the
certificate lists witnesses), 2 on malformed input.
"""

import argparse
import sys

from . import documents as docs
from .algebra import RightModule, check_algebra
from .bialgebroid import check_bialgebroid, takeuchi_subspace
from .errors import AxiomError, InputError, ShapeError
from .field import QQ, Field
from .frobenius import check_sep_frobenius
from .functor import (
    factorize, forgetful_fragment, functor_frobenius_check, induced_strength,
    invariants_fragment,
)
from .generators import (
    diagonal_frobenius, gen_groupoid_wba, gen_matrix_frobenius,
)
from .linalg import UNIT, LinMap, Mat
from .report import Report
from .weak import (
    base_sep_frobenius, bialgebroid_to_wba, check_wba, target_projection, wba_to_bialgebroid,
)

ALGEBRA_KINDS = ("algebra", "wba", "sep_frobenius", "bialgebroid", "module")


class Outcome:
    """Everything a command produces before it is rendered."""

    def __init__(self, command, field, report, data=None, derived=None, verdict=None):
        self.command = command
        self.field = field
        self.report = report
        self.data = data or {}
        self.derived = derived or {}
        self._verdict = verdict

    @property
    def passed(self):
        return self.report.passed

    @property
    def verdict(self):
        return self._verdict or ("pass" if self.passed else "fail")


def certificate(outcome, digests):
    cert = {
        "format": docs.CERT_FORMAT,
        "certificate": outcome.command,
        "input_digest": digests,
        "field": outcome.field.descriptor(),
        "verdict": outcome.verdict,
        "checks": outcome.report.to_json(),
        "data": outcome.data,
    }
    if outcome.derived:
        cert["derived"] = {k: docs.encode(v) for k, v in sorted(outcome.derived.items())}
    return cert


def render_text(outcome):
    lines = [f"{outcome.command}: {outcome.verdict}"]
    lines.extend(outcome.report.summary().splitlines()[1:])
    for k in sorted(outcome.data):
        lines.append(f"  {k} = {outcome.data[k]}")
    for k in sorted(outcome.derived):
        lines.append(f"  derived {k}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def _algebra_of(value, kind):
    if kind == "wba":
        return value.algebra
    if kind == "sep_frobenius":
        return value.base
    if kind in ("bialgebroid", "module"):
        return value.A if kind == "bialgebroid" else value.algebra
    return value


def _pair(f, x):
    return list(f.to_pair(x))


def cmd_check_algebra(inputs, opts):
    doc = inputs[0]
    A = _algebra_of(doc.value, doc.kind)
    return Outcome("check-algebra", doc.field, check_algebra(A), {"dim": A.dim})


def cmd_check_wba(inputs, opts):
    doc = inputs[0]
    W = doc.value
    f = doc.field
    rep = check_wba(W)
    data = {"dim A": W.dim, "eps(1)": _pair(f, W.counit(W.algebra.unit).entry(0, 0))}
    if rep.passed:
        tp = target_projection(W)
        data["dim A^R"] = tp.dim
    return Outcome("check-wba", f, rep, data)


def _bialgebroid_data(B):
    W = takeuchi_subspace(B)
    return {"dim A": B.A.dim, "dim R": B.R.dim, "dim A⊗_R A": B.AoA.dim, "dim A×_R A": W.dim}


def cmd_check_bialgebroid(inputs, opts):
    doc = inputs[0]
    B = doc.value
    rep = check_bialgebroid(B)
    return Outcome("check-bialgebroid", doc.field, rep, _bialgebroid_data(B))


def cmd_check_frobenius(inputs, opts):
    doc = inputs[0]
    return Outcome("check-frobenius", doc.field, check_sep_frobenius(doc.value), {"dim R": doc.value.base.dim})


def cmd_derive_bialgebroid(inputs, opts):
    doc = inputs[0]
    W = doc.value
    rep = Report("derive bialgebroid", doc.field)
    wrep = check_wba(W)
    rep.extend(wrep, "weak bialgebra: ")
    if not wrep.passed:
        return Outcome("derive-bialgebroid", doc.field, rep)
    B = wba_to_bialgebroid(W, check=False)
    rep.extend(check_bialgebroid(B), "bialgebroid: ")
    derived = {"bialgebroid": B}
    try:
        sf = base_sep_frobenius(W, check=False)
    except AxiomError as exc:
        rep.add("base separable Frobenius structure", False, detail=str(exc))
    else:
        rep.extend(check_sep_frobenius(sf), "base Frobenius: ")
        derived["sep_frobenius"] = sf
    data = _bialgebroid_data(B)
    return Outcome("derive-bialgebroid", doc.field, rep, data, derived if rep.passed else {})


def cmd_derive_wba(inputs, opts):
    bdoc = inputs[0]
    B = bdoc.value
    sf = inputs[1].value
    rep = Report("derive weak bialgebra", bdoc.field)
    rep.extend(check_bialgebroid(B), "bialgebroid: ")
    rep.extend(check_sep_frobenius(sf), "base Frobenius: ")
    if not rep.passed:
        return Outcome("derive-wba", bdoc.field, rep)
    if not sf.base.same_as(B.R):
        raise InputError("Frobenius structure is not on the bialgebroid base", "sep_frobenius")
    try:
        W = bialgebroid_to_wba(B, sf, check=False)
    except AxiomError as exc:
        rep.add("Frobenius section", False, detail=str(exc))
        return Outcome("derive-wba", bdoc.field, rep)
    rep.extend(check_wba(W), "weak bialgebra: ")
    return Outcome("derive-wba", bdoc.field, rep, {"dim A": W.dim},
                   {"wba": W} if rep.passed else {})


def cmd_factorize(inputs, opts):
    doc = inputs[0]
    F = doc.value
    fz = factorize(F)
    data = {"dim R": fz.base.dim,
            "strength": {f"{a},{b}": s.verdict for (a, b), s in sorted(fz.strengths.items())}}
    return Outcome("factorize", doc.field, fz.report, data, {"algebra": fz.base})


def cmd_strength(inputs, opts):
    doc = inputs[0]
    F = doc.value
    a, b = opts.pair
    s = induced_strength(F, a, b)
    rep = Report(f"essential strength ({a}, {b})", doc.field)
    rep.add("G2 coequalizes the R-actions", True)
    rep.add("G2 is surjective", s.surjective, detail=f"rank onto dim {s.map.codomain.dim}")
    rep.add("kernel of G2 equals the relation span", s.kernel_is_relations,
            detail=f"dim Ga⊗_R Gb = {s.tensor.dim}")
    data = {"pair": [a, b], "dim Ga⊗_R Gb": s.tensor.dim, "dim G(a*b)": s.map.codomain.dim}
    return Outcome("strength", doc.field, rep, data, verdict=s.verdict)


def cmd_frobenius_functor(inputs, opts):
    doc = inputs[0]
    F = doc.value
    if opts.triple:
        X, Y, Z = opts.triple
    else:
        others = [c for c in F.objects if c != F.unit and F.has_product(c, c)]
        X = Y = Z = others[0] if others else F.unit
    rep = functor_frobenius_check(F, X, Y, Z)
    derived = {}
    if rep.passed and "base_frobenius" in rep.data:
        derived["sep_frobenius"] = rep.data["base_frobenius"]
    return Outcome("frobenius-functor", doc.field, rep, {"triple": [X, Y, Z]}, derived)


COMMANDS = {
    "check-algebra": (cmd_check_algebra, [ALGEBRA_KINDS]),
    "check-wba": (cmd_check_wba, ["wba"]),
    "check-bialgebroid": (cmd_check_bialgebroid, ["bialgebroid"]),
    "check-frobenius": (cmd_check_frobenius, ["sep_frobenius"]),
    "derive-bialgebroid": (cmd_derive_bialgebroid, ["wba"]),
    "derive-wba": (cmd_derive_wba, ["bialgebroid", "sep_frobenius"]),
    "factorize": (cmd_factorize, ["fragment"]),
    "strength": (cmd_strength, ["fragment"]),
    "frobenius-functor": (cmd_frobenius_functor, ["fragment"]),
}


# ---------------------------------------------------------------------------
# generators


def sign_module(W):
    """k with each group-like basis element acting by −1 unless it is the unit."""
    A = W.algebra
    f = A.field
    one = A.unit.vector_dict()
    vals = [f.one if one.get(i) else f.norm(-f.one) for i in range(A.dim)]
    act = LinMap(A.space, UNIT, Mat.from_entries(f, (1, A.dim), [(0, i, v) for i, v in enumerate(vals)]))
    return RightModule(A, UNIT, act, "sign")


def generate(opts):
    f = opts.field or QQ
    what = opts.what
    if what == "groupoid":
        return gen_groupoid_wba(opts.n, opts.pattern, opts.group, f, opts.dual)
    if what == "matrix-frobenius":
        return gen_matrix_frobenius(opts.n, f)
    if what == "diagonal-frobenius":
        return diagonal_frobenius(opts.n, f)
    if what in ("bialgebroid", "base-frobenius", "forgetful"):
        W = gen_groupoid_wba(opts.n, opts.pattern, opts.group, f, opts.dual)
        B = wba_to_bialgebroid(W)
        if what == "bialgebroid":
            return B
        sf = base_sep_frobenius(W)
        if what == "base-frobenius":
            return sf
        return forgetful_fragment(B, {"A": RightModule.regular(B.A)}, sf)
    if what == "invariants":
        W = gen_groupoid_wba(1, "group", opts.group or "Z2", f)
        return invariants_fragment(W, {"sign": sign_module(W)})
    raise InputError(f"unknown generator {what!r}", "gen")


# ---------------------------------------------------------------------------
# entry point


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(exc.strerror or str(exc), path) from None


def _field_arg(text):
    try:
        return Field.parse(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _names(count):
    def parse(text):
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != count or not all(parts):
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated object names")
        return parts
    return parse


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="json")
    common.add_argument("--field", type=_field_arg, default=None,
                        help="Q or Fp:<p>; overrides the field declared in the input")
    p = argparse.ArgumentParser(prog="weakbialg", description="Exact axiom verifier for weak bialgebras and bialgebroids.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("check-algebra", "check-wba", "check-bialgebroid", "check-frobenius",
                 "derive-bialgebroid", "factorize", "frobenius-functor"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("input", help="JSON document or certificate; - for stdin")
        if name == "frobenius-functor":
            sp.add_argument("--triple", type=_names(3), default=None)
    sp = sub.add_parser("derive-wba", parents=[common])
    sp.add_argument("input")
    sp.add_argument("frobenius", nargs="?", default=None,
                    help="separable Frobenius structure; defaults to the one embedded in the input certificate")
    sp = sub.add_parser("strength", parents=[common])
    sp.add_argument("input")
    sp.add_argument("--pair", type=_names(2), required=True)
    sp = sub.add_parser("gen", parents=[common])
    sp.add_argument("what", choices=("groupoid", "matrix-frobenius", "diagonal-frobenius", "bialgebroid",
                                      "base-frobenius", "forgetful", "invariants"))
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--pattern", choices=("discrete", "pair", "group"), default="pair")
    sp.add_argument("--group", default=None, help="Zm or S3")
    sp.add_argument("--dual", action="store_true")
    return p


def run(argv, stdin=None):
    """Execute a command; returns ``(exit_code, output_bytes, error_text)``."""
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code else 0), b"", ""
    field = opts.field or QQ
    try:
        if opts.command == "gen":
            obj = generate(opts)
            return 0, docs.serialize(obj), ""
        func, kinds = COMMANDS[opts.command]
        paths = [opts.input]
        if opts.command == "derive-wba":
            paths.append(opts.frobenius or opts.input)
        raws = []
        cache = {}
        for path in paths:
            if path not in cache:
                cache[path] = _read(path) if stdin is None or path != "-" else stdin
            raws.append(cache[path])
        digests = [docs.digest(r) for r in (raws if len(set(paths)) > 1 else raws[:1])]
        inputs = [docs.parse_input(raw, kind, opts.field) for raw, kind in zip(raws, kinds)]
        field = inputs[0].field
        outcome = func(inputs, opts)
    except (InputError, ShapeError) as exc:
        return 2, b"", f"input error: {exc}"
    except AxiomError as exc:
        rep = exc.report if isinstance(getattr(exc, "report", None), Report) else Report(str(exc))
        if not rep.checks:
            rep.add(str(exc), False)
        outcome = Outcome(opts.command, field, rep)
    if opts.format == "json":
        out = docs.canonical_bytes(certificate(outcome, digests))
    else:
        out = render_text(outcome).encode("utf-8")
    code = 0 if outcome.passed and outcome.verdict in ("pass", "essentially strong") else 1
    return code, out, ""


def main(argv=None):
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.buffer.write(out)
        sys.stdout.flush()
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
