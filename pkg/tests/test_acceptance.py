"""End-to-end acceptance criteria, all at zero tolerance.

conftest prints one CRITERION line per test below in the terminal summary.
"""

import json
import re
from dataclasses import replace
from pathlib import Path

import weakbialg

from helpers import SHAPES, corpus_keys, derived, groupoid
from weakbialg import (
    QQ, LinMap, Mat, RightModule, bialgebroid_to_wba, canonical_base, canonical_bimodule,
    check_sep_frobenius, check_wba, forgetful_fragment, frobenius_section, functor_frobenius_check,
    induced_strength, invariants_fragment, reconstruct_base, tensor_over, universal_sigma,
)
from weakbialg.algebra import AlgMorphism, check_morphism
from weakbialg.bialgebroid import takeuchi_subspace
from weakbialg.cli import run, sign_module
from weakbialg.functor import (
    derived_base_frobenius, identity_witness, scalar_witness, split_coequalizer_check,
    twisted_witness,
)

ALL_KEYS = corpus_keys(fields=("Q", "F5", "F7"))
SMALL_KEYS = [k for k in corpus_keys(fields=("Q", "F7")) if k[0] != (4, "discrete", None)]
SPLIT_NAMES = ("gamma d0 = gamma d1", "gamma sigma = 1", "d0 tau = 1", "d1 tau = sigma gamma")


def forgetful(key):
    (n, pattern, group), field, dual = key
    _, B, sf = derived(n, pattern, group, field, dual)
    return forgetful_fragment(B, {"A": RightModule.regular(B.A)}, sf)


def gen_args(shape, dual=False):
    n, pattern, group = shape
    args = ["--n", str(n), "--pattern", pattern]
    if group:
        args += ["--group", group]
    return args + (["--dual"] if dual else [])


def failed_checks(out):
    return [c for c in json.loads(out)["checks"] if not c["passed"]]


def test_criterion_1_wba_axiom_suite():
    for (n, pattern, group), field, dual in ALL_KEYS:
        W = groupoid(n, pattern, group, field, dual)
        rep = check_wba(W)
        assert rep.passed, (n, pattern, group, field, dual, rep.summary())
        if pattern != "group":
            assert W.counit(W.algebra.unit).entry(0, 0) == W.field.convert(n)


def test_criterion_2_dictionary_round_trip():
    for (n, pattern, group), field, dual in ALL_KEYS:
        W, B, sf = derived(n, pattern, group, field, dual)
        W2 = bialgebroid_to_wba(B, sf)
        assert W2.comul.mat == W.comul.mat
        assert W2.counit.mat == W.counit.mat


def test_criterion_3_takeuchi_dimensions():
    W, B, _ = derived(2, "pair")
    T = takeuchi_subspace(B)
    assert (B.A.dim, B.R.dim, B.AoA.dim, T.dim) == (4, 2, 8, 4)
    for j in range(B.A.dim):
        assert T.contains(B.delta.col(j))


def test_criterion_4_split_coequalizers():
    for key in SMALL_KEYS:
        F = forgetful(key)
        for X in ("E", "A"):
            for Y in ("E", "A"):
                rep = split_coequalizer_check(F, X, Y)
                for name in SPLIT_NAMES:
                    assert rep[name].passed, (key, X, Y, name)
                assert induced_strength(F, X, Y).strong


def test_criterion_5_base_frobenius_and_sections():
    for key in SMALL_KEYS:
        F = forgetful(key)
        assert functor_frobenius_check(F, "A", "A", "A").passed
        sf, _ = derived_base_frobenius(F)
        assert check_sep_frobenius(sf).passed
        (n, pattern, group), field, dual = key
        _, B, base_sf = derived(n, pattern, group, field, dual)
        X = B.bimodule
        for P, Q in ((X, X), (canonical_bimodule(F, "E"), X), (X, canonical_bimodule(F, "E"))):
            T = tensor_over(P, Q)
            sec = frobenius_section(P, Q, base_sf, T)
            assert T.projection @ sec == LinMap.identity(T.space, T.field)


def test_criterion_6_universal_base():
    F = forgetful(((2, "pair", None), "Q", False))
    _, B, _ = derived(2, "pair")
    R = canonical_base(F)
    C, comp = reconstruct_base(B)
    assert comp.is_invertible()
    assert check_morphism(AlgMorphism(C, R, LinMap(C.space, R.space, comp.mat))).passed

    sigma, rep = universal_sigma(F, identity_witness(F))
    assert rep.passed and sigma.map.mat == Mat.eye(QQ, 2)
    sigma, rep = universal_sigma(F, scalar_witness(F))
    assert rep.passed and sigma.map.mat == R.unit
    swap = LinMap.from_columns(R.space, R.space, [R.basis(1), R.basis(0)], QQ)
    sigma, rep = universal_sigma(F, twisted_witness(F, swap))
    assert rep.passed and sigma.map.mat == swap.mat
    assert any(name.endswith("through sigma") for name in rep.names())


def test_criterion_7_negative_controls():
    W = groupoid(1, "group", "Z2")
    s = induced_strength(invariants_fragment(W, {"sign": sign_module(W)}), "sign", "sign")
    assert s.verdict == "not essentially strong"
    assert (s.tensor.dim, s.map.codomain.dim) == (0, 1)
    code, out, _ = run(["strength", "-", "--pair", "sign,sign"], run(["gen", "invariants"])[1])
    assert code == 1 and json.loads(out)["verdict"] == "not essentially strong"

    # one structure constant, one Δ entry, one ε entry, for every corpus shape
    for shape in SHAPES:
        for dual in (False, True):
            doc = json.loads(run(["gen", "groupoid", *gen_args(shape, dual)])[1])
            for key in ("mul", "comul", "counit"):
                bad = json.loads(json.dumps(doc))
                entry = bad[key][0]
                entry[2] += entry[3]
                code, out, _ = run(["check-wba", "-"], json.dumps(bad).encode())
                failed = failed_checks(out)
                assert code == 1 and failed, (shape, dual, key)
                assert all(c["witness"]["indices"] for c in failed)

    frag = json.loads(run(["gen", "forgetful", "--n", "2"])[1])
    for key, command in (("G0", "factorize"), ("G0op", "frobenius-functor")):
        bad = dict(frag, **{key: []})
        code, out, _ = run([command, "-"], json.dumps(bad).encode())
        failed = failed_checks(out)
        assert code == 1 and failed
        assert all(c["witness"]["indices"] for c in failed)
    F = forgetful(((2, "pair", None), "Q", False))
    assert not functor_frobenius_check(replace(F, G0=F.G0.scale(QQ.zero)), "A", "A", "A").passed


def test_criterion_8_determinism():
    for shape in SHAPES[4:]:
        raw = run(["gen", "groupoid", *gen_args(shape)])[1]
        assert raw == run(["gen", "groupoid", *gen_args(shape)])[1]
        first = run(["derive-bialgebroid", "-"], raw)
        assert first[0] == 0
        assert first == run(["derive-bialgebroid", "-"], raw)
    F = run(["gen", "forgetful", "--n", "2"])[1]
    for argv in (["factorize", "-"], ["frobenius-functor", "-"], ["strength", "-", "--pair", "A,A"]):
        assert run(argv, F) == run(argv, F)
    # exactness: no floating point or tolerance anywhere in the library
    src = Path(weakbialg.__file__).parent
    pattern = re.compile(r"\bfloat\b|isclose|tolerance|\btol\b|\d[eE]-\d")
    for path in sorted(src.glob("*.py")):
        assert not pattern.search(path.read_text(encoding="utf-8")), path.name
