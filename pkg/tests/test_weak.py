import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import SHAPES, corpus_keys, derived, groupoid, shape_id
from oracle import Groupoid, GroupoidWBA
from weakbialg import (
    QQ, AxiomError, LinMap, Mat, WeakBialgebra, base_sep_frobenius, bialgebroid_to_wba,
    check_sep_frobenius, check_wba, gen_groupoid_wba, target_projection, tensor,
    wba_to_bialgebroid,
)
from weakbialg.bialgebroid import takeuchi_subspace
from weakbialg.linalg import SubSpace

KEYS = corpus_keys(fields=("Q", "F7"))


def W_of(key):
    (n, pattern, group), field, dual = key
    return groupoid(n, pattern, group, field, dual)


def idx(A, label):
    return A.space.labels.index(label)


def eps(W, v):
    return W.counit(v).entry(0, 0)


def with_counit_entry_zeroed(W, label):
    A = W.algebra
    j = idx(A, label)
    entries = [(0, i, x) for _, i, x in W.counit.mat.items() if i != j]
    return WeakBialgebra(A, W.comul, LinMap(A.space, W.counit.codomain,
                                            Mat.from_entries(W.field, (1, A.dim), entries)))


# ---------------------------------------------------------------------------
# axioms


def test_group_bialgebra_passes():
    W = gen_groupoid_wba(1, "group", "Z2")
    assert check_wba(W).passed
    assert eps(W, W.algebra.unit) == 1


def test_pair_groupoid_is_strictly_weak():
    W = gen_groupoid_wba(2, "pair")
    assert check_wba(W).passed
    assert eps(W, W.algebra.unit) == 2
    assert GroupoidWBA(Groupoid(2)).weak_counit_ok()


def test_zeroed_counit_fails_weak_counit():
    W = with_counit_entry_zeroed(gen_groupoid_wba(2, "pair"), "g01")
    rep = check_wba(W)
    assert not rep.passed
    check = rep["weak counit eps(a b1) eps(b2 c) = eps(abc)"]
    assert not check.passed
    a, b, c = check.witness.indices
    A = W.algebra
    assert [A.space.labels[i] for i in (a, b, c)] == ["g00", "g01", "g10"]
    # evaluate both sides directly: Δ(b) = b⊗b
    ga, gb, gc = A.basis(a), A.basis(b), A.basis(c)
    lhs = eps(W, A.multiply(ga, gb)) * eps(W, A.multiply(gb, gc))
    rhs = eps(W, A.multiply(A.multiply(ga, gb), gc))
    assert (lhs, rhs) == (0, 1)
    assert not rep["left counit"].passed


def test_broken_comultiplication_fails():
    W = gen_groupoid_wba(2, "pair")
    A = W.algebra
    D = W.comul.mat
    entries = [(i, j, x) for i, j, x in D.items() if j != idx(A, "g01")]
    bad = WeakBialgebra(A, LinMap(A.space, W.comul.codomain, Mat.from_entries(QQ, D.shape, entries)), W.counit)
    rep = check_wba(bad)
    assert not rep["left counit"].passed
    assert rep["left counit"].witness.indices == (idx(A, "g01"),)


def test_zeroed_group_counit_fails():
    W = gen_groupoid_wba(1, "group", "Z3")
    bad = with_counit_entry_zeroed(W, "z1")
    rep = check_wba(bad)
    assert not rep.passed
    assert rep["weak unit (Delta⊗id)Delta(1) = (Delta(1)⊗1)(1⊗Delta(1))"].passed


@pytest.mark.parametrize("key", KEYS, ids=[shape_id(*k) for k in KEYS])
def test_corpus_passes(key):
    W = W_of(key)
    rep = check_wba(W)
    assert rep.passed, rep.summary()
    (n, pattern, _), _, dual = key
    if pattern != "group":
        assert eps(W, W.algebra.unit) == n


def test_weak_counit_agrees_with_oracle():
    for dual in (False, True):
        assert GroupoidWBA(Groupoid(2, "pair", 2), dual).weak_counit_ok()
        assert check_wba(gen_groupoid_wba(2, "group", "Z2", dual=dual)).passed


# ---------------------------------------------------------------------------
# target projection


def test_target_projection_of_bialgebra():
    W = gen_groupoid_wba(1, "group", "Z3")
    tp = target_projection(W)
    A = W.algebra
    assert tp.dim == 1
    expect = A.unit @ W.counit.mat
    assert tp.projection.mat == expect


def test_target_projection_of_pair_groupoid():
    W = gen_groupoid_wba(2, "pair")
    A = W.algebra
    tp = target_projection(W)
    assert tp.dim == 2
    for x in range(2):
        for y in range(2):
            assert tp.projection(A.basis(idx(A, f"g{x}{y}"))) == A.basis(idx(A, f"g{y}{y}"))
    assert set(tp.base.space.labels) == {"g00", "g11"}


def test_target_projection_of_discrete_groupoid_is_identity():
    W = gen_groupoid_wba(2, "discrete")
    tp = target_projection(W)
    assert tp.projection == W.algebra.identity
    assert tp.dim == 2


@given(st.sampled_from(KEYS))
def test_target_projection_is_idempotent(key):
    W = W_of(key)
    P = target_projection(W).projection
    assert P @ P == P


@given(st.sampled_from(KEYS))
def test_base_dimension_counts_objects(key):
    (n, _, _), _, _ = key
    assert target_projection(W_of(key)).dim == n


# ---------------------------------------------------------------------------
# dictionary


def test_group_bialgebra_bialgebroid():
    W = gen_groupoid_wba(1, "group", "Z2")
    B = wba_to_bialgebroid(W)
    assert B.R.dim == 1
    assert B.AoA.dim == 4 and takeuchi_subspace(B).dim == 4
    assert B.delta_lift == W.comul


def test_pair_groupoid_bialgebroid():
    W = gen_groupoid_wba(2, "pair")
    B = wba_to_bialgebroid(W)
    A = W.algebra
    for y in range(2):
        r = B.R.basis(B.R.space.labels.index(f"g{y}{y}"))
        assert B.t.map(r) == A.basis(idx(A, f"g{y}{y}"))
        assert B.s.map(r) == A.basis(idx(A, f"g{y}{y}"))
    assert (B.AoA.dim, takeuchi_subspace(B).dim) == (8, 4)


def test_pointwise_bialgebroid():
    W = gen_groupoid_wba(2, "discrete")
    B = wba_to_bialgebroid(W)
    A = W.algebra
    assert B.R.dim == 2
    for x in range(2):
        ex = A.basis(x)
        assert B.delta(ex) == B.AoA.project(ex.kron(ex))


def test_dictionary_rejects_broken_input():
    W = with_counit_entry_zeroed(gen_groupoid_wba(2, "pair"), "g01")
    with pytest.raises(AxiomError, match="weak bialgebra axioms"):
        wba_to_bialgebroid(W)


def test_base_frobenius_of_bialgebra():
    sf = base_sep_frobenius(gen_groupoid_wba(1, "group", "Z2"))
    assert sf.psi.mat == Mat.eye(QQ, 1)
    assert sf.e == Mat.eye(QQ, 1)


def test_base_frobenius_of_pair_groupoid():
    W = gen_groupoid_wba(2, "pair")
    sf = base_sep_frobenius(W)
    R = sf.base
    assert check_sep_frobenius(sf).passed
    assert all(sf.psi.mat.entry(0, i) == 1 for i in range(2))
    assert sf.e == Mat.column(QQ, 4, {0: 1, 3: 1})
    assert [R.space.labels[i] for i in range(2)] == ["g00", "g11"]


def test_base_frobenius_of_dual_cyclic_group():
    W = gen_groupoid_wba(1, "group", "Z2", dual=True)
    assert check_wba(W).passed
    sf = base_sep_frobenius(W)
    assert sf.base.dim == 1
    assert check_sep_frobenius(sf).passed


def test_projected_unit_coproduct_leaves_the_base_for_dual_groupoids():
    # (Π^R⊗id)Δ(1) is a valid separability element for groupoid algebras,
    # but for functions on a groupoid its second leg lies in t(A^R) ≠ A^R.
    for dual, lands in ((False, True), (True, False)):
        W = gen_groupoid_wba(2, "pair", dual=dual)
        A = W.algebra
        tp = target_projection(W)
        cand = tensor(tp.projection, A.identity)(W.delta_one)
        base = tp.inclusion.map.mat
        RR = SubSpace.span(A.space.tensor(A.space), base.kron(base), W.field)
        assert RR.contains(cand) is lands
        assert check_sep_frobenius(base_sep_frobenius(W)).passed


def test_round_trip_examples():
    for W in (gen_groupoid_wba(1, "group", "Z2"), gen_groupoid_wba(2, "pair"),
              gen_groupoid_wba(1, "group", "Z2", dual=True)):
        W2 = bialgebroid_to_wba(wba_to_bialgebroid(W), base_sep_frobenius(W))
        assert W2.comul == W.comul and W2.counit == W.counit


@given(st.sampled_from(KEYS))
def test_round_trip(key):
    (n, pattern, group), field, dual = key
    W, B, sf = derived(n, pattern, group, field, dual)
    W2 = bialgebroid_to_wba(B, sf)
    assert W2.comul.mat == W.comul.mat
    assert W2.counit.mat == W.counit.mat


@given(st.sampled_from([s for s in SHAPES if s[1] == "group"]), st.sampled_from(["Q", "F5"]))
def test_ordinary_bialgebras_give_bialgebroids_over_k(shape, field):
    n, pattern, group = shape
    W, B, _ = derived(n, pattern, group, field, False)
    assert W.delta_one == W.algebra.unit.kron(W.algebra.unit)
    assert B.R.dim == 1
    assert B.AoA.projection == LinMap.identity(B.AoA.flat, W.field)
    assert B.delta.mat == W.comul.mat
