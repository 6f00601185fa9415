import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import F5, F7, SHAPES
from oracle import Groupoid, GroupoidWBA
from weakbialg import (
    QQ, Field, InputError, check_algebra, check_sep_frobenius, check_wba, gen_groupoid_wba,
    gen_matrix_frobenius,
)
from weakbialg.generators import FiniteGroup, diagonal_frobenius, matrix_algebra


def test_discrete_groupoid_is_pointwise():
    W = gen_groupoid_wba(2, "discrete")
    A = W.algebra
    assert A.dim == 2
    for x in range(2):
        ex = A.basis(x)
        assert A.multiply(ex, ex) == ex
        assert W.comul(ex) == ex.kron(ex)
    assert A.multiply(A.basis(0), A.basis(1)).is_zero()


def test_pair_groupoid_is_matrix_algebra():
    A = gen_groupoid_wba(2, "pair").algebra
    M = matrix_algebra(2)
    assert A.space.labels == ("g00", "g01", "g10", "g11")
    # g_xy g_yz = g_xz, the same table as E_xy E_yz = E_xz
    assert A.mul.mat == M.mul.mat
    assert A.unit == M.unit


def test_z2_is_an_ordinary_bialgebra():
    W = gen_groupoid_wba(1, "group", "Z2")
    A = W.algebra
    assert A.dim == 2
    assert W.delta_one == A.unit.kron(A.unit)
    z1 = A.basis(A.space.labels.index("z1"))
    assert A.multiply(z1, z1) == A.unit


def test_invalid_group_table_is_rejected():
    with pytest.raises(InputError):
        FiniteGroup("ab", [["a", "a"], ["a", "b"]])
    with pytest.raises(InputError):
        FiniteGroup.named("Q8")


def test_bad_object_count():
    with pytest.raises(InputError):
        gen_groupoid_wba(0, "pair")


def test_matrix_frobenius_examples():
    one = gen_matrix_frobenius(1)
    assert (one.base.dim, one.e.entry(0, 0), one.psi.mat.entry(0, 0)) == (1, 1, 1)
    assert check_sep_frobenius(gen_matrix_frobenius(2)).passed
    with pytest.raises(InputError, match="divides"):
        gen_matrix_frobenius(2, Field.Fp(2))


@given(st.sampled_from(SHAPES), st.sampled_from([QQ, F5, F7]), st.booleans())
def test_groupoid_output_passes_checker(shape, field, dual):
    n, pattern, group = shape
    W = gen_groupoid_wba(n, pattern, group, field, dual)
    assert check_wba(W).passed


@given(st.sampled_from([s for s in SHAPES if s[2] != "S3"]), st.booleans())
def test_groupoid_structure_matches_oracle(shape, dual):
    n, pattern, group = shape
    m = int(group[1:]) if group else 1
    grp = Groupoid(n, "discrete" if pattern == "discrete" else "pair", m)
    W = gen_groupoid_wba(n, pattern, group, QQ, dual)
    O = GroupoidWBA(grp, dual)
    assert W.dim == O.dim
    A = W.algebra
    for i in range(O.dim):
        assert W.comul.mat.col(i).vector_dict() == {a * O.dim + b: c for (a, b), c in O.comul(i).items()}
        assert W.counit.mat.entry(0, i) == O.counit(i)
        for j in range(O.dim):
            assert A.multiply(A.basis(i), A.basis(j)).vector_dict() == O.mul(i, j)
    assert A.unit.vector_dict() == O.one()


@given(st.integers(1, 4), st.sampled_from([QQ, F5, F7]))
def test_matrix_frobenius_passes_checker(n, field):
    if field.characteristic and n % field.characteristic == 0:
        with pytest.raises(InputError):
            gen_matrix_frobenius(n, field)
    else:
        assert check_sep_frobenius(gen_matrix_frobenius(n, field)).passed


@given(st.integers(1, 5), st.sampled_from([QQ, F5]))
def test_diagonal_frobenius_passes_checker(n, field):
    sf = diagonal_frobenius(n, field)
    assert check_algebra(sf.base).passed
    assert check_sep_frobenius(sf).passed
