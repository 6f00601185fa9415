"""Shared corpus and hypothesis strategies."""

from functools import lru_cache

from hypothesis import strategies as st

from weakbialg import QQ, Field, base_sep_frobenius, gen_groupoid_wba, wba_to_bialgebroid
from weakbialg.linalg import BasedSpace, LinMap, Mat

F5, F7 = Field.Fp(5), Field.Fp(7)
FIELDS = {"Q": QQ, "F5": F5, "F7": F7}

# (objects, pattern, group)
SHAPES = [(n, "discrete", None) for n in range(1, 5)] + [
    (2, "pair", None), (3, "pair", None),
    (1, "group", "Z2"), (1, "group", "Z3"), (1, "group", "S3"),
]


def shape_id(shape, field="Q", dual=False):
    n, pattern, group = shape
    tag = group if pattern == "group" else f"{pattern}{n}"
    return f"{'dual-' if dual else ''}{tag}-{field}"


def corpus_keys(fields=("Q", "F5", "F7"), duals=(False, True)):
    return [(s, f, d) for s in SHAPES for f in fields for d in duals]


@lru_cache(maxsize=None)
def groupoid(n, pattern="pair", group=None, field="Q", dual=False):
    return gen_groupoid_wba(n, pattern, group, FIELDS[field], dual)


@lru_cache(maxsize=None)
def derived(n, pattern="pair", group=None, field="Q", dual=False):
    """(W, B, sf) for a corpus weak bialgebra."""
    W = groupoid(n, pattern, group, field, dual)
    return W, wba_to_bialgebroid(W), base_sep_frobenius(W)


# ---------------------------------------------------------------------------
# strategies

small_ints = st.integers(min_value=-3, max_value=3)
fields = st.sampled_from([QQ, F5, F7])


def scalars(field):
    if field.characteristic:
        return st.integers(0, field.characteristic - 1)
    return st.builds(lambda a, b: field.convert(a, b), small_ints, st.integers(1, 3))


@st.composite
def matrices(draw, field, rows, cols, density=0.5):
    entries = []
    for i in range(rows):
        for j in range(cols):
            if draw(st.floats(0, 1)) < density:
                entries.append((i, j, draw(scalars(field))))
    return Mat.from_entries(field, (rows, cols), entries)


@st.composite
def linmaps(draw, field, dom, cod):
    return LinMap(BasedSpace.standard(dom, "x"), BasedSpace.standard(cod, "y"),
                  draw(matrices(field, cod, dom)))


def dense(M):
    return [[M.entry(i, j) for j in range(M.ncols)] for i in range(M.nrows)]


def bimodule_pairs():
    """Named (X, Y) pairs of R-bimodules used by the tensor-over properties."""
    from weakbialg import Bimodule
    from weakbialg.generators import diagonal_frobenius
    out = []
    R2 = diagonal_frobenius(2).base
    out.append(("k2-regular", Bimodule.regular(R2), Bimodule.regular(R2)))
    for key in [(2, "pair", None, "Q", False), (2, "pair", None, "F5", True),
                (1, "group", "Z2", "Q", False), (3, "discrete", None, "F7", False),
                (1, "group", "S3", "Q", True)]:
        _, B, _ = derived(*key)
        X = B.bimodule
        out.append((f"{key[1]}{key[0]}{key[2] or ''}-{key[3]}{'-dual' if key[4] else ''}", X, X))
    return out
