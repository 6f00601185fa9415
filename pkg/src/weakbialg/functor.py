"""Finite fragments of monoidal functors into vector spaces.

A fragment lists objects, the spaces G(c), the structure maps G_{a,b} and G_0,
and the images under G of the unitors and associators of the source category.
Coherence isomorphisms of the target are identities (flat coordinates), so
every axiom is a literal matrix equation.
"""

from dataclasses import dataclass, field as dc_field
from itertools import product

from .algebra import (
    Algebra, AlgMorphism, Bimodule, RightModule, check_algebra, check_bimodule,
    check_bimodule_map, check_morphism, module_hom_space, tensor_over,
)
from .bialgebroid import module_tensor, unit_module
from .errors import AxiomError, InputError, ShapeError
from .frobenius import SepFrobenius, check_sep_frobenius, frobenius_section
from .linalg import UNIT, BasedSpace, LinMap, Mat, SubSpace, kernel_rows, swap, tensor, tensor_maps
from .report import Report


@dataclass(frozen=True, eq=False)
class NaturalitySquare:
    """Images of f: a → a2 and g: b → b2, and of f⊛g: a⊛b → a2⊛b2."""

    source: tuple
    target: tuple
    Gf: LinMap
    Gg: LinMap
    Gfg: LinMap
    name: str = "f⊛g"


@dataclass(frozen=True, eq=False)
class MonoidalFunctorFragment:
    field: object
    unit: str
    spaces: dict
    products: dict
    G2: dict
    G0: LinMap
    lunit: dict = dc_field(default_factory=dict)
    runit: dict = dc_field(default_factory=dict)
    assoc: dict = dc_field(default_factory=dict)
    G2op: dict = None
    G0op: LinMap = None
    naturality: tuple = ()
    name: str = "G"

    def __post_init__(self):
        if self.unit not in self.spaces:
            raise InputError(f"unit object {self.unit!r} has no space", "unit")
        for (a, b), c in self.products.items():
            for o in (a, b, c):
                if o not in self.spaces:
                    raise InputError(f"product ({a}, {b}) mentions unknown object {o!r}", "products")
        for (a, b), m in self.G2.items():
            c = self.product(a, b)
            _shape(m, self.space(a).tensor(self.space(b)), self.space(c), f"G2[{a},{b}]")
        _shape(self.G0, UNIT, self.space(self.unit), "G0")
        e = self.unit
        for c, m in self.lunit.items():
            _shape(m, self.space(self.product(e, c)), self.space(c), f"lunit[{c}]")
        for c, m in self.runit.items():
            _shape(m, self.space(self.product(c, e)), self.space(c), f"runit[{c}]")
        for (a, b, c), m in self.assoc.items():
            left = self.product(self.product(a, b), c)
            right = self.product(a, self.product(b, c))
            _shape(m, self.space(left), self.space(right), f"assoc[{a},{b},{c}]")
        if self.G2op is not None:
            for (a, b), m in self.G2op.items():
                _shape(m, self.space(self.product(a, b)), self.space(a).tensor(self.space(b)),
                       f"G2op[{a},{b}]")
        if self.G0op is not None:
            _shape(self.G0op, self.space(e), UNIT, "G0op")

    @property
    def objects(self):
        return list(self.spaces)

    @property
    def has_op(self):
        return self.G2op is not None and self.G0op is not None

    def space(self, c):
        try:
            return self.spaces[c]
        except KeyError:
            raise InputError(f"unknown object {c!r}", "objects") from None

    def product(self, a, b):
        try:
            return self.products[(a, b)]
        except KeyError:
            raise InputError(f"product of {a!r} and {b!r} is not listed", "products") from None

    def has_product(self, a, b):
        return (a, b) in self.products

    def identity(self, c):
        return LinMap.identity(self.space(c), self.field)

    def _default(self, table, key, src, tgt, what):
        if key in table:
            return table[key]
        if src == tgt:
            return self.identity(src)
        raise InputError(f"{what} for {key} is missing", what)

    def lunit_of(self, c):
        return self._default(self.lunit, c, self.product(self.unit, c), c, "lunit")

    def runit_of(self, c):
        return self._default(self.runit, c, self.product(c, self.unit), c, "runit")

    def assoc_of(self, a, b, c):
        src = self.product(self.product(a, b), c)
        tgt = self.product(a, self.product(b, c))
        return self._default(self.assoc, (a, b, c), src, tgt, "assoc")

    def assoc_inverse(self, a, b, c):
        m = self.assoc_of(a, b, c)
        if not m.is_invertible():
            raise AxiomError(f"associator image at ({a}, {b}, {c}) is not invertible")
        return m.inverse()

    def g2(self, a, b):
        try:
            return self.G2[(a, b)]
        except KeyError:
            raise InputError(f"G2 for ({a}, {b}) is missing", "G2") from None

    def g2op(self, a, b):
        if self.G2op is None or (a, b) not in self.G2op:
            raise InputError(f"opmonoidal G2 for ({a}, {b}) is missing", "G2op")
        return self.G2op[(a, b)]

    def pairs(self):
        return [p for p in self.products if p in self.G2]

    def triples(self):
        """Triples whose both bracketings are available."""
        out = []
        for a, b, c in product(self.objects, repeat=3):
            if not (self.has_product(a, b) and self.has_product(b, c)):
                continue
            ab, bc = self.product(a, b), self.product(b, c)
            if not (self.has_product(ab, c) and self.has_product(a, bc)):
                continue
            if all(k in self.G2 for k in ((a, b), (b, c), (ab, c), (a, bc))):
                try:
                    self.assoc_of(a, b, c)
                except InputError:
                    continue
                out.append((a, b, c))
        return out


def _shape(m, dom, cod, what):
    if m.domain.dim != dom.dim or m.codomain.dim != cod.dim:
        raise InputError(f"{what} has shape {m.mat.shape}, expected ({cod.dim}, {dom.dim})", what)


def _same(rep, name, lhs, rhs):
    """Compare maps whose spaces may carry different labels but equal dimensions."""
    rep.equal(name, lhs.mat, rhs.mat)


def _op_ok(F, keys):
    return F.G2op is not None and all(k in F.G2op for k in keys)


def check_fragment(F, op=True):
    """Monoidal axioms on every available triple and unit square, the dual
    axioms when opmonoidal data is present, and the naturality squares."""
    rep = Report(f"monoidal functor fragment {F.name}", F.field)
    e = F.unit
    for a, b, c in F.triples():
        ab, bc = F.product(a, b), F.product(b, c)
        Ia, Ic = F.identity(a), F.identity(c)
        lhs = F.assoc_of(a, b, c) @ F.g2(ab, c) @ tensor(F.g2(a, b), Ic)
        rhs = F.g2(a, bc) @ tensor(Ia, F.g2(b, c))
        _same(rep, f"hexagon ({a}, {b}, {c})", lhs, rhs)
        if op and F.has_op and _op_ok(F, [(a, b), (ab, c), (b, c), (a, bc)]):
            lhs = tensor(F.g2op(a, b), Ic) @ F.g2op(ab, c)
            rhs = tensor(Ia, F.g2op(b, c)) @ F.g2op(a, bc) @ F.assoc_of(a, b, c)
            _same(rep, f"op hexagon ({a}, {b}, {c})", lhs, rhs)
    for c in F.objects:
        if (e, c) in F.G2:
            lhs = F.lunit_of(c) @ F.g2(e, c) @ tensor(F.G0, F.identity(c))
            _same(rep, f"left unit square ({c})", lhs, F.identity(c))
            if op and F.has_op and _op_ok(F, [(e, c)]):
                lhs = tensor(F.G0op, F.identity(c)) @ F.g2op(e, c)
                _same(rep, f"op left unit square ({c})", lhs, F.lunit_of(c))
        if (c, e) in F.G2:
            lhs = F.runit_of(c) @ F.g2(c, e) @ tensor(F.identity(c), F.G0)
            _same(rep, f"right unit square ({c})", lhs, F.identity(c))
            if op and F.has_op and _op_ok(F, [(c, e)]):
                lhs = tensor(F.identity(c), F.G0op) @ F.g2op(c, e)
                _same(rep, f"op right unit square ({c})", lhs, F.runit_of(c))
    for sq in F.naturality:
        a, b = sq.source
        a2, b2 = sq.target
        lhs = sq.Gfg @ F.g2(a, b)
        rhs = F.g2(a2, b2) @ tensor(sq.Gf, sq.Gg)
        _same(rep, f"naturality of G2 ({sq.name})", lhs, rhs)
        if op and F.has_op and _op_ok(F, [(a, b), (a2, b2)]):
            lhs = tensor(sq.Gf, sq.Gg) @ F.g2op(a, b)
            rhs = F.g2op(a2, b2) @ sq.Gfg
            _same(rep, f"naturality of G2op ({sq.name})", lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# canonical factorization through R-bimodules


def canonical_base(F, check=True):
    """R = G(e) with μ = G(l_e)∘G_{e,e} and unit G_0."""
    e = F.unit
    mul = F.lunit_of(e) @ F.g2(e, e)
    V = F.space(e)
    R = Algebra(V, LinMap(V.tensor(V), V, mul.mat), F.G0.mat, "R")
    if check:
        rep = check_algebra(R)
        if not rep.passed:
            raise AxiomError("G(e) is not an algebra; the fragment is inconsistent", rep)
    return R


def canonical_bimodule(F, c, R=None, check=True):
    """G(c) with λ = G(l_c)∘G_{e,c} and ρ = G(r_c)∘G_{c,e}."""
    R = R or canonical_base(F)
    e = F.unit
    X = F.space(c)
    lact = LinMap(R.space.tensor(X), X, (F.lunit_of(c) @ F.g2(e, c)).mat)
    ract = LinMap(X.tensor(R.space), X, (F.runit_of(c) @ F.g2(c, e)).mat)
    bim = Bimodule(R, R, X, lact, ract, str(c))
    if check:
        rep = check_bimodule(bim)
        if not rep.passed:
            raise AxiomError(f"G({c}) is not an R-bimodule", rep)
    return bim


@dataclass(frozen=True, eq=False)
class Strength:
    pair: tuple
    tensor: object
    map: LinMap
    surjective: bool
    kernel_is_relations: bool

    @property
    def strong(self):
        return self.surjective and self.kernel_is_relations

    @property
    def verdict(self):
        return "essentially strong" if self.strong else "not essentially strong"


def induced_strength(F, a, b, R=None, bimodules=None):
    """The unique U_{a,b}: Ga ⊗_R Gb → G(a⊛b) with U_{a,b}∘π = G_{a,b}."""
    R = R or canonical_base(F)
    bimodules = bimodules or {}
    X = bimodules.get(a) or canonical_bimodule(F, a, R)
    Y = bimodules.get(b) or canonical_bimodule(F, b, R)
    T = tensor_over(X, Y)
    G = F.g2(a, b)
    h = LinMap(T.flat, F.space(F.product(a, b)), G.mat)
    try:
        U = T.descend(h, f"G2[{a},{b}]")
    except AxiomError:
        raise AxiomError(f"G2[{a},{b}] does not coequalize the two R-actions") from None
    n = U.codomain.dim
    surj = G.rank() == n
    kernel_ok = U.rank() == T.dim
    return Strength((a, b), T, U, surj, kernel_ok)


@dataclass(frozen=True, eq=False)
class Factorization:
    fragment: MonoidalFunctorFragment
    base: Algebra
    bimodules: dict
    strengths: dict
    report: Report

    @property
    def essentially_strong(self):
        return all(s.strong for s in self.strengths.values())


def factorize(F, check=True):
    """G = Γ∘U: base algebra, the lift of every object to R-bimodules, and the
    induced maps U_{a,b}, with the identity G_{a,b} = U_{a,b}∘π verified."""
    rep = Report("canonical factorization", F.field)
    if check:
        rep.extend(check_fragment(F, op=False), "fragment: ")
    R = canonical_base(F)
    bims = {}
    for c in F.objects:
        if (F.unit, c) in F.G2 and (c, F.unit) in F.G2:
            b = canonical_bimodule(F, c, R, check=False)
            rep.extend(check_bimodule(b), f"U({c}): ")
            bims[c] = b
    strengths = {}
    for a, b in F.pairs():
        if a in bims and b in bims and F.product(a, b) in bims:
            s = induced_strength(F, a, b, R, bims)
            strengths[(a, b)] = s
            rep.equal(f"G2[{a},{b}] = U∘π", F.g2(a, b).mat, s.map.mat @ s.tensor.projection.mat)
            rep.extend(check_bimodule_map(s.map, s.tensor.bimodule, bims[F.product(a, b)]),
                       f"U[{a},{b}] ")
    return Factorization(F, R, bims, strengths, rep)


# ---------------------------------------------------------------------------
# universal property of the base


def ground_algebra(field):
    """The one-dimensional algebra k."""
    return Algebra(UNIT, LinMap.identity(UNIT, field), Mat.eye(field, 1), "k")


@dataclass(frozen=True, eq=False)
class FactorizationWitness:
    """A lift V of G into S-bimodules: S-bimodule structures on each G(c),
    the unit V_0: S → G(e) and optionally V_{a,b}: Va ⊗_S Vb → G(a⊛b)."""

    S: Algebra
    bimodules: dict
    V0: LinMap
    V2: dict = None


def check_witness(F, W):
    rep = Report("factorization witness", F.field)
    S = W.S
    for c, X in W.bimodules.items():
        if X.space.dim != F.space(c).dim:
            raise ShapeError(f"V({c}) is not carried by G({c})")
        rep.extend(check_bimodule(X), f"V({c}): ")
    e = F.unit
    if e in W.bimodules:
        rep.extend(check_bimodule_map(W.V0, Bimodule.regular(S), W.bimodules[e]), "V0 ")
    for a, b in F.pairs():
        c = F.product(a, b)
        if not all(o in W.bimodules for o in (a, b, c)):
            continue
        T = tensor_over(W.bimodules[a], W.bimodules[b])
        h = LinMap(T.flat, F.space(c), F.g2(a, b).mat)
        try:
            V2 = T.descend(h, "V2")
        except AxiomError:
            rep.add(f"G2[{a},{b}] is S-balanced", False)
            continue
        if W.V2 and (a, b) in W.V2:
            rep.equal(f"V2[{a},{b}] underlies G2", W.V2[(a, b)].mat, V2.mat)
        rep.extend(check_bimodule_map(V2, T.bimodule, W.bimodules[c]), f"V2[{a},{b}] ")
    return rep


def universal_sigma(F, W, R=None, check=True):
    """σ: S → R forced to be the underlying map of V_0, verified to be an
    algebra morphism with λ_U∘(σ⊗id) = λ_V and ρ_U∘(id⊗σ) = ρ_V."""
    R = R or canonical_base(F)
    rep = Report("universal sigma", F.field)
    if check:
        rep.extend(check_witness(F, W), "witness: ")
    sigma = AlgMorphism(W.S, R, LinMap(W.S.space, R.space, W.V0.mat))
    rep.extend(check_morphism(sigma, "sigma"), "sigma: ")
    for c, V in W.bimodules.items():
        U = canonical_bimodule(F, c, R, check=False)
        I = LinMap.identity(U.space, F.field)
        rep.equal(f"left action of {c} through sigma", (U.lact @ tensor(sigma.map, I)).mat, V.lact.mat)
        rep.equal(f"right action of {c} through sigma", (U.ract @ tensor(I, sigma.map)).mat, V.ract.mat)
    if check and not rep.passed:
        names = ", ".join(c.name for c in rep.failures())
        raise AxiomError(f"universal sigma fails: {names}", rep)
    return sigma, rep


def identity_witness(F, R=None):
    R = R or canonical_base(F)
    bims = {c: canonical_bimodule(F, c, R, check=False) for c in _liftable(F)}
    return FactorizationWitness(R, bims, R.identity)


def scalar_witness(F):
    """S = k acting by scalars on every G(c); V_0 = G_0."""
    k = ground_algebra(F.field)
    bims = {}
    for c in _liftable(F):
        X = F.space(c)
        I = LinMap.identity(X, F.field)
        bims[c] = Bimodule(k, k, X, I, I, str(c))
    return FactorizationWitness(k, bims, F.G0)


def twisted_witness(F, automorphism, R=None):
    """V = U with both actions pulled back along an automorphism φ of R, V_0 = φ."""
    R = R or canonical_base(F)
    phi = automorphism.map if isinstance(automorphism, AlgMorphism) else automorphism
    bims = {}
    for c in _liftable(F):
        U = canonical_bimodule(F, c, R, check=False)
        I = LinMap.identity(U.space, F.field)
        bims[c] = Bimodule(R, R, U.space, U.lact @ tensor(phi, I), U.ract @ tensor(I, phi), U.name)
    return FactorizationWitness(R, bims, phi)


def _liftable(F):
    e = F.unit
    return [c for c in F.objects if (e, c) in F.G2 and (c, e) in F.G2]


# ---------------------------------------------------------------------------
# separable Frobenius structures on functors


def split_coequalizer_maps(F, X, Y):
    """∂₀, ∂₁: GX⊗GE⊗GY → GX⊗GY, γ = G_{X,Y}, σ = G^{X,Y} and
    τ = (GX⊗G^{E,Y})∘(GX⊗G(l_Y)⁻¹)."""
    e = F.unit
    IX, IY = F.identity(X), F.identity(Y)
    d0 = tensor(IX, F.lunit_of(Y) @ F.g2(e, Y))
    d1 = tensor(F.runit_of(X) @ F.g2(X, e), IY)
    gamma = F.g2(X, Y)
    sigma = F.g2op(X, Y)
    lu = F.lunit_of(Y)
    if not lu.is_invertible():
        raise AxiomError(f"G(l_{Y}) is not invertible")
    tau = tensor(IX, F.g2op(e, Y)) @ tensor(IX, lu.inverse())
    return {"d0": d0, "d1": d1, "gamma": gamma, "sigma": sigma, "tau": tau}


def split_coequalizer_check(F, X, Y):
    m = split_coequalizer_maps(F, X, Y)
    rep = Report(f"split coequalizer ({X}, {Y})", F.field)
    g, s, t = m["gamma"], m["sigma"], m["tau"]
    rep.equal("gamma d0 = gamma d1", (g @ m["d0"]).mat, (g @ m["d1"]).mat)
    rep.equal("gamma sigma = 1", (g @ s).mat, Mat.eye(F.field, g.codomain.dim))
    rep.equal("d0 tau = 1", (m["d0"] @ t).mat, Mat.eye(F.field, t.domain.dim))
    rep.equal("d1 tau = sigma gamma", (m["d1"] @ t).mat, (s @ g).mat)
    return rep


def derived_base_frobenius(F):
    """(R, ψ, e) with σ = G^{E,E}∘G(l_E)⁻¹, ψ = G⁰ and e = σ(1)."""
    e = F.unit
    R = canonical_base(F)
    lu = F.lunit_of(e)
    if not lu.is_invertible():
        raise AxiomError("G(l_E) is not invertible")
    sig = F.g2op(e, e) @ lu.inverse()
    sig = LinMap(R.space, R.space.tensor(R.space), sig.mat)
    psi = LinMap(R.space, UNIT, F.G0op.mat)
    return SepFrobenius(R, psi, sig.mat @ R.unit), sig


def functor_frobenius_check(F, X, Y, Z):
    """Monoidal and opmonoidal axioms, both Frobenius conditions, separability,
    the split coequalizer identities for (X, Y), and the induced separable
    Frobenius structure on G(E)."""
    if not F.has_op:
        raise InputError("fragment has no opmonoidal data", "G2op")
    rep = Report(f"separable Frobenius structure on {F.name}", F.field)
    rep.extend(check_fragment(F), "")
    XY, YZ = F.product(X, Y), F.product(Y, Z)
    IX, IZ = F.identity(X), F.identity(Z)
    lhs = tensor(F.g2(X, Y), IZ) @ tensor(IX, F.g2op(Y, Z))
    rhs = F.g2op(XY, Z) @ F.assoc_inverse(X, Y, Z) @ F.g2(X, YZ)
    _same(rep, f"frob1 ({X}, {Y}, {Z})", lhs, rhs)
    lhs = tensor(IX, F.g2(Y, Z)) @ tensor(F.g2op(X, Y), IZ)
    rhs = F.g2op(X, YZ) @ F.assoc_of(X, Y, Z) @ F.g2(XY, Z)
    _same(rep, f"frob2 ({X}, {Y}, {Z})", lhs, rhs)
    for a, b in dict.fromkeys([(X, Y), (Y, Z), (X, YZ), (XY, Z), (F.unit, Y)]):
        c = F.product(a, b)
        _same(rep, f"separability ({a}, {b})", F.g2(a, b) @ F.g2op(a, b), F.identity(c))
    rep.extend(split_coequalizer_check(F, X, Y), f"split ({X}, {Y}): ")
    try:
        sf, sig = derived_base_frobenius(F)
    except AxiomError as exc:
        rep.add("derived base Frobenius structure", False, detail=str(exc))
        return rep
    rep.extend(check_sep_frobenius(sf), "derived base: ")
    rep.equal("derived sigma is (r⊗1)·sigma(1)", sig.mat, sf.sigma.mat)
    rep.data["base_frobenius"] = sf
    return rep


# ---------------------------------------------------------------------------
# builders


def _pname(a, b):
    return f"({a}*{b})"


def forgetful_fragment(B, modules, sf=None, triples=True, naturality=True):
    """Long forgetful functor of a right bialgebroid on a finite set of modules.

    ``modules`` maps names to right A-modules.  The unit module is added as
    ``E``; pairwise products and both bracketings of every triple of listed
    modules (including E) are formed.  With a separable Frobenius structure
    on the base, the opmonoidal data G^{X,Y} (the Frobenius section) and
    G⁰ = ψ are attached.
    """
    f = B.field
    E = unit_module(B)
    mods = {"E": E}
    for k, X in dict(modules).items():
        if k == "E":
            raise InputError("the name E is reserved for the unit module", "modules")
        mods[str(k)] = X
    basic = list(mods)
    prods = {}

    def mul(a, b):
        if (a, b) not in prods:
            mp = module_tensor(B, mods[a], mods[b], _pname(a, b))
            name = _pname(a, b)
            mods[name] = mp.module
            prods[(a, b)] = (name, mp)
        return prods[(a, b)][0]

    for a, b in product(basic, repeat=2):
        mul(a, b)
    trip = list(product(basic, repeat=3)) if triples else []
    for a, b, c in trip:
        mul(mul(a, b), c)
        mul(a, mul(b, c))
    spaces = {k: X.space for k, X in mods.items()}
    G2 = {k: v[1].tensor.projection for k, v in prods.items()}
    lunit, runit = {}, {}
    for (a, b), (name, mp) in prods.items():
        T = mp.tensor
        if a == "E":
            Xb = B.restrict(mods[b])
            lunit[b] = T.descend(LinMap(T.flat, Xb.space, Xb.lact.mat), f"l_{b}")
        if b == "E":
            Xa = B.restrict(mods[a])
            runit[a] = T.descend(LinMap(T.flat, Xa.space, Xa.ract.mat), f"r_{a}")
    assoc = {}
    for a, b, c in trip:
        assoc[(a, b, c)] = _assoc_map(prods, a, b, c, f)
    G2op = G0op = None
    if sf is not None:
        if not sf.base.same_as(B.R):
            raise ShapeError("Frobenius structure is not on the bialgebroid base")
        G2op = {}
        for (a, b), (name, mp) in prods.items():
            T = mp.tensor
            G2op[(a, b)] = frobenius_section(T.factors[0], T.factors[1], sf, T)
        G0op = sf.psi
    squares = _naturality_squares(B, mods, basic, prods) if naturality else ()
    return MonoidalFunctorFragment(
        f, "E", spaces, {k: v[0] for k, v in prods.items()}, G2, B.R.unit_map,
        lunit, runit, assoc, G2op, G0op, tuple(squares), "forgetful")


def _assoc_map(prods, a, b, c, f):
    ab, pab = prods[(a, b)]
    bc, pbc = prods[(b, c)]
    _, pl = prods[(ab, c)]
    _, pr = prods[(a, bc)]
    Pab, Pbc = pab.tensor, pbc.tensor
    L, Rt = pl.tensor, pr.tensor
    Ia = LinMap.identity(Pab.factors[0].space, f)
    Ic = LinMap.identity(Pbc.factors[1].space, f)
    q = L.projection @ tensor(Pab.projection, Ic)
    sec = tensor(Pab.section, Ic) @ L.section
    h = Rt.projection @ tensor(Ia, Pbc.projection)
    g = h @ sec
    if (g @ q).mat != h.mat:
        raise AxiomError(f"associator ({a}, {b}, {c}) is not well defined")
    return g


def _naturality_squares(B, mods, basic, prods, per_module=2):
    f = B.field
    endos = {}
    for name in basic:
        X = mods[name]
        H = module_hom_space(X, X)
        maps = [m for m in H.maps() if m != LinMap.identity(X.space, f)][:per_module]
        endos[name] = maps
    squares = []
    for (a, b), (name, mp) in prods.items():
        if a not in basic or b not in basic:
            continue
        T = mp.tensor
        Ia, Ib = LinMap.identity(mods[a].space, f), LinMap.identity(mods[b].space, f)
        for i, g in enumerate(endos[a]):
            squares.append(_square(T, a, b, g, Ib, f"f{i}({a})*{b}"))
        for i, g in enumerate(endos[b]):
            squares.append(_square(T, a, b, Ia, g, f"{a}*f{i}({b})"))
    return squares


def _square(T, a, b, fa, fb, name):
    Gfg = T.descend(T.projection @ tensor(fa, fb), name)
    return NaturalitySquare((a, b), (a, b), fa, fb, Gfg, name)


def trivial_module(W, name="k"):
    """k with a acting by ε(a)."""
    A = W.algebra
    return RightModule(A, UNIT, W.counit, name)


def diagonal_module(W, X, Y, name=None):
    """X ⊗ Y with (x⊗y)·a = x·a₍₁₎ ⊗ y·a₍₂₎."""
    A = W.algebra
    f = A.field
    IX, IY = LinMap.identity(X.space, f), LinMap.identity(Y.space, f)
    act = tensor(X.act, Y.act) @ tensor_maps(IX, swap(Y.space, A.space, f), A.identity) \
        @ tensor_maps(IX, IY, W.comul)
    return RightModule(A, X.space.tensor(Y.space), act, name or f"{X.name}⊗{Y.name}")


def _invariants(W, X):
    """Basis of {x : x·a = x ε(a) for all a} as a subspace of X."""
    A = W.algebra
    f = A.field
    rows = []
    I = Mat.eye(f, X.dim)
    for i in range(A.dim):
        a = A.basis(i)
        M = X.right_mult(a).mat - I.scale(W.counit.mat.entry(0, i))
        rows.append(M)
    stacked = rows[0].vstack(*rows[1:])
    return SubSpace(X.space, f, kernel_rows(stacked))


def invariants_fragment(W, modules, name="invariants"):
    """G(X) = X^A for an ordinary bialgebra (Δ(1) = 1⊗1, ε(1) = 1) on the given
    modules, their pairwise diagonal products and the trivial module k."""
    A = W.algebra
    f = A.field
    one = A.unit
    if W.comul(one) != one.kron(one) or W.counit(one) != Mat.eye(f, 1):
        raise InputError("invariants fragments need an ordinary bialgebra", "kind")
    k = trivial_module(W)
    mods = {"k": k}
    for nm, X in dict(modules).items():
        if nm == "k":
            raise InputError("the name k is reserved for the trivial module", "modules")
        mods[str(nm)] = X
    basic = list(mods)
    products = {}
    for a, b in product(basic, repeat=2):
        if a == "k":
            products[(a, b)] = b
        elif b == "k":
            products[(a, b)] = a
        else:
            nm = _pname(a, b)
            mods[nm] = diagonal_module(W, mods[a], mods[b], nm)
            products[(a, b)] = nm
    for nm in list(mods):
        if nm not in basic:
            products[("k", nm)] = nm
            products[(nm, "k")] = nm
    inv = {nm: _invariants(W, X) for nm, X in mods.items()}
    spaces = {nm: BasedSpace(tuple(f"{nm}^A[{i}]" for i in range(inv[nm].dim))) for nm in mods}
    incl = {nm: LinMap(spaces[nm], mods[nm].space, inv[nm].generators) for nm in mods}
    G2 = {}
    for (a, b), c in products.items():
        h = tensor(incl[a], incl[b])
        cols = []
        for j in range(h.domain.dim):
            v = inv[c].coordinates(h.col(j))
            if v is None:
                raise AxiomError(f"product of invariants of {a}, {b} is not invariant")
            cols.append(v)
        G2[(a, b)] = LinMap.from_columns(spaces[a].tensor(spaces[b]), spaces[c], cols, f)
    G0 = LinMap(UNIT, spaces["k"], inv["k"].coordinates(Mat.eye(f, 1)))
    return MonoidalFunctorFragment(f, "k", spaces, products, G2, G0, name=name)


__all__ = [
    "NaturalitySquare", "MonoidalFunctorFragment", "check_fragment", "canonical_base",
    "canonical_bimodule", "Strength", "induced_strength", "Factorization", "factorize",
    "ground_algebra", "FactorizationWitness", "check_witness", "universal_sigma",
    "identity_witness", "scalar_witness", "twisted_witness", "split_coequalizer_maps",
    "split_coequalizer_check", "derived_base_frobenius", "functor_frobenius_check",
    "forgetful_fragment", "trivial_module", "diagonal_module", "invariants_fragment",
]
