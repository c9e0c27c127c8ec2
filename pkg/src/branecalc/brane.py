"""Shriek representatives, sections, and cochain models of the S^k-brane
product and coproduct for pure Sullivan models.

Coproduct dual (M(S^k) -> M(T)):

    M(S^k) --incl--> M(U) ~= M ⊗_{M(S^{k-1})} M(T)
           <--ε̃⊗id-- M(D^k) ⊗_{M(S^{k-1})} M(T) --γ⊗id--> M(T)

Product dual (M(T) -> M(S^k)), with P = M(I) ⊗_M M(S^k):

    M(T) --comp--> M(U) ~= M ⊗_{M⊗M} P <--ε̄⊗id-- M(I) ⊗_{M⊗M} P
         --η⊗id--> P --ε̄⊗id--> M(S^k)

The quasi-isomorphisms pointing backwards are inverted on the cochain level
by the sections φ and ψ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .algebra import (
    AlgebraError,
    AlgebraMorphism,
    Derivation,
    Element,
    FreeGCA,
    ModKey,
    ModuleMorphism,
    _mono_mul,
    by_name,
    identity,
)
from .cohomology import (
    cocycle_basis,
    hom_cocycle_defect,
    is_coboundary,
    lift_through_surjection,
)
from .linalg import Echelon
from .mapping_spaces import (
    MappingSpaceModel,
    build_collapse_model,
    build_disk_model,
    build_path_model,
    build_torus_model,
)
from .sullivan import (
    SullivanModel,
    check_k_connected,
    check_pure,
    is_chain_map,
    quotient_by_generators,
    rename_model,
    submodel,
    tensor_amalgamated,
    transport,
)


class BraneError(AlgebraError):
    pass


class PreconditionError(BraneError):
    """The input model or parameters are outside the supported range."""


def _require_pure(m: SullivanModel) -> Tuple[List[str], List[str]]:
    ok, bad = check_pure(m)
    if not ok:
        raise PreconditionError(f"model is not pure (generator {bad!r})")
    xs = [g.name for g in m.generators if not g.is_odd]
    ys = [g.name for g in m.generators if g.is_odd]
    return xs, ys


def _require_even_k(m: SullivanModel, k: int):
    if k < 2 or k % 2:
        raise PreconditionError(f"out of scope: γ is constructed for even k >= 2 only (got k={k})")
    if not check_k_connected(m, k):
        raise PreconditionError(f"model must be {k}-connected for k={k}")


def gorenstein_shifts(m: SullivanModel, k: int) -> Tuple[int, int]:
    """``(m̄, m)``: degrees of γ and η for a pure model."""
    xs, ys = _require_pure(m)
    deg = {g.name: g.degree for g in m.generators}
    m_bar = sum(deg[x] - k + 1 for x in xs) - sum(deg[y] - k for y in ys)
    m_dim = sum(deg[y] for y in ys) - sum(deg[x] - 1 for x in xs)
    return m_bar, m_dim


@dataclass
class ShriekMap:
    map: ModuleMorphism
    source: SullivanModel
    target: SullivanModel
    normalization: Fraction = Fraction(1)
    valid_through: Optional[int] = None  # module degree bound for stored images

    @property
    def degree(self) -> int:
        return self.map.degree

    def __call__(self, a: Element) -> Element:
        return self.map(a)

    def cocycle_defect(self, n_max: int):
        if self.valid_through is not None:
            n_max = min(n_max, self.valid_through)
        return hom_cocycle_defect(self.map, self.source, self.target, n_max)


def _product(A: FreeGCA, names) -> Element:
    out = A.one()
    for n in names:
        out = out * A.gen(n)
    return out


def build_shriek_constant(m: SullivanModel, k: int, normalization=1, n_check: Optional[int] = None,
                          disk: Optional[MappingSpaceModel] = None) -> ShriekMap:
    """γ: M(D^k) -> M(S^{k-1}), linear over M(S^{k-1}):
    γ(s^k y_1 ⋯ s^k y_q) = c · s^{k-1}x_1 ⋯ s^{k-1}x_p, zero on every other
    module-basis monomial."""
    xs, ys = _require_pure(m)
    _require_even_k(m, k)
    c = Fraction(normalization)
    if not c:
        raise PreconditionError("normalization must be nonzero")
    D = disk or build_disk_model(m, k)
    S = D.parts["sphere"].model
    low, top = D.parts["low"], D.parts["top"]
    key = tuple((top[y], 1) for y in ys)
    value = c * _product(S.algebra, [low[x] for x in xs])
    deg = sum(S.algebra.generator(low[x]).degree for x in xs) - sum(D.algebra.generator(top[y]).degree for y in ys)
    gamma = ModuleMorphism(D.algebra, S.algebra, S.algebra.names, {key: value}, deg,
                           default_zero=True, name="gamma")
    shriek = ShriekMap(gamma, D.model, S, c)
    n_check = m.default_truncation() if n_check is None else n_check
    bad = shriek.cocycle_defect(n_check)
    if bad is not None:
        raise BraneError(f"D(γ) != 0 on {bad[0]}: {bad[1]}")
    return shriek


def build_shriek_diagonal(m: SullivanModel, n_max: Optional[int] = None,
                          path: Optional[MappingSpaceModel] = None) -> ShriekMap:
    """η: M(I) -> ΛV⊗ΛV, linear over ΛV⊗ΛV, with
    η(s x_1 ⋯ s x_p) = (1⊗y_1 - y_1⊗1) ⋯ (1⊗y_q - y_q⊗1).

    The remaining values, on module monomials of degree <= n_max, solve
    D(η) = 0 (particular solution with free coordinates zero).
    """
    xs, ys = _require_pure(m)
    n_max = m.default_truncation() if n_max is None else n_max
    P = path or build_path_model(m)
    I = P.model
    left, right, susp = P.parts["left"], P.parts["right"], P.parts["susp"]
    base = [left[g.name] for g in m.generators] + [right[g.name] for g in m.generators]
    tgt = submodel(I, base, name="ΛV⊗ΛV")
    T = tgt.algebra
    top_key = tuple((susp[x], 1) for x in xs)
    top_value = T.one()
    for y in ys:
        top_value = top_value * (T.gen(right[y]) - T.gen(left[y]))
    deg = (sum(m.algebra.generator(y).degree for y in ys)
           - sum(m.algebra.generator(x).degree - 1 for x in xs))
    probe = ModuleMorphism(I.algebra, T, base, {}, deg, default_zero=True)
    n_max = max(n_max, probe.key_degree(top_key))

    keys = [key for n in range(n_max + 1) for key in probe.module_basis(n)]
    var_index: Dict[Tuple[ModKey, tuple], int] = {}
    unknowns: Dict[ModKey, list] = {}
    for key in keys:
        if key == top_key:
            continue
        tb = T.basis(probe.key_degree(key) + deg)
        unknowns[key] = tb
        for u in tb:
            var_index[(key, u)] = len(var_index)

    eta_sign = -1 if deg % 2 else 1
    ech = Echelon()
    for key in keys:
        rows: Dict[tuple, Dict[int, Fraction]] = {}
        const: Dict[tuple, Fraction] = {}

        def add_const(elem_terms, factor):
            for mono, c in elem_terms:
                const[mono] = const.get(mono, 0) + factor * c

        def add_var(var, mono, c):
            row = rows.setdefault(mono, {})
            row[var] = row.get(var, 0) + c

        # d(η(n))
        if key == top_key:
            add_const(tgt.d(top_value).terms.items(), 1)
        else:
            for u in unknowns[key]:
                for mono, c in tgt.d(Element(T, {u: 1})).terms.items():
                    add_var(var_index[(key, u)], mono, c)
        # -(-1)^{|η|} η(d n)
        dn = I.d(probe.key_element(key))
        for mono, c in dn.terms.items():
            s, b, k2 = probe._split(mono)
            bdeg = I.algebra.mono_degree(b)
            s2, bt = probe._embed_base(b)
            factor = -eta_sign * c * s * s2 * (-1 if (deg * bdeg) & 1 else 1)
            if k2 == top_key:
                for mm, cc in top_value.terms.items():
                    r = _mono_mul(bt, mm, T.odd)
                    if r:
                        const[r[1]] = const.get(r[1], 0) + factor * r[0] * cc
                continue
            if k2 not in unknowns:
                raise BraneError(f"η completion needs module monomial {k2} beyond truncation {n_max}")
            for u in unknowns[k2]:
                r = _mono_mul(bt, u, T.odd)
                if r:
                    add_var(var_index[(k2, u)], r[1], factor * r[0])
        for mono in list(rows) + [mm for mm in const if mm not in rows]:
            if not ech.add(rows.get(mono, {}), -const.get(mono, 0)):
                raise BraneError(f"η completion infeasible at module degree {probe.key_degree(key)}")

    x = ech.particular_solution()
    images = {top_key: top_value}
    for key, tb in unknowns.items():
        images[key] = Element(T, {u: x.get(var_index[(key, u)], 0) for u in tb})
    eta = ModuleMorphism(I.algebra, T, base, images, deg, default_zero=False, name="eta")
    shriek = ShriekMap(eta, I, tgt, Fraction(1), valid_through=n_max)
    bad = shriek.cocycle_defect(n_max)
    if bad is not None:
        raise BraneError(f"D(η) != 0 on {bad[0]}: {bad[1]}")
    return shriek


# --- pipelines ------------------------------------------------------------------

def check_section(section: AlgebraMorphism, p: AlgebraMorphism, source: SullivanModel,
                  total: SullivanModel) -> Optional[str]:
    """``None`` if ``p∘section = id`` and ``section`` is a chain map, else a message."""
    for n in source.algebra.names:
        if p(section.image(n)) != source.gen(n):
            return f"{section.name}: p∘section differs from id on {n!r}"
    bad = is_chain_map(section, source, total)
    if bad is not None:
        return f"{section.name}: not a chain map on {bad!r}"
    return None


class CoproductSetup:
    """All models and maps of the coproduct pipeline for (m, k)."""

    def __init__(self, m: SullivanModel, k: int):
        self.xs, self.ys = _require_pure(m)
        _require_even_k(m, k)
        self.base, self.k = m, k
        self.torus = build_torus_model(m, k)
        self.collapse = build_collapse_model(m, k, torus=self.torus)
        self.disk = build_disk_model(m, k)
        self.sphere_k = self.collapse.parts["sphere_k"]
        self.sphere_low = self.disk.parts["sphere"]
        T, D, S = self.torus.model, self.disk.model, self.sphere_low.model
        self.E, self.incl_disk, self.incl_torus = tensor_amalgamated(
            D, T, S.algebra, name="M(D^k)⊗_{M(S^{k-1})}M(T)")
        self.Q = self.collapse.parts["quotient"]
        top, low = self.disk.parts["top"], self.disk.parts["low"]
        kill = {low[g.name]: 0 for g in m.generators}
        kill.update({top[g.name]: 0 for g in m.generators})
        self.p = by_name(self.E.algebra, self.Q.algebra, kill, name="epsilon_tilde⊗id")

    def explicit_phi(self) -> AlgebraMorphism:
        """φ(ss^{k-1}y) = ss^{k-1}y + (-1)^k s(σ(dy)), identity-like elsewhere."""
        E = self.E.algebra
        m, k = self.base, self.k
        low, top = self.disk.parts["low"], self.disk.parts["top"]
        loop = self.torus.parts["loop"]
        s_images = {n: E.zero() for n in E.names}
        sigma_images = {n: E.zero() for n in E.names}
        for g in m.generators:
            s_images[g.name] = E.gen(loop[g.name])
            s_images[low[g.name]] = E.gen(loop[low[g.name]])
            sigma_images[g.name] = E.gen(top[g.name])
        s = Derivation(E, -1, s_images)
        sigma = Derivation(E, -k, sigma_images)
        images = {n: E.gen(n) for n in self.Q.algebra.names}
        sign = -1 if k % 2 else 1
        for y in self.ys:
            dy = transport(m.dgen(y), E)
            images[loop[low[y]]] = E.gen(loop[low[y]]) + sign * s(sigma(dy))
        return AlgebraMorphism(self.Q.algebra, E, images, name="phi")

    def solver_phi(self) -> AlgebraMorphism:
        return lift_through_surjection(self.p, identity(self.Q.algebra), self.E, self.Q, name="phi")


def _fresh(name: str, taken) -> str:
    while name in taken:
        name += "'"
    return name


class ProductSetup:
    """All models and maps of the product pipeline for (m, k)."""

    def __init__(self, m: SullivanModel, k: int, collapse: Optional[MappingSpaceModel] = None):
        self.xs, self.ys = _require_pure(m)
        _require_even_k(m, k)
        self.base, self.k = m, k
        self.collapse = collapse or build_collapse_model(m, k)
        self.torus = self.collapse.parts["torus"]
        self.sphere_k = self.collapse.parts["sphere_k"]
        self.path = build_path_model(m)
        left, right, susp = (self.path.parts[n] for n in ("left", "right", "susp"))
        V = [g.name for g in m.generators]
        # P = M(I) ⊗_M M(S^k), along v ↦ 1⊗v
        I_r, self.I_to_Pside = rename_model(self.path.model, {right[v]: v for v in V})
        self.P, _, _ = tensor_amalgamated(I_r, self.sphere_k.model, m.algebra, name="M(I)⊗_M M(S^k)")
        # M ⊗_{M⊗M} P: identify v⊗1 with 1⊗v
        self.Qp, self.Qp_proj = quotient_by_generators(self.P, [left[v] for v in V],
                                                       {left[v]: v for v in V}, name="M⊗_{M⊗M}P")
        self.u_to_qp = by_name(self.collapse.algebra, self.Qp.algebra, name="U->M⊗_{M⊗M}P")
        # R = M(I) ⊗_{M⊗M} P, left suspensions primed
        self.prime = {}
        taken = set(self.P.algebra.names)
        for v in V:
            self.prime[susp[v]] = _fresh(susp[v] + "'", taken)
            taken.add(self.prime[susp[v]])
        I_l, self.I_to_R = rename_model(self.path.model, {**{right[v]: v for v in V}, **self.prime})
        base = FreeGCA([self.P.algebra.generator(left[v]) for v in V]
                       + [self.P.algebra.generator(v) for v in V])
        self.R, _, _ = tensor_amalgamated(I_l, self.P, base, name="M(I)⊗_{M⊗M}P")
        self.p = by_name(self.R.algebra, self.Qp.algebra,
                         {**{left[v]: v for v in V}, **{self.prime[susp[v]]: 0 for v in V}},
                         name="epsilon_bar⊗id")
        self.final = by_name(self.P.algebra, self.sphere_k.algebra,
                             {**{left[v]: v for v in V}, **{susp[v]: 0 for v in V}},
                             name="epsilon_bar⊗id (P)")

    def explicit_psi(self) -> AlgebraMorphism:
        """ψ(v) = v⊗1, ψ(sv) = sv - sv', ψ(s^k v) = s^k v; valid when d = 0."""
        if any(self.base.dgen(n) for n in self.base.algebra.names):
            raise PreconditionError("explicit ψ applies only to models with zero differential")
        R = self.R.algebra
        left, susp = self.path.parts["left"], self.path.parts["susp"]
        images = {n: R.gen(n) for n in self.Qp.algebra.names}
        for g in self.base.generators:
            images[g.name] = R.gen(left[g.name])
            images[susp[g.name]] = R.gen(susp[g.name]) - R.gen(self.prime[susp[g.name]])
        return AlgebraMorphism(self.Qp.algebra, R, images, name="psi")

    def solver_psi(self) -> AlgebraMorphism:
        return lift_through_surjection(self.p, identity(self.Qp.algebra), self.R, self.Qp, name="psi")

    def eta_tensor_id(self, eta: ShriekMap) -> ModuleMorphism:
        """η⊗id: R -> P, linear over P."""
        R, P = self.R.algebra, self.P.algebra
        right = self.path.parts["right"]
        to_P = by_name(eta.target.algebra, P, {right[g.name]: g.name for g in self.base.generators})
        images = {}
        for key, val in eta.map.images.items():
            new_key = tuple((self.prime[n], e) for n, e in key)
            images[new_key] = to_P(val)
        return ModuleMorphism(R, P, P.names, images, eta.degree, default_zero=False, name="eta⊗id")


def gamma_tensor_id(setup: CoproductSetup, gamma: ShriekMap) -> ModuleMorphism:
    """γ⊗id: M(D^k)⊗_{M(S^{k-1})}M(T) -> M(T), linear over M(T)."""
    T = setup.torus.algebra
    images = {key: transport(val, T) for key, val in gamma.map.images.items()}
    return ModuleMorphism(setup.E.algebra, T, T.names, images, gamma.degree,
                          default_zero=gamma.map.default_zero, name="gamma⊗id")


def build_section_phi(m: SullivanModel, k: int, method: str = "explicit",
                      setup: Optional[CoproductSetup] = None) -> AlgebraMorphism:
    """Chain-map section of ε̃⊗id, verified before it is returned."""
    setup = setup or CoproductSetup(m, k)
    if method == "explicit":
        phi = setup.explicit_phi()
    elif method == "solver":
        phi = setup.solver_phi()
    else:
        raise PreconditionError(f"unknown section method {method!r}")
    bad = check_section(phi, setup.p, setup.Q, setup.E)
    if bad:
        raise BraneError(bad)
    return phi


def build_section_psi(m: SullivanModel, k: int, method: str = "auto",
                      setup: Optional[ProductSetup] = None) -> AlgebraMorphism:
    """Chain-map section of ε̄⊗id; "auto" uses the closed form when d = 0."""
    setup = setup or ProductSetup(m, k)
    if method == "auto":
        method = "solver" if any(m.dgen(n) for n in m.algebra.names) else "explicit"
    if method == "explicit":
        psi = setup.explicit_psi()
    elif method == "solver":
        psi = setup.solver_psi()
    else:
        raise PreconditionError(f"unknown section method {method!r}")
    bad = check_section(psi, setup.p, setup.Qp, setup.R)
    if bad:
        raise BraneError(bad)
    return psi


@dataclass
class NontrivialityReport:
    nontrivial: bool
    witnesses: List[Tuple[Element, Element]]
    n_max: int

    @property
    def verdict(self) -> str:
        return "NONTRIVIAL" if self.nontrivial else "TRIVIAL"


@dataclass
class BraneOperation:
    direction: str  # "coproduct_dual", "product_dual" or "composite"
    source: SullivanModel
    target: SullivanModel
    action: Callable[[Element], Element]
    degree_shift: int
    n_max: int
    parts: Dict[str, object] = field(default_factory=dict)

    def __call__(self, a: Element) -> Element:
        if a.algebra != self.source.algebra:
            raise BraneError(f"{self.direction}: element is not in the source model")
        for deg in a.degrees():
            if deg > self.n_max:
                raise BraneError(f"{self.direction}: degree {deg} above truncation {self.n_max}")
        return self.action(a)

    def slice(self, n: int) -> List[Tuple[tuple, Element]]:
        A = self.source.algebra
        return [(mono, self(Element(A, {mono: 1}))) for mono in A.basis(n)]

    def chain_map_defect(self, n_max: Optional[int] = None):
        """First basis monomial where ``op∘d != d∘op``; ``None`` if none."""
        n_max = self.n_max if n_max is None else n_max
        A = self.source.algebra
        for n in range(n_max):
            for mono in A.basis(n):
                a = Element(A, {mono: 1})
                if self(self.source.d(a)) != self.target.d(self(a)):
                    return a
        return None

    def nontriviality(self, n_max: Optional[int] = None) -> NontrivialityReport:
        """Cocycles (kernel basis per degree) whose image is not exact."""
        n_max = self.n_max if n_max is None else n_max
        witnesses = []
        for n in range(n_max + 1):
            if n + self.degree_shift < 0:
                continue
            for z in cocycle_basis(self.source, n):
                w = self(z)
                if not w:
                    continue
                if self.target.d(w):
                    raise BraneError(f"{self.direction}: image of a cocycle is not a cocycle")
                exact, _ = is_coboundary(w, self.target)
                if not exact:
                    witnesses.append((z, w))
        return NontrivialityReport(bool(witnesses), witnesses, n_max)


def _resolve_truncation(m: SullivanModel, n_max: Optional[int]) -> int:
    return m.default_truncation() if n_max is None else n_max


def brane_coproduct_dual(m: SullivanModel, k: int, n_max: Optional[int] = None,
                         section: str = "explicit", normalization=1,
                         setup: Optional[CoproductSetup] = None) -> BraneOperation:
    """δ^∨: M(S^k) -> M(T^{(k)}) of degree m̄."""
    n_max = _resolve_truncation(m, n_max)
    setup = setup or CoproductSetup(m, k)
    gamma = build_shriek_constant(m, k, normalization, n_check=n_max, disk=setup.disk)
    phi = build_section_phi(m, k, section, setup)
    incl = setup.collapse.maps["incl"]
    to_q = setup.collapse.maps["to_quotient"]
    gid = gamma_tensor_id(setup, gamma)

    def action(a: Element) -> Element:
        return gid(phi(to_q(incl(a))))

    return BraneOperation("coproduct_dual", setup.sphere_k.model, setup.torus.model, action,
                          gamma.degree, n_max,
                          {"gamma": gamma, "phi": phi, "setup": setup, "gamma_tensor_id": gid})


def brane_product_dual(m: SullivanModel, k: int, n_max: Optional[int] = None,
                       section: str = "auto", setup: Optional[ProductSetup] = None) -> BraneOperation:
    """μ^∨: M(T^{(k)}) -> M(S^k) of degree m."""
    n_max = _resolve_truncation(m, n_max)
    setup = setup or ProductSetup(m, k)
    eta = build_shriek_diagonal(m, n_max, path=setup.path)
    psi = build_section_psi(m, k, section, setup)
    comp = setup.collapse.maps["comp"]
    eid = setup.eta_tensor_id(eta)

    def action(a: Element) -> Element:
        return setup.final(eid(psi(setup.u_to_qp(comp(a)))))

    return BraneOperation("product_dual", setup.torus.model, setup.sphere_k.model, action,
                          eta.degree, n_max, {"eta": eta, "psi": psi, "setup": setup, "eta_tensor_id": eid})


def compose_operations(delta: BraneOperation, mu: BraneOperation,
                       n_max: Optional[int] = None) -> Tuple[BraneOperation, NontrivialityReport]:
    """δ^∨∘μ^∨ on M(T^{(k)}), the cochain dual of μ∘δ, with its report."""
    if mu.target.algebra != delta.source.algebra:
        raise BraneError("cannot compose: μ^∨ target differs from δ^∨ source")
    if n_max is None:
        n_max = min(mu.n_max, delta.n_max - max(mu.degree_shift, 0))
    shift = mu.degree_shift + delta.degree_shift

    def action(a: Element) -> Element:
        return delta(mu(a))

    op = BraneOperation("composite", mu.source, delta.target, action, shift, n_max,
                        {"coproduct": delta, "product": mu})
    return op, op.nontriviality(n_max)


def brane_operation(m: SullivanModel, k: int, op: str, n_max: Optional[int] = None,
                    section: str = "default") -> Tuple[BraneOperation, Optional[NontrivialityReport]]:
    """Build ``op`` in {"product", "coproduct", "composite"} through degree ``n_max``.

    ``section`` is "default" (explicit where available) or "solver".
    """
    n_max = _resolve_truncation(m, n_max)
    phi = "solver" if section == "solver" else "explicit"
    psi = "solver" if section == "solver" else "auto"
    if section not in ("default", "solver"):
        raise PreconditionError(f"unknown section method {section!r}")
    if op == "coproduct":
        return brane_coproduct_dual(m, k, n_max, section=phi), None
    if op == "product":
        return brane_product_dual(m, k, n_max, section=psi), None
    if op == "composite":
        _, shift = gorenstein_shifts(m, k)
        cop = CoproductSetup(m, k)
        mu = brane_product_dual(m, k, n_max, section=psi, setup=ProductSetup(m, k, collapse=cop.collapse))
        delta = brane_coproduct_dual(m, k, n_max + max(shift, 0), section=phi, setup=cop)
        return compose_operations(delta, mu, n_max)
    raise PreconditionError(f"unknown operation {op!r}")


def _classes_agree(a: BraneOperation, b: BraneOperation, n_max: int) -> Optional[Element]:
    from .cohomology import cohomology_class_equal
    for n in range(n_max + 1):
        for z in cocycle_basis(a.source, n):
            if not cohomology_class_equal(a(z), b(z), a.target):
                return z
    return None


def verify_invariants(m: SullivanModel, k: int, n_max: Optional[int] = None,
                      op_degree: Optional[int] = None) -> List[Tuple[str, bool, str]]:
    """Run the invariant battery; returns ``(name, passed, detail)`` in order.

    Stops at the first failure.  ``op_degree`` bounds the basis checks on the
    operations themselves (default: ``n_max``).
    """
    from .cohomology import cohomology_dims

    n_max = _resolve_truncation(m, n_max)
    op_degree = n_max if op_degree is None else min(op_degree, n_max)
    results: List[Tuple[str, bool, str]] = []

    def record(name, detail):
        results.append((name, detail is None, detail or ""))
        return detail is None

    def guarded(name, fn):
        try:
            return record(name, fn())
        except AlgebraError as exc:
            return record(name, str(exc))

    cop = CoproductSetup(m, k)
    prod = ProductSetup(m, k, collapse=cop.collapse)
    models = {
        "base": m, "M(I)": prod.path.model, "M(S^k-1)": cop.sphere_low.model,
        "M(S^k)": cop.sphere_k.model, "M(D^k)": cop.disk.model, "M(T)": cop.torus.model,
        "M(U)": cop.collapse.model, "M(T)/s^{k-1}V": cop.Q, "M(D^k)⊗M(T)": cop.E,
        "P": prod.P, "M⊗_{M⊗M}P": prod.Qp, "M(I)⊗_{M⊗M}P": prod.R,
    }

    def square_zero(model):
        def run():
            model.check_square_zero()
        return run

    for name, model in models.items():
        if not guarded(f"d^2=0 on {name}", square_zero(model)):
            return results

    chain = [
        (cop.collapse.maps["incl"], cop.sphere_k.model, cop.collapse.model),
        (cop.collapse.maps["comp"], cop.torus.model, cop.collapse.model),
        (cop.collapse.maps["to_quotient"], cop.collapse.model, cop.Q),
        (cop.collapse.maps["projection"], cop.torus.model, cop.Q),
        (cop.disk.maps["epsilon_tilde"], cop.disk.model, m),
        (cop.disk.maps["incl_sphere"], cop.sphere_low.model, cop.disk.model),
        (cop.torus.maps["incl_sphere"], cop.sphere_low.model, cop.torus.model),
        (cop.torus.maps["restrict"], cop.torus.model, cop.sphere_low.model),
        (cop.incl_disk, cop.disk.model, cop.E),
        (cop.incl_torus, cop.torus.model, cop.E),
        (cop.p, cop.E, cop.Q),
        (prod.path.maps["epsilon_bar"], prod.path.model, m),
        (prod.path.maps["incl_left"], m, prod.path.model),
        (prod.path.maps["incl_right"], m, prod.path.model),
        (prod.Qp_proj, prod.P, prod.Qp),
        (prod.u_to_qp, cop.collapse.model, prod.Qp),
        (prod.p, prod.R, prod.Qp),
        (prod.final, prod.P, cop.sphere_k.model),
    ]
    for f, src, tgt in chain:
        bad = is_chain_map(f, src, tgt)
        if not record(f"chain map {f.name}", None if bad is None else f"fails on generator {bad!r}"):
            return results

    sections = [("section phi (explicit)", cop.explicit_phi, cop.p, cop.Q, cop.E),
                ("section phi (solver)", cop.solver_phi, cop.p, cop.Q, cop.E),
                ("section psi (solver)", prod.solver_psi, prod.p, prod.Qp, prod.R)]
    explicit_psi = not any(m.dgen(n) for n in m.algebra.names)
    if explicit_psi:
        sections.append(("section psi (explicit)", prod.explicit_psi, prod.p, prod.Qp, prod.R))
    for name, build, p, src, tot in sections:
        if not guarded(name, lambda: check_section(build(), p, src, tot)):
            return results

    gamma = build_shriek_constant(m, k, n_check=n_max, disk=cop.disk)
    if not record("D(gamma)=0", None if gamma.cocycle_defect(n_max) is None else "nonzero"):
        return results
    eta_holder = {}

    def eta_check():
        eta_holder["eta"] = build_shriek_diagonal(m, n_max, path=prod.path)
    if not guarded("D(eta)=0", eta_check):
        return results

    base_dims = cohomology_dims(m, n_max)
    for name in ("M(D^k)", "M(I)"):
        dims = cohomology_dims(models[name], n_max)
        detail = None if dims == base_dims else f"{dims} != {base_dims}"
        if not record(f"H({name}) = H(base) through degree {n_max}", detail):
            return results

    m_bar, m_dim = gorenstein_shifts(m, k)
    delta = brane_coproduct_dual(m, k, n_max, setup=cop)
    mu = brane_product_dual(m, k, n_max, setup=prod)
    if not record("degree shifts", None if (delta.degree_shift, mu.degree_shift) == (m_bar, m_dim)
                  else f"({delta.degree_shift}, {mu.degree_shift}) != ({m_bar}, {m_dim})"):
        return results
    for op in (delta, mu):
        bad = op.chain_map_defect(op_degree)
        if not record(f"{op.direction} is a chain map", None if bad is None else f"fails on {bad}"):
            return results

    delta_s = brane_coproduct_dual(m, k, n_max, section="solver", setup=cop)
    bad = _classes_agree(delta, delta_s, op_degree)
    if not record("coproduct_dual solver/explicit agree", None if bad is None else f"differ on {bad}"):
        return results
    if explicit_psi:
        mu_s = brane_product_dual(m, k, n_max, section="solver", setup=prod)
        bad = _classes_agree(mu, mu_s, op_degree)
        record("product_dual solver/explicit agree", None if bad is None else f"differ on {bad}")
    return results
