"""Sullivan models: a free GCA together with a square-zero differential."""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .algebra import (
    AlgebraError,
    AlgebraMorphism,
    Derivation,
    Element,
    FreeGCA,
    Generator,
    by_name,
)


class ModelError(AlgebraError):
    pass


def transport(a: Element, target: FreeGCA) -> Element:
    """Rewrite ``a`` in ``target`` by generator names (sign-correct)."""
    if a.algebra == target:
        return a
    out = target.zero()
    A = a.algebra
    for m, c in a.terms.items():
        term = target.scalar(c)
        for i, e in enumerate(m):
            if e:
                term = term * Element(target, {target.generator_monomial(A.names[i], e): 1})
        out = out + term
    return out


def name_form(a: Element) -> Dict[Tuple[Tuple[str, int], ...], object]:
    """Algebra-independent canonical form of ``a``, keyed by names.

    Only meaningful for comparing elements of algebras whose shared
    generators appear in the same relative order.
    """
    A = a.algebra
    return {tuple((A.names[i], e) for i, e in enumerate(m) if e): c for m, c in a.terms.items()}


class SullivanModel:
    """``(ΛV, d)`` with ``d`` a degree +1 derivation.

    ``d∘d = 0`` is checked on every generator at construction unless
    ``check=False``.
    """

    def __init__(self, algebra: FreeGCA, differential: Mapping[str, Element] | Derivation,
                 name: str = "", check: bool = True):
        self.algebra = algebra
        if isinstance(differential, Derivation):
            d = differential
        else:
            full = {n: algebra.zero() for n in algebra.names}
            full.update(differential)
            d = Derivation(algebra, 1, full)
        if d.degree != 1:
            raise ModelError("differential must have degree +1")
        for n in algebra.names:
            d.image(n)
        self.differential = d
        self.name = name
        self._slices: dict = {}
        if check:
            self.check_square_zero()

    def __repr__(self):
        return f"SullivanModel({self.name or '?'}: {self.algebra!r})"

    @property
    def generators(self):
        return self.algebra.generators

    def gen(self, name: str) -> Element:
        return self.algebra.gen(name)

    def d(self, a: Element) -> Element:
        return self.differential(a)

    def dgen(self, name: str) -> Element:
        return self.differential.image(name)

    def check_square_zero(self):
        for n in self.algebra.names:
            dd = self.d(self.dgen(n))
            if dd:
                raise ModelError(f"{self.name or 'model'}: d(d({n})) = {dd} != 0")

    def sullivan_order(self) -> List[str]:
        """Generator names ordered so that ``d(g)`` only involves earlier ones."""
        A = self.algebra
        deps = {}
        for n in A.names:
            used = set()
            for m in self.dgen(n).terms:
                used.update(A.names[i] for i, e in enumerate(m) if e)
            deps[n] = used
        order, done = [], set()
        remaining = list(A.names)
        while remaining:
            progressed = False
            rest = []
            for n in remaining:
                if deps[n] <= done:
                    order.append(n)
                    done.add(n)
                    progressed = True
                else:
                    rest.append(n)
            if not progressed:
                raise ModelError(f"differential has circular dependencies among {rest}")
            remaining = rest
        return order

    def max_degree(self) -> int:
        return max(self.algebra.degrees, default=0)

    def default_truncation(self) -> int:
        return 2 * self.max_degree() + 4


def make_model(generators: Iterable[Generator], differential: Mapping[str, object],
               name: str = "") -> SullivanModel:
    """Build a model; differential values may be Elements or callables of the algebra."""
    A = FreeGCA(generators)
    d = {}
    for n, v in differential.items():
        d[n] = v(A) if callable(v) else v
    return SullivanModel(A, d, name=name)


def is_chain_map(f: AlgebraMorphism, source: SullivanModel, target: SullivanModel) -> Optional[str]:
    """Return ``None`` if ``f∘d = d∘f`` on all generators, else the first
    offending generator name."""
    for n in source.algebra.names:
        if f(source.dgen(n)) != target.d(f.image(n)):
            return n
    return None


def check_chain_map(f: AlgebraMorphism, source: SullivanModel, target: SullivanModel):
    bad = is_chain_map(f, source, target)
    if bad is not None:
        raise ModelError(f"{f.name or 'map'} is not a chain map on generator {bad!r}")


def rename_model(m: SullivanModel, mapping: Mapping[str, str], name: str = "") -> Tuple[SullivanModel, AlgebraMorphism]:
    """Rename generators; returns the new model and the isomorphism onto it."""
    gens = []
    for g in m.generators:
        parent = mapping.get(g.parent, g.parent) if g.parent else None
        gens.append(Generator(mapping.get(g.name, g.name), g.degree, parent, g.level))
    A = FreeGCA(gens)
    iso = by_name(m.algebra, A, mapping, name="rename")
    d = {mapping.get(n, n): iso(m.dgen(n)) for n in m.algebra.names}
    new = SullivanModel(A, d, name=name or m.name, check=False)
    return new, iso


def submodel(m: SullivanModel, names: Iterable[str], name: str = "") -> SullivanModel:
    """The sub-dga on ``names``; they must be closed under ``d``."""
    names = list(names)
    A = FreeGCA(m.algebra.generator(n) for n in names)
    d = {}
    for n in names:
        img = m.dgen(n)
        for mono in img.terms:
            for i, e in enumerate(mono):
                if e and m.algebra.names[i] not in A:
                    raise ModelError(f"d({n}) leaves the subalgebra")
        d[n] = transport(img, A)
    return SullivanModel(A, d, name=name, check=False)


def tensor_amalgamated(A: SullivanModel, B: SullivanModel, base: FreeGCA | SullivanModel,
                       name: str = "") -> Tuple[SullivanModel, AlgebraMorphism, AlgebraMorphism]:
    """``A ⊗_base B`` with base generators identified by name.

    Returns the model and the inclusions of ``A`` and ``B``.
    """
    base_alg = base.algebra if isinstance(base, SullivanModel) else base
    shared = set(A.algebra.names) & set(B.algebra.names)
    base_names = set(base_alg.names)
    if shared != base_names:
        missing = base_names - shared
        if missing:
            raise ModelError(f"base generators {sorted(missing)} missing from a factor")
        raise ModelError(f"generator names {sorted(shared - base_names)} clash outside the base")
    for n in base_alg.names:
        ga, gb = A.algebra.generator(n), B.algebra.generator(n)
        if ga.degree != gb.degree or ga.degree != base_alg.generator(n).degree:
            raise ModelError(f"shared generator {n!r} has conflicting degrees")
        if name_form(A.dgen(n)) != name_form(B.dgen(n)):
            raise ModelError(f"shared generator {n!r} has conflicting differentials")
    gens = list(A.generators) + [g for g in B.generators if g.name not in base_names]
    R = FreeGCA(gens)
    incA = by_name(A.algebra, R, name="incl_left")
    incB = by_name(B.algebra, R, name="incl_right")
    d = {n: incA(A.dgen(n)) for n in A.algebra.names}
    for n in B.algebra.names:
        if n not in base_names:
            d[n] = incB(B.dgen(n))
    model = SullivanModel(R, d, name=name)
    return model, incA, incB


def quotient_by_generators(A: SullivanModel, killed: Iterable[str],
                           images: Optional[Mapping[str, object]] = None,
                           name: str = "") -> Tuple[SullivanModel, AlgebraMorphism]:
    """Kill the generators in ``killed`` (or send them to ``images``, given as
    names or elements of the quotient).  Returns the quotient model and the
    projection, which is checked to be a chain map."""
    killed = list(killed)
    images = dict(images or {})
    ks = set(killed)
    unknown = ks - set(A.algebra.names)
    if unknown:
        raise ModelError(f"cannot kill unknown generators {sorted(unknown)}")
    Q = FreeGCA(g for g in A.generators if g.name not in ks)
    proj_images: Dict[str, object] = {}
    for n in A.algebra.names:
        if n in ks:
            v = images.get(n, 0)
            proj_images[n] = Q.gen(v) if isinstance(v, str) else (v if isinstance(v, Element) else Q.scalar(v))
        else:
            proj_images[n] = Q.gen(n)
    proj = AlgebraMorphism(A.algebra, Q, proj_images, name="projection")
    d = {n: proj(A.dgen(n)) for n in Q.names}
    model = SullivanModel(Q, d, name=name, check=False)
    for n in killed:
        if proj(A.dgen(n)) != model.d(proj.image(n)):
            raise ModelError(f"killing {n!r} is not compatible with the differential")
    model.check_square_zero()
    return model, proj


def check_pure(m: SullivanModel) -> Tuple[bool, Optional[str]]:
    """Pure: d(even) = 0 and d(odd) lies in the subalgebra on even generators."""
    A = m.algebra
    for i, g in enumerate(A.generators):
        img = m.dgen(g.name)
        if not g.is_odd:
            if img:
                return False, g.name
        else:
            for mono in img.terms:
                if any(e and A.odd[j] for j, e in enumerate(mono)):
                    return False, g.name
    return True, None


def check_k_connected(m: SullivanModel, k: int) -> bool:
    return all(d > k for d in m.algebra.degrees)


def is_minimal(m: SullivanModel) -> bool:
    """No linear part in the differential."""
    unit = m.algebra.unit_monomial()
    for n in m.algebra.names:
        for mono in m.dgen(n).terms:
            if sum(mono) <= 1 and mono != unit:
                return False
    return True
