"""Degree-truncated cohomology, Hom-complex differentials and lifting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import (
    AlgebraError,
    AlgebraMorphism,
    Element,
    ModuleMorphism,
    Monomial,
    basis_of_degree,
    multiply,
)
from .linalg import nullspace, rank, solve
from .sullivan import SullivanModel


class LiftError(AlgebraError):
    pass


@dataclass
class DegreeSlice:
    degree: int
    basis: List[Monomial]
    index: Dict[Monomial, int]
    d_columns: List[Dict[int, Fraction]]  # column j = d(basis[j]) in the next slice

    def vector(self, a: Element) -> Dict[int, Fraction]:
        return {self.index[m]: c for m, c in a.terms.items()}

    def element(self, algebra, vec) -> Element:
        return Element(algebra, {self.basis[j]: c for j, c in vec.items()})


def degree_slice(m: SullivanModel, n: int) -> DegreeSlice:
    sl = m._slices.get(n)
    if sl is not None:
        return sl
    A = m.algebra
    basis = basis_of_degree(A, n)
    index = {mono: i for i, mono in enumerate(basis)}
    nxt = {mono: i for i, mono in enumerate(basis_of_degree(A, n + 1))}
    cols = []
    for mono in basis:
        da = m.d(Element(A, {mono: 1}))
        cols.append({nxt[mm]: c for mm, c in da.terms.items()})
    sl = DegreeSlice(n, basis, index, cols)
    m._slices[n] = sl
    return sl


def d_rank(m: SullivanModel, n: int) -> int:
    """Rank of d: A^n -> A^{n+1}."""
    key = ("rank", n)
    r = m._slices.get(key)
    if r is None:
        r = rank(degree_slice(m, n).d_columns) if n >= 0 else 0
        m._slices[key] = r
    return r


def cohomology_dims(m: SullivanModel, n_max: int) -> List[int]:
    dims = []
    for n in range(n_max + 1):
        dim = len(degree_slice(m, n).basis)
        dims.append(dim - d_rank(m, n) - (d_rank(m, n - 1) if n > 0 else 0))
    return dims


def _homogeneous_degree(a: Element) -> Optional[int]:
    ds = a.degrees()
    if len(ds) > 1:
        raise AlgebraError(f"element is not homogeneous (degrees {sorted(ds)})")
    return ds.pop() if ds else None


def is_cocycle(a: Element, m: SullivanModel) -> bool:
    _homogeneous_degree(a)
    return not m.d(a)


def is_coboundary(a: Element, m: SullivanModel) -> Tuple[bool, Optional[Element]]:
    """Solve ``d z = a``; returns ``(True, z)`` or ``(False, None)``."""
    n = _homogeneous_degree(a)
    if m.d(a):
        raise AlgebraError("is_coboundary expects a cocycle")
    if n is None:
        return True, m.algebra.zero()
    if n == 0:
        return False, None
    sl = degree_slice(m, n - 1)
    index = degree_slice(m, n).index
    x = solve(sl.d_columns, {index[mono]: c for mono, c in a.terms.items()})
    if x is None:
        return False, None
    return True, sl.element(m.algebra, x)


def cocycle_basis(m: SullivanModel, n: int) -> List[Element]:
    sl = degree_slice(m, n)
    return [sl.element(m.algebra, v) for v in nullspace(sl.d_columns)] if sl.basis else []


def cohomology_class_equal(a: Element, b: Element, m: SullivanModel) -> bool:
    diff = a - b
    if not diff:
        return True
    ok, _ = is_coboundary(diff, m)
    return ok


# --- Hom complex -------------------------------------------------------------

def hom_differential(f: ModuleMorphism, source: SullivanModel, target: SullivanModel,
                     n_max: int) -> ModuleMorphism:
    """``D(f) = d∘f - (-1)^{|f|} f∘d`` on module-basis monomials of degree <= n_max."""
    if source.algebra != f.source or target.algebra != f.target:
        raise AlgebraError("hom_differential: models do not match the module map")
    sign = -1 if f.degree % 2 else 1
    images = {}
    for n in range(n_max + 1):
        for key in f.module_basis(n):
            x = f.key_element(key)
            val = target.d(f(x)) - sign * f(source.d(x))
            images[key] = val
    return ModuleMorphism(f.source, f.target, f.base, images, f.degree + 1,
                          default_zero=False, name=f"D({f.name})")


def hom_cocycle_defect(f: ModuleMorphism, source: SullivanModel, target: SullivanModel,
                       n_max: int) -> Optional[Tuple]:
    """First module monomial where ``D(f)`` is nonzero, or ``None``."""
    Df = hom_differential(f, source, target, n_max)
    for key, v in Df.images.items():
        if v:
            return key, v
    return None


# --- lifting -------------------------------------------------------------------

def _partial_apply(images: Dict[str, Element], a: Element, target) -> Element:
    A = a.algebra
    out = target.zero()
    for mono, c in a.terms.items():
        term = target.scalar(c)
        for i, e in enumerate(mono):
            if e:
                img = images.get(A.names[i])
                if img is None:
                    raise LiftError(f"generator {A.names[i]!r} needed before it was lifted")
                for _ in range(e):
                    term = multiply(term, img)
        out = out + term
    return out


def lift_through_surjection(p: AlgebraMorphism, f: AlgebraMorphism, total: SullivanModel,
                            domain: SullivanModel, n_max: Optional[int] = None,
                            name: str = "lift") -> AlgebraMorphism:
    """Construct ``φ: domain -> total`` with ``p∘φ = f`` and ``dφ = φd``.

    ``p: total -> B`` must be a surjective quasi-isomorphism in the degrees
    involved.  Generators are handled in dependency order; each one is a
    sparse affine system in a single degree, and the particular solution
    (free coordinates zero) is taken.
    """
    if p.source != total.algebra or f.source != domain.algebra or p.target != f.target:
        raise AlgebraError("lift_through_surjection: incompatible maps")
    if n_max is None:
        n_max = domain.max_degree()
    A = total.algebra
    images: Dict[str, Element] = {}
    for g in domain.sullivan_order():
        deg = domain.algebra.generator(g).degree
        if deg > n_max:
            raise LiftError(f"generator {g!r} has degree {deg} above truncation {n_max}")
        rhs: Dict[Tuple[str, Monomial], Fraction] = {}
        for mono, c in _partial_apply(images, domain.dgen(g), A).terms.items():
            rhs[("d", mono)] = c
        for mono, c in f.image(g).terms.items():
            rhs[("p", mono)] = c
        basis = basis_of_degree(A, deg)
        cols = []
        for mono in basis:
            e = Element(A, {mono: 1})
            col = {("d", mm): c for mm, c in total.d(e).terms.items()}
            col.update({("p", mm): c for mm, c in p(e).terms.items()})
            cols.append(col)
        x = solve(cols, rhs)
        if x is None:
            raise LiftError(f"no lift for generator {g!r} in degree {deg}")
        images[g] = Element(A, {basis[j]: c for j, c in x.items()})
    return AlgebraMorphism(domain.algebra, A, images, name=name)
