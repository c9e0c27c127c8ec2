"""Free graded-commutative algebras over Q.

Monomials are exponent tuples aligned with the algebra's generator order.
Odd generators square to zero, and every product is brought back to the
canonical (declaration) order with the Koszul sign obtained by counting
transpositions of odd generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Monomial = Tuple[int, ...]
ModKey = Tuple[Tuple[str, int], ...]


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    """A named generator of positive cohomological degree.

    ``parent``/``level`` record provenance: a suspended generator s^l v has
    ``parent == v.name`` and ``degree == |v| - level``.
    """

    name: str
    degree: int
    parent: Optional[str] = None
    level: int = 0

    def __post_init__(self):
        if self.degree < 1:
            raise AlgebraError(f"generator {self.name!r} has degree {self.degree} < 1")
        if (self.parent is None) != (self.level == 0):
            raise AlgebraError(f"generator {self.name!r}: parent and level must be given together")

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1

    def suspend(self, level: int, name: str) -> "Generator":
        return Generator(name, self.degree - level, parent=self.name, level=level)


def _mono_mul(a: Monomial, b: Monomial, odd: Sequence[bool]):
    """Return ``(sign, a*b)`` or ``None`` when an odd generator repeats."""
    after = 0
    for i, o in enumerate(odd):
        if o and a[i]:
            after += 1
    flips = 0
    for i, o in enumerate(odd):
        if o:
            if a[i]:
                if b[i]:
                    return None
                after -= 1
            elif b[i]:
                flips += after
    return (-1 if flips & 1 else 1), tuple(x + y for x, y in zip(a, b))


class FreeGCA:
    """The free graded-commutative algebra on an ordered list of generators."""

    def __init__(self, generators: Iterable[Generator]):
        gens = tuple(generators)
        index = {}
        for i, g in enumerate(gens):
            if g.name in index:
                raise AlgebraError(f"duplicate generator name {g.name!r}")
            index[g.name] = i
        self.generators = gens
        self.index = index
        self.names = tuple(g.name for g in gens)
        self.degrees = tuple(g.degree for g in gens)
        self.odd = tuple(g.is_odd for g in gens)
        self._basis_cache: Dict[int, list] = {}

    def __eq__(self, other):
        return isinstance(other, FreeGCA) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        inner = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"FreeGCA({inner})"

    def __len__(self):
        return len(self.generators)

    def __contains__(self, name):
        return name in self.index

    # element constructors

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def one(self) -> "Element":
        return Element(self, {self.unit_monomial(): Fraction(1)})

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        return Element(self, {self.unit_monomial(): Fraction(c)})

    def gen(self, name: str) -> "Element":
        return Element(self, {self.generator_monomial(name): Fraction(1)})

    def generator(self, name: str) -> Generator:
        return self.generators[self.index[name]]

    def generator_monomial(self, name: str, power: int = 1) -> Monomial:
        try:
            i = self.index[name]
        except KeyError:
            raise AlgebraError(f"unknown generator {name!r}") from None
        if power > 1 and self.odd[i]:
            raise AlgebraError(f"odd generator {name!r} cannot be raised to power {power}")
        m = [0] * len(self.generators)
        m[i] = power
        return tuple(m)

    def monomial(self, powers: Mapping[str, int]) -> "Element":
        """The product of ``name**exp`` taken in the mapping's iteration order."""
        result = self.one()
        for name, e in powers.items():
            if e:
                result = result * Element(self, {self.generator_monomial(name, e): Fraction(1)})
        return result

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def mono_mul(self, a: Monomial, b: Monomial):
        return _mono_mul(a, b, self.odd)

    def basis(self, n: int):
        return basis_of_degree(self, n)


def make_algebra(generators: Iterable[Generator]) -> FreeGCA:
    return FreeGCA(generators)


def basis_of_degree(A: FreeGCA, n: int) -> list:
    """All monomials of degree ``n``, in descending lexicographic order of
    exponent tuples."""
    if n < 0:
        return []
    cached = A._basis_cache.get(n)
    if cached is not None:
        return cached
    degs, odd = A.degrees, A.odd
    k = len(degs)

    @lru_cache(maxsize=None)
    def tails(i: int, rem: int):
        if i == k:
            return ((),) if rem == 0 else ()
        top = 1 if odd[i] else rem // degs[i]
        top = min(top, rem // degs[i])
        out = []
        for e in range(top, -1, -1):
            for t in tails(i + 1, rem - e * degs[i]):
                out.append((e,) + t)
        return tuple(out)

    result = list(tails(0, n))
    A._basis_cache[n] = result
    return result


def _coerce(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Element:
    """A finite Q-linear combination of canonical monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeGCA, terms: Optional[Mapping[Monomial, object]] = None):
        self.algebra = algebra
        self.terms: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = _coerce(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def _raw(cls, algebra, terms):
        e = cls.__new__(cls)
        e.algebra = algebra
        e.terms = terms
        return e

    # predicates

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {self.algebra.mono_degree(m) for m in self.terms}

    @property
    def degree(self) -> Optional[int]:
        """Degree of a homogeneous element; ``None`` for zero."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise AlgebraError(f"element is not homogeneous (degrees {sorted(ds)})")
        return ds.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, m) -> Fraction:
        if isinstance(m, Element):
            (m,) = m.terms
        return self.terms.get(m, Fraction(0))

    # arithmetic

    def _check(self, other: "Element"):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraError("elements belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, Element):
            other = self.algebra.scalar(other)
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Element._raw(self.algebra, t)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        c = _coerce(other)
        if not c:
            return self.algebra.zero()
        return Element._raw(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, c):
        return self * (Fraction(1) / _coerce(c))

    def __pow__(self, n: int):
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra == other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"Element({format_element(self)})"

    def __str__(self):
        return format_element(self)

    def sorted_terms(self):
        """Terms in basis order: by degree, then descending exponent tuple."""
        A = self.algebra
        return sorted(self.terms.items(), key=lambda mc: (A.mono_degree(mc[0]), tuple(-e for e in mc[0])))


def multiply(a: Element, b: Element) -> Element:
    a._check(b)
    A = a.algebra
    odd = A.odd
    out: Dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            r = _mono_mul(ma, mb, odd)
            if r is None:
                continue
            s, m = r
            v = out.get(m, 0) + s * ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return Element._raw(A, out)


def _mul_mono_element(sign, left: Monomial, e: Element, right: Monomial, coef, out, odd):
    """Accumulate ``coef * sign * left * e * right`` into ``out``."""
    for m, c in e.terms.items():
        r1 = _mono_mul(left, m, odd)
        if r1 is None:
            continue
        r2 = _mono_mul(r1[1], right, odd)
        if r2 is None:
            continue
        v = out.get(r2[1], 0) + sign * r1[0] * r2[0] * coef * c
        if v:
            out[r2[1]] = v
        else:
            out.pop(r2[1], None)


# --- element formatting -----------------------------------------------------

def format_coefficient(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(A: FreeGCA, m: Monomial) -> str:
    return " ".join(f"{A.names[i]}^{e}" for i, e in enumerate(m) if e)


def format_element(a: Element) -> str:
    """Render as ``coef name^exp ...`` terms joined by `` + ``."""
    if not a.terms:
        return "0"
    parts = []
    for m, c in a.sorted_terms():
        mono = format_monomial(a.algebra, m)
        parts.append(format_coefficient(c) + (" " + mono if mono else ""))
    return " + ".join(parts)


def parse_element(text: str, A: FreeGCA) -> Element:
    """Inverse of :func:`format_element`."""
    text = text.strip()
    if text == "0":
        return A.zero()
    result = A.zero()
    for term in text.split(" + "):
        tokens = term.split()
        if not tokens:
            raise AlgebraError(f"empty term in {text!r}")
        try:
            coef = Fraction(tokens[0])
        except ValueError:
            raise AlgebraError(f"bad coefficient {tokens[0]!r}") from None
        e = A.scalar(coef)
        for tok in tokens[1:]:
            name, _, exp = tok.rpartition("^")
            if not name or not exp.isdigit():
                raise AlgebraError(f"bad factor {tok!r}")
            e = e * Element(A, {A.generator_monomial(name, int(exp)): 1})
        result = result + e
    return result


# --- derivations ------------------------------------------------------------

class Derivation:
    """A degree-``degree`` derivation given by generator images.

    Extended by the graded Leibniz rule
    theta(ab) = theta(a) b + (-1)^{|theta||a|} a theta(b).
    Images may be partial; hitting a generator without an image is an error.
    """

    def __init__(self, algebra: FreeGCA, degree: int, images: Mapping[str, Element]):
        self.algebra = algebra
        self.degree = degree
        self._images: list = [None] * len(algebra)
        for name, img in images.items():
            i = algebra.index.get(name)
            if i is None:
                raise AlgebraError(f"derivation image for unknown generator {name!r}")
            if isinstance(img, (int, Fraction)) and img == 0:
                img = algebra.zero()
            if img.algebra != algebra:
                raise AlgebraError(f"image of {name!r} lies in another algebra")
            d = img.degree
            if d is not None and d != algebra.degrees[i] + degree:
                raise AlgebraError(
                    f"image of {name!r} has degree {d}, expected {algebra.degrees[i] + degree}"
                )
            self._images[i] = img
        self._cache: Dict[Monomial, Dict[Monomial, Fraction]] = {}

    def image(self, name: str) -> Element:
        img = self._images[self.algebra.index[name]]
        if img is None:
            raise AlgebraError(f"derivation has no image for generator {name!r}")
        return img

    @property
    def images(self) -> Dict[str, Element]:
        return {n: img for n, img in zip(self.algebra.names, self._images) if img is not None}

    def _on_monomial(self, mono: Monomial) -> Dict[Monomial, Fraction]:
        hit = self._cache.get(mono)
        if hit is not None:
            return hit
        A = self.algebra
        odd, degs = A.odd, A.degrees
        out: Dict[Monomial, Fraction] = {}
        prefix_deg = 0
        n = len(mono)
        for i, e in enumerate(mono):
            if not e:
                continue
            img = self._images[i]
            if img is None:
                raise AlgebraError(f"derivation has no image for generator {A.names[i]!r}")
            if img.terms:
                left = mono[:i] + (e - 1,) + (0,) * (n - i - 1)
                right = (0,) * (i + 1) + mono[i + 1:]
                sign = -1 if (self.degree * prefix_deg) & 1 else 1
                _mul_mono_element(sign, left, img, right, e, out, odd)
            prefix_deg += e * degs[i]
        self._cache[mono] = out
        return out

    def __call__(self, a: Element) -> Element:
        return derivation_apply(self, a)


def derivation_apply(theta: Derivation, a: Element) -> Element:
    if a.algebra != theta.algebra:
        raise AlgebraError("element does not belong to the derivation's algebra")
    out: Dict[Monomial, Fraction] = {}
    for m, c in a.terms.items():
        for m2, c2 in theta._on_monomial(m).items():
            v = out.get(m2, 0) + c * c2
            if v:
                out[m2] = v
            else:
                out.pop(m2, None)
    return Element._raw(theta.algebra, out)


# --- morphisms --------------------------------------------------------------

class AlgebraMorphism:
    """A graded algebra map determined by (total) generator images."""

    def __init__(self, source: FreeGCA, target: FreeGCA, images: Mapping[str, object], name: str = ""):
        self.source = source
        self.target = target
        self.name = name
        imgs = []
        for g in source.generators:
            if g.name not in images:
                raise AlgebraError(f"morphism {name}: no image for generator {g.name!r}")
            img = images[g.name]
            if not isinstance(img, Element):
                img = target.scalar(img)
            if img.algebra != target:
                raise AlgebraError(f"morphism {name}: image of {g.name!r} not in target")
            d = img.degree
            if d is not None and d != g.degree:
                raise AlgebraError(f"morphism {name}: image of {g.name!r} has degree {d} != {g.degree}")
            imgs.append(img)
        extra = set(images) - set(source.names)
        if extra:
            raise AlgebraError(f"morphism {name}: images for unknown generators {sorted(extra)}")
        self._images = imgs
        self._cache: Dict[Monomial, Element] = {}

    @property
    def images(self) -> Dict[str, Element]:
        return dict(zip(self.source.names, self._images))

    def image(self, name: str) -> Element:
        return self._images[self.source.index[name]]

    def _on_monomial(self, mono: Monomial) -> Element:
        hit = self._cache.get(mono)
        if hit is not None:
            return hit
        result = self.target.one()
        for i, e in enumerate(mono):
            for _ in range(e):
                result = multiply(result, self._images[i])
                if not result.terms:
                    break
        self._cache[mono] = result
        return result

    def __call__(self, a: Element) -> Element:
        return morphism_apply(self, a)

    def __repr__(self):
        return f"AlgebraMorphism({self.name or '?'}: {self.source!r} -> {self.target!r})"


def morphism_apply(f: AlgebraMorphism, a: Element) -> Element:
    if a.algebra != f.source:
        raise AlgebraError(f"morphism {f.name}: element is not in the source algebra")
    out: Dict[Monomial, Fraction] = {}
    for m, c in a.terms.items():
        for m2, c2 in f._on_monomial(m).terms.items():
            v = out.get(m2, 0) + c * c2
            if v:
                out[m2] = v
            else:
                out.pop(m2, None)
    return Element._raw(f.target, out)


def compose(f: AlgebraMorphism, g: AlgebraMorphism, name: str = "") -> AlgebraMorphism:
    """``f o g``."""
    if g.target != f.source:
        raise AlgebraError("cannot compose: target/source mismatch")
    return AlgebraMorphism(g.source, f.target, {n: f(img) for n, img in g.images.items()}, name=name)


def identity(A: FreeGCA) -> AlgebraMorphism:
    return AlgebraMorphism(A, A, {n: A.gen(n) for n in A.names}, name="id")


def by_name(source: FreeGCA, target: FreeGCA, rename: Optional[Mapping[str, object]] = None,
            name: str = "") -> AlgebraMorphism:
    """The morphism sending each generator to the same-named generator of
    ``target``; ``rename`` overrides single generators (a name, an element,
    or 0)."""
    rename = rename or {}
    images = {}
    for n in source.names:
        r = rename.get(n, n)
        if isinstance(r, str):
            images[n] = target.gen(r)
        elif isinstance(r, Element):
            images[n] = r
        else:
            images[n] = target.scalar(r)
    return AlgebraMorphism(source, target, images, name=name)


# --- module maps ------------------------------------------------------------

def mod_key(A: FreeGCA, m: Monomial, module_index: Sequence[int]) -> ModKey:
    return tuple((A.names[i], m[i]) for i in module_index if m[i])


class ModuleMorphism:
    """A map of left modules over the subalgebra generated by ``base``.

    ``f(b * n) = (-1)^{|f||b|} b * f(n)`` for ``b`` in the base and ``n`` a
    monomial in the remaining (module) generators.  Images are keyed by
    :data:`ModKey`, i.e. ``((name, exp), ...)`` in source order, so they
    survive renaming and re-embedding.
    """

    def __init__(self, source: FreeGCA, target: FreeGCA, base: Iterable[str],
                 images: Mapping[ModKey, Element], degree: int, default_zero: bool = False,
                 name: str = ""):
        self.source = source
        self.target = target
        self.base = tuple(base)
        self.degree = degree
        self.default_zero = default_zero
        self.name = name
        for b in self.base:
            if b not in source.index:
                raise AlgebraError(f"module map {name}: base generator {b!r} not in source")
            if b not in target.index:
                raise AlgebraError(f"module map {name}: base generator {b!r} not in target")
            if source.generator(b).degree != target.generator(b).degree:
                raise AlgebraError(f"module map {name}: base generator {b!r} changes degree")
        base_set = set(self.base)
        self.base_index = tuple(i for i, n in enumerate(source.names) if n in base_set)
        self.module_index = tuple(i for i, n in enumerate(source.names) if n not in base_set)
        self._bset = frozenset(self.base_index)
        self.module_algebra = FreeGCA(source.generators[i] for i in self.module_index)
        self.images: Dict[ModKey, Element] = {}
        for key, img in images.items():
            if img.algebra != target:
                raise AlgebraError(f"module map {name}: image not in target")
            d = img.degree
            kd = sum(source.generator(n).degree * e for n, e in key)
            if d is not None and d != kd + degree:
                raise AlgebraError(f"module map {name}: image of {key} has degree {d}, expected {kd + degree}")
            self.images[tuple(key)] = img
        self._embed_cache: Dict[Monomial, Tuple[int, Monomial]] = {}
        self._split_cache: Dict[Monomial, tuple] = {}

    def module_basis(self, n: int) -> list:
        """Module-basis monomials of degree ``n`` as ModKeys."""
        M = self.module_algebra
        return [tuple((M.names[i], e) for i, e in enumerate(m) if e) for m in basis_of_degree(M, n)]

    def key_degree(self, key: ModKey) -> int:
        return sum(self.source.generator(n).degree * e for n, e in key)

    def key_element(self, key: ModKey) -> Element:
        """The source monomial corresponding to ``key`` (sign +1)."""
        return Element(self.source, {_key_mono(self.source, key): 1})

    def image(self, key: ModKey) -> Element:
        img = self.images.get(key)
        if img is None:
            if self.default_zero:
                return self.target.zero()
            raise AlgebraError(f"module map {self.name}: no image for module monomial {key}")
        return img

    def _split(self, m: Monomial):
        hit = self._split_cache.get(m)
        if hit is not None:
            return hit
        A = self.source
        b = tuple(e if i in self._bset else 0 for i, e in enumerate(m))
        n = tuple(0 if i in self._bset else e for i, e in enumerate(m))
        s, prod = _mono_mul(b, n, A.odd)
        assert prod == m
        key = tuple((A.names[i], n[i]) for i in self.module_index if n[i])
        res = (s, b, key)
        self._split_cache[m] = res
        return res

    def _embed_base(self, b: Monomial) -> Tuple[int, Monomial]:
        hit = self._embed_cache.get(b)
        if hit is not None:
            return hit
        T = self.target
        sign, mono = 1, T.unit_monomial()
        for i, e in enumerate(b):
            if e:
                g = T.generator_monomial(self.source.names[i], e)
                s, mono = _mono_mul(mono, g, T.odd)
                sign *= s
        self._embed_cache[b] = (sign, mono)
        return sign, mono

    def __call__(self, a: Element) -> Element:
        return module_map_apply(self, a)


def _key_mono(A: FreeGCA, key: ModKey) -> Monomial:
    m = [0] * len(A)
    for n, e in key:
        m[A.index[n]] = e
    return tuple(m)


def module_map_apply(mu: ModuleMorphism, a: Element) -> Element:
    if a.algebra != mu.source:
        raise AlgebraError(f"module map {mu.name}: element is not in the source algebra")
    A, T = mu.source, mu.target
    out: Dict[Monomial, Fraction] = {}
    zero_b = T.unit_monomial()
    for m, c in a.terms.items():
        s, b, key = mu._split(m)
        img = mu.image(key)
        if not img.terms:
            continue
        bdeg = A.mono_degree(b)
        s2, bt = mu._embed_base(b)
        sign = s * s2 * (-1 if (mu.degree * bdeg) & 1 else 1)
        _mul_mono_element(sign, bt, img, zero_b, c, out, T.odd)
    return Element._raw(T, out)
