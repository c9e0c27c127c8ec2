"""Models of mapping spaces out of the interval, spheres, disks, the torus
S^{k-1} x S^1 and the collapse (S^{k-1} x S^1)/S^{k-1}.

Naming scheme for generated generators, for a base generator ``v``:

* path space: ``v1`` (= v⊗1), ``v2`` (= 1⊗v), ``sv``
* sphere S^j: ``s{j}v``; the circle factor of the torus and of the collapse
  uses the loop suspension ``sv``, so the torus carries ``s{k-1}v``, ``sv``
  and ``ss{k-1}v``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Optional

from .algebra import AlgebraMorphism, Derivation, Element, FreeGCA, Generator, by_name, compose
from .sullivan import (
    ModelError,
    SullivanModel,
    check_chain_map,
    check_k_connected,
    quotient_by_generators,
    tensor_amalgamated,
    transport,
)

MAX_SERIES_TERMS = 500


@dataclass
class MappingSpaceModel:
    model: SullivanModel
    maps: Dict[str, AlgebraMorphism] = field(default_factory=dict)
    derivations: Dict[str, Derivation] = field(default_factory=dict)
    parts: Dict[str, object] = field(default_factory=dict)

    @property
    def algebra(self) -> FreeGCA:
        return self.model.algebra

    def __getitem__(self, key):
        return self.maps[key]


def sphere_name(name: str, level: int) -> str:
    return f"s{level}{name}"


def loop_name(name: str) -> str:
    return f"s{name}"


def _require_connected(m: SullivanModel, j: int, what: str):
    if not check_k_connected(m, j):
        low = [g.name for g in m.generators if g.degree <= j]
        raise ModelError(f"{what} needs a {j}-connected model; generators {low} have degree <= {j}")


def build_path_model(m: SullivanModel) -> MappingSpaceModel:
    """M(I) = ΛV⊗ΛV⊗ΛsV with
    d(sv) = 1⊗v - v⊗1 - Σ_{i>=1} (s∘d)^i/i! (v⊗1),
    where s(v⊗1) = s(1⊗v) = sv and s(sv) = 0."""
    _require_connected(m, 1, "the path model")
    V = m.generators
    left = {g.name: f"{g.name}1" for g in V}
    right = {g.name: f"{g.name}2" for g in V}
    susp = {g.name: loop_name(g.name) for g in V}
    gens = ([Generator(left[g.name], g.degree) for g in V]
            + [Generator(right[g.name], g.degree) for g in V]
            + [g.suspend(1, susp[g.name]) for g in V])
    A = FreeGCA(gens)
    inc_l = by_name(m.algebra, A, left, name="incl_left")
    inc_r = by_name(m.algebra, A, right, name="incl_right")
    d_images: Dict[str, Element] = {}
    for g in V:
        d_images[left[g.name]] = inc_l(m.dgen(g.name))
        d_images[right[g.name]] = inc_r(m.dgen(g.name))
    s_images = {}
    for g in V:
        sv = A.gen(susp[g.name])
        s_images[left[g.name]] = sv
        s_images[right[g.name]] = sv
        s_images[susp[g.name]] = A.zero()
    s = Derivation(A, -1, s_images)
    for name in m.sullivan_order():
        d = Derivation(A, 1, d_images)
        term = A.gen(left[name])
        series = A.zero()
        i = 0
        while True:
            i += 1
            if i > MAX_SERIES_TERMS:
                raise ModelError(f"path-model series for {name!r} does not terminate")
            term = s(d(term))
            if not term:
                break
            series = series + term / math.factorial(i)
        d_images[susp[name]] = A.gen(right[name]) - A.gen(left[name]) - series
    model = SullivanModel(A, d_images, name=f"M(I) of {m.name}".strip())
    eps_images = {}
    for g in V:
        eps_images[left[g.name]] = m.gen(g.name)
        eps_images[right[g.name]] = m.gen(g.name)
        eps_images[susp[g.name]] = 0
    eps = AlgebraMorphism(A, m.algebra, eps_images, name="epsilon_bar")
    for f, src, tgt in ((eps, model, m), (inc_l, m, model), (inc_r, m, model)):
        check_chain_map(f, src, tgt)
    return MappingSpaceModel(model, {"epsilon_bar": eps, "incl_left": inc_l, "incl_right": inc_r},
                             {"s": s}, {"base": m, "left": left, "right": right, "susp": susp})


def build_sphere_model(m: SullivanModel, j: int, loop: bool = False) -> MappingSpaceModel:
    """M(S^j) = ΛV⊗Λs^jV with d(s^j v) = (-1)^j s^{(j)}(dv).

    ``loop=True`` names the suspensions ``sv`` (circle factor of the torus);
    it requires ``j == 1``.
    """
    if j < 1:
        raise ModelError(f"sphere dimension must be >= 1, got {j}")
    if loop and j != 1:
        raise ModelError("loop naming is only for the circle")
    _require_connected(m, j, f"the S^{j} model")
    V = m.generators
    susp = {g.name: (loop_name(g.name) if loop else sphere_name(g.name, j)) for g in V}
    A = FreeGCA(list(V) + [g.suspend(j, susp[g.name]) for g in V])
    inc = by_name(m.algebra, A, name="incl_base")
    sj = Derivation(A, -j, {**{g.name: A.gen(susp[g.name]) for g in V},
                            **{susp[g.name]: A.zero() for g in V}})
    sign = -1 if j % 2 else 1
    d = {g.name: inc(m.dgen(g.name)) for g in V}
    for g in V:
        d[susp[g.name]] = sign * sj(inc(m.dgen(g.name)))
    model = SullivanModel(A, d, name=f"M(S^{j}) of {m.name}".strip())
    eps = by_name(A, m.algebra, {susp[g.name]: 0 for g in V}, name="epsilon")
    check_chain_map(eps, model, m)
    check_chain_map(inc, m, model)
    return MappingSpaceModel(model, {"epsilon": eps, "incl_base": inc}, {"s": sj},
                             {"base": m, "susp": susp, "level": j})


def build_disk_model(m: SullivanModel, k: int) -> MappingSpaceModel:
    """M(D^k) = ΛV⊗Λs^{k-1}V⊗Λs^kV with
    d(s^k v) = s^{k-1}v + (-1)^k s^{(k)}(dv)."""
    if k < 2:
        raise ModelError("disk model needs k >= 2")
    _require_connected(m, k, f"the D^{k} model")
    sphere = build_sphere_model(m, k - 1)
    S = sphere.model
    V = m.generators
    top = {g.name: sphere_name(g.name, k) for g in V}
    A = FreeGCA(list(S.generators) + [g.suspend(k, top[g.name]) for g in V])
    inc_s = by_name(S.algebra, A, name="incl_sphere")
    sk = Derivation(A, -k, {**{g.name: A.gen(top[g.name]) for g in V},
                            **{n: A.zero() for n in A.names if n not in m.algebra}})
    sign = -1 if k % 2 else 1
    d = {n: inc_s(S.dgen(n)) for n in S.algebra.names}
    for g in V:
        d[top[g.name]] = A.gen(sphere.parts["susp"][g.name]) + sign * sk(transport(m.dgen(g.name), A))
    model = SullivanModel(A, d, name=f"M(D^{k}) of {m.name}".strip())
    eps = AlgebraMorphism(A, m.algebra, {n: (m.gen(n) if n in m.algebra else 0) for n in A.names},
                          name="epsilon_tilde")
    check_chain_map(eps, model, m)
    check_chain_map(inc_s, S, model)
    return MappingSpaceModel(model, {"epsilon_tilde": eps, "incl_sphere": inc_s}, {"s_k": sk},
                             {"base": m, "sphere": sphere, "low": sphere.parts["susp"], "top": top, "k": k})


def build_torus_model(m: SullivanModel, k: int) -> MappingSpaceModel:
    """M(T^{(k)}): the circle construction applied to M(S^{k-1})."""
    if k < 2:
        raise ModelError("torus model needs k >= 2")
    _require_connected(m, k, f"the T^({k}) model")
    sphere = build_sphere_model(m, k - 1)
    torus = build_sphere_model(sphere.model, 1, loop=True)
    torus.model.name = f"M(T^({k})) of {m.name}".strip()
    return MappingSpaceModel(torus.model,
                             {"incl_sphere": torus.maps["incl_base"], "restrict": torus.maps["epsilon"]},
                             {"s": torus.derivations["s"]},
                             {"base": m, "sphere": sphere, "k": k,
                              "low": sphere.parts["susp"], "loop": torus.parts["susp"]})


def build_collapse_model(m: SullivanModel, k: int,
                         torus: Optional[MappingSpaceModel] = None) -> MappingSpaceModel:
    """M(U^{(k)}) = M(S^k) ⊗_{ΛV} M(S^1), together with

    * ``incl``: M(S^k) -> M(U),
    * ``to_quotient``/``from_quotient``: the isomorphism with
      M(T^{(k)}) / (s^{k-1}V) sending s^k v to s s^{k-1}v,
    * ``comp``: M(T^{(k)}) -> M(U), the quotient followed by that iso.
    """
    if k < 2:
        raise ModelError("collapse model needs k >= 2")
    sk = build_sphere_model(m, k)
    circle = build_sphere_model(m, 1, loop=True)
    U, inc_sk, inc_circle = tensor_amalgamated(sk.model, circle.model, m.algebra,
                                               name=f"M(U^({k})) of {m.name}".strip())
    if torus is None:
        torus = build_torus_model(m, k)
    T = torus.model
    low, loop = torus.parts["low"], torus.parts["loop"]
    Q, proj = quotient_by_generators(T, [low[g.name] for g in m.generators],
                                     name=f"M(T^({k}))/s^{k - 1}V of {m.name}".strip())
    top = sk.parts["susp"]
    q_to_u = {loop[low[g.name]]: top[g.name] for g in m.generators}
    u_to_q = {v: k_ for k_, v in q_to_u.items()}
    from_q = by_name(Q.algebra, U.algebra, q_to_u, name="from_quotient")
    to_q = by_name(U.algebra, Q.algebra, u_to_q, name="to_quotient")
    comp = compose(from_q, proj, name="comp")
    for f, src, tgt in ((inc_sk, sk.model, U), (inc_circle, circle.model, U), (from_q, Q, U),
                        (to_q, U, Q), (comp, T, U)):
        check_chain_map(f, src, tgt)
    return MappingSpaceModel(U, {"incl": inc_sk, "incl_circle": inc_circle, "from_quotient": from_q,
                                 "to_quotient": to_q, "comp": comp, "projection": proj},
                             {}, {"base": m, "sphere_k": sk, "circle": circle, "torus": torus,
                                  "quotient": Q, "k": k})
