import pytest
from hypothesis import given, strategies as st

from branecalc.algebra import AlgebraError, ModuleMorphism, by_name, identity
from branecalc.cohomology import (
    LiftError,
    cocycle_basis,
    cohomology_class_equal,
    cohomology_dims,
    hom_cocycle_defect,
    hom_differential,
    is_coboundary,
    is_cocycle,
    lift_through_surjection,
)
from branecalc.mapping_spaces import build_disk_model, build_path_model, build_sphere_model, build_torus_model
from branecalc.sullivan import make_model, rename_model
from branecalc.algebra import Generator

from models import CORPUS, elements, model
from oracles import dense_cohomology


def test_dims_examples():
    assert cohomology_dims(model("Lx4"), 8) == [1, 0, 0, 0, 1, 0, 0, 0, 1]
    assert cohomology_dims(model("S4"), 8) == [1, 0, 0, 0, 1, 0, 0, 0, 0]
    assert cohomology_dims(model("Lx4"), 0) == [1]


def test_disk_cohomology_matches_base():
    D = build_disk_model(model("Lx4"), 2)
    assert cohomology_dims(D.model, 8) == [1, 0, 0, 0, 1, 0, 0, 0, 1]


@pytest.mark.parametrize("name", CORPUS)
def test_dims_match_dense_oracle(name):
    m = model(name)
    assert cohomology_dims(m, 16) == dense_cohomology(m, 16)


@pytest.mark.parametrize("name", ["S4", "L46"])
def test_dims_of_built_models_match_dense_oracle(name):
    m = model(name)
    for built in (build_path_model(m).model, build_torus_model(m, 2).model):
        assert cohomology_dims(built, 12) == dense_cohomology(built, 12)


def test_sphere_product_cohomology():
    # S^4 x S^6: classes in degrees 0, 4, 6, 10
    dims = cohomology_dims(model("S4xS6"), 14)
    assert [n for n, d in enumerate(dims) if d] == [0, 4, 6, 10]
    assert all(d <= 1 for d in dims)


@pytest.mark.parametrize("name", CORPUS)
def test_dims_invariant_under_generator_reordering(name):
    m = model(name)
    gens = list(reversed(m.generators))
    d = {g.name: (lambda A, n=g.name: by_name(m.algebra, A)(m.dgen(n))) for g in gens}
    r = make_model([Generator(g.name, g.degree) for g in gens], d)
    assert cohomology_dims(r, 20) == cohomology_dims(m, 20)


def test_cocycle_examples():
    m = model("S4")
    assert is_cocycle(m.algebra.one(), m)
    T = build_torus_model(model("Lx4"), 2)
    assert is_cocycle(T.algebra.gen("s1x"), T.model)
    S = build_sphere_model(m, 1)
    assert not is_cocycle(S.algebra.gen("s1y"), S.model)


def test_coboundary_examples():
    T = build_torus_model(model("Lx4"), 2)
    assert is_coboundary(T.algebra.zero(), T.model) == (True, T.algebra.zero())
    assert is_coboundary(T.algebra.gen("s1x"), T.model) == (False, None)
    assert is_coboundary(T.algebra.one(), T.model) == (False, None)


def test_coboundary_requires_cocycle():
    m = model("S4")
    with pytest.raises(AlgebraError):
        is_coboundary(m.gen("y"), m)


@given(st.data())
def test_coboundary_round_trip(data):
    m = model(data.draw(st.sampled_from(["S4", "S6", "S4xS6"])))
    n = data.draw(st.integers(1, 24))
    z = data.draw(elements(m.algebra, n - 1))
    a = m.d(z)
    ok, w = is_coboundary(a, m)
    assert ok
    assert m.d(w) == a


def test_cocycle_basis_spans_kernel():
    m = model("S4")
    basis = cocycle_basis(m, 8)
    assert len(basis) == 1
    assert basis[0] == m.gen("x") ** 2
    assert cohomology_class_equal(m.gen("x") ** 2, m.algebra.zero(), m)
    assert not cohomology_class_equal(m.gen("x"), m.algebra.zero(), m)


def test_hom_differential_of_zero_map():
    D = build_disk_model(model("Lx4"), 2)
    S = D.parts["sphere"].model
    zero = ModuleMorphism(D.algebra, S.algebra, S.algebra.names, {}, 3, default_zero=True)
    Dz = hom_differential(zero, D.model, S, 10)
    assert all(not v for v in Dz.images.values())
    assert Dz.degree == 4


def test_hom_differential_detects_non_cocycle():
    D = build_disk_model(model("Lx4"), 2)
    S = D.parts["sphere"].model
    # f(1) = x, zero elsewhere: D(f)(s2x) = -f(d s2x) = -f(s1x) = -s1x x
    f = ModuleMorphism(D.algebra, S.algebra, S.algebra.names, {(): S.algebra.gen("x")}, 4, default_zero=True)
    key, value = hom_cocycle_defect(f, D.model, S, 6)
    assert key == (("s2x", 1),)
    assert value == -S.algebra.gen("x") * S.algebra.gen("s1x")


def test_lift_of_identity_surjection_is_the_map():
    m = model("S4")
    f = by_name(m.algebra, m.algebra)
    phi = lift_through_surjection(identity(m.algebra), f, m, m)
    assert all(phi.image(n) == f.image(n) for n in m.algebra.names)


def test_lift_reports_failure():
    # p kills everything, so no lift of the identity exists
    m = model("Lx4")
    D = build_disk_model(m, 2)
    zero = make_model([Generator("x", 4)], {})
    p = by_name(D.algebra, zero.algebra, {"x": 0, "s1x": 0, "s2x": 0})
    with pytest.raises(LiftError):
        lift_through_surjection(p, identity(zero.algebra), D.model, zero)


def test_lift_through_path_projection():
    m = model("S4")
    P = build_path_model(m)
    lifted = lift_through_surjection(P["epsilon_bar"], identity(m.algebra), P.model, m)
    for n in m.algebra.names:
        assert P["epsilon_bar"](lifted.image(n)) == m.gen(n)
        assert lifted(m.dgen(n)) == P.model.d(lifted.image(n))


def test_rename_preserves_dims():
    m = model("S4xS6")
    r, _ = rename_model(m, {"x": "a", "y": "b"})
    assert cohomology_dims(r, 20) == cohomology_dims(m, 20)
