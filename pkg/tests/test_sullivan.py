import pytest
from hypothesis import given, strategies as st

from branecalc.algebra import AlgebraMorphism, Generator
from branecalc.sullivan import (
    ModelError,
    SullivanModel,
    check_chain_map,
    check_k_connected,
    check_pure,
    is_minimal,
    make_model,
    quotient_by_generators,
    rename_model,
    submodel,
    tensor_amalgamated,
)

from models import CORPUS, elements, model


def test_square_zero_rejected():
    gens = [Generator("x", 2), Generator("y", 3), Generator("z", 4)]
    with pytest.raises(ModelError):
        make_model(gens, {"y": lambda A: A.gen("x") ** 2, "z": lambda A: A.gen("x") * A.gen("y")})


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_models_are_pure_and_minimal(name):
    m = model(name)
    assert check_pure(m) == (True, None)
    assert is_minimal(m)


def test_impure_model_witness():
    gens = [Generator("a", 3), Generator("b", 5), Generator("c", 7)]
    m = make_model(gens, {"c": lambda A: A.gen("a") * A.gen("b")})
    assert check_pure(m) == (False, "c")


def test_nonzero_even_differential_is_impure():
    gens = [Generator("f", 4), Generator("g", 5)]
    m = make_model(gens, {"f": lambda A: A.gen("g")})
    assert check_pure(m) == (False, "f")


def test_linear_differential_is_not_minimal():
    gens = [Generator("f", 4), Generator("g", 5)]
    assert not is_minimal(make_model(gens, {"f": lambda A: A.gen("g")}))
    assert is_minimal(model("S4"))


def test_connectivity_examples():
    assert check_k_connected(model("Lx4"), 2)
    assert not check_k_connected(model("Lx4"), 4)
    assert check_k_connected(model("S4"), 3)


def test_sullivan_order_and_cycles():
    m = model("S4")
    assert m.sullivan_order() == ["x", "y"]
    A_gens = [Generator("a", 3), Generator("b", 4)]
    m = make_model(A_gens, {"b": lambda A: 0})
    assert set(m.sullivan_order()) == {"a", "b"}


def test_default_truncation():
    assert model("S4").default_truncation() == 18
    assert model("S4xS6").default_truncation() == 26


def test_self_amalgamation_is_identity():
    m = model("S4")
    t, inc_a, inc_b = tensor_amalgamated(m, m, m.algebra)
    assert t.algebra.names == m.algebra.names
    for n in m.algebra.names:
        assert inc_a.image(n) == t.gen(n) == inc_b.image(n)


def test_amalgamation_rejects_clash_and_degree_conflict():
    a = make_model([Generator("x", 4), Generator("u", 3)], {})
    b = make_model([Generator("x", 4), Generator("u", 3)], {})
    base = make_model([Generator("x", 4)], {})
    with pytest.raises(ModelError):
        tensor_amalgamated(a, b, base)
    c = make_model([Generator("x", 6)], {})
    with pytest.raises(ModelError):
        tensor_amalgamated(a, c, c)


def test_quotient_by_nothing_is_identity():
    m = model("S4")
    q, proj = quotient_by_generators(m, [])
    assert q.algebra.names == m.algebra.names
    assert proj(m.gen("y")) == q.gen("y")


def test_incompatible_quotient_rejected():
    m = make_model([Generator("x", 4), Generator("y", 7)], {"y": lambda A: A.gen("x") ** 2})
    with pytest.raises(ModelError):
        quotient_by_generators(m, ["y"])


def test_rename_and_submodel():
    m = model("S4")
    r, iso = rename_model(m, {"x": "u"})
    assert r.dgen("y") == r.gen("u") ** 2
    check_chain_map(iso, m, r)
    sub = submodel(m, ["x"])
    assert sub.algebra.names == ("x",)
    with pytest.raises(ModelError):
        submodel(m, ["y"])


def test_chain_map_check_reports_generator():
    m = model("S4")
    bad = AlgebraMorphism(m.algebra, m.algebra, {"x": 2 * m.gen("x"), "y": m.gen("y")})
    with pytest.raises(ModelError, match="'y'"):
        check_chain_map(bad, m, m)


@given(st.data())
def test_d_squared_zero_on_random_elements(data):
    m = model(data.draw(st.sampled_from(CORPUS)))
    a = data.draw(elements(m.algebra, data.draw(st.integers(0, 30))))
    assert not m.d(m.d(a))


@given(st.data())
def test_d_is_a_derivation(data):
    m = model(data.draw(st.sampled_from(CORPUS)))
    p = data.draw(st.integers(0, 20))
    a = data.draw(elements(m.algebra, p))
    b = data.draw(elements(m.algebra, data.draw(st.integers(0, 20))))
    assert m.d(a * b) == m.d(a) * b + (-1) ** p * (a * m.d(b))


def test_model_from_derivation_requires_degree_one():
    m = model("S4")
    with pytest.raises(ModelError):
        SullivanModel(m.algebra, m.differential.__class__(m.algebra, 3, {"x": m.algebra.zero(), "y": m.algebra.zero()}))
