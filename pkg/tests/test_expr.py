import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpscoh.chenruan import CrRing
from wpscoh.expr import (
    Add,
    EvalError,
    Lit,
    Mul,
    Neg,
    ParseError,
    Pow,
    Sub,
    Sym,
    evaluate,
    parse,
    unparse,
)
from wpscoh.kawasaki import KawasakiRing
from wpscoh.orbifold import OrbifoldRing

B = (1, 2, 2, 3, 3, 3)


def test_parse_examples():
    assert parse("a2*a3 + u^2") == Add(Mul(Sym("a2"), Sym("a3")), Pow(Sym("u"), 2))
    assert parse("2*(a4 - 1)") == Mul(Lit(2), Sub(Sym("a4"), Lit(1)))
    assert parse("  g1 *g2  ") == Mul(Sym("g1"), Sym("g2"))


def test_parse_precedence():
    # ^ binds over unary minus over * over +
    assert parse("-u^2") == Neg(Pow(Sym("u"), 2))
    assert parse("-u*a1") == Mul(Neg(Sym("u")), Sym("a1"))
    assert parse("1+2*3") == Add(Lit(1), Mul(Lit(2), Lit(3)))
    assert parse("a1*a2*a3") == Mul(Mul(Sym("a1"), Sym("a2")), Sym("a3"))
    assert parse("1-2-3") == Sub(Sub(Lit(1), Lit(2)), Lit(3))


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse("u^^2")
    assert err.value.position == 2

    with pytest.raises(ParseError) as err:
        parse("u^2^3")
    assert err.value.position == 3

    with pytest.raises(ParseError) as err:
        parse("u + %")
    assert err.value.position == 4

    with pytest.raises(ParseError):
        parse("a")  # bare sector letter needs digits

    with pytest.raises(ParseError):
        parse("(u")

    with pytest.raises(ParseError):
        parse("")

    with pytest.raises(ParseError):
        parse("u u")

    with pytest.raises(ParseError):
        parse("u^a2")  # exponents must be literal naturals


def test_unparse_round_trip_examples():
    for text in [
        "a2*a3 + u^2",
        "2*(a4 - 1)",
        "-u^2",
        "-(u*a1)",
        "1 - (2 - 3)",
        "(a1 + a2)*a3",
        "u^0",
        "--u",
    ]:
        tree = parse(text)
        assert parse(unparse(tree)) == tree


_leaf = st.one_of(
    st.integers(0, 9).map(Lit),
    st.sampled_from(["u", "a1", "a2", "g1"]).map(Sym),
)


def _exprs(children):
    return st.one_of(
        st.tuples(children, children).map(lambda p: Add(*p)),
        st.tuples(children, children).map(lambda p: Sub(*p)),
        st.tuples(children, children).map(lambda p: Mul(*p)),
        children.map(Neg),
        st.tuples(children, st.integers(0, 4)).map(lambda p: Pow(*p)),
    )


expr_trees = st.recursive(_leaf, _exprs, max_leaves=12)


@given(expr_trees)
@settings(max_examples=300)
def test_unparse_parse_fixpoint(tree):
    assert parse(unparse(tree)) == tree


def test_evaluate_in_sector_ring():
    ring = CrRing(B)
    assert evaluate(parse("a2*a3"), ring).is_zero
    assert evaluate(parse("a2*a2"), ring) == ring.element({4: {2: 4}})
    lhs = evaluate(parse("(a4*a4)*a4"), ring)
    rhs = evaluate(parse("a4*(a4*a4)"), ring)
    assert lhs == rhs
    assert evaluate(parse("a0"), ring) == ring.one()
    assert evaluate(parse("u^3 + 2"), ring) == ring.u(3) + ring.from_int(2)


def test_evaluate_in_other_rings():
    kaw = KawasakiRing(B)
    assert evaluate(parse("g1*g1"), kaw) == kaw.gamma(2)
    assert evaluate(parse("g0"), kaw) == kaw.one()
    orb = OrbifoldRing((1, 2))
    assert evaluate(parse("2*u^2"), orb).is_zero
    assert evaluate(parse("-3"), orb) == orb.from_int(-3)


def test_evaluate_rejects_foreign_symbols():
    ring = CrRing(B)
    with pytest.raises(EvalError):
        evaluate(parse("a7"), ring)  # sector index out of range
    with pytest.raises(EvalError):
        evaluate(parse("g1"), ring)
    kaw = KawasakiRing(B)
    with pytest.raises(EvalError):
        evaluate(parse("u"), kaw)
    with pytest.raises(EvalError):
        evaluate(parse("g9"), kaw)
    orb = OrbifoldRing(B)
    with pytest.raises(EvalError):
        evaluate(parse("a1"), orb)


small_trees = st.recursive(
    st.one_of(st.integers(0, 5).map(Lit), st.sampled_from(["u", "a1", "a2"]).map(Sym)),
    _exprs,
    max_leaves=6,
)


@given(small_trees, small_trees)
@settings(max_examples=120, deadline=None)
def test_evaluate_is_a_homomorphism(x, y):
    ring = CrRing((1, 2, 3))
    vx = evaluate(x, ring)
    vy = evaluate(y, ring)
    assert evaluate(Add(x, y), ring) == vx + vy
    assert evaluate(Sub(x, y), ring) == vx - vy
    assert evaluate(Mul(x, y), ring) == vx * vy
    assert evaluate(Neg(x), ring) == -vx
    assert evaluate(Pow(x, 2), ring) == vx * vx
