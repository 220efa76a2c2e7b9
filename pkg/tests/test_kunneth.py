import math

from hypothesis import given, settings
from hypothesis import strategies as st

from wpscoh.abelian import FgAbGroup
from wpscoh.kunneth import odd_torsion_witness, product_groups

weight_vectors = st.lists(st.integers(1, 6), min_size=1, max_size=4)


# -- independent oracle -------------------------------------------------------
# Groups are plain summand lists: 0 means an infinite cyclic summand.
# Built from the closed form of the factor groups, with its own tensor
# and Tor rules for cyclic summands.


def oracle_factor(b, degree):
    n = len(b) - 1
    if degree % 2 or degree < 0:
        return []
    total = math.prod(b)
    return [0] if degree // 2 <= n else [total]


def oracle_tensor(xs, ys):
    out = []
    for x in xs:
        for y in ys:
            out.append(y if x == 0 else (x if y == 0 else math.gcd(x, y)))
    return out


def oracle_tor(xs, ys):
    return [math.gcd(x, y) for x in xs for y in ys if x != 0 and y != 0]


def oracle_product_group(a, b, degree):
    summands = []
    for i in range(degree + 1):
        summands += oracle_tensor(oracle_factor(a, i), oracle_factor(b, degree - i))
    for i in range(degree + 2):
        summands += oracle_tor(oracle_factor(a, i), oracle_factor(b, degree + 1 - i))
    return FgAbGroup(0, summands)


# -- tests ----------------------------------------------------------------------


def test_oracle_agrees_with_engine_up_to_12():
    pg = product_groups((1, 2), (1, 2), 12)
    for d in range(13):
        assert pg.groups.group(d) == oracle_product_group((1, 2), (1, 2), d), d


def test_first_odd_torsion_degree():
    witness = odd_torsion_witness((1, 2), (1, 2), 9)
    assert witness == 7
    group = product_groups((1, 2), (1, 2), 9).groups.group(7)
    assert group == FgAbGroup(0, [2])


def test_no_odd_torsion_for_torsion_free_factors():
    assert odd_torsion_witness((1, 1), (1, 1), 15) is None
    assert odd_torsion_witness((1, 2), (1, 1), 15) is None


def test_degree_zero_is_z():
    assert product_groups((1, 2), (3, 4, 5), 0).groups.group(0) == FgAbGroup(1)


def test_point_factor_recovers_the_other_side():
    pg = product_groups((1,), (1, 2), 10)
    single = product_groups((1, 2), (1,), 10)
    from wpscoh.orbifold import OrbifoldRing

    factor = OrbifoldRing((1, 2))
    for d in range(11):
        assert pg.groups.group(d) == factor.group_at_degree(d)
        assert single.groups.group(d) == factor.group_at_degree(d)


@given(weight_vectors, weight_vectors)
@settings(max_examples=30, deadline=None)
def test_symmetry(a, b):
    lhs = product_groups(a, b, 10)
    rhs = product_groups(b, a, 10)
    for d in range(11):
        assert lhs.groups.group(d) == rhs.groups.group(d)


@given(weight_vectors, weight_vectors)
@settings(max_examples=30, deadline=None)
def test_odd_degrees_are_pure_torsion(a, b):
    pg = product_groups(a, b, 11)
    for d in range(1, 12, 2):
        assert pg.groups.group(d).free_rank == 0


@given(weight_vectors, weight_vectors)
@settings(max_examples=20, deadline=None)
def test_oracle_agreement_property(a, b):
    pg = product_groups(a, b, 8)
    for d in range(9):
        assert pg.groups.group(d) == oracle_product_group(a, b, d)
