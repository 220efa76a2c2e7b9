"""Degree-wise integral cohomology of a product of two weighted
projective orbifolds.

For finitely generated torsion groups the short exact sequence splits,
so the degree-d group is the direct sum of the tensor terms at i+j = d
and the Tor terms at i+j = d+1.  Both factors are torsion-free below
the top dimension but carry Z/N in every even degree above it, so the
Tor terms produce torsion in odd degrees of the product, something no
single weighted projective orbifold has.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import GradedGroups, direct_sum_all
from .orbifold import OrbifoldRing


@dataclass(frozen=True)
class ProductGroups:
    """Degree-wise groups of a product of two orbifold rings."""

    factor_a: OrbifoldRing
    factor_b: OrbifoldRing
    groups: GradedGroups


def product_groups(a, b, max_degree: int) -> ProductGroups:
    """Cohomology groups of the product orbifold up to max_degree.

    >>> pg = product_groups((1, 1), (1, 1), 4)
    >>> print(pg.groups.group(2))
    Z^2
    >>> print(pg.groups.group(3))
    0
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    ra, rb = OrbifoldRing(a), OrbifoldRing(b)
    table = {}
    for d in range(max_degree + 1):
        summands = [
            ra.group_at_degree(i).tensor(rb.group_at_degree(d - i)) for i in range(d + 1)
        ]
        summands += [
            ra.group_at_degree(i).tor(rb.group_at_degree(d + 1 - i)) for i in range(d + 2)
        ]
        table[d] = direct_sum_all(summands)
    return ProductGroups(ra, rb, GradedGroups(max_degree, table))


def odd_torsion_witness(a, b, max_degree: int):
    """Smallest odd degree <= max_degree with a nonzero group, or None.

    >>> odd_torsion_witness((1, 2), (1, 2), 9)
    7
    >>> odd_torsion_witness((1, 1), (1, 1), 9) is None
    True
    """
    pg = product_groups(a, b, max_degree)
    for d in range(1, max_degree + 1, 2):
        if not pg.groups.group(d).is_zero:
            return d
    return None
