"""Finitely generated abelian groups in invariant-factor form.

A group is stored as a free rank together with torsion coefficients
d_1 | d_2 | ... | d_r (each >= 2).  That form is unique, so equality of
groups is equality of fields.  Canonicalisation works by pairwise
gcd/lcm absorption, using Z/a + Z/b = Z/gcd(a,b) + Z/lcm(a,b); no
factorisation and no matrix normal forms are needed.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _invariant_factors(orders) -> tuple[int, ...]:
    """Canonical divisibility chain for a multiset of cyclic orders.

    >>> _invariant_factors([2, 3])
    (6,)
    >>> _invariant_factors([30, 4])
    (2, 60)
    >>> _invariant_factors([])
    ()
    """
    factors = [d for d in orders if d > 1]
    # Each absorption strictly increases the total sum (gcd+lcm >= a+b,
    # equal only when one divides the other), and the sum is bounded, so
    # this terminates.
    changed = True
    while changed:
        changed = False
        factors.sort()
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if b % a:
                    factors[i] = math.gcd(a, b)
                    factors[j] = math.lcm(a, b)
                    changed = True
        factors = [d for d in factors if d > 1]
    factors.sort()
    return tuple(factors)


class FgAbGroup:
    """A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k.

    Construct from a free rank and any list of cyclic orders; the orders
    are canonicalised to the invariant-factor chain.  An order of 0 is
    accepted as another free summand, 1 as the trivial summand.

    >>> FgAbGroup(0, [2, 3])
    FgAbGroup(0, (6,))
    >>> FgAbGroup(1, [2, 4])
    FgAbGroup(1, (2, 4))
    >>> print(FgAbGroup(0, [0, 1, 12, 18]))
    Z + Z/6 + Z/36
    >>> FgAbGroup(0, []).is_zero
    True
    """

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank: int = 0, torsion=()):
        if not isinstance(free_rank, int) or free_rank < 0:
            raise ValueError(f"free rank must be a non-negative integer, got {free_rank!r}")
        orders = []
        for d in torsion:
            if not isinstance(d, int) or d < 0:
                raise ValueError(f"cyclic orders must be non-negative integers, got {d!r}")
            if d == 0:
                free_rank += 1
            else:
                orders.append(d)
        self.free_rank = free_rank
        self.torsion = _invariant_factors(orders)

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def tensor(self, other: "FgAbGroup") -> "FgAbGroup":
        """Tensor product over Z.

        Z tensor Z/a = Z/a and Z/a tensor Z/b = Z/gcd(a,b), extended
        bilinearly over direct sums.

        >>> Z = FgAbGroup(1)
        >>> print(Z.tensor(FgAbGroup(0, [4])))
        Z/4
        >>> print(FgAbGroup(0, [2]).tensor(FgAbGroup(0, [3])))
        0
        >>> print(FgAbGroup(1, [2]).tensor(FgAbGroup(1, [2])))
        Z + Z/2 + Z/2 + Z/2
        """
        orders = list(other.torsion) * self.free_rank
        orders += list(self.torsion) * other.free_rank
        orders += [math.gcd(a, b) for a in self.torsion for b in other.torsion]
        return FgAbGroup(self.free_rank * other.free_rank, orders)

    def tor(self, other: "FgAbGroup") -> "FgAbGroup":
        """Torsion product: Tor(Z, -) = 0, Tor(Z/a, Z/b) = Z/gcd(a,b).

        >>> print(FgAbGroup(1).tor(FgAbGroup(0, [12])))
        0
        >>> print(FgAbGroup(0, [4]).tor(FgAbGroup(0, [6])))
        Z/2
        """
        return FgAbGroup(0, [math.gcd(a, b) for a in self.torsion for b in other.torsion])

    def direct_sum(self, other: "FgAbGroup") -> "FgAbGroup":
        """Direct sum, re-canonicalised.

        >>> print(FgAbGroup(0, [2]).direct_sum(FgAbGroup(0, [3])))
        Z/6
        """
        return FgAbGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __eq__(self, other):
        if isinstance(other, FgAbGroup):
            return self.free_rank == other.free_rank and self.torsion == other.torsion
        return NotImplemented

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        return f"FgAbGroup({self.free_rank}, {self.torsion})"

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def direct_sum_all(groups) -> FgAbGroup:
    """Direct sum of any number of groups (empty sum is the zero group)."""
    total = FgAbGroup()
    for g in groups:
        total = total.direct_sum(g)
    return total


def cyclic(d: int) -> FgAbGroup:
    """The cyclic group Z/d (d = 0 gives Z, d = 1 gives 0)."""
    return FgAbGroup(0, [d])


ZERO = FgAbGroup()
Z = FgAbGroup(1)


class GradedGroups:
    """Degree-indexed abelian groups, complete up to a stated bound.

    Degrees absent from the table but not exceeding ``max_degree`` are
    the zero group; degrees beyond the bound were never computed and
    asking for them is an error.
    """

    __slots__ = ("max_degree", "_groups")

    def __init__(self, max_degree, groups=None):
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        self.max_degree = max_degree
        self._groups = {}
        for d, g in (groups or {}).items():
            if not g.is_zero:
                self._groups[d] = g

    def group(self, degree) -> FgAbGroup:
        if degree > self.max_degree:
            raise ValueError(f"degree {degree} exceeds the computed bound {self.max_degree}")
        if degree < 0:
            return ZERO
        return self._groups.get(degree, ZERO)

    def items(self):
        """Nonzero (degree, group) pairs, sorted by degree."""
        return sorted(self._groups.items())

    def to_json(self) -> list:
        return [
            {"degree": _degree_json(d), "group": g.to_json()} for d, g in self.items()
        ]

    def __eq__(self, other):
        if isinstance(other, GradedGroups):
            return self.max_degree == other.max_degree and self._groups == other._groups
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{d}: {g}" for d, g in self.items())
        return f"GradedGroups(max_degree={self.max_degree}, {{{body}}})"


def _degree_json(d):
    """Integral degrees serialise as ints, fractional ones as 'p/q' strings."""
    if isinstance(d, Fraction):
        return int(d) if d.denominator == 1 else str(d)
    return d
