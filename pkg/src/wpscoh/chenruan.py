"""The inertia-sector cohomology ring of a weighted projective orbifold,
with integer coefficients.

Sectors are indexed by j in {0, ..., ell-1}, one for each ell-th root of
unity, where ell = lcm of the weights.  Sector j carries the rotation
numbers a_k(j) = frac(b_k j / ell), the coordinates it fixes, the Euler
coefficient c_j (product of the fixed weights) with exponent d_j (their
count), and a rational degree shift 2 * sum_k a_k(j).

The ring is generated over Z by a degree-2 class u and one placeholder
generator per sector.  Generator products twist into the sector [i+j]
with an integer monomial coefficient read off from the rotation numbers;
per sector, the single kernel relation c_j u^{d_j} = 0 reduces every
element to a normal form, namely coefficients in [0, c_j) at u-exponents
at or above d_j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .abelian import FgAbGroup, Z, cyclic, direct_sum_all
from .arith import as_weights


@dataclass(frozen=True)
class SectorData:
    """Fixed-point data for one root-of-unity sector.

    ``a`` lists the rotation numbers per coordinate; ``fixed`` the
    indices with rotation number zero; ``c`` and ``d`` the coefficient
    and u-exponent of the sector's Euler class; ``degree_shift`` twice
    the age.
    """

    j: int
    a: tuple[Fraction, ...]
    fixed: tuple[int, ...]
    c: int
    d: int
    degree_shift: Fraction


class CrRing:
    """Sector-graded cohomology ring with the twisted product.

    >>> R = CrRing((1, 2, 2, 3, 3, 3))
    >>> R.ell
    6
    >>> print(R.star_generators(2, 2))
    4u^2a4
    >>> print(R.star_generators(3, 4))
    0
    """

    __slots__ = ("weights", "ell", "sectors", "_rot")

    def __init__(self, weights):
        w = as_weights(weights)
        self.weights = w
        ell = w.ell
        self.ell = ell
        # integer rotation table: _rot[j][k] = (b_k * j) mod ell, the
        # numerator of a_k(j) over the common denominator ell
        self._rot = tuple(tuple((bk * j) % ell for bk in w.b) for j in range(ell))
        sectors = []
        for j in range(ell):
            nums = self._rot[j]
            fixed = tuple(k for k, t in enumerate(nums) if t == 0)
            c = math.prod(w.b[k] for k in fixed)
            sectors.append(
                SectorData(
                    j=j,
                    a=tuple(Fraction(t, ell) for t in nums),
                    fixed=fixed,
                    c=c,
                    d=len(fixed),
                    degree_shift=Fraction(2 * sum(nums), ell),
                )
            )
        self.sectors = tuple(sectors)

    def sector(self, j: int) -> SectorData:
        if not 0 <= j < self.ell:
            raise ValueError(f"sector index {j} out of range 0..{self.ell - 1}")
        return self.sectors[j]

    def is_zero_generator(self, j: int) -> bool:
        """True when the sector generator is already zero (empty fixed locus)."""
        s = self.sector(j)
        return s.c == 1 and s.d == 0

    def twisted_generator_indices(self) -> tuple[int, ...]:
        """Indices of the nonzero twisted-sector generators."""
        return tuple(j for j in range(1, self.ell) if not self.is_zero_generator(j))

    # -- elements -----------------------------------------------------------

    def element(self, parts: dict, reduce: bool = True) -> "CrElement":
        """Build an element from {sector: {u-exponent: coefficient}}.

        With ``reduce=False`` the parts are stored as given; only the
        kernel-relation emitter uses that, for display.
        """
        clean = {}
        for j, poly in parts.items():
            if not 0 <= j < self.ell:
                raise ValueError(f"sector index {j} out of range 0..{self.ell - 1}")
            q = {}
            for m, c in poly.items():
                if not isinstance(m, int) or m < 0:
                    raise ValueError(f"u-exponents must be non-negative integers, got {m!r}")
                if c:
                    q[m] = q.get(m, 0) + c
            q = {m: c for m, c in q.items() if c}
            if q:
                clean[j] = q
        if reduce:
            clean = self._reduce_parts(clean)
        return CrElement(self, clean)

    def _reduce_parts(self, parts: dict) -> dict:
        out = {}
        for j, poly in parts.items():
            s = self.sectors[j]
            q = {}
            for m, c in poly.items():
                if m >= s.d:
                    c %= s.c
                if c:
                    q[m] = c
            if q:
                out[j] = q
        return out

    def zero(self) -> "CrElement":
        return CrElement(self, {})

    def one(self) -> "CrElement":
        return self.from_int(1)

    def from_int(self, c: int) -> "CrElement":
        return self.element({0: {0: c}})

    def u(self, power: int = 1, coeff: int = 1) -> "CrElement":
        return self.element({0: {power: coeff}})

    def generator(self, j: int) -> "CrElement":
        """The sector-j placeholder generator, in normal form (may be zero)."""
        self.sector(j)
        return self.element({j: {0: 1}})

    # -- the twisted product ---------------------------------------------------

    def _raw_product(self, i: int, j: int) -> tuple[int, int, int]:
        """Unreduced structure constants of a generator product:
        (coefficient, u-power, target sector).

        Per coordinate, the rotation numbers of sectors i, j and i+j sum
        to an integer excess of 0 or 1; the coordinates with excess 1
        contribute their weight to the coefficient and one power of u.
        """
        ell = self.ell
        ri, rj, rt = self._rot[i], self._rot[j], self._rot[(i + j) % ell]
        coeff = 1
        power = 0
        for k, bk in enumerate(self.weights.b):
            t = ri[k] + rj[k] - rt[k]
            if t == ell:
                coeff *= bk
                power += 1
            elif t != 0:
                raise ArithmeticError(
                    f"rotation-number excess {Fraction(t, ell)} outside {{0,1}} "
                    f"at sectors ({i},{j}), coordinate {k}: arithmetic bug"
                )
        return coeff, power, (i + j) % ell

    def star_generators(self, i: int, j: int) -> "CrElement":
        """Product of the sector-i and sector-j generators, reduced."""
        self.sector(i)
        self.sector(j)
        coeff, power, target = self._raw_product(i, j)
        return self.element({target: {power: coeff}})

    def star(self, x: "CrElement", y: "CrElement") -> "CrElement":
        """Bilinear extension of the generator product; u-powers multiply
        straight through."""
        self._check_element(x)
        self._check_element(y)
        raw: dict = {}
        for i, pi in x.parts.items():
            for j, pj in y.parts.items():
                coeff, power, target = self._raw_product(i, j)
                bucket = raw.setdefault(target, {})
                for m1, c1 in pi.items():
                    for m2, c2 in pj.items():
                        m = m1 + m2 + power
                        bucket[m] = bucket.get(m, 0) + coeff * c1 * c2
        return self.element(raw)

    def _check_element(self, x):
        if not isinstance(x, CrElement) or x.ring.weights != self.weights:
            raise ValueError("element does not belong to this ring")

    # -- relations and presentation ---------------------------------------------

    def kernel_relation(self, j: int) -> "CrElement":
        """The sector-j kernel generator c_j u^{d_j} (times the sector
        generator), before reduction; its normal form is zero."""
        s = self.sector(j)
        return self.element({j: {s.d: s.c}}, reduce=False)

    def mult_table(self) -> dict:
        """Products of all nonzero twisted generators, keyed by (i, j), i <= j."""
        idx = self.twisted_generator_indices()
        return {(i, j): self.star_generators(i, j) for i in idx for j in idx if i <= j}

    def presentation(self) -> "CrPresentation":
        """Generators with degrees, kernel relations in sector order, and
        product relations in lexicographic order.

        Product relations where both sides already vanish are omitted.
        """
        gens = [("u", Fraction(2))]
        gens += [(f"a{j}", self.sectors[j].degree_shift) for j in range(1, self.ell)]
        kernel = tuple(
            KernelRelation(j, self.sectors[j].c, self.sectors[j].d, self.kernel_relation(j))
            for j in range(self.ell)
        )
        products = []
        for i in range(1, self.ell):
            for j in range(i, self.ell):
                rhs = self.star_generators(i, j)
                lhs_zero = self.is_zero_generator(i) or self.is_zero_generator(j)
                if lhs_zero and rhs.is_zero:
                    continue
                products.append(ProductRelation(i, j, rhs))
        return CrPresentation(tuple(gens), kernel, tuple(products))

    # -- grading ------------------------------------------------------------------

    def degree(self, x: "CrElement"):
        self._check_element(x)
        return x.degree()

    def graded_dimensions(self, max_degree) -> list:
        """Nonzero (degree, group) pairs up to max_degree, sorted.

        Sector j contributes Z at degree shift_j + 2m while m < d_j and
        Z/c_j once m >= d_j; sectors whose generator is zero contribute
        nothing.

        >>> CrRing((1, 2)).graded_dimensions(3)
        [(Fraction(0, 1), FgAbGroup(1, ())), (Fraction(1, 1), FgAbGroup(1, ())), \
(Fraction(2, 1), FgAbGroup(1, ())), (Fraction(3, 1), FgAbGroup(0, (2,)))]
        """
        max_degree = Fraction(max_degree)
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        buckets: dict = {}
        for s in self.sectors:
            if s.c == 1 and s.d == 0:
                continue
            m = 0
            while s.degree_shift + 2 * m <= max_degree:
                group = Z if m < s.d else cyclic(s.c)
                if not group.is_zero:
                    buckets.setdefault(s.degree_shift + 2 * m, []).append(group)
                m += 1
        return sorted((deg, direct_sum_all(gs)) for deg, gs in buckets.items())

    # -- comparison -------------------------------------------------------------------

    def equivalent(self, other: "CrRing") -> bool:
        """Presentation equivalence: some relabelling of the sector group
        matches all sector data and all structure constants.

        Brute force over the multiplicative units mod ell; this is an
        equality of presentations, not a general graded-isomorphism test.

        >>> CrRing((2, 2)).equivalent(CrRing((4, 1)))
        False
        >>> CrRing((1, 2)).equivalent(CrRing((2, 1)))
        True
        """
        if not isinstance(other, CrRing):
            raise ValueError("can only compare two sector rings")
        if self.ell != other.ell or self.weights.n != other.weights.n:
            return False
        ell = self.ell
        units = [t for t in range(ell) if math.gcd(t, ell) == 1]
        for t in units:
            if all(self._matches_under(other, t, j) for j in range(ell)) and all(
                self._raw_product(i, j)[:2]
                == other._raw_product(t * i % ell, t * j % ell)[:2]
                for i in range(ell)
                for j in range(i, ell)
            ):
                return True
        return False

    def _matches_under(self, other: "CrRing", t: int, j: int) -> bool:
        a = self.sectors[j]
        b = other.sectors[t * j % self.ell]
        return (a.c, a.d, a.degree_shift) == (b.c, b.d, b.degree_shift)

    # -- misc ----------------------------------------------------------------------------

    def symbol_element(self, name: str) -> "CrElement":
        if name == "u":
            return self.u()
        if name.startswith("a"):
            j = int(name[1:])
            if 0 <= j < self.ell:
                return self.generator(j)
            raise ValueError(
                f"{name} out of range for the sector ring of {self.weights}: "
                f"sector indices run 0..{self.ell - 1}"
            )
        raise ValueError(
            f"unknown symbol {name!r} for the sector ring of {self.weights}: "
            "use u and a0..a%d" % (self.ell - 1)
        )

    def __eq__(self, other):
        if isinstance(other, CrRing):
            return self.weights == other.weights
        return NotImplemented

    def __hash__(self):
        return hash(("chenruan", self.weights))

    def __repr__(self):
        return f"CrRing({self.weights!r})"


def sectors(weights) -> CrRing:
    """Construct the sector ring (alias for the CrRing constructor)."""
    return CrRing(weights)


@dataclass(frozen=True)
class KernelRelation:
    """One per-sector kernel generator c * u^d * (sector generator)."""

    j: int
    coefficient: int
    exponent: int
    element: "CrElement"

    def __str__(self):
        return _monomial_str(self.coefficient, self.exponent, self.j)


@dataclass(frozen=True)
class ProductRelation:
    """One generator product, already in normal form."""

    i: int
    j: int
    product: "CrElement"

    def __str__(self):
        return f"a{self.i}*a{self.j} = {self.product}"


@dataclass(frozen=True)
class CrPresentation:
    generators: tuple[tuple[str, Fraction], ...]
    kernel_relations: tuple[KernelRelation, ...]
    product_relations: tuple[ProductRelation, ...]


def _monomial_str(coeff: int, power: int, j: int) -> str:
    pieces = []
    if power:
        pieces.append("u" if power == 1 else f"u^{power}")
    if j:
        pieces.append(f"a{j}")
    if not pieces:
        return str(coeff)
    body = "".join(pieces)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}{body}"


class CrElement:
    """Finitely supported map sector -> integer polynomial in u.

    Held in per-sector normal form unless produced by the kernel-relation
    emitter.  Value semantics.
    """

    __slots__ = ("ring", "parts")

    def __init__(self, ring: CrRing, parts: dict):
        self.ring = ring
        self.parts = parts

    @property
    def is_zero(self) -> bool:
        return not self.parts

    def monomials(self):
        """Sorted (sector, u-exponent, coefficient) triples."""
        return [
            (j, m, self.parts[j][m])
            for j in sorted(self.parts)
            for m in sorted(self.parts[j])
        ]

    def degree(self):
        """Common rational degree of all monomials, or None if mixed.

        deg(u^m * a_j) = 2m + degree_shift(j); raises on zero.
        """
        if self.is_zero:
            raise ValueError("the zero element has no degree")
        degs = {
            2 * m + self.ring.sectors[j].degree_shift for j, m, _ in self.monomials()
        }
        return degs.pop() if len(degs) == 1 else None

    def reduced(self) -> "CrElement":
        """Normal form (only relevant for raw kernel generators)."""
        return self.ring.element(self.parts)

    def __add__(self, other):
        self.ring._check_element(other)
        out = {j: dict(p) for j, p in self.parts.items()}
        for j, poly in other.parts.items():
            bucket = out.setdefault(j, {})
            for m, c in poly.items():
                bucket[m] = bucket.get(m, 0) + c
        return self.ring.element(out)

    def __neg__(self):
        return self.ring.element(
            {j: {m: -c for m, c in p.items()} for j, p in self.parts.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.ring.element(
                {j: {m: other * c for m, c in p.items()} for j, p in self.parts.items()}
            )
        return self.ring.star(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponents must be non-negative integers")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CrElement):
            return self.ring.weights == other.ring.weights and self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(
            (self.ring.weights, tuple((j, tuple(sorted(p.items()))) for j, p in sorted(self.parts.items())))
        )

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for j, m, c in self.monomials():
            body = _monomial_str(abs(c), m, j)
            parts.append(("- " if c < 0 else "+ ") + body)
        head = parts[0]
        first = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([first] + parts[1:])
