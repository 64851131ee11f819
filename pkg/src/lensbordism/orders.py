"""Order bookkeeping for reduced 5-dimensional spin bordism groups.

For cyclic groups of odd prime-power order the bordism spectral sequence
collapses at its second page, so the group order is the product of the
homology orders on the total-degree-5 diagonal; this module encodes that
diagonal, the resulting order formulas, the order of a lens class, the
order-level behaviour of the transfer/inclusion composition, and the cyclic
order 9*p**k for the index-3 metacyclic groups.  Only orders and the few
structure statements actually pinned down by the underlying theory are
encoded; anything else raises ``Unspecified`` instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import EvenModulus, NoSuchGroup, Unspecified
from .numtheory import is_prime

_MAX_INT = 2**63 - 1


@dataclass(frozen=True)
class AbelianGroup:
    """Finite direct sum of cyclic groups; factor 0 marks an infinite summand."""

    factors: tuple[int, ...]

    @property
    def order(self) -> int | None:
        total = 1
        for m in self.factors:
            if m == 0:
                return None
            total *= m
        return total

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " x ".join("Z" if m == 0 else f"Z_{m}" for m in self.factors)


TRIVIAL = AbelianGroup(())
Z = AbelianGroup((0,))
Z2 = AbelianGroup((2,))


@dataclass(frozen=True)
class CoefficientTable:
    """Coefficient groups of the bordism spectral sequence, by degree."""

    groups: tuple[AbelianGroup, ...]

    def group(self, degree: int) -> AbelianGroup:
        return self.groups[degree]


#: Low-degree spin bordism coefficients: Z, Z_2, Z_2, 0, Z, 0.
SPIN_COEFFICIENTS = CoefficientTable((Z, Z2, Z2, TRIVIAL, Z, TRIVIAL))


def _reduced_homology_order(r: int, n: int, coeff: AbelianGroup) -> int:
    """Order of degree-r reduced homology of the cyclic group of order n,
    with coefficients in the given sum of cyclic groups.

    Reduced integral homology is Z_n in positive odd degrees and 0
    otherwise; for a finite cyclic coefficient Z_m both the tensor and the
    torsion product with Z_n have order gcd(n, m).
    """
    if r <= 0:
        return 1
    total = 1
    for m in coeff.factors:
        if m == 0:
            total *= n if r % 2 == 1 else 1
        else:
            total *= gcd(n, m)
    return total


@dataclass(frozen=True)
class E2Diagonal:
    """Orders on the total-degree-5 diagonal of the collapsed second page."""

    n: int
    terms: tuple[tuple[int, int, int], ...]

    @property
    def product(self) -> int:
        total = 1
        for _, _, order in self.terms:
            total *= order
        return total


def _is_odd_prime_power(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    p = _least_prime_factor(n)
    while n % p == 0:
        n //= p
    return n == 1


def _least_prime_factor(n: int) -> int:
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def e2_diagonal(n: int) -> E2Diagonal:
    """Total-degree-5 second-page diagonal for an odd prime power n.

    The page collapses, so these orders multiply to the bordism-group order:
    the only nonzero terms sit at (r, s) = (1, 4) and (5, 0), each of order
    n, since the Z_2-coefficient terms vanish for odd n.
    """
    if n % 2 == 0:
        raise EvenModulus(f"{n} is even; only odd-order groups are encoded")
    if not _is_odd_prime_power(n):
        raise ValueError(f"odd prime power required, got {n}")
    terms = tuple(
        (r, 5 - r, _reduced_homology_order(r, n, SPIN_COEFFICIENTS.group(5 - r)))
        for r in range(6)
    )
    return E2Diagonal(n, terms)


def _checked(value: int) -> int:
    if value > _MAX_INT:
        raise OverflowError(f"{value} exceeds the supported 2**63 - 1 bound")
    return value


def _check_odd_prime(p: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"odd prime required, got {p}")


def _check_exponent(k: int, minimum: int = 1) -> None:
    if k < minimum:
        raise ValueError(f"k must be at least {minimum}, got {k}")


def bordism_order_cyclic(p: int, k: int) -> int:
    """p**(2k), the product of the two nonvanishing diagonal orders."""
    _check_odd_prime(p)
    _check_exponent(k)
    return _checked(p ** (2 * k))


def lens_class_order(p: int, k: int) -> int:
    """Order of a lens-space class over the cyclic group of order p**k.

    p**k for p >= 5; 9 for (p, k) = (3, 1).  The value for p = 3, k >= 2 is
    not encoded and raises ``Unspecified``.
    """
    _check_odd_prime(p)
    _check_exponent(k)
    if p == 3:
        if k == 1:
            return 9
        raise Unspecified("lens-class order for p = 3, k >= 2 is not encoded")
    return _checked(p**k)


def group_structure_cyclic(p: int, k: int) -> AbelianGroup:
    """Isomorphism type of the bordism group, known only for k = 1:
    Z_9 at p = 3 and Z_p x Z_p for p >= 5."""
    _check_odd_prime(p)
    _check_exponent(k)
    if k != 1:
        raise Unspecified(
            "only the order is encoded for k >= 2, not the isomorphism type"
        )
    return AbelianGroup((9,)) if p == 3 else AbelianGroup((p, p))


def extension_order_check(p: int, k: int) -> bool:
    """Middle order equals the product of the outer orders in the
    restriction/transfer extension relating exponents k-1, k and 1."""
    _check_odd_prime(p)
    if p < 5:
        raise ValueError("p >= 5 required")
    _check_exponent(k, 2)
    return bordism_order_cyclic(p, k) == bordism_order_cyclic(
        p, k - 1
    ) * bordism_order_cyclic(p, 1)


def non_splitness_witness(p: int, k: int) -> bool:
    """A lens class of order p**k > p certifies that the extension does not
    split off a direct sum of exponent-p groups; true for every k >= 2."""
    _check_odd_prime(p)
    if p < 5:
        raise ValueError("p >= 5 required")
    _check_exponent(k, 2)
    return lens_class_order(p, k) > p


def transfer_inclusion_scalar(subgroup_index: int, class_order: int) -> int:
    """Order of index * x for x of the given order in a cyclic group.

    Models the composition of transfer and inclusion at order level, which
    is multiplication by the subgroup index: the class of order
    ``class_order`` is sent to one of order class_order // gcd(class_order,
    index).  Index equal to the order kills the class (result 1); index
    coprime to the order preserves it.
    """
    if subgroup_index < 1 or class_order < 1:
        raise ValueError("index and order must be positive")
    return class_order // gcd(class_order, subgroup_index)


def bordism_order_metacyclic_d3(p: int, k: int) -> int:
    """9 * p**k, the order of the (cyclic) bordism group over the metacyclic
    group with parameters (p**k, 3, r); requires p = 1 mod 3 for the group
    to exist."""
    _check_odd_prime(p)
    if p < 5:
        raise ValueError("p >= 5 required")
    _check_exponent(k)
    if p % 3 != 1:
        raise NoSuchGroup(f"no nontrivial cube root of 1 mod {p}**{k}")
    return _checked(9 * p**k)
