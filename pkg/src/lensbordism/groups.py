"""Metacyclic presentations (m, n, r) of odd-order periodic groups.

A triple (m, n, r) presents the group with generators x, y and relations
x**m = y**n = 1, y x y**-1 = x**r, subject to gcd((r-1)*n, m) = 1 and
r**n = 1 mod m.  The order is m*n; m = 1 gives the cyclic groups (stored
with r = 0, since every congruence mod 1 holds vacuously).  This module
validates triples, computes Sylow shapes (all cyclic in odd order), builds
the n = 3 primitive-cube-root family, and enumerates all presentations up
to a given order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import EvenOrder, NoPrimitiveCubeRoot
from .numtheory import is_prime


def validate_metacyclic(m: int, n: int, r: int) -> tuple[bool, str | None]:
    """Check the presentation conditions; returns (ok, reason).

    Never raises for a failed condition: the reason string names the first
    failing check instead.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m == 1:
        if r != 0:
            return False, "r must be 0 when m = 1"
        return True, None
    if not 0 <= r < m:
        return False, f"r = {r} out of range [0, {m})"
    g = gcd((r - 1) * n, m)
    if g != 1:
        return False, f"gcd((r-1)*n, m) = {g} != 1"
    if pow(r, n, m) != 1:
        return False, f"r**n = {pow(r, n, m)} != 1 mod m"
    return True, None


@dataclass(frozen=True)
class MetacyclicParams:
    """A validated presentation triple; invalid triples cannot be constructed."""

    m: int
    n: int
    r: int

    def __post_init__(self) -> None:
        ok, reason = validate_metacyclic(self.m, self.n, self.r)
        if not ok:
            raise ValueError(f"invalid presentation ({self.m}, {self.n}, {self.r}): {reason}")

    @property
    def order(self) -> int:
        return self.m * self.n


def group_order(params: MetacyclicParams) -> int:
    """The group order m*n."""
    return params.m * params.n


def theorem1_applies(params: MetacyclicParams) -> bool:
    """Whether the group order is odd and not divisible by 9."""
    order = group_order(params)
    return order % 2 == 1 and order % 9 != 0


@dataclass(frozen=True)
class SylowDescriptor:
    """Sylow subgroup data: one (prime, order, shape) entry per prime divisor."""

    entries: tuple[tuple[int, int, str], ...]

    @property
    def total_order(self) -> int:
        total = 1
        for _, order, _ in self.entries:
            total *= order
        return total


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def sylow_structure(params: MetacyclicParams) -> SylowDescriptor:
    """Sylow shapes of an odd-order metacyclic group: all cyclic.

    The validity condition forces gcd(m, n) = 1, so every prime divides
    exactly one of m and n and its Sylow subgroup is cyclic of the full
    prime-power order.
    """
    order = group_order(params)
    if order % 2 == 0:
        raise EvenOrder(f"order {order} is even; only odd order is encoded")
    entries = tuple(
        (q, q**e, "cyclic") for q, e in sorted(_factorize(order).items())
    )
    return SylowDescriptor(entries)


def d_pk3_params(p: int, k: int) -> MetacyclicParams:
    """The presentation (p**k, 3, r) with r the least nontrivial cube root
    of 1 mod p**k; exists exactly when p = 1 mod 3."""
    if p < 5 or not is_prime(p):
        raise ValueError(f"prime >= 5 required, got {p}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if p % 3 != 1:
        raise NoPrimitiveCubeRoot(f"3 does not divide p - 1 for p = {p}")
    m = p**k
    exponent = p ** (k - 1) * (p - 1) // 3
    for a in range(2, m):
        if a % p == 0:
            continue
        y = pow(a, exponent, m)
        if y != 1:
            # y has exact order 3; the only other nontrivial cube root is y**2.
            return MetacyclicParams(m, 3, min(y, y * y % m))
    raise NoPrimitiveCubeRoot(f"no cube root of 1 found mod {m}")


def _cyclic_span(r: int, m: int) -> frozenset[int]:
    span = {1}
    x = r
    while x != 1:
        span.add(x)
        x = x * r % m
    return frozenset(span)


def enumerate_periodic_odd(max_order: int) -> list[MetacyclicParams]:
    """All odd-order presentations with m*n <= max_order, deduplicated.

    Two triples with equal (m, n) and equal cyclic subgroup generated by r
    are merged into the least-r representative.  That key is a conservative
    merge, not a complete isomorphism invariant: distinct keys may in
    principle still present isomorphic groups.  Output is sorted by
    (order, m, n, r).
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    found: list[MetacyclicParams] = []
    for m in range(1, max_order + 1, 2):
        for n in range(1, max_order // m + 1, 2):
            if m == 1:
                found.append(MetacyclicParams(1, n, 0))
                continue
            seen: set[frozenset[int]] = set()
            for r in range(m):
                ok, _ = validate_metacyclic(m, n, r)
                if not ok:
                    continue
                span = _cyclic_span(r, m)
                if span in seen:
                    continue
                seen.add(span)
                found.append(MetacyclicParams(m, n, r))
    found.sort(key=lambda g: (g.order, g.m, g.n, g.r))
    return found
