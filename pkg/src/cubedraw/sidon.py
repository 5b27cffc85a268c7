"""Sidon (B2) sets: predicates plus the Singer and Erdos-Turan constructions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence


class SidonError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def smallest_prime_at_least(k: int) -> int:
    """Smallest prime ``p >= k``; Bertrand's postulate keeps it at most ``2k``."""
    if k < 1:
        raise SidonError(f"k must be positive, got {k}")
    p = max(k, 2)
    while not is_prime(p):
        p += 1
    return p


def _check_increasing(s: Sequence[int]) -> None:
    for a, b in zip(s, s[1:]):
        if a >= b:
            raise SidonError(f"sequence must be strictly increasing, got {a} then {b}")


def is_sidon(s: Sequence[int]) -> bool:
    """All sums ``a + b`` with ``a <= b`` (doubles included) are distinct."""
    _check_increasing(s)
    seen = set()
    for a, b in itertools.combinations_with_replacement(s, 2):
        if a + b in seen:
            return False
        seen.add(a + b)
    return True


def is_weak_sidon(s: Sequence[int]) -> bool:
    """Sums of distinct pairs are distinct; doubles are not constrained."""
    _check_increasing(s)
    seen = set()
    for a, b in itertools.combinations(s, 2):
        if a + b in seen:
            return False
        seen.add(a + b)
    return True


@dataclass(frozen=True)
class SidonSet:
    elements: tuple[int, ...]
    universe_bound: int

    def __post_init__(self) -> None:
        if self.elements and (self.elements[0] < 1 or self.elements[-1] > self.universe_bound):
            raise SidonError(f"elements must lie in [1, {self.universe_bound}]")
        if not is_sidon(self.elements):
            raise SidonError(f"{self.elements} is not a Sidon set")

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i: int) -> int:
        return self.elements[i]


# --- GF(q^3) as polynomials c0 + c1 x + c2 x^2 modulo a monic cubic --------

def _irreducible_cubic(q: int) -> tuple[int, int, int]:
    """Lowest monic cubic x^3 + a2 x^2 + a1 x + a0 with no root in GF(q).

    A cubic is irreducible over a field iff it has no root there.
    """
    for a0, a1, a2 in itertools.product(range(q), repeat=3):
        if a0 == 0:
            continue
        if all((x**3 + a2 * x * x + a1 * x + a0) % q for x in range(q)):
            return a0, a1, a2
    raise AssertionError(f"no irreducible cubic over GF({q})")


def _mul(a, b, mod, q):
    a0, a1, a2 = mod
    prod = [0] * 5
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    # x^3 = -(a2 x^2 + a1 x + a0)
    for k in (4, 3):
        c = prod[k] % q
        if c:
            prod[k - 1] -= c * a2
            prod[k - 2] -= c * a1
            prod[k - 3] -= c * a0
        prod[k] = 0
    return (prod[0] % q, prod[1] % q, prod[2] % q)


def _pow(a, e, mod, q):
    result = (1, 0, 0)
    while e:
        if e & 1:
            result = _mul(result, a, mod, q)
        a = _mul(a, a, mod, q)
        e >>= 1
    return result


def _generator(mod, q):
    order = q**3 - 1
    factors = prime_factors(order)
    one = (1, 0, 0)
    for g in itertools.product(range(q), repeat=3):
        if g == (0, 0, 0):
            continue
        if all(_pow(g, order // r, mod, q) != one for r in factors):
            return g
    raise AssertionError("multiplicative group has no generator")


def singer_difference_set(q: int) -> list[int]:
    """Residues mod q^2+q+1 forming a perfect difference set (q prime)."""
    if not is_prime(q):
        raise SidonError(f"singer_sidon needs a prime q, got {q}")
    mod = _irreducible_cubic(q)
    g = _generator(mod, q)
    big_n = q * q + q + 1
    # g^N generates GF(q)*, so membership in span{1, x} only depends on i mod N
    out = []
    x = (1, 0, 0)
    for i in range(big_n):
        if x[2] == 0:
            out.append(i)
        x = _mul(x, g, mod, q)
    return out


def singer_sidon(q: int) -> SidonSet:
    """Sidon set of size q+1 inside [q^2+q+1] from Singer's difference set."""
    residues = singer_difference_set(q)
    big_n = q * q + q + 1
    low = min(residues)
    elements = sorted((r - low) % big_n + 1 for r in residues)
    return SidonSet(tuple(elements), big_n)


def erdos_turan_sidon(p: int) -> SidonSet:
    """{1 + 2pi + (i^2 mod p) : 0 <= i < p}, a Sidon set inside [p(2p-1)]."""
    if not is_prime(p):
        raise SidonError(f"erdos_turan_sidon needs a prime p, got {p}")
    return SidonSet(tuple(1 + 2 * p * i + (i * i % p) for i in range(p)), p * (2 * p - 1))
