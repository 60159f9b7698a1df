"""Exact integer arithmetic: totients, factorizations, index-set enumeration.

Everything runs on plain Python integers with deterministic trial division.
Inputs are desk scale (a few thousand at most), so there is no probabilistic
primality machinery; the point of this module is to be auditable by
inspection.

The admissible-index predicates encode the numerical constraints satisfied by
the index of a fixed-point-free finite-order automorphism of a strict
Calabi-Yau, holomorphic symplectic, or abelian variety (via the holomorphic
Lefschetz formula and the cyclotomic bound on abelian varieties).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Factorization",
    "factorize",
    "euler_phi",
    "indices_with_phi_at_most",
    "admissible_free_index",
    "sylvester_bound",
    "FREE_INDEX_KINDS",
]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ((p1, e1), ..., (pr, er)), primes strictly increasing."""

    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        v = 1
        for p, e in self.factors:
            v *= p**e
        return v

    def num_prime_factors(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


def factorize(m: int) -> Factorization:
    """Deterministic trial-division factorization; factorize(1) is empty."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"factorize requires a positive integer, got {m!r}")
    factors = []
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(tuple(factors))


def euler_phi(m: int) -> int:
    """Euler's totient via the product formula phi(m) = prod (p^e - p^(e-1))."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"euler_phi requires a positive integer, got {m!r}")
    result = 1
    for p, e in factorize(m):
        result *= p**e - p ** (e - 1)
    return result


def _phi_sieve(limit: int) -> list[int]:
    """phi(0..limit) by the classic divisor sieve; exact, O(limit log log limit)."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime, untouched so far
            for mult in range(p, limit + 1, p):
                phi[mult] -= phi[mult] // p
    return phi


def indices_with_phi_at_most(bound: int) -> list[int]:
    """The complete, finite, sorted set {m >= 1 : phi(m) <= bound}.

    Completeness: phi(m) >= sqrt(m/2) for every m >= 1, so any solution
    satisfies m <= 2*bound**2 and scanning that far misses nothing.
    """
    if not isinstance(bound, int) or bound < 1:
        raise ValueError(f"bound must be a positive integer, got {bound!r}")
    limit = 2 * bound * bound
    phi = _phi_sieve(limit)
    return [m for m in range(1, limit + 1) if phi[m] <= bound]


FREE_INDEX_KINDS = (
    "strict_cy_even",
    "strict_cy_odd",
    "holomorphic_symplectic",
    "abelian",
)


def admissible_free_index(kind: str, n: int, m: int) -> bool:
    """Can m be the index of a fixed-point-free automorphism of an n-fold?

    strict_cy_even        1 + zeta_m^(-1) = 0 forces m = 2
    strict_cy_odd         1 - zeta_m^(-1) = 0 forces m = 1
    holomorphic_symplectic  n/2 = -1 (mod m), hence m <= n/2 + 1
    abelian               phi(m) <= 2n (cyclotomic polynomial divides the
                          minimal polynomial of the action on H^1)
    """
    if kind not in FREE_INDEX_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {FREE_INDEX_KINDS}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"index must be a positive integer, got {m!r}")
    if kind in ("strict_cy_even", "holomorphic_symplectic") and n % 2 != 0:
        raise ValueError(f"kind {kind!r} requires even dimension, got n={n}")
    if kind == "strict_cy_even":
        return m == 2
    if kind == "strict_cy_odd":
        return m == 1
    if kind == "holomorphic_symplectic":
        return (n // 2) % m == (-1) % m
    return euler_phi(m) <= 2 * n


def sylvester_bound(n: int) -> int:
    """(s_{n-1} - 1)(2 s_{n-1} - 3) for Sylvester's sequence s_0 = 2,
    s_k = s_{k-1}(s_{k-1} - 1) + 1.

    This is the Esser-Totaro-Wang candidate for the largest index of a klt
    Calabi-Yau pair of dimension n - 1 with standard coefficients; for
    n = 2, 3 it matches the known maxima 6 and 66.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"sylvester_bound requires n >= 1, got {n!r}")
    s = 2
    for _ in range(n - 1):
        s = s * (s - 1) + 1
    return (s - 1) * (2 * s - 3)
