"""Circulant graphs: Cayley graphs of the cyclic group Z_n.

Automorphisms of Z_n are the multipliers ``a`` with ``gcd(a, n) = 1``, so
the fixed-point counts reduce to gcd computations.  For prime ``p`` the
weak equivalence classes are exactly the isomorphism classes of circulant
graphs on ``p`` vertices (a theorem of Elspas and Turner), which gives an
isomorphism count in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from sympy import isprime, totient as _totient

from .errors import InconsistencyError
from .morphisms import Automorphism


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient needs a positive integer, got {n}")
    return int(_totient(n))


def multiplicative_order(a: int, n: int) -> int:
    """Least ``d >= 1`` with ``a^d = 1 (mod n)``, by repeated multiplication."""
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    if n == 1:
        return 1
    x, d = a % n, 1
    while x != 1:
        x = x * a % n
        d += 1
    return d


def multiplier_automorphism(n: int, a: int) -> Automorphism:
    """The automorphism ``g -> a*g`` of ``Z_n`` as a dense map on residues."""
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    return Automorphism(tuple(a * g % n for g in range(n)))


def _check_unit(n: int, a: int) -> None:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if math.gcd(a, n) != 1:
        raise ValueError(f"multiplier {a} is not coprime to {n}")


def check_odd_prime(p: int) -> None:
    if p < 3 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime; closed forms here cover prime moduli only")


def zn_tilde_tilde_counts(n: int, a: int, r: int) -> tuple[int, int, int]:
    """``(FF, II, FFo)`` for the multiplier ``a^r`` on ``Z_n``.

    ``FF`` counts ``g`` with ``(a^r - 1) g = 0`` and ``2g != 0``, ``II`` those
    with ``(a^r + 1) g = 0`` and ``2g != 0``; ``FFo`` is the single
    involution ``n/2`` when ``n`` is even.  ``gcd(0, n) = n``.
    """
    _check_unit(n, a)
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    ar = pow(a, r, n)
    killed = 2 if n % 2 == 0 else 1
    ff = math.gcd((ar - 1) % n, n) - killed
    ii = math.gcd((ar + 1) % n, n) - killed
    return ff, ii, 1 if n % 2 == 0 else 0


def zp_inverted_counts(p: int, a: int, r: int) -> tuple[int, int]:
    """``(F, I)`` for the multiplier ``a`` on ``Z_p`` at orbit length ``r``."""
    check_odd_prime(p)
    _check_unit(p, a)
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    order = multiplicative_order(a, p)
    F = p - 1 if r % 2 == 1 and order == r and (p - 1) % r == 0 else 0
    I = p - 1 if order == 2 * r and ((p - 1) // 2) % r == 0 else 0
    return F, I


def circulant_prime_weak_count(p: int, m: int) -> int:
    """Weak equivalence classes of degree-``m`` circulant graphs on ``p`` vertices.

    Sums over ``k`` dividing ``gcd((p-1)/2, m/2)`` of ``phi(k)`` (odd ``k``)
    and ``phi(2k)`` times ``prod_t ((p-1)/2 - k t) / (k^j j!)`` with
    ``j = m / 2k``, then divides by ``p - 1``.  Odd degrees give 0.
    """
    check_odd_prime(p)
    if m < 1:
        raise ValueError(f"degree must be at least 1, got {m}")
    if m % 2:
        return 0
    half = (p - 1) // 2
    total = 0
    for k in range(1, math.gcd(half, m // 2) + 1):
        if half % k or (m // 2) % k:
            continue
        j = m // (2 * k)
        numer = math.prod(half - k * t for t in range(j))
        term, rem = divmod(numer, k**j * math.factorial(j))
        if rem:
            raise InconsistencyError(f"inexact term at p={p}, m={m}, k={k}")
        weight = totient(2 * k) + (totient(k) if k % 2 else 0)
        total += weight * term
    count, rem = divmod(total, p - 1)
    if rem:
        raise InconsistencyError(f"sum {total} for p={p}, m={m} is not divisible by {p - 1}")
    return count


def circulant_iso_count_prime(p: int, m: int) -> int:
    """Isomorphism classes of connected degree-``m`` circulant graphs on ``p`` vertices."""
    return circulant_prime_weak_count(p, m)


@dataclass(frozen=True)
class BinomialClaim:
    """The published shortcut ``C((p-3)/2, m/2)`` for ``gcd((p-1)/2, m/2) = 1``.

    The shortcut is wrong in general (at ``p=7, m=2`` it claims 2 classes
    where there is one), so it is always returned with ``erratum=True`` and
    alongside the value of the full divisor sum.  It is never used for
    census output.
    """

    p: int
    m: int
    claimed: int
    formula: int
    erratum: bool = True

    @property
    def agrees(self) -> bool:
        return self.claimed == self.formula


def binomial_special_case(p: int, m: int) -> BinomialClaim:
    check_odd_prime(p)
    if m < 1 or m % 2:
        raise ValueError(f"the binomial shortcut needs a positive even degree, got {m}")
    if math.gcd((p - 1) // 2, m // 2) != 1:
        raise ValueError(f"the binomial shortcut needs gcd((p-1)/2, m/2) = 1, got p={p}, m={m}")
    return BinomialClaim(p, m, math.comb((p - 3) // 2, m // 2), circulant_prime_weak_count(p, m))
