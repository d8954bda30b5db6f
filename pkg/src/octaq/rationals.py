"""Bounded integer factorization, square classes, rational reconstruction.

All scalars are ``fractions.Fraction`` (arbitrary precision, always
reduced, positive denominator), so the only genuine work here is prime
bookkeeping.  Factorization is trial division up to a configured bound;
beyond it we fail loudly instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from . import config
from .errors import FactorizationIncomplete


@dataclass(frozen=True)
class IntegerFactorization:
    """sign * prod(p**e) * cofactor reconstructs the input.

    cofactor == 1 means the factorization is complete; otherwise it is the
    unfactored residue, every prime factor of which exceeds the bound used.
    """

    sign: int
    factors: dict[int, int] = field(default_factory=dict)
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors.items():
            n *= p**e
        return n * self.cofactor

    def squarefree_part(self) -> int:
        # A perfect-square cofactor cannot change the square class even
        # though its prime factorization is unknown (its primes exceed the
        # bound, so they are disjoint from the listed ones).
        if not self.complete:
            r = isqrt(self.cofactor)
            if r * r != self.cofactor:
                raise FactorizationIncomplete(
                    f"cofactor {self.cofactor} above trial-division bound"
                )
        d = self.sign
        for p, e in self.factors.items():
            if e % 2:
                d *= p
        return d


def factorize(n: int, bound: Optional[int] = None) -> IntegerFactorization:
    """Trial division by 2, 3 and 6k+-1 up to min(bound, sqrt(remainder)).

    A residue r with 1 < r < bound**2 has no factor <= bound, hence is
    prime and gets recorded as a factor; likewise for r = p**2 with p in
    that range.  Anything larger stays as an incomplete cofactor.
    """
    if n == 0:
        raise ValueError("0 has no factorization")
    if bound is None:
        bound = config.factor_bound()
    sign = 1 if n > 0 else -1
    n = abs(n)
    factors: dict[int, int] = {}

    def strip(p: int) -> None:
        nonlocal n
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            factors[p] = e

    strip(2)
    strip(3)
    p = 5
    while p <= bound and p * p <= n:
        strip(p)
        strip(p + 2)
        p += 6
    if n == 1:
        return IntegerFactorization(sign, factors)
    if n < bound * bound:
        factors[n] = factors.get(n, 0) + 1
        return IntegerFactorization(sign, factors)
    r = isqrt(n)
    if r * r == n and r < bound * bound:
        factors[r] = factors.get(r, 0) + 2
        return IntegerFactorization(sign, factors)
    return IntegerFactorization(sign, factors, cofactor=n)


def is_square(x: Fraction | int) -> bool:
    """Exact test, no factorization needed."""
    x = Fraction(x)
    if x < 0:
        return False
    rn = isqrt(x.numerator)
    rd = isqrt(x.denominator)
    return rn * rn == x.numerator and rd * rd == x.denominator


def squarefree_part(x: Fraction | int, bound: Optional[int] = None) -> int:
    """The unique squarefree integer d with x/d a nonzero rational square.

    For x = num/den in lowest terms this is the squarefree part of
    num * den, sign included.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("0 has no squarefree part")
    return factorize(x.numerator * x.denominator, bound).squarefree_part()


def same_square_class(x: Fraction | int, y: Fraction | int) -> bool:
    """x and y differ by a nonzero rational square (no factorization)."""
    x, y = Fraction(x), Fraction(y)
    if x == 0 or y == 0:
        raise ValueError("square classes are defined for nonzero values")
    return is_square(x * y)


def rational_reconstruct(
    x: Fraction, eps: Fraction, qmax: int
) -> Optional[Fraction]:
    """Best rational p/q with q <= qmax and |x - p/q| <= eps, via continued
    fractions; None when no convergent fits the window.

    Any sufficiently good rational (|x - p/q| < 1/(2 q^2)) is a convergent
    of x, so scanning convergents is exhaustive for the recovery use case.
    The caller must re-verify the returned value exactly.
    """
    if qmax < 1:
        return None
    p_prev, q_prev = 1, 0
    p_cur, q_cur = int(x.numerator // x.denominator), 1
    rem = x - p_cur
    best: Optional[Fraction] = None
    if abs(x - Fraction(p_cur, q_cur)) <= eps:
        best = Fraction(p_cur, q_cur)
    while rem != 0 and q_cur <= qmax:
        rec = 1 / rem
        a = int(rec.numerator // rec.denominator)
        rem = rec - a
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        if q_cur > qmax:
            break
        cand = Fraction(p_cur, q_cur)
        if abs(x - cand) <= eps:
            best = cand
            if rem == 0:
                break
    return best
