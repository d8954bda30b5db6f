import random
from fractions import Fraction

import pytest

from octaq.errors import FactorizationIncomplete
from octaq.rationals import (factorize, is_square, rational_reconstruct,
                             same_square_class, squarefree_part)


def test_factorize_reconstructs():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 10**7) * rng.choice([1, -1])
        f = factorize(n)
        assert f.complete
        assert f.value() == n


def test_factorize_large_prime_residue():
    # residue below bound**2 is recognized as prime, and prime squares
    # slightly above it through the perfect-square refinement
    p = 999_983  # prime between the bound and bound**2
    f = factorize(p, bound=1000)
    assert f.complete and f.factors == {p: 1}
    f2 = factorize(p * p, bound=1000)
    assert f2.complete and f2.factors == {p: 2}


def test_factorize_incomplete_flagged():
    p, q = 1_000_003, 1_000_033
    f = factorize(p * q, bound=1000)
    assert not f.complete
    with pytest.raises(FactorizationIncomplete):
        f.squarefree_part()


def test_squarefree_part_examples():
    assert squarefree_part(-7155) == -795       # 7155 = 3^3 * 5 * 53
    assert squarefree_part(4) == 1
    assert squarefree_part(Fraction(283, 27)) == 849


def test_squarefree_part_square_invariance():
    rng = random.Random(23)
    for _ in range(400):
        x = Fraction(rng.randint(1, 500) * rng.choice([1, -1]),
                     rng.randint(1, 500))
        y = Fraction(rng.randint(1, 300), rng.randint(1, 300))
        assert squarefree_part(x * y * y) == squarefree_part(x)


def test_is_square():
    assert is_square(Fraction(49, 81))
    assert not is_square(Fraction(2))
    assert not is_square(Fraction(-4))
    assert same_square_class(Fraction(8), Fraction(2))
    assert not same_square_class(Fraction(8), Fraction(3))


def test_rational_reconstruct_examples():
    eps = Fraction(1, 10**8)
    assert rational_reconstruct(Fraction(50000000, 10**8), eps, 100) == Fraction(1, 2)
    assert rational_reconstruct(Fraction(33333333, 10**8), eps, 100) == Fraction(1, 3)
    pi_approx = Fraction(1415926535, 10**10)
    assert rational_reconstruct(pi_approx, Fraction(1, 10**10), 10) is None


def test_rational_reconstruct_recovers_perturbed():
    rng = random.Random(5)
    for _ in range(2000):
        p = rng.randint(-10**4, 10**4)
        q = rng.randint(1, 10**4)
        x = Fraction(p, q)
        noise = Fraction(rng.randint(-5, 5), 10**12)
        got = rational_reconstruct(x + noise, Fraction(1, 10**10), 10**4)
        assert got == x
