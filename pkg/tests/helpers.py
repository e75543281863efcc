"""Seeded random generators and brute-force oracles shared by the tests."""

from fractions import Fraction

from pweyl import WeylOp
from pweyl.rings import GaloisField, Rationals, Zmod


def random_coeff(ring, rng, nonzero=False):
    if isinstance(ring, Zmod):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, ring.modulus)
    if isinstance(ring, GaloisField):
        while True:
            v = tuple(rng.randrange(ring.p) for _ in range(ring.k))
            if not (nonzero and ring.is_zero(v)):
                return v
    if isinstance(ring, Rationals):
        while True:
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if not (nonzero and v == 0):
                return v
    raise TypeError(f"no generator for {ring}")


def random_monomial(nvars, rng, max_degree):
    e = [0] * nvars
    for _ in range(rng.randrange(max_degree + 1)):
        e[rng.randrange(nvars)] += 1
    return tuple(e)


def random_mpoly(ring, rng, max_degree=3, max_terms=4, nonzero=False):
    while True:
        items = [
            (random_monomial(ring.nvars, rng, max_degree), random_coeff(ring.coeffs, rng))
            for _ in range(rng.randrange(1, max_terms + 1))
        ]
        f = ring.from_terms(items)
        if not (nonzero and f.is_zero()):
            return f


def random_weylop(ring, n, rng, max_exp=3, max_terms=4, nonzero=False):
    while True:
        items = []
        for _ in range(rng.randrange(1, max_terms + 1)):
            key = tuple(rng.randrange(max_exp + 1) for _ in range(2 * n))
            items.append((key, random_coeff(ring, rng)))
        f = WeylOp.from_terms(ring, n, items)
        if not (nonzero and f.is_zero()):
            return f


def ideal_equal(I, J):
    """Mutual normal-form membership of the generator lists."""
    return all(J.contains(g) for g in I.gens) and all(I.contains(g) for g in J.gens)


def radical_member_bruteforce(f, ideal, bound):
    """f in rad(I) iff some power f^k, k <= bound, normal-forms to zero."""
    power = f
    for _ in range(bound):
        if ideal.contains(power):
            return True
        power = power * f
    return False


def naive_d_pow_x_pow(m, k):
    """d^m x^k in one variable over the integers by repeated product-rule swaps.

    Independent of the closed-form multiplication: applies d to x^a d^b one
    factor at a time via d * x^a d^b = x^a d^(b+1) + a x^(a-1) d^b.
    """
    terms = {(k, 0): 1}
    for _ in range(m):
        new = {}
        for (a, b), c in terms.items():
            new[(a, b + 1)] = new.get((a, b + 1), 0) + c
            if a:
                new[(a - 1, b)] = new.get((a - 1, b), 0) + c * a
        terms = new
    return {key: c for key, c in terms.items() if c}
