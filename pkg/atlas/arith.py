"""
Exact elementary number theory shared by the rest of the atlas.

Kronecker symbols, squarefree factorizations, class numbers of imaginary
quadratic orders (by enumeration of reduced forms) and Hurwitz class
numbers.  Everything here is exact, rationals are ``Fraction``.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, islice
from math import gcd, isqrt, prod

from django.conf import settings
from sympy import factorint, jacobi_symbol

from .exceptions import BadInput, NotSquarefree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FactoredSquarefree:
    """A squarefree positive integer together with its ascending prime factors."""
    value: int
    primes: tuple

    def __post_init__(self):
        if list(self.primes) != sorted(set(self.primes)):
            raise BadInput('primes {} are not strictly ascending'.format(self.primes))
        if prod(self.primes) != self.value:
            raise BadInput('primes {} do not multiply to {}'.format(self.primes, self.value))

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    @property
    def omega(self):
        return len(self.primes)

    def divisors(self):
        return divisors(self)


@dataclass(frozen=True)
class QuadDiscriminant:
    """Discriminant d < 0, d = 0 or 1 (mod 4), of an imaginary quadratic order."""
    d: int

    def __post_init__(self):
        _check_discriminant(self.d)

    def __int__(self):
        return self.d


def _check_discriminant(d):
    d = int(d)
    if d >= 0 or d % 4 not in (0, 1):
        raise BadInput('{} is not a negative discriminant (d < 0, d = 0,1 mod 4)'.format(d))
    return d


def kronecker(a, n):
    """Kronecker symbol (a/n) for any integers a and n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 and a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * int(jacobi_symbol(a % n, n))


@lru_cache(maxsize=None)
def factor_squarefree(n):
    n = int(n)
    if n < 1:
        raise BadInput('{} is not a positive integer'.format(n))
    factors = factorint(n)
    for p in sorted(factors):
        if factors[p] > 1:
            raise NotSquarefree(n, p)
    return FactoredSquarefree(n, tuple(sorted(factors)))


def divisors(n):
    """All divisors of a squarefree n, ascending."""
    if not isinstance(n, FactoredSquarefree):
        n = factor_squarefree(n)
    found = [prod(subset) for size in range(len(n.primes) + 1)
             for subset in combinations(n.primes, size)]
    return sorted(found)


def fundamental_part(d):
    """Split d = d_K * f^2 with d_K a fundamental discriminant, returns (d_K, f)."""
    d = _check_discriminant(d)
    f = 1
    for p, e in factorint(-d).items():
        f *= p ** (e // 2)
    core = d // (f * f)
    if core % 4 in (2, 3):
        core *= 4
        f //= 2
    return core, f


def order_symbol(d, p):
    """
    Eichler symbol of the order of discriminant d at the prime p: 1 when p
    divides the conductor of the order, the Kronecker symbol (d/p) otherwise.
    """
    _, f = fundamental_part(d)
    if f % p == 0:
        return 1
    return kronecker(d, p)


def reduced_forms(d):
    """
    Yield the reduced primitive forms (a, b, c) of discriminant d:
    |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd(a, b, c) = 1.
    """
    d = _check_discriminant(d)
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            numerator = b * b - d
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            yield a, b, c
        a += 1


@lru_cache(maxsize=None)
def class_number(d):
    return sum(1 for _ in reduced_forms(int(d)))


def has_class_number_one(d):
    return len(list(islice(reduced_forms(d), 2))) == 1


def form_weight(d):
    """1/2 for Z[i], 1/3 for Z[(1+sqrt(-3))/2], 1 otherwise."""
    if d == -4:
        return Fraction(1, 2)
    if d == -3:
        return Fraction(1, 3)
    return Fraction(1)


def weighted_class_number(d):
    return form_weight(d) * class_number(d)


@lru_cache(maxsize=8)
def hurwitz_table(bound):
    """
    H(0..bound) by direct enumeration of all reduced forms, primitive or
    not, of discriminant -n <= bound.
    """
    table = [Fraction(0)] * (bound + 1)
    table[0] = Fraction(-1, 12)
    a = 1
    while 3 * a * a <= bound:
        for b in range(-a + 1, a + 1):
            c = a
            while True:
                n = 4 * a * c - b * b
                if n > bound:
                    break
                if c == a and b < 0:
                    c += 1
                    continue
                if c == a and b == 0:
                    table[n] += Fraction(1, 2)
                elif c == a and b == a:
                    table[n] += Fraction(1, 3)
                else:
                    table[n] += 1
                c += 1
        a += 1
    logger.debug('Hurwitz table built up to %s', bound)
    return tuple(table)


def hurwitz_from_class_numbers(n):
    """H(n) as the weighted class number sum over all orders of discriminant -n/f^2."""
    if n == 0:
        return Fraction(-1, 12)
    total = Fraction(0)
    for f in range(1, isqrt(n) + 1):
        if n % (f * f):
            continue
        d = -(n // (f * f))
        if d % 4 in (0, 1):
            total += weighted_class_number(d)
    return total


def hurwitz_class_number(n, bound=None):
    n = int(n)
    if n < 0:
        raise BadInput('Hurwitz class number of negative {}'.format(n))
    if n % 4 in (1, 2):
        return Fraction(0)
    if bound is None:
        bound = settings.ATLAS_HURWITZ_BOUND
    if n <= bound:
        return hurwitz_table(bound)[n]
    return hurwitz_from_class_numbers(n)


@lru_cache(maxsize=8)
def class_number_one_discriminants(bound=None):
    """Fundamental discriminants d with h(d) = 1 and |d| <= bound, by increasing |d|."""
    if bound is None:
        bound = settings.ATLAS_HEEGNER_BOUND
    found = []
    for n in range(3, bound + 1):
        d = -n
        if d % 4 not in (0, 1) or fundamental_part(d)[1] != 1:
            continue
        if has_class_number_one(d):
            found.append(d)
    logger.info('%s class number one discriminants with |d| <= %s', len(found), bound)
    return tuple(found)
