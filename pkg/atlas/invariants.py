"""
Invariants of the Shimura curve V_D: elliptic points, genus, the
Atkin-Lehner group W and the number of fixed points n(w_m) of each w_m.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from sympy import factorint

from .arith import (
    FactoredSquarefree, class_number, divisors, factor_squarefree, kronecker, order_symbol,
)
from .exceptions import BadInput, InternalInconsistency

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShimuraDiscriminant:
    """Discriminant of an indefinite division quaternion algebra over Q."""
    factored: FactoredSquarefree

    def __post_init__(self):
        if self.factored.omega < 2 or self.factored.omega % 2:
            raise BadInput('{} has {} prime factors, a Shimura discriminant needs an even number >= 2'.format(
                self.factored.value, self.factored.omega))

    @classmethod
    def parse(cls, D):
        if isinstance(D, cls):
            return D
        return _parse_discriminant(int(D))

    @property
    def value(self):
        return self.factored.value

    @property
    def primes(self):
        return self.factored.primes

    @property
    def rank(self):
        """2r, the rank of W as an elementary abelian 2-group."""
        return self.factored.omega

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


@lru_cache(maxsize=None)
def _parse_discriminant(D):
    return ShimuraDiscriminant(factor_squarefree(D))


as_discriminant = ShimuraDiscriminant.parse


@dataclass(frozen=True)
class CurveInvariants:
    D: int
    primes: tuple
    e2: int
    e3: int
    genus: int
    fixed_counts: dict = field(hash=False)

    @property
    def quotient_genera(self):
        return {m: (2 * self.genus + 2 - n) // 4 for m, n in self.fixed_counts.items()}


def compose(m, n):
    """Group law of W: w_m w_n = w_{mn/gcd(m,n)^2}."""
    return m * n // gcd(m, n) ** 2


def atkin_lehner_group(D):
    D = as_discriminant(D)
    elements = tuple(divisors(D.factored))
    members = set(elements)
    for m in elements:
        for n in elements:
            if compose(m, n) not in members:
                raise InternalInconsistency('W({}) is not closed: {} o {}'.format(D, m, n))
    if len(elements) != 2 ** D.rank:
        raise InternalInconsistency('W({}) has {} elements'.format(D, len(elements)))
    return elements


def elliptic_point_counts(D):
    D = as_discriminant(D)
    e2 = prod(1 - kronecker(-4, p) for p in D.primes)
    e3 = prod(1 - kronecker(-3, p) for p in D.primes)
    return e2, e3


@lru_cache(maxsize=None)
def _genus(D):
    D = as_discriminant(D)
    e2, e3 = elliptic_point_counts(D)
    value = 1 + Fraction(prod(p - 1 for p in D.primes), 12) - Fraction(e2, 4) - Fraction(e3, 3)
    if value.denominator != 1 or value < 0:
        raise InternalInconsistency('genus formula gives {} for D={}'.format(value, D))
    return int(value)


def genus(D):
    return _genus(as_discriminant(D).value)


def cm_orders(m):
    """Discriminants of the quadratic orders containing sqrt(-m) that carry fixed points of w_m."""
    if m == 2:
        return (-4, -8)
    if m % 4 == 3:
        return (-m, -4 * m)
    return (-4 * m,)


@lru_cache(maxsize=None)
def _fixed_points(D, m):
    D = as_discriminant(D)
    others = [p for p in D.primes if m % p]
    total = 0
    for d in cm_orders(m):
        local = prod(1 - order_symbol(d, p) for p in others)
        if local:
            total += class_number(d) * local
    return total


def fixed_points(D, m):
    D = as_discriminant(D)
    if m <= 1 or D.value % m:
        raise BadInput('w_{} is not a non-trivial Atkin-Lehner involution of V_{}'.format(m, D))
    return _fixed_points(D.value, m)


def quotient_genus(D, m):
    """Genus of V_D/<w_m> by Riemann-Hurwitz: 2g - 2 = 2(2g' - 2) + n(w_m)."""
    g = genus(D)
    n = fixed_points(D, m)
    numerator = 2 * g + 2 - n
    if numerator < 0 or numerator % 4:
        raise InternalInconsistency('Riemann-Hurwitz fails for V_{}/<w_{}>: g={} n={}'.format(D, m, g, n))
    return numerator // 4


def quotient_genera(D):
    return {m: quotient_genus(D, m) for m in atkin_lehner_group(D) if m > 1}


def curve_invariants(D):
    D = as_discriminant(D)
    e2, e3 = elliptic_point_counts(D)
    counts = {m: fixed_points(D, m) for m in atkin_lehner_group(D) if m > 1}
    return CurveInvariants(D.value, D.primes, e2, e3, genus(D), counts)


def is_shimura_discriminant(n):
    if n < 6:
        return False
    factors = factorint(n)
    return all(e == 1 for e in factors.values()) and len(factors) % 2 == 0


def valid_discriminants(D_max, D_min=1):
    """Every Shimura discriminant D with D_min <= D <= D_max."""
    return [D for D in range(max(D_min, 6), D_max + 1) if is_shimura_discriminant(D)]
