"""
Elliptic curves over Q read from a whitespace "allcurves" table:

    conductor  class  number  [a1,a2,a3,a4,a6]  rank  torsion

Rows are taken to be minimal models; nothing here re-derives minimality.
"""
import logging
import os
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import factorint, isprime, jacobi_symbol

from .cd_graphs import KodairaSymbol
from .exceptions import (
    BadInput, BadReduction, DuplicateLabel, FixtureError, MissingConductor,
    NotMultiplicative, ParseError,
)
from .utility import resolve_cremona_path

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EllipticCurveRecord:
    conductor: int
    class_letter: str
    number: int
    a_invariants: tuple
    rank: int
    torsion: int

    @property
    def iso_label(self):
        return '{}{}'.format(self.conductor, self.class_letter)

    @property
    def label(self):
        return '{}{}'.format(self.iso_label, self.number)

    @property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a_invariants
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c4(self):
        b2, b4, _, _ = self.b_invariants
        return b2 * b2 - 24 * b4

    @property
    def c6(self):
        b2, b4, b6, _ = self.b_invariants
        return -b2 ** 3 + 36 * b2 * b4 - 216 * b6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j_invariant(self):
        return Fraction(self.c4 ** 3, self.discriminant)

    def weierstrass_equation(self):
        a1, a2, a3, a4, a6 = self.a_invariants
        return '{} = {}'.format(
            _polynomial('y^2', ((a1, 'xy'), (a3, 'y'))),
            _polynomial('x^3', ((a2, 'x^2'), (a4, 'x'), (a6, ''))))

    def __str__(self):
        return self.label


def _polynomial(leading, terms):
    text = leading
    for coefficient, monomial in terms:
        if not coefficient:
            continue
        sign = '-' if coefficient < 0 else '+'
        size = abs(coefficient)
        body = monomial if size == 1 and monomial else '{}{}'.format(size, monomial)
        text += ' {} {}'.format(sign, body)
    return text


def _parse_ainvs(text):
    if not (text.startswith('[') and text.endswith(']')):
        raise ValueError('a-invariants {!r} are not a bracketed list'.format(text))
    values = tuple(int(value) for value in text[1:-1].split(','))
    if len(values) != 5:
        raise ValueError('expected 5 a-invariants, got {}'.format(len(values)))
    return values


def parse_line(line, line_number=None):
    data = line.split()
    if len(data) != 6:
        raise ParseError(line_number, 'expected 6 columns, got {}'.format(len(data)), line)
    try:
        conductor, letter, number = int(data[0]), data[1], int(data[2])
        record = EllipticCurveRecord(conductor, letter, number, _parse_ainvs(data[3]),
                                     int(data[4]), int(data[5]))
    except ValueError as e:
        raise ParseError(line_number, str(e), line)
    if conductor < 1 or number < 1 or record.rank < 0 or record.torsion < 1 or not letter.isalpha():
        raise ParseError(line_number, 'field out of range', line)
    if record.discriminant == 0:
        raise ParseError(line_number, 'singular Weierstrass equation', line)
    return record


def parse_database(stream):
    """Records in file order; comment lines start with #."""
    records = []
    seen = {}
    for line_number, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        record = parse_line(line, line_number)
        if record.label in seen:
            raise DuplicateLabel(record.label, line_number)
        seen[record.label] = line_number
        records.append(record)
    return records


def serialize_record(record):
    return '{} {} {} [{}] {} {}'.format(
        record.conductor, record.class_letter, record.number,
        ','.join(str(a) for a in record.a_invariants), record.rank, record.torsion)


def dump_database(records):
    return ''.join(serialize_record(record) + '\n' for record in records)


class CurveDatabase:
    """Immutable set of curves indexed by label and conductor."""

    def __init__(self, records):
        self._records = tuple(records)
        self._by_label = {record.label: record for record in self._records}
        by_conductor = {}
        for record in sorted(self._records, key=lambda r: (r.conductor, r.class_letter, r.number)):
            classes = by_conductor.setdefault(record.conductor, OrderedDict())
            classes.setdefault(record.class_letter, []).append(record)
        self._by_conductor = {
            conductor: OrderedDict((letter, tuple(curves)) for letter, curves in classes.items())
            for conductor, classes in by_conductor.items()}

    def __len__(self):
        return len(self._records)

    def __iter__(self):
        return iter(self._records)

    @property
    def by_label(self):
        return dict(self._by_label)

    def conductors(self):
        return sorted(self._by_conductor)

    def classes(self, conductor):
        try:
            return OrderedDict(self._by_conductor[int(conductor)])
        except KeyError:
            raise MissingConductor(conductor)

    def lookup(self, conductor, letter, number=1):
        label = '{}{}{}'.format(conductor, letter, number)
        try:
            return self._by_label[label]
        except KeyError:
            raise BadInput('no curve {} in the database'.format(label))


def load_database(path=None, data_dir=None):
    path = resolve_cremona_path(path, data_dir)
    try:
        with open(path) as stream:
            records = parse_database(stream)
    except OSError as e:
        raise FixtureError('cannot read curve database {}: {}'.format(path, e))
    logger.info('Loaded %s curves from %s', len(records), path)
    for warning in consistency_warnings(records):
        logger.warning('%s: %s', os.path.basename(path), warning)
    return CurveDatabase(records)


@lru_cache(maxsize=4)
def _cached_database(path):
    return load_database(path)


def default_database(path=None, data_dir=None):
    return _cached_database(resolve_cremona_path(path, data_dir))


def count_points(curve, p):
    """#E(F_p) of the reduced Weierstrass equation, singular point included."""
    if not isprime(p):
        raise BadInput('{} is not prime'.format(p))
    a1, a2, a3, a4, a6 = (a % p for a in curve.a_invariants)
    if p == 2:
        count = 1
        for x in range(p):
            for y in range(p):
                if (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % p == 0:
                    count += 1
        return count
    b2, b4, b6, _ = curve.b_invariants
    count = 1
    for x in range(p):
        value = (4 * x ** 3 + b2 * x * x + 2 * b4 * x + b6) % p
        count += 1 + int(jacobi_symbol(value, p))
    return count


def ap(curve, p):
    if curve.discriminant % p == 0:
        raise BadReduction(curve.label, p)
    return p + 1 - count_points(curve, p)


def _multiplicative_ap(curve, p):
    if curve.conductor % p or curve.conductor % (p * p) == 0:
        raise NotMultiplicative(curve.label, p)
    value = p + 1 - count_points(curve, p)
    if value not in (1, -1):
        raise NotMultiplicative(curve.label, p)
    return value


def al_sign(curve, p):
    """Atkin-Lehner eigenvalue w_p = -a_p of the newform attached to the curve."""
    return -_multiplicative_ap(curve, p)


def multiplicative_type(curve, p):
    _multiplicative_ap(curve, p)
    return KodairaSymbol(factorint(abs(curve.discriminant)).get(p, 0))


def consistency_warnings(records):
    warnings = []
    for record in records:
        bad = set(factorint(abs(record.discriminant)))
        expected = set(factorint(record.conductor))
        if bad != expected:
            warnings.append('{}: primes of the discriminant {} differ from those of the conductor {}'.format(
                record.label, sorted(bad), sorted(expected)))
    return warnings
