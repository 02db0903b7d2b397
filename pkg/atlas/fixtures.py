"""
Readers for the curated TSV tables under ATLAS_DATA_DIR.

Every table has ``#`` comment lines, a header row and a mandatory
``provenance`` column.  An optional ``erratum`` column holds ``key=value``
overrides of printed values, ``-`` for none.
"""
import csv
import logging
import os
from dataclasses import dataclass, field

from django.conf import settings

from .exceptions import FixtureError

logger = logging.getLogger(__name__)

TABLE1 = 'table1.tsv'
TABLE2 = 'table2.tsv'
HYPERELLIPTIC_Q = 'hyperelliptic_q.tsv'
TABLE3 = 'table3.tsv'
CD_FIBRES = 'cd_fibres.tsv'


@dataclass(frozen=True)
class Table1Row:
    D: int
    genus: int
    involutions: tuple
    provenance: str
    printed: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class Table2Row:
    D: int
    m: int
    places: tuple
    provenance: str


@dataclass(frozen=True)
class HyperellipticRow:
    D: int
    m: int
    provenance: str
    printed: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class Table3Row:
    D: int
    m: int
    quotient: str
    provenance: str
    printed: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class FibreConstraints:
    D: int
    p: int
    crossing: int
    forbidden: tuple
    m: int
    vertex_map: dict
    provenance: str


def data_path(name, data_dir=None):
    return os.path.join(data_dir or settings.ATLAS_DATA_DIR, name)


def read_rows(name, data_dir=None):
    """Yield (line_number, row dict) for each data row of a fixture."""
    path = data_path(name, data_dir)
    try:
        with open(path, newline='') as fixture:
            lines = [(number, line) for number, line in enumerate(fixture, 1)
                     if line.strip() and not line.startswith('#')]
    except OSError as e:
        raise FixtureError('cannot read fixture {}: {}'.format(path, e))
    reader = csv.DictReader((line for _, line in lines), delimiter='\t')
    if not reader.fieldnames or 'provenance' not in reader.fieldnames:
        raise FixtureError('{} has no provenance column'.format(path))
    for (number, _), row in zip(lines[1:], reader):
        if None in row or any(value is None for value in row.values()):
            raise FixtureError('{} line {}: wrong number of columns'.format(path, number))
        if not row['provenance'].strip():
            raise FixtureError('{} line {}: empty provenance'.format(path, number))
        yield number, row


def parse_erratum(text):
    if not text or text.strip() == '-':
        return {}
    overrides = {}
    for item in text.split(';'):
        key, sep, value = item.partition('=')
        if not sep:
            raise FixtureError('erratum {!r} is not key=value'.format(item))
        overrides[key.strip()] = value.strip()
    return overrides


def _int_list(text):
    text = text.strip()
    if not text or text == '-':
        return ()
    return tuple(int(value) for value in text.split(','))


def _apply(row, name, erratum, cast=int):
    """Return the corrected value of a column and the printed one if it differs."""
    printed = row[name]
    if name in erratum:
        logger.warning('D=%s: printed %s=%s corrected to %s', row['D'], name, printed, erratum[name])
        return cast(erratum[name]), {name: printed}
    return cast(printed), {}


def load_rows(name, build, data_dir=None):
    """Build one record per data row; a bad value is reported with its line."""
    rows = []
    for number, row in read_rows(name, data_dir):
        try:
            rows.append(build(row))
        except (ValueError, FixtureError) as e:
            raise FixtureError('{} line {}: {}'.format(data_path(name, data_dir), number, e))
    return rows


def _table1_row(row):
    erratum = parse_erratum(row.get('erratum'))
    genus, printed = _apply(row, 'genus', erratum)
    return Table1Row(int(row['D']), genus, _int_list(row['involutions']), row['provenance'], printed)


def load_table1(data_dir=None):
    return load_rows(TABLE1, _table1_row, data_dir)


def _table2_row(row):
    places = tuple(place.strip() for place in row['places'].split(',') if place.strip())
    return Table2Row(int(row['D']), int(row['m']), places, row['provenance'])


def load_table2(data_dir=None):
    return load_rows(TABLE2, _table2_row, data_dir)


def _hyperelliptic_row(row):
    erratum = parse_erratum(row.get('erratum'))
    m, printed = _apply(row, 'm', erratum)
    return HyperellipticRow(int(row['D']), m, row['provenance'], printed)


def load_hyperelliptic_q(data_dir=None):
    return load_rows(HYPERELLIPTIC_Q, _hyperelliptic_row, data_dir)


def _table3_row(row):
    erratum = parse_erratum(row.get('erratum'))
    m, printed = _apply(row, 'm', erratum)
    quotient, printed_quotient = _apply(row, 'quotient', erratum, cast=str)
    printed.update(printed_quotient)
    return Table3Row(int(row['D']), m, quotient, row['provenance'], printed)


def load_table3(data_dir=None):
    return load_rows(TABLE3, _table3_row, data_dir)


def parse_vertex_pairs(text):
    pairs = []
    for item in text.split(','):
        item = item.strip()
        if not item or item == '-':
            continue
        left, sep, right = item.partition('-')
        if not sep:
            raise FixtureError('forbidden pair {!r} is not u-v'.format(item))
        pairs.append((left, right))
    return tuple(pairs)


def parse_vertex_map(text):
    mapping = {}
    for item in text.split(','):
        item = item.strip()
        if not item or item == '-':
            continue
        source, sep, target = item.partition(':')
        if not sep:
            raise FixtureError('vertex map entry {!r} is not a:b'.format(item))
        mapping[source] = target
        mapping.setdefault(target, source)
    return mapping


def _fibre_row(row):
    return FibreConstraints(
        int(row['D']), int(row['p']), int(row['crossing']),
        parse_vertex_pairs(row['forbidden']), int(row['m']),
        parse_vertex_map(row['vertex_map']), row['provenance'])


def load_cd_fibres(data_dir=None):
    return load_rows(CD_FIBRES, _fibre_row, data_dir)
