"""
Quadratic points on Shimura curves.

V_D has infinitely many points of degree <= 2 exactly when it is
hyperelliptic over Q or has a bielliptic involution w_m whose quotient is
an elliptic curve over Q of positive rank.  The bielliptic route needs
the quotient to be non-deficient, to carry a rational point (a Heegner
point, or Kuhn's result in genus two) and to be identified in the curve
database.
"""
import logging
import re
from dataclasses import dataclass
from math import prod

from . import choices
from .arith import (
    class_number, class_number_one_discriminants, factor_squarefree, fundamental_part, kronecker,
)
from .cd_graphs import DualGraph, al_quotient, dual_graph, fibre_constraints, kodaira_symbol
from .classifier import bielliptic_involutions
from .cremona import al_sign, default_database, multiplicative_type
from .exceptions import AmbiguousClass, GenusTooSmall
from .fixtures import load_hyperelliptic_q, load_table1, load_table2
from .invariants import as_discriminant, genus, quotient_genus
from .utility import run_pool

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HeegnerWitness:
    D: int
    m: int
    d: int
    inert_primes: tuple


@dataclass(frozen=True)
class EllipticQuotient:
    D: int
    m: int
    iso_label: str
    curve_label: str
    rank: int
    kodaira: str = None
    prime: int = None

    @property
    def label(self):
        return self.curve_label or self.iso_label


@dataclass(frozen=True)
class BiellipticPair:
    D: int
    m: int
    point: str
    witness: HeegnerWitness
    quotient: EllipticQuotient


@dataclass(frozen=True)
class QuadraticPointsVerdict:
    D: int
    status: str
    m: int = None
    quotient: str = None
    rank: int = None
    witness: str = None
    justification: tuple = ()

    @property
    def infinite(self):
        return self.status != choices.VERDICT_FINITE


@dataclass(frozen=True)
class Table3Entry:
    D: int
    m: int
    quotient: str


def deficiency(D, m, data_dir=None):
    """Completions of Q where V_D/<w_m> has no point, from table 2."""
    for row in load_table2(data_dir):
        if row.D == int(D) and row.m == int(m):
            return frozenset(row.places)
    return frozenset()


def heegner_rational_point(D, m, bound=None):
    """
    A class number one field in which every p | D is non-split and the
    inert primes multiply to m: its CM points are swapped with their
    conjugates by w_m and give rational points on V_D/<w_m>.
    """
    D = as_discriminant(D)
    for d in class_number_one_discriminants(bound):
        symbols = [kronecker(d, p) for p in D.primes]
        if 1 in symbols:
            continue
        inert = tuple(p for p, symbol in zip(D.primes, symbols) if symbol == -1)
        if prod(inert) == m:
            return HeegnerWitness(D.value, m, d, inert)
    return None


def kuhn_fallback(D, m, bound=None):
    """True when the quotient of a genus two V_D has a rational point without a Heegner witness."""
    D = as_discriminant(D)
    if genus(D) != 2 or quotient_genus(D, m) != 1:
        return False
    return heegner_rational_point(D, m, bound) is None


def audit_witness(witness):
    """Problems found by recomputing a witness, empty when it is sound."""
    problems = []
    if fundamental_part(witness.d)[1] != 1:
        problems.append('{} is not a fundamental discriminant'.format(witness.d))
    if class_number(witness.d) != 1:
        problems.append('h({}) = {}'.format(witness.d, class_number(witness.d)))
    primes = as_discriminant(witness.D).primes
    split = [p for p in primes if kronecker(witness.d, p) == 1]
    if split:
        problems.append('{} split in Q(sqrt({}))'.format(split, witness.d))
    inert = tuple(p for p in primes if kronecker(witness.d, p) == -1)
    if inert != tuple(witness.inert_primes) or prod(inert) != witness.m:
        problems.append('inert primes {} do not give m = {}'.format(inert, witness.m))
    return problems


def _shimura_sign(curve, m):
    """Eigenvalue of w_m on the Shimura side, prod over p | m of -lambda_p."""
    primes = factor_squarefree(curve.conductor).primes
    return prod(-al_sign(curve, p) for p in primes if m % p == 0)


def _kodaira_from_fibres(D, m, data_dir=None):
    """(p, I_n) for the quotient graph of V_D/<w_m> when fibre data is bundled."""
    for p in as_discriminant(D).primes:
        row = fibre_constraints(D, p, data_dir)
        if row is None or row.m != m:
            continue
        graph = dual_graph(D, p, row.crossing, row.forbidden)
        if not isinstance(graph, DualGraph):
            logger.warning('fibre data for D=%s p=%s does not fix the dual graph', D, p)
            continue
        return p, kodaira_symbol(al_quotient(graph, row.vertex_map))
    return None, None


def elliptic_quotient_class(D, m, database=None, data_dir=None):
    D = as_discriminant(D)
    if database is None:
        database = default_database(data_dir=data_dir)
    classes = database.classes(D.value)
    candidates = [letter for letter, curves in classes.items() if _shimura_sign(curves[0], m) == 1]
    if len(candidates) != 1:
        raise AmbiguousClass(D.value, m, ['{}{}'.format(D.value, letter) for letter in candidates])
    curves = classes[candidates[0]]
    p, symbol = _kodaira_from_fibres(D.value, m, data_dir)
    curve_label = None
    if symbol is not None:
        matches = [curve for curve in curves if multiplicative_type(curve, p) == symbol]
        if len(matches) == 1:
            curve_label = matches[0].label
    return EllipticQuotient(D.value, m, curves[0].iso_label, curve_label, curves[0].rank,
                            str(symbol) if symbol else None, p)


def bielliptic_pairs_over_q(D, database=None, data_dir=None):
    """Non-deficient bielliptic involutions of V_D whose quotient has a rational point."""
    pairs = []
    for m in bielliptic_involutions(D):
        if deficiency(D, m, data_dir):
            continue
        witness = heegner_rational_point(D, m)
        if witness is not None:
            point = choices.POINT_HEEGNER
        elif kuhn_fallback(D, m):
            point = choices.POINT_KUHN
        else:
            continue
        quotient = elliptic_quotient_class(D, m, database, data_dir)
        pairs.append(BiellipticPair(int(D), m, point, witness, quotient))
    return pairs


def _finite_reasons(D, database, data_dir):
    reasons = []
    try:
        bielliptic = bielliptic_involutions(D)
    except GenusTooSmall:
        bielliptic = ()
    if not bielliptic:
        reasons.append('not bielliptic')
    pairs = {pair.m: pair for pair in bielliptic_pairs_over_q(D, database, data_dir)}
    for m in bielliptic:
        places = deficiency(D, m, data_dir)
        if places:
            reasons.append('m={}: {} at {}'.format(m, choices.REASON_DEFICIENT, ','.join(sorted(places))))
        elif m not in pairs:
            reasons.append('m={}: {}'.format(m, choices.REASON_NO_POINT))
        else:
            reasons.append('m={}: {} ({})'.format(m, choices.REASON_RANK_ZERO, pairs[m].quotient.label))
    return tuple(reasons)


def quadratic_points_verdict(D, database=None, data_dir=None):
    D = as_discriminant(D)
    g = genus(D)
    if g < 2:
        raise GenusTooSmall(D.value, g)
    if database is None:
        database = default_database(data_dir=data_dir)
    for row in load_hyperelliptic_q(data_dir):
        if row.D == D.value:
            return QuadraticPointsVerdict(D.value, choices.VERDICT_INFINITE_HYPERELLIPTIC, row.m,
                                          choices.QUOTIENT_P1)
    for pair in bielliptic_pairs_over_q(D.value, database, data_dir):
        if pair.quotient.rank >= 1:
            witness = str(pair.witness.d) if pair.witness else pair.point
            return QuadraticPointsVerdict(D.value, choices.VERDICT_INFINITE_BIELLIPTIC, pair.m,
                                          pair.quotient.label, pair.quotient.rank, witness)
    return QuadraticPointsVerdict(D.value, choices.VERDICT_FINITE,
                                  justification=_finite_reasons(D.value, database, data_dir))


def candidate_discriminants(data_dir=None):
    """Discriminants that can have infinitely many quadratic points."""
    found = {row.D for row in load_table1(data_dir)}
    found.update(row.D for row in load_hyperelliptic_q(data_dir))
    return sorted(found)


def _verdict_job(job):
    D, path, data_dir = job
    return quadratic_points_verdict(D, default_database(path, data_dir), data_dir)


def all_verdicts(cremona=None, data_dir=None, jobs=None):
    jobs_list = [(D, cremona, data_dir) for D in candidate_discriminants(data_dir)]
    return run_pool(_verdict_job, jobs_list, jobs)


def _entries_job(job):
    D, path, data_dir = job
    database = default_database(path, data_dir)
    entries = [Table3Entry(row.D, row.m, choices.QUOTIENT_P1)
               for row in load_hyperelliptic_q(data_dir) if row.D == D]
    try:
        pairs = bielliptic_pairs_over_q(D, database, data_dir)
    except GenusTooSmall:
        pairs = []
    entries.extend(Table3Entry(D, pair.m, pair.quotient.label) for pair in pairs if pair.quotient.rank >= 1)
    return entries


def emit_table3(cremona=None, data_dir=None, jobs=None):
    """One entry per (D, m) giving infinitely many quadratic points, ordered by D then m."""
    jobs_list = [(D, cremona, data_dir) for D in candidate_discriminants(data_dir)]
    entries = [entry for group in run_pool(_entries_job, jobs_list, jobs) for entry in group]
    return sorted(entries, key=lambda entry: (entry.D, entry.m))


def _class_of(label):
    return re.sub(r'\d+$', '', label)


def compare_table3(entries, fixture):
    diff = []
    computed_D = {entry.D for entry in entries}
    expected_D = {row.D for row in fixture}
    for D in sorted(expected_D - computed_D):
        diff.append('D={}: in table 3 but computed finite'.format(D))
    for D in sorted(computed_D - expected_D):
        diff.append('D={}: computed infinite but missing from table 3'.format(D))
    computed = {(entry.D, entry.m): entry.quotient for entry in entries}
    expected = {(row.D, row.m): row.quotient for row in fixture}
    for key in sorted(set(computed) | set(expected)):
        if key[0] not in computed_D & expected_D:
            continue
        if key not in computed:
            diff.append('D={} m={}: missing row'.format(*key))
        elif key not in expected:
            diff.append('D={} m={}: extra row with quotient {}'.format(key[0], key[1], computed[key]))
        else:
            mine, theirs = computed[key], expected[key]
            if mine == choices.QUOTIENT_P1 or theirs == choices.QUOTIENT_P1:
                same = mine == theirs
            elif mine == _class_of(mine):
                # only the isogeny class was determined
                same = _class_of(theirs) == mine
            else:
                same = mine == theirs
            if not same:
                diff.append('D={} m={}: quotient {} != {}'.format(key[0], key[1], mine, theirs))
    return diff
