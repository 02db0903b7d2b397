"""
Bielliptic and hyperelliptic Atkin-Lehner involutions of V_D, the audits
that go with them and certificates for Aut(V_D) = W.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from django.conf import settings

from . import choices
from .arith import kronecker
from .exceptions import GenusTooSmall
from .invariants import (
    as_discriminant, atkin_lehner_group, compose, elliptic_point_counts,
    fixed_points, genus, valid_discriminants,
)
from .traces import parity_shape, parity_witness
from .utility import run_pool

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BiellipticReport:
    D: int
    genus: int
    bielliptic_m: tuple
    hyperelliptic_m: tuple


@dataclass(frozen=True)
class Lemma5Audit:
    D: int
    genus: int
    bielliptic_m: tuple
    offending: tuple = ()
    rank_ok: bool = True
    unique_ok: bool = True

    @property
    def passed(self):
        return not self.offending and self.rank_ok and self.unique_ok


@dataclass(frozen=True)
class Prop6Evidence:
    D: int
    rule: str
    ell: int = None
    lower_bound: Fraction = None
    weil_cap: int = None


@dataclass(frozen=True)
class AutCertificate:
    D: int
    conclusion: str
    rule: str
    lower_rank: int
    evidence: dict = field(default_factory=dict, hash=False)


def _checked_genus(D):
    g = genus(D)
    if g <= 1:
        raise GenusTooSmall(D.value, g)
    return g


def _involutions_with_count(D, target):
    return tuple(m for m in atkin_lehner_group(D) if m > 1 and fixed_points(D, m) == target)


def bielliptic_involutions(D):
    """The m with n(w_m) = 2g - 2, so that V_D/<w_m> has genus one."""
    D = as_discriminant(D)
    g = _checked_genus(D)
    return _involutions_with_count(D, 2 * g - 2)


def hyperelliptic_involutions(D):
    """The m with n(w_m) = 2g + 2, so that V_D/<w_m> has genus zero."""
    D = as_discriminant(D)
    g = _checked_genus(D)
    return _involutions_with_count(D, 2 * g + 2)


def lemma5_audit(D):
    D = as_discriminant(D)
    g = _checked_genus(D)
    bielliptic = bielliptic_involutions(D)
    if g % 2 == 0:
        allowed = {(2, 6)}
    else:
        allowed = {(0, 0), (0, 8), (4, 4)}
    offending = []
    for v in bielliptic:
        for w in atkin_lehner_group(D):
            if w in (1, v):
                continue
            pair = tuple(sorted((fixed_points(D, w), fixed_points(D, compose(v, w)))))
            if pair not in allowed:
                offending.append((v, w) + pair)
    rank_ok = not bielliptic or D.rank <= (3 if g % 2 == 0 else 4)
    unique_ok = g < 6 or len(bielliptic) <= 1
    return Lemma5Audit(D.value, g, bielliptic, tuple(offending), rank_ok, unique_ok)


def prop6_excludes(D):
    """Evidence that V_D is not bielliptic, None when neither rule applies."""
    D = as_discriminant(D)
    volume = prod(p - 1 for p in D.primes)
    for ell in choices.PROP6_PRIMES:
        if D.value % ell == 0:
            continue
        lower_bound = Fraction(ell - 1, 12) * volume
        weil_cap = 2 * (ell + 1) ** 2
        if lower_bound > weil_cap:
            return Prop6Evidence(D.value, choices.PROP6_WEIL, ell, lower_bound, weil_cap)
    if D.value % prod(choices.PROP6_PRIMES) == 0:
        return Prop6Evidence(D.value, choices.PROP6_RANK)
    return None


def bielliptic_report(D):
    """Worker for the scans; None when the genus is below 2."""
    D = as_discriminant(D)
    g = genus(D)
    if g < 2:
        return None
    return BiellipticReport(D.value, g, _involutions_with_count(D, 2 * g - 2),
                            _involutions_with_count(D, 2 * g + 2))


def _scan(D_max, jobs, D_min=1):
    candidates = valid_discriminants(D_max, D_min)
    logger.info('Scanning %s discriminants up to %s', len(candidates), D_max)
    return [report for report in run_pool(bielliptic_report, candidates, jobs) if report]


def scan_bielliptic(D_max=None, jobs=None):
    if D_max is None:
        D_max = settings.ATLAS_SCAN_MAX
    return [report for report in _scan(D_max, jobs) if report.bielliptic_m]


def hyperelliptic_scan(D_max=None, jobs=None):
    if D_max is None:
        D_max = settings.ATLAS_SCAN_MAX
    return [report for report in _scan(D_max, jobs) if report.hyperelliptic_m]


def _prop6_survivor(D):
    if prop6_excludes(D) is not None:
        return None
    report = bielliptic_report(D)
    if report and report.bielliptic_m:
        return D
    return None


def prop6_audit(D_min=547, D_max=None, jobs=None):
    """Valid D in range that are neither excluded nor non-bielliptic."""
    if D_max is None:
        D_max = settings.ATLAS_PROP6_MAX
    found = run_pool(_prop6_survivor, valid_discriminants(D_max, D_min), jobs)
    return [D for D in found if D is not None]


def _class_number_parity(D):
    for p in D.primes:
        if p % 8 != 3:
            continue
        others = [q for q in D.primes if q != p]
        if all(kronecker(-p, q) == -1 for q in others):
            return {'p': p}
    return None


def _rules(D):
    """Every certificate rule that fires for D, in RULE_ORDER."""
    fired = {}
    e2, e3 = elliptic_point_counts(D)
    if e2 == 0 and e3 == 0:
        fired[choices.RULE_NO_ELLIPTIC_POINTS] = {'e2': 0, 'e3': 0}
    if D.rank == 2:
        q, p = D.primes
        if q == 2 and p % 4 == 3:
            fired[choices.RULE_CM_PAIR] = {'p': p}
        if (q == 2 and p % 4 == 1) or (q == 3 and p % 3 == 1):
            fired[choices.RULE_CD_LENGTH_TWO] = {'p': p}
        if parity_shape(D):
            witness = parity_witness(D.value)
            if witness.fires:
                fired[choices.RULE_PARITY_MOD_4] = {
                    'ell': witness.ell, 'count': witness.count, 'residue': witness.residue}
    if D.value in choices.KNOWN_AD_HOC_DISCRIMINANTS:
        fired[choices.RULE_KNOWN_AD_HOC] = {}
    evidence = _class_number_parity(D)
    if evidence:
        fired[choices.RULE_CLASS_NUMBER_PARITY] = evidence
    return fired


def aut_certificate(D):
    D = as_discriminant(D)
    _checked_genus(D)
    fired = _rules(D)
    for rule in choices.RULE_ORDER:
        if rule in fired:
            conclusion = choices.AUT_KNOWN_AD_HOC if rule == choices.RULE_KNOWN_AD_HOC else choices.AUT_EQUALS_W
            return AutCertificate(D.value, conclusion, rule, D.rank, fired)
    return AutCertificate(D.value, choices.AUT_UNKNOWN, None, D.rank, fired)


def compare_table1(reports, fixture):
    """Differences between scan reports and table1 rows, empty when they agree."""
    computed = {report.D: report for report in reports}
    expected = {row.D: row for row in fixture}
    diff = []
    for D in sorted(set(computed) | set(expected)):
        if D not in computed:
            diff.append('D={}: in table 1 but not bielliptic'.format(D))
        elif D not in expected:
            diff.append('D={}: bielliptic but missing from table 1'.format(D))
        else:
            report, row = computed[D], expected[D]
            if report.genus != row.genus:
                diff.append('D={}: genus {} != {}'.format(D, report.genus, row.genus))
            if tuple(sorted(report.bielliptic_m)) != tuple(sorted(row.involutions)):
                diff.append('D={}: involutions {} != {}'.format(D, report.bielliptic_m, row.involutions))
    return diff
