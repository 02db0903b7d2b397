"""
The invariant suite run by ``manage.py audit``.  Each check returns a
detail string and raises AuditFailure when an identity does not hold.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from django.conf import settings
from sympy import primerange

from . import choices
from .arith import (
    class_number, factor_squarefree, hurwitz_from_class_numbers, hurwitz_table, kronecker,
)
from .cd_graphs import (
    DualGraph, al_quotient, dual_graph, eichler_class_number, is_torsion_free, kodaira_symbol,
)
from .classifier import (
    bielliptic_involutions, compare_table1, hyperelliptic_scan, lemma5_audit, prop6_audit,
    scan_bielliptic,
)
from .cremona import ap, default_database
from .exceptions import AtlasError, BadInput
from .fixtures import load_cd_fibres, load_hyperelliptic_q, load_table1, load_table3
from .invariants import elliptic_point_counts, genus, quotient_genera, valid_discriminants
from .quad_points import (
    all_verdicts, audit_witness, compare_table3, elliptic_quotient_class, emit_table3,
    heegner_rational_point, kuhn_fallback,
)
from .traces import parity_family, parity_witness, point_count, sign_convention_check, trace_hecke_new

logger = logging.getLogger(__name__)


class AuditFailure(AtlasError):
    pass


@dataclass(frozen=True)
class AuditResult:
    name: str
    status: str
    detail: str


def require(condition, message):
    if not condition:
        raise AuditFailure(message)


class Audit:
    """Runs every check; quick mode shrinks the ranges of the sweeps."""

    def __init__(self, quick=False, cremona=None, data_dir=None, jobs=None):
        self.quick = quick
        self.cremona = cremona
        self.data_dir = data_dir
        self.jobs = jobs

    def size(self, full, quick):
        return quick if self.quick else full

    def checks(self):
        return [
            ('kronecker_multiplicativity', self.kronecker_multiplicativity),
            ('class_number_parity', self.class_number_parity),
            ('hurwitz_consistency', self.hurwitz_consistency),
            ('riemann_hurwitz', self.riemann_hurwitz),
            ('table1', self.table1),
            ('lemma5', self.lemma5),
            ('prop6', self.prop6),
            ('hyperelliptic', self.hyperelliptic),
            ('sign_convention', self.sign_convention),
            ('parity', self.parity),
            ('genus_identity', self.genus_identity),
            ('weil_bounds', self.weil_bounds),
            ('trace_oracle', self.trace_oracle),
            ('eichler_class_numbers', self.eichler_class_numbers),
            ('mumford_genus', self.mumford_genus),
            ('dual_graph_210', self.dual_graph_210),
            ('heegner_witnesses', self.heegner_witnesses),
            ('table3', self.table3),
        ]

    def run(self):
        results = []
        for name, check in self.checks():
            logger.info('audit: %s', name)
            try:
                detail = check()
                results.append(AuditResult(name, choices.CHECK_PASS, detail))
            except AtlasError as e:
                logger.warning('audit %s failed: %s', name, e)
                results.append(AuditResult(name, choices.CHECK_FAIL, str(e)))
        return results

    def kronecker_multiplicativity(self):
        bound = self.size(40, 15)
        for a in range(-bound, bound + 1):
            for n in range(1, bound + 1):
                for m in range(1, bound + 1):
                    require(kronecker(a, n * m) == kronecker(a, n) * kronecker(a, m),
                            '({}/{}) is not multiplicative'.format(a, n * m))
        return 'a, n, m up to {}'.format(bound)

    def class_number_parity(self):
        primes = [p for p in primerange(3, self.size(2000, 300)) if p % 4 == 3]
        for p in primes:
            require(class_number(-p) % 2 == 1, 'h(-{}) is even'.format(p))
        return '{} primes p = 3 mod 4'.format(len(primes))

    def hurwitz_consistency(self):
        bound = self.size(2000, 200)
        table = hurwitz_table(bound)
        for n in range(bound + 1):
            if n % 4 in (0, 3):
                require(table[n] == hurwitz_from_class_numbers(n), 'H({}) disagrees'.format(n))
        return 'H(n) for n <= {}'.format(bound)

    def riemann_hurwitz(self):
        discriminants = valid_discriminants(self.size(1000, 300))
        for D in discriminants:
            quotient_genera(D)
        return '{} discriminants'.format(len(discriminants))

    def table1(self):
        D_max = self.size(5000, 600)
        diff = compare_table1(scan_bielliptic(D_max, self.jobs), load_table1(self.data_dir))
        require(not diff, '; '.join(diff))
        return 'D <= {}'.format(D_max)

    def lemma5(self):
        rows = load_table1(self.data_dir)
        failed = [row.D for row in rows if not lemma5_audit(row.D).passed]
        require(not failed, 'lemma 5 fails for {}'.format(failed))
        return '{} bielliptic curves'.format(len(rows))

    def prop6(self):
        D_max = self.size(20000, 2000)
        survivors = prop6_audit(547, D_max, self.jobs)
        require(not survivors, 'bielliptic and not excluded: {}'.format(survivors))
        return '547 <= D <= {}'.format(D_max)

    def hyperelliptic(self):
        computed = {report.D for report in hyperelliptic_scan(1000, self.jobs)}
        over_q = {row.D for row in load_hyperelliptic_q(self.data_dir)}
        require(computed == over_q | set(choices.HYPERELLIPTIC_OVER_C_ONLY),
                'hyperelliptic set {} differs'.format(sorted(computed ^ over_q)))
        for row in load_hyperelliptic_q(self.data_dir):
            require(row.m in quotient_genera(row.D) and quotient_genera(row.D)[row.m] == 0,
                    'w_{} is not hyperelliptic on V_{}'.format(row.m, row.D))
        return '{} over Q, {} over C only'.format(len(over_q), len(choices.HYPERELLIPTIC_OVER_C_ONLY))

    def sign_convention(self):
        sign_convention_check()
        counts = point_count(267, 67).count, point_count(411, 103).count
        require(counts == (94, 98), 'counts {}'.format(counts))
        return '#M_267(F_67) = 94, #M_411(F_103) = 98'

    def parity(self):
        family = parity_family()
        witnesses = [parity_witness(D) for D in family]
        fired = [w.D for w in witnesses if w.fires]
        for D in (267, 411):
            witness = next(w for w in witnesses if w.D == D)
            require(witness.residue == 2, 'D={} residue {}'.format(D, witness.residue))
        ell = settings.ATLAS_PARITY_PRIME
        others = [D for D in family if D not in settings.ATLAS_PARITY_EXCEPTIONS]
        zero = [D for D in others if point_count(D, ell).count % 4 == 0]
        return '#M_D(F_{}) = 0 mod 4 for {} of {} D besides 267 and 411; ParityMod4 fires for {} of {}'.format(
            ell, len(zero), len(others), len(fired), len(family))

    def genus_identity(self):
        discriminants = valid_discriminants(self.size(546, 200))
        for D in discriminants:
            require(trace_hecke_new(D, 1) == genus(D), 'dim S_2^new({}) != g(V_{})'.format(D, D))
        return '{} discriminants'.format(len(discriminants))

    def weil_bounds(self):
        checked = 0
        for row in load_table1(self.data_dir):
            volume = prod(p - 1 for p in factor_squarefree(row.D).primes)
            for ell in choices.PROP6_PRIMES:
                if row.D % ell == 0:
                    continue
                one, two = point_count(row.D, ell, 1), point_count(row.D, ell, 2)
                require(one.within_weil_bound and two.within_weil_bound, 'Weil bound at D={} l={}'.format(row.D, ell))
                require(two.count >= one.count, 'N_2 < N_1 at D={} l={}'.format(row.D, ell))
                require(two.count >= Fraction(ell - 1, 12) * volume,
                        'supersingular lower bound fails at D={} l={}'.format(row.D, ell))
                checked += 1
        return '{} (D, l) pairs'.format(checked)

    def trace_oracle(self):
        database = default_database(self.cremona, self.data_dir)
        for N in (26, 57, 58):
            classes = database.classes(N)
            for ell in primerange(2, 51):
                if N % ell == 0:
                    continue
                total = sum(ap(curves[0], ell) for curves in classes.values())
                require(total == trace_hecke_new(N, ell),
                        'tr T_{} on S_2^new({}) != sum of a_{}'.format(ell, N, ell))
        return 'N in 26, 57, 58 and l <= 50'

    def eichler_class_numbers(self):
        require(eichler_class_number(70, 1) == 2 and eichler_class_number(70, 3) == 8, 'h(70, -)')
        count = 0
        squarefree = [n for n in range(1, self.size(1000, 200)) if _is_squarefree(n)]
        for delta in squarefree:
            if factor_squarefree(delta).omega % 2 == 0:
                continue
            for nu in squarefree:
                if nu >= self.size(100, 30):
                    break
                if gcd(delta, nu) == 1:
                    eichler_class_number(delta, nu)
                    count += 1
        return '{} pairs'.format(count)

    def mumford_genus(self):
        checked = 0
        for row in load_table1(self.data_dir):
            if elliptic_point_counts(row.D) != (0, 0):
                continue
            for p in factor_squarefree(row.D).primes:
                if not is_torsion_free(row.D, p):
                    continue
                h1, hp = eichler_class_number(row.D // p, 1), eichler_class_number(row.D // p, p)
                require(hp == (p + 1) * h1, 'h({0}, {1}) != ({1} + 1) h({0}, 1)'.format(row.D // p, p))
                require(hp - 2 * h1 + 1 == genus(row.D), 'Mumford genus fails for ({}, {})'.format(row.D, p))
                checked += 1
        return '{} torsion-free pairs'.format(checked)

    def dual_graph_210(self):
        row = next(row for row in load_cd_fibres(self.data_dir) if (row.D, row.p) == (210, 3))
        graph = dual_graph(210, 3, row.crossing, row.forbidden)
        require(isinstance(graph, DualGraph), 'dual graph of M_210 at 3 is not unique')
        symbol = kodaira_symbol(al_quotient(graph, row.vertex_map))
        require(str(symbol) == 'I_2', 'quotient has Kodaira symbol {}'.format(symbol))
        quotient = elliptic_quotient_class(210, 210, default_database(self.cremona, self.data_dir), self.data_dir)
        require(quotient.curve_label == '210D2' and quotient.rank == 1, 'quotient is {}'.format(quotient.label))
        return 'I_2, 210D2 of rank 1'

    def heegner_witnesses(self):
        witness = heegner_rational_point(210, 210)
        require(witness is not None and witness.d == -43, 'witness for (210, 210) is {}'.format(witness))
        kuhn = []
        for row in load_table1(self.data_dir):
            for m in bielliptic_involutions(row.D):
                found = heegner_rational_point(row.D, m)
                if found is not None:
                    problems = audit_witness(found)
                    require(not problems, '; '.join(problems))
                if kuhn_fallback(row.D, m):
                    kuhn.append((row.D, m))
        require(kuhn == [(26, 2), (58, 2)], 'Kuhn applies to {}'.format(kuhn))
        return 'all witnesses sound, Kuhn for (26, 2) and (58, 2)'

    def table3(self):
        entries = emit_table3(self.cremona, self.data_dir, self.jobs)
        diff = compare_table3(entries, load_table3(self.data_dir))
        require(not diff, '; '.join(diff))
        finite = [v for v in all_verdicts(self.cremona, self.data_dir, self.jobs) if not v.infinite]
        require(all(v.justification for v in finite), 'finite verdict without justification')
        return '{} rows, {} finite'.format(len(entries), len(finite))


def run_audit(quick=False, cremona=None, data_dir=None, jobs=None):
    return Audit(quick, cremona, data_dir, jobs).run()


def _is_squarefree(n):
    try:
        factor_squarefree(n)
    except BadInput:
        return False
    return True
