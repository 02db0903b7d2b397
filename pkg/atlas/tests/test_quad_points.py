from django.test import SimpleTestCase

from atlas import choices
from atlas.classifier import bielliptic_involutions
from atlas.exceptions import GenusTooSmall
from atlas.fixtures import load_table1, load_table3
from atlas.quad_points import (
    Table3Entry, audit_witness, bielliptic_pairs_over_q, compare_table3, deficiency,
    elliptic_quotient_class, emit_table3, heegner_rational_point, kuhn_fallback,
    quadratic_points_verdict,
)

HEEGNER = {
    (26, 13): -8, (38, 2): -19, (38, 19): -4, (57, 57): -4, (58, 58): -3, (65, 65): -7,
    (77, 77): -4, (82, 82): -3, (106, 53): -8, (106, 106): -3, (118, 59): -4, (118, 118): -3,
    (122, 122): -11, (129, 129): -4, (143, 143): -67, (166, 166): -3, (202, 101): -8,
    (210, 210): -43, (215, 215): -67, (314, 314): -43, (330, 330): -67, (390, 390): -67,
    (510, 510): -163, (546, 546): -67,
}


class DeficiencyTests(SimpleTestCase):
    def test_places(self):
        self.assertEqual(deficiency(39, 13), {'R', '3'})
        self.assertEqual(deficiency(115, 23), {'5'})
        self.assertEqual(deficiency(26, 2), set())


class RationalPointTests(SimpleTestCase):
    """
    Heegner witnesses and the genus two fallback for the bielliptic quotients
    """
    def test_witness_210(self):
        witness = heegner_rational_point(210, 210)
        self.assertEqual(witness.d, -43)
        self.assertEqual(witness.inert_primes, (2, 3, 5, 7))
        self.assertEqual(audit_witness(witness), [])

    def test_witnesses(self):
        for (D, m), d in HEEGNER.items():
            witness = heegner_rational_point(D, m)
            self.assertEqual(witness.d, d, (D, m))
            self.assertEqual(audit_witness(witness), [])

    def test_kuhn(self):
        self.assertTrue(kuhn_fallback(26, 2))
        self.assertTrue(kuhn_fallback(58, 2))
        self.assertFalse(kuhn_fallback(115, 23))
        self.assertFalse(kuhn_fallback(26, 13))

    def test_every_non_deficient_pair_has_a_point(self):
        for row in load_table1():
            for m in bielliptic_involutions(row.D):
                if deficiency(row.D, m):
                    continue
                has_point = heegner_rational_point(row.D, m) is not None or kuhn_fallback(row.D, m)
                self.assertTrue(has_point, (row.D, m))

    def test_audit_catches_tampering(self):
        witness = heegner_rational_point(210, 210)
        tampered = witness.__class__(210, 105, witness.d, witness.inert_primes)
        self.assertEqual(len(audit_witness(tampered)), 1)


class QuotientTests(SimpleTestCase):
    def test_210(self):
        quotient = elliptic_quotient_class(210, 210)
        self.assertEqual(quotient.iso_label, '210D')
        self.assertEqual(quotient.curve_label, '210D2')
        self.assertEqual(quotient.rank, 1)
        self.assertEqual(quotient.kodaira, 'I_2')
        self.assertEqual(quotient.prime, 3)

    def test_class_only(self):
        quotient = elliptic_quotient_class(65, 65)
        self.assertEqual(quotient.iso_label, '65A')
        self.assertIsNone(quotient.curve_label)
        self.assertEqual(quotient.label, '65A')

    def test_pairs(self):
        pairs = bielliptic_pairs_over_q(26)
        self.assertEqual({pair.m: pair.point for pair in pairs},
                         {2: choices.POINT_KUHN, 13: choices.POINT_HEEGNER})
        self.assertTrue(all(pair.quotient.rank == 0 for pair in pairs))


class VerdictTests(SimpleTestCase):
    def test_bielliptic(self):
        verdict = quadratic_points_verdict(210)
        self.assertEqual(verdict.status, choices.VERDICT_INFINITE_BIELLIPTIC)
        self.assertEqual((verdict.m, verdict.quotient, verdict.rank, verdict.witness), (210, '210D2', 1, '-43'))

    def test_hyperelliptic(self):
        verdict = quadratic_points_verdict(26)
        self.assertEqual(verdict.status, choices.VERDICT_INFINITE_HYPERELLIPTIC)
        self.assertEqual((verdict.m, verdict.quotient), (26, choices.QUOTIENT_P1))
        self.assertTrue(verdict.infinite)

    def test_finite(self):
        verdict = quadratic_points_verdict(115)
        self.assertEqual(verdict.status, choices.VERDICT_FINITE)
        self.assertIn('m=23: deficient at 5', verdict.justification)
        verdict = quadratic_points_verdict(202)
        self.assertFalse(verdict.infinite)
        self.assertIn('m=101: rank-0 (202A)', verdict.justification)
        verdict = quadratic_points_verdict(145)
        self.assertEqual(verdict.justification, ('not bielliptic',))

    def test_genus_too_small(self):
        with self.assertRaises(GenusTooSmall):
            quadratic_points_verdict(6)


class Table3Tests(SimpleTestCase):
    """
    Reproduce the curves with infinitely many quadratic points
    """
    def test_emit(self):
        entries = emit_table3(jobs=1)
        self.assertEqual(len(entries), 39)
        self.assertEqual(len({entry.D for entry in entries}), 38)
        self.assertIn(Table3Entry(210, 210, '210D2'), entries)
        self.assertIn(Table3Entry(58, 29, choices.QUOTIENT_P1), entries)
        self.assertEqual(compare_table3(entries, load_table3()), [])

    def test_compare_reports_differences(self):
        fixture = load_table3()
        entries = [Table3Entry(row.D, row.m, row.quotient) for row in fixture]
        self.assertEqual(compare_table3(entries, fixture), [])
        entries[-1] = Table3Entry(546, 546, '546A')
        self.assertEqual(compare_table3(entries, fixture), ['D=546 m=546: quotient 546A != 546C2'])
        self.assertEqual(compare_table3(entries[:-1], fixture),
                         ['D=546: in table 3 but computed finite'])
