from django.test import SimpleTestCase

from atlas import choices
from atlas.classifier import (
    aut_certificate, bielliptic_involutions, compare_table1, hyperelliptic_involutions,
    hyperelliptic_scan, lemma5_audit, prop6_audit, prop6_excludes, scan_bielliptic,
)
from atlas.exceptions import GenusTooSmall
from atlas.fixtures import load_hyperelliptic_q, load_table1


class InvolutionTests(SimpleTestCase):
    def test_bielliptic(self):
        self.assertEqual(set(bielliptic_involutions(26)), {2, 13})
        self.assertEqual(set(bielliptic_involutions(145)), set())
        self.assertEqual(set(bielliptic_involutions(210)), {30, 42, 70, 105, 210})

    def test_hyperelliptic(self):
        self.assertEqual(set(hyperelliptic_involutions(26)), {26})
        self.assertEqual(set(hyperelliptic_involutions(58)), {29})
        self.assertEqual(set(hyperelliptic_involutions(210)), set())

    def test_genus_too_small(self):
        with self.assertRaises(GenusTooSmall):
            bielliptic_involutions(6)


class Lemma5Tests(SimpleTestCase):
    def test_examples(self):
        for D in (26, 35, 210):
            self.assertTrue(lemma5_audit(D).passed, D)

    def test_every_bielliptic_curve(self):
        for row in load_table1():
            audit = lemma5_audit(row.D)
            self.assertEqual(audit.offending, (), row.D)
            self.assertTrue(audit.rank_ok, row.D)
            self.assertTrue(audit.unique_ok, row.D)


class Prop6Tests(SimpleTestCase):
    def test_excluded(self):
        evidence = prop6_excludes(551)
        self.assertEqual(evidence.rule, choices.PROP6_WEIL)
        self.assertEqual(evidence.ell, 2)
        self.assertEqual(evidence.lower_bound, 42)
        self.assertEqual(evidence.weil_cap, 18)

    def test_not_excluded(self):
        self.assertIsNone(prop6_excludes(210))
        self.assertIsNone(prop6_excludes(546))

    def test_audit(self):
        self.assertEqual(prop6_audit(547, 3000, jobs=1), [])


class ScanTests(SimpleTestCase):
    """
    Reproduce the list of bielliptic Shimura curves
    """
    def test_small_ranges(self):
        self.assertEqual([report.D for report in scan_bielliptic(30, jobs=1)], [26])
        self.assertEqual(scan_bielliptic(25, jobs=1), [])

    def test_table1(self):
        reports = scan_bielliptic(600, jobs=1)
        self.assertEqual(len(reports), 32)
        self.assertEqual(compare_table1(reports, load_table1()), [])
        by_D = {report.D: report for report in reports}
        self.assertEqual(by_D[115].genus, 7)
        self.assertEqual(by_D[143].genus, 11)

    def test_compare_reports_differences(self):
        reports = scan_bielliptic(30, jobs=1)
        diff = compare_table1(reports, load_table1())
        self.assertIn('D=35: in table 1 but not bielliptic', diff)

    def test_hyperelliptic_over_c(self):
        computed = {report.D for report in hyperelliptic_scan(1000, jobs=1)}
        over_q = {row.D for row in load_hyperelliptic_q()}
        self.assertEqual(computed - over_q, set(choices.HYPERELLIPTIC_OVER_C_ONLY))
        self.assertTrue(over_q <= computed)


class CertificateTests(SimpleTestCase):
    def test_cm_pair(self):
        certificate = aut_certificate(94)
        self.assertEqual(certificate.conclusion, choices.AUT_EQUALS_W)
        self.assertEqual(certificate.rule, choices.RULE_CM_PAIR)

    def test_no_elliptic_points(self):
        certificate = aut_certificate(26)
        self.assertEqual(certificate.conclusion, choices.AUT_EQUALS_W)
        self.assertEqual(certificate.rule, choices.RULE_NO_ELLIPTIC_POINTS)
        self.assertEqual(certificate.lower_rank, 2)

    def test_known_ad_hoc(self):
        certificate = aut_certificate(145)
        self.assertEqual(certificate.conclusion, choices.AUT_KNOWN_AD_HOC)
        self.assertEqual(certificate.rule, choices.RULE_KNOWN_AD_HOC)

    def test_parity(self):
        certificate = aut_certificate(267)
        self.assertIn(choices.RULE_PARITY_MOD_4, certificate.evidence)
        self.assertEqual(certificate.evidence[choices.RULE_PARITY_MOD_4]['count'], 94)

    def test_genus_too_small(self):
        with self.assertRaises(GenusTooSmall):
            aut_certificate(6)
