from django.test import SimpleTestCase

from atlas import choices
from atlas.audit import Audit, run_audit


class FullAuditTests(SimpleTestCase):
    """
    The audit over its full ranges: Table 1 to 5000, the exclusion rules
    to 20000, the genus identity to 546 and Hurwitz numbers to 2000
    """
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.results = {result.name: result for result in run_audit(quick=False, jobs=2)}

    def test_every_check_passes(self):
        failed = {name: result.detail for name, result in self.results.items()
                  if result.status != choices.CHECK_PASS}
        self.assertEqual(failed, {})
        self.assertEqual(len(self.results), len(Audit().checks()))

    def test_ranges(self):
        self.assertEqual(self.results['table1'].detail, 'D <= 5000')
        self.assertEqual(self.results['prop6'].detail, '547 <= D <= 20000')
        self.assertEqual(self.results['hurwitz_consistency'].detail, 'H(n) for n <= 2000')
        self.assertTrue(self.results['genus_identity'].detail.endswith('discriminants'))

    def test_parity_detail(self):
        detail = self.results['parity'].detail
        self.assertTrue(detail.startswith('#M_D(F_109) = 0 mod 4 for 17 of 17 D besides 267 and 411'), detail)
        self.assertIn('of 19', detail)


class QuickAuditTests(SimpleTestCase):
    def test_ranges_shrink(self):
        audit = Audit(quick=True)
        self.assertEqual(audit.size(2000, 200), 200)
        self.assertEqual(audit.hurwitz_consistency(), 'H(n) for n <= 200')
