import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from atlas.management.commands.dual_graph import Command as DualGraphCommand


def run(*args, **options):
    out = StringIO()
    err = StringIO()
    call_command(*args, stdout=out, stderr=err, **options)
    return out.getvalue()


class InvariantsCommandTests(SimpleTestCase):
    def test_tsv(self):
        lines = run('invariants', '210').splitlines()
        self.assertEqual(lines[0], 'D\tgenus\te2\te3\tfixed_points')
        self.assertTrue(lines[1].startswith('210\t5\t0\t0\t'))
        self.assertIn('n(w_210)=8', lines[1])

    def test_json(self):
        data = json.loads(run('invariants', '26', '210', format='json'))
        self.assertEqual([row['D'] for row in data], [26, 210])
        self.assertEqual(data[0]['fixed_points'], {'n(w_2)': 2, 'n(w_13)': 2, 'n(w_26)': 6})

    def test_markdown(self):
        lines = run('invariants', '26', format='md').splitlines()
        self.assertEqual(lines[0], '| D | genus | e2 | e3 | fixed_points |')
        self.assertEqual(lines[1], '|---|---|---|---|---|')

    def test_bad_discriminant(self):
        with self.assertRaisesMessage(CommandError, '12 is not squarefree'):
            run('invariants', '12')


class ClassifyCommandTests(SimpleTestCase):
    def test_scan(self):
        lines = run('classify', max=60, jobs=1).splitlines()
        self.assertEqual(lines[0], 'D\tgenus\tbielliptic_m\thyperelliptic_m')
        self.assertEqual(lines[1], '26\t2\t2,13\t26')
        self.assertEqual(len(lines), 9)

    def test_certificates(self):
        data = json.loads(run('classify', max=30, jobs=1, certificates=True, format='json'))
        self.assertEqual(data[0]['conclusion'], 'AutEqualsW')
        self.assertEqual(data[0]['rule'], 'NoEllipticPoints')

    def test_jobs_do_not_change_output(self):
        self.assertEqual(run('classify', max=200, jobs=1), run('classify', max=200, jobs=2))


class CountPointsCommandTests(SimpleTestCase):
    def test_published(self):
        lines = run('count_points', '267', '67', '1').splitlines()
        self.assertEqual(lines[1], '267\t67\t1\t94')

    def test_bad_prime(self):
        with self.assertRaises(CommandError):
            run('count_points', '26', '13', '1')


class ParityCommandTests(SimpleTestCase):
    def test_single(self):
        lines = run('parity', '411').splitlines()
        self.assertEqual(lines[1], '411\t103\t98\t2\treplacement')

    def test_family(self):
        lines = run('parity', all=True, max=130).splitlines()
        self.assertEqual([line.split('\t')[0] for line in lines[1:]], ['51', '69', '87', '123'])

    def test_arguments(self):
        with self.assertRaises(CommandError):
            run('parity')
        with self.assertRaises(CommandError):
            run('parity', '26')


class DualGraphCommandTests(SimpleTestCase):
    def test_skeleton(self):
        lines = run('dual_graph', '26', '13').splitlines()
        self.assertEqual(lines[1], '26\t13\t2\t3\t-\tyes\t-')

    def test_crossing_sums_over_vertex_pairs(self):
        lines = run('dual_graph', '210', '3', crossing=4).splitlines()
        self.assertEqual(len(lines), 9)
        self.assertEqual(lines.count("v1\tv1'\t1"), 2)
        self.assertEqual(lines.count("v2\tv2'\t1"), 2)
        parser = DualGraphCommand().create_parser('manage.py', 'dual_graph')
        self.assertIn('summed over i', parser.format_help())

    def test_from_data(self):
        text = run('dual_graph', '210', '3', from_data=True)
        self.assertTrue(text.endswith('# kodaira: I_2\n'))
        self.assertEqual(len(text.splitlines()), 4)

    def test_constraints(self):
        text = run('dual_graph', '210', '3', crossing=4, forbid=['v1-v2'], graph_format='dot')
        self.assertEqual(text.count(' -- '), 8)

    def test_quotient_json(self):
        data = json.loads(run('dual_graph', '210', '3', crossing=4, m=210, vertex_map="v1:v1',v2:v2'",
                              format='json'))
        self.assertEqual(data['kodaira'], 'I_2')
        self.assertEqual(data['vertices'], ['v1', 'v2'])

    def test_torsion(self):
        with self.assertRaisesMessage(CommandError, 'torsion-free'):
            run('dual_graph', '26', '13', crossing=1)


class VerdictsCommandTests(SimpleTestCase):
    def test_single(self):
        lines = run('verdicts', '210', '115').splitlines()
        self.assertTrue(lines[1].startswith('210\tInfiniteBielliptic\t210\t210D2\t1\t-43'))
        self.assertTrue(lines[2].startswith('115\tFinite\t-\t-\t-\t-\t'))


class TablesCommandTests(SimpleTestCase):
    def test_table1(self):
        lines = run('tables', '1', max=600, jobs=1).splitlines()
        self.assertEqual(len(lines), 33)

    def test_table2(self):
        lines = run('tables', '2').splitlines()
        self.assertEqual(lines[0], 'D\tm\tplaces')
        self.assertIn('39\t13\tR,3', lines)

    def test_table3(self):
        lines = run('tables', '3', jobs=1).splitlines()
        self.assertEqual(len(lines), 40)
        self.assertIn('210\t210\t210D2', lines)

    def test_mismatch(self):
        err = StringIO()
        with self.assertRaisesMessage(CommandError, 'table 1 differs'):
            call_command('tables', '1', max=100, jobs=1, stdout=StringIO(), stderr=err)
        self.assertIn('D=106: in table 1 but not bielliptic', err.getvalue())


@override_settings(ATLAS_PARITY_SEARCH_BOUND=5)
class AuditCommandTests(SimpleTestCase):
    """
    The quick audit passes on the bundled data and fails without a curve database
    """
    def test_missing_database(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'missing')
            with self.assertRaisesMessage(CommandError, 'failed checks'):
                run('audit', quick=True, jobs=1, cremona=path)

    def test_quick(self):
        rows = json.loads(run('audit', quick=True, jobs=1, format='json'))
        self.assertEqual({row['status'] for row in rows}, {'pass'})
        self.assertEqual(len(rows), 18)
