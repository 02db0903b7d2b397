import os

from django.apps import apps
from django.conf import settings
from django.test import SimpleTestCase, override_settings

from atlas.checks import cremona_check, data_dir_check
from atlas.reports import cell, render
from atlas.serializers import FrobeniusCountSerializer
from atlas.traces import point_count
from atlas.utility import resolve_cremona_path, resolve_jobs, run_pool


class UtilityTests(SimpleTestCase):
    @override_settings(ATLAS_CREMONA=None)
    def test_cremona_path(self):
        self.assertEqual(resolve_cremona_path('x.txt'), 'x.txt')
        self.assertEqual(resolve_cremona_path(data_dir='/data'), os.path.join('/data', 'allcurves.fixture'))
        with self.settings(ATLAS_CREMONA='/curves/allcurves'):
            self.assertEqual(resolve_cremona_path(), '/curves/allcurves')

    @override_settings(ATLAS_JOBS=3)
    def test_jobs(self):
        self.assertEqual(resolve_jobs(), 3)
        self.assertEqual(resolve_jobs(1), 1)
        self.assertGreaterEqual(resolve_jobs(0), 1)

    def test_pool_keeps_order(self):
        self.assertEqual(run_pool(abs, [-3, 2, -1], jobs=1), [3, 2, 1])
        self.assertEqual(run_pool(abs, list(range(-20, 0)), jobs=2), list(range(20, 0, -1)))


class CheckTests(SimpleTestCase):
    def test_bundled_data(self):
        self.assertEqual(data_dir_check(None), [])
        self.assertEqual(cremona_check(None), [])

    @override_settings(ATLAS_DATA_DIR='/nonexistent/atlas', ATLAS_CREMONA=None)
    def test_missing_data(self):
        self.assertEqual([error.id for error in data_dir_check(None)], ['atlas.E001'])
        self.assertEqual([error.id for error in cremona_check(None)], ['atlas.W002'])

    def test_missing_fixture(self):
        with self.settings(ATLAS_DATA_DIR=os.path.join(settings.BASE_DIR, 'atlas')):
            ids = {error.id for error in data_dir_check(None)}
        self.assertEqual(ids, {'atlas.W001'})


class SettingsTests(SimpleTestCase):
    def test_no_database(self):
        self.assertEqual(settings.DATABASES['default']['ENGINE'], 'django.db.backends.dummy')
        self.assertFalse(apps.is_installed('django.contrib.auth'))
        self.assertFalse(apps.is_installed('django.contrib.contenttypes'))
        self.assertTrue(apps.is_installed('rest_framework'))


class ReportTests(SimpleTestCase):
    def test_cell(self):
        self.assertEqual(cell(None), '-')
        self.assertEqual(cell(True), 'yes')
        self.assertEqual(cell([]), '-')
        self.assertEqual(cell([3, 5]), '3,5')
        self.assertEqual(cell({'a': 1}), 'a=1')

    def test_formats(self):
        rows = [point_count(267, 67)]
        self.assertEqual(render(FrobeniusCountSerializer, rows, 'tsv'), 'D\tell\tk\tcount\n267\t67\t1\t94\n')
        self.assertIn('"count": 94', render(FrobeniusCountSerializer, rows, 'json'))
        self.assertEqual(render(FrobeniusCountSerializer, rows, 'md').splitlines()[2], '| 267 | 67 | 1 | 94 |')
