import logging
from contextlib import contextmanager

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from atlas.choices import FORMAT_CHOICES
from atlas.exceptions import AtlasError
from atlas.reports import render


class AtlasCommand(BaseCommand):
    """Flags shared by every atlas command and report output."""

    def add_arguments(self, parser):
        parser.add_argument(
            '--format',
            choices=[fmt for fmt, _ in FORMAT_CHOICES],
            default=settings.ATLAS_DEFAULT_FORMAT,
            help='Report format',
        )
        parser.add_argument(
            '--data',
            dest='data_dir',
            default=None,
            help='Directory holding the TSV fixtures',
        )
        parser.add_argument(
            '--cremona',
            default=None,
            help='Elliptic curve database in allcurves layout',
        )

    def execute(self, *args, **options):
        if options.get('verbosity', 1) > 1:
            logging.getLogger('atlas').setLevel(logging.INFO)
        return super().execute(*args, **options)

    def add_jobs_argument(self, parser):
        parser.add_argument(
            '--jobs',
            type=int,
            default=None,
            help='Worker processes, 0 uses every core',
        )

    def write_report(self, serializer_class, objects, options):
        self.stdout.write(render(serializer_class, objects, options['format']), ending='')


@contextmanager
def atlas_errors():
    """Turn a domain error into a CommandError, message unchanged."""
    try:
        yield
    except AtlasError as e:
        raise CommandError(str(e))
