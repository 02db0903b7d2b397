from django.core.management.base import CommandError

from atlas.audit import run_audit
from atlas.choices import CHECK_FAIL
from atlas.management.base import AtlasCommand, atlas_errors
from atlas.serializers import AuditResultSerializer


class Command(AtlasCommand):
    help = 'Run the invariant suite and report pass or fail for every check'

    def add_arguments(self, parser):
        parser.add_argument(
            '--quick',
            action='store_true',
            default=False,
            help='Shrink the ranges of the sweeps',
        )
        self.add_jobs_argument(parser)
        super().add_arguments(parser)

    def handle(self, *args, **options):
        audit(self, options)


def audit(self, options):
    with atlas_errors():
        results = run_audit(options['quick'], options['cremona'], options['data_dir'], options['jobs'])
    self.write_report(AuditResultSerializer, results, options)
    failed = [result.name for result in results if result.status == CHECK_FAIL]
    if failed:
        raise CommandError('failed checks: {}'.format(', '.join(failed)))
