from django.conf import settings
from django.core.management.base import CommandError

from atlas.classifier import compare_table1, scan_bielliptic
from atlas.fixtures import load_table1, load_table2, load_table3
from atlas.management.base import AtlasCommand, atlas_errors
from atlas.quad_points import compare_table3, emit_table3
from atlas.serializers import BiellipticReportSerializer, DeficiencyRowSerializer, Table3RowSerializer


class Command(AtlasCommand):
    help = 'Recompute a golden table and compare it with its fixture'

    def add_arguments(self, parser):
        parser.add_argument('table', type=int, choices=[1, 2, 3])
        parser.add_argument(
            '--max',
            type=int,
            dest='D_max',
            default=settings.ATLAS_SCAN_MAX,
            help='Largest discriminant scanned for table 1',
        )
        self.add_jobs_argument(parser)
        super().add_arguments(parser)

    def handle(self, *args, **options):
        tables(self, options)


def tables(self, options):
    data_dir = options['data_dir']
    with atlas_errors():
        if options['table'] == 1:
            rows = scan_bielliptic(options['D_max'], options['jobs'])
            diff = compare_table1(rows, load_table1(data_dir))
            serializer_class = BiellipticReportSerializer
        elif options['table'] == 2:
            rows = load_table2(data_dir)
            diff = []
            serializer_class = DeficiencyRowSerializer
        else:
            rows = emit_table3(options['cremona'], data_dir, options['jobs'])
            diff = compare_table3(rows, load_table3(data_dir))
            serializer_class = Table3RowSerializer
    self.write_report(serializer_class, rows, options)
    if diff:
        for line in diff:
            self.stderr.write(line)
        raise CommandError('table {} differs from its fixture in {} places'.format(options['table'], len(diff)))
