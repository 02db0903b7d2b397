from atlas.management.base import AtlasCommand, atlas_errors
from atlas.quad_points import all_verdicts, quadratic_points_verdict
from atlas.cremona import default_database
from atlas.serializers import VerdictSerializer


class Command(AtlasCommand):
    help = 'Decide which Shimura curves have infinitely many quadratic points'

    def add_arguments(self, parser):
        parser.add_argument('D', nargs='*', type=int)
        self.add_jobs_argument(parser)
        super().add_arguments(parser)

    def handle(self, *args, **options):
        verdicts(self, options)


def verdicts(self, options):
    with atlas_errors():
        if options['D']:
            database = default_database(options['cremona'], options['data_dir'])
            rows = [quadratic_points_verdict(D, database, options['data_dir']) for D in options['D']]
        else:
            rows = all_verdicts(options['cremona'], options['data_dir'], options['jobs'])
    self.write_report(VerdictSerializer, rows, options)
