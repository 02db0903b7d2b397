from django.core.management.base import CommandError

from atlas.management.base import AtlasCommand, atlas_errors
from atlas.serializers import ParityWitnessSerializer
from atlas.traces import parity_family, parity_witness


class Command(AtlasCommand):
    help = 'Point counts mod 4 for D = 3p, p = 2 (mod 3)'

    def add_arguments(self, parser):
        parser.add_argument('D', nargs='?', type=int)
        parser.add_argument(
            '--all',
            action='store_true',
            default=False,
            help='Every D = 3p of genus >= 2 up to --max',
        )
        parser.add_argument(
            '--max',
            type=int,
            dest='D_max',
            default=None,
            help='Largest D of the family scan',
        )
        parser.add_argument(
            '--search-bound',
            type=int,
            default=None,
            help='Largest prime tried when the reference prime gives residue 0',
        )
        super().add_arguments(parser)

    def handle(self, *args, **options):
        parity(self, options)


def parity(self, options):
    if options['all'] == (options['D'] is not None):
        raise CommandError('Give either D or --all')
    with atlas_errors():
        family = parity_family(options['D_max']) if options['all'] else [options['D']]
        witnesses = [parity_witness(D, options['search_bound']) for D in family]
    self.write_report(ParityWitnessSerializer, witnesses, options)
