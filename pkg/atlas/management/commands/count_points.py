from atlas.management.base import AtlasCommand, atlas_errors
from atlas.serializers import FrobeniusCountSerializer
from atlas.traces import point_count


class Command(AtlasCommand):
    help = 'Number of points of the Shimura curve M_D over F_(ELL^K)'

    def add_arguments(self, parser):
        parser.add_argument('D', type=int)
        parser.add_argument('ell', type=int)
        parser.add_argument('k', type=int, choices=[1, 2])
        super().add_arguments(parser)

    def handle(self, *args, **options):
        count(self, options)


def count(self, options):
    with atlas_errors():
        result = point_count(options['D'], options['ell'], options['k'])
    self.write_report(FrobeniusCountSerializer, [result], options)
