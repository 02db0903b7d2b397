from atlas.invariants import curve_invariants
from atlas.management.base import AtlasCommand, atlas_errors
from atlas.serializers import CurveInvariantsSerializer


class Command(AtlasCommand):
    help = 'Genus, elliptic points and n(w_m) for each Atkin-Lehner involution of V_D'

    def add_arguments(self, parser):
        parser.add_argument('D', nargs='+', type=int)
        super().add_arguments(parser)

    def handle(self, *args, **options):
        show_invariants(self, options)


def show_invariants(self, options):
    with atlas_errors():
        rows = [curve_invariants(D) for D in options['D']]
    self.write_report(CurveInvariantsSerializer, rows, options)
