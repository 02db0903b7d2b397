from atlas.cd_graphs import (
    DualGraph, al_quotient, dual_graph, fibre_constraints, kodaira_symbol, side_swap, to_adjacency_text,
    to_dot,
)
from atlas.choices import FORMAT_JSON, GRAPH_DOT, GRAPH_TEXT
from atlas.exceptions import BadInput
from atlas.fixtures import parse_vertex_map, parse_vertex_pairs
from atlas.management.base import AtlasCommand, atlas_errors
from atlas.reports import to_json
from atlas.serializers import DualGraphSerializer, UnderdeterminedSerializer


class Command(AtlasCommand):
    help = 'Dual graph of the Cerednik-Drinfeld special fibre of M_D at p'

    def add_arguments(self, parser):
        parser.add_argument('D', type=int)
        parser.add_argument('p', type=int)
        parser.add_argument(
            '--crossing',
            type=int,
            default=None,
            help='Total number of edges joining each v_i with v_i\', summed over i',
        )
        parser.add_argument(
            '--forbid',
            action='append',
            default=[],
            help='Vertex pair U-V joined by no edge, may be repeated',
        )
        parser.add_argument(
            '--quotient',
            type=int,
            default=None,
            dest='m',
            help='Quotient by w_M and print its Kodaira symbol',
        )
        parser.add_argument(
            '--vertex-map',
            default='',
            help='Action of w_M on the vertices as a:b,c:d',
        )
        parser.add_argument(
            '--from-data',
            action='store_true',
            default=False,
            help='Take the constraints from cd_fibres.tsv',
        )
        parser.add_argument(
            '--graph-format',
            choices=[GRAPH_TEXT, GRAPH_DOT],
            default=GRAPH_TEXT,
            help='Layout of a determined graph',
        )
        super().add_arguments(parser)

    def handle(self, *args, **options):
        draw(self, options)


def constraints(options):
    crossing = options['crossing']
    forbidden = parse_vertex_pairs(','.join(options['forbid']))
    m = options['m']
    vertex_map = parse_vertex_map(options['vertex_map'])
    if options['from_data']:
        row = fibre_constraints(options['D'], options['p'], options['data_dir'])
        if row is None:
            raise BadInput('no constraint data for D={} at p={}'.format(options['D'], options['p']))
        crossing, forbidden = row.crossing, row.forbidden
        if m is None:
            m = row.m
        if not vertex_map:
            vertex_map = row.vertex_map
    return crossing, forbidden, m, vertex_map


def draw(self, options):
    with atlas_errors():
        crossing, forbidden, m, vertex_map = constraints(options)
        graph = dual_graph(options['D'], options['p'], crossing, forbidden)
        if not isinstance(graph, DualGraph):
            self.write_report(UnderdeterminedSerializer, [graph], options)
            return
        symbol = None
        if m is not None:
            if not vertex_map and m == options['p']:
                vertex_map = side_swap(graph)
            graph = al_quotient(graph, vertex_map)
            symbol = kodaira_symbol(graph)

    if options['format'] == FORMAT_JSON:
        data = dict(DualGraphSerializer(graph).data)
        if symbol is not None:
            data['kodaira'] = str(symbol)
        self.stdout.write(to_json(data), ending='')
        return
    if options['graph_format'] == GRAPH_DOT:
        text = to_dot(graph)
    else:
        text = to_adjacency_text(graph)
    if symbol is not None:
        text += '# kodaira: {}\n'.format(symbol)
    self.stdout.write(text, ending='')
