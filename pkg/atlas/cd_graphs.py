"""
Dual graphs of the Cerednik-Drinfeld special fibre M_D (x) F_p for p | D.

The fibre is two copies of a genus zero curve, one for each side of the
bipartite dual graph, crossing at h(D/p, p) double points.  Vertices v_i
sit on one side and v_i' on the other, w_p exchanges v_i and v_i'.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import gcd, prod

from django.conf import settings

from .arith import factor_squarefree, kronecker
from .exceptions import (
    BadInput, InternalInconsistency, NotGenusOne, NotInvolution, TorsionPresent,
)
from .fixtures import load_cd_fibres
from .invariants import as_discriminant, genus

logger = logging.getLogger(__name__)


def eichler_class_number(delta, nu=1):
    """Class number h(delta, nu) of an Eichler order of level nu in the definite algebra of discriminant delta."""
    delta, nu = factor_squarefree(delta), factor_squarefree(nu)
    if delta.omega % 2 == 0:
        raise BadInput('{} has an even number of prime factors, the algebra is not definite'.format(delta))
    if gcd(delta.value, nu.value) != 1:
        raise BadInput('gcd({}, {}) > 1'.format(delta, nu))

    def local(d):
        return (prod(1 - kronecker(d, p) for p in delta.primes)
                * prod(1 + kronecker(d, q) for q in nu.primes))

    mass = Fraction(prod(p - 1 for p in delta.primes) * prod(q + 1 for q in nu.primes), 12)
    h = mass + Fraction(local(-4), 4) + Fraction(local(-3), 3)
    if h.denominator != 1 or h < 1:
        raise InternalInconsistency('h({}, {}) = {}'.format(delta, nu, h))
    return int(h)


def is_torsion_free(D, p):
    """True when the group uniformizing M_D at p has no elliptic elements."""
    D = as_discriminant(D)
    if D.value % p:
        raise BadInput('{} does not divide {}'.format(p, D))
    delta = [q for q in D.primes if q != p]
    return (prod(1 - kronecker(-4, q) for q in delta) == 0
            and prod(1 - kronecker(-3, q) for q in delta) == 0)


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    length: int = 1

    @property
    def ends(self):
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple
    edges: tuple
    sides: dict = field(default_factory=dict, hash=False)

    def degree(self, vertex):
        return sum((edge.u == vertex) + (edge.v == vertex) for edge in self.edges)

    def multiplicity(self, u, v):
        return sum(1 for edge in self.edges if edge.ends == frozenset((u, v)))

    def components(self):
        parent = {vertex: vertex for vertex in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for edge in self.edges:
            parent[find(edge.u)] = find(edge.v)
        return len({find(vertex) for vertex in self.vertices})

    @property
    def betti(self):
        return len(self.edges) - len(self.vertices) + self.components()


@dataclass(frozen=True)
class Underdetermined:
    """Counts of a dual graph the available constraints do not pin down."""
    D: int
    p: int
    vertices: int
    edges: int
    degree: int
    torsion: bool
    candidates: int = None


@dataclass(frozen=True)
class KodairaSymbol:
    n: int

    def __str__(self):
        return 'I_{}'.format(self.n)


def side_labels(h):
    return tuple('v{}'.format(i) for i in range(1, h + 1)), tuple("v{}'".format(i) for i in range(1, h + 1))


def _graph_from_matrix(matrix):
    left, right = side_labels(len(matrix))
    edges = []
    for i, row in enumerate(matrix):
        for j, count in enumerate(row):
            edges.extend(Edge(left[i], right[j]) for _ in range(count))
    sides = dict.fromkeys(left, 0)
    sides.update(dict.fromkeys(right, 1))
    return DualGraph(left + right, tuple(edges), sides)


def _matrices(h, degree, zeros):
    """Every h x h non-negative matrix with all line sums equal to degree and zero at the given cells."""
    matrix = [[0] * h for _ in range(h)]
    capacity = [degree] * h

    def fill(i, j, remaining):
        if i == h:
            yield tuple(tuple(row) for row in matrix)
            return
        if j == h - 1:
            value = remaining
            if value > capacity[j] or (value and (i, j) in zeros):
                return
            matrix[i][j] = value
            capacity[j] -= value
            yield from fill(i + 1, 0, degree)
            capacity[j] += value
            return
        top = 0 if (i, j) in zeros else min(remaining, capacity[j])
        for value in range(top + 1):
            matrix[i][j] = value
            capacity[j] -= value
            yield from fill(i, j + 1, remaining - value)
            capacity[j] += value
        matrix[i][j] = 0

    yield from fill(0, 0, degree)


def _canonical(matrix):
    """Smallest relabelling under a common permutation of both sides and the side swap."""
    h = len(matrix)
    images = []
    for candidate in (matrix, tuple(zip(*matrix))):
        for sigma in permutations(range(h)):
            images.append(tuple(tuple(candidate[sigma[i]][sigma[j]] for j in range(h)) for i in range(h)))
    return min(images)


def _vertex_index(label, h):
    side = 1 if label.endswith("'") else 0
    try:
        index = int(label.rstrip("'")[1:]) - 1
    except ValueError:
        index = -1
    if not label.startswith('v') or not 0 <= index < h:
        raise BadInput('unknown vertex {!r}'.format(label))
    return side, index


def _search(h, degree, crossing, forbidden):
    zeros = set()
    for u, v in forbidden:
        (side_u, i), (side_v, j) = _vertex_index(u, h), _vertex_index(v, h)
        if side_u == side_v:
            # same side vertices are never adjacent
            continue
        zeros.add((i, j) if side_u == 0 else (j, i))
    found = {}
    for matrix in _matrices(h, degree, zeros):
        if crossing is not None and sum(matrix[i][i] for i in range(h)) != crossing:
            continue
        if _graph_from_matrix(matrix).components() != 1:
            continue
        found.setdefault(_canonical(matrix), matrix)
    return list(found.values())


def count_skeleton(D, p, candidates=None):
    D = as_discriminant(D)
    if D.value % p:
        raise BadInput('{} does not divide {}'.format(p, D))
    delta = D.value // p
    h = eichler_class_number(delta, 1)
    edges = eichler_class_number(delta, p)
    torsion = not is_torsion_free(D, p)
    return Underdetermined(D.value, p, 2 * h, edges, None if torsion else p + 1, torsion, candidates)


def dual_graph(D, p, crossing=None, forbidden=(), max_side=None):
    """
    The dual graph of M_D (x) F_p when the constraint data pins down a
    unique graph up to isomorphism, otherwise the count skeleton.
    """
    skeleton = count_skeleton(D, p)
    if crossing is None and not forbidden:
        return skeleton
    if skeleton.torsion:
        raise TorsionPresent(skeleton.D, p)
    h = skeleton.vertices // 2
    if skeleton.edges != h * (p + 1):
        raise InternalInconsistency('h({0}, {1}) = {2} but the graph is {3}-regular on {4} vertices'.format(
            skeleton.D // p, p, skeleton.edges, p + 1, skeleton.vertices))
    if skeleton.edges - skeleton.vertices + 1 != genus(skeleton.D):
        raise InternalInconsistency('dual graph of M_{} at {} has the wrong first Betti number'.format(skeleton.D, p))
    if max_side is None:
        max_side = settings.ATLAS_CD_SEARCH_SIDE
    if h > max_side:
        logger.info('M_%s at %s: %s vertices per side, not searching', skeleton.D, p, h)
        return skeleton
    matrices = _search(h, p + 1, crossing, forbidden)
    logger.debug('M_%s at %s: %s candidate graphs', skeleton.D, p, len(matrices))
    if len(matrices) != 1:
        return Underdetermined(skeleton.D, p, skeleton.vertices, skeleton.edges, p + 1, False, len(matrices))
    return _graph_from_matrix(matrices[0])


def side_swap(graph):
    """The vertex map v_i <-> v_i' of w_p."""
    mapping = {}
    for vertex in graph.vertices:
        mapping[vertex] = vertex[:-1] if vertex.endswith("'") else vertex + "'"
    return mapping


def _complete(graph, vertex_map):
    mapping = {vertex: vertex for vertex in graph.vertices}
    for vertex, image in vertex_map.items():
        if vertex not in mapping:
            raise NotInvolution('{} is not a vertex of the graph'.format(vertex))
        mapping[vertex] = image
        if image in mapping and image not in vertex_map:
            mapping[image] = vertex
    for vertex, image in mapping.items():
        if image not in mapping:
            raise NotInvolution('{} is sent to the unknown vertex {}'.format(vertex, image))
        if mapping[image] != vertex:
            raise NotInvolution('vertex map is not an involution at {}'.format(vertex))
    return mapping


def induced_action(graph, vertex_map):
    """Edge permutation, as a tuple of indices, of a vertex involution; parallel edges map in index order."""
    mapping = _complete(graph, vertex_map)
    groups = defaultdict(list)
    for index, edge in enumerate(graph.edges):
        groups[edge.ends].append(index)
    action = [None] * len(graph.edges)
    for ends, indices in groups.items():
        image = frozenset(mapping[vertex] for vertex in ends)
        targets = groups.get(image, [])
        if len(targets) != len(indices):
            raise NotInvolution('{} edges over {} but {} over its image'.format(
                len(indices), sorted(ends), len(targets)))
        for source, target in zip(indices, targets):
            if graph.edges[source].length != graph.edges[target].length:
                raise NotInvolution('edge {} and its image have different lengths'.format(source))
            action[source] = target
    if any(action[action[i]] != i for i in range(len(action))):
        raise NotInvolution('induced edge map is not an involution')
    return tuple(action)


def al_quotient(graph, vertex_map):
    mapping = _complete(graph, vertex_map)
    action = induced_action(graph, mapping)
    orbit = {vertex: min(vertex, mapping[vertex]) for vertex in graph.vertices}
    vertices = tuple(sorted(set(orbit.values()), key=graph.vertices.index))
    edges = []
    for index, edge in enumerate(graph.edges):
        image = action[index]
        if image < index:
            continue
        if image == index and mapping[edge.u] == edge.v and edge.u != edge.v:
            # the node is fixed with its branches swapped, a smooth point downstairs
            continue
        edges.append(Edge(orbit[edge.u], orbit[edge.v], edge.length))
    return DualGraph(vertices, tuple(edges))


def kodaira_symbol(graph):
    betti = graph.betti
    if betti != 1 or graph.components() != 1:
        raise NotGenusOne(betti)
    edges = list(graph.edges)
    while True:
        degree = defaultdict(int)
        for edge in edges:
            degree[edge.u] += 1
            degree[edge.v] += 1
        leaves = {vertex for vertex, d in degree.items() if d == 1}
        if not leaves:
            break
        edges = [edge for edge in edges if edge.u not in leaves and edge.v not in leaves]
    return KodairaSymbol(sum(edge.length for edge in edges))


def to_adjacency_text(graph):
    lines = ['# vertices: {}'.format(' '.join(graph.vertices))]
    for edge in graph.edges:
        lines.append('{}\t{}\t{}'.format(edge.u, edge.v, edge.length))
    return '\n'.join(lines) + '\n'


def to_dot(graph, name='dual_graph'):
    lines = ['graph {} {{'.format(name)]
    for side in (0, 1):
        members = [vertex for vertex in graph.vertices if graph.sides.get(vertex) == side]
        if members:
            lines.append('  {{ rank=same; {} }}'.format(' '.join('"{}"'.format(v) for v in members)))
    for vertex in graph.vertices:
        if vertex not in graph.sides:
            lines.append('  "{}";'.format(vertex))
    for edge in graph.edges:
        label = ' [label={}]'.format(edge.length) if edge.length != 1 else ''
        lines.append('  "{}" -- "{}"{};'.format(edge.u, edge.v, label))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def fibre_constraints(D, p, data_dir=None):
    for row in load_cd_fibres(data_dir):
        if row.D == int(D) and row.p == int(p):
            return row
    return None
