from django.test import SimpleTestCase

from atlas.cd_graphs import (
    DualGraph, Edge, Underdetermined, al_quotient, count_skeleton, dual_graph, eichler_class_number,
    fibre_constraints, induced_action, is_torsion_free, kodaira_symbol, side_swap, to_adjacency_text,
    to_dot,
)
from atlas.exceptions import BadInput, NotGenusOne, NotInvolution, TorsionPresent


def graph_210():
    return dual_graph(210, 3, crossing=4, forbidden=(('v1', 'v2'), ("v1'", "v2'")))


class EichlerClassNumberTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(eichler_class_number(70, 1), 2)
        self.assertEqual(eichler_class_number(70, 3), 8)
        self.assertEqual(eichler_class_number(2, 1), 1)
        self.assertEqual(eichler_class_number(2, 13), 3)

    def test_rejects(self):
        with self.assertRaises(BadInput):
            eichler_class_number(6, 1)
        with self.assertRaises(BadInput):
            eichler_class_number(2, 2)

    def test_torsion(self):
        self.assertTrue(is_torsion_free(210, 3))
        self.assertFalse(is_torsion_free(26, 13))


class DualGraphTests(SimpleTestCase):
    """
    Dual graphs of Cerednik-Drinfeld fibres and their Atkin-Lehner quotients
    """
    def test_skeleton(self):
        skeleton = count_skeleton(26, 13)
        self.assertEqual((skeleton.vertices, skeleton.edges), (2, 3))
        self.assertTrue(skeleton.torsion)
        self.assertIsNone(skeleton.degree)

    def test_unconstrained(self):
        result = dual_graph(210, 3)
        self.assertIsInstance(result, Underdetermined)
        self.assertEqual((result.vertices, result.edges, result.degree), (4, 8, 4))

    def test_unique_graph(self):
        graph = graph_210()
        self.assertIsInstance(graph, DualGraph)
        self.assertEqual(graph.multiplicity('v1', "v1'"), 2)
        self.assertEqual(graph.multiplicity('v2', "v2'"), 2)
        self.assertEqual(graph.multiplicity('v1', "v2'"), 2)
        self.assertEqual(graph.multiplicity('v2', "v1'"), 2)
        self.assertEqual(graph.betti, 5)

    def test_underdetermined_without_crossing(self):
        result = dual_graph(210, 3, forbidden=(('v1', 'v2'),))
        self.assertIsInstance(result, Underdetermined)
        self.assertEqual(result.candidates, 3)

    def test_torsion_with_constraints(self):
        with self.assertRaises(TorsionPresent):
            dual_graph(26, 13, crossing=1)

    def test_side_limit(self):
        result = dual_graph(210, 3, crossing=4, max_side=1)
        self.assertIsInstance(result, Underdetermined)
        self.assertIsNone(result.candidates)

    def test_unknown_vertex(self):
        with self.assertRaises(BadInput):
            dual_graph(210, 3, crossing=4, forbidden=(('v1', 'v7'),))

    def test_fibre_data(self):
        row = fibre_constraints(210, 3)
        self.assertEqual(row.crossing, 4)
        self.assertEqual(row.m, 210)
        self.assertEqual(row.vertex_map["v1'"], 'v1')
        self.assertIsNone(fibre_constraints(26, 13))


class QuotientTests(SimpleTestCase):
    def test_quotient_210(self):
        graph = graph_210()
        quotient = al_quotient(graph, side_swap(graph))
        self.assertEqual(len(quotient.vertices), 2)
        self.assertEqual(len(quotient.edges), 2)
        self.assertEqual(str(kodaira_symbol(quotient)), 'I_2')

    def test_induced_action(self):
        graph = graph_210()
        action = induced_action(graph, side_swap(graph))
        self.assertEqual(action, (0, 1, 4, 5, 2, 3, 6, 7))

    def test_identity(self):
        graph = graph_210()
        quotient = al_quotient(graph, {})
        self.assertEqual(quotient.vertices, graph.vertices)
        self.assertEqual(quotient.edges, graph.edges)

    def test_free_action(self):
        square = DualGraph(('a', 'b', 'c', 'd'), (Edge('a', 'b'), Edge('b', 'c'), Edge('c', 'd'), Edge('d', 'a')))
        quotient = al_quotient(square, {'a': 'c', 'b': 'd'})
        self.assertEqual(len(quotient.vertices), 2)
        self.assertEqual(len(quotient.edges), 2)

    def test_not_involution(self):
        graph = graph_210()
        with self.assertRaises(NotInvolution):
            al_quotient(graph, {'v1': 'v2', 'v2': "v1'"})

    def test_kodaira(self):
        loop = DualGraph(('a',), (Edge('a', 'a'),))
        self.assertEqual(str(kodaira_symbol(loop)), 'I_1')
        long_loop = DualGraph(('a', 'b', 'c'), (Edge('a', 'b', 2), Edge('b', 'a'), Edge('b', 'c')))
        self.assertEqual(str(kodaira_symbol(long_loop)), 'I_3')
        with self.assertRaises(NotGenusOne):
            kodaira_symbol(DualGraph(('a', 'b'), (Edge('a', 'b'),)))


class ExportTests(SimpleTestCase):
    def test_adjacency_text(self):
        lines = to_adjacency_text(graph_210()).splitlines()
        self.assertEqual(lines[0], "# vertices: v1 v2 v1' v2'")
        self.assertEqual(lines[1], "v1\tv1'\t1")
        self.assertEqual(len(lines), 9)

    def test_dot(self):
        text = to_dot(graph_210())
        self.assertTrue(text.startswith('graph dual_graph {'))
        self.assertIn('{ rank=same; "v1" "v2" }', text)
        self.assertEqual(text.count(' -- '), 8)
