"""
树与毛毛虫树模块的测试

本模块测试树的构造与校验，以及三种独立多项式算法之间的一致性。
"""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from indcat.core.errors import EnumerationSizeError, ParameterError
from indcat.core.polyalg import Polynomial
from indcat.core.treegraph import (
    CaterpillarSpec,
    Tree,
    build_caterpillar,
    indpoly,
    indpoly_bruteforce,
    indpoly_deletion,
    indpoly_treedp,
    random_tree,
)


class TestTree(unittest.TestCase):
    """测试树的构造与校验"""

    def test_edges_are_normalized(self):
        tree = Tree(3, ((2, 1), (1, 0)))
        self.assertEqual(tree.edges, ((0, 1), (1, 2)))

    def test_invalid_trees_rejected(self):
        with self.assertRaises(ValueError):
            Tree(0, ())
        with self.assertRaises(ValueError):
            Tree(3, ((0, 1),))
        with self.assertRaises(ValueError):
            Tree(3, ((0, 1), (0, 1)))
        with self.assertRaises(ValueError):
            Tree(2, ((0, 0),))
        with self.assertRaises(ValueError):
            Tree(4, ((0, 1), (1, 2), (2, 0)))
        with self.assertRaises(ValueError):
            Tree(2, ((0, 5),))

    def test_dict_round_trip(self):
        tree = build_caterpillar(CaterpillarSpec((2, 1)))
        self.assertEqual(Tree.from_dict(tree.to_dict()), tree)

    def test_from_prufer(self):
        tree = Tree.from_prufer([])
        self.assertEqual(tree.vertex_count, 2)
        star = Tree.from_prufer([0, 0])
        self.assertEqual(star.vertex_count, 4)
        self.assertEqual(star.edges, ((0, 1), (0, 2), (0, 3)))

    def test_random_tree_is_deterministic(self):
        self.assertEqual(random_tree(9, seed=5), random_tree(9, seed=5))
        self.assertEqual(random_tree(1, seed=0).vertex_count, 1)
        with self.assertRaises(ParameterError):
            random_tree(0, seed=0)


class TestCaterpillarSpec(unittest.TestCase):
    """测试毛毛虫参数"""

    def test_basic_properties(self):
        spec = CaterpillarSpec((4, 9, 9, 10))
        self.assertEqual(spec.n, 4)
        self.assertEqual(spec.vertex_count, 36)
        self.assertTrue(spec.is_non_decreasing)
        self.assertFalse(CaterpillarSpec((5, 3)).is_non_decreasing)
        self.assertEqual(spec.prefix(2), CaterpillarSpec((4, 9)))
        self.assertEqual(str(spec), "4,9,9,10")

    def test_parse_and_dict(self):
        spec = CaterpillarSpec.parse(" 3, 4 ")
        self.assertEqual(spec.m, (3, 4))
        self.assertEqual(CaterpillarSpec.from_dict({"m": [3, 4], "n": 2}), spec)
        with self.assertRaises(ValueError):
            CaterpillarSpec.from_dict({"m": [3, 4], "n": 3})

    def test_invalid_values_rejected(self):
        with self.assertRaises(ValueError):
            CaterpillarSpec(())
        with self.assertRaises(ValueError):
            CaterpillarSpec((3, 0))
        with self.assertRaises(ValueError):
            CaterpillarSpec.parse("3,x")

    def test_build_caterpillar_layout(self):
        tree = build_caterpillar(CaterpillarSpec((3, 4)))
        self.assertEqual(tree.vertex_count, 9)
        self.assertIn((0, 1), tree.edges)
        graph = tree.to_networkx()
        self.assertEqual(graph.degree(0), 4)
        self.assertEqual(graph.degree(1), 5)


class TestIndependencePolynomial(unittest.TestCase):
    """测试三种独立多项式算法"""

    def test_caterpillar_three_four(self):
        tree = build_caterpillar(CaterpillarSpec((3, 4)))
        expected = Polynomial((1, 9, 28, 44, 40, 22, 7, 1))
        for method in ("treedp", "deletion", "brute"):
            self.assertEqual(indpoly(tree, method), expected, method)

    def test_comb(self):
        tree = build_caterpillar(CaterpillarSpec((1, 1, 1)))
        self.assertEqual(indpoly_bruteforce(tree), Polynomial((1, 6, 10, 5)))
        self.assertEqual(indpoly_treedp(tree), Polynomial((1, 6, 10, 5)))

    def test_small_named_trees(self):
        single = Tree(1, ())
        path = Tree(4, ((0, 1), (1, 2), (2, 3)))
        star = Tree(4, ((0, 1), (0, 2), (0, 3)))
        for tree, expected in ((single, (1, 1)), (path, (1, 4, 3)), (star, (1, 4, 3, 1))):
            self.assertEqual(indpoly_treedp(tree), Polynomial(expected))
            self.assertEqual(indpoly_deletion(tree), Polynomial(expected))
            self.assertEqual(indpoly_bruteforce(tree), Polynomial(expected))

    def test_bruteforce_chunking_does_not_change_result(self):
        tree = build_caterpillar(CaterpillarSpec((2, 3, 2)))
        self.assertEqual(indpoly_bruteforce(tree, chunk_bits=3),
                         indpoly_bruteforce(tree, chunk_bits=20))

    def test_bruteforce_cap(self):
        tree = build_caterpillar(CaterpillarSpec((4, 9, 9, 10)))
        with self.assertRaises(EnumerationSizeError) as ctx:
            indpoly_bruteforce(tree)
        self.assertEqual(ctx.exception.vertex_count, 36)
        self.assertEqual(ctx.exception.cap, 22)
        with self.assertRaises(ParameterError):
            indpoly_bruteforce(Tree(1, ()), cap=31)

    def test_unknown_method(self):
        with self.assertRaises(ParameterError):
            indpoly(Tree(1, ()), "matrix")

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=10 ** 6))
    def test_methods_agree_on_random_trees(self, vertex_count, seed):
        tree = random_tree(vertex_count, seed)
        dp = indpoly_treedp(tree)
        self.assertEqual(indpoly_deletion(tree), dp)
        self.assertEqual(indpoly_bruteforce(tree), dp)
        self.assertEqual(dp[1], vertex_count)


if __name__ == '__main__':
    unittest.main()
