"""
树与毛毛虫树模块

本模块负责树和毛毛虫树 T(m, n) 的构造，并提供三种互相独立的独立多项式
计算方法，彼此作为对照:

- indpoly_bruteforce: 枚举全部 2^|V| 个顶点子集 (numpy 向量化位运算)
- indpoly_deletion: 递归使用删除恒等式 I(G) = I(G-v) + x I(G-N[v])
- indpoly_treedp: 以顶点 0 为根的自底向上动态规划
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from indcat.core.errors import EnumerationSizeError, ParameterError
from indcat.core.polyalg import Polynomial, mul

logger = logging.getLogger(__name__)

DEFAULT_BRUTEFORCE_CAP = 22
BRUTEFORCE_CEILING = 30
DEFAULT_CHUNK_BITS = 20


@dataclass(frozen=True)
class Tree:
    """
    无向树，顶点编号 0..vertex_count-1

    属性:
        vertex_count: 顶点数 (正整数)
        edges: 边列表，每条边按 (小编号, 大编号) 存储并排序
    """
    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError(f"树至少需要一个顶点: {self.vertex_count}")
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"树中不允许自环: ({u}, {v})")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"边 ({u}, {v}) 的端点超出顶点范围")
            normalized.append((min(u, v), max(u, v)))
        if len(set(normalized)) != len(normalized):
            raise ValueError("树中不允许重边")
        if len(normalized) != self.vertex_count - 1:
            raise ValueError(
                f"{self.vertex_count} 个顶点的树应有 {self.vertex_count - 1} 条边，实际 {len(normalized)} 条"
            )
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        if not nx.is_connected(self.to_networkx()):
            raise ValueError("图不连通，不是树")

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    def neighbor_masks(self) -> List[int]:
        """每个顶点的邻居位掩码"""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def to_dict(self) -> Dict:
        return {"vertex_count": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: Dict) -> "Tree":
        return cls(int(data["vertex_count"]), tuple((int(u), int(v)) for u, v in data["edges"]))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Tree":
        """按排序后的节点重新编号为 0..n-1"""
        relabel = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        edges = tuple((relabel[u], relabel[v]) for u, v in graph.edges())
        return cls(graph.number_of_nodes(), edges)

    @classmethod
    def from_prufer(cls, sequence: Sequence[int]) -> "Tree":
        """由 Prüfer 序列构造 len(sequence)+2 个顶点的树"""
        return cls.from_networkx(nx.from_prufer_sequence(list(sequence)))


def random_tree(vertex_count: int, seed: int) -> Tree:
    """
    生成随机带标号树 (均匀 Prüfer 序列)

    参数:
        vertex_count: 顶点数
        seed: 随机种子，相同种子得到相同的树

    返回:
        Tree: 随机树
    """
    if vertex_count < 1:
        raise ParameterError(f"顶点数必须为正: {vertex_count}")
    if vertex_count == 1:
        return Tree(1, ())
    if vertex_count == 2:
        return Tree(2, ((0, 1),))
    rng = random.Random(seed)
    return Tree.from_prufer([rng.randrange(vertex_count) for _ in range(vertex_count - 2)])


@dataclass(frozen=True)
class CaterpillarSpec:
    """
    毛毛虫树 T(m, n) 的参数

    属性:
        m: 各脊椎顶点的悬挂边数 (m_1..m_n)，均为正整数
    """
    m: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.m)
        if not values:
            raise ValueError("m 不能为空，脊椎长度 n 至少为 1")
        if any(v < 1 for v in values):
            raise ValueError(f"每个 m_i 必须 >= 1: {values}")
        object.__setattr__(self, "m", values)

    @property
    def n(self) -> int:
        """脊椎长度"""
        return len(self.m)

    @property
    def vertex_count(self) -> int:
        return self.n + sum(self.m)

    @property
    def is_non_decreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.m, self.m[1:]))

    def prefix(self, j: int) -> "CaterpillarSpec":
        return CaterpillarSpec(self.m[:j])

    def to_dict(self) -> Dict:
        return {"m": list(self.m), "n": self.n}

    @classmethod
    def from_dict(cls, data: Dict) -> "CaterpillarSpec":
        spec = cls(tuple(data["m"]))
        if "n" in data and int(data["n"]) != spec.n:
            raise ValueError(f"n={data['n']} 与 m 的长度 {spec.n} 不一致")
        return spec

    @classmethod
    def parse(cls, text: str) -> "CaterpillarSpec":
        """解析逗号分隔的 m，例如 "4,9,9,10" """
        parts = [p.strip() for p in text.split(",") if p.strip()]
        return cls(tuple(int(p) for p in parts))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.m)


def build_caterpillar(spec: CaterpillarSpec) -> Tree:
    """
    构造毛毛虫树 T(m, n)

    编号约定: 脊椎顶点按路径顺序为 0..n-1，随后按脊椎顶点升序依次编号各自的叶子。

    参数:
        spec: 毛毛虫参数

    返回:
        Tree: 顶点数为 n + sum(m) 的树
    """
    n = spec.n
    edges = [(i, i + 1) for i in range(n - 1)]
    next_vertex = n
    for spine_vertex, leaves in enumerate(spec.m):
        for _ in range(leaves):
            edges.append((spine_vertex, next_vertex))
            next_vertex += 1
    return Tree(next_vertex, tuple(edges))


def _popcount(masks: np.ndarray, bits: int) -> np.ndarray:
    counts = np.zeros(masks.shape, dtype=np.int64)
    for v in range(bits):
        counts += (masks >> v) & 1
    return counts


def indpoly_bruteforce(tree: Tree, cap: Optional[int] = None,
                       chunk_bits: int = DEFAULT_CHUNK_BITS) -> Polynomial:
    """
    枚举全部顶点子集，按大小统计独立集个数

    子集区间按 2^chunk_bits 分块处理，各块的按基数计数直接相加，结果与分块方式无关。

    参数:
        tree: 树
        cap: 顶点数上限，默认 22，硬上限 30
        chunk_bits: 每块子集数的以 2 为底的对数

    返回:
        Polynomial: 独立多项式

    异常:
        EnumerationSizeError: 顶点数超过 cap
    """
    cap = DEFAULT_BRUTEFORCE_CAP if cap is None else cap
    if cap > BRUTEFORCE_CEILING:
        raise ParameterError(f"暴力枚举上限不能超过 {BRUTEFORCE_CEILING}: {cap}")
    n = tree.vertex_count
    if n > cap:
        raise EnumerationSizeError(n, cap)

    neighbor_masks = tree.neighbor_masks()
    totals = np.zeros(n + 1, dtype=np.int64)
    total_subsets = 1 << n
    chunk = 1 << max(1, chunk_bits)
    for start in range(0, total_subsets, chunk):
        subsets = np.arange(start, min(start + chunk, total_subsets), dtype=np.int64)
        independent = np.ones(subsets.shape, dtype=bool)
        for v, mask in enumerate(neighbor_masks):
            contains_v = ((subsets >> v) & 1).astype(bool)
            independent &= ~(contains_v & ((subsets & mask) != 0))
        sizes = _popcount(subsets[independent], n)
        totals += np.bincount(sizes, minlength=n + 1)[: n + 1]
    return Polynomial(tuple(int(c) for c in totals))


def indpoly_deletion(tree: Tree) -> Polynomial:
    """
    递归使用删除恒等式 I(G) = I(G-v) + x I(G-N[v]) 计算独立多项式

    枢轴取度数最大的顶点 (同度取编号最小者)；中间图不连通时取各分量多项式之积。
    同一顶点集对应的子图只计算一次。

    参数:
        tree: 树

    返回:
        Polynomial: 独立多项式
    """
    graph = tree.to_networkx()
    cache: Dict[FrozenSet[int], Polynomial] = {}

    def solve(vertices: FrozenSet[int]) -> Polynomial:
        if not vertices:
            return Polynomial.ONE
        if vertices in cache:
            return cache[vertices]
        sub = graph.subgraph(vertices)
        components = [frozenset(c) for c in nx.connected_components(sub)]
        if len(components) > 1:
            result = Polynomial.ONE
            for component in sorted(components, key=min):
                result = mul(result, solve(component))
        elif len(vertices) == 1:
            result = Polynomial((1, 1))
        else:
            pivot = max(sorted(vertices), key=lambda u: (sub.degree(u), -u))
            closed = frozenset(sub.neighbors(pivot)) | {pivot}
            result = solve(vertices - {pivot}) + solve(vertices - closed).shift(1)
        cache[vertices] = result
        return result

    return solve(frozenset(graph.nodes()))


def indpoly_treedp(tree: Tree) -> Polynomial:
    """
    有根树动态规划

    每个顶点 v 维护 (A_v, B_v): A_v 为子树中不含 v 的独立集多项式 = prod(A_c + B_c)，
    B_v 为含 v 的独立集多项式 = x * prod(A_c)。结果为 A_root + B_root。
    """
    graph = tree.to_networkx()
    parent = nx.dfs_predecessors(graph, 0)
    without: Dict[int, Polynomial] = {}
    with_v: Dict[int, Polynomial] = {}
    for v in nx.dfs_postorder_nodes(graph, 0):
        a = Polynomial.ONE
        b = Polynomial.X
        for c in graph.neighbors(v):
            if parent.get(v) == c:
                continue
            a = mul(a, without[c] + with_v[c])
            b = mul(b, without[c])
        without[v] = a
        with_v[v] = b
    return without[0] + with_v[0]


INDPOLY_METHODS = ("treedp", "deletion", "brute")


def indpoly(tree: Tree, method: str = "treedp", cap: Optional[int] = None,
            chunk_bits: int = DEFAULT_CHUNK_BITS) -> Polynomial:
    """按方法名分派独立多项式的计算"""
    if method == "treedp":
        return indpoly_treedp(tree)
    if method == "deletion":
        return indpoly_deletion(tree)
    if method == "brute":
        return indpoly_bruteforce(tree, cap, chunk_bits)
    raise ParameterError(f"未知的计算方法: {method}，可选 {INDPOLY_METHODS}")
