"""Graph builders, coalescence, closed-form edge bounds and extremal recipes."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.config import Config
from core.decompose import add_ear
from core.graph import (
    Graph,
    GraphError,
    UnsupportedParameterError,
    UnsupportedSizeError,
    canonical_form,
    parse_graph6,
)

THETA_TILDE_FIXTURE = Path(__file__).parent / 'data' / 'theta_tilde.g6'


@dataclass(frozen=True)
class ThetaSpec:
    """Path lengths of a theta graph, kept sorted ascending."""

    lengths: Tuple[int, ...]

    def __post_init__(self) -> None:
        lengths = tuple(sorted(self.lengths))
        if len(lengths) < 3:
            raise GraphError(f"A theta graph needs at least 3 paths, got {len(lengths)}")
        if lengths[0] < 1:
            raise GraphError("Theta path lengths must be positive")
        if lengths.count(1) > 1:
            raise GraphError("At most one theta path may have length 1")
        object.__setattr__(self, 'lengths', lengths)

    @classmethod
    def of(cls, *lengths: int) -> ThetaSpec:
        return cls(tuple(lengths))

    @classmethod
    def parse(cls, text: str) -> ThetaSpec:
        """Parse '1,2,2' or 'theta(1,2,2)'."""
        body = text.strip()
        if body.startswith('theta(') and body.endswith(')'):
            body = body[len('theta('):-1]
        try:
            return cls(tuple(int(part) for part in body.split(',')))
        except ValueError as e:
            raise GraphError(f"Invalid theta spec {text!r}: {e}")

    @property
    def t(self) -> int:
        return len(self.lengths)

    @property
    def order(self) -> int:
        return 2 + sum(length - 1 for length in self.lengths)

    @property
    def size(self) -> int:
        return sum(self.lengths)

    def __str__(self) -> str:
        return f"theta({','.join(map(str, self.lengths))})"


class EarAttachment(Enum):
    """Where a theta-prime ear meets its base theta graph."""
    SAME_PATH = "same-path"
    BRANCH_ENDPOINT = "branch-endpoint"
    CROSS_PATH = "cross-path"


@dataclass(frozen=True)
class ThetaPrimeRealization:
    graph: Graph
    base: ThetaSpec
    ear_length: int
    attachment: EarAttachment
    endpoints: Tuple[int, int]


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def build_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"A complete graph needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def theta_paths(spec: ThetaSpec) -> List[List[int]]:
    """Vertex sequences of the paths of build_theta(spec), each from 0 to 1."""
    paths = []
    fresh = 2
    for length in spec.lengths:
        interior = list(range(fresh, fresh + length - 1))
        fresh += length - 1
        paths.append([0] + interior + [1])
    return paths


def build_theta(spec: ThetaSpec) -> Graph:
    """Theta graph with branch vertices 0 and 1; interiors numbered path by path."""
    edges = [(a, b) for path in theta_paths(spec) for a, b in zip(path, path[1:])]
    return Graph.from_edges(spec.order, edges)


def theta_specs(max_order: int, t: Optional[int] = None) -> Iterator[ThetaSpec]:
    """Every theta spec with order <= max_order (restricted to t paths if given)."""

    def extend(prefix: List[int], budget: int, paths_left: Optional[int]) -> Iterator[Tuple[int, ...]]:
        if len(prefix) >= 3 and (paths_left is None or paths_left == 0):
            yield tuple(prefix)
        if paths_left == 0:
            return
        start = prefix[-1] if prefix else 1
        if prefix == [1]:
            start = 2
        for length in range(start, budget + 2):
            yield from extend(prefix + [length], budget - (length - 1),
                              None if paths_left is None else paths_left - 1)

    for lengths in extend([], max_order - 2, t):
        yield ThetaSpec(lengths)


def build_theta_prime(base: ThetaSpec, ear_length: int, x: int, y: int) -> Graph:
    """Add an ear of the given length between vertices x and y of build_theta(base)."""
    return add_ear(build_theta(base), x, y, ear_length)


def theta_prime_realizations(max_order: int, endpoints: str = 'relaxed') -> Iterator[ThetaPrimeRealization]:
    """Every theta-prime graph on at most max_order vertices, with its attachment case.

    Under 'strict' endpoints neither ear end may be a branch vertex of the base.
    """
    for base in theta_specs(max_order, t=3):
        graph = build_theta(base)
        path_of = {}
        for index, path in enumerate(theta_paths(base)):
            for v in path[1:-1]:
                path_of[v] = index
        for x, y in itertools.combinations(range(base.order), 2):
            hits = len({x, y} & {0, 1})
            if hits == 2 or (hits == 1 and endpoints == 'strict'):
                continue
            if hits == 1:
                case = EarAttachment.BRANCH_ENDPOINT
            elif path_of[x] == path_of[y]:
                case = EarAttachment.SAME_PATH
            else:
                case = EarAttachment.CROSS_PATH
            for ear_length in range(1, max_order - base.order + 2):
                if ear_length == 1 and graph.has_edge(x, y):
                    continue
                yield ThetaPrimeRealization(
                    graph=add_ear(graph, x, y, ear_length),
                    base=base,
                    ear_length=ear_length,
                    attachment=case,
                    endpoints=(x, y),
                )


def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Identify v1 in g1 with v2 in g2.

    g1 keeps its labels; the other vertices of g2 follow in order.
    """
    if not 0 <= v1 < g1.n:
        raise GraphError(f"Vertex {v1} out of range for the first graph (n={g1.n})")
    if not 0 <= v2 < g2.n:
        raise GraphError(f"Vertex {v2} out of range for the second graph (n={g2.n})")
    mapping = {}
    fresh = g1.n
    for w in range(g2.n):
        if w == v2:
            mapping[w] = v1
        else:
            mapping[w] = fresh
            fresh += 1
    moved = [(mapping[a], mapping[b]) for a, b in g2.edges]
    return Graph.from_edges(fresh, list(g1.edges) + moved)


# bounds

def _check_k(k: int, supported: range) -> None:
    if k not in supported:
        raise UnsupportedParameterError(
            f"k={k} is outside the supported range {supported.start}..{supported.stop - 1}"
        )


def max_edges(n: int, k: int) -> int:
    """Maximum size of a connected k-cactus on n vertices, for k in 1..4."""
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    _check_k(k, range(1, 5))
    if k == 1:
        return 3 * (n - 1) // 2
    if k in (2, 3):
        return (2 * k + 1) * (n - 1) // (k + 1)
    return 2 * n - 2 if n % 3 == 1 else 2 * n - 3


@dataclass(frozen=True)
class EdgeBound:
    """Upper bound on the size of a 2-connected k-cactus.

    `tight` means the value is attained; `small_case` marks the exact
    values known for 3 <= n <= 5.
    """

    value: int
    tight: bool
    small_case: bool = False

    def to_dict(self) -> Dict[str, object]:
        return {'max_edges': self.value, 'tight': self.tight, 'small_case': self.small_case}


# (n, k) -> (maximum size, the maximizers as originally listed)
SMALL_CASES: Dict[Tuple[int, int], Tuple[int, Tuple[str, ...]]] = {
    (4, 1): (4, ('C4',)),
    (4, 2): (5, ('theta(1,2,2)',)),
    (4, 3): (5, ('theta(1,2,2)',)),
    (4, 4): (6, ('K4',)),
    (5, 1): (5, ('C5',)),
    (5, 2): (6, ('theta(1,2,2)', 'theta(1,2,3)')),
    (5, 3): (7, ('theta(1,2,2,2)',)),
    (5, 4): (7, ('theta(1,2,2,2)', 'theta~1', 'theta~2')),
}


def max_edges_two_connected(n: int, k: int) -> EdgeBound:
    if n < 3:
        raise GraphError(f"A 2-connected graph needs at least 3 vertices, got {n}")
    if k < 1:
        raise UnsupportedParameterError(f"k must be a positive integer, got {k}")
    if n == 3:
        return EdgeBound(3, True, True)
    if (n, k) in SMALL_CASES:
        return EdgeBound(SMALL_CASES[(n, k)][0], True, True)
    return EdgeBound(n + k - 1, n >= k + 2)


# recipes

@dataclass(frozen=True)
class RecipePart:
    name: str
    graph: Graph

    @classmethod
    def complete(cls, n: int) -> RecipePart:
        return cls(f"K{n}", build_complete(n))

    @classmethod
    def cycle(cls, n: int) -> RecipePart:
        return cls(f"C{n}", build_cycle(n))

    @classmethod
    def theta(cls, *lengths: int) -> RecipePart:
        spec = ThetaSpec(tuple(lengths))
        return cls(str(spec), build_theta(spec))


@dataclass(frozen=True)
class ExtremalRecipe:
    """A multiset of blocks whose coalescence is an extremal k-cactus."""

    n: int
    k: int
    parts: Tuple[RecipePart, ...]
    rule: str
    origin: str = 'stated'
    note: Optional[str] = None

    @property
    def order(self) -> int:
        return sum(part.graph.n for part in self.parts) - (len(self.parts) - 1)

    @property
    def edge_total(self) -> int:
        return sum(part.graph.size for part in self.parts)

    def signature(self) -> Tuple[str, ...]:
        return tuple(sorted(part.name for part in self.parts))

    def describe(self) -> str:
        counts = Counter(part.name for part in self.parts)
        return ' + '.join(name if count == 1 else f"{name} x{count}"
                          for name, count in sorted(counts.items()))

    def to_dict(self) -> Dict[str, object]:
        return {
            'n': self.n,
            'k': self.k,
            'rule': self.rule,
            'origin': self.origin,
            'parts': dict(sorted(Counter(part.name for part in self.parts).items())),
            'edges': self.edge_total,
            'note': self.note,
        }


@lru_cache(maxsize=None)
def theta_tilde() -> Tuple[Graph, Graph]:
    """The two exceptional 2-connected 4-cacti on 5 vertices, ordered by canonical form."""
    lines = [line for line in THETA_TILDE_FIXTURE.read_text(encoding='ascii').splitlines() if line.strip()]
    graphs = sorted((parse_graph6(line) for line in lines), key=canonical_form)
    if len(graphs) != 2:
        raise GraphError(f"Expected 2 fixture graphs in {THETA_TILDE_FIXTURE}, found {len(graphs)}")
    return graphs[0], graphs[1]


def _copies(numerator: int, denominator: int) -> Optional[int]:
    if numerator < 0 or numerator % denominator:
        return None
    return numerator // denominator


def _catalog(n: int, k: int, stated: bool) -> List[ExtremalRecipe]:
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    _check_k(k, range(1, 5))
    if n == 1:
        return [ExtremalRecipe(1, k, (RecipePart.complete(1),), rule='trivial')]

    k2, k3, k4 = RecipePart.complete(2), RecipePart.complete(3), RecipePart.complete(4)
    recipes: List[ExtremalRecipe] = []

    def add(parts: Sequence[RecipePart], rule: str, origin: str = 'stated', note: Optional[str] = None) -> None:
        recipes.append(ExtremalRecipe(n, k, tuple(parts), rule, origin, note))

    if k == 1:
        if n % 2:
            add([k3] * ((n - 1) // 2), 'n%2=1')
        else:
            add([k3] * ((n - 2) // 2) + [k2], 'n%2=0')
            if n >= 4 and not stated:
                add([k3] * ((n - 4) // 2) + [RecipePart.cycle(4)], 'n%2=0', 'supplemented',
                    'a 4-cycle also absorbs the odd vertex')

    elif k == 2:
        t122 = RecipePart.theta(1, 2, 2)
        if n % 3 == 0:
            add([t122] * ((n - 3) // 3) + [k3], 'n%3=0')
        elif n % 3 == 1:
            add([t122] * ((n - 1) // 3), 'n%3=1')
        else:
            add([t122] * ((n - 2) // 3) + [k2], 'n%3=2')
            if n >= 5:
                rest = [t122] * ((n - 5) // 3)
                add(rest + [RecipePart.theta(1, 2, 3)], 'n%3=2')
                add(rest + [k3, k3], 'n%3=2')
                if not stated:
                    add(rest + [RecipePart.theta(2, 2, 2)], 'n%3=2', 'amended',
                        'theta(2,2,2) has the same order and size as theta(1,2,3)')

    elif k == 3:
        t1222 = RecipePart.theta(1, 2, 2, 2)
        t122 = RecipePart.theta(1, 2, 2)
        r = n % 4
        if r == 0:
            add([t1222] * ((n - 4) // 4) + [t122], 'n%4=0')
        elif r == 1:
            add([t1222] * ((n - 1) // 4), 'n%4=1')
        elif r == 2:
            add([t1222] * ((n - 2) // 4) + [k2], 'n%4=2')
            if n >= 6:
                rest = [t1222] * ((n - 6) // 4)
                if stated:
                    add(rest + [RecipePart.theta(2, 2, 3)], 'n%4=2')
                else:
                    add(rest + [RecipePart.theta(1, 2, 2, 3)], 'n%4=2', 'amended',
                        'theta(2,2,3) has 7 edges; theta(1,2,2,3) has the required 8')
                add(rest + [RecipePart.theta(2, 2, 2, 2)], 'n%4=2')
                add(rest + [t122, k3], 'n%4=2')
            if n >= 10 and not stated:
                add([t1222] * ((n - 10) // 4) + [t122] * 3, 'n%4=2', 'amended',
                    'three copies of theta(1,2,2) carry the same deficit')
        else:
            add([t1222] * ((n - 3) // 4) + [k3], 'n%4=3')
            if n >= 7:
                if stated:
                    count = _copies(n - 7, 3)
                    if count is not None:
                        add([t1222] * count + [t122, t122], 'n%4=3')
                else:
                    add([t1222] * ((n - 7) // 4) + [t122, t122], 'n%4=3', 'amended',
                        'copy count (n-7)/4 follows from the vertex identity')

    else:
        if n % 3 == 1:
            add([k4] * ((n - 1) // 3), 'n%3=1')
        elif n % 3 == 0:
            add([k4] * ((n - 3) // 3) + [k3], 'n%3=0')
            if n >= 6:
                add([k4] * ((n - 6) // 3) + [RecipePart.theta(1, 2, 2, 2, 2)], 'n%3=0')
        else:
            add([k4] * ((n - 2) // 3) + [k2], 'n%3=2')
            if n >= 5:
                rest = [k4] * ((n - 5) // 3)
                first, second = theta_tilde()
                add(rest + [RecipePart.theta(1, 2, 2, 2)], 'n%3=2')
                add(rest + [RecipePart('theta~1', first)], 'n%3=2')
                add(rest + [RecipePart('theta~2', second)], 'n%3=2')
    return recipes


def extremal_recipes(n: int, k: int) -> List[ExtremalRecipe]:
    """Arithmetically consistent extremal recipes for (n, k), with provenance."""
    return _catalog(n, k, stated=False)


def stated_recipes(n: int, k: int) -> List[ExtremalRecipe]:
    """Recipes exactly as originally listed, including inconsistent ones."""
    return _catalog(n, k, stated=True)


def realize_recipe(recipe: ExtremalRecipe) -> Graph:
    """One realization: every part attached at a single shared vertex."""
    graph = recipe.parts[0].graph
    for part in recipe.parts[1:]:
        graph = coalesce(graph, 0, part.graph, 0)
    return graph


def realize_recipe_all(recipe: ExtremalRecipe, cap: Optional[int] = None) -> List[Graph]:
    """All coalescences of the parts, one per isomorphism class, in canonical order.

    Raises:
        UnsupportedSizeError: If the recipe order exceeds the canonical cap.
    """
    cap = Config.CANONICAL_CAP if cap is None else cap
    if recipe.order > cap:
        raise UnsupportedSizeError(f"Realizing all coalescences is capped at {cap} vertices, got {recipe.order}")
    found: Dict[object, Graph] = {}
    orderings = sorted(set(itertools.permutations(range(len(recipe.parts)))),
                       key=lambda perm: tuple(recipe.parts[i].name for i in perm))
    seen_orders = set()
    for perm in orderings:
        names = tuple(recipe.parts[i].name for i in perm)
        if names in seen_orders:
            continue
        seen_orders.add(names)
        parts = [recipe.parts[i].graph for i in perm]
        frontier = {canonical_form(parts[0], cap): parts[0]}
        for part in parts[1:]:
            grown = {}
            for graph in frontier.values():
                for x in range(graph.n):
                    for y in range(part.n):
                        merged = coalesce(graph, x, part, y)
                        grown.setdefault(canonical_form(merged, cap), merged)
            frontier = grown
        for key, graph in frontier.items():
            found.setdefault(key, graph)
    return [parse_graph6(str(key)) for key in sorted(found)]
