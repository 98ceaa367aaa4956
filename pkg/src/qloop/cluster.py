"""Skew-symmetric cluster algebras with frozen variables.

Seeds carry a sparse exchange matrix over labelled vertices and exact
Laurent expansions of the mutable variables in the initial ones.  The
level-ell initial seed glues the descending arrows of the repetition
quiver to vertical translation arrows and freezes the bottom row.
F-polynomials and g-vectors are read off by replaying mutation paths on
a principal-coefficient copy of the seed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Dict, Optional, Tuple

from .cartan import CartanData
from .errors import (CapExceededError, ConsistencyError, InvalidInputError)
from .lpoly import LPoly

Vertex = Tuple[int, int]


def ring_key(v) -> tuple:
    """Laurent-ring key of a vertex; tagged vertices are their own key."""
    return v if isinstance(v[0], str) else ("z",) + v


@dataclass(frozen=True)
class Seed:
    """Exchange matrix plus tracked variables; immutable."""

    mutable: tuple
    frozen: tuple
    b: tuple        # sparse ((v, w), entry) pairs, at least one endpoint mutable
    variables: tuple  # ((vertex, LPoly), ...) for mutable vertices

    def b_dict(self) -> dict:
        return dict(self.b)

    def var(self, v) -> LPoly:
        if v in dict(self.variables):
            return dict(self.variables)[v]
        if v in self.frozen:
            return LPoly.var(ring_key(v))
        raise InvalidInputError(f"unknown vertex {v}")

    def cluster_key(self) -> frozenset:
        return frozenset(p.canonical() for _, p in self.variables)


def _seed_from_quiver(mutable, frozen, arrows) -> Seed:
    """Build a seed whose exchange matrix has b[v][w] > 0 for arrows w -> v."""
    mutable = tuple(sorted(mutable))
    frozen = tuple(sorted(frozen))
    mset = set(mutable)
    b: Dict[Tuple[Vertex, Vertex], int] = {}
    for (u, w) in arrows:
        if u not in mset and w not in mset:
            continue
        b[(w, u)] = b.get((w, u), 0) + 1
        b[(u, w)] = b.get((u, w), 0) - 1
    b = {k: v for k, v in b.items() if v}
    variables = tuple((v, LPoly.var(("z",) + v)) for v in mutable)
    return Seed(mutable, frozen, tuple(sorted(b.items(), key=repr)),
                variables)


def gamma_seed(c: CartanData, ell: int) -> Seed:
    """Initial seed on the level-ell slice of the repetition quiver.

    Vertices (i, xi_i + 2k) for 0 <= k <= ell; arrows are the descending
    repetition-quiver arrows together with vertical arrows
    (i, r) -> (i, r + 2); the bottom row is frozen.
    """
    if ell < 0:
        raise InvalidInputError("level must be >= 0")
    vertices = [(i, c.xi[i - 1] + 2 * k) for i in c.nodes()
                for k in range(ell + 1)]
    vset = set(vertices)
    arrows = []
    for (i, r) in vertices:
        for j in c.neighbors(i):
            if (j, r - 1) in vset:
                arrows.append(((i, r), (j, r - 1)))
        if (i, r + 2) in vset:
            arrows.append(((i, r), (i, r + 2)))
    frozen = [(i, c.xi[i - 1]) for i in c.nodes()]
    mutable = [v for v in vertices if v not in set(frozen)]
    return _seed_from_quiver(mutable, frozen, arrows)


def mutate(seed: Seed, k: Vertex) -> Seed:
    """Fomin-Zelevinsky mutation at a mutable vertex."""
    if k not in seed.mutable:
        raise InvalidInputError(f"cannot mutate at non-mutable vertex {k}")
    b = seed.b_dict()
    pos = LPoly.one()
    neg = LPoly.one()
    for v in seed.mutable + seed.frozen:
        e = b.get((v, k), 0)
        if e > 0:
            pos = pos * seed.var(v) ** e
        elif e < 0:
            neg = neg * seed.var(v) ** (-e)
    new_var = (pos + neg).exact_div(seed.var(k))
    newb: Dict[Tuple[Vertex, Vertex], int] = {}
    mset = set(seed.mutable)
    everything = seed.mutable + seed.frozen
    for iv, v in enumerate(everything):
        for w in everything[iv + 1:]:
            if v not in mset and w not in mset:
                continue
            if v == k or w == k:
                val = -b.get((v, w), 0)
            else:
                bvk, bkw = b.get((v, k), 0), b.get((k, w), 0)
                val = (b.get((v, w), 0)
                       + max(bvk, 0) * max(bkw, 0)
                       - max(-bvk, 0) * max(-bkw, 0))
            if val:
                newb[(v, w)] = val
                newb[(w, v)] = -val
    variables = tuple((v, new_var if v == k else p)
                      for v, p in seed.variables)
    return Seed(seed.mutable, seed.frozen,
                tuple(sorted(newb.items(), key=repr)), variables)


@dataclass
class ClusterVariable:
    """A non-frozen cluster variable found during enumeration."""

    ident: str
    expansion: LPoly
    dvector: tuple          # over mutable initial vertices, seed order
    path: tuple             # mutation path from the initial seed
    vertex: Vertex          # where the variable sits at the end of path
    alt_path: Optional[tuple] = None
    alt_vertex: Optional[Vertex] = None


@dataclass
class ExchangeGraph:
    """Result of a breadth-first closure under mutation."""

    seed: Seed
    clusters: tuple         # frozensets of variable idents
    variables: dict         # ident -> ClusterVariable
    adjacency: dict         # cluster key -> number of distinct neighbors

    def n_clusters(self) -> int:
        return len(self.clusters)

    def n_variables(self) -> int:
        return len(self.variables)

    def compatible(self, id1: str, id2: str) -> bool:
        """Two variables are compatible when some cluster holds both."""
        return any(id1 in cl and id2 in cl for cl in self.clusters)


def _dvector(seed: Seed, expansion: LPoly) -> tuple:
    return tuple(-expansion.min_exponent(("z",) + v) for v in seed.mutable)


def enumerate_exchange_graph(seed: Seed, cap: int = 100000) -> ExchangeGraph:
    """Breadth-first closure of the seed under mutation.

    Seeds are identified with their unordered sets of variable
    expansions; raises CapExceededError past the cap.
    """
    start_key = seed.cluster_key()
    seen = {start_key: (seed, ())}
    queue = deque([(seed, ())])
    canon_to_ident: Dict[tuple, str] = {}
    variables: Dict[str, ClusterVariable] = {}
    cluster_members: Dict[frozenset, tuple] = {}
    neighbor_sets: Dict[frozenset, set] = {}

    def register(s: Seed, path: tuple):
        idents = []
        for v, poly in s.variables:
            canon = poly.canonical()
            if canon not in canon_to_ident:
                ident = f"v{len(canon_to_ident):03d}"
                canon_to_ident[canon] = ident
                variables[ident] = ClusterVariable(
                    ident, poly, _dvector(seed, poly), path, v)
            else:
                ident = canon_to_ident[canon]
                cv = variables[ident]
                if cv.alt_path is None and (path, v) != (cv.path, cv.vertex):
                    cv.alt_path, cv.alt_vertex = path, v
            idents.append(canon_to_ident[canon])
        key = frozenset(idents)
        cluster_members[s.cluster_key()] = key
        return key

    register(seed, ())
    while queue:
        current, path = queue.popleft()
        ckey = current.cluster_key()
        for k in current.mutable:
            nxt = mutate(current, k)
            nkey = nxt.cluster_key()
            neighbor_sets.setdefault(ckey, set()).add(nkey)
            if nkey not in seen:
                if len(seen) >= cap:
                    raise CapExceededError(
                        f"exchange graph exceeded cap {cap}; "
                        "infinite or very large type")
                seen[nkey] = (nxt, path + (k,))
                register(nxt, path + (k,))
                queue.append((nxt, path + (k,)))
    clusters = tuple(sorted(cluster_members.values(),
                            key=lambda fs: sorted(fs)))
    adjacency = {cluster_members[ck]: len(ns)
                 for ck, ns in neighbor_sets.items()}
    return ExchangeGraph(seed, clusters, variables, adjacency)


def _principal_seed(seed: Seed) -> Seed:
    """Same mutable exchange matrix, principal coefficients, fresh variables."""
    b = {}
    mset = set(seed.mutable)
    for (v, w), e in seed.b:
        if v in mset and w in mset:
            b[(v, w)] = e
    for v in seed.mutable:
        b[(("y",) + v, v)] = 1
        b[(v, ("y",) + v)] = -1
    frozen = tuple(("y",) + v for v in seed.mutable)
    variables = tuple((v, LPoly.var(("z",) + v)) for v in seed.mutable)
    return Seed(seed.mutable, frozen, tuple(sorted(b.items(), key=repr)),
                variables)


def f_polynomial_and_gvector(seed0: Seed, cv: ClusterVariable):
    """F-polynomial and g-vector by replaying the path with principal
    coefficients at the initial seed.

    The F-polynomial comes back keyed by the mutable vertices; the
    g-vector follows the order of seed0.mutable.
    """
    replay = seed0
    for k in cv.path:
        replay = mutate(replay, k)
    if replay.var(cv.vertex) != cv.expansion:
        raise InvalidInputError("variable is not reachable from this seed "
                                "along its recorded path")
    princ = _principal_seed(seed0)
    for k in cv.path:
        princ = mutate(princ, k)
    x = princ.var(cv.vertex)
    fpoly = x.subs_one(lambda key: key[0] == "z").map_keys(lambda key: key[1:])
    if fpoly.const_term() != 1 or any(c <= 0 for _, c in fpoly.items()):
        raise ConsistencyError("F-polynomial lost positivity or its unit "
                               "constant term")
    g = _gvector(seed0, x)
    return fpoly, g


def _gvector(seed0: Seed, expansion: LPoly) -> tuple:
    mutable = seed0.mutable
    index = {("z",) + v: i for i, v in enumerate(mutable)}
    b = seed0.b_dict()
    ydeg = {("y",) + v: [-b.get((w, v), 0) for w in mutable]
            for v in mutable}
    degree = None
    for m, _ in expansion.items():
        deg = [0] * len(mutable)
        for key, e in m:
            if key in index:
                deg[index[key]] += e
            else:
                deg = [a + e * d for a, d in zip(deg, ydeg[key])]
        if degree is None:
            degree = deg
        elif degree != deg:
            raise ConsistencyError("principal expansion is not homogeneous")
    return tuple(degree if degree is not None else [0] * len(mutable))


def variable_by_denominator(graph: ExchangeGraph, beta) -> ClusterVariable:
    """The unique variable whose denominator vector matches beta.

    beta is indexed like graph.seed.mutable; negative simples select the
    initial variables.
    """
    target = tuple(beta)
    if len(target) != len(graph.seed.mutable):
        raise InvalidInputError("denominator vector has the wrong length")
    hits = [cv for cv in graph.variables.values() if cv.dvector == target]
    if len(hits) != 1:
        raise ConsistencyError(
            f"{len(hits)} variables have denominator vector {target}")
    return hits[0]


# (variable count, cluster count) fingerprints of the finite cluster types
def _finite_type_table() -> Dict[Tuple[int, int], str]:
    table = {}
    for n in range(1, 13):
        nvars = n * (n + 3) // 2
        nclusters = comb(2 * (n + 1), n + 1) // (n + 2)
        table[(nvars, nclusters)] = f"A{n}"
    for n in range(4, 13):
        nvars = n * n
        nclusters = (3 * n - 2) * comb(2 * n - 2, n - 1) // n
        table[(nvars, nclusters)] = f"D{n}"
    table[(42, 833)] = "E6"
    table[(70, 4160)] = "E7"
    table[(128, 25080)] = "E8"
    return table


def classify_finite_type(c: CartanData, ell: int, cap: int = 100000) -> str:
    """Cluster type of the level-ell algebra by enumeration fingerprint."""
    if ell < 1:
        raise InvalidInputError("classification needs level >= 1")
    try:
        graph = enumerate_exchange_graph(gamma_seed(c, ell), cap)
    except CapExceededError:
        return "infinite-or-large"
    key = (graph.n_variables(), graph.n_clusters())
    label = _finite_type_table().get(key)
    if label is None:
        return f"finite-unrecognized(variables={key[0]},clusters={key[1]})"
    return label
