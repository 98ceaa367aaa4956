"""Representations of Dynkin quivers over Q and prime fields.

Provides indecomposables indexed by positive roots (built with
reflection functors in the bipartite sink-source orientation), exact
Hom/Ext dimensions, generic decompositions, and quiver-Grassmannian
point counts over F_p together with Euler characteristics obtained by
polynomial interpolation of those counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from . import linalg
from .cartan import CartanData
from .errors import ConsistencyError, InvalidInputError
from .linalg import GF, QQ


@dataclass(frozen=True)
class Quiver:
    """Finite quiver: vertex labels plus (source, target) arrows."""

    vertices: tuple
    arrows: tuple

    @classmethod
    def sink_source(cls, c: CartanData) -> "Quiver":
        """Bipartite orientation of the Dynkin graph, class-0 nodes sinks."""
        arrows = []
        for u, v in c.edges:
            if c.xi[u - 1] == 1:
                arrows.append((u, v))
            else:
                arrows.append((v, u))
        return cls(tuple(c.nodes()), tuple(sorted(arrows)))

    def arrows_from(self, v) -> tuple:
        return tuple(a for a in self.arrows if a[0] == v)

    def topological_targets_first(self) -> list:
        """Vertex order in which every arrow target precedes its source."""
        out_deg = {v: 0 for v in self.vertices}
        preds = {v: [] for v in self.vertices}
        for (s, t) in self.arrows:
            out_deg[s] += 1
            preds[t].append(s)
        ready = sorted(v for v in self.vertices if out_deg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            added = []
            for s in preds[v]:
                out_deg[s] -= 1
                if out_deg[s] == 0:
                    added.append(s)
            ready = sorted(ready + added)
        if len(order) != len(self.vertices):
            raise InvalidInputError("quiver has an oriented cycle")
        return order


@dataclass
class QuiverRep:
    """Representation: per-vertex dimension, per-arrow matrix.

    field is None for Q (integer matrices expected) or a prime p.
    Matrices have shape (dim target) x (dim source).
    """

    quiver: Quiver
    dims: dict
    mats: dict
    field: Optional[int] = None

    def __post_init__(self):
        for (s, t) in self.quiver.arrows:
            m = self.mats.get((s, t))
            ds, dt = self.dims.get(s, 0), self.dims.get(t, 0)
            if m is None:
                self.mats[(s, t)] = [[0] * ds for _ in range(dt)]
            elif len(m) != dt or (m and any(len(r) != ds for r in m)):
                raise InvalidInputError(f"matrix shape mismatch on arrow {s}->{t}")

    def dim_vector(self) -> tuple:
        return tuple(self.dims.get(v, 0) for v in self.quiver.vertices)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def reduce_mod(self, p: int) -> "QuiverRep":
        if self.field is not None:
            raise InvalidInputError("representation is already modular")
        mats = {a: [[x % p for x in row] for row in m]
                for a, m in self.mats.items()}
        return QuiverRep(self.quiver, dict(self.dims), mats, p)


def positive_roots(c: CartanData) -> List[tuple]:
    """Positive roots in simple-root coordinates, fixed deterministic order."""
    return list(c.positive_roots())


def euler_form(quiver: Quiver, d, e) -> int:
    """<d,e> = sum_i d_i e_i - sum_{arrows s->t} d_s e_t."""
    val = sum(d[i] * e[i] for i in range(len(d)))
    idx = {v: i for i, v in enumerate(quiver.vertices)}
    for (s, t) in quiver.arrows:
        val -= d[idx[s]] * e[idx[t]]
    return val


# --- indecomposables via reflection functors ------------------------------

def _coker_data(mat, field):
    """For a map given by mat, return P with ker P = column span of mat.

    P presents the cokernel: rows form a basis of the annihilator of the
    image, so x -> P x identifies target/im with F^(corank).
    """
    nrows = len(mat)
    if nrows == 0:
        return []
    cols = linalg.transpose(mat)
    return linalg.annihilator(cols, nrows, field)


def _phi_minus(c: CartanData, spaces: dict, mats: dict):
    """Inverse Coxeter functor on a rep of the sink-source quiver.

    Stage 1 takes cokernels at the class-1 sources, stage 2 at the
    class-0 nodes, landing back on the original orientation.
    """
    i1, i0 = c.i1(), c.i0()
    # stage 1: N_i = coker(M_i -> sum of neighbor spaces), i in class 1
    proj1 = {}
    new_dim1 = {}
    for i in i1:
        nbrs = c.neighbors(i)
        total = sum(spaces[j] for j in nbrs)
        stacked = []
        for r in range(total):
            stacked.append([Fraction(0)] * spaces[i])
        off = 0
        for j in nbrs:
            m = mats[(i, j)]
            for r in range(spaces[j]):
                stacked[off + r] = [Fraction(x) for x in m[r]]
            off += spaces[j]
        proj = _coker_data(stacked, QQ)
        proj1[i] = (proj, nbrs)
        new_dim1[i] = len(proj)
    # maps M_j -> N_i: restriction of proj to the j block
    inter = {}
    for i in i1:
        proj, nbrs = proj1[i]
        off = 0
        for j in nbrs:
            block = [row[off:off + spaces[j]] for row in proj]
            inter[(j, i)] = block
            off += spaces[j]
    # stage 2: N_j = coker(M_j -> sum of N_i), j in class 0
    out_dims = {}
    out_mats = {}
    for j in i0:
        nbrs = c.neighbors(j)
        total = sum(new_dim1[i] for i in nbrs)
        stacked = [[Fraction(0)] * spaces[j] for _ in range(total)]
        off = 0
        for i in nbrs:
            blk = inter[(j, i)]
            for r in range(new_dim1[i]):
                stacked[off + r] = list(blk[r])
            off += new_dim1[i]
        proj = _coker_data(stacked, QQ)
        out_dims[j] = len(proj)
        off = 0
        for i in nbrs:
            cols = new_dim1[i]
            block = [row[off:off + cols] for row in proj]
            out_mats[(i, j)] = block
            off += cols
    for i in i1:
        out_dims[i] = new_dim1[i]
    return out_dims, out_mats


def _coxeter_plus(c: CartanData, beta: tuple) -> tuple:
    """Dimension-vector action of the Coxeter element: class-0 then class-1."""
    out = beta
    step = tuple(out[j - 1] - (c.pairing(out, j) if c.xi[j - 1] == 0 else 0)
                 for j in c.nodes())
    out = step
    step = tuple(out[j - 1] - (c.pairing(out, j) if c.xi[j - 1] == 1 else 0)
                 for j in c.nodes())
    return step


def _projective_dims(c: CartanData) -> Dict[int, tuple]:
    pd = {}
    for i in c.nodes():
        if c.xi[i - 1] == 0:
            pd[i] = c.simple_root(i)
        else:
            coords = [0] * c.n
            coords[i - 1] = 1
            for j in c.neighbors(i):
                coords[j - 1] = 1
            pd[i] = tuple(coords)
    return pd


_INDEC_CACHE: dict = {}


def indecomposable_rep(c: CartanData, beta) -> QuiverRep:
    """The indecomposable of the sink-source quiver with dimension beta."""
    beta = tuple(beta)
    if not c.is_positive_root(beta):
        raise InvalidInputError(f"{beta} is not a positive root")
    key = (c, beta)
    if key not in _INDEC_CACHE:
        _INDEC_CACHE[key] = _build_indec(c, beta)
    return _INDEC_CACHE[key]


def _build_indec(c: CartanData, beta: tuple) -> QuiverRep:
    quiver = Quiver.sink_source(c)
    spaces, mats = _indec_spaces(c, beta)
    int_mats = _integerize(c, spaces, mats)
    rep = QuiverRep(quiver, {v: spaces[v] for v in quiver.vertices},
                    {a: int_mats[a] for a in quiver.arrows})
    if rep.dim_vector() != beta:
        raise ConsistencyError("reflection functors produced a wrong dimension")
    if hom_dim(rep, rep) != 1:
        raise ConsistencyError("constructed representation is decomposable")
    return rep


def _zero_mats(c: CartanData, spaces):
    return {(s, t): [[Fraction(0)] * spaces.get(s, 0)
                     for _ in range(spaces.get(t, 0))]
            for (s, t) in Quiver.sink_source(c).arrows}


def _indec_spaces(c: CartanData, beta: tuple):
    simple = {c.simple_root(i): i for i in c.nodes()}
    if beta in simple:
        i = simple[beta]
        spaces = {v: (1 if v == i else 0) for v in c.nodes()}
        return spaces, _zero_mats(c, spaces)
    projective = {v: k for k, v in _projective_dims(c).items()
                  if c.xi[k - 1] == 1}
    if beta in projective:
        i = projective[beta]
        spaces = {v: 0 for v in c.nodes()}
        spaces[i] = 1
        for j in c.neighbors(i):
            spaces[j] = 1
        mats = _zero_mats(c, spaces)
        for j in c.neighbors(i):
            mats[(i, j)] = [[Fraction(1)]]
        return spaces, mats
    gamma = _coxeter_plus(c, beta)
    if not c.is_positive_root(gamma):
        raise ConsistencyError(f"Coxeter step left the root system at {beta}")
    sub_spaces, sub_mats = _indec_spaces(c, gamma)
    return _phi_minus(c, sub_spaces, sub_mats)


def _integerize(c: CartanData, spaces, mats):
    """Clear denominators columnwise (a basis rescaling at each source)."""
    quiver = Quiver.sink_source(c)
    full = {}
    for (s, t) in quiver.arrows:
        m = mats.get((s, t))
        if m is None or spaces.get(s, 0) == 0 or spaces.get(t, 0) == 0:
            full[(s, t)] = [[Fraction(0)] * spaces.get(s, 0)
                            for _ in range(spaces.get(t, 0))]
        else:
            full[(s, t)] = [[Fraction(x) for x in row] for row in m]
    for i in c.i1():
        for col in range(spaces.get(i, 0)):
            column = []
            for j in c.neighbors(i):
                column.extend(row[col] for row in full[(i, j)])
            if not any(column):
                continue
            scaled = linalg.primitive_int_vector(column)
            pos = 0
            for j in c.neighbors(i):
                for r in range(spaces.get(j, 0)):
                    full[(i, j)][r][col] = Fraction(scaled[pos])
                    pos += 1
    return {a: [[int(x) for x in row] for row in m] for a, m in full.items()}


# --- Hom, Ext, generic decomposition --------------------------------------

def hom_dim(M: QuiverRep, N: QuiverRep) -> int:
    """dim Hom(M, N), by solving the commuting-square system exactly."""
    if M.quiver != N.quiver or M.field != N.field:
        raise InvalidInputError("representations live over different data")
    field = QQ if M.field is None else GF(M.field)
    verts = list(M.quiver.vertices)
    offsets = {}
    total = 0
    for v in verts:
        offsets[v] = total
        total += M.dims.get(v, 0) * N.dims.get(v, 0)
    if total == 0:
        return 0
    rows = []
    for (s, t) in M.quiver.arrows:
        dms, dmt = M.dims.get(s, 0), M.dims.get(t, 0)
        dns, dnt = N.dims.get(s, 0), N.dims.get(t, 0)
        # N_a phi_s - phi_t M_a = 0, entrywise (dnt x dms) equations
        for r in range(dnt):
            for cidx in range(dms):
                row = [0] * total
                for k in range(dns):
                    row[offsets[s] + k * dms + cidx] += N.mats[(s, t)][r][k]
                for k in range(dmt):
                    row[offsets[t] + r * dmt + k] -= M.mats[(s, t)][k][cidx]
                rows.append(row)
    if not rows:
        return total
    return total - linalg.rank(rows, field)


def ext1_dim(M: QuiverRep, N: QuiverRep) -> int:
    """dim Ext^1(M, N) = hom(M, N) - <dim M, dim N> (hereditary)."""
    return hom_dim(M, N) - euler_form(M.quiver, M.dim_vector(), N.dim_vector())


_EXT_CACHE: dict = {}


def _ext_orthogonal(c: CartanData, b1: tuple, b2: tuple) -> bool:
    key = (c, b1, b2)
    if key not in _EXT_CACHE:
        m1, m2 = indecomposable_rep(c, b1), indecomposable_rep(c, b2)
        _EXT_CACHE[key] = (ext1_dim(m1, m2) == 0 and ext1_dim(m2, m1) == 0)
    return _EXT_CACHE[key]


def generic_decomposition(c: CartanData, d) -> List[tuple]:
    """The unique Ext-orthogonal multiset of positive roots summing to d."""
    d = tuple(d)
    if any(x < 0 for x in d):
        raise InvalidInputError("dimension vector must be nonnegative")
    if not any(d):
        return []
    roots = sorted(c.positive_roots(), key=lambda r: (-sum(r), r))
    solutions = []

    def search(remaining, start, chosen):
        if len(solutions) > 1:
            return
        if not any(remaining):
            solutions.append(list(chosen))
            return
        for idx in range(start, len(roots)):
            r = roots[idx]
            if any(a > b for a, b in zip(r, remaining)):
                continue
            if any(not _ext_orthogonal(c, prev, r) for prev in chosen
                   if prev != r):
                continue
            chosen.append(r)
            search(tuple(a - b for a, b in zip(remaining, r)), idx, chosen)
            chosen.pop()

    search(d, 0, [])
    if len(solutions) != 1:
        raise ConsistencyError(
            f"generic decomposition of {d} is not unique ({len(solutions)} found)")
    return sorted(solutions[0], key=lambda r: (-sum(r), r))


# --- quiver Grassmannians --------------------------------------------------

def count_subrep_tuples(vertices_order, arrows, dims, mats, nu, p) -> int:
    """Number of subspace tuples of the given dimensions closed under mats.

    vertices_order must list arrow targets before their sources; mats are
    integer matrices taken mod p.
    """
    field = GF(p)
    red_mats = {a: [[x % p for x in row] for row in m] for a, m in mats.items()}
    out_arrows = {v: [] for v in vertices_order}
    for (s, t) in arrows:
        out_arrows[s].append((s, t))

    def walk(idx, chosen):
        if idx == len(vertices_order):
            return 1
        v = vertices_order[idx]
        dv, nv = dims.get(v, 0), nu.get(v, 0)
        if nv > dv:
            return 0
        allowed = linalg.identity(dv)
        for a in out_arrows[v]:
            target_sub = chosen[a[1]]
            allowed = linalg.intersect(
                allowed,
                linalg.preimage(red_mats[a], target_sub, dv, field),
                dv, field)
            if len(allowed) < nv:
                return 0
        total = 0
        for sub in linalg.subspaces_of(allowed, nv, dv, field):
            chosen[v] = sub
            total += walk(idx + 1, chosen)
        del chosen[v]
        return total

    return walk(0, {})


def grassmannian_count_fq(M: QuiverRep, nu, p: int) -> int:
    """Point count of the subrepresentation Grassmannian over F_p."""
    nu = _nu_dict(M, nu)
    for v in M.quiver.vertices:
        if nu.get(v, 0) > M.dims.get(v, 0):
            raise InvalidInputError("nu exceeds the dimension vector")
    rep = M if M.field == p else (M.reduce_mod(p) if M.field is None else None)
    if rep is None:
        raise InvalidInputError("representation is over a different prime")
    order = M.quiver.topological_targets_first()
    return count_subrep_tuples(order, M.quiver.arrows, rep.dims, rep.mats,
                               nu, p)


def _nu_dict(M: QuiverRep, nu) -> dict:
    if hasattr(nu, "items"):
        return dict(nu)
    return {v: nu[i] for i, v in enumerate(M.quiver.vertices)}


def _first_good_primes(M: QuiverRep, count: int) -> List[int]:
    """First primes at which every arrow matrix keeps its rational rank."""
    q_ranks = {a: linalg.rank([[Fraction(x) for x in row] for row in m], QQ)
               if m else 0
               for a, m in M.mats.items()}
    primes = []
    p = 2
    while len(primes) < count:
        field = GF(p)
        ok = all(linalg.rank(m, field) == q_ranks[a] if m else True
                 for a, m in M.mats.items())
        if ok:
            primes.append(p)
        p = _next_prime(p)
    return primes


def _next_prime(p: int) -> int:
    q = p + 1
    while any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        q += 1
    return q


def interpolate_at_one(points, degree_bound: int) -> int:
    """Fit an integer polynomial of bounded degree; evaluate at 1.

    points are (p, count) pairs; must contain at least degree_bound + 2
    entries so polynomiality is tested, not just interpolated.
    """
    if len(points) < degree_bound + 2:
        raise InvalidInputError("not enough sample points")
    base = points[:degree_bound + 1]
    # Lagrange evaluation at x=1 plus full-coefficient reconstruction
    coeffs = _lagrange_coeffs(base)
    for (x, y) in points:
        if _poly_eval(coeffs, Fraction(x)) != y:
            raise ConsistencyError(
                "point counts do not fit a polynomial within the degree bound")
    if any(co.denominator != 1 for co in coeffs):
        raise ConsistencyError("counting polynomial is not integral")
    val = _poly_eval(coeffs, Fraction(1))
    return int(val)


def _lagrange_coeffs(points) -> List[Fraction]:
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = _poly_mul_linear(basis, -Fraction(xj))
            denom *= Fraction(xi) - Fraction(xj)
        scale = Fraction(yi) / denom
        for k in range(len(basis)):
            coeffs[k] += scale * basis[k]
    return coeffs


def _poly_mul_linear(coeffs, const):
    # multiply sum c_k x^k by (x + const)
    out = [Fraction(0)] * (len(coeffs) + 1)
    for k, ck in enumerate(coeffs):
        out[k + 1] += ck
        out[k] += ck * const
    return out


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for ck in reversed(coeffs):
        acc = acc * x + ck
    return acc


def grassmannian_euler(M: QuiverRep, nu) -> int:
    """Euler characteristic via point counts at good primes.

    The counting function is asserted to be an integer polynomial of
    degree at most sum_i nu_i (d_i - nu_i); its value at 1 is returned.
    """
    if M.field is not None:
        raise InvalidInputError("Euler characteristics need a rational model")
    nud = _nu_dict(M, nu)
    bound = sum(nud.get(v, 0) * (M.dims.get(v, 0) - nud.get(v, 0))
                for v in M.quiver.vertices)
    primes = _first_good_primes(M, bound + 2)
    points = [(p, grassmannian_count_fq(M, nud, p)) for p in primes]
    return interpolate_at_one(points, bound)


def reflect_i1(c: CartanData, beta) -> tuple:
    """Apply the commuting product of class-1 simple reflections to beta.

    The result is a positive root or minus a simple root; returned in
    simple-root coordinates either way.
    """
    beta = tuple(beta)
    if not c.is_positive_root(beta):
        raise InvalidInputError(f"{beta} is not a positive root")
    out = tuple(beta[j - 1] - (c.pairing(beta, j) if c.xi[j - 1] == 1 else 0)
                for j in c.nodes())
    if c.is_positive_root(out):
        return out
    negs = [j for j in c.nodes() if out[j - 1] != 0]
    if len(negs) == 1 and out[negs[0] - 1] == -1:
        return out
    raise ConsistencyError(f"reflection of {beta} is not almost positive: {out}")


def rep_direct_sum(reps: List[QuiverRep]) -> QuiverRep:
    """Block-diagonal direct sum of representations of one quiver."""
    if not reps:
        raise InvalidInputError("empty direct sum")
    quiver, field = reps[0].quiver, reps[0].field
    if any(r.quiver != quiver or r.field != field for r in reps):
        raise InvalidInputError("summands live over different data")
    dims = {v: sum(r.dims.get(v, 0) for r in reps) for v in quiver.vertices}
    mats = {}
    for a in quiver.arrows:
        s, t = a
        rows = []
        col_off = 0
        total_cols = dims[s]
        row_blocks = []
        for r in reps:
            blk = r.mats[a]
            for rr in range(r.dims.get(t, 0)):
                row = [0] * total_cols
                for cc in range(r.dims.get(s, 0)):
                    row[col_off + cc] = blk[rr][cc]
                row_blocks.append(row)
            col_off += r.dims.get(s, 0)
        rows = row_blocks
        mats[a] = rows
    return QuiverRep(quiver, dims, mats, field)
