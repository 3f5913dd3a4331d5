"""Torus fixed points and attracting cells of Gr_e(M) for thin summands on trees.

M comes with a decomposition into thin indecomposable summands.  A torus
weight d(U) on each summand U makes a basis vector of U homogeneous of
degree d(U).  Fixed points are coordinate subrepresentations; the
attracting cell of a fixed point L is an affine space of dimension
dim Hom(L, M/L)^+, the part of the tangent space of positive weight.
Because L and M/L split along the summands into connected thin pieces,
every Hom block between a piece of L in U and a piece of M/L in U' is
homogeneous of weight d(U') - d(U).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .qpoly import IntPoly
from .quiver import (
    DimensionError,
    Rep,
    SubrepBasis,
    check_subrep,
    generic_grass_dim,
    thin_hom_ext,
)


class UnsupportedInputError(ValueError):
    """Input outside the thin-summand / tree-quiver setting."""


@dataclass(frozen=True)
class ThinSummand:
    label: str
    kind: str
    support: frozenset
    edges: tuple  # coefficient-quiver arrows (s, t) inside the support
    index: dict  # vertex -> basis index in M


@dataclass(frozen=True)
class FixedPoint:
    """For each summand of M (in order) the vertices whose basis vector lies in L."""

    parts: tuple

    def dim_vector(self, n):
        d = [0] * n
        for part in self.parts:
            for v in part:
                d[v - 1] += 1
        return tuple(d)

    def coordinates(self, summands):
        coords = {}
        for s, part in zip(summands, self.parts):
            for v in part:
                coords.setdefault(v, []).append(s.index[v])
        return coords

    def to_json(self, summands):
        return {s.label: sorted(part) for s, part in zip(summands, self.parts)}


@dataclass
class CellInfo:
    fixed_point: FixedPoint
    cell_dim: int
    stratum: tuple
    tangent_dim: int
    singular: bool


def thin_summands(m: Rep):
    if m.summands is None:
        raise UnsupportedInputError("representation has no summand decomposition")
    if not m.quiver.is_tree():
        raise UnsupportedInputError("underlying graph of the quiver is not a tree")
    out = []
    for s in m.summands:
        if any(len(ix) > 1 for ix in s.basis.values()):
            raise UnsupportedInputError(f"summand {s.label} is not thin")
        index = {v: ix[0] for v, ix in s.basis.items() if ix}
        edges = []
        for k, (a, b) in enumerate(m.quiver.arrows):
            if a in index and b in index and m.matrices[k][index[b]][index[a]]:
                edges.append((a, b))
        support = frozenset(index)
        if len(_components(support, edges)) > 1:
            raise UnsupportedInputError(f"summand {s.label} is decomposable")
        out.append(ThinSummand(s.label, s.kind, support, tuple(edges), index))
    return out


def _components(vertices, edges):
    vertices = set(vertices)
    adj = {v: set() for v in vertices}
    for a, b in edges:
        if a in vertices and b in vertices:
            adj[a].add(b)
            adj[b].add(a)
    comps = []
    seen = set()
    for v in sorted(vertices):
        if v in seen:
            continue
        comp = set()
        stack = [v]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _closed_subsets(s: ThinSummand):
    """Successor-closed subsets of the summand's coefficient quiver, by DFS."""
    succ = {v: [b for a, b in s.edges if a == v] for v in s.support}
    order = sorted(s.support)
    out = []

    def closure(v):
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    closures = {v: frozenset(closure(v)) for v in order}

    def rec(i, chosen, excluded):
        if i == len(order):
            out.append(frozenset(chosen))
            return
        v = order[i]
        if v in chosen:
            rec(i + 1, chosen, excluded)
            return
        # leave v out
        rec(i + 1, chosen, excluded | {v})
        # put v in, with everything it maps to
        cl = closures[v]
        if not (cl & excluded):
            rec(i + 1, chosen | cl, excluded)

    rec(0, frozenset(), frozenset())
    return sorted(set(out), key=lambda x: (len(x), sorted(x)))


def enumerate_fixed_points(m: Rep, e) -> list:
    """All coordinate subrepresentations of M with dimension vector e."""
    n = m.quiver.n
    m.quiver.check(e)
    summands = thin_summands(m)
    options = []
    for s in summands:
        opts = []
        for sub in _closed_subsets(s):
            dv = tuple(1 if v in sub else 0 for v in range(1, n + 1))
            opts.append((sub, dv))
        options.append(opts)
    # remaining capacity of the summands after position k, per vertex
    cap = [[0] * n for _ in range(len(summands) + 1)]
    for k in range(len(summands) - 1, -1, -1):
        cap[k] = [c + (1 if v + 1 in summands[k].support else 0) for v, c in enumerate(cap[k + 1])]
    out = []

    def rec(k, need, chosen):
        if any(x > c for x, c in zip(need, cap[k])):
            return
        if k == len(summands):
            out.append(FixedPoint(tuple(chosen)))
            return
        for sub, dv in options[k]:
            rest = [x - y for x, y in zip(need, dv)]
            if min(rest) < 0:
                continue
            rec(k + 1, rest, chosen + [sub])

    rec(0, list(e), [])
    return out


def generic_degrees(m: Rep) -> dict:
    """Degrees with d(L) < d(L') whenever Hom(L, L') != 0 for L, L' non-isomorphic.

    Isomorphic copies get consecutive degrees; among them copies labelled as
    projective come first, so a projective-injective listed under I ends up
    above its twin listed under P.
    """
    summands = thin_summands(m)
    q = m.quiver
    classes = []
    members = {}
    for k, s in enumerate(summands):
        key = s.support
        if key not in members:
            members[key] = []
            classes.append(key)
        members[key].append(k)
    succ = {c: [] for c in classes}
    indeg = {c: 0 for c in classes}
    for c in classes:
        for c2 in classes:
            if c != c2 and thin_hom_ext(q, c, c2)[0]:
                succ[c].append(c2)
                indeg[c2] += 1
    ready = [c for c in classes if indeg[c] == 0]
    order = []
    while ready:
        c = ready.pop(0)
        order.append(c)
        for c2 in succ[c]:
            indeg[c2] -= 1
            if indeg[c2] == 0:
                ready.append(c2)
        ready.sort(key=classes.index)
    if len(order) != len(classes):
        raise UnsupportedInputError("Hom relation between summands has a cycle")
    degrees = {}
    nxt = 0
    for c in order:
        ks = sorted(members[c], key=lambda k: (summands[k].kind != "P", k))
        for k in ks:
            degrees[summands[k].label] = nxt
            nxt += 1
    return degrees


def check_degrees(m: Rep, degrees: dict, hom_rule: bool = True):
    summands = thin_summands(m)
    labels = [s.label for s in summands]
    if set(labels) != set(degrees):
        raise DimensionError("degrees must be given for exactly the summand labels")
    if len(set(degrees[x] for x in labels)) != len(labels):
        raise DimensionError("degrees must be pairwise distinct")
    if hom_rule:
        for s in summands:
            for t in summands:
                if s.support != t.support and thin_hom_ext(m.quiver, s.support, t.support)[0]:
                    if degrees[s.label] >= degrees[t.label]:
                        raise DimensionError(f"Hom({s.label},{t.label}) != 0 but degrees do not increase")


def _pieces(summands, fp):
    sub, quo = [], []
    for s, part in zip(summands, fp.parts):
        sub.append(_components(part, s.edges))
        quo.append(_components(s.support - part, s.edges))
    return sub, quo


def _hom_blocks(m, summands, fp):
    """Yield (k, k2, hom, ext) for every piece of L in summand k against every
    piece of M/L in summand k2."""
    sub, quo = _pieces(summands, fp)
    q = m.quiver
    for k, xs in enumerate(sub):
        for x in xs:
            for k2, ys in enumerate(quo):
                for y in ys:
                    h, ext = thin_hom_ext(q, x, y)
                    yield k, k2, h, ext


def cell_dim(m: Rep, degrees: dict, fp: FixedPoint, summands=None) -> int:
    summands = summands or thin_summands(m)
    total = 0
    for k, k2, h, _ in _hom_blocks(m, summands, fp):
        if degrees[summands[k2].label] > degrees[summands[k].label]:
            total += h
    return total


def fixed_point_tangent_dim(m: Rep, fp: FixedPoint, summands=None) -> int:
    summands = summands or thin_summands(m)
    return sum(h for _, _, h, _ in _hom_blocks(m, summands, fp))


def fixed_point_stratum(m: Rep, fp: FixedPoint, summands=None) -> tuple:
    """dim(L cap I), with I the span of the summands labelled I*."""
    summands = summands or thin_summands(m)
    n = m.quiver.n
    f = [0] * n
    for s, part in zip(summands, fp.parts):
        if s.kind == "I":
            for v in part:
                f[v - 1] += 1
    return tuple(f)


def injective_ext(m: Rep, fp: FixedPoint, summands=None) -> int:
    """dim Ext^1(L_I, Q_P) with L_I = L cap I and Q_P = P / (L cap P)."""
    summands = summands or thin_summands(m)
    return sum(ext for k, k2, _, ext in _hom_blocks(m, summands, fp)
               if summands[k].kind == "I" and summands[k2].kind == "P")


def cell_polynomial(m: Rep, degrees: dict, e) -> IntPoly:
    summands = thin_summands(m)
    counts = {}
    for fp in enumerate_fixed_points(m, e):
        d = cell_dim(m, degrees, fp, summands)
        counts[d] = counts.get(d, 0) + 1
    if not counts:
        return IntPoly()
    return IntPoly([counts.get(k, 0) for k in range(max(counts) + 1)])


def classify_fixed_point(m: Rep, fp: FixedPoint, degrees: dict, e=None) -> CellInfo:
    summands = thin_summands(m)
    n = m.quiver.n
    e = e if e is not None else fp.dim_vector(n)
    tdim = fixed_point_tangent_dim(m, fp, summands)
    gdim = generic_grass_dim(m.quiver, e, m.dims)
    singular = tdim > gdim
    dim_p = [0] * n
    for s in summands:
        if s.kind == "P":
            for v in s.support:
                dim_p[v - 1] += 1
    if all(s.kind in ("P", "I") for s in summands) and tuple(e) == tuple(dim_p):
        # for Gr_{dim P}(P (+) I) the excess of the tangent space is Ext^1(L_I, Q_P)
        if (injective_ext(m, fp, summands) != 0) != singular:
            raise AssertionError("singularity criteria disagree")
    return CellInfo(fp, cell_dim(m, degrees, fp, summands),
                    fixed_point_stratum(m, fp, summands), tdim, singular)


def classify_all(m: Rep, degrees: dict, e):
    return [classify_fixed_point(m, fp, degrees, e) for fp in enumerate_fixed_points(m, e)]


# ------------------------------------------------------------------ limits

def _owner_table(m, summands):
    owner = {}
    for k, s in enumerate(summands):
        for v, i in s.index.items():
            owner[(v, i)] = k
    return owner


def attracting_fixed_point(m: Rep, degrees: dict, u: SubrepBasis) -> FixedPoint:
    """Limit of lambda . U as lambda -> 0.

    At each vertex the spanning vectors are row-reduced with coordinates
    sorted by increasing degree; the pivots are the leading terms, and the
    limit is their span.
    """
    check_subrep(m, u)
    summands = thin_summands(m)
    owner = _owner_table(m, summands)
    parts = [set() for _ in summands]
    for v in range(1, m.quiver.n + 1):
        cols = u.columns.get(v, [])
        if not cols:
            continue
        order = sorted(range(m.dims[v - 1]), key=lambda i: degrees[summands[owner[(v, i)]].label])
        permuted = [[c[i] for i in order] for c in cols]
        _, piv = linalg.rref(permuted, m.p)
        if len(piv) != len(cols):
            raise DimensionError(f"spanning vectors at vertex {v} are dependent")
        for j in piv:
            parts[owner[(v, order[j])]].add(v)
    fp = FixedPoint(tuple(frozenset(p) for p in parts))
    for s, part in zip(summands, fp.parts):
        for a, b in s.edges:
            if a in part and b not in part:
                raise AssertionError("limit is not a subrepresentation")
    return fp


def subrep_stratum(m: Rep, u: SubrepBasis) -> tuple:
    """dim(U cap I) per vertex, where I is spanned by the I-labelled summands."""
    summands = thin_summands(m)
    owner = _owner_table(m, summands)
    out = []
    for v in range(1, m.quiver.n + 1):
        cols = u.columns.get(v, [])
        p_coords = [i for i in range(m.dims[v - 1]) if summands[owner[(v, i)]].kind != "I"]
        proj = [[c[i] for i in p_coords] for c in cols]
        out.append(len(cols) - linalg.rank(proj, m.p))
    return tuple(out)


def random_subrep(m: Rep, e, rng: random.Random, spread: int = 10**6, tries: int = 100,
                  zero_prob: float = 0.0) -> SubrepBasis:
    """A random subrepresentation of dimension e with rational coordinates.

    Vertices are filled in topological order: the images of the earlier
    vertices are forced, the rest is topped up with random vectors.  With
    ``zero_prob > 0`` entries are zero that often, which reaches special
    positions (other strata, smaller cells) far more often.
    """
    if m.p is not None:
        raise UnsupportedInputError("random sampling is only implemented over Q")
    q = m.quiver
    for _ in range(tries):
        cols = {}
        ok = True
        for v in q.topological_order():
            forced = []
            for k, (s, t) in enumerate(q.arrows):
                if t == v:
                    forced.extend(linalg.matvec(m.matrices[k], c) for c in cols[s])
            basis, _ = linalg.rref(forced) if forced else ([], [])
            if len(basis) > e[v - 1]:
                ok = False
                break
            basis = [list(r) for r in basis]
            while len(basis) < e[v - 1]:
                cand = [Fraction(0) if rng.random() < zero_prob else Fraction(rng.randint(-spread, spread))
                        for _ in range(m.dims[v - 1])]
                if linalg.rank(basis + [cand]) == len(basis) + 1:
                    basis.append(cand)
            cols[v] = basis
        if ok:
            return SubrepBasis(cols)
    raise RuntimeError("could not sample a subrepresentation of the requested dimension")


def perturb_basis(u: SubrepBasis, rng: random.Random, spread: int = 1000) -> SubrepBasis:
    """Same subspaces, different spanning vectors (random invertible recombination)."""
    out = {}
    for v, cols in u.columns.items():
        k = len(cols)
        while True:
            g = [[Fraction(rng.randint(-spread, spread)) for _ in range(k)] for _ in range(k)]
            if linalg.rank(g) == k:
                break
        out[v] = [[sum(g[i][j] * cols[j][r] for j in range(k)) for r in range(len(cols[0]))]
                  for i in range(k)] if k else []
    return SubrepBasis(out)
