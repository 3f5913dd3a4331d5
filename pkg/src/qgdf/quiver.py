"""Quivers, explicit representations and their homological invariants.

Vertices are 1-indexed in every public signature and in the JSON format;
basis indices inside a vertex space are 0-based in memory and 1-based on
disk.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .linalg import FieldMismatchError


class DimensionError(ValueError):
    """Dimension vectors or matrix shapes do not fit together."""


class StabilityError(ValueError):
    """A family of subspaces is not closed under the arrow maps."""


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        if self.n < 1:
            raise DimensionError("a quiver needs at least one vertex")
        for s, t in self.arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise DimensionError(f"arrow {s}->{t} leaves the vertex set 1..{self.n}")
            if s == t:
                raise DimensionError(f"loop at vertex {s}")
        self.topological_order()

    def topological_order(self):
        indeg = {v: 0 for v in range(1, self.n + 1)}
        for _, t in self.arrows:
            indeg[t] += 1
        ready = sorted(v for v, d in indeg.items() if d == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
                        ready.sort()
        if len(order) != self.n:
            raise DimensionError("quiver has an oriented cycle")
        return order

    def is_tree(self) -> bool:
        if len(self.arrows) != self.n - 1:
            return False
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in self.arrows:
            rs, rt = find(s), find(t)
            if rs == rt:
                return False
            parent[rs] = rt
        return True

    def check(self, d: Sequence[int]):
        if len(d) != self.n:
            raise DimensionError(f"dimension vector {list(d)} has length {len(d)}, expected {self.n}")
        if any(x < 0 for x in d):
            raise DimensionError(f"negative entry in dimension vector {list(d)}")


def equioriented_a(n: int) -> Quiver:
    return Quiver(n, tuple((i, i + 1) for i in range(1, n)))


def d4_quiver() -> Quiver:
    """D4 with arrows 1->2, 2->3, 2->4."""
    return Quiver(4, ((1, 2), (2, 3), (2, 4)))


def euler_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    if len(d) != quiver.n or len(e) != quiver.n:
        raise DimensionError("dimension vectors must have one entry per vertex")
    value = sum(x * y for x, y in zip(d, e))
    for s, t in quiver.arrows:
        value -= d[s - 1] * e[t - 1]
    return value


def generic_grass_dim(quiver: Quiver, e: Sequence[int], d: Sequence[int]) -> int:
    """Dimension <e, d - e> of Gr_e of a generic d-dimensional representation."""
    quiver.check(e)
    quiver.check(d)
    if any(x > y for x, y in zip(e, d)):
        raise DimensionError(f"{list(e)} is not bounded by {list(d)}")
    return euler_form(quiver, e, [y - x for x, y in zip(e, d)])


@dataclass
class Summand:
    label: str
    basis: dict  # vertex (1-based) -> tuple of 0-based basis indices

    def dim_vector(self, n):
        return tuple(len(self.basis.get(v, ())) for v in range(1, n + 1))

    @property
    def kind(self):
        # "P" or "I" by label convention; anything else is unknown
        return self.label[:1] if self.label[:1] in ("P", "I") else ""


@dataclass
class Rep:
    """A representation with explicit matrices over Q (p=None) or F_p.

    ``matrices[k]`` is the (dims[target] x dims[source]) matrix of arrow k.
    """

    quiver: Quiver
    dims: tuple
    matrices: list
    p: int | None = None
    summands: list | None = field(default=None)

    def __post_init__(self):
        self.dims = tuple(int(x) for x in self.dims)
        self.quiver.check(self.dims)
        if len(self.matrices) != len(self.quiver.arrows):
            raise DimensionError("one matrix per arrow is required")
        mats = []
        for (s, t), m in zip(self.quiver.arrows, self.matrices):
            rows, cols = self.dims[t - 1], self.dims[s - 1]
            if len(m) != rows or any(len(r) != cols for r in m):
                raise DimensionError(f"matrix of arrow {s}->{t} must be {rows}x{cols}")
            mats.append([[linalg.scalar(x, self.p) for x in r] for r in m])
        self.matrices = mats
        if self.summands is not None:
            self._check_summands()

    def _check_summands(self):
        n = self.quiver.n
        for v in range(1, n + 1):
            seen = sorted(i for s in self.summands for i in s.basis.get(v, ()))
            if seen != list(range(self.dims[v - 1])):
                raise DimensionError(f"summands do not partition the basis at vertex {v}")
        owner = {}
        for k, s in enumerate(self.summands):
            for v, idx in s.basis.items():
                for i in idx:
                    owner[(v, i)] = k
        for (s, t), m in zip(self.quiver.arrows, self.matrices):
            for r, row in enumerate(m):
                for c, x in enumerate(row):
                    if x and owner[(t, r)] != owner[(s, c)]:
                        raise DimensionError(f"arrow {s}->{t} is not block diagonal for the summands")

    @property
    def total_dim(self):
        return sum(self.dims)

    def arrow_matrix(self, k):
        return self.matrices[k]

    def summand_rep(self, k):
        """The summand ``k`` as a representation on its own basis."""
        s = self.summands[k]
        return self.restrict_to_coordinates({v: list(s.basis.get(v, ())) for v in range(1, self.quiver.n + 1)})

    def restrict_to_coordinates(self, coords):
        """Subquotient spanned by chosen basis indices (no stability check)."""
        n = self.quiver.n
        dims = [len(coords.get(v, ())) for v in range(1, n + 1)]
        mats = []
        for (s, t), m in zip(self.quiver.arrows, self.matrices):
            rs, cs = coords.get(t, ()), coords.get(s, ())
            mats.append([[m[r][c] for c in cs] for r in rs])
        return Rep(self.quiver, dims, mats, self.p)

    def reduce_mod(self, p: int) -> "Rep":
        mats = [[[linalg.scalar(x, p) for x in r] for r in m] for m in self.matrices]
        return Rep(self.quiver, self.dims, mats, p, self.summands)


def direct_sum(*reps: Rep, labels=None) -> Rep:
    """Block-diagonal direct sum; summand labels are carried over or assigned."""
    if not reps:
        raise ValueError("need at least one summand")
    q = reps[0].quiver
    p = reps[0].p
    for r in reps:
        if r.quiver != q:
            raise DimensionError("summands live on different quivers")
        if r.p != p:
            raise FieldMismatchError("summands live over different fields")
    n = q.n
    dims = [sum(r.dims[v] for r in reps) for v in range(n)]
    offsets = []
    running = [0] * n
    for r in reps:
        offsets.append(list(running))
        running = [a + b for a, b in zip(running, r.dims)]
    mats = []
    for k, (s, t) in enumerate(q.arrows):
        m = linalg.zeros(dims[t - 1], dims[s - 1], p)
        for r, off in zip(reps, offsets):
            block = r.matrices[k]
            for i, row in enumerate(block):
                for j, x in enumerate(row):
                    m[off[t - 1] + i][off[s - 1] + j] = x
        mats.append(m)
    summands = []
    for idx, (r, off) in enumerate(zip(reps, offsets)):
        inner = r.summands or [Summand(labels[idx] if labels else f"M{idx + 1}",
                                       {v: tuple(range(r.dims[v - 1])) for v in range(1, n + 1)})]
        for s in inner:
            basis = {v: tuple(off[v - 1] + i for i in ix) for v, ix in s.basis.items()}
            label = labels[idx] if (labels and r.summands is None) else s.label
            summands.append(Summand(label, basis))
    return Rep(q, dims, mats, p, summands)


def zero_rep(quiver: Quiver, p=None) -> Rep:
    return Rep(quiver, [0] * quiver.n, [[] for _ in quiver.arrows], p)


def hom_ext_dims(x: Rep, y: Rep) -> tuple:
    """``(dim Hom(X, Y), dim Ext^1(X, Y))``.

    Both are read off the map sending (f_i) to (f_j X_a - Y_a f_i) over all
    arrows a: i -> j: Hom is its kernel, Ext^1 its cokernel.
    """
    if x.quiver != y.quiver:
        raise DimensionError("representations live on different quivers")
    if x.p != y.p:
        raise FieldMismatchError(f"fields differ: {x.p!r} vs {y.p!r}")
    q = x.quiver
    p = x.p
    xd, yd = x.dims, y.dims
    # column index of the unknown (f_v)[r][c]
    offset = {}
    pos = 0
    for v in range(1, q.n + 1):
        offset[v] = pos
        pos += yd[v - 1] * xd[v - 1]
    ncols = pos
    rows = []
    for k, (s, t) in enumerate(q.arrows):
        xa, ya = x.matrices[k], y.matrices[k]
        # equation entry (r, c) of f_t X_a - Y_a f_s, r < yd[t], c < xd[s]
        for r in range(yd[t - 1]):
            for c in range(xd[s - 1]):
                row = [0] * ncols
                for m in range(xd[t - 1]):
                    coef = xa[m][c]
                    if coef:
                        row[offset[t] + r * xd[t - 1] + m] += coef
                for m in range(yd[s - 1]):
                    coef = ya[r][m]
                    if coef:
                        row[offset[s] + m * xd[s - 1] + c] -= coef
                rows.append(row)
    rk = linalg.rank(rows, p) if rows and ncols else 0
    return ncols - rk, len(rows) - rk


@dataclass
class SubrepBasis:
    """Per-vertex spanning columns (each a vector in the ambient vertex space)."""

    columns: dict  # vertex (1-based) -> list of vectors

    def dim_vector(self, n):
        return tuple(len(self.columns.get(v, ())) for v in range(1, n + 1))

    @classmethod
    def coordinate(cls, m: Rep, coords) -> "SubrepBasis":
        one = Fraction(1) if m.p is None else 1
        zero = Fraction(0) if m.p is None else 0
        cols = {}
        for v in range(1, m.quiver.n + 1):
            vecs = []
            for i in sorted(coords.get(v, ())):
                w = [zero] * m.dims[v - 1]
                w[i] = one
                vecs.append(w)
            cols[v] = vecs
        return cls(cols)


def check_subrep(m: Rep, u: SubrepBasis):
    n = m.quiver.n
    for v in range(1, n + 1):
        cols = u.columns.get(v, [])
        if any(len(c) != m.dims[v - 1] for c in cols):
            raise DimensionError(f"basis vectors at vertex {v} have the wrong length")
        if linalg.rank(cols, m.p) != len(cols):
            raise DimensionError(f"basis vectors at vertex {v} are linearly dependent")
    for k, (s, t) in enumerate(m.quiver.arrows):
        src = u.columns.get(s, [])
        tgt = u.columns.get(t, [])
        if not src:
            continue
        images = [linalg.matvec(m.matrices[k], c, m.p) for c in src]
        if linalg.rank(tgt + images, m.p) != len(tgt):
            raise StabilityError(f"arrow {s}->{t} does not map the subspace into itself")


def subrep(m: Rep, u: SubrepBasis) -> Rep:
    """U as a representation, in the coordinates of its own basis."""
    check_subrep(m, u)
    n = m.quiver.n
    mats = []
    for k, (s, t) in enumerate(m.quiver.arrows):
        src = u.columns.get(s, [])
        tgt = u.columns.get(t, [])
        block = linalg.zeros(len(tgt), len(src), m.p)
        for c, vec in enumerate(src):
            coeffs = linalg.solve_in_span(tgt, linalg.matvec(m.matrices[k], vec, m.p), m.p)
            for r, x in enumerate(coeffs):
                block[r][c] = x
        mats.append(block)
    return Rep(m.quiver, u.dim_vector(n), mats, m.p)


def quotient_rep(m: Rep, u: SubrepBasis) -> Rep:
    """M/U on the coordinate complement of U (non-pivot columns of its RREF)."""
    check_subrep(m, u)
    n = m.quiver.n
    reduced = {}
    complement = {}
    for v in range(1, n + 1):
        cols = u.columns.get(v, [])
        rows, piv = linalg.rref(cols, m.p) if cols else ([], [])
        reduced[v] = (rows, piv)
        complement[v] = [i for i in range(m.dims[v - 1]) if i not in set(piv)]
    mats = []
    for k, (s, t) in enumerate(m.quiver.arrows):
        rows_t, piv_t = reduced[t]
        comp_s, comp_t = complement[s], complement[t]
        block = linalg.zeros(len(comp_t), len(comp_s), m.p)
        for c, i in enumerate(comp_s):
            image = [m.matrices[k][r][i] for r in range(m.dims[t - 1])]
            image = linalg.reduce_modulo(image, rows_t, piv_t, m.p)
            for r, j in enumerate(comp_t):
                block[r][c] = image[j]
        mats.append(block)
    dims = [len(complement[v]) for v in range(1, n + 1)]
    return Rep(m.quiver, dims, mats, m.p)


def tangent_dim(m: Rep, u: SubrepBasis) -> int:
    """dim Hom(U, M/U), the tangent space of the quiver Grassmannian at U."""
    return hom_ext_dims(subrep(m, u), quotient_rep(m, u))[0]


def stratum_dim_of_class(n_rep: Rep, m: Rep) -> int:
    """dim Hom(N, M) - dim End(N).

    Only meaningful when N embeds into M; otherwise the raw value is returned
    and may be negative.
    """
    return hom_ext_dims(n_rep, m)[0] - hom_ext_dims(n_rep, n_rep)[0]


def thin_module(quiver: Quiver, support, p=None) -> Rep:
    """Thin representation on ``support`` with identity maps along its arrows."""
    support = frozenset(support)
    dims = [1 if v in support else 0 for v in range(1, quiver.n + 1)]
    one = Fraction(1) if p is None else 1
    mats = []
    for s, t in quiver.arrows:
        if s in support and t in support:
            mats.append([[one]])
        else:
            mats.append([[0] * dims[s - 1] for _ in range(dims[t - 1])])
    return Rep(quiver, dims, mats, p)


@lru_cache(maxsize=None)
def thin_hom_ext(quiver: Quiver, src: frozenset, tgt: frozenset) -> tuple:
    """Hom/Ext dims between connected thin modules (cached on supports)."""
    return hom_ext_dims(thin_module(quiver, src), thin_module(quiver, tgt))


def projective(quiver: Quiver, i: int, p=None) -> Rep:
    """P_i for a tree quiver: supported on the vertices reachable from i."""
    return thin_module(quiver, _reachable(quiver, i, forward=True), p)


def injective(quiver: Quiver, i: int, p=None) -> Rep:
    """I_i for a tree quiver: supported on the vertices that reach i."""
    return thin_module(quiver, _reachable(quiver, i, forward=False), p)


def _reachable(quiver, i, forward):
    seen = {i}
    stack = [i]
    while stack:
        v = stack.pop()
        for s, t in quiver.arrows:
            a, b = (s, t) if forward else (t, s)
            if a == v and b not in seen:
                seen.add(b)
                stack.append(b)
    return seen


# ---------------------------------------------------------------- JSON I/O

def _fmt_scalar(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rep_to_json(m: Rep) -> dict:
    out = {
        "vertices": m.quiver.n,
        "arrows": [list(a) for a in m.quiver.arrows],
        "dims": list(m.dims),
        "matrices": [[[_fmt_scalar(x) for x in row] for row in mat] for mat in m.matrices],
    }
    if m.p is not None:
        out["field"] = m.p
    if m.summands is not None:
        out["summands"] = [
            {"label": s.label,
             "basis": {str(v): [i + 1 for i in ix] for v, ix in sorted(s.basis.items()) if ix}}
            for s in m.summands
        ]
    return out


def rep_from_json(data: dict, p=None) -> Rep:
    try:
        quiver = Quiver(int(data["vertices"]), tuple(tuple(a) for a in data["arrows"]))
        dims = [int(x) for x in data["dims"]]
        mats = data["matrices"]
    except (KeyError, TypeError) as exc:
        raise DimensionError(f"malformed representation file: {exc}") from exc
    if p is None:
        p = data.get("field")
    summands = None
    if "summands" in data:
        summands = []
        for s in data["summands"]:
            basis = {int(v): tuple(int(i) - 1 for i in ix) for v, ix in s["basis"].items()}
            summands.append(Summand(str(s["label"]), basis))
    return Rep(quiver, dims, mats, p, summands)


def load_rep(path, p=None) -> Rep:
    with open(path) as fh:
        return rep_from_json(json.load(fh), p)
