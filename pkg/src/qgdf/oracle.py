"""Brute-force point counts of quiver Grassmannians over small prime fields.

Subspaces are enumerated through their reduced row echelon forms, which are
canonical, so every subrepresentation is produced exactly once.  Vertices
are visited in topological order: the images of the subspaces already
chosen are forced into the current one, and only the quotient by those
images is enumerated.  Vertices without outgoing arrows contribute a plain
factor when only the count is needed.

Over F_2 vectors are packed into Python ints (bit j = coordinate j) and all
row operations are XORs.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .linalg import is_prime
from .quiver import Rep


DEFAULT_BUDGET = 10**8
MAX_PRIME = 7


class ConfigurationError(ValueError):
    """Unsupported field size."""


class BudgetExceededError(RuntimeError):
    """The search space is larger than the configured budget."""


@dataclass(frozen=True)
class EchelonSubspace:
    rows: tuple
    pivots: tuple


def _check_q(q):
    if not is_prime(q) or q > MAX_PRIME:
        raise ConfigurationError(f"q must be a prime <= {MAX_PRIME}, got {q}")


# ------------------------------------------------------------ field backends

class _F2:
    """Bitset vectors over F_2."""

    q = 2

    def __init__(self):
        self.q = 2

    @staticmethod
    def pack(vec):
        out = 0
        for j, x in enumerate(vec):
            if x % 2:
                out |= 1 << j
        return out

    @staticmethod
    def unpack(v, n):
        return tuple((v >> j) & 1 for j in range(n))

    @staticmethod
    def columns(matrix, rows, cols):
        # column c of the matrix as a bitmask over target coordinates
        return tuple(sum(1 << r for r in range(rows) if matrix[r][c] % 2) for c in range(cols))

    @staticmethod
    def apply(cols, v):
        out = 0
        j = 0
        while v:
            if v & 1:
                out ^= cols[j]
            v >>= 1
            j += 1
        return out

    @staticmethod
    def rref(vectors):
        rows = []  # (pivot bit, row)
        for v in vectors:
            for pb, r in rows:
                if v >> pb & 1:
                    v ^= r
            if v:
                pb = (v & -v).bit_length() - 1
                rows = [(b, r ^ v if r >> pb & 1 else r) for b, r in rows]
                rows.append((pb, v))
        rows.sort()
        return [r for _, r in rows], [b for b, _ in rows]

    @staticmethod
    def echelon(n, k):
        for piv in combinations(range(n), k):
            pset = set(piv)
            free = [[j for j in range(p + 1, n) if j not in pset] for p in piv]
            nfree = sum(len(f) for f in free)
            for bits in range(1 << nfree):
                rows = []
                b = bits
                for p, fs in zip(piv, free):
                    r = 1 << p
                    for j in fs:
                        if b & 1:
                            r |= 1 << j
                        b >>= 1
                    rows.append(r)
                yield rows, piv

    @staticmethod
    def lift(v, coords):
        out = 0
        j = 0
        while v:
            if v & 1:
                out |= 1 << coords[j]
            v >>= 1
            j += 1
        return out

    @staticmethod
    def restrict(v, coords):
        return sum(((v >> c) & 1) << j for j, c in enumerate(coords))


class _Fp:
    """Tuple vectors over F_p."""

    def __init__(self, p):
        self.q = p
        self.n = None

    def pack(self, vec):
        return tuple(int(x) % self.q for x in vec)

    @staticmethod
    def unpack(v, n):
        return tuple(v)

    def columns(self, matrix, rows, cols):
        return tuple(tuple(int(matrix[r][c]) % self.q for r in range(rows)) for c in range(cols))

    def apply(self, cols, v):
        p = self.q
        if not cols:
            return ()
        out = [0] * len(cols[0])
        for x, col in zip(v, cols):
            if x:
                for r, y in enumerate(col):
                    if y:
                        out[r] += x * y
        return tuple(z % p for z in out)

    def rref(self, vectors):
        p = self.q
        rows, pivots = [], []
        for v in vectors:
            v = list(v)
            for r, pc in zip(rows, pivots):
                f = v[pc]
                if f:
                    v = [(a - f * b) % p for a, b in zip(v, r)]
            lead = next((j for j, x in enumerate(v) if x), None)
            if lead is None:
                continue
            inv = pow(v[lead], -1, p)
            v = [a * inv % p for a in v]
            new_rows = []
            for r in rows:
                f = r[lead]
                new_rows.append([(a - f * b) % p for a, b in zip(r, v)] if f else r)
            rows = new_rows + [v]
            pivots = pivots + [lead]
        order = sorted(range(len(rows)), key=lambda i: pivots[i])
        return [tuple(rows[i]) for i in order], [pivots[i] for i in order]

    def echelon(self, n, k):
        p = self.q
        for piv in combinations(range(n), k):
            pset = set(piv)
            free = [[j for j in range(c + 1, n) if j not in pset] for c in piv]
            nfree = sum(len(f) for f in free)
            for vals in product(range(p), repeat=nfree):
                rows = []
                it = iter(vals)
                for c, fs in zip(piv, free):
                    r = [0] * n
                    r[c] = 1
                    for j in fs:
                        r[j] = next(it)
                    rows.append(tuple(r))
                yield rows, piv

    def lift(self, v, coords, n):
        out = [0] * n
        for x, c in zip(v, coords):
            out[c] = x
        return tuple(out)

    @staticmethod
    def restrict(v, coords):
        return tuple(v[c] for c in coords)


def _backend(q):
    return _F2() if q == 2 else _Fp(q)


def enumerate_subspaces_fq(ambient_dim: int, k: int, q: int):
    """Every k-dimensional subspace of F_q^ambient_dim, once, in echelon form."""
    _check_q(q)
    if not 0 <= k <= ambient_dim:
        raise ValueError(f"subspace dimension {k} outside 0..{ambient_dim}")
    be = _backend(q)
    for rows, piv in be.echelon(ambient_dim, k):
        yield EchelonSubspace(tuple(be.unpack(r, ambient_dim) for r in rows), tuple(piv))


@lru_cache(maxsize=None)
def _subspace_count(n, k, q):
    # counted by enumeration, not by the Gaussian binomial
    return sum(1 for _ in _backend(q).echelon(n, k))


def _grass_size(n, k, q):
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def search_budget(m: Rep, e, q) -> int:
    total = 1
    for d, k in zip(m.dims, e):
        total *= _grass_size(d, k, q)
    return total


class _Problem:
    """Precomputed data for one (M, e, q) search."""

    def __init__(self, m: Rep, e, q):
        self.q = q
        self.be = _backend(q)
        mq = m.reduce_mod(q) if m.p != q else m
        self.n = m.quiver.n
        self.dims = m.dims
        self.e = tuple(e)
        self.order = m.quiver.topological_order()
        self.incoming = {v: [] for v in range(1, self.n + 1)}
        self.has_out = {v: False for v in range(1, self.n + 1)}
        for k, (s, t) in enumerate(m.quiver.arrows):
            cols = self.be.columns(mq.matrices[k], m.dims[t - 1], m.dims[s - 1])
            self.incoming[t].append((s, cols))
            self.has_out[s] = True
        # coordinates belonging to P-labelled (non-I) summands, for strata
        self.p_coords = None
        if m.summands is not None:
            self.p_coords = {}
            for v in range(1, self.n + 1):
                ix = []
                for s in m.summands:
                    if s.kind != "I":
                        ix.extend(s.basis.get(v, ()))
                self.p_coords[v] = sorted(ix)

    def _forced(self, v, chosen):
        imgs = []
        for s, cols in self.incoming[v]:
            imgs.extend(self.be.apply(cols, r) for r in chosen[s])
        return self.be.rref(imgs)

    def _extensions(self, v, rows, piv):
        d = self.dims[v - 1]
        k = self.e[v - 1] - len(rows)
        free = [j for j in range(d) if j not in set(piv)]
        for sub, _ in self.be.echelon(len(free), k):
            if self.q == 2:
                lifted = [self.be.lift(r, free) for r in sub]
            else:
                lifted = [self.be.lift(r, free, d) for r in sub]
            yield list(rows) + lifted

    def count(self, start=0, chosen=None, first=None):
        chosen = dict(chosen or {})
        return self._count(start, chosen, first)

    def _count(self, i, chosen, first=None):
        if i == len(self.order):
            return 1
        v = self.order[i]
        rows, piv = self._forced(v, chosen)
        if len(rows) > self.e[v - 1]:
            return 0
        if not self.has_out[v]:
            factor = _subspace_count(self.dims[v - 1] - len(rows), self.e[v - 1] - len(rows), self.q)
            if factor == 0:
                return 0
            chosen[v] = []
            return factor * self._count(i + 1, chosen)
        total = 0
        options = [first] if first is not None else self._extensions(v, rows, piv)
        for basis in options:
            chosen[v] = basis
            total += self._count(i + 1, chosen)
        return total

    def first_options(self):
        v = self.order[0]
        rows, piv = self._forced(v, {})
        if len(rows) > self.e[v - 1]:
            return []
        return list(self._extensions(v, rows, piv))

    def walk(self):
        chosen = {}

        def rec(i):
            if i == len(self.order):
                yield dict(chosen)
                return
            v = self.order[i]
            rows, piv = self._forced(v, chosen)
            if len(rows) > self.e[v - 1]:
                return
            for basis in self._extensions(v, rows, piv):
                chosen[v] = basis
                yield from rec(i + 1)

        yield from rec(0)

    def stratum(self, chosen):
        if self.p_coords is None:
            return None
        f = []
        for v in range(1, self.n + 1):
            proj = [self.be.restrict(r, self.p_coords[v]) for r in chosen[v]]
            f.append(len(chosen[v]) - len(self.be.rref(proj)[0]))
        return tuple(f)

    def canonical(self, chosen):
        out = []
        for v in range(1, self.n + 1):
            rows, _ = self.be.rref(chosen[v])
            out.append(tuple(self.be.unpack(r, self.dims[v - 1]) for r in rows))
        return tuple(out)


def _prepare(m, e, q, budget):
    _check_q(q)
    m.quiver.check(e)
    if any(x > d for x, d in zip(e, m.dims)):
        return None
    need = search_budget(m, e, q)
    if need > budget:
        raise BudgetExceededError(f"search space {need} exceeds budget {budget}")
    return _Problem(m, e, q)


def _count_branch(args):
    m, e, q, basis = args
    prob = _Problem(m, e, q)
    return prob.count(first=basis)


def count_subreps_fq(m: Rep, e, q: int, budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    """Number of F_q-rational points of Gr_e(M)."""
    prob = _prepare(m, e, q, budget)
    if prob is None:
        return 0
    if threads <= 1 or not prob.has_out[prob.order[0]]:
        return prob.count()
    branches = prob.first_options()
    if len(branches) < 2 * threads:
        return prob.count()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(_count_branch, [(m, e, q, b) for b in branches], chunksize=8))


def list_subreps_fq(m: Rep, e, q: int, budget: int = DEFAULT_BUDGET):
    """Yield ``(subspaces, stratum)`` for every point of Gr_e(M)(F_q).

    ``subspaces`` holds the RREF basis at each vertex; ``stratum`` is
    dim(U cap I) per vertex when M carries P/I summand labels, else None.
    """
    prob = _prepare(m, e, q, budget)
    if prob is None:
        return
    for chosen in prob.walk():
        yield prob.canonical(chosen), prob.stratum(chosen)


def stratum_counts(m: Rep, e, q: int, budget: int = DEFAULT_BUDGET) -> dict:
    out = {}
    for _, f in list_subreps_fq(m, e, q, budget):
        out[f] = out.get(f, 0) + 1
    return dict(sorted(out.items()))


def default_threads():
    return os.cpu_count() or 1
