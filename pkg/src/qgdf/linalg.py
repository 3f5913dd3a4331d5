"""Exact linear algebra over Q (``Fraction``) or a prime field F_p.

Matrices are lists of rows.  Every function takes ``p``: ``None`` means the
rationals, an integer means residues modulo that prime.  No floating point
is used anywhere, so rank decisions are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class FieldMismatchError(ValueError):
    """Two objects live over different fields."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def scalar(x, p=None):
    """Coerce ``x`` (int, Fraction or "a/b" string) into the field."""
    if isinstance(x, str):
        x = Fraction(x.strip())
    if p is None:
        return Fraction(x)
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


def zeros(rows, cols, p=None):
    z = Fraction(0) if p is None else 0
    return [[z] * cols for _ in range(rows)]


def identity(n, p=None):
    m = zeros(n, n, p)
    one = Fraction(1) if p is None else 1
    for i in range(n):
        m[i][i] = one
    return m


def transpose(a, cols=None):
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*a)]


def matmul(a, b, p=None, inner=None):
    """Product of an (r x k) and a (k x c) matrix.

    ``inner`` is only needed when ``k`` might be zero and the column count of
    ``b`` cannot be read off an empty list.
    """
    rows = len(a)
    cols = len(b[0]) if b else (inner or 0)
    out = zeros(rows, cols, p)
    for i, row in enumerate(a):
        oi = out[i]
        for k, aik in enumerate(row):
            if aik:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += aik * bk[j]
        if p is not None:
            out[i] = [x % p for x in oi]
    return out


def matvec(a, v, p=None):
    out = []
    for row in a:
        s = sum(x * y for x, y in zip(row, v))
        out.append(s % p if p is not None else Fraction(s))
    return out


def _integer_rows(a):
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for row in a:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _bareiss_rank(m):
    # Fraction-free elimination: all intermediate entries stay integral.
    m = [r[:] for r in m]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        for i in range(r + 1, nrows):
            mi = m[i]
            f = mi[c]
            if f == 0:
                for j in range(c + 1, ncols):
                    mi[j] = mi[j] * pv // prev
            else:
                mr = m[r]
                for j in range(c + 1, ncols):
                    mi[j] = (mi[j] * pv - f * mr[j]) // prev
            mi[c] = 0
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def _modp_rank(m, p):
    m = [[x % p for x in row] for row in m]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        mr = [x * inv % p for x in m[r]]
        m[r] = mr
        for i in range(r + 1, nrows):
            f = m[i][c]
            if f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], mr)]
        r += 1
        if r == nrows:
            break
    return r


def rank(a, p=None) -> int:
    if not a or not a[0]:
        return 0
    if p is None:
        return _bareiss_rank(_integer_rows(a))
    return _modp_rank(a, p)


def rref(a, p=None):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``.

    Zero rows are dropped.  Pivot search scans columns left to right, so the
    result is canonical for the row space.
    """
    m = [list(row) for row in a]
    if p is None:
        m = [[Fraction(x) for x in row] for row in m]
    else:
        m = [[x % p for x in row] for row in m]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        if p is None:
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
        else:
            inv = pow(m[r][c], -1, p)
            m[r] = [x * inv % p for x in m[r]]
        mr = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                if p is None:
                    m[i] = [x - f * y for x, y in zip(m[i], mr)]
                else:
                    m[i] = [(x - f * y) % p for x, y in zip(m[i], mr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def nullspace(a, ncols, p=None):
    """Basis of {x : a x = 0} as a list of vectors of length ``ncols``."""
    rows, pivots = rref(a, p) if a else ([], [])
    one = Fraction(1) if p is None else 1
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0) if p is None else 0] * ncols
        v[fc] = one
        for row, pc in zip(rows, pivots):
            v[pc] = (-row[fc]) % p if p is not None else -row[fc]
        basis.append(v)
    return basis


def reduce_modulo(v, rows, pivots, p=None):
    """Reduce ``v`` against an RREF basis; the result vanishes on ``pivots``."""
    w = list(v)
    for row, pc in zip(rows, pivots):
        f = w[pc]
        if f:
            if p is None:
                w = [x - f * y for x, y in zip(w, row)]
            else:
                w = [(x - f * y) % p for x, y in zip(w, row)]
    return w


def solve_in_span(vectors, target, p=None):
    """Coefficients c with sum(c_k * vectors[k]) == target, or None."""
    k = len(vectors)
    n = len(target)
    if k == 0:
        return [] if not any(target) else None
    # Augmented system: columns are the vectors, last column the target.
    aug = [[vectors[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    rows, pivots = rref(aug, p)
    if k in pivots:
        return None
    zero = Fraction(0) if p is None else 0
    coeffs = [zero] * k
    for row, pc in zip(rows, pivots):
        coeffs[pc] = row[k]
    return coeffs
