"""Normalized median Genocchi numbers and G-orbit labels in type A.

Five independent routes to h_n live here or are reachable from here:
subset collections, the binomial sum, the Motzkin-path sum, the Poincare
polynomial at q = 1, and the count of orbit labels.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb

from .poincare import poincare_complete_flag
from .qpoly import eval_int
from .typea import Interval, PIConfig


def genocchi_sets(n: int) -> int:
    """Count (S_1, ..., S_{n-1}) with S_i in {1..n}, |S_i| = i and
    S_i contained in S_{i+1} + {i+1}."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return n
    # bitmask dynamic programme over S_i
    layer = {sum(1 << x for x in s): 1 for s in combinations(range(n), 1)}
    for i in range(1, n - 1):
        nxt = defaultdict(int)
        extra = 1 << i  # the element i+1, zero-based
        for mask, cnt in layer.items():
            for t in combinations(range(n), i + 1):
                tm = sum(1 << x for x in t)
                if mask & ~(tm | extra) == 0:
                    nxt[tm] += cnt
        layer = nxt
    return sum(layer.values())


def _formula_terms(n):
    """Yield (f_1..f_n, term) with f_k <= 1 + f_{k-1}; the rest vanish."""

    def rec(prefix):
        k = len(prefix)
        if k == n:
            fx = (0,) + tuple(prefix) + (0,)
            term = 1
            for j in range(1, n + 1):
                term *= comb(1 + fx[j - 1], fx[j]) * comb(1 + fx[j + 1], fx[j])
                if not term:
                    break
            yield tuple(prefix), term
            return
        top = 1 + (prefix[-1] if prefix else 0)
        for v in range(top + 1):
            yield from rec(prefix + [v])

    yield from rec([])


def genocchi_formula(n_plus_1: int) -> int:
    n = n_plus_1 - 1
    if n < 0:
        raise ValueError("index must be positive")
    total = 0
    for f, term in _formula_terms(n):
        if term:
            fx = (0,) + f + (0,)
            if any(abs(x - y) > 1 for x, y in zip(fx, fx[1:])):
                raise AssertionError(f"nonzero term off Motzkin support at {f}")
            total += term
    return total


@dataclass(frozen=True)
class MotzkinPath:
    heights: tuple

    def __post_init__(self):
        h = self.heights
        if h[0] != 0 or h[-1] != 0 or min(h) < 0:
            raise ValueError(f"{h} is not a Motzkin path")
        if any(abs(x - y) > 1 for x, y in zip(h, h[1:])):
            raise ValueError(f"{h} has a step larger than one")

    @property
    def length(self):
        return len(self.heights) - 1

    def rises_and_falls(self):
        h = self.heights
        return sum(1 for x, y in zip(h, h[1:]) if x != y)


def motzkin_paths(length: int):
    """All Motzkin paths with ``length`` steps, in lexicographic order of heights."""
    if length < 0:
        raise ValueError("negative length")
    out = []

    def rec(h):
        steps_left = length - (len(h) - 1)
        if steps_left == 0:
            if h[-1] == 0:
                out.append(MotzkinPath(tuple(h)))
            return
        for d in (-1, 0, 1):
            nh = h[-1] + d
            if 0 <= nh <= steps_left - 1:
                rec(h + [nh])
            elif nh == 0 and steps_left == 1:
                rec(h + [nh])

    rec([0])
    return out


def genocchi_motzkin(n_plus_1: int) -> int:
    if n_plus_1 < 1:
        raise ValueError("index must be positive")
    total = Fraction(0)
    for path in motzkin_paths(n_plus_1):
        num = 1
        for x in path.heights[1:-1]:
            num *= (1 + x) ** 2
        total += Fraction(num, 2 ** path.rises_and_falls())
    if total.denominator != 1:
        raise ArithmeticError(f"Motzkin sum {total} is not an integer")
    return int(total)


# ------------------------------------------------------------------ orbits

@dataclass(frozen=True)
class OrbitLabel:
    """Isomorphism classes (Q_P, N_I) as sorted tuples of intervals."""

    qp: tuple
    ni: tuple

    def to_json(self):
        return {"qp": [[iv.left, iv.right] for iv in self.qp],
                "ni": [[iv.left, iv.right] for iv in self.ni]}


def _dimvec(ivs, n):
    d = [0] * n
    for iv in ivs:
        for v in range(iv.left, iv.right + 1):
            d[v - 1] += 1
    return tuple(d)


def _bounded_multisets(n, caps, anchor):
    """Interval multisets with at most caps[k] intervals anchored at k+1.

    ``anchor="right"`` groups intervals by right endpoint (socle of N_I),
    ``anchor="left"`` by left endpoint (top of Q_P).
    """
    groups = []
    for k in range(1, n + 1):
        if anchor == "right":
            ivs = [Interval(i, k) for i in range(1, k + 1)]
        else:
            ivs = [Interval(k, j) for j in range(k, n + 1)]
        choices = []
        for size in range(caps[k - 1] + 1):
            choices.extend(combinations_with_replacement(ivs, size))
        groups.append(choices)
    for pick in product(*groups):
        yield tuple(sorted(iv for part in pick for iv in part))


def _by_dimvec(multisets, n):
    table = defaultdict(list)
    for ms in multisets:
        table[_dimvec(ms, n)].append(ms)
    return table


def orbit_enumerate(cfg: PIConfig, convention: str = "socle"):
    """All orbit labels (Q_P, N_I) for Gr_{dim P}(P (+) I).

    N_I embeds in I iff at most b_j of its intervals end at j; Q_P is a
    quotient of P iff at most a_i of its intervals start at i.  The
    ``"mirrored"`` convention swaps the two anchors and is kept for the
    reversal-symmetry comparison.
    """
    n = cfg.n
    ni_anchor, qp_anchor = ("right", "left") if convention == "socle" else ("left", "right")
    if convention not in ("socle", "mirrored"):
        raise ValueError(f"unknown convention {convention!r}")
    ni_table = _by_dimvec(_bounded_multisets(n, cfg.b, ni_anchor), n)
    qp_table = _by_dimvec(_bounded_multisets(n, cfg.a, qp_anchor), n)
    labels = []
    for dv in sorted(ni_table):
        if dv not in qp_table:
            continue
        for ni in ni_table[dv]:
            for qp in qp_table[dv]:
                labels.append(OrbitLabel(qp, ni))
    return labels


def orbit_count(cfg: PIConfig, convention: str = "socle") -> int:
    if convention not in ("socle", "mirrored"):
        raise ValueError(f"unknown convention {convention!r}")
    n = cfg.n
    ni_anchor, qp_anchor = ("right", "left") if convention == "socle" else ("left", "right")
    ni_count = defaultdict(int)
    for ms in _bounded_multisets(n, cfg.b, ni_anchor):
        ni_count[_dimvec(ms, n)] += 1
    total = 0
    for ms in _bounded_multisets(n, cfg.a, qp_anchor):
        total += ni_count.get(_dimvec(ms, n), 0)
    return total


METHODS = ("sets", "formula", "motzkin", "poincare", "orbits")


def genocchi(n: int, method: str) -> int:
    """h_n by the named method."""
    if method == "sets":
        return genocchi_sets(n)
    if method == "formula":
        return genocchi_formula(n)
    if method == "motzkin":
        return genocchi_motzkin(n)
    if method == "poincare":
        return 1 if n == 1 else eval_int(poincare_complete_flag(n - 1), 1)
    if method == "orbits":
        return 1 if n == 1 else orbit_count(PIConfig.complete_flag(n - 1))
    raise ValueError(f"unknown method {method!r}")
