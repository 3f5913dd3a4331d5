"""Equioriented type A: interval modules, P (+) I models and flag dictionaries.

Vertices are 1..n with arrows i -> i+1.  The interval module S_{i,j} has a
one-dimensional space on each vertex of [i, j] and identity maps between
them, so P_i = S_{i,n} and I_j = S_{1,j}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import DimensionError, Rep, direct_sum, equioriented_a, thin_module


@dataclass(frozen=True, order=True)
class Interval:
    left: int
    right: int

    def __post_init__(self):
        if not 1 <= self.left <= self.right:
            raise DimensionError(f"bad interval [{self.left}, {self.right}]")

    def dim_vector(self, n):
        return tuple(1 if self.left <= v <= self.right else 0 for v in range(1, n + 1))

    def __str__(self):
        return f"S{self.left},{self.right}"


@dataclass(frozen=True)
class PIConfig:
    """P = (+) P_i^{a_i} and I = (+) I_i^{b_i} on equioriented A_n."""

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != len(self.b) or not self.a:
            raise DimensionError("a and b need the same positive length")
        if any(x < 0 for x in self.a + self.b):
            raise DimensionError("multiplicities must be non-negative")
        if not any(self.a) and not any(self.b):
            raise DimensionError("P (+) I must be nonzero")

    @property
    def n(self):
        return len(self.a)

    @property
    def quiver(self):
        return equioriented_a(self.n)

    def dim_p(self):
        out, acc = [], 0
        for x in self.a:
            acc += x
            out.append(acc)
        return tuple(out)

    def dim_i(self):
        out, acc = [], 0
        for x in reversed(self.b):
            acc += x
            out.append(acc)
        return tuple(reversed(out))

    def dim_m(self):
        return tuple(x + y for x, y in zip(self.dim_p(), self.dim_i()))

    @classmethod
    def complete_flag(cls, n):
        return cls((1,) * n, (1,) * n)


@dataclass(frozen=True)
class FlagSpec:
    ambient: int
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(x) for x in self.steps))
        st = self.steps
        if not st:
            raise DimensionError("a flag needs at least one step")
        if any(x >= y for x, y in zip(st, st[1:])):
            raise DimensionError(f"flag steps {list(st)} are not strictly increasing")
        if st[0] <= 0 or st[-1] >= self.ambient:
            raise DimensionError(f"flag steps must lie strictly between 0 and {self.ambient}")


def interval_module(iv: Interval, n: int, p=None) -> Rep:
    if iv.right > n:
        raise DimensionError(f"{iv} does not fit in A_{n}")
    return thin_module(equioriented_a(n), range(iv.left, iv.right + 1), p)


def interval_hom_dim(src: Interval, tgt: Interval) -> int:
    """dim Hom(S_{a,b}, S_{c,d}) = 1 iff c <= a <= d <= b."""
    a, b = src.left, src.right
    c, d = tgt.left, tgt.right
    return 1 if c <= a <= d <= b else 0


def all_intervals(n):
    return [Interval(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def summand_labels(cfg: PIConfig):
    """Labels of the summands of P (+) I in basis order, with their intervals."""
    n = cfg.n
    out = []
    for kind, mult in (("P", cfg.a), ("I", cfg.b)):
        for i, m in enumerate(mult, start=1):
            iv = Interval(i, n) if kind == "P" else Interval(1, i)
            for c in range(m):
                label = f"{kind}{i}" if m == 1 else f"{kind}{i}.{c + 1}"
                out.append((label, kind, i, c, iv))
    return out


def build_pi(cfg: PIConfig, p=None) -> Rep:
    """P (+) I in the w-basis: P-blocks by index, then I-blocks by index."""
    n = cfg.n
    parts = summand_labels(cfg)
    reps = [interval_module(iv, n, p) for *_, iv in parts]
    return direct_sum(*reps, labels=[lab for lab, *_ in parts])


def flag_to_pi(spec: FlagSpec) -> PIConfig:
    d = (0,) + spec.steps + (spec.ambient,)
    s = len(spec.steps)
    a = [d[i] - d[i - 1] for i in range(1, s + 1)]
    b = [d[i + 1] - d[i] for i in range(1, s + 1)]
    return PIConfig(a, b)


def type_a_gt_degrees(cfg: PIConfig, reverse: bool = False) -> dict:
    """Torus weights on the summands of ``build_pi(cfg)``.

    I_k sits in degree k - 1 and P_j in degree j + n - 1.  With repeated
    summands every base degree is scaled by the largest multiplicity and the
    copy index is added, which keeps the relative order of distinct summand
    types intact.  ``reverse=True`` flips the order (projectives below
    injectives).
    """
    n = cfg.n
    spread = max(cfg.a + cfg.b)
    degrees = {}
    for label, kind, i, c, _ in summand_labels(cfg):
        base = i - 1 if kind == "I" else i + n - 1
        degrees[label] = base * spread + c
    if reverse:
        top = max(degrees.values())
        degrees = {k: top - v for k, v in degrees.items()}
    return degrees
