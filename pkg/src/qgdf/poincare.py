"""Closed-form Poincare polynomials for Gr_{dim P}(P (+) I) in equioriented type A.

The variety is stratified by f = dim(N cap I); each stratum is a vector
bundle over Gr_{e-f}(P) x Gr_f(I) whose fibre Hom(N_P, I/N_I) has
dimension <e - f, dim I - f>.
"""

from __future__ import annotations

from itertools import product

from .qpoly import ONE, ZERO, IntPoly, eval_int, q_binomial
from .quiver import DimensionError, euler_form
from .typea import PIConfig, equioriented_a


def poincare_proj(a, g) -> IntPoly:
    """Poincare polynomial of Gr_g(P) for P = (+) P_i^{a_i}."""
    if len(a) != len(g):
        raise DimensionError("a and g differ in length")
    out = ONE
    prev = 0
    acc = 0
    for ak, gk in zip(a, g):
        acc += ak
        out = out * q_binomial(acc - prev, gk - prev)
        if out.is_zero():
            return ZERO
        prev = gk
    return out


def poincare_inj(b, f) -> IntPoly:
    """Poincare polynomial of Gr_f(I) for I = (+) I_i^{b_i}."""
    if len(b) != len(f):
        raise DimensionError("b and f differ in length")
    n = len(b)
    fx = list(f) + [0]  # f_{n+1} = 0
    out = ONE
    for k in range(1, n + 1):
        # b_{n+1-k} + f_{n+2-k} choose f_{n+1-k}, 1-based
        out = out * q_binomial(b[n - k] + fx[n + 1 - k], fx[n - k])
        if out.is_zero():
            return ZERO
    return out


def strata_fiber_dim(cfg: PIConfig, f) -> int:
    """Rank <dim P - f, dim I - f> of the bundle over the stratum f."""
    e = cfg.dim_p()
    di = cfg.dim_i()
    if len(f) != cfg.n:
        raise DimensionError("stratum vector has the wrong length")
    if any(x < 0 or x > y or x > z for x, y, z in zip(f, e, di)):
        raise DimensionError(f"stratum {list(f)} is not bounded by dim P and dim I")
    q = equioriented_a(cfg.n)
    return euler_form(q, [x - y for x, y in zip(e, f)], [x - y for x, y in zip(di, f)])


def _printed_exponent(cfg, f, g):
    n = cfg.n
    fx = list(f) + [0]
    return sum(g[i] * (cfg.a[i] - fx[i] + fx[i + 1]) for i in range(n))


def strata(cfg: PIConfig):
    """Stratum vectors 0 <= f <= dim P in lexicographic order."""
    e = cfg.dim_p()
    return product(*(range(x + 1) for x in e))


def stratum_terms(cfg: PIConfig, convention: str = "euler"):
    """Yield ``(f, exponent, proj_poly, inj_poly)`` for every nonempty stratum."""
    e = cfg.dim_p()
    for f in strata(cfg):
        g = tuple(x - y for x, y in zip(e, f))
        pp = poincare_proj(cfg.a, g)
        if pp.is_zero():
            continue
        pi = poincare_inj(cfg.b, f)
        if pi.is_zero():
            continue
        if convention == "euler":
            exp = strata_fiber_dim(cfg, f)
        elif convention == "printed":
            exp = _printed_exponent(cfg, f, g)
        else:
            raise ValueError(f"unknown exponent convention {convention!r}")
        if exp < 0:
            raise ArithmeticError(f"negative fibre dimension on nonempty stratum {f}")
        yield f, exp, pp, pi


def poincare_x(cfg: PIConfig, convention: str = "euler") -> IntPoly:
    """Poincare polynomial of Gr_{dim P}(P (+) I).

    ``convention="printed"`` uses a_i instead of b_i in the fibre exponent;
    it is kept only so the two readings can be compared against point counts.
    """
    total = ZERO
    for _, exp, pp, pi in stratum_terms(cfg, convention):
        total = total + (pp * pi).shift(exp)
    return total


def poincare_complete_flag(n: int) -> IntPoly:
    """Poincare polynomial of the complete degenerate flag variety of sl_{n+1}.

    Independent of ``poincare_x``: the sum runs directly over f with
    a = b = (1, ..., 1) substituted by hand.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = ZERO
    for f in product(*(range(k + 1) for k in range(1, n + 1))):
        fx = (0,) + f + (0,)
        term = ONE
        for k in range(1, n + 1):
            term = term * q_binomial(1 + fx[k - 1], fx[k]) * q_binomial(1 + fx[k + 1], fx[k])
            if term.is_zero():
                break
        if term.is_zero():
            continue
        exp = sum((k - fx[k]) * (1 - fx[k] + fx[k + 1]) for k in range(1, n + 1))
        total = total + term.shift(exp)
    return total


def euler_characteristic(cfg: PIConfig) -> int:
    return eval_int(poincare_x(cfg), 1)


def expected_dimension(cfg: PIConfig) -> int:
    e = cfg.dim_p()
    return euler_form(equioriented_a(cfg.n), e, cfg.dim_i())
