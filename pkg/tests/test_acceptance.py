"""Acceptance criteria 1-8.

Each test records one PASS/FAIL line, printed in the terminal summary
(and directly when the module is run as a script).
"""

import random
import time

import pytest

from configs import PARTIAL_FLAGS, multiplicity_free, small_configs
from conftest import QUIVERS, random_rep
from helpers import l_p, tangent_fixture
from qgdf.cells import (
    attracting_fixed_point, cell_polynomial, enumerate_fixed_points, fixed_point_stratum,
    generic_degrees, perturb_basis, random_subrep, subrep_stratum,
)
from qgdf.counting import METHODS, genocchi, orbit_count
from qgdf.oracle import count_subreps_fq
from qgdf.poincare import poincare_x
from qgdf.qpoly import IntPoly, eval_int, q_binomial
from qgdf.quiver import equioriented_a, euler_form, hom_ext_dims, load_rep, quotient_rep, subrep, tangent_dim
from qgdf.typea import FlagSpec, PIConfig, build_pi, flag_to_pi, type_a_gt_degrees

RESULTS = {}


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


def complete_flags(top=3):
    return [PIConfig.complete_flag(n) for n in range(1, top + 1)]


TESTED = small_configs() + PARTIAL_FLAGS + [PIConfig.complete_flag(4)]


def test_criterion_1_genocchi():
    t = time.perf_counter()
    known = [1, 2, 7, 38, 295]
    bad = []
    for n in range(1, 8):
        values = {m: genocchi(n, m) for m in METHODS}
        if len(set(values.values())) != 1 or (n <= 5 and values["sets"] != known[n - 1]):
            bad.append((n, values))
    elapsed = time.perf_counter() - t
    record(1, not bad and elapsed < 60,
           f"five methods, n=1..7, {elapsed:.1f}s" + (f", mismatches {bad}" if bad else ""))


def test_criterion_2_oracle_identity():
    t = time.perf_counter()
    bad = []
    for cfg in complete_flags() + PARTIAL_FLAGS:
        poly = poincare_x(cfg)
        for q in (2, 3):
            count = count_subreps_fq(build_pi(cfg), cfg.dim_p(), q, budget=10**12)
            if count != eval_int(poly, q):
                bad.append((cfg, q, count, eval_int(poly, q)))
    elapsed = time.perf_counter() - t
    record(2, not bad and elapsed < 300, f"6 configs x q in (2,3), {elapsed:.1f}s" +
           (f", mismatches {bad}" if bad else ""))


def test_criterion_3_cell_identity():
    bad = []
    configs = small_configs()
    for cfg in configs:
        m = build_pi(cfg)
        deg = type_a_gt_degrees(cfg, reverse=True)
        if cell_polynomial(m, deg, cfg.dim_p()) != poincare_x(cfg):
            bad.append(cfg)
    # the discriminating configuration for the two fibre-exponent readings
    disc = flag_to_pi(FlagSpec(4, (1, 3)))
    m = build_pi(disc)
    cells = cell_polynomial(m, type_a_gt_degrees(disc, reverse=True), disc.dim_p())
    printed = poincare_x(disc, "printed")
    euler = poincare_x(disc)
    count = count_subreps_fq(m, disc.dim_p(), 2)
    if printed == euler:
        note = "printed exponent convention non-discriminating on (1,3) in 4"
        printed_fails = True
    else:
        printed_fails = printed != cells and eval_int(printed, 2) != count
        note = (f"printed convention on (1,3) in 4: {eval_int(printed, 2)} points vs oracle {count}"
                f" ({'rejected' if printed_fails else 'NOT rejected'})")
    ok = not bad and cells == euler and printed_fails
    record(3, ok, f"{len(configs)} configs with dim M <= 12; {note}" + (f"; mismatches {bad}" if bad else ""))


def test_criterion_4_classical_collapse():
    bad = [(n, d) for n in range(1, 6) for d in range(1, n + 1)
           if poincare_x(flag_to_pi(FlagSpec(n + 1, (d,)))) != q_binomial(n + 1, d)]
    record(4, not bad, "single-step flags 1 <= d <= n <= 5" + (f", mismatches {bad}" if bad else ""))


def test_criterion_5_d4_fixtures(d4_path):
    m = load_rep(d4_path)
    e = (1, 2, 1, 1)
    counts = {q: count_subreps_fq(m, e, q) for q in (2, 3)}
    poly = cell_polynomial(m, generic_degrees(m), e)
    inj, n_i, l_i = tangent_fixture((2, 3, 4))
    homs = (tangent_dim(inj, n_i), tangent_dim(inj, l_i))
    p, lp = l_p()
    quo = quotient_rep(p, lp)
    exts = (hom_ext_dims(subrep(inj, n_i), quo)[1], hom_ext_dims(subrep(inj, l_i), quo)[1])
    ok = counts == {2: 3, 3: 4} and poly == IntPoly([1, 1]) and homs == (3, 3) and exts == (1, 2)
    record(5, ok, f"counts {counts}, cells {poly.to_list()}, Hom {homs}, Ext {exts}")


def test_criterion_6_structural_invariants():
    bad_poly, bad_fixed, bad_orbit = [], [], []
    for cfg in TESTED:
        p = poincare_x(cfg)
        e = cfg.dim_p()
        rest = [x - y for x, y in zip(cfg.dim_m(), e)]
        if (p.degree != euler_form(equioriented_a(cfg.n), e, rest) or p.leading != 1
                or p.coeffs[0] != 1):
            bad_poly.append(cfg)
        chi = eval_int(p, 1)
        if len(enumerate_fixed_points(build_pi(cfg), e)) != chi:
            bad_fixed.append(cfg)
        if orbit_count(cfg) != chi:
            bad_orbit.append(cfg)
    free = [c for c in bad_orbit if multiplicity_free(c)]
    detail = (f"{len(TESTED)} configs; degree/leading/constant failures {len(bad_poly)}, "
              f"fixed-point failures {len(bad_fixed)}, orbit-count failures {len(bad_orbit)} "
              f"({len(free)} multiplicity-free)")
    if bad_orbit:
        c = bad_orbit[0]
        detail += f"; e.g. a={c.a} b={c.b}: {orbit_count(c)} orbits vs chi {eval_int(poincare_x(c), 1)}"
    record(6, not (bad_poly or bad_fixed or bad_orbit), detail)


def test_criterion_7_limit_consistency():
    configs = complete_flags() + [c for c in PARTIAL_FLAGS if c.n <= 3] + [PIConfig((2, 1), (1, 2))]
    rng = random.Random(1729)
    bad = []
    strata_seen = 0
    for cfg in configs:
        m = build_pi(cfg)
        deg = generic_degrees(m)
        seen = set()
        for k in range(100):
            # half generic, half sparse samples to reach the special strata
            u = random_subrep(m, cfg.dim_p(), rng, spread=10**6 if k % 2 else 4,
                              zero_prob=0.0 if k % 2 else 0.6)
            fp = attracting_fixed_point(m, deg, u)
            f = subrep_stratum(m, u)
            seen.add(f)
            again = attracting_fixed_point(m, deg, perturb_basis(u, rng))
            if fixed_point_stratum(m, fp) != f or again != fp:
                bad.append((cfg, f))
        strata_seen += len(seen)
    record(7, not bad, f"{100 * len(configs)} samples over {len(configs)} configs, "
                       f"{strata_seen} strata hit" + (f", failures {bad[:3]}" if bad else ""))


def test_criterion_8_rank_nullity():
    rng = random.Random(8)
    bad = 0
    for _ in range(500):
        q = rng.choice(QUIVERS)
        x = random_rep(q, [rng.randint(0, 3) for _ in range(q.n)], rng)
        y = random_rep(q, [rng.randint(0, 3) for _ in range(q.n)], rng)
        h, e = hom_ext_dims(x, y)
        if h - e != euler_form(q, x.dims, y.dims) or h < 0 or e < 0:
            bad += 1
    record(8, bad == 0, f"500 random pairs over A_1..A_4 and D_4, {bad} failures")


if __name__ == "__main__":
    import sys
    from pathlib import Path

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for fn in tests:
        try:
            if "d4_path" in fn.__code__.co_varnames[:fn.__code__.co_argcount]:
                fn(Path(__file__).parent / "data" / "d4.json")
            else:
                fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
