import random
from itertools import product

import pytest

from conftest import random_rep
from qgdf import linalg
from qgdf.cells import cell_polynomial, generic_degrees
from qgdf.oracle import (
    BudgetExceededError, ConfigurationError, count_subreps_fq, enumerate_subspaces_fq,
    list_subreps_fq, search_budget, stratum_counts,
)
from qgdf.qpoly import eval_int, q_binomial
from qgdf.quiver import Rep, d4_quiver, equioriented_a, load_rep
from qgdf.typea import PIConfig, build_pi


def test_subspace_examples():
    assert len(list(enumerate_subspaces_fq(3, 1, 2))) == 7
    assert len(list(enumerate_subspaces_fq(4, 0, 3))) == 1
    assert len(list(enumerate_subspaces_fq(4, 2, 2))) == 35


@pytest.mark.parametrize("q", [2, 3])
def test_subspace_counts_match_gaussian_binomials(q):
    for n in range(6):
        for k in range(n + 1):
            subs = list(enumerate_subspaces_fq(n, k, q))
            assert len(subs) == eval_int(q_binomial(n, k), q)
            assert len({s.rows for s in subs}) == len(subs)
            for s in subs:
                rows, piv = linalg.rref([list(r) for r in s.rows], q)
                assert tuple(map(tuple, rows)) == s.rows and tuple(piv) == s.pivots


def test_configuration_errors():
    for q in (1, 4, 11):
        with pytest.raises(ConfigurationError):
            list(enumerate_subspaces_fq(2, 1, q))
    with pytest.raises(ValueError):
        list(enumerate_subspaces_fq(2, 3, 2))


def test_budget_guard():
    cfg = PIConfig.complete_flag(3)
    m = build_pi(cfg)
    need = search_budget(m, cfg.dim_p(), 2)
    with pytest.raises(BudgetExceededError, match=str(need)):
        count_subreps_fq(m, cfg.dim_p(), 2, budget=need - 1)
    assert count_subreps_fq(m, cfg.dim_p(), 2, budget=need) == 531


def test_count_examples(d4_path):
    cfg = PIConfig.complete_flag(2)
    m = build_pi(cfg)
    assert count_subreps_fq(m, cfg.dim_p(), 2) == 25
    assert count_subreps_fq(m, (0, 0), 3) == 1
    d4 = load_rep(d4_path)
    assert count_subreps_fq(d4, (1, 2, 1, 1), 3) == 4
    assert len(list(list_subreps_fq(d4, (1, 2, 1, 1), 2))) == 3
    assert len(list(list_subreps_fq(build_pi(PIConfig.complete_flag(1)), (1,), 2))) == 3


def test_stratum_histogram_complete_flag_n2():
    cfg = PIConfig.complete_flag(2)
    hist = stratum_counts(build_pi(cfg), cfg.dim_p(), 2)
    assert hist == {(0, 0): 8, (0, 1): 4, (1, 0): 4, (1, 1): 9}


def test_listing_is_canonical_and_matches_count():
    cfg = PIConfig((1, 2), (2, 1))
    m = build_pi(cfg)
    for q in (2, 3):
        pts = [s for s, _ in list_subreps_fq(m, cfg.dim_p(), q)]
        assert len(pts) == len(set(pts)) == count_subreps_fq(m, cfg.dim_p(), q)


def _naive_count(m, e, q):
    """Every tuple of subspaces, tested arrow by arrow."""
    choices = [list(enumerate_subspaces_fq(d, k, q)) for d, k in zip(m.dims, e)]
    mq = m.reduce_mod(q)
    total = 0
    for pick in product(*choices):
        ok = True
        for k, (s, t) in enumerate(m.quiver.arrows):
            src, tgt = pick[s - 1].rows, pick[t - 1].rows
            imgs = [linalg.matvec(mq.matrices[k], list(r), q) for r in src]
            if linalg.rank([list(r) for r in tgt] + imgs, q) != len(tgt):
                ok = False
                break
        total += ok
    return total


@pytest.mark.parametrize("q", [2, 3])
def test_pruned_search_matches_naive_product(q):
    rng = random.Random(11 + q)
    for quiver in (equioriented_a(2), equioriented_a(3), d4_quiver()):
        for _ in range(6):
            dims = [rng.randint(0, 3) for _ in range(quiver.n)]
            m = random_rep(quiver, dims, rng)
            e = tuple(rng.randint(0, d) for d in dims)
            assert count_subreps_fq(m, e, q) == _naive_count(m, e, q)


def test_oracle_matches_cells_on_d4_sums():
    from helpers import d4_injectives, d4_projectives
    from qgdf.quiver import direct_sum
    m = direct_sum(d4_projectives(), d4_injectives((2, 3, 4)))
    for e in ((1, 2, 2, 2), (0, 1, 1, 1), (1, 2, 3, 3)):
        poly = cell_polynomial(m, generic_degrees(m), e)
        for q in (2, 3):
            assert count_subreps_fq(m, e, q, budget=10**12) == eval_int(poly, q), e


def test_thread_count_does_not_change_result():
    cfg = PIConfig.complete_flag(3)
    m = build_pi(cfg)
    one = count_subreps_fq(m, cfg.dim_p(), 3, threads=1)
    assert count_subreps_fq(m, cfg.dim_p(), 3, threads=2) == one == 3340


def test_dimension_vector_too_big():
    m = build_pi(PIConfig((1,), (1,)))
    assert count_subreps_fq(m, (3,), 2) == 0
