import pytest

from qgdf.quiver import DimensionError, hom_ext_dims
from qgdf.typea import (
    FlagSpec, Interval, PIConfig, all_intervals, build_pi, flag_to_pi, interval_hom_dim,
    interval_module, summand_labels, type_a_gt_degrees,
)


def test_interval_module_examples():
    m = interval_module(Interval(1, 2), 3)
    assert m.dims == (1, 1, 0)
    assert m.matrices[0] == [[1]] and m.matrices[1] == []  # 0 x 1
    full = interval_module(Interval(1, 4), 4)
    assert full.dims == (1, 1, 1, 1) and all(mat == [[1]] for mat in full.matrices)
    assert interval_module(Interval(3, 3), 4).dims == (0, 0, 1, 0)


def test_interval_bounds():
    with pytest.raises(DimensionError):
        Interval(2, 1)
    with pytest.raises(DimensionError):
        interval_module(Interval(1, 5), 4)


def test_interval_hom_examples():
    assert interval_hom_dim(Interval(1, 2), Interval(1, 1)) == 1
    assert interval_hom_dim(Interval(1, 1), Interval(1, 2)) == 0
    assert interval_hom_dim(Interval(2, 3), Interval(1, 2)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_interval_hom_rule_exhaustive(n):
    ivs = all_intervals(n)
    mods = {iv: interval_module(iv, n) for iv in ivs}
    for x in ivs:
        for y in ivs:
            assert interval_hom_dim(x, y) == hom_ext_dims(mods[x], mods[y])[0], (x, y)


def test_build_pi_complete_flag_n4():
    cfg = PIConfig.complete_flag(4)
    m = build_pi(cfg)
    assert m.dims == (5, 5, 5, 5)
    # eight summands: the connected components of the coefficient quiver
    assert [s.label for s in m.summands] == ["P1", "P2", "P3", "P4", "I1", "I2", "I3", "I4"]
    for mat in m.matrices:
        assert all(x in (0, 1) for row in mat for x in row)


def test_build_pi_single_projective():
    m = build_pi(PIConfig((1, 0, 0), (0, 0, 0)))
    assert m.dims == (1, 1, 1)
    assert all(mat == [[1]] for mat in m.matrices)


@pytest.mark.parametrize("a,b", [((1, 2, 0), (0, 1, 3)), ((2, 0, 1, 1), (1, 1, 0, 2))])
def test_build_pi_dimension_vector(a, b):
    m = build_pi(PIConfig(a, b))
    n = len(a)
    for k in range(1, n + 1):
        assert m.dims[k - 1] == sum(a[:k]) + sum(b[k - 1:])


@pytest.mark.parametrize("n", range(1, 5))
def test_build_pi_hom_pattern(n):
    m = build_pi(PIConfig.complete_flag(n))
    reps = {s.label: m.summand_rep(k) for k, s in enumerate(m.summands)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pi, pj, ii, ij = reps[f"P{i}"], reps[f"P{j}"], reps[f"I{i}"], reps[f"I{j}"]
            # Hom(P_i, M) = M_i, so Hom(P_i, P_j) != 0 iff j <= i
            assert hom_ext_dims(pi, pj)[0] == (1 if j <= i else 0)
            assert hom_ext_dims(ii, ij)[0] == (1 if j <= i else 0)
            assert hom_ext_dims(pi, ij)[0] == (1 if i <= j else 0)
            expected = 1 if (i == n and j == 1) else 0
            assert hom_ext_dims(ii, pj)[0] == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_complete_flag_constant_dims(n):
    assert build_pi(PIConfig.complete_flag(n)).dims == (n + 1,) * n


def test_flag_to_pi_examples():
    assert flag_to_pi(FlagSpec(5, (1, 2, 3, 4))) == PIConfig((1, 1, 1, 1), (1, 1, 1, 1))
    assert flag_to_pi(FlagSpec(5, (1, 3, 4))) == PIConfig((1, 2, 1), (2, 1, 1))
    assert flag_to_pi(FlagSpec(6, (2,))) == PIConfig((2,), (4,))


@pytest.mark.parametrize("steps,ambient", [((1, 3), 4), ((2,), 4), ((1, 2, 4), 5), ((2, 3), 6)])
def test_flag_to_pi_post(steps, ambient):
    cfg = flag_to_pi(FlagSpec(ambient, steps))
    assert sum(cfg.a) == steps[-1]
    assert cfg.dim_m() == (ambient,) * len(steps)
    assert cfg.dim_p() == steps


def test_flag_spec_validation():
    for ambient, steps in ((4, (2, 2)), (4, (0, 2)), (4, (1, 4)), (4, ())):
        with pytest.raises(DimensionError):
            FlagSpec(ambient, steps)


def test_config_validation():
    with pytest.raises(DimensionError):
        PIConfig((0, 0), (0, 0))
    with pytest.raises(DimensionError):
        PIConfig((1, -1), (0, 1))
    with pytest.raises(DimensionError):
        PIConfig((1,), (0, 1))


def test_gt_degrees_examples():
    deg = type_a_gt_degrees(PIConfig.complete_flag(4))
    assert [deg[f"I{k}"] for k in range(1, 5)] == [0, 1, 2, 3]
    assert [deg[f"P{k}"] for k in range(1, 5)] == [4, 5, 6, 7]
    assert type_a_gt_degrees(PIConfig.complete_flag(1)) == {"P1": 1, "I1": 0}


def test_gt_degrees_repeated_copies():
    cfg = PIConfig((0, 2, 0, 0), (0, 0, 0, 0))
    deg = type_a_gt_degrees(cfg)
    assert set(deg) == {"P2.1", "P2.2"}
    assert deg["P2.1"] != deg["P2.2"]
    assert deg["P2.2"] - deg["P2.1"] == 1


@pytest.mark.parametrize("a,b", [((1, 2), (2, 1)), ((2, 0, 1), (1, 3, 0)), ((1, 1, 1), (1, 1, 1))])
def test_gt_degrees_order(a, b):
    cfg = PIConfig(a, b)
    deg = type_a_gt_degrees(cfg)
    labels = summand_labels(cfg)
    assert len(set(deg.values())) == len(deg)
    inj = [deg[lab] for lab, kind, *_ in labels if kind == "I"]
    proj = [deg[lab] for lab, kind, *_ in labels if kind == "P"]
    assert max(inj) < min(proj)
    rev = type_a_gt_degrees(cfg, reverse=True)
    assert max(rev[lab] for lab, kind, *_ in labels if kind == "P") < min(
        rev[lab] for lab, kind, *_ in labels if kind == "I")
