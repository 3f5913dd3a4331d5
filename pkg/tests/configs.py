"""Type A configurations shared by several test modules."""

from itertools import product

from qgdf.typea import FlagSpec, PIConfig, flag_to_pi


def small_configs(max_n=3, max_mult=2, max_total=12):
    out = []
    for n in range(1, max_n + 1):
        for a in product(range(max_mult + 1), repeat=n):
            for b in product(range(max_mult + 1), repeat=n):
                if not any(a + b):
                    continue
                cfg = PIConfig(a, b)
                if sum(cfg.dim_m()) <= max_total:
                    out.append(cfg)
    return out


def multiplicity_free(cfg):
    return max(cfg.a + cfg.b) <= 1


PARTIAL_FLAGS = [flag_to_pi(FlagSpec(4, (1, 3))), flag_to_pi(FlagSpec(4, (2,))),
                 flag_to_pi(FlagSpec(5, (1, 2, 4)))]
