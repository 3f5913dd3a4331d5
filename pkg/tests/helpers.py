"""Shared builders for the D4 tangent-space fixture."""

from fractions import Fraction

from qgdf.quiver import SubrepBasis, d4_quiver, direct_sum, injective, projective


def vec(dim, *ix):
    out = [Fraction(0)] * dim
    for i in ix:
        out[i] = Fraction(1)
    return out


def d4_injectives(which):
    q = d4_quiver()
    return direct_sum(*(injective(q, k) for k in which), labels=[f"I{k}" for k in which])


def d4_projectives():
    q = d4_quiver()
    return direct_sum(*(projective(q, k) for k in (1, 2, 3, 4)), labels=[f"P{k}" for k in (1, 2, 3, 4)])


def tangent_fixture(which=(2, 3, 4)):
    """(I, N_I, L_I) with I the sum of the listed injectives on D4.

    N_I is indecomposable of dimension (1,2,1,1): at vertex 1 it is spanned by
    the sum of the I_3 and I_4 basis vectors.  L_I = I_4 + (0110) is its
    coordinate degeneration.
    """
    m = d4_injectives(which)
    pos = {k: j for j, k in enumerate(which)}
    d1, d2 = m.dims[0], m.dims[1]
    # at vertices 1 and 2 the basis runs over the listed injectives in order
    n_i = SubrepBasis({
        1: [vec(d1, pos[3], pos[4])],
        2: [vec(d2, pos[3] - (1 if 1 in which else 0)), vec(d2, pos[4] - (1 if 1 in which else 0))],
        3: [vec(1, 0)], 4: [vec(1, 0)],
    })
    l_i = SubrepBasis({
        1: [vec(d1, pos[4])],
        2: n_i.columns[2], 3: [vec(1, 0)], 4: [vec(1, 0)],
    })
    return m, n_i, l_i


def l_p():
    """L_P = P_3^2 + P_4^2 of dimension (0,0,2,2) inside P_1 + ... + P_4.

    Basis at vertex 3 is (P1, P2, P3) and at vertex 4 (P1, P2, P4).
    """
    p = d4_projectives()
    u = SubrepBasis({1: [], 2: [], 3: [vec(3, 0), vec(3, 2)], 4: [vec(3, 0), vec(3, 1)]})
    return p, u
