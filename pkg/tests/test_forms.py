"""Double modules, bilinear forms, adjoints, the correspondence."""

import random

import pytest

from fdalg import algebras as alg, forms, modules as mod
from fdalg.errors import VerificationError
from fdalg.linalg import Field, Matrix, QQ, invert

from helpers import (
    identity_anti,
    random_adjoint,
    random_regular_form,
    transpose_map,
    ut_flip_map,
)

F5 = Field(5)


def _std_K(A, gamma=None):
    if gamma is None:
        gamma = identity_anti(A)
    return forms.standard_double_module(A, gamma), gamma


def test_standard_double_module_field():
    FQ = alg.field_algebra(QQ)
    K, gamma = _std_K(FQ)
    assert K.dim == 1
    assert K.action0 == K.action1


def test_standard_double_module_transpose_action():
    M2 = alg.matrix_algebra(QQ, 2)
    tr = transpose_map(M2, 2)
    K = forms.standard_double_module(M2, tr)
    # k .0 e12 = transpose(e12) k = e21 k
    e12 = M2.basis_vector(1)
    for i in range(4):
        k = M2.basis_vector(i)
        assert K.act(k, e12, 0) == M2.mul(M2.basis_vector(2), k)
    assert forms.type_of(K).is_identity()


def test_double_module_commuting_law_enforced():
    M2 = alg.matrix_algebra(QQ, 2)
    # two copies of the same right action do not commute for M2
    reg = [M2.right_mult_matrix(M2.basis_vector(i)) for i in range(4)]
    lft = [M2.left_mult_matrix(M2.basis_vector(i)) for i in range(4)]
    with pytest.raises(VerificationError):
        forms.DoubleModule(M2, 4, reg, reg)
    # left/right multiplication commute, but action0 must still be a right
    # module structure; left mult of a noncommutative algebra is not
    with pytest.raises(VerificationError):
        forms.DoubleModule(M2, 4, lft, reg)


def test_dual_of_regular_is_k():
    for A, gamma in [
        (alg.matrix_algebra(QQ, 2), None),
        (alg.upper_triangular_algebra(QQ, 3), None),
    ]:
        gamma = transpose_map(A, 2) if A.dim == 4 else ut_flip_map(A, 3)
        K = forms.standard_double_module(A, gamma)
        R = mod.regular_module(A)
        for i in (0, 1):
            d = forms.dual_module(R, K, i)
            assert mod.is_isomorphic(d.module, K.module(i)) is not None


def test_dual_of_zero_module():
    M2 = alg.matrix_algebra(QQ, 2)
    K = forms.standard_double_module(M2, transpose_map(M2, 2))
    Z = mod.Module(M2, 0, [Matrix.zeros(QQ, 0, 0)] * 4)
    d = forms.dual_module(Z, K, 1)
    assert d.dim == 0
    phi, _, _ = forms.phi_map(Z, K)
    assert phi.nrows == 0


def test_column_dual_dimension():
    M2 = alg.matrix_algebra(QQ, 2)
    K = forms.standard_double_module(M2, transpose_map(M2, 2))
    col = mod.decompose(mod.regular_module(M2))[0]
    d = forms.dual_module(col, K, 1)
    assert d.dim == 2


def test_adjoints_of_zero_and_dot():
    FQ = alg.field_algebra(QQ)
    K, _ = _std_K(FQ)
    M = mod.free_module(FQ, 2)
    zero = forms.BilinearForm(M, K, [[[0], [0]], [[0], [0]]])
    adj = forms.adjoints(zero)
    assert adj.left.is_zero() and adj.right.is_zero()
    assert not adj.left_regular and not adj.right_regular
    dot = forms.BilinearForm(M, K, [[[1], [0]], [[0], [1]]])
    adj2 = forms.adjoints(dot)
    assert adj2.left_regular and adj2.right_regular
    assert adj2.left.is_identity() and adj2.right.is_identity()


def test_orthogonal_sum_laws():
    FQ = alg.field_algebra(QQ)
    K, _ = _std_K(FQ)

    def dot(n):
        M = mod.free_module(FQ, n)
        t = [[[1 if i == j else 0] for j in range(n)] for i in range(n)]
        return forms.BilinearForm(M, K, t)

    b5 = forms.orthogonal_sum(dot(2), dot(3))
    assert b5.module.dim == 5
    assert b5.tensor == dot(5).tensor
    adj = forms.adjoints(b5)
    assert adj.left_regular and adj.right_regular
    # regular perp degenerate is not right regular
    M1 = mod.free_module(FQ, 1)
    degenerate = forms.BilinearForm(M1, K, [[[0]]])
    mixed = forms.orthogonal_sum(dot(2), degenerate)
    assert not forms.adjoints(mixed).right_regular


def test_corresponding_anti_automorphism_requires_regular():
    FQ = alg.field_algebra(QQ)
    K, _ = _std_K(FQ)
    M = mod.free_module(FQ, 2)
    zero = forms.BilinearForm(M, K, [[[0], [0]], [[0], [0]]])
    with pytest.raises(VerificationError):
        forms.corresponding_anti_automorphism(zero)


def test_dot_product_gives_transpose():
    FQ = alg.field_algebra(QQ)
    K, _ = _std_K(FQ)
    n = 3
    M = mod.free_module(FQ, n)
    t = [[[1 if i == j else 0] for j in range(n)] for i in range(n)]
    b = forms.BilinearForm(M, K, t)
    alpha, end = forms.corresponding_anti_automorphism(b)
    for u in range(end.algebra.dim):
        w = end.maps[u]
        wa = end.matrix_of(alpha.apply(end.algebra.basis_vector(u)))
        assert wa == w.transpose()
    assert alpha.is_involution()


def test_theta_symmetric_form_gives_involution():
    M2 = alg.matrix_algebra(QQ, 2)
    tr = transpose_map(M2, 2)
    K = forms.standard_double_module(M2, tr)
    theta = forms.standard_involution(K, tr)
    R = mod.regular_module(M2)
    dual1 = forms.dual_module(R, K, 1)
    rng = random.Random(2)
    found = 0
    for seed in range(40):
        f = random_adjoint(R, dual1, seed)
        b = forms.form_from_adjoint(R, K, dual1, f)
        if not b.is_symmetric_under(theta):
            # symmetrize: b'(x,y) = b(x,y) + theta(b(y,x))
            t2 = [
                [
                    tuple(
                        a + c
                        for a, c in zip(b.tensor[i][j], theta.apply(b.tensor[j][i]))
                    )
                    for j in range(R.dim)
                ]
                for i in range(R.dim)
            ]
            b = forms.BilinearForm(R, K, t2)
        adj = forms.adjoints(b)
        if not (adj.left_regular and adj.right_regular):
            continue
        assert b.is_symmetric_under(theta)
        alpha, _ = forms.corresponding_anti_automorphism(b)
        assert alpha.is_involution()
        found += 1
        if found >= 3:
            break
    assert found >= 3


def test_form_from_anti_automorphism_on_regular():
    # K_alpha for M = R_R collapses to something of dim = dim A
    for A, gamma in [
        (alg.matrix_algebra(QQ, 2), None),
        (alg.upper_triangular_algebra(QQ, 3), None),
    ]:
        gamma = transpose_map(A, 2) if A.dim == 4 else ut_flip_map(A, 3)
        M = mod.regular_module(A)
        b = random_regular_form(M, forms.standard_double_module(A, gamma), seed=1)
        alpha, end = forms.corresponding_anti_automorphism(b)
        res = forms.form_from_anti_automorphism(M, alpha, end)
        assert res.values.dim == A.dim
        back, _ = forms.corresponding_anti_automorphism(res.form, end)
        assert back.matrix == alpha.matrix


def test_theta_alpha_square_identity():
    M2 = alg.matrix_algebra(QQ, 2)
    tr = transpose_map(M2, 2)
    K = forms.standard_double_module(M2, tr)
    # alpha on End(F^2) = M2 via the dot product over the field algebra:
    FQ = alg.field_algebra(QQ)
    KF, _ = _std_K(FQ)
    M = mod.free_module(FQ, 2)
    t = [[[1 if i == j else 0] for j in range(2)] for i in range(2)]
    alpha, end = forms.corresponding_anti_automorphism(forms.BilinearForm(M, KF, t))
    res = forms.form_from_anti_automorphism(M, alpha, end)
    assert res.involution is not None
    T = res.involution.matrix
    assert (T * T).is_identity()


def test_phi_naturality_square():
    M2 = alg.matrix_algebra(QQ, 2)
    tr = transpose_map(M2, 2)
    K = forms.standard_double_module(M2, tr)
    R = mod.regular_module(M2)
    col = mod.decompose(R)[0]
    # random morphism f: col -> R
    H = mod.hom_space(col, R)
    rng = random.Random(9)
    f = H.matrix_from_coords([QQ.coerce(rng.randint(-3, 3)) for _ in range(H.dim)])
    phi_n, dual1_n, dual10_n = forms.phi_map(col, K)
    phi_m, dual1_m, dual10_m = forms.phi_map(R, K)
    # f^[1]: R^[1] -> col^[1], then its [0]-dual: col^[1][0] -> R^[1][0]
    f1 = forms.dual_morphism(f, dual1_n, dual1_m)
    f10 = forms.dual_morphism(f1, dual10_m, dual10_n)
    assert phi_n * f10 == f * phi_m


def test_phi_adjoint_identity():
    # (Ad_r b)^[0] o Phi_M = Ad_l b
    M2 = alg.matrix_algebra(F5, 2)
    tr = transpose_map(M2, 2)
    K = forms.standard_double_module(M2, tr)
    R = mod.regular_module(M2)
    for seed in range(3):
        dual1 = forms.dual_module(R, K, 1)
        f = random_adjoint(R, dual1, seed, invertible=False)
        b = forms.form_from_adjoint(R, K, dual1, f)
        adj = forms.adjoints(b)
        phi, d1, d10 = forms.phi_map(R, K)
        dual_of_adjoint = forms.dual_morphism(adj.right, d10, adj.dual0)
        assert phi * dual_of_adjoint == adj.left


def test_phi_invertible_for_progenerator_values():
    for A, gamma_builder in [
        (alg.matrix_algebra(QQ, 2), lambda a: transpose_map(a, 2)),
        (alg.upper_triangular_algebra(QQ, 3), lambda a: ut_flip_map(a, 3)),
    ]:
        gamma = gamma_builder(A)
        K = forms.standard_double_module(A, gamma)
        R = mod.regular_module(A)
        phi, _, _ = forms.phi_map(R, K)
        assert invert(phi) is not None
        col = mod.decompose(R)[0]
        phi2, _, _ = forms.phi_map(col, K)
        assert invert(phi2) is not None


def test_end_of_distinct_projectives_is_basic():
    ut2 = alg.upper_triangular_algebra(QQ, 2)
    parts = mod.decompose(mod.regular_module(ut2))
    M = mod.direct_sum(parts)
    E, _ = mod.endomorphism_algebra(M)
    res = alg.basic_algebra(E)
    assert res.algebra.dim == E.dim  # already basic


def test_double_progenerator_check():
    M2 = alg.matrix_algebra(QQ, 2)
    tr = transpose_map(M2, 2)
    K = forms.standard_double_module(M2, tr)
    assert forms.is_double_progenerator(K)


def test_involution_from_goldman():
    M2 = alg.matrix_algebra(QQ, 2)
    tr = transpose_map(M2, 2)
    K = forms.standard_double_module(M2, tr)
    theta = forms.involution_from_goldman(K)
    T = theta.matrix
    assert (T * T).is_identity()
    for t in range(M2.dim):
        assert K.action0[t] * T == T * K.action1[t]
    # n = 1: theta is the identity on F
    FQ = alg.field_algebra(QQ)
    K1 = forms.standard_double_module(FQ, identity_anti(FQ))
    th1 = forms.involution_from_goldman(K1)
    assert th1.matrix.is_identity()


def test_involution_from_goldman_rejects_wrong_type():
    # a double module of non-identity type: swap factor on Q x Q
    FQ = alg.field_algebra(QQ)
    P = alg.direct_product(FQ, FQ)
    swapm = Matrix(QQ, [[0, 1], [1, 0]])
    swap = alg.AlgebraMap(P, P, swapm, alg.AlgebraMap.ANTI)
    K = forms.standard_double_module(P, swap)
    assert not forms.type_of(K).is_identity()
    # P is not a matrix algebra on matrix units, so the constructor refuses
    from fdalg.errors import DimensionError

    with pytest.raises(DimensionError):
        forms.involution_from_goldman(K)


def test_dual_round_trips_small():
    M2 = alg.matrix_algebra(QQ, 2)
    tr = transpose_map(M2, 2)
    K = forms.standard_double_module(M2, tr)
    R = mod.regular_module(M2)
    col = mod.decompose(R)[0]
    for M in (R, col, mod.direct_sum([col, R])):
        d0 = forms.dual_module(M, K, 0)
        d01 = forms.dual_module(d0.module, K, 1)
        assert mod.is_isomorphic(d01.module, M) is not None
        d1 = forms.dual_module(M, K, 1)
        d10 = forms.dual_module(d1.module, K, 0)
        assert mod.is_isomorphic(d10.module, M) is not None
