"""Structure-constant algebras: constructors, radicals, idempotents."""

import pytest

from fdalg import algebras as alg
from fdalg.errors import (
    UnsplitQuotientError,
    UnsupportedCharacteristicError,
    VerificationError,
)
from fdalg.linalg import Field, Matrix, QQ

from helpers import transpose_map

F5 = Field(5)


def test_matrix_algebra_basics():
    A1 = alg.matrix_algebra(QQ, 1)
    assert A1.dim == 1 and A1.unit == (1,)
    A = alg.matrix_algebra(F5, 2)
    assert A.dim == 4
    e12, e21, e11 = A.basis_vector(1), A.basis_vector(2), A.basis_vector(0)
    assert A.mul(e12, e21) == e11
    # associativity is checked exhaustively at construction
    alg.matrix_algebra(QQ, 3)


def test_opposite_laws():
    M2 = alg.matrix_algebra(QQ, 2)
    op = alg.opposite(M2)
    assert alg.opposite(op) == M2
    # e12 o e21 in the opposite equals e21 e12 = e22
    assert op.mul(op.basis_vector(1), op.basis_vector(2)) == M2.basis_vector(3)
    comm = alg.quadratic_extension(QQ, 2)
    assert alg.opposite(comm) == comm


def test_products():
    FQ = alg.field_algebra(QQ)
    P = alg.direct_product(FQ, FQ)
    assert all(x == 0 for x in P.mul(P.basis_vector(0), P.basis_vector(1)))
    M2 = alg.matrix_algebra(QQ, 2)
    T = alg.tensor_product(M2, M2)
    assert T.dim == 16  # associativity checked at construction
    # A (x) F = A up to the trivial reindexing
    AF = alg.tensor_product(M2, FQ)
    assert AF.table == M2.table and AF.unit == M2.unit


def test_tensor_associative_on_the_nose():
    A = alg.matrix_algebra(QQ, 2)
    B = alg.upper_triangular_algebra(QQ, 2)
    C = alg.field_algebra(QQ)
    left = alg.tensor_product(alg.tensor_product(A, B), C)
    right = alg.tensor_product(A, alg.tensor_product(B, C))
    assert left.table == right.table and left.unit == right.unit


def test_center_examples():
    assert alg.center(alg.matrix_algebra(QQ, 3)).dim == 1
    FQ = alg.field_algebra(QQ)
    assert alg.center(alg.direct_product(FQ, FQ)).dim == 2


def test_radical_examples():
    assert alg.jacobson_radical(alg.matrix_algebra(QQ, 2)) == []
    ut = alg.upper_triangular_algebra(QQ, 2)
    J = alg.jacobson_radical(ut)
    assert len(J) == 1 and J[0] == (0, 1, 0)
    # quotient by the radical is semisimple
    Abar, _ = alg.quotient_algebra(ut, J)
    assert alg.jacobson_radical(Abar) == []


def test_radical_char_restriction():
    A = alg.upper_triangular_algebra(Field(2), 3)
    with pytest.raises(UnsupportedCharacteristicError):
        alg.jacobson_radical(A)


def test_is_unit():
    ut = alg.upper_triangular_algebra(QQ, 2)
    one = ut.unit
    assert alg.is_unit(ut, one) == one
    M2 = alg.matrix_algebra(QQ, 2)
    assert alg.is_unit(M2, M2.basis_vector(1)) is None  # nilpotent e12
    x = tuple(a + b for a, b in zip(ut.unit, ut.basis_vector(1)))  # 1 + e12
    inv = alg.is_unit(ut, x)
    assert inv == tuple(a - b for a, b in zip(ut.unit, ut.basis_vector(1)))


def test_primitive_idempotents_matrix():
    M2 = alg.matrix_algebra(QQ, 2)
    idems = alg.primitive_idempotents(M2)
    assert sorted(idems) == sorted([M2.basis_vector(0), M2.basis_vector(3)])


def test_primitive_idempotents_product():
    FQ = alg.field_algebra(QQ)
    P = alg.direct_product(FQ, FQ)
    idems = alg.primitive_idempotents(P)
    assert sorted(idems) == [(0, 1), (1, 0)]


def test_primitive_idempotents_lift_through_radical():
    ut3 = alg.upper_triangular_algebra(QQ, 3)
    idems = alg.primitive_idempotents(ut3)
    assert len(idems) == 3
    total = idems[0]
    for e in idems[1:]:
        total = tuple(a + b for a, b in zip(total, e))
    assert total == ut3.unit
    for e in idems:
        assert ut3.mul(e, e) == e


def test_primitive_idempotents_unsplit():
    H = alg.quaternion_algebra(QQ)
    with pytest.raises(UnsplitQuotientError):
        alg.primitive_idempotents(H)


def test_primitive_idempotents_char_23_guard():
    F3 = Field(3)
    # radical is nonzero here, so lifting must refuse char 3
    ut = alg.upper_triangular_algebra(F3, 2)
    with pytest.raises(UnsupportedCharacteristicError):
        alg.primitive_idempotents(ut)


def test_idempotents_brute_force_primitivity_small_field():
    # over F5 the corner algebras can be swept exhaustively
    M2 = alg.matrix_algebra(F5, 2)
    idems = alg.primitive_idempotents(M2)
    for e in idems:
        corner_vectors = [M2.mul(e, M2.mul(M2.basis_vector(i), e)) for i in range(4)]
        corner, emb = alg.subalgebra(M2, corner_vectors, e)
        assert corner.dim == 1
        # every idempotent of a 1-dim algebra is 0 or the unit
        import itertools
        for coeffs in itertools.product(range(5), repeat=corner.dim):
            x = tuple(F5.coerce(c) for c in coeffs)
            if corner.mul(x, x) == x:
                assert x == corner.unit or all(c == 0 for c in x)


def test_basic_algebra_examples():
    M3 = alg.matrix_algebra(QQ, 3)
    res = alg.basic_algebra(M3)
    assert res.algebra.dim == 1
    mixed = alg.direct_product(alg.matrix_algebra(QQ, 2), alg.field_algebra(QQ))
    res2 = alg.basic_algebra(mixed)
    assert res2.algebra.dim == 2
    assert len(res2.class_representatives) == 2
    b0, b1 = res2.algebra.basis_vector(0), res2.algebra.basis_vector(1)
    prod = res2.algebra.mul(b0, b1)
    assert all(x == 0 for x in prod)


def test_goldman_element_cases():
    T1, g1 = alg.goldman_element(1, QQ)
    assert g1 == T1.unit
    T2, g2 = alg.goldman_element(2, QQ)
    assert T2.mul(g2, g2) == T2.unit
    # swap law at a specific pair: g (e12 (x) e22) = (e22 (x) e12) g
    lhs = T2.mul(g2, T2.basis_vector(1 * 4 + 3))
    rhs = T2.mul(T2.basis_vector(3 * 4 + 1), g2)
    assert lhs == rhs
    alg.goldman_element(3, F5)


def test_find_goldman_element_search():
    M2 = alg.matrix_algebra(QQ, 2)
    T, g = alg.find_goldman_element(M2, trials=50)
    assert g is not None
    assert T.mul(g, g) == T.unit


def test_restriction_to_center():
    M2 = alg.matrix_algebra(QQ, 2)
    tr = transpose_map(M2, 2)
    rz = alg.restriction_to_center(tr)
    assert rz.matrix.is_identity()
    FQ = alg.field_algebra(QQ)
    P = alg.direct_product(FQ, FQ)
    swap = alg.AlgebraMap.from_images(P, P, [P.basis_vector(1), P.basis_vector(0)],
                                      alg.AlgebraMap.HOMOMORPHISM)
    rz2 = alg.restriction_to_center(swap)
    assert not rz2.matrix.is_identity()
    assert (rz2.matrix * rz2.matrix).is_identity()


def test_algebra_map_validation():
    M2 = alg.matrix_algebra(QQ, 2)
    with pytest.raises(VerificationError):
        # identity matrix is not anti-multiplicative on M2
        alg.AlgebraMap(M2, M2, Matrix.identity(QQ, 4), alg.AlgebraMap.ANTI)
    tr = transpose_map(M2, 2)
    assert tr.is_involution()
    assert tr.compose(tr).variance == alg.AlgebraMap.HOMOMORPHISM


def test_quaternion_structure():
    H = alg.quaternion_algebra(QQ)
    i, j, k = H.basis_vector(1), H.basis_vector(2), H.basis_vector(3)
    minus_one = tuple(-x for x in H.unit)
    assert H.mul(i, i) == minus_one
    assert H.mul(j, j) == minus_one
    assert H.mul(i, j) == k
    assert H.mul(j, i) == tuple(-x for x in k)
    conj = alg.quaternion_conjugation(H)
    assert conj.is_involution()
    # x conj(x) = norm(x) 1 > 0, so H has no zero divisors on the basis
    x = (1, 2, 3, 4)
    n = H.mul(x, conj.apply(x))
    assert n == tuple(30 * c for c in H.unit)


def test_minimal_polynomial():
    M2 = alg.matrix_algebra(QQ, 2)
    m = alg.minimal_polynomial(M2, M2.basis_vector(1))  # e12 nilpotent
    assert m == [0, 0, 1]
    m2 = alg.minimal_polynomial(M2, M2.unit)
    assert m2 == [-1, 1]


def test_subalgebra_and_quotient_roundtrip():
    ut = alg.upper_triangular_algebra(QQ, 2)
    # diagonal subalgebra
    span = [ut.basis_vector(0), ut.basis_vector(2)]
    D, emb = alg.subalgebra(ut, span, ut.unit)
    assert D.dim == 2
    J = alg.jacobson_radical(ut)
    Q, quo = alg.quotient_algebra(ut, J)
    assert Q.dim == 2
    assert alg.jacobson_radical(Q) == []
