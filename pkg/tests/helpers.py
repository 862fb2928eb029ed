"""Shared builders for the test suite."""

from __future__ import annotations

import random

from fdalg import algebras as alg
from fdalg import forms, modules as mod
from fdalg.linalg import Matrix, invert


def transpose_map(A: alg.Algebra, n: int) -> alg.AlgebraMap:
    """The transpose anti-automorphism of a matrix algebra on matrix units."""
    imgs = [A.basis_vector(j * n + i) for i in range(n) for j in range(n)]
    return alg.AlgebraMap.from_images(A, A, imgs, alg.AlgebraMap.ANTI)


def ut_flip_map(A: alg.Algebra, n: int) -> alg.AlgebraMap:
    """The anti-diagonal flip e_ij -> e_{n+1-j, n+1-i} of upper triangulars."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {p: t for t, p in enumerate(pairs)}
    imgs = [A.basis_vector(index[(n - 1 - j, n - 1 - i)]) for (i, j) in pairs]
    return alg.AlgebraMap.from_images(A, A, imgs, alg.AlgebraMap.ANTI)


def identity_anti(A: alg.Algebra) -> alg.AlgebraMap:
    """The identity as an anti-automorphism (commutative algebras only)."""
    return alg.AlgebraMap(A, A, Matrix.identity(A.field, A.dim), alg.AlgebraMap.ANTI)


def random_adjoint(M, dual1, seed: int, invertible: bool = True, trials: int = 200):
    """A random (optionally invertible) element of Hom(M, M^[1]) as a matrix."""
    H = mod.hom_space(M, dual1.module)
    rng = random.Random(seed)
    field = M.algebra.field
    for _ in range(trials):
        if field.p is None:
            coeffs = [field.coerce(rng.randint(-3, 3)) for _ in range(H.dim)]
        else:
            coeffs = [field.coerce(rng.randrange(field.p)) for _ in range(H.dim)]
        f = H.matrix_from_coords(coeffs)
        if not invertible:
            return f
        if invert(f) is not None:
            return f
    raise AssertionError("no invertible adjoint found; bad test setup")


def random_regular_form(M, K, seed: int):
    dual1 = forms.dual_module(M, K, 1)
    f = random_adjoint(M, dual1, seed)
    return forms.form_from_adjoint(M, K, dual1, f)


def corpus_small_posets():
    """Assorted posets on <= 8 points: chains, antichains, fences, sums."""
    from fdalg import posets as ps

    out = [
        ps.chain(1), ps.chain(2), ps.chain(3), ps.chain(4),
        ps.antichain(2), ps.antichain(3),
        # diamond
        ps.Poset.from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
        # fence / zigzag
        ps.Poset.from_covers(4, [(0, 1), (2, 1), (2, 3)]),
        # disjoint union of two chains
        ps.Poset.from_covers(4, [(0, 1), (2, 3)]),
        # Y shape
        ps.Poset.from_covers(4, [(0, 1), (1, 2), (1, 3)]),
        # three-element V plus isolated point
        ps.Poset.from_covers(4, [(0, 1), (0, 2)]),
        # 2x2 grid plus a tail
        ps.Poset.from_covers(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]),
        # crown S_3^0 (6 elements, connected, no involution? it has one)
        ps.Poset.from_covers(6, [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)]),
    ]
    return out
