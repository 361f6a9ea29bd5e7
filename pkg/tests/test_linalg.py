import pytest

from cyclocat.arith import CyclotomicField
from cyclocat.linalg import Matrix, Subspace, block_diag, hstack, inverse, kron, nullspace, rank, solve, vstack

F = CyclotomicField(15)


def M(rows, ncols=None):
    return Matrix(F, rows, ncols)


def test_rank_nullspace_solve():
    A = M([[1, 2, 3], [2, 4, 6], [1, 0, "t"]])
    assert rank(A) == 2
    for v in nullspace(A):
        assert all(x.is_zero() for x in A.apply(v))
    assert len(nullspace(A)) == 1
    b = A @ M([[1], [1], [1]])
    x = solve(A, b)
    assert A @ x == b
    assert solve(A, M([[1], [0], [0]])) is None


def test_inverse():
    A = M([[1, "t"], [0, 2]])
    assert A @ inverse(A) == Matrix.identity(F, 2)
    with pytest.raises(ZeroDivisionError):
        inverse(M([[1, 2], [2, 4]]))


def test_stacking_and_kron():
    A = M([[1, 2]])
    B = M([[3, 4]])
    assert vstack(F, [A, B], 2) == M([[1, 2], [3, 4]])
    assert hstack(F, [A, B], 1) == M([[1, 2, 3, 4]])
    assert block_diag(F, [A, B]).shape == (2, 4)
    K = kron(M([[1, 2], [0, 1]]), M([[0, 1], [1, 0]]))
    assert K == M([[0, 1, 0, 2], [1, 0, 2, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert M([[1, 2], [3, 4]]).T == M([[1, 3], [2, 4]])
    assert Matrix.zeros(F, 0, 3).T.shape == (3, 0)


def test_subspace():
    S = Subspace(F, 3)
    assert S.add((F.one, F.one, F.zero))
    assert not S.add((F(2), F(2), F.zero))
    assert S.add((F.zero, F.root(1), F.zero))
    assert S.contains((F(5), F.root(2), F.zero))
    assert len(S) == 2 and S.complement_basis() == [2]
