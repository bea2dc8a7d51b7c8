from fractions import Fraction
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from embrace.linalg import (
    FieldSpec, Mod, SparseMatrix, complement_basis, kernel_basis, quotient_dim, random_matrix, rank,
    rref, solve,
)

Q = FieldSpec.Q()
GF7 = FieldSpec.GF(7)


def M(field, rows):
    return SparseMatrix.from_dense(field, rows)


# --------------------------------------------------------------- fields


def test_field_specs():
    assert Q.name == "Q" and GF7.name == "GF(7)"
    assert FieldSpec.parse("GF(5)") == FieldSpec.GF(5)
    assert FieldSpec.parse(" Q ") == Q
    with pytest.raises(ValueError):
        FieldSpec.GF(6)
    with pytest.raises(ValueError):
        FieldSpec("rational", 3)
    with pytest.raises(ValueError):
        FieldSpec.parse("R")


def test_floats_rejected():
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(TypeError):
        GF7(0.5)


def test_rationals_in_lowest_terms():
    x = Q(Fraction(6, 4))
    assert (x.numerator, x.denominator) == (3, 2)
    assert Q(Fraction(-3, 6)).denominator == 2


def test_residues_reduced():
    assert Mod(-1, 7).v == 6
    assert (Mod(3, 7) * 5).v == 1
    assert Mod(3, 7).inverse() == Mod(5, 7)
    assert GF7(Fraction(1, 2)) == Mod(4, 7)


@pytest.mark.parametrize("field,x,text", [
    (Q, Fraction(3), "3"),
    (Q, Fraction(-2, 3), "-2/3"),
    (GF7, Mod(10, 7), "3 mod 7"),
])
def test_scalar_serialization(field, x, text):
    assert field.format(field(x)) == text
    assert field.parse_scalar(text) == field(x)


def test_parse_scalar_rejects_other_prime():
    with pytest.raises(ValueError):
        GF7.parse_scalar("1 mod 5")


def test_mixing_characteristics_fails():
    with pytest.raises(ValueError):
        Mod(1, 5) + Mod(1, 7)


_ints = st.integers(-50, 50)
_fracs = st.builds(lambda a, b: Fraction(a, b), _ints, st.integers(1, 9))


@given(_fracs, _fracs, _fracs)
def test_field_axioms_rational(a, b, c):
    a, b, c = Q(a), Q(b), Q(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (Q.one / a) == Q.one


@given(st.sampled_from([2, 3, 5, 7, 11]), _ints, _ints, _ints)
def test_field_axioms_prime(p, a, b, c):
    F = FieldSpec.GF(p)
    a, b, c = F(a), F(b), F(c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    if a:
        assert a * a.inverse() == F.one


# --------------------------------------------------------------- rref


def test_rref_identity():
    R, piv, r = rref(SparseMatrix.identity(Q, 2))
    assert R == SparseMatrix.identity(Q, 2) and piv == [0, 1] and r == 2


def test_rref_zero():
    Z = SparseMatrix(Q, 2, 3)
    R, piv, r = rref(Z)
    assert R == Z and piv == [] and r == 0


def test_rref_rank_one():
    R, piv, r = rref(M(Q, [[1, 2], [2, 4]]))
    assert R == M(Q, [[1, 2], [0, 0]]) and piv == [0] and r == 1


def test_entries_canonical():
    A = SparseMatrix(Q, 2, 2, {1: {0: Q(3)}, 0: {1: Q(1), 0: Q(0)}})
    assert [(r, c) for r, c, _ in A.entries] == [(0, 1), (1, 0)]
    with pytest.raises(IndexError):
        SparseMatrix(Q, 1, 1, {0: {3: Q(1)}})


_dense = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=60, deadline=None)
@given(_dense)
def test_rref_matches_sympy(rows):
    R, piv, r = rref(M(Q, rows))
    S, spiv = sympy.Matrix(rows).rref()
    assert r == len(spiv) and tuple(piv) == spiv
    assert [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in R.to_dense()] == \
        [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in S.row(i)] for i in range(S.rows)]


@settings(max_examples=60, deadline=None)
@given(_dense, st.sampled_from([2, 5, 7]))
def test_rank_mod_p_matches_sympy(rows, p):
    from sympy.polys.matrices import DomainMatrix
    K = sympy.GF(p)
    D = DomainMatrix([[K(x) for x in row] for row in rows], (len(rows), len(rows[0])), K)
    assert rank(M(FieldSpec.GF(p), rows)) == D.rank()


@settings(max_examples=60, deadline=None)
@given(_dense, st.sampled_from([Q, FieldSpec.GF(5)]))
def test_rref_idempotent_and_kernel(rows, F):
    A = M(F, rows)
    R = rref(A)[0]
    assert rref(R)[0] == R
    ker = kernel_basis(A)
    assert len(ker) == A.cols - rank(A)
    for v in ker:
        assert not any(A.matvec(v))


@settings(max_examples=60, deadline=None)
@given(_dense, st.data())
def test_solve_contract(rows, data):
    A = M(Q, rows)
    b = [Q(v) for v in data.draw(st.lists(st.integers(-3, 3), min_size=A.rows, max_size=A.rows))]
    x = solve(A, b)
    aug = A.hstack(SparseMatrix.from_columns(Q, [b], A.rows))
    if x is None:
        assert rank(aug) > rank(A)
    else:
        assert A.matvec(x) == b


# --------------------------------------------------------------- solve


def test_solve_identity():
    b = [Q(3), Q(Fraction(-1, 2))]
    assert solve(SparseMatrix.identity(Q, 2), b) == b


def test_solve_free_variable_zero():
    assert solve(M(Q, [[1, 1]]), [Q(1)]) == [Q(1), Q(0)]


def test_solve_inconsistent():
    assert solve(M(Q, [[0]]), [Q(1)]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(M(Q, [[1, 1]]), [Q(1), Q(2)])


# --------------------------------------------------------------- kernels and quotients


def test_kernel_examples():
    assert kernel_basis(SparseMatrix.identity(Q, 3)) == []
    assert len(kernel_basis(SparseMatrix(Q, 1, 2))) == 2
    (v,) = kernel_basis(M(Q, [[1, 2], [2, 4]]))
    assert v == [Q(-2), Q(1)]


def test_quotient_dim_examples():
    e = [[Q(1), Q(0)], [Q(0), Q(1)]]
    assert quotient_dim(Q, e, [], 2) == 2
    assert quotient_dim(Q, e, e) == 0
    assert quotient_dim(Q, e, [[Q(1), Q(1)]]) == 1


def test_quotient_dim_containment_checked():
    with pytest.raises(ArithmeticError):
        quotient_dim(Q, [[Q(1), Q(0)]], [[Q(0), Q(1)]])


def test_complement_basis_deterministic():
    vecs = [[Q(1), Q(0)], [Q(2), Q(0)], [Q(0), Q(1)]]
    assert complement_basis(Q, vecs, [], 2) == [vecs[0], vecs[2]]
    assert complement_basis(Q, vecs, [[Q(1), Q(0)]], 2) == [vecs[2]]


def test_random_matrix_reproducible():
    a = random_matrix(GF7, 4, 5, random.Random(3))
    b = random_matrix(GF7, 4, 5, random.Random(3))
    assert a == b
