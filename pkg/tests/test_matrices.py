"""Solver checks, cross-checked against independent oracles.

The oracles: 2x2 inverses by the adjugate formula, MP existence over
GF(2) by scanning all 16 candidates, and hand-reduced echelon forms.
"""
from fractions import Fraction as F

import pytest

from starinv.generators import SplitMix64
from starinv.matrices import (
    ExactMatrix,
    MatrixInverseEngine,
    MatrixParseError,
    MatrixRing,
    ZeroMatrixError,
    drazin_inverse,
    format_matrix,
    format_matrix_inline,
    full_rank_factorization,
    group_inverse,
    inverse,
    isotropic_vector,
    mp_inverse,
    parse_matrix,
    rank,
    rref,
    same_column_space,
)
from starinv.ring import verify_drazin, verify_mp
from starinv.scalars import QI, QQ, GaussianRational, PrimeField

GF2 = PrimeField(2)
GF3 = PrimeField(3)


def qmat(rows):
    return ExactMatrix.from_rows(QQ, [[F(e) for e in row] for row in rows])


def gf2mat(rows):
    return ExactMatrix.from_rows(GF2, rows)


def all_gf2_2x2():
    return [ExactMatrix(GF2, 2, 2, [(m >> k) & 1 for k in range(4)]) for m in range(16)]


def random_qmat(rng, n, lo=-3, hi=3):
    return ExactMatrix(QQ, n, n, [F(rng.int_between(lo, hi)) for _ in range(n * n)])


# ---------------------------------------------------------------- arithmetic


def test_matrix_equality_is_exact_and_field_aware():
    a = qmat([[1, 0], [0, 1]])
    b = ExactMatrix.identity(QQ, 2)
    assert a == b and hash(a) == hash(b)
    assert a != ExactMatrix.identity(GF2, 2)


def test_star_axioms_rational():
    rng = SplitMix64(3)
    for _ in range(20):
        a = random_qmat(rng, 3)
        b = random_qmat(rng, 3)
        assert a.star().star() == a
        assert (a * b).star() == b.star() * a.star()
        assert (a + b).star() == a.star() + b.star()


def test_star_is_conjugate_transpose_over_gaussians():
    i = GaussianRational(F(0), F(1))
    one = GaussianRational(F(1), F(0))
    a = ExactMatrix.from_rows(QI, [[one, i], [QI.zero(), one]])
    s = a.star()
    assert s.entry(1, 0) == GaussianRational(F(0), F(-1))
    assert s.entry(0, 1) == QI.zero()
    assert (a * a.star()).star() == a * a.star()


def test_matrix_immutable():
    a = qmat([[1, 0], [0, 1]])
    with pytest.raises(AttributeError):
        a.rows = 3


# ----------------------------------------------------------------------- rref


def test_rref_zero_matrix():
    _, r, pivots = rref(ExactMatrix.zeros(QQ, 2, 2))
    assert r == 0 and pivots == ()


def test_rref_identity():
    reduced, r, pivots = rref(ExactMatrix.identity(QQ, 3))
    assert reduced == ExactMatrix.identity(QQ, 3)
    assert r == 3 and pivots == (0, 1, 2)


def test_rref_gf2_hand_elimination():
    reduced, r, pivots = rref(gf2mat([[1, 1], [1, 1]]))
    assert reduced == gf2mat([[1, 1], [0, 0]])
    assert r == 1 and pivots == (0,)


def test_rank_equals_star_rank():
    rng = SplitMix64(5)
    for _ in range(20):
        a = random_qmat(rng, 3)
        assert rank(a) == rank(a.star())
        assert rank(a.star() * a) == rank(a)
    for a in all_gf2_2x2():
        assert rank(a) == rank(a.star())


def test_gram_rank_matches_over_gaussians():
    rng = SplitMix64(7)
    for _ in range(15):
        a = ExactMatrix(
            QI,
            3,
            3,
            [
                GaussianRational(F(rng.int_between(-2, 2)), F(rng.int_between(-2, 2)))
                for _ in range(9)
            ],
        )
        assert rank(a) == rank(a.star())
        assert rank(a.star() * a) == rank(a)


# ------------------------------------------------------- rank factorization


def test_full_rank_factorization_rank_one():
    fact = full_rank_factorization(qmat([[1, 0], [0, 0]]))
    assert fact.F == qmat([[1], [0]])
    assert fact.G == qmat([[1, 0]])
    assert fact.rank == 1


def test_full_rank_factorization_scaled_row():
    a = qmat([[F(1, 2), F(1, 2)], [0, 0]])
    fact = full_rank_factorization(a)
    assert fact.F == qmat([[F(1, 2)], [0]])
    assert fact.G == qmat([[1, 1]])
    assert fact.F * fact.G == a


def test_full_rank_factorization_identity():
    fact = full_rank_factorization(ExactMatrix.identity(QQ, 3))
    assert fact.F == fact.G == ExactMatrix.identity(QQ, 3)


def test_full_rank_factorization_rejects_zero():
    with pytest.raises(ZeroMatrixError):
        full_rank_factorization(ExactMatrix.zeros(QQ, 2, 3))


def test_full_rank_factorization_reconstructs():
    rng = SplitMix64(9)
    for _ in range(20):
        a = random_qmat(rng, 4)
        if a.is_zero():
            continue
        fact = full_rank_factorization(a)
        assert fact.F * fact.G == a
        assert rank(fact.F) == rank(fact.G) == fact.rank == rank(a)


# ------------------------------------------------------------------ inverses


def test_inverse_against_adjugate_oracle():
    rng = SplitMix64(21)
    for _ in range(30):
        a = random_qmat(rng, 2)
        det = a.entry(0, 0) * a.entry(1, 1) - a.entry(0, 1) * a.entry(1, 0)
        got = inverse(a)
        if det == 0:
            assert got is None
        else:
            adjugate = qmat(
                [
                    [a.entry(1, 1) / det, -a.entry(0, 1) / det],
                    [-a.entry(1, 0) / det, a.entry(0, 0) / det],
                ]
            )
            assert got == adjugate


def test_mp_inverse_zero():
    got = mp_inverse(ExactMatrix.zeros(QQ, 2, 3))
    assert got == ExactMatrix.zeros(QQ, 3, 2)


def test_mp_inverse_diagonal_projection_slice():
    assert mp_inverse(qmat([[F(1, 2), 0], [0, 0]])) == qmat([[2, 0], [0, 0]])


def test_mp_inverse_gf2_singular_gram():
    assert mp_inverse(gf2mat([[1, 1], [1, 1]])) is None
    # independent oracle: no candidate among all 16 passes
    a = gf2mat([[1, 1], [1, 1]])
    assert all(not verify_mp(a, b).all for b in all_gf2_2x2())


def test_mp_inverse_gf2_matches_exhaustive_oracle():
    matrices = all_gf2_2x2()
    for a in matrices:
        witnesses = [b for b in matrices if verify_mp(a, b).all]
        got = mp_inverse(a)
        if witnesses:
            assert got == witnesses[0]
        else:
            assert got is None


def test_mp_inverse_rectangular_certified():
    rng = SplitMix64(33)
    for _ in range(20):
        a = ExactMatrix(QQ, 2, 3, [F(rng.int_between(-3, 3)) for _ in range(6)])
        b = mp_inverse(a)
        assert b is not None
        assert verify_mp(a, b).all


def test_mp_dagger_interplay_identities():
    # Whenever the MP inverse exists: (A*A)+ = A+ (A*)+ and
    # A+ = (A*A)+ A* = A* (AA*)+, all exactly.
    rng = SplitMix64(41)
    for _ in range(15):
        a = random_qmat(rng, 3)
        a_dag = mp_inverse(a)
        assert a_dag is not None
        gram = a.star() * a
        gram_dag = mp_inverse(gram)
        assert gram_dag is not None
        assert gram_dag == a_dag * a_dag.star()
        assert a_dag == gram_dag * a.star()
        assert a_dag == a.star() * mp_inverse(a * a.star())


def test_mp_existence_matches_gram_existence_over_reducing_fields():
    rng = SplitMix64(43)
    for _ in range(15):
        a = random_qmat(rng, 3)
        assert mp_inverse(a) is not None
        assert mp_inverse(a.star() * a) is not None


def test_drazin_invertible():
    a = qmat([[2, 1], [1, 1]])
    witness, k = drazin_inverse(a)
    assert k == 0
    assert witness == inverse(a)


def test_drazin_nilpotent():
    witness, k = drazin_inverse(qmat([[0, 1], [0, 0]]))
    assert witness == ExactMatrix.zeros(QQ, 2, 2)
    assert k == 2


def test_drazin_idempotent():
    a = qmat([[1, 0], [0, 0]])
    witness, k = drazin_inverse(a)
    assert witness == a and k == 1


def test_drazin_zero_matrix():
    witness, k = drazin_inverse(ExactMatrix.zeros(QQ, 2, 2))
    assert witness == ExactMatrix.zeros(QQ, 2, 2) and k == 1


def test_drazin_certified_and_commutes():
    rng = SplitMix64(55)
    for _ in range(25):
        a = random_qmat(rng, 4, -2, 2)
        witness, k = drazin_inverse(a)
        assert verify_drazin(a, witness, k).valid
        assert a * witness == witness * a
        if k > 0:
            # the index is minimal: the power equation fails at k - 1
            assert not verify_drazin(a, witness, k - 1).index_eq


def test_drazin_over_gf2():
    for a in all_gf2_2x2():
        witness, k = drazin_inverse(a)
        assert verify_drazin(a, witness, k).valid


def test_group_inverse():
    a = qmat([[1, 0], [0, 0]])
    assert group_inverse(a) == a
    assert group_inverse(qmat([[0, 1], [0, 0]])) is None
    assert group_inverse(qmat([[F(1, 2), 0], [0, 0]])) == qmat([[2, 0], [0, 0]])


def test_group_inverse_agrees_with_mp_for_ep_matrices():
    # When column spaces of A and A* agree and A has an MP inverse,
    # the group inverse exists and the two coincide.
    for a in all_gf2_2x2():
        a_dag = mp_inverse(a)
        if a_dag is not None and same_column_space(a, a.star()):
            assert group_inverse(a) == a_dag
    rng = SplitMix64(59)
    for _ in range(15):
        m = random_qmat(rng, 3, -2, 2)
        a = m + m.star()  # self-adjoint, so the column spaces agree
        a_dag = mp_inverse(a)
        assert a_dag is not None
        assert group_inverse(a) == a_dag


def test_same_column_space():
    assert same_column_space(qmat([[1, 0], [0, 0]]), qmat([[2, 0], [0, 0]]))
    assert not same_column_space(qmat([[1, 0], [0, 0]]), qmat([[0, 0], [0, 1]]))


# ------------------------------------------------------------- star-reducing


def test_all_ones_gf2_kills_gram():
    a = gf2mat([[1, 1], [1, 1]])
    assert not a.is_zero()
    assert (a.star() * a).is_zero()


def test_isotropic_vectors():
    assert isotropic_vector(2, 1) is None
    assert isotropic_vector(2, 2) == (1, 1)
    assert isotropic_vector(3, 2) is None  # -1 is not a square mod 3
    vec5 = isotropic_vector(5, 2)
    assert vec5 is not None and (vec5[0] ** 2 + vec5[1] ** 2) % 5 == 0
    vec33 = isotropic_vector(3, 3)
    assert vec33 is not None and sum(x * x for x in vec33) % 3 == 0


def test_matrix_ring_star_reducing_flags():
    assert MatrixRing(QQ, 3).is_star_reducing
    assert MatrixRing(QI, 3).is_star_reducing
    assert not MatrixRing(GF2, 2).is_star_reducing
    assert MatrixRing(GF3, 2).is_star_reducing
    assert not MatrixRing(GF3, 3).is_star_reducing
    assert not MatrixRing(PrimeField(5), 2).is_star_reducing


def test_non_star_reducing_witness_matrix():
    ring = MatrixRing(GF2, 2)
    witness = ring.non_star_reducing_witness()
    assert witness is not None
    assert not witness.is_zero()
    assert (witness.star() * witness).is_zero()
    assert MatrixRing(QQ, 2).non_star_reducing_witness() is None


def test_matrix_ring_ids():
    assert MatrixRing(QQ, 2).ring_id == "q"
    assert MatrixRing(QI, 2).ring_id == "qi"
    assert MatrixRing(PrimeField(7), 2).ring_id == "gf:7"


def test_matrix_engine_surface():
    engine = MatrixInverseEngine(MatrixRing(QQ, 2))
    assert engine.star_reducing
    assert engine.ring_id == "q"
    a = qmat([[F(1, 2), 0], [0, 0]])
    assert engine.mp(a) == qmat([[2, 0], [0, 0]])
    witness, k = engine.drazin(a)
    assert k == 1 and witness == qmat([[2, 0], [0, 0]])
    assert "ring Q" in engine.serialize(a)


# ------------------------------------------------------------- text format


@pytest.mark.parametrize(
    "matrix",
    [
        qmat([[F(1, 2), -2], [0, 7]]),
        ExactMatrix.from_rows(
            QI,
            [
                [GaussianRational(F(1, 2), F(-3)), QI.one()],
                [QI.zero(), GaussianRational(F(0), F(2, 5))],
            ],
        ),
        ExactMatrix.from_rows(PrimeField(5), [[0, 4, 2]]),
    ],
)
def test_text_format_round_trip(matrix):
    assert parse_matrix(format_matrix(matrix)) == matrix


def test_parse_matrix_example():
    text = "ring Q\nrows 2\ncols 2\n1/2 -1/2\n0 1\n"
    assert parse_matrix(text) == qmat([[F(1, 2), F(-1, 2)], [0, 1]])


def test_parse_matrix_bad_header():
    with pytest.raises(MatrixParseError):
        parse_matrix("ring Z\nrows 1\ncols 1\n3\n")
    with pytest.raises(MatrixParseError):
        parse_matrix("ring GF 4\nrows 1\ncols 1\n3\n")


def test_parse_matrix_wrong_entry_count():
    with pytest.raises(MatrixParseError) as info:
        parse_matrix("ring Q\nrows 2\ncols 2\n1 2 3\n4 5\n")
    assert info.value.line == 4


def test_parse_matrix_bad_entry_has_position():
    with pytest.raises(MatrixParseError) as info:
        parse_matrix("ring Q\nrows 1\ncols 3\n1 x 3\n")
    assert info.value.line == 4
    assert info.value.column == 2


def test_parse_matrix_gf_range_check():
    with pytest.raises(MatrixParseError):
        parse_matrix("ring GF 3\nrows 1\ncols 1\n3\n")


def test_inline_format():
    assert format_matrix_inline(qmat([[1, 0], [0, 1]])) == "1 0; 0 1"
