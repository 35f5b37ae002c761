import pytest

from spiderweb.qalg import RationalQ, q_fact_ratio, q_int, q_ratio
from spiderweb.tl import (
    TLDiagram,
    a1_pair_clasp_coeff,
    a1_single_clasp_coeffs,
    admissible_a1,
    jones_wenzl,
    single_clasp_expansion,
    theta_a1,
    theta_a1_oracle,
    tl_augmentation,
    tl_close,
    tl_compose,
    tl_e,
    tl_id,
)


def test_diagram_validation():
    with pytest.raises(ValueError):
        TLDiagram(2, 2, (1, 0, 2, 3))  # fixed points
    with pytest.raises(ValueError):
        TLDiagram(2, 2, (3, 2, 1, 0))  # transposition = crossing strands
    d = TLDiagram(2, 2, (1, 0, 3, 2))  # cap-cup is planar
    assert d.crossing_count() == 0


def test_e_relations():
    e1 = tl_e(2, 1)
    assert tl_compose(e1, e1) == e1.scale(RationalQ.from_laurent(-q_int(2)))
    assert tl_compose(tl_compose(tl_e(3, 1), tl_e(3, 2)), tl_e(3, 1)) == tl_e(3, 1)
    assert tl_compose(tl_compose(tl_e(3, 2), tl_e(3, 1)), tl_e(3, 2)) == tl_e(3, 2)
    x = tl_compose(tl_e(4, 1), tl_e(4, 3))
    assert x == tl_compose(tl_e(4, 3), tl_e(4, 1))
    with pytest.raises(ValueError):
        tl_e(2, 2)
    with pytest.raises(ValueError):
        tl_e(3, 0)


def test_identity_neutral():
    for x in [tl_e(3, 1), jones_wenzl(3), tl_e(3, 2)]:
        assert tl_compose(tl_id(3), x) == x
        assert tl_compose(x, tl_id(3)) == x


def test_jones_wenzl_small():
    assert jones_wenzl(1) == tl_id(1)
    f2 = jones_wenzl(2)
    assert f2 == tl_id(2) + tl_e(2, 1).scale(q_ratio([1], [2]))
    assert tl_compose(jones_wenzl(3), tl_e(3, 2)).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_jones_wenzl_idempotent_and_annihilated(n):
    f = jones_wenzl(n)
    assert tl_augmentation(f) == RationalQ.one()
    assert tl_compose(f, f) == f
    for i in range(1, n):
        assert tl_compose(f, tl_e(n, i)).is_zero()
        assert tl_compose(tl_e(n, i), f).is_zero()


def test_augmentation():
    assert tl_augmentation(tl_id(2)) == RationalQ.one()
    assert tl_augmentation(tl_e(2, 1)).is_zero()
    assert tl_augmentation(jones_wenzl(3)) == RationalQ.one()


@pytest.mark.parametrize("n", range(1, 7))
def test_single_clasp_expansion_reconstructs_jw(n):
    coeffs = a1_single_clasp_coeffs(n)
    assert coeffs[0] == RationalQ.one()
    if n >= 2:
        assert coeffs[n - 2] == coeffs[n - 1] * q_int(2)
    for i in range(n - 2):
        r = coeffs[i] - coeffs[i + 1] * q_int(2) + coeffs[i + 2]
        assert r.is_zero()
    assert single_clasp_expansion(n) == jones_wenzl(n)


def test_single_clasp_example():
    # n=4, i=2 -> [3]/[4]
    assert a1_single_clasp_coeffs(4)[1] == q_ratio([3], [4])
    assert a1_single_clasp_coeffs(2) == [RationalQ.one(), q_ratio([1], [2])]


def test_pair_clasp_values():
    assert a1_pair_clasp_coeff(3, 1, 2, 2, 0) == RationalQ.one()
    assert a1_pair_clasp_coeff(1, 1, 1, 1, 1) == q_ratio([1], [2])
    expect = q_fact_ratio([2, 1, 2], [1, 0, 1, 3])
    assert a1_pair_clasp_coeff(2, 1, 2, 1, 1) == expect
    with pytest.raises(ValueError):
        a1_pair_clasp_coeff(1, 2, 1, 2, 0)  # b is not the min
    with pytest.raises(ValueError):
        a1_pair_clasp_coeff(2, 1, 1, 1, 0)  # a+b != c+d


def test_pair_clasp_recurrence():
    # the two-term induction from the proof of the pair clasp expansion
    for total in range(2, 11):
        for b in range(1, total // 2 + 1):
            a = total - b
            for c in range(b, total - b + 1):
                d = total - c
                if b != min(a, b, c, d):
                    continue
                for k in range(b + 1):
                    lhs = a1_pair_clasp_coeff(a, b, c, d, k)
                    first = (
                        a1_pair_clasp_coeff(a, b - 1, c, d - 1, k)
                        if k <= b - 1
                        else RationalQ.zero()
                    )
                    second = (
                        a1_pair_clasp_coeff(a - 1, b - 1, c - 1, d - 1, k - 1)
                        if 1 <= k and b - 1 >= 0 and min(a - 1, b - 1, c - 1, d - 1) >= b - 1 - min(a - 1, c - 1, d - 1) * 0 and k - 1 <= b - 1
                        else RationalQ.zero()
                    )
                    coeff = q_ratio([a, c], [a + b, a + b - 1])
                    assert lhs == first + coeff * second, (a, b, c, d, k)


def test_admissible_a1():
    assert admissible_a1(1, 1, 2) == (0, 1, 1)
    assert admissible_a1(1, 1, 1) is None
    assert admissible_a1(2, 2, 2) == (1, 1, 1)
    assert admissible_a1(1, 1, 4) is None


def test_theta_values():
    assert theta_a1(0, 0, 0) == RationalQ.one()
    assert theta_a1(1, 0, 0) == RationalQ.from_laurent(-q_int(2))
    assert theta_a1_oracle(0, 0, 0) == RationalQ.one()
    assert theta_a1_oracle(1, 0, 0) == RationalQ.from_laurent(-q_int(2))
    assert theta_a1_oracle(1, 1, 0) == theta_a1(1, 1, 0)
    assert theta_a1_oracle(1, 1, 1) == theta_a1(1, 1, 1)


@pytest.mark.parametrize("total", range(5))
def test_theta_oracle_small(total):
    for i in range(total + 1):
        for j in range(total - i + 1):
            k = total - i - j
            assert theta_a1(i, j, k) == theta_a1_oracle(i, j, k)


def test_theta_proof_identity():
    # [j+1+k+1][i+k+1] = [j+1][i] + [i+j+k+2][k+1]
    for i in range(9):
        for j in range(9):
            for k in range(9):
                lhs = q_int(j + k + 2) * q_int(i + k + 1)
                rhs = q_int(j + 1) * q_int(i) + q_int(i + j + k + 2) * q_int(k + 1)
                assert lhs == rhs


def test_markov_closure():
    # closure of f_n is (-1)^n [n+1]
    for n in range(1, 7):
        v = tl_close(jones_wenzl(n))
        assert v == q_ratio([n + 1]) * RationalQ.from_int((-1) ** n)
    assert tl_close(tl_e(2, 1)) == RationalQ.from_laurent(-q_int(2))
