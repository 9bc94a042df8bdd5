import itertools
import math
import random

import pytest

from modcat.chardata import (char_value, quantum_dim, vanishing_criterion,
                             weight_multiplicities, weyl_denominator_value,
                             weyl_dimension)
from modcat.lie import build_root_system, form, wadd, wscale
from modcat.numeric import CycNum
from modcat.weyl import enumerate_alcove, fold_to_alcove, star

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
B2 = build_root_system("B", 2)
G2 = build_root_system("G", 2)


def test_trivial_module():
    table = weight_multiplicities(A1, (0,))
    assert table.mults == {(0,): 1}


def test_a1_three_dimensional():
    table = weight_multiplicities(A1, (2,))
    assert table.mults == {(2,): 1, (0,): 1, (-2,): 1}


def test_a2_adjoint():
    table = weight_multiplicities(A2, A2.highest_root)
    assert table.mults[(0, 0)] == 2
    root_weights = [w for w in table.mults if w != (0, 0)]
    assert len(root_weights) == 6
    assert all(table.mults[w] == 1 for w in root_weights)


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        weight_multiplicities(A2, (-1, 0))
    with pytest.raises(ValueError):
        quantum_dim(A2, 4, (-1, 0))


@pytest.mark.parametrize("rs,lam", [
    (A1, (4,)), (A2, (2, 1)), (B2, (1, 2)), (G2, (1, 1)),
])
def test_multiplicities_sum_to_weyl_dimension(rs, lam):
    table = weight_multiplicities(rs, lam)
    assert table.dimension == weyl_dimension(rs, lam)
    # W-invariance of the table
    for w, mult in table.mults.items():
        for i in range(rs.rank):
            img = tuple(w[k] - w[i] * rs.cartan[k][i] for k in range(rs.rank))
            assert table.mults.get(img) == mult
    assert table.mults[lam] == 1


def test_known_dimensions():
    assert weyl_dimension(A2, (1, 0)) == 3
    assert weyl_dimension(A2, (1, 1)) == 8
    assert weyl_dimension(B2, (0, 1)) == 4
    assert weyl_dimension(B2, (1 , 0)) == 5
    assert weyl_dimension(G2, (1, 0)) == 7
    assert weyl_dimension(G2, (0, 1)) == 14


def test_char_of_unit():
    for rs, kappa in [(A1, 3), (A2, 5), (G2, 5)]:
        for point in [rs.zero, wscale(2, rs.rho), wscale(-2, rs.rho)]:
            assert char_value(rs, kappa, rs.zero, point) == CycNum.one()


def test_char_examples():
    assert char_value(A1, 3, (1,), wscale(2, A1.rho)).as_fraction() == 1
    v = char_value(A1, 4, (1,), wscale(2, A1.rho))
    z8 = CycNum.root_of_unity(8, 1)
    assert v == z8 + z8.conjugate()


def test_char_ratio_matches_weight_sum():
    # both evaluation routes agree where both are defined
    for rs, kappa in [(A1, 4), (A2, 5), (B2, 4)]:
        alcove = enumerate_alcove(rs, kappa)
        for lam in alcove:
            table = weight_multiplicities(rs, lam)
            for mu in alcove:
                point = wscale(-2, wadd(mu, rs.rho))
                ratio = char_value(rs, kappa, lam, point)
                direct = CycNum.zero()
                for w, mult in sorted(table.mults.items()):
                    from modcat.numeric import epsilon_power
                    direct = direct + epsilon_power(
                        form(rs, w, point, "primed"), rs.lacing, kappa) * mult
                assert ratio == direct


def test_char_affine_invariance():
    # W-invariant functions cannot see the level-kappa affine action
    rng = random.Random(4)
    rs, kappa = A2, 5
    for _ in range(25):
        lam = tuple(rng.randrange(0, 3) for _ in range(2))
        mu = tuple(rng.randrange(-6, 7) for _ in range(2))
        folded = fold_to_alcove(rs, kappa, mu).representative
        p1 = wscale(-2, wadd(mu, rs.rho))
        p2 = wscale(-2, wadd(folded, rs.rho))
        assert char_value(rs, kappa, lam, p1) == char_value(rs, kappa, lam, p2)


def test_char_non_dominant_singular_point_rejected():
    with pytest.raises(ValueError):
        char_value(A1, 3, (-3,), (0,))


def test_quantum_dim_examples():
    assert quantum_dim(A1, 3, (0,)) == CycNum.one()
    assert quantum_dim(A1, 3, (1,)) == CycNum.one()
    assert quantum_dim(A1, 3, (2,)).is_zero()


def test_quantum_dim_real_and_star_invariant():
    for rs, kappa in [(A2, 5), (B2, 5), (G2, 6)]:
        for lam in enumerate_alcove(rs, kappa):
            d = quantum_dim(rs, kappa, lam)
            assert d.conjugate() == d
            assert d == quantum_dim(rs, kappa, star(rs, lam))
            z = d.to_complex()
            assert z.real > 0 and abs(z.imag) < 1e-12


def test_quantum_dim_sine_product():
    for rs, kappa in [(A1, 5), (A2, 6), (B2, 5), (G2, 6)]:
        for lam in enumerate_alcove(rs, kappa):
            got = quantum_dim(rs, kappa, lam).to_complex()
            want = 1.0
            shifted = wadd(lam, rs.rho)
            for alpha in rs.positive_roots:
                want *= (math.sin(math.pi * float(form(rs, alpha, shifted))
                                  / kappa)
                         / math.sin(math.pi * float(form(rs, alpha, rs.rho))
                                    / kappa))
            assert abs(got - want) < 1e-9


def test_quantum_dim_two_rho_points_agree():
    for rs, kappa in [(A2, 5), (G2, 5)]:
        for lam in enumerate_alcove(rs, kappa):
            assert (char_value(rs, kappa, lam, wscale(2, rs.rho))
                    == char_value(rs, kappa, lam, wscale(-2, rs.rho)))


def test_weyl_denominator_values():
    d = weyl_denominator_value(A1, 3, wscale(-2, A1.rho))
    z6 = CycNum.root_of_unity(6, 1)
    assert d == z6.conjugate() - z6
    assert abs(d.to_complex() - (-1j * math.sqrt(3))) < 1e-12
    assert weyl_denominator_value(A2, 4, A2.zero).is_zero()
    d = weyl_denominator_value(A2, 4, wscale(-2, A2.rho))
    want = ((-2j * math.sin(math.pi / 4)) ** 2
            * (-2j * math.sin(2 * math.pi / 4)))
    assert abs(d.to_complex() - want) < 1e-12


def test_vanishing_criterion_examples():
    for lam in enumerate_alcove(A1, 3):
        assert not vanishing_criterion(A1, 3, lam)
    assert vanishing_criterion(A1, 3, (2,))   # affine wall
    assert vanishing_criterion(A1, 3, (5,))


@pytest.mark.parametrize("rs,kappa", [(A1, 3), (A1, 6), (A2, 4), (A2, 6),
                                      (B2, 4), (G2, 5)])
def test_vanishing_criterion_matches_dimension(rs, kappa):
    for lam in itertools.product(range(4), repeat=rs.rank):
        assert (vanishing_criterion(rs, kappa, lam)
                == quantum_dim(rs, kappa, lam).is_zero())
