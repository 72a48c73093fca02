"""Frozen examples for finite measure-preserving systems."""

from fractions import Fraction as F

import pytest

from taublab.errors import DomainError
from taublab.ergodic import (
    AtomicSystem,
    MeasurableSet,
    ergodic_halo_measure,
    eval_ergodic_max,
    exact_tauberian,
    index,
    jump_profile,
    make_cyclic,
    make_torus,
    one_sided_ergodic_max,
    one_sided_exact_tauberian,
    rokhlin_tower,
    transfer_witness,
    validate_system,
)
from taublab.lattice import LatticeSet, interval, lattice_set


class TestValidation:
    def test_swap_is_valid(self):
        system = AtomicSystem(masses=(F(1, 2), F(1, 2)), dim=1, generators=((1, 0),))
        assert validate_system(system).ok

    def test_mass_not_preserved(self):
        system = AtomicSystem(masses=(F(1, 3), F(2, 3)), dim=1, generators=((1, 0),))
        report = validate_system(system)
        assert not report.ok
        assert "mass" in report.problem

    def test_noncommuting_generators(self):
        system = AtomicSystem(
            masses=(F(1, 3),) * 3, dim=2, generators=((1, 0, 2), (0, 2, 1))
        )
        report = validate_system(system)
        assert not report.ok
        assert "commute" in report.problem

    def test_masses_must_sum_to_one(self):
        system = AtomicSystem(masses=(F(1, 2), F(1, 3)), dim=1, generators=((1, 0),))
        assert "sum" in validate_system(system).problem

    def test_not_a_permutation(self):
        system = AtomicSystem(masses=(F(1, 2), F(1, 2)), dim=1, generators=((0, 0),))
        assert "permutation" in validate_system(system).problem


class TestConstructors:
    def test_cyclic_is_valid(self):
        for n in (1, 2, 5, 12):
            assert validate_system(make_cyclic(n)).ok

    def test_cyclic_one_has_index_one(self):
        assert index(make_cyclic(1)).value == 1

    def test_torus(self):
        system = make_torus(3, 4)
        assert system.atom_count == 12
        assert system.dim == 2
        assert validate_system(system).ok

    def test_zero_sizes_rejected(self):
        with pytest.raises(DomainError):
            make_cyclic(0)
        with pytest.raises(DomainError):
            make_torus(3, 0)


class TestEval:
    def test_two_atom_rotation_off_set(self):
        # the window of radius one around the off-atom sees the set twice
        system = make_cyclic(2)
        E = MeasurableSet.of(system, [0])
        assert eval_ergodic_max(system, E, 1) == F(2, 3)

    def test_atom_inside_set(self):
        system = make_cyclic(5)
        E = MeasurableSet.of(system, [2])
        assert eval_ergodic_max(system, E, 2) == 1

    def test_three_cycle_matches_jump_threshold(self):
        system = make_cyclic(3)
        E = MeasurableSet.of(system, [1, 2])
        assert eval_ergodic_max(system, E, 0) == F(4, 5)

    def test_invalid_atom(self):
        system = make_cyclic(2)
        E = MeasurableSet.of(system, [0])
        with pytest.raises(DomainError):
            eval_ergodic_max(system, E, 5)

    def test_empty_set_rejected(self):
        system = make_cyclic(2)
        E = MeasurableSet.of(system, [])
        with pytest.raises(DomainError):
            eval_ergodic_max(system, E, 0)


class TestHaloMeasure:
    def test_two_atom_rotation_low_threshold(self):
        system = make_cyclic(2)
        E = MeasurableSet.of(system, [0])
        assert ergodic_halo_measure(system, E, F(1, 2)) == 1

    def test_two_atom_rotation_high_threshold(self):
        system = make_cyclic(2)
        E = MeasurableSet.of(system, [0])
        assert ergodic_halo_measure(system, E, F(3, 4)) == F(1, 2)

    def test_full_space(self):
        system = make_cyclic(4)
        E = MeasurableSet.of(system, range(4))
        for alpha in (F(1, 10), F(1, 2), F(9, 10)):
            assert ergodic_halo_measure(system, E, alpha) == 1


class TestTauberian:
    @pytest.mark.parametrize(
        "alpha,expected",
        [(F(1, 2), 2), (F(13, 20), 2), (F(2, 3), 1), (F(3, 4), 1)],
    )
    def test_two_atom_rotation_piecewise(self, alpha, expected):
        assert exact_tauberian(make_cyclic(2), alpha).value == expected

    def test_three_cycle_below_jump(self):
        est = exact_tauberian(make_cyclic(3), F(7, 10))
        assert est.value == F(3, 2)  # enumeration over the 7 nonempty subsets
        assert est.value >= F(3, 2)
        assert est.mode == "exact"

    def test_witness_is_lexicographically_least(self):
        est = exact_tauberian(make_cyclic(2), F(1, 2))
        assert est.witness == (0,)

    def test_alpha_domain(self):
        with pytest.raises(DomainError):
            exact_tauberian(make_cyclic(2), F(1))

    def test_heuristic_mode_above_limit(self):
        est = exact_tauberian(make_cyclic(24), F(1, 2), max_enum=10, budget=50)
        assert est.mode == "heuristic"
        # certified lower bound: a ratio some subset actually achieves
        E = MeasurableSet.of(make_cyclic(24), est.witness)
        measured = ergodic_halo_measure(make_cyclic(24), E, F(1, 2)) / E.measure
        assert measured == est.value


class TestIndex:
    @pytest.mark.parametrize("n", [1, 2, 3, 7, 12])
    def test_cyclic(self, n):
        result = index(make_cyclic(n))
        assert result.value == n
        assert not result.infinite
        assert result.certificate.is_disjoint()

    def test_identity(self):
        system = AtomicSystem(masses=(F(1, 4),) * 4, dim=1, generators=((0, 1, 2, 3),))
        assert index(system).value == 1

    def test_three_cycle_plus_fixed_point(self):
        system = AtomicSystem(
            masses=(F(1, 4),) * 4, dim=1, generators=((1, 2, 0, 3),)
        )
        result = index(system)
        assert result.value == 3
        assert result.cycle_lengths == (1, 3)

    def test_undefined_in_higher_dimension(self):
        with pytest.raises(DomainError):
            index(make_torus(2, 2))


class TestJumpProfile:
    def test_two_cycle_formula(self):
        rows = jump_profile(2, [F(1, 2), F(3, 4)])
        assert [r.value for r in rows] == [2, 1]

    def test_three_cycle(self):
        rows = jump_profile(3, [F(7, 10), F(9, 10)])
        assert rows[0].value >= F(3, 2)
        assert rows[1].value == 1

    def test_four_cycle_jump_bracketing(self):
        jump = F(6, 7)
        rows = jump_profile(4, [jump - F(1, 100), jump + F(1, 100)])
        assert rows[0].value >= F(4, 3)
        assert rows[1].value == 1

    def test_refuses_above_limit(self):
        with pytest.raises(DomainError):
            jump_profile(25, [F(1, 2)])


class TestTowers:
    def test_cyclic_tower(self):
        tower = rokhlin_tower(make_torus(8), (5,))
        assert tower.base.atoms == (0,)
        assert len(tower.translates()) == 5
        assert tower.is_disjoint()

    def test_planar_tower(self):
        tower = rokhlin_tower(make_torus(4, 4), (3, 3))
        assert len(tower.translates()) == 9
        assert tower.is_disjoint()

    def test_pigeonhole_obstruction(self):
        with pytest.raises(DomainError):
            rokhlin_tower(make_torus(2), (3,))


class TestTransfer:
    def test_pair_into_large_cycle(self):
        res = transfer_witness(make_cyclic(100), lattice_set([0, 1]), F(1, 2))
        assert res.discrete_ratio == 2
        assert res.ergodic_ratio == 2

    def test_trivial_case(self):
        res = transfer_witness(make_cyclic(10), lattice_set([0]), F(2, 3))
        assert res.ergodic_ratio == res.discrete_ratio == 1

    def test_block_sixty_into_4096(self):
        res = transfer_witness(make_cyclic(4096), interval(60), F(1, 2))
        assert res.discrete_ratio == F(89, 30)
        assert res.ergodic_ratio >= F(89, 30)

    def test_too_small_system(self):
        with pytest.raises(DomainError, match="too small"):
            transfer_witness(make_cyclic(3), lattice_set([0, 1]), F(1, 2))

    def test_witness_measure_matches_definition(self):
        system = make_cyclic(64)
        res = transfer_witness(system, lattice_set([0, 2, 3]), F(1, 2))
        assert res.witness.measure == F(3, 64)

    def test_planar_witness_into_torus(self):
        E = LatticeSet.from_points([(0, 0), (1, 1), (0, 1)])
        res = transfer_witness(make_torus(12, 12), E, F(1, 3))
        assert res.discrete_ratio == 8
        assert res.ergodic_ratio >= res.discrete_ratio
        assert res.ergodic_ratio == 8  # 12 periods leave no wrapped window above 1/3
        with pytest.raises(DomainError):
            transfer_witness(make_torus(3, 3), E, F(1, 3))


class TestOneSidedErgodic:
    def test_two_atom_rotation_forward(self):
        system = make_cyclic(2)
        E = MeasurableSet.of(system, [0])
        assert one_sided_ergodic_max(system, E, 1) == F(1, 2)

    @pytest.mark.parametrize("alpha,expected", [(F(1, 3), 2), (F(1, 2), 1), (F(3, 4), 1)])
    def test_two_atom_rotation_constant(self, alpha, expected):
        assert one_sided_exact_tauberian(make_cyclic(2), alpha).value == expected

    def test_large_cycle_heuristic_band(self):
        est = one_sided_exact_tauberian(make_cyclic(64), F(1, 2), budget=300)
        assert est.mode == "heuristic"
        assert F(19, 10) < est.value <= 2

    def test_dimension_restriction(self):
        system = make_torus(2, 2)
        with pytest.raises(DomainError):
            one_sided_exact_tauberian(system, F(1, 2))
