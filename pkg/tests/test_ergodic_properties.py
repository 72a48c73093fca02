"""Invariants of the ergodic operators on randomly generated systems."""

import random
from fractions import Fraction as F

from taublab.ergodic import (
    AtomicSystem,
    MeasurableSet,
    ergodic_halo_measure,
    eval_ergodic_max,
    exact_tauberian,
    index,
    make_cyclic,
    make_torus,
    one_sided_exact_tauberian,
    rokhlin_tower,
)

from oracles import brute_ergodic_max, brute_tower_index


def random_dim1_system(rng, max_atoms=8, uniform=True):
    n = rng.randint(1, max_atoms)
    perm = list(range(n))
    rng.shuffle(perm)
    if uniform:
        masses = tuple([F(1, n)] * n)
    else:
        # commuting with itself and mass-preserving: constant on cycles
        weights = {}
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            w = rng.randint(1, 4)
            a = start
            while not seen[a]:
                seen[a] = True
                weights[a] = w
                a = perm[a]
        total = sum(weights.values())
        masses = tuple(F(weights[a], total) for a in range(n))
    return AtomicSystem(masses=masses, dim=1, generators=(tuple(perm),))


def random_subset(rng, system):
    n = system.atom_count
    return MeasurableSet.of(system, rng.sample(range(n), rng.randint(1, n)))


def test_halo_measure_invariant_under_the_action():
    rng = random.Random(13)
    for _ in range(25):
        system = random_dim1_system(rng, uniform=rng.random() < 0.5)
        E = random_subset(rng, system)
        alpha = F(rng.randint(1, 9), 10)
        moved = E.image()
        assert ergodic_halo_measure(system, E, alpha) == ergodic_halo_measure(
            system, moved, alpha
        )


def test_value_trichotomy_on_the_two_atom_rotation():
    system = make_cyclic(2)
    values = set()
    for mask in range(1, 4):
        E = MeasurableSet.of(system, [i for i in range(2) if mask >> i & 1])
        for atom in range(2):
            values.add(eval_ergodic_max(system, E, atom))
    assert values <= {F(0), F(2, 3), F(1)}


def test_tauberian_ceiling_dim1():
    """The ergodic constant never beats the discrete 1-D ceiling 2/alpha - 1."""
    rng = random.Random(29)
    for _ in range(12):
        system = random_dim1_system(rng, max_atoms=6, uniform=rng.random() < 0.5)
        alpha = F(rng.randint(1, 11), 12)
        assert exact_tauberian(system, alpha).value <= 2 / alpha - 1


def test_one_sided_ceiling_dim1():
    rng = random.Random(31)
    for _ in range(12):
        system = random_dim1_system(rng, max_atoms=6, uniform=rng.random() < 0.5)
        alpha = F(rng.randint(1, 11), 12)
        assert one_sided_exact_tauberian(system, alpha).value <= 1 / alpha


def test_index_one_collapse():
    """Identity systems (index 1) have constant 1 at every threshold."""
    rng = random.Random(37)
    for _ in range(8):
        n = rng.randint(1, 5)
        weights = [rng.randint(1, 4) for _ in range(n)]
        total = sum(weights)
        system = AtomicSystem(
            masses=tuple(F(w, total) for w in weights),
            dim=1,
            generators=(tuple(range(n)),),
        )
        assert index(system).value == 1
        for alpha in (F(1, 4), F(1, 2), F(3, 4)):
            assert exact_tauberian(system, alpha).value == 1


def test_window_bound_soundness():
    """Doubling the enumeration window beyond twice the atom count never
    changes the value on small systems; the default bound agrees too."""
    rng = random.Random(41)
    for _ in range(10):
        system = random_dim1_system(rng, max_atoms=8)
        E = random_subset(rng, system)
        atom = rng.randrange(system.atom_count)
        m = system.atom_count
        v_default = eval_ergodic_max(system, E, atom)
        v2 = eval_ergodic_max(system, E, atom, side_bound=2 * m)
        v4 = eval_ergodic_max(system, E, atom, side_bound=4 * m)
        assert v_default == v2 == v4
    torus = make_torus(2, 3)
    rng2 = random.Random(43)
    for _ in range(4):
        E = random_subset(rng2, torus)
        atom = rng2.randrange(6)
        v2 = eval_ergodic_max(torus, E, atom, side_bound=12)
        v4 = eval_ergodic_max(torus, E, atom, side_bound=24)
        assert eval_ergodic_max(torus, E, atom) == v2 == v4


def test_eval_matches_unstructured_brute_force():
    rng = random.Random(47)
    for _ in range(15):
        system = random_dim1_system(rng, max_atoms=6)
        E = random_subset(rng, system)
        atoms_in = set(E.atoms)
        atom = rng.randrange(system.atom_count)
        want = brute_ergodic_max(
            [list(system.generators[0])], atom, lambda a: a in atoms_in, 2 * system.atom_count
        )
        assert eval_ergodic_max(system, E, atom) == want


def test_index_matches_brute_tower_search():
    rng = random.Random(53)
    for _ in range(20):
        system = random_dim1_system(rng, max_atoms=7, uniform=False)
        perm = list(system.generators[0])
        assert index(system).value == brute_tower_index(perm)


def test_tower_translates_are_disjoint_whenever_built():
    for sizes, heights in [((6,), (4,)), ((3, 4), (2, 3)), ((5, 2), (5, 2))]:
        tower = rokhlin_tower(make_torus(*sizes), heights)
        assert tower.is_disjoint()
        count = 1
        for h in heights:
            count *= h
        assert len(tower.translates()) == count


def test_planar_halo_matches_pointwise_eval():
    """The volume-bounded planar level-set search equals the per-atom
    evaluator on small tori and on a system with two disjoint orbits."""
    rng = random.Random(17)
    systems = [make_torus(2, 2), make_torus(3, 2), make_torus(3, 4)]
    t22, t31 = make_torus(2, 2), make_torus(3, 1)
    g1 = tuple(list(t22.generators[0]) + [x + 4 for x in t31.generators[0]])
    g2 = tuple(list(t22.generators[1]) + [x + 4 for x in t31.generators[1]])
    systems.append(AtomicSystem(masses=(F(1, 7),) * 7, dim=2, generators=(g1, g2)))
    from taublab.ergodic import ergodic_halo

    for system in systems:
        total = system.atom_count
        for _ in range(5):
            E = MeasurableSet.of(system, rng.sample(range(total), rng.randint(1, max(1, total // 2))))
            alpha = F(rng.randint(1, 11), 12)
            got = set(ergodic_halo(system, E, alpha).atoms)
            want = {a for a in range(total) if eval_ergodic_max(system, E, a) > alpha}
            assert got == want
