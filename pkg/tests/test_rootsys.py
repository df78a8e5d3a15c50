"""Root system construction, Weyl dimension and weight multiplicities."""

import random
from fractions import Fraction

import pytest

from hwbranch import rootsys as rs

ALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3),
             ("B", 4), ("C", 2), ("C", 3), ("C", 4), ("D", 3), ("D", 4),
             ("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)]

POSITIVE_COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n,
                   "C": lambda n: n * n, "D": lambda n: n * (n - 1),
                   "E6": lambda n: 36, "E7": lambda n: 63, "E8": lambda n: 120,
                   "F4": lambda n: 24, "G2": lambda n: 6}


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_cartan_matrix_invariants(family, rank):
    sys = rs.build_root_system(family, rank)
    for i in range(rank):
        assert sys.cartan_matrix[i][i] == 2
        for j in range(rank):
            if i != j:
                assert sys.cartan_matrix[i][j] in (0, -1, -2, -3)
    # fundamental weights pair with simple coroots by delta
    for i, w in enumerate(sys.fundamental_weights):
        for j in range(rank):
            assert sys.pairing(w, j) == int(i == j)


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_positive_root_count_and_integrality(family, rank):
    sys = rs.build_root_system(family, rank)
    assert len(sys.positive_roots) == POSITIVE_COUNTS[family](rank)
    for r in sys.positive_roots:
        coeffs = sys.simple_coefficients(r.to_epsilon().coords)
        assert coeffs is not None
        assert all(c.denominator == 1 and c >= 0 for c in coeffs)


def test_invalid_types_rejected():
    for bad in [("A", 0), ("B", 1), ("D", 2), ("E6", 5), ("H", 2), ("C", 0)]:
        with pytest.raises(rs.InvalidTypeError):
            rs.build_root_system(*bad)
    with pytest.raises(rs.InvalidTypeError):
        rs.build_root_system("A", None)


def test_highest_root_examples():
    a2 = rs.build_root_system("A", 2)
    assert rs.highest_root(a2) == a2.simple_roots[0] + a2.simple_roots[1]
    assert rs.highest_root_coefficients(rs.build_root_system("A", 1)) == (1,)
    # type B: only the first node has coefficient one
    assert rs.highest_root_coefficients(rs.build_root_system("B", 2)) == (1, 2)
    # type C: alpha_n alone has coefficient one
    for n in range(2, 6):
        coeffs = rs.highest_root_coefficients(rs.build_root_system("C", n))
        assert coeffs == tuple([2] * (n - 1) + [1])
    # brute-force maximum over the enumerated positive roots
    d4 = rs.build_root_system("D", 4)
    assert rs.highest_root_coefficients(d4) == (1, 2, 1, 1)
    by_height = max(d4.positive_roots, key=d4.height)
    assert by_height == rs.highest_root(d4)


def test_highest_root_dominates_all_positive_roots():
    for family, rank in ALL_TYPES:
        sys = rs.build_root_system(family, rank)
        top = rs.highest_root(sys)
        for r in sys.positive_roots:
            diff = (top - r).to_epsilon().coords
            coeffs = sys.simple_coefficients(diff)
            assert coeffs is not None and all(c >= 0 for c in coeffs)


def test_e7_has_63_roots_with_unit_last_coefficient():
    e7 = rs.build_root_system("E7", 7)
    assert len(e7.positive_roots) == 63
    assert rs.highest_root_coefficients(e7)[6] == 1


def test_weyl_dim_examples():
    a1 = rs.build_root_system("A", 1)
    for k in range(0, 12):
        assert rs.weyl_dim(a1, a1.fw(k)) == k + 1
    for family, rank in ALL_TYPES:
        sys = rs.build_root_system(family, rank)
        assert rs.weyl_dim(sys, sys.zero()) == 1
    a2 = rs.build_root_system("A", 2)
    assert rs.weyl_dim(a2, a2.fw(1, 1)) == 8


def test_weyl_dim_rejects_nondominant():
    a2 = rs.build_root_system("A", 2)
    with pytest.raises(rs.DominanceError):
        rs.weyl_dim(a2, a2.fw(-1, 0))
    with pytest.raises(rs.DominanceError):
        rs.freudenthal_char(a2, a2.fw(0, -2))
    with pytest.raises(rs.DominanceError):
        rs.weyl_dim(a2, a2.weight([Fraction(1, 7), 0, Fraction(-1, 7)]))


def test_freudenthal_small_examples():
    a1 = rs.build_root_system("A", 1)
    ch = rs.freudenthal_char(a1, a1.fw(2))
    assert ch.terms == {a1.fw(2): 1, a1.zero(): 1, a1.fw(-2): 1}
    a2 = rs.build_root_system("A", 2)
    ch = rs.freudenthal_char(a2, a2.fw(1, 0))
    assert len(ch) == 3 and all(m == 1 for _, m in ch)
    c2 = rs.build_root_system("C", 2)
    ch = rs.freudenthal_char(c2, c2.fw(0, 1))
    assert rs.weyl_dim(c2, c2.fw(0, 1)) == 5
    assert ch.total_multiplicity() == 5
    assert ch.multiplicity(c2.zero()) == 1
    # adjoint of A2: zero weight has multiplicity two
    ch = rs.freudenthal_char(a2, a2.fw(1, 1))
    assert ch.multiplicity(a2.zero()) == 2


SWEEP_TYPES = ([("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)]
               + [("C", n) for n in range(2, 9)] + [("D", n) for n in range(3, 9)]
               + [("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)])


@pytest.mark.parametrize("family,rank", SWEEP_TYPES)
def test_multiplicity_sum_equals_weyl_dim(family, rank):
    sys = rs.build_root_system(family, rank)
    rng = random.Random(f"mults-{sys.name}")
    # coordinates <= 3 throughout; large types draw zero-heavy samples
    # (capped coefficient total) so the sweep stays at desk scale
    max_total = None if sys.rank <= 4 else (4 if sys.rank <= 6 else 3)
    for _ in range(20):
        lam = rs.random_dominant_weight(sys, rng, max_coord=3, max_total=max_total)
        assert rs.module_dimension_by_mults(sys, lam) == rs.weyl_dim(sys, lam)


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("C", 3), ("D", 4),
                                         ("G2", 2)])
def test_full_character_matches_orbit_count(family, rank):
    sys = rs.build_root_system(family, rank)
    rng = random.Random(f"full-{sys.name}")
    for _ in range(5):
        lam = rs.random_dominant_weight(sys, rng, max_coord=2, max_total=3)
        ch = rs.freudenthal_char(sys, lam)
        assert ch.total_multiplicity() == rs.weyl_dim(sys, lam)


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("C", 2), ("D", 4)])
def test_characters_are_weyl_invariant(family, rank):
    sys = rs.build_root_system(family, rank)
    rng = random.Random(f"weyl-{sys.name}")
    for _ in range(4):
        lam = rs.random_dominant_weight(sys, rng, max_coord=2, max_total=3)
        ch = rs.freudenthal_char(sys, lam)
        for w, m in ch:
            for j in range(sys.rank):
                p = sys.pairing(w, j)
                refl = w - p * sys.simple_roots[j]
                assert ch.multiplicity(refl) == m


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_basis_conversion_round_trips(family, rank):
    sys = rs.build_root_system(family, rank)
    rng = random.Random(f"basis-{sys.name}")
    for _ in range(100):
        coeffs = [rng.randint(-4, 4) for _ in range(rank)]
        w = sys.fw(*coeffs)
        back = w.to_epsilon().to_fundamental()
        assert tuple(back.coords) == tuple(Fraction(c) for c in coeffs)
        assert back.to_epsilon() == w.to_epsilon()


def test_dominant_part_examples():
    a1 = rs.build_root_system("A", 1)
    assert rs.dominant_part(a1, a1.fw(-3)) == a1.fw(3)
    a2 = rs.build_root_system("A", 2)
    w = a2.fw(2, 1)
    assert rs.dominant_part(a2, w) == w
    c2 = rs.build_root_system("C", 2)
    w = c2.weight([-1, 1])  # image of e1 - e2 under a sign flip
    dom = rs.dominant_part(c2, w)
    assert rs.is_dominant(c2, dom)
    assert dom == c2.weight([1, 1]) or dom == c2.weight([1, -1]) or \
        dom == c2.weight([2, 0]) or dom.epskey() == (1, 1)
    # orbit membership: dominant part stays in the reflection orbit
    orbit = {c2.weight(list(v)) for v in [(1, -1), (-1, 1), (1, 1), (-1, -1)]}
    assert dom in orbit


def test_formal_character_ring_laws():
    a1 = rs.build_root_system("A", 1)
    rng = random.Random("ring")
    chars = [rs.freudenthal_char(a1, a1.fw(rng.randint(0, 3))) for _ in range(6)]
    for x, y in zip(chars, chars[1:]):
        assert x + y == y + x
        assert x * y == y * x
    a, b, c = chars[:3]
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    # no zero multiplicities are stored
    diff = a + rs.FormalCharacter({w: -m for w, m in a.terms.items()})
    assert len(diff) == 0


def test_weight_mean_normalization_for_type_a():
    a2 = rs.build_root_system("A", 2)
    assert a2.weight([2, 1, 1]) == a2.weight([1, 0, 0])
    assert a2.weight([2, 1, 1]) != a2.weight([1, 1, 0])


def test_concurrent_reads_after_warmup():
    import threading
    sys = rs.build_root_system("C", 3)
    lam = sys.fw(1, 0, 1)
    expected = rs.freudenthal_char(sys, lam)
    results = []

    def worker():
        results.append(rs.freudenthal_char(sys, lam))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == expected for r in results)
