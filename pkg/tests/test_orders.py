import itertools
import json

import pytest

import invatoms.coxeter as cx
import invatoms.orders as od
import invatoms.typea as ta


def test_three_letter_rewriting_class():
    # [c,a,b] ~ [b,c,a] ~ [c,b,a] with a <= b <= c
    assert od.chinese_class((3, 1, 2)) == {(3, 1, 2), (2, 3, 1), (3, 2, 1)}
    assert od.chinese_class((1, 2, 3)) == {(1, 2, 3)}
    assert od.chinese_class((2, 1)) == {(2, 1)}


def test_rewriting_class_of_the_running_example():
    cls = od.chinese_class((3, 5, 1, 4, 2))
    assert len(cls) == 35
    assert min(cls) == (3, 4, 2, 5, 1)
    for u in cls:
        assert set(od.chinese_neighbors(u)) <= cls


def test_class_partition_matches_hecke_fibers():
    for n, classes in [(3, 4), (4, 10), (5, 26)]:
        report = od.verify_chinese(n)
        assert report["failures"] == []
        assert report["classes"] == classes
        assert report["involutions"] == classes


def test_fpf_rewriting_class_basics():
    assert od.fpf_class((2, 1, 4, 3)) == {(1, 2, 3, 4), (1, 2, 4, 3),
                                          (2, 1, 3, 4), (2, 1, 4, 3)}
    with pytest.raises(ValueError, match="odd length"):
        od.fpf_class((2, 1, 3))


def test_fpf_class_partition_matches_hecke_fibers():
    for n2, classes in [(2, 1), (4, 3), (6, 15)]:
        report = od.verify_fpf(n2)
        assert report["failures"] == []
        assert report["classes"] == classes


def test_fpf_class_of_size_fifty_six():
    assert len(od.fpf_class((1, 5, 4, 6, 2, 3))) == 56


def test_sweep_caps():
    with pytest.raises(ValueError, match="too large"):
        od.verify_chinese(od.CHINESE_SWEEP_CAP + 1)
    with pytest.raises(ValueError, match="too large"):
        od.verify_fpf(od.FPF_SWEEP_CAP + 2)


def test_extremal_atoms():
    x = (4, 3, 2, 1, 5, 6)  # (1,4)(2,3) with fixed points 5, 6
    assert od.hat0(x) == (4, 1, 3, 2, 5, 6)
    assert od.hat1(x) == (3, 2, 4, 1, 5, 6)
    w0 = (6, 5, 4, 3, 2, 1)
    assert od.hat0(w0) == (6, 1, 5, 2, 4, 3)
    assert od.hat1(w0) == (4, 3, 5, 2, 6, 1)
    with pytest.raises(ValueError, match="involution"):
        od.hat0((2, 3, 1))


def test_fpf_extremal_atoms_match_the_shifted_plain_ones():
    x = (8, 3, 2, 6, 7, 4, 5, 1)  # (1,8)(2,3)(4,6)(5,7)
    assert od.hat0_fpf(x) == (1, 8, 2, 3, 4, 6, 5, 7)
    assert od.hat1_fpf(x) == (2, 3, 4, 6, 5, 7, 1, 8)
    for n2 in (4, 6):
        base = ta.fpf_base(n2)
        for y in ta.enumerate_involutions(n2, fpf=True):
            assert od.hat0_fpf(y) == ta.compose(od.hat0(y), base)
            assert od.hat1_fpf(y) == ta.compose(od.hat1(y), base)
    with pytest.raises(ValueError, match="fixed-point-free"):
        od.hat0_fpf((1, 2, 4, 3))


def test_extremal_atoms_really_are_atoms_and_extremes():
    for n in (3, 4, 5):
        for x in ta.enumerate_involutions(n):
            inverted = {ta.inverse_perm(w) for w in ta.atoms_perm(x)}
            assert od.hat0(x) in inverted
            assert od.hat1(x) in inverted
            for u in inverted:
                assert od.prec_A_leq(od.hat0(x), u)
                assert od.prec_A_leq(u, od.hat1(x))


def test_atom_class_is_interval_between_extremes():
    # the inverted atoms are exactly the up-set of the bottom atom, and
    # exactly the down-set of the top one, within the whole group
    for n in (3, 4):
        perms = list(itertools.permutations(range(1, n + 1)))
        for x in ta.enumerate_involutions(n):
            inverted = {ta.inverse_perm(w) for w in ta.atoms_perm(x)}
            ups = {u for u in perms if od.prec_A_leq(od.hat0(x), u)}
            downs = {u for u in perms if od.prec_A_leq(u, od.hat1(x))}
            assert ups == inverted
            assert downs == inverted


def test_321_avoidance():
    assert od.is_321_avoiding((3, 1, 2))
    assert not od.is_321_avoiding((3, 2, 1))
    assert od.is_321_avoiding((1, 2, 3))
    for w in itertools.permutations(range(1, 7)):
        brute = any(w[i] > w[j] > w[k]
                    for i in range(6) for j in range(i + 1, 6)
                    for k in range(j + 1, 6))
        assert od.is_321_avoiding(w) == (not brute)


def test_singleton_atom_sets_are_the_321_avoiding_involutions():
    for n in (3, 4, 5):
        for x in ta.enumerate_involutions(n):
            assert (len(ta.atoms_perm(x)) == 1) == od.is_321_avoiding(x)


def test_inversion_statistic_grades_the_poset():
    for n in (4, 5):
        for x in ta.enumerate_involutions(n):
            poset = od.atom_poset(x)
            for u in poset.elements:
                assert poset.ranks[u] == len(od.a_inversion_set(u, x))
            for u, v in poset.covers:
                assert poset.ranks[v] == poset.ranks[u] + 1
            assert poset.bottom == od.hat0(x)
            assert poset.top == od.hat1(x)
            rmin = min(poset.ranks.values())
            assert poset.ranks[poset.bottom] == rmin


def test_bottom_rank_need_not_vanish():
    # (1,2)(3,4) has bottom atom [2,1,4,3] with one ordered pair inverted
    poset = od.atom_poset((2, 1, 4, 3))
    assert poset.ranks[poset.bottom] == 1


def test_inversion_set_rejects_non_atoms():
    with pytest.raises(ValueError, match="u not an atom inverse"):
        od.a_inversion_set((1, 2, 3, 4), (2, 1, 4, 3))
    with pytest.raises(ValueError, match="u not an atom inverse"):
        od.fpf_embedding((1, 2, 3, 4), (3, 4, 1, 2))


def test_fpf_posets_are_graded_lattices_embedding_in_weak_order():
    system = cx.build_system("A2")
    for x in ta.enumerate_involutions(6, fpf=True):
        poset = od.atom_poset_fpf(x)
        assert od.poset_is_lattice(poset)
        images = {}
        for u in poset.elements:
            phi = od.fpf_embedding(u, x)
            assert poset.ranks[u] == ta.perm_length(phi)
            images[u] = phi
        # cover edges map to weak order covers
        for u, v in poset.covers:
            a = cx.permutation_to_element(system, images[u])
            b = cx.permutation_to_element(system, images[v])
            assert cx.weak_leq_right(system, a, b)
        # the image is the full lower weak-order interval under the top
        top = cx.permutation_to_element(system, images[poset.top])
        interval = {w for w in system.elements() if cx.weak_leq_right(system, w, top)}
        assert {cx.permutation_to_element(system, p) for p in images.values()} == interval


def test_every_lower_weak_interval_appears_as_an_fpf_atom_order():
    # the interval below w in S3 matches the atom order of the matching
    # that pairs w(i) with n + i
    w = (3, 1, 2)
    x = (5, 6, 4, 3, 1, 2)  # the matching (3,4)(1,5)(2,6)
    poset = od.atom_poset_fpf(x)
    system = cx.build_system("A2")
    wel = cx.permutation_to_element(system, w)
    interval = {v for v in system.elements() if cx.weak_leq_right(system, v, wel)}
    images = {cx.permutation_to_element(system, od.fpf_embedding(u, x))
              for u in poset.elements}
    assert images == interval
    assert od.fpf_embedding(poset.top, x) == w


FIG1_NODES = [
    (6, 1, 5, 2, 4, 3), (5, 6, 1, 2, 4, 3), (5, 2, 6, 1, 4, 3),
    (5, 2, 4, 6, 1, 3), (5, 2, 4, 3, 6, 1), (4, 5, 2, 3, 6, 1),
    (4, 3, 5, 2, 6, 1), (4, 3, 5, 6, 1, 2), (4, 3, 6, 1, 5, 2),
    (4, 6, 1, 3, 5, 2), (6, 1, 4, 3, 5, 2), (6, 1, 4, 5, 2, 3),
    (4, 5, 2, 6, 1, 3), (4, 6, 1, 5, 2, 3), (4, 5, 6, 1, 2, 3),
]

FIG1_COVERS = [
    ((6, 1, 5, 2, 4, 3), (5, 6, 1, 2, 4, 3)),
    ((5, 6, 1, 2, 4, 3), (5, 2, 6, 1, 4, 3)),
    ((5, 2, 6, 1, 4, 3), (5, 2, 4, 6, 1, 3)),
    ((5, 2, 4, 6, 1, 3), (5, 2, 4, 3, 6, 1)),
    ((5, 2, 4, 3, 6, 1), (4, 5, 2, 3, 6, 1)),
    ((4, 5, 2, 3, 6, 1), (4, 3, 5, 2, 6, 1)),
    ((4, 3, 5, 6, 1, 2), (4, 3, 5, 2, 6, 1)),
    ((4, 3, 6, 1, 5, 2), (4, 3, 5, 6, 1, 2)),
    ((4, 6, 1, 3, 5, 2), (4, 3, 6, 1, 5, 2)),
    ((6, 1, 4, 3, 5, 2), (4, 6, 1, 3, 5, 2)),
    ((6, 1, 4, 5, 2, 3), (6, 1, 4, 3, 5, 2)),
    ((6, 1, 5, 2, 4, 3), (6, 1, 4, 5, 2, 3)),
    ((5, 2, 4, 6, 1, 3), (4, 5, 2, 6, 1, 3)),
    ((4, 6, 1, 5, 2, 3), (4, 6, 1, 3, 5, 2)),
    ((6, 1, 4, 5, 2, 3), (4, 6, 1, 5, 2, 3)),
    ((4, 6, 1, 5, 2, 3), (4, 5, 6, 1, 2, 3)),
    ((4, 5, 6, 1, 2, 3), (4, 5, 2, 6, 1, 3)),
    ((4, 5, 2, 6, 1, 3), (4, 5, 2, 3, 6, 1)),
]


def test_atom_order_of_the_reversal_in_s6():
    poset = od.atom_poset((6, 5, 4, 3, 2, 1))
    assert sorted(poset.elements) == sorted(FIG1_NODES)
    assert sorted(poset.covers) == sorted(FIG1_COVERS)
    assert poset.bottom == (6, 1, 5, 2, 4, 3)
    assert poset.top == (4, 3, 5, 2, 6, 1)


FIG2_NODES = [
    (1, 8, 2, 6, 3, 10, 4, 7, 5, 9),
    (2, 6, 1, 8, 3, 10, 4, 7, 5, 9),
    (1, 8, 2, 6, 4, 7, 3, 10, 5, 9),
    (2, 6, 1, 8, 4, 7, 3, 10, 5, 9),
    (1, 8, 2, 6, 4, 7, 5, 9, 3, 10),
    (2, 6, 4, 7, 1, 8, 3, 10, 5, 9),
    (2, 6, 1, 8, 4, 7, 5, 9, 3, 10),
    (2, 6, 4, 7, 1, 8, 5, 9, 3, 10),
]

FIG2_COVERS = [
    ((1, 8, 2, 6, 3, 10, 4, 7, 5, 9), (1, 8, 2, 6, 4, 7, 3, 10, 5, 9)),
    ((1, 8, 2, 6, 4, 7, 3, 10, 5, 9), (1, 8, 2, 6, 4, 7, 5, 9, 3, 10)),
    ((1, 8, 2, 6, 4, 7, 5, 9, 3, 10), (2, 6, 1, 8, 4, 7, 5, 9, 3, 10)),
    ((2, 6, 1, 8, 4, 7, 5, 9, 3, 10), (2, 6, 4, 7, 1, 8, 5, 9, 3, 10)),
    ((2, 6, 4, 7, 1, 8, 3, 10, 5, 9), (2, 6, 4, 7, 1, 8, 5, 9, 3, 10)),
    ((2, 6, 1, 8, 4, 7, 3, 10, 5, 9), (2, 6, 4, 7, 1, 8, 3, 10, 5, 9)),
    ((2, 6, 1, 8, 3, 10, 4, 7, 5, 9), (2, 6, 1, 8, 4, 7, 3, 10, 5, 9)),
    ((1, 8, 2, 6, 3, 10, 4, 7, 5, 9), (2, 6, 1, 8, 3, 10, 4, 7, 5, 9)),
    ((1, 8, 2, 6, 4, 7, 3, 10, 5, 9), (2, 6, 1, 8, 4, 7, 3, 10, 5, 9)),
    ((2, 6, 1, 8, 4, 7, 3, 10, 5, 9), (2, 6, 1, 8, 4, 7, 5, 9, 3, 10)),
]


def test_fpf_atom_order_of_the_ten_letter_example():
    x = (8, 6, 10, 7, 9, 2, 4, 1, 5, 3)  # (1,8)(2,6)(3,10)(4,7)(5,9)
    poset = od.atom_poset_fpf(x)
    assert sorted(poset.elements) == sorted(FIG2_NODES)
    assert sorted(poset.covers) == sorted(FIG2_COVERS)
    assert poset.bottom == (1, 8, 2, 6, 3, 10, 4, 7, 5, 9)
    assert poset.top == (2, 6, 4, 7, 1, 8, 5, 9, 3, 10)


def test_poset_rejects_non_involutions():
    with pytest.raises(ValueError, match="involution"):
        od.atom_poset((2, 3, 1))
    with pytest.raises(ValueError, match="fixed-point-free"):
        od.atom_poset_fpf((1, 2, 4, 3))


def test_poset_exports():
    poset = od.atom_poset((4, 3, 2, 1))
    blob = od.poset_to_json(poset)
    json.dumps(blob)
    assert blob["bottom"] == list(poset.bottom)
    assert blob["top"] == list(poset.top)
    assert len(blob["ranks"]) == len(blob["elements"])
    dot = od.poset_to_dot(poset)
    assert dot.startswith("digraph atoms {")
    assert "rankdir=BT;" in dot
    assert '"4132"' in dot
    assert dot.count("->") == len(poset.covers)


def test_poset_leq_matches_cover_reachability():
    poset = od.atom_poset((6, 5, 4, 3, 2, 1))
    for u in poset.elements:
        assert poset.leq(poset.bottom, u)
        assert poset.leq(u, poset.top)
    assert not poset.leq(poset.top, poset.bottom)


def test_relative_hecke_inverses_scatter_across_classes():
    # the absolute Hecke set of [3,5,1,4,2] inverts onto one whole class,
    # but the relative Hecke atoms from [3,5,1,4,2] to [4,5,3,1,2] do not
    y = (3, 5, 1, 4, 2)
    absolute = {ta.inverse_perm(w) for w in ta.hecke_atoms_perm(y)}
    assert len(absolute) == 3
    assert od.chinese_class(min(absolute)) == absolute

    x = (3, 5, 1, 4, 2)
    target = (4, 5, 3, 1, 2)
    relative = [ta.inverse_perm(w) for w in ta.hecke_atoms_perm(target, x)]
    by_class = {}
    for u in relative:
        by_class.setdefault(min(od.chinese_class(u)), []).append(u)
    counts = {key: len(v) for key, v in by_class.items()}
    assert counts == {
        (1, 2, 4, 3, 5): 1,
        (1, 2, 4, 5, 3): 1,
        (1, 3, 4, 2, 5): 3,
        (1, 3, 4, 5, 2): 1,
        (1, 4, 2, 5, 3): 1,
        (1, 4, 3, 5, 2): 1,
    }
