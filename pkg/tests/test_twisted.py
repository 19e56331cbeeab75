import pytest

import invatoms.coxeter as cx
import invatoms.twisted as tw


def _filter_route(system, twist=None):
    # twisted involutions by the defining equation instead of the BFS
    return {w for w in system.elements()
            if system.inverse(w) == tw.star(system, w, twist)}


def test_twisted_involution_counts_by_two_routes():
    for name, twist, count in [("A2", None, 4), ("A3", None, 10),
                               ("A3", (3, 2, 1), 10), ("B3", None, 20)]:
        system = cx.build_system(name)
        bfs = set(tw.enumerate_twisted(system, twist))
        assert bfs == _filter_route(system, twist)
        assert len(bfs) == count


def test_conjugation_step_and_fold_step():
    system = cx.build_system("A3")
    for twist in (None, (3, 2, 1)):
        for x in tw.enumerate_twisted(system, twist):
            for s in range(1, 4):
                up = tw.rtimes(system, x, s, twist)
                folded = tw.dact(system, x, s, twist)
                assert tw.is_twisted_involution(system, up, twist)
                if system.length(up) > system.length(x):
                    assert folded == up
                else:
                    assert folded == x


def test_fold_routes_agree_on_every_pair():
    system = cx.build_system("B2")
    for twist in (None, (2, 1)):
        for x in tw.enumerate_twisted(system, twist):
            for w in system.elements():
                byword = tw.dact_word(system, x, system.reduced_word(w), twist)
                assert byword == tw.dact_element(system, x, w, twist)
                assert byword == tw.dact_element_via_demazure(system, x, w, twist)


def test_hat_length_equals_atom_length():
    for name in ("A3", "B3"):
        system = cx.build_system(name)
        for y in tw.enumerate_twisted(system):
            ats = tw.atoms(system, y)
            assert len({system.length(w) for w in ats}) == 1
            assert system.length(ats[0]) == tw.hat_length(system, y)


def test_hat_length_table_route_matches_recursive_route():
    system = cx.build_system("A3")
    twist = (3, 2, 1)
    for x in tw.enumerate_twisted(system, twist):
        assert tw.hat_length(system, x, twist, table=True) == \
            tw.hat_length(system, x, twist, table=False)


def test_weak_order_reachability_equals_nonempty_hecke_set():
    system = cx.build_system("A3")
    for twist in (None, (3, 2, 1)):
        invs = tw.enumerate_twisted(system, twist)
        for x in invs:
            for y in invs:
                reachable = len(tw.hecke_atoms(system, y, x, twist)) > 0
                assert tw.weak_leq_T(system, x, y, twist) == reachable


def test_hecke_fibers_partition_the_group():
    for name in ("A3", "B3"):
        system = cx.build_system(name)
        table = tw.hecke_table(system, system.identity)
        assert len(table) == system.order()
        images = set(table.values())
        assert images == set(tw.enumerate_twisted(system))
        total = sum(len(tw.hecke_atoms(system, y)) for y in images)
        assert total == system.order()


def test_transforming_words_are_the_atoms_reduced_words():
    system = cx.build_system("A3")
    for twist in (None, (3, 2, 1)):
        for y in tw.enumerate_twisted(system, twist):
            words = set(tw.involution_words(system, y, twist=twist))
            pooled = set()
            for w in tw.atoms(system, y, twist=twist):
                pooled |= set(system.reduced_words(w))
            assert words == pooled


# the running S5 example: x = [3,5,1,4,2] = (1,3)(2,5), y = [4,5,3,1,2] = (1,4)(2,5)
def _s5_pair():
    system = cx.build_system("A4")
    x = cx.permutation_to_element(system, (3, 5, 1, 4, 2))
    y = cx.permutation_to_element(system, (4, 5, 3, 1, 2))
    return system, x, y


def test_running_example_atoms_from_x_to_itself():
    system, x, _ = _s5_pair()
    assert tw.atoms(system, x, x) == (system.identity,)
    hecke = tw.hecke_atoms(system, x, x)
    expected = {system.identity, system.generator(2), system.generator(4),
                system.product((2, 4))}
    assert set(hecke) == expected


def test_running_example_atoms_from_x_to_y():
    system, x, y = _s5_pair()
    ats = tw.atoms(system, y, x)
    assert ats == (system.generator(3),)
    assert cx.element_to_permutation(system, ats[0]) == (1, 2, 4, 3, 5)
    words = [list(system.reduced_word(w)) for w in tw.hecke_atoms(system, y, x)]
    assert words == [[3], [2, 3], [3, 2], [4, 3],
                     [2, 3, 2], [2, 4, 3], [4, 3, 2], [2, 4, 3, 2]]
    assert tw.involution_words(system, y, x) == ((3,),)


def test_minimal_length_conjecture_checker():
    for name, twist, pairs in [("A3", None, 41), ("A3", (3, 2, 1), 41),
                               ("B3", None, 126)]:
        report = tw.check_conjecture(cx.build_system(name), twist)
        assert report["pairs_checked"] == pairs
        assert report["failures"] == []


def test_conjecture_checker_restricted_to_some_targets():
    system = cx.build_system("A3")
    full = tw.check_conjecture(system)
    invs = tw.enumerate_twisted(system)
    parts = [tw.check_conjecture(system, ys=invs[i::3]) for i in range(3)]
    assert sum(p["pairs_checked"] for p in parts) == full["pairs_checked"]
    assert all(p["failures"] == [] for p in parts)


def test_bruhat_descriptions_of_hecke_sets_and_atoms():
    for name, twist in [("A4", None), ("B3", None), ("A3", (3, 2, 1))]:
        report = tw.check_bruhat_descriptions(cx.build_system(name), twist)
        assert report["failures"] == []


def test_only_two_elements_conjugate_the_twist_in_s4():
    system = cx.build_system("A3")
    good = []
    for v0 in system.elements():
        try:
            tw.dual_twist(system, v0)
        except ValueError:
            continue
        good.append(v0)
    assert set(good) == {system.identity, system.longest_element()}


def test_duality_translation():
    system = cx.build_system("A3")
    for twist in (None, (3, 2, 1)):
        report = tw.check_duality(system, system.longest_element(), twist)
        assert report["pairs_checked"] == 123
        assert report["failures"] == []
    b3 = cx.build_system("B3")
    assert tw.check_duality(b3, b3.longest_element())["failures"] == []


def test_central_longest_element_closure():
    for name in ("B2", "B3"):
        system = cx.build_system(name)
        report = tw.check_central_closure(system, system.longest_element())
        assert report["failures"] == []


def test_central_closure_rejects_non_central_elements():
    system = cx.build_system("A2")
    with pytest.raises(ValueError, match="central longest element"):
        tw.check_central_closure(system, system.longest_element())


def test_invalid_twist_is_rejected():
    system = cx.build_system("A3")
    with pytest.raises(ValueError, match="invalid twist"):
        tw.enumerate_twisted(system, (2, 1, 3))
