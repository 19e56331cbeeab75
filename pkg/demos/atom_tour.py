"""Tour of atoms and Hecke atoms for a pair of involutions in S5.

Starting from x = (1,3)(2,5) we fold generators onto x until we reach
y = (1,4)(2,5), and collect every group element whose word does that.
"""

import invatoms.coxeter as cx
import invatoms.twisted as tw
import invatoms.typea as ta


def main():
    system = cx.build_system("A4")
    x = cx.permutation_to_element(system, (3, 5, 1, 4, 2))
    y = cx.permutation_to_element(system, (4, 5, 3, 1, 2))

    print("x =", cx.element_to_permutation(system, x))
    print("y =", cx.element_to_permutation(system, y))
    print()

    print("elements fixing x under the fold:")
    for w in tw.hecke_atoms(system, x, x):
        print("  word", list(system.reduced_word(w)) or "(empty)")
    print()

    print("atoms carrying x to y:")
    for w in tw.atoms(system, y, x):
        print("  word", list(system.reduced_word(w)),
              "one-line", cx.element_to_permutation(system, w))
    print("hecke atoms carrying x to y:")
    for w in tw.hecke_atoms(system, y, x):
        print("  word", list(system.reduced_word(w)))
    print()

    # the same sets fall out of pure permutation arithmetic, no root system
    fast = ta.atoms_perm((4, 5, 3, 1, 2), (3, 5, 1, 4, 2))
    print("atoms via permutation statistics:", list(fast))

    # absolute atoms of the reversal grow as the double factorials
    print()
    print("atom counts for the reversal in S2..S8:")
    counts = [len(ta.atoms_perm(tuple(range(n, 0, -1)))) for n in range(2, 9)]
    print(" ", counts)


if __name__ == "__main__":
    main()
