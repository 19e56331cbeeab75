"""Draw the graded order on inverted atoms for two showcase involutions.

The first is the reversal in S6, whose fifteen inverted atoms form a
graded bounded poset. The second is a fixed-point-free matching on ten
letters whose eight inverted atoms form a graded lattice.
"""

import invatoms.orders as od


def show(poset):
    by_rank = {}
    for u in poset.elements:
        by_rank.setdefault(poset.ranks[u], []).append(u)
    for r in sorted(by_rank, reverse=True):
        row = "  ".join("".join(map(str, u)) if max(u) <= 9
                        else ",".join(map(str, u)) for u in by_rank[r])
        print("  rank %d: %s" % (r, row))
    print("  covers:", len(poset.covers))


def main():
    print("atom order of the reversal [6,5,4,3,2,1]:")
    poset = od.atom_poset((6, 5, 4, 3, 2, 1))
    show(poset)
    print()

    print("FPF atom order of (1,8)(2,6)(3,10)(4,7)(5,9):")
    fpf = od.atom_poset_fpf((8, 6, 10, 7, 9, 2, 4, 1, 5, 3))
    show(fpf)
    print("  is a lattice:", od.poset_is_lattice(fpf))
    print()

    print("DOT export of the second diagram:")
    print(od.poset_to_dot(fpf))


if __name__ == "__main__":
    main()
