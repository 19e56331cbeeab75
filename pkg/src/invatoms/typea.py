"""Involution combinatorics of the symmetric group on one-line tuples.

Permutations are tuples p of 1..n with p[i-1] the image of i, composed
functionally: compose(u, v) applies v first. Right multiplication by the
adjacent transposition s_i swaps positions i, i+1; left multiplication
swaps values i, i+1. This module is independent of the reflection
representation in coxeter.py so the two can cross-check each other.

The second half implements the colored involution calculus: partial
matchings of [2n] with vertices colored by 1..n, two vertices per color,
matched vertices sharing a color. These drive the pattern classification
of atoms of an involution in the symmetric group.
"""

from functools import lru_cache

COLOR_ORDER_CAP = 3


def identity_perm(n):
    return tuple(range(1, n + 1))


def compose(u, v):
    if len(u) != len(v):
        raise ValueError("permutations have different sizes")
    return tuple(u[j - 1] for j in v)


def inverse_perm(p):
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def perm_length(p):
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def is_permutation(p):
    return sorted(p) == list(range(1, len(p) + 1))


def right_descents_perm(p):
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def mult_right(p, i):
    """p times the transposition of i, i+1 (swaps positions i, i+1)."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def mult_left(p, i):
    """The transposition of i, i+1 times p (swaps values i, i+1)."""
    a, b = p.index(i), p.index(i + 1)
    q = list(p)
    q[a], q[b] = i + 1, i
    return tuple(q)


def reduced_word_perm(p):
    """Lexicographically smallest reduced word."""
    word = []
    p = list(p)
    while True:
        inv = [0] * len(p)
        for i, v in enumerate(p, 1):
            inv[v - 1] = i
        s = next((i for i in range(1, len(p)) if inv[i - 1] > inv[i]), None)
        if s is None:
            return tuple(word)
        word.append(s)
        a, b = inv[s - 1], inv[s]
        p[a - 1], p[b - 1] = s + 1, s


def perm_from_word(n, word):
    p = identity_perm(n)
    for i in word:
        p = mult_right(p, i)
    return p


def is_involution_perm(p):
    return all(p[v - 1] == i for i, v in enumerate(p, 1))


def cyc(y):
    """Cycles (a, y(a)) with a <= y(a), fixed points included, sorted."""
    return tuple((a, y[a - 1]) for a in range(1, len(y) + 1) if a <= y[a - 1])


def fix(y):
    return tuple(a for a in range(1, len(y) + 1) if y[a - 1] == a)


def gamma_set(y):
    """Cycles of y plus all strictly decreasing pairs of fixed points."""
    fixed = fix(y)
    extra = {(a, b) for a in fixed for b in fixed if b < a}
    return frozenset(cyc(y)) | extra


def rtimes_perm(x, i):
    """Conjugation step on involutions: s_i x s_i, or x s_i when they agree."""
    a, b = x[i - 1], x[i]
    if {a, b} == {i, i + 1}:
        return mult_right(x, i)
    return mult_left(mult_right(x, i), i)


def dact_perm(x, i):
    if x[i - 1] > x[i]:
        return x
    return rtimes_perm(x, i)


def dact_word_perm(x, word):
    for i in word:
        x = dact_perm(x, i)
    return x


def hat_perm(x):
    """Common length of the involution words of x: (inversions + 2-cycles)/2."""
    two = sum(1 for a, b in cyc(x) if a < b)
    return (perm_length(x) + two) // 2


def fpf_base(n):
    """The matching 2-cycle involution [2,1,4,3,...] of S_n (n even)."""
    if n % 2:
        raise ValueError("fixed-point-free involutions need even size")
    out = []
    for i in range(1, n, 2):
        out.extend((i + 1, i))
    return tuple(out)


def is_fpf_involution(p):
    return is_involution_perm(p) and all(p[i - 1] != i for i in range(1, len(p) + 1))


def enumerate_involutions(n, fpf=False):
    """All involutions of S_n (all fixed-point-free ones when fpf), by BFS."""
    start = fpf_base(n) if fpf else identity_perm(n)
    seen = {start}
    queue = [start]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for i in range(1, n):
            y = rtimes_perm(x, i)
            if fpf and {x[i - 1], x[i]} == {i, i + 1}:
                continue  # the toggle step leaves the fixed-point-free set
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return tuple(queue)


def _elements_by_length(n):
    """All of S_n in BFS order with, for each, a parent one letter shorter."""
    start = identity_perm(n)
    parent = {start: None}
    queue = [start]
    head = 0
    while head < len(queue):
        p = queue[head]
        head += 1
        for i in range(1, n):
            if p[i - 1] < p[i]:
                q = mult_right(p, i)
                if q not in parent:
                    parent[q] = (p, i)
                    queue.append(q)
    return queue, parent


def hecke_image_table(n, base=None):
    """base folded against every element of S_n, keyed by element."""
    if base is None:
        base = identity_perm(n)
    queue, parent = _elements_by_length(n)
    table = {}
    for p in queue:
        if parent[p] is None:
            table[p] = base
        else:
            q, i = parent[p]
            table[p] = dact_perm(table[q], i)
    return table


def hecke_atoms_perm(y, base=None):
    """All w in S_n with base folded against w equal to y, sorted."""
    table = hecke_image_table(len(y), base)
    out = [w for w, img in table.items() if img == y]
    return tuple(sorted(out, key=lambda w: (perm_length(w), w)))


def atoms_perm(y, base=None):
    """Minimal length Hecke atoms of y relative to base, via the descent
    recursion (no full-group enumeration), sorted."""
    n = len(y)
    if base is None:
        base = identity_perm(n)
    if not is_involution_perm(y) or not is_involution_perm(base):
        raise ValueError("atoms need involutions")
    memo = {}

    def rec(z):
        if z == base:
            return frozenset({identity_perm(n)})
        got = memo.get(z)
        if got is not None:
            return got
        acc = set()
        if perm_length(z) > perm_length(base):
            for i in range(1, n):
                if z[i - 1] > z[i]:
                    for v in rec(rtimes_perm(z, i)):
                        if v[i - 1] < v[i]:
                            acc.add(mult_right(v, i))
        memo[z] = frozenset(acc)
        return memo[z]

    return tuple(sorted(rec(y)))


def atoms_fpf_perm(y):
    return atoms_perm(y, fpf_base(len(y)))


# -- pattern classifiers ------------------------------------------------------


def _pair_image(w, pair):
    a, b = pair
    return (w[a - 1], w[b - 1])


def is_atom_absolute(w, y):
    """Membership of w in the atoms of y relative to the identity, by the
    cycle pattern test (no recursion)."""
    cycles = cyc(y)
    for a, b in cycles:
        wa, wb = w[a - 1], w[b - 1]
        if wb > wa:
            return False
        if any(wb < w[t - 1] < wa for t in range(a + 1, b)):
            return False
    for a, b in cycles:
        for a2, b2 in cycles:
            if a < a2 and b < b2:
                wa, wb = w[a - 1], w[b - 1]
                wa2, wb2 = w[a2 - 1], w[b2 - 1]
                if not (wb <= wa < wb2 <= wa2):
                    return False
    return True


def is_atom_longest(u):
    """Membership of u in the atoms of the order-reversing involution."""
    n = len(u)
    for i in range(1, n + 1):
        r = n + 1 - i
        if i < r and not u[r - 1] < u[i - 1]:
            return False
        for j in range(i + 1, r):
            if not (u[j - 1] < u[r - 1] or u[i - 1] < u[j - 1]):
                return False
    return True


def is_atom_fpf(w, y):
    """Membership of w in the atoms of fixed-point-free y relative to the
    matching base, by the cycle pattern test."""
    if not is_fpf_involution(y):
        raise ValueError("y is not fixed-point-free")
    cycles = [(a, b) for a, b in cyc(y) if a < b]
    for a, b in cycles:
        wa, wb = w[a - 1], w[b - 1]
        if wa % 2 == 0 or wb != wa + 1:
            return False
    for a, b in cycles:
        for a2, b2 in cycles:
            if a < a2 and b < b2:
                if not (w[a - 1] < w[b - 1] < w[a2 - 1] < w[b2 - 1]):
                    return False
    return True


def is_atom_general(w, x, y):
    """Membership of w in the atoms of y relative to x, by the numeric
    inequalities on pairs of cycles."""
    cycles = cyc(y)
    fixed_x = set(fix(x))
    cyc_x = set(cyc(x))
    for a, b in cycles:
        wa, wb = w[a - 1], w[b - 1]
        if wa < wb:
            if (wa, wb) not in cyc_x:
                return False
        elif not (wa in fixed_x and wb in fixed_x):
            return False
    k = len(cycles)
    for p in range(k):
        for q in range(k):
            if p == q:
                continue
            a, b = cycles[p]
            a2, b2 = cycles[q]
            if a > a2:
                continue  # the swapped pair is checked separately
            wa, wb = w[a - 1], w[b - 1]
            wa2, wb2 = w[a2 - 1], w[b2 - 1]
            if b < a2:
                if not (wa < wa2 and wa < wb2 and wb < wb2 and wb < wa2):
                    return False
            elif a2 < b < b2:
                if not (wa < wa2 and wa < wb2 and wb < wb2):
                    return False
            elif a2 < b2 < b:
                if wb < wa2 < wa or wb < wb2 < wa:
                    return False
                if wa2 < wa < wb < wb2 or (wa2 < wb <= wa < wb2):
                    return False
            elif a2 == b2 and a < a2 < b:
                if wb < wa2 < wa:
                    return False
    return True


# -- colored involutions ------------------------------------------------------


def std(seq):
    """Standardization: replace letters by 1..len, ties left to right."""
    order = sorted(range(len(seq)), key=lambda i: (seq[i], i))
    out = [0] * len(seq)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def colored_involution(colors, edges):
    """Validated canonical form: (colors, edges) with colors a tuple giving
    the color of each vertex and edges a sorted tuple of matched pairs."""
    m = len(colors)
    if m % 2:
        raise ValueError("colored involutions need an even vertex count")
    n = m // 2
    if sorted(colors) != sorted(list(range(1, n + 1)) * 2):
        raise ValueError("colors must use 1..n twice each")
    norm = []
    seen = set()
    for a, b in edges:
        if a == b or not (1 <= a <= m and 1 <= b <= m):
            raise ValueError("invalid edge")
        lo, hi = min(a, b), max(a, b)
        if lo in seen or hi in seen:
            raise ValueError("edges must be disjoint")
        seen.update((lo, hi))
        if colors[lo - 1] != colors[hi - 1]:
            raise ValueError("matched vertices must share a color")
        norm.append((lo, hi))
    return (tuple(colors), tuple(sorted(norm)))


def colored_pi(alpha):
    """Underlying matching as an involution of S_2n."""
    colors, edges = alpha
    p = list(range(1, len(colors) + 1))
    for a, b in edges:
        p[a - 1], p[b - 1] = b, a
    return tuple(p)


def tau(w):
    """Colored involution pairing up the one-line entries of w two at a time:
    vertices w(2i-1), w(2i) get color i, joined when w(2i-1) > w(2i)."""
    if len(w) % 2:
        raise ValueError("tau needs a permutation of even size")
    if not is_permutation(w):
        raise ValueError("tau needs a permutation")
    colors = [0] * len(w)
    edges = []
    for i in range(1, len(w) // 2 + 1):
        a, b = w[2 * i - 2], w[2 * i - 1]
        colors[a - 1] = colors[b - 1] = i
        if a > b:
            edges.append((b, a))
    return (tuple(colors), tuple(sorted(edges)))


def tau_via_wreath(w):
    """Same map computed from the wreath product formula: conjugate the
    product of odd right descents by w and push the color vector through w."""
    n2 = len(w)
    theta = identity_perm(n2)
    for i in right_descents_perm(w):
        if i % 2:
            theta = mult_right(theta, i)
    conj = compose(compose(w, theta), inverse_perm(w))
    colors = [0] * n2
    for j in range(1, n2 + 1):
        colors[w[j - 1] - 1] = (j + 1) // 2
    edges = [(a, conj[a - 1]) for a in range(1, n2 + 1) if a < conj[a - 1]]
    return (tuple(colors), tuple(sorted(edges)))


def sigma(*pairs):
    """Colored involution of a sequence of integer pairs (a_i, b_i): vertices
    carry the standardized positions, color i joined exactly when a_i < b_i."""
    flat = []
    for a, b in pairs:
        flat.extend((b, a))
    word = std(flat)
    colors = [0] * len(word)
    edges = []
    for i, (a, b) in enumerate(pairs, 1):
        bp, ap = word[2 * i - 2], word[2 * i - 1]
        colors[ap - 1] = colors[bp - 1] = i
        if a < b:
            edges.append((min(ap, bp), max(ap, bp)))
    return (tuple(colors), tuple(sorted(edges)))


def colored_star(alpha):
    """Color reversal i -> n+1-i; matches reversing the pair sequence of a
    sigma value built from disjoint pairs."""
    colors, edges = alpha
    n = len(colors) // 2
    return (tuple(n + 1 - c for c in colors), edges)


def colored_rtimes(alpha, i):
    """Conjugation step on colored involutions by the transposition i, i+1:
    toggles the edge when both vertices share a color and are matched to each
    other or both unmatched, otherwise relabels the two vertices."""
    colors, edges = alpha
    if not 1 <= i < len(colors):
        raise ValueError("transposition out of range")
    pi = colored_pi(alpha)
    if {pi[i - 1], pi[i]} == {i, i + 1} and colors[i - 1] == colors[i]:
        e = (i, i + 1)
        if e in edges:
            new_edges = tuple(x for x in edges if x != e)
        else:
            new_edges = tuple(sorted(edges + (e,)))
        return (colors, new_edges)
    swap = {i: i + 1, i + 1: i}
    new_colors = list(colors)
    new_colors[i - 1], new_colors[i] = new_colors[i], new_colors[i - 1]
    new_edges = []
    for a, b in edges:
        a2, b2 = swap.get(a, a), swap.get(b, b)
        new_edges.append((min(a2, b2), max(a2, b2)))
    return (tuple(new_colors), tuple(sorted(new_edges)))


@lru_cache(maxsize=None)
def _colored_universe(n):
    """All colored involutions on [2n] with their descending reachability."""
    if n > COLOR_ORDER_CAP:
        raise ValueError("n too large for the colored order (max %d)" % COLOR_ORDER_CAP)
    from itertools import permutations as iperm

    nodes = {tau(w) for w in iperm(range(1, 2 * n + 1))}
    lower = {a: set() for a in nodes}  # immediate relations going down
    for a in nodes:
        pi = colored_pi(a)
        for i in range(1, 2 * n):
            if pi[i - 1] > pi[i]:
                lower[a].add(colored_rtimes(a, i))
    down = {}

    def reach(a):
        got = down.get(a)
        if got is not None:
            return got
        acc = {a}
        for b in lower[a]:
            acc |= reach(b)
        down[a] = frozenset(acc)
        return down[a]

    for a in nodes:
        reach(a)
    return down


def prec_leq(alpha, beta):
    """The order generated by descending conjugation steps that change the
    underlying matching: is alpha below beta."""
    n = len(beta[0]) // 2
    if len(alpha[0]) != len(beta[0]):
        raise ValueError("colored involutions have different sizes")
    return alpha in _colored_universe(n)[beta]


def is_atom_colored(w, x, y):
    """Atom membership by the colored involution form of the pattern test."""
    cycles = cyc(y)
    gam = gamma_set(x)
    for g in cycles:
        if _pair_image(w, g) not in gam:
            return False
    for p in range(len(cycles)):
        for q in range(p + 1, len(cycles)):
            g, g2 = cycles[p], cycles[q]
            if not prec_leq(sigma(_pair_image(w, g), _pair_image(w, g2)), sigma(g, g2)):
                return False
    return True


def w_tilde(w, y):
    """Double the entries of w at fixed points of y, then standardize."""
    flat = []
    fixed = set(fix(y))
    for i in range(1, len(w) + 1):
        flat.append(w[i - 1])
        if i in fixed:
            flat.append(w[i - 1])
    return std(flat)


def sigma_conjecture_holds(w, x, y):
    """The single-comparison form of the pattern test: cycle images in order,
    one colored comparison across all cycles of y at once."""
    cycles = cyc(y)
    gam = gamma_set(x)
    if any(_pair_image(w, g) not in gam for g in cycles):
        return False
    return prec_leq(sigma(*(_pair_image(w, g) for g in cycles)), sigma(*cycles))


def check_sigma_conjecture(n_max=5, k_max=3):
    """Compare the single-comparison test against the recursion-computed atom
    sets for every pair of involutions with few enough cycles."""
    pairs = 0
    failures = []
    for n in range(1, n_max + 1):
        univ = sorted(enumerate_involutions(n))
        from itertools import permutations as iperm

        perms = list(iperm(range(1, n + 1)))
        for y in univ:
            if len(cyc(y)) > k_max:
                continue
            for x in univ:
                if hat_perm(x) > hat_perm(y):
                    continue
                truth = set(atoms_perm(y, x))
                pairs += 1
                for w in perms:
                    if sigma_conjecture_holds(w, x, y) != (w in truth):
                        failures.append({"n": n, "x": x, "y": y, "w": w})
    return {"system": "symmetric groups up to S_%d" % n_max,
            "pairs_checked": pairs, "failures": failures}
