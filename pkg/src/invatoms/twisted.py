"""Twisted involutions, involution words, atoms, and Hecke atoms.

All functions take a CoxeterSystem plus an optional twist, a tuple giving
the image of each generator under an involutive diagram automorphism
(None means the identity twist). The twisted involutions are the group
elements whose inverse equals their twisted image.

Two products drive everything here. The conjugation step sends x and a
generator s to s*xs, or to xs when those coincide; folding it over a
reduced word walks the weak order on twisted involutions. Its monotone
variant (the Demazure step) ignores letters that are already descents,
which matches conjugating by the 0-Hecke product instead.
"""

from .coxeter import normalize_twist, is_involutive_twist

ENUMERATION_CAP = 50000


def _caches(system, twist):
    store = system.__dict__.setdefault("_twisted_caches", {})
    return store.setdefault(twist, {})


def _twist_key(system, twist):
    twist = normalize_twist(system, twist)
    if not is_involutive_twist(system, twist):
        raise ValueError("invalid twist: not involutive")
    return twist


def star(system, w, twist=None):
    """The image of w under the twist."""
    twist = _twist_key(system, twist)
    return system.apply_twist(w, twist)


def is_twisted_involution(system, w, twist=None):
    twist = _twist_key(system, twist)
    return system.apply_twist(w, twist) == system.inverse(w)


def _check_member(system, w, twist):
    if system.apply_twist(w, twist) != system.inverse(w):
        raise ValueError("element is not a twisted involution for this twist")


def rtimes(system, x, s, twist=None):
    """The conjugation step on twisted involutions: s*xs, or xs when s*x = xs."""
    twist = _twist_key(system, twist)
    return _rtimes(system, x, s, twist)


def _rtimes(system, x, s, twist):
    sstar = twist[s - 1]
    left = system.left_mult(sstar, x)
    right = system.right_mult(x, s)
    if left == right:
        return right
    return system.right_mult(left, s)


def dact(system, x, s, twist=None):
    """The monotone (Demazure) variant: the conjugation step on ascents, fixed on descents."""
    twist = _twist_key(system, twist)
    return _dact(system, x, s, twist)


def _dact(system, x, s, twist):
    if x[s - 1] >= system.num_positive:  # s is a right descent of x
        return x
    return _rtimes(system, x, s, twist)


def dact_word(system, x, word, twist=None):
    twist = _twist_key(system, twist)
    for s in word:
        x = _dact(system, x, s, twist)
    return x


def dact_element(system, x, w, twist=None):
    """Fold the monotone step over a reduced word of w (independent of the choice)."""
    return dact_word(system, x, system.reduced_word(w), twist)


def dact_element_via_demazure(system, x, w, twist=None):
    """Independent formula for the same fold: (w*)^{-1} o x o w in the 0-Hecke monoid."""
    twist = _twist_key(system, twist)
    wstar_inv = system.inverse(system.apply_twist(w, twist))
    return system.demazure_product(system.demazure_product(wstar_inv, x), w)


def enumerate_twisted(system, twist=None):
    """All twisted involutions, by BFS under the conjugation step (cached)."""
    twist = _twist_key(system, twist)
    cache = _caches(system, twist)
    if "all" not in cache:
        seen = {system.identity}
        order = [system.identity]
        head = 0
        while head < len(order):
            x = order[head]
            head += 1
            for s in range(1, system.rank + 1):
                y = _rtimes(system, x, s, twist)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
        cache["all"] = tuple(order)
    return cache["all"]


def hat_length_table(system, twist=None):
    """Depth of each twisted involution in the weak order (cached BFS layering)."""
    twist = _twist_key(system, twist)
    cache = _caches(system, twist)
    if "hat" not in cache:
        depth = {system.identity: 0}
        frontier = [system.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in range(1, system.rank + 1):
                    if x[s - 1] < system.num_positive:  # ascent
                        y = _rtimes(system, x, s, twist)
                        if y not in depth:
                            depth[y] = depth[x] + 1
                            nxt.append(y)
            frontier = nxt
        cache["hat"] = depth
    return cache["hat"]


def hat_length(system, x, twist=None, table=True):
    """Common length of all involution words of x."""
    twist = _twist_key(system, twist)
    _check_member(system, x, twist)
    if table:
        return hat_length_table(system, twist)[x]
    # local route that avoids enumerating the group: strip right descents
    n = 0
    p = system.num_positive
    while x != system.identity:
        s = next(i + 1 for i in range(system.rank) if x[i] >= p)
        x = _rtimes(system, x, s, twist)
        n += 1
    return n


def weak_leq_T(system, x, y, twist=None):
    """Weak order on twisted involutions: is x below y (downward closure from y, cached)."""
    twist = _twist_key(system, twist)
    _check_member(system, x, twist)
    _check_member(system, y, twist)
    return x in _down_set(system, y, twist)


def _down_set(system, y, twist):
    cache = _caches(system, twist).setdefault("down", {})
    got = cache.get(y)
    if got is not None:
        return got
    p = system.num_positive
    seen = {y}
    frontier = [y]
    while frontier:
        nxt = []
        for z in frontier:
            for s in range(1, system.rank + 1):
                if z[s - 1] >= p:
                    z2 = _rtimes(system, z, s, twist)
                    if z2 not in seen:
                        seen.add(z2)
                        nxt.append(z2)
        frontier = nxt
    cache[y] = frozenset(seen)
    return cache[y]


def hecke_table(system, base, twist=None):
    """base folded against every group element, keyed by element (cached).

    Only available when the group is small enough to enumerate.
    """
    twist = _twist_key(system, twist)
    _check_member(system, base, twist)
    cache = _caches(system, twist).setdefault("hecke_table", {})
    got = cache.get(base)
    if got is not None:
        return got
    if system.order() > ENUMERATION_CAP:
        raise ValueError("group too large to enumerate (order > %d)" % ENUMERATION_CAP)
    p = system.num_positive
    table = {}
    for w in system.elements():  # BFS order, so length is monotone
        if w == system.identity:
            table[w] = base
            continue
        s = next(i + 1 for i in range(system.rank) if w[i] >= p)
        table[w] = _dact(system, table[system.right_mult(w, s)], s, twist)
    cache[base] = table
    return table


def hecke_atoms(system, y, x=None, twist=None):
    """All w with x folded against w equal to y, sorted by (length, word)."""
    twist = _twist_key(system, twist)
    if x is None:
        x = system.identity
    table = hecke_table(system, x, twist)
    out = [w for w, img in table.items() if img == y]
    return tuple(sorted(out, key=lambda w: (system.length(w), system.reduced_word(w))))


def atoms(system, y, x=None, twist=None):
    """Minimal length Hecke atoms of y relative to x, sorted by reduced word."""
    twist = _twist_key(system, twist)
    if x is None:
        x = system.identity
    _check_member(system, x, twist)
    _check_member(system, y, twist)
    if system.order() <= ENUMERATION_CAP:
        hk = hecke_atoms(system, y, x, twist)
        if not hk:
            return ()
        lmin = system.length(hk[0])
        out = [w for w in hk if system.length(w) == lmin]
    else:
        out = sorted(_atoms_rec(system, y, x, twist, {}), key=system.reduced_word)
    return tuple(out)


def _atoms_rec(system, y, x, twist, memo):
    # peel right descents of y; every atom ends with one (its right descents
    # are contained in those of y), so each atom arises from one level down
    # extended by an ascent
    if y == x:
        return frozenset({system.identity})
    got = memo.get(y)
    if got is not None:
        return got
    p = system.num_positive
    acc = set()
    if system.length(y) > system.length(x):
        for s in range(1, system.rank + 1):
            if y[s - 1] >= p:
                below = _atoms_rec(system, _rtimes(system, y, s, twist), x, twist, memo)
                for v in below:
                    vs = system.right_mult(v, s)
                    if system.length(vs) > system.length(v):
                        acc.add(vs)
    res = frozenset(acc)
    memo[y] = res
    return res


def involution_words(system, y, x=None, twist=None):
    """All minimal transforming words from x to y, sorted."""
    out = []
    for w in atoms(system, y, x, twist):
        out.extend(system.reduced_words(w))
    return tuple(sorted(out))


def bruhat_hecke(system, y, x=None, twist=None):
    """All w with w* y <= x w in Bruhat order (the conjectural Hecke atom superset)."""
    twist = _twist_key(system, twist)
    if x is None:
        x = system.identity
    _check_member(system, x, twist)
    _check_member(system, y, twist)
    if system.order() > ENUMERATION_CAP:
        raise ValueError("group too large to enumerate (order > %d)" % ENUMERATION_CAP)
    out = []
    for w in system.elements():
        lhs = system.multiply(system.apply_twist(w, twist), y)
        rhs = system.multiply(x, w)
        if system.bruhat_leq(lhs, rhs):
            out.append(w)
    return tuple(sorted(out, key=lambda w: (system.length(w), system.reduced_word(w))))


def bruhat_atoms(system, y, x=None, twist=None):
    """Minimal length elements of the conjectural Bruhat characterization."""
    bh = bruhat_hecke(system, y, x, twist)
    if not bh:
        return ()
    lmin = system.length(bh[0])
    return tuple(
        sorted((w for w in bh if system.length(w) == lmin), key=system.reduced_word)
    )


def _word_list(system, ws):
    return [list(system.reduced_word(w)) for w in ws]


def check_conjecture(system, twist=None, ys=None):
    """Compare atoms with the minimal Bruhat-characterized elements over all
    comparable pairs of twisted involutions. Returns a JSON-ready report.

    ys restricts the sweep to the given upper elements, so the pair space
    can be partitioned across worker processes and the reports merged.
    """
    twist = _twist_key(system, twist)
    invs = enumerate_twisted(system, twist) if ys is None else tuple(ys)
    pairs = 0
    failures = []
    for y in invs:
        down = _down_set(system, y, twist)
        for x in down:
            pairs += 1
            expected = atoms(system, y, x, twist)
            got = bruhat_atoms(system, y, x, twist)
            if expected != got:
                failures.append(
                    {
                        "x": list(system.reduced_word(x)),
                        "y": list(system.reduced_word(y)),
                        "expected": _word_list(system, expected),
                        "got": _word_list(system, got),
                    }
                )
    return {
        "system": system.name or "custom",
        "pairs_checked": pairs,
        "failures": failures,
    }


# -- duality ----------------------------------------------------------------


def dual_twist(system, v0, twist=None):
    """The twist w -> v0 w* v0 as a generator permutation.

    v0 must be a self-inverse twisted involution whose conjugation action
    preserves the generating set; otherwise ValueError("invalid v0").
    """
    twist = _twist_key(system, twist)
    if v0 != system.inverse(v0):
        raise ValueError("invalid v0: not self-inverse")
    if system.apply_twist(v0, twist) != v0:
        raise ValueError("invalid v0: not fixed by the twist")
    gens = {system.generator(s): s for s in range(1, system.rank + 1)}
    diamond = []
    for s in range(1, system.rank + 1):
        g = system.generator(twist[s - 1])
        img = system.multiply(system.multiply(v0, g), v0)
        if img not in gens:
            raise ValueError("invalid v0: conjugation does not preserve the generators")
        diamond.append(gens[img])
    diamond = tuple(diamond)
    if not is_involutive_twist(system, diamond):
        raise ValueError("invalid v0: induced twist is not involutive")
    return diamond


def check_duality(system, v0, twist=None):
    """Verify the translation between the twist and its v0-conjugated twin.

    Checks that left multiplication by v0 is a bijection from the twisted
    involutions of the conjugated twist onto those of the original twist and
    that it intertwines the conjugation steps. When v0 is the longest element
    the reversal and inversion identities for words and atoms between the two
    twists are verified on all comparable pairs as well.
    """
    twist = _twist_key(system, twist)
    diamond = dual_twist(system, v0, twist)
    i_star = enumerate_twisted(system, twist)
    i_diam = enumerate_twisted(system, diamond)
    failures = []
    checks = 0

    mapped = {system.multiply(v0, x) for x in i_diam}
    checks += 1
    if mapped != set(i_star):
        failures.append({"check": "bijection", "detail": "v0 * I_diamond != I_star"})

    for x in i_diam:
        vx = system.multiply(v0, x)
        for s in range(1, system.rank + 1):
            checks += 1
            lhs = _rtimes(system, vx, s, twist)
            rhs = system.multiply(v0, _rtimes(system, x, s, diamond))
            if lhs != rhs:
                failures.append(
                    {
                        "check": "intertwine",
                        "x": list(system.reduced_word(x)),
                        "s": s,
                    }
                )

    if v0 == system.longest_element():
        hat_s = hat_length_table(system, twist)
        hat_d = hat_length_table(system, diamond)
        top = hat_s[max(hat_s, key=hat_s.get)]
        for x in i_diam:
            checks += 1
            if hat_d[x] != top - hat_s[system.multiply(v0, x)]:
                failures.append(
                    {"check": "hat-length", "x": list(system.reduced_word(x))}
                )
        for y in i_diam:
            for x in _down_set(system, y, diamond):
                checks += 1
                wx = system.multiply(v0, x)
                wy = system.multiply(v0, y)
                a_d = set(atoms(system, y, x, diamond))
                a_s = set(atoms(system, wx, wy, twist))
                if {system.inverse(w) for w in a_s} != a_d:
                    failures.append(
                        {
                            "check": "atoms-inverse",
                            "x": list(system.reduced_word(x)),
                            "y": list(system.reduced_word(y)),
                        }
                    )
                r_d = set(involution_words(system, y, x, diamond))
                r_s = set(involution_words(system, wx, wy, twist))
                checks += 1
                if {tuple(reversed(e)) for e in r_s} != r_d:
                    failures.append(
                        {
                            "check": "words-reversed",
                            "x": list(system.reduced_word(x)),
                            "y": list(system.reduced_word(y)),
                        }
                    )
    return {
        "system": system.name or "custom",
        "pairs_checked": checks,
        "failures": failures,
    }


def is_central_parabolic_longest(system, w):
    """Is w the longest element of a standard parabolic factor, central in it,
    with the factor commuting with the rest of the diagram."""
    if w == system.identity:
        return True
    support = sorted(set(system.reduced_word(w)))
    if w != system.longest_element(support):
        return False
    for s in support:
        if system.left_mult(s, w) != system.right_mult(w, s):
            return False
    outside = [t for t in range(1, system.rank + 1) if t not in support]
    return all(system.bond(s, t) == 2 for s in support for t in outside)


def check_central_closure(system, w, twist=None):
    """For w as above, involution words are closed under reversal and
    atoms and Hecke atoms under inversion. Returns a JSON-ready report."""
    twist = _twist_key(system, twist)
    if not is_central_parabolic_longest(system, w):
        raise ValueError("element is not the central longest element of a split factor")
    failures = []
    words = set(involution_words(system, w, None, twist))
    if {tuple(reversed(e)) for e in words} != words:
        failures.append({"check": "words-reversal"})
    ats = set(atoms(system, w, None, twist))
    if {system.inverse(u) for u in ats} != ats:
        failures.append({"check": "atoms-inverse"})
    hk = set(hecke_atoms(system, w, None, twist))
    if {system.inverse(u) for u in hk} != hk:
        failures.append({"check": "hecke-inverse"})
    return {
        "system": system.name or "custom",
        "pairs_checked": 3,
        "failures": failures,
    }


def check_bruhat_descriptions(system, twist=None):
    """Compare the two routes to Hecke atoms of the longest element and to
    atoms of every twisted involution. Returns a JSON-ready report."""
    twist = _twist_key(system, twist)
    failures = []
    checks = 0

    w0 = system.longest_element()
    table = hecke_table(system, system.identity, twist)
    checks += 1
    folded = {w for w, img in table.items() if img == w0}
    if folded != set(bruhat_hecke(system, w0, None, twist)):
        failures.append({"check": "hecke-longest"})

    for y in enumerate_twisted(system, twist):
        checks += 1
        if set(atoms(system, y, None, twist)) != set(bruhat_atoms(system, y, None, twist)):
            failures.append({"check": "atoms", "y": list(system.reduced_word(y))})

    return {
        "system": system.name or "custom",
        "pairs_checked": checks,
        "failures": failures,
    }
