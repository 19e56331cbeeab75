"""Chinese classes and atom orders for involutions in the symmetric group.

Inverting every element of the Hecke atom set of an involution in S_n
yields an equivalence class of the three-letter relation known from the
Chinese monoid; the inverted atom set is the interval between two
explicit extremal permutations in the partial order obtained by dropping
the length-changing moves. This module materializes the classes, the
orders, the extremal elements, the graded poset structure with its
inversion-set rank function, and the fixed-point-free analogues, where
the moves act on aligned windows of four letters and the resulting poset
embeds into the right weak order of a symmetric group of half the size.

Permutations are one-line tuples as in the typea module; the class and
order closures accept arbitrary integer sequences.
"""

from collections import deque

from . import typea as ta

CHINESE_SWEEP_CAP = 7
FPF_SWEEP_CAP = 8


def _seq(values):
    return tuple(int(v) for v in values)


def _dedupe(values):
    return tuple(dict.fromkeys(values))


# -- the Chinese relation and its class partition ----------------------------


def _triple_mates(window):
    a, b, c = sorted(window)
    pats = _dedupe([(c, a, b), (b, c, a), (c, b, a)])
    if window in pats:
        return [p for p in pats if p != window]
    return []


def chinese_neighbors(seq):
    """Sequences one three-letter move away from seq."""
    seq = _seq(seq)
    out = []
    for i in range(len(seq) - 2):
        for pat in _triple_mates(seq[i:i + 3]):
            out.append(seq[:i] + pat + seq[i + 3:])
    return out


def chinese_class(seq):
    """The full equivalence class of seq under the three-letter relation."""
    start = _seq(seq)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in chinese_neighbors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def _partition_into_classes(universe, class_of):
    seen = set()
    classes = []
    for w in sorted(universe):
        if w in seen:
            continue
        cls = frozenset(class_of(w))
        seen |= cls
        classes.append(cls)
    return classes


def verify_chinese(n):
    """Match the class partition of S_n against the inverted Hecke atom sets.

    Returns a report dict; an empty failures list means every class equals
    the inverted Hecke atom set of the involution its members fold to.
    """
    if n > CHINESE_SWEEP_CAP:
        raise ValueError("n too large for the Chinese sweep (max %d)" % CHINESE_SWEEP_CAP)
    table = ta.hecke_image_table(n)
    by_target = {}
    for w, img in table.items():
        by_target.setdefault(img, set()).add(ta.inverse_perm(w))
    classes = _partition_into_classes(table, chinese_class)
    failures = []
    for cls in classes:
        u = min(cls)
        target = table[ta.inverse_perm(u)]
        expected = frozenset(by_target.get(target, ()))
        if cls != expected:
            failures.append({
                "involution": list(target),
                "class_size": len(cls),
                "hecke_size": len(expected),
            })
    if len(classes) != len(by_target):
        failures.append({
            "involution": None,
            "class_size": len(classes),
            "hecke_size": len(by_target),
        })
    return {
        "n": n,
        "classes": len(classes),
        "involutions": len(by_target),
        "failures": failures,
    }


# -- the fixed-point-free relation -------------------------------------------


def _quad_mates(window):
    a, b, c, d = sorted(window)
    pats = _dedupe([(a, d, b, c), (b, c, a, d), (b, d, a, c), (c, d, a, b)])
    if window in pats:
        return [p for p in pats if p != window]
    return []


def fpf_neighbors(seq):
    """Sequences one aligned swap or four-letter move away from seq."""
    seq = _seq(seq)
    if len(seq) % 2:
        raise ValueError("sequence has odd length")
    out = []
    for i in range(0, len(seq), 2):
        out.append(seq[:i] + (seq[i + 1], seq[i]) + seq[i + 2:])
    for i in range(0, len(seq) - 3, 2):
        for pat in _quad_mates(seq[i:i + 4]):
            out.append(seq[:i] + pat + seq[i + 4:])
    return out


def fpf_class(seq):
    """The class of seq under aligned swaps and the four-letter moves."""
    start = _seq(seq)
    if len(start) % 2:
        raise ValueError("sequence has odd length")
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in fpf_neighbors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def verify_fpf(n2):
    """Match the class partition of S_2n against the inverted FPF Hecke sets."""
    if n2 % 2:
        raise ValueError("sequence has odd length")
    if n2 > FPF_SWEEP_CAP:
        raise ValueError("2n too large for the FPF sweep (max %d)" % FPF_SWEEP_CAP)
    table = ta.hecke_image_table(n2, ta.fpf_base(n2))
    by_target = {}
    for w, img in table.items():
        by_target.setdefault(img, set()).add(ta.inverse_perm(w))
    classes = _partition_into_classes(table, fpf_class)
    failures = []
    for cls in classes:
        u = min(cls)
        target = table[ta.inverse_perm(u)]
        expected = frozenset(by_target.get(target, ()))
        if cls != expected:
            failures.append({
                "involution": list(target),
                "class_size": len(cls),
                "hecke_size": len(expected),
            })
    if len(classes) != len(by_target):
        failures.append({
            "involution": None,
            "class_size": len(classes),
            "hecke_size": len(by_target),
        })
    return {
        "n": n2,
        "classes": len(classes),
        "involutions": len(by_target),
        "failures": failures,
    }


# -- the atom orders ----------------------------------------------------------


def _up_steps(seq):
    # keep only the length-preserving move, directed upward
    out = []
    for i in range(len(seq) - 2):
        window = seq[i:i + 3]
        a, b, c = sorted(window)
        if window == (c, a, b) and (b, c, a) != window:
            out.append(seq[:i] + (b, c, a) + seq[i + 3:])
    return out


def _up_steps_fpf(seq):
    out = []
    for i in range(0, len(seq) - 3, 2):
        window = seq[i:i + 4]
        a, b, c, d = sorted(window)
        if window == (a, d, b, c) and (b, c, a, d) != window:
            out.append(seq[:i] + (b, c, a, d) + seq[i + 4:])
    return out


def _reaches(start, goal, steps):
    start, goal = _seq(start), _seq(goal)
    if len(start) != len(goal) or sorted(start) != sorted(goal):
        return False
    if start == goal:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in steps(u):
            if v == goal:
                return True
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return False


def prec_A_leq(u, v):
    """Whether v is reachable from u by upward three-letter moves."""
    return _reaches(u, v, _up_steps)


def prec_Afpf_leq(u, v):
    """Whether v is reachable from u by upward aligned four-letter moves."""
    u, v = _seq(u), _seq(v)
    if len(u) % 2 or len(v) % 2:
        raise ValueError("sequence has odd length")
    return _reaches(u, v, _up_steps_fpf)


# -- extremal atoms -----------------------------------------------------------


def hat0(x):
    """The minimal inverted atom of an involution x."""
    x = _seq(x)
    if not (ta.is_permutation(x) and ta.is_involution_perm(x)):
        raise ValueError("extremal atoms need an involution")
    seq = []
    for a, b in ta.cyc(x):
        seq.extend((b, a))
    return _dedupe(seq)


def hat1(x):
    """The maximal inverted atom of an involution x."""
    x = _seq(x)
    if not (ta.is_permutation(x) and ta.is_involution_perm(x)):
        raise ValueError("extremal atoms need an involution")
    seq = []
    for a, b in sorted(ta.cyc(x), key=lambda p: p[1]):
        seq.extend((b, a))
    return _dedupe(seq)


def _fpf_pairs(x):
    x = _seq(x)
    if not (ta.is_permutation(x) and ta.is_fpf_involution(x)):
        raise ValueError("x is not fixed-point-free")
    return [(a, x[a - 1]) for a in range(1, len(x) + 1) if a < x[a - 1]]


def hat0_fpf(x):
    """The minimal inverted atom of a fixed-point-free involution x."""
    seq = []
    for a, b in _fpf_pairs(x):
        seq.extend((a, b))
    return tuple(seq)


def hat1_fpf(x):
    """The maximal inverted atom of a fixed-point-free involution x."""
    seq = []
    for a, b in sorted(_fpf_pairs(x), key=lambda p: p[1]):
        seq.extend((a, b))
    return tuple(seq)


def is_321_avoiding(w):
    """No positions i < j < k carry a strictly decreasing triple of values."""
    w = _seq(w)
    n = len(w)
    for j in range(1, n - 1):
        if max(w[:j]) > w[j] and min(w[j + 1:]) < w[j]:
            return False
    return True


# -- inversion sets and posets -------------------------------------------------


def _a_inversions(u, x):
    n = len(x)
    lower = [a for a in range(1, n + 1) if a <= x[a - 1]]
    upper = [b for b in range(1, n + 1) if x[b - 1] < b]
    uinv = ta.inverse_perm(u)
    out = set()
    for i, p in enumerate(lower):
        for q in lower[:i]:
            if uinv[p - 1] < uinv[q - 1]:
                out.add((p, q))
    for i, p in enumerate(upper):
        for q in upper[i + 1:]:
            if uinv[p - 1] < uinv[q - 1]:
                out.add((p, q))
    return out


def a_inversion_set(u, x):
    """Inversions of an inverted atom u over the two-sided pair set of x."""
    u, x = _seq(u), _seq(x)
    if not ta.is_atom_absolute(ta.inverse_perm(u), x):
        raise ValueError("u not an atom inverse")
    return _a_inversions(u, x)


def fpf_embedding(u, x):
    """Image of an inverted FPF atom in S_n, pair by pair."""
    u = _seq(u)
    phi = {pair: i for i, pair in enumerate(_fpf_pairs(x), 1)}
    out = []
    for i in range(0, len(u), 2):
        pair = (u[i], u[i + 1])
        if pair not in phi:
            raise ValueError("u not an atom inverse")
        out.append(phi[pair])
    return tuple(out)


class AtomPoset:
    """A finite bounded poset of inverted atoms with explicit cover edges."""

    def __init__(self, elements, covers, bottom, top, ranks):
        self.elements = elements
        self.covers = covers
        self.bottom = bottom
        self.top = top
        self.ranks = ranks
        self._up = None

    def _upsets(self):
        if self._up is None:
            succ = {u: [] for u in self.elements}
            for u, v in self.covers:
                succ[u].append(v)
            order = sorted(self.elements, key=lambda u: -self.ranks[u])
            up = {}
            for u in order:
                reach = {u}
                for v in succ[u]:
                    reach |= up[v]
                up[u] = frozenset(reach)
            self._up = up
        return self._up

    def leq(self, u, v):
        return v in self._upsets()[_seq(u)]


def _transitive_reduce(nodes, edges, rank_of):
    succ = {u: set() for u in nodes}
    for u, v in edges:
        succ[u].add(v)
    order = sorted(nodes, key=lambda u: -rank_of[u])
    reach = {}
    for u in order:
        r = set()
        for v in succ[u]:
            r |= {v} | reach[v]
        reach[u] = r
    reduced = set()
    for u, v in edges:
        if not any(v in reach[w] for w in succ[u] if w != v):
            reduced.add((u, v))
    return reduced


def _build_poset(bottom, steps, rank_of):
    seen = {bottom}
    queue = deque([bottom])
    edges = set()
    while queue:
        u = queue.popleft()
        for v in steps(u):
            edges.add((u, v))
            if v not in seen:
                seen.add(v)
                queue.append(v)
    ranks = {u: rank_of(u) for u in seen}
    for u, v in edges:
        if ranks[v] <= ranks[u]:
            raise RuntimeError("rank function is not increasing along moves")
    covers = _transitive_reduce(seen, edges, ranks)
    has_out = {u for u, _ in covers}
    tops = [u for u in seen if u not in has_out]
    if len(tops) != 1:
        raise RuntimeError("atom order is not bounded above")
    elements = tuple(sorted(seen, key=lambda u: (ranks[u], u)))
    covers = tuple(sorted(covers, key=lambda e: (ranks[e[0]], e)))
    return AtomPoset(elements, covers, bottom, tops[0], ranks)


def atom_poset(x):
    """The graded poset of inverted atoms of an involution x."""
    x = _seq(x)
    bottom = hat0(x)
    return _build_poset(bottom, _up_steps, lambda u: len(_a_inversions(u, x)))


def atom_poset_fpf(x):
    """The graded lattice of inverted FPF atoms of a fixed-point-free x."""
    x = _seq(x)
    bottom = hat0_fpf(x)
    return _build_poset(bottom, _up_steps_fpf,
                        lambda u: ta.perm_length(fpf_embedding(u, x)))


def poset_is_lattice(poset):
    """Whether every pair has a unique minimal upper bound and maximal lower bound."""
    up = poset._upsets()
    pred = {u: [] for u in poset.elements}
    for u, v in poset.covers:
        pred[v].append(u)
    order = sorted(poset.elements, key=lambda u: poset.ranks[u])
    down = {}
    for u in order:
        reach = {u}
        for v in pred[u]:
            reach |= down[v]
        down[u] = frozenset(reach)
    elems = list(poset.elements)
    for i, u in enumerate(elems):
        for v in elems[i + 1:]:
            ubs = up[u] & up[v]
            if sum(1 for w in ubs if not any(z != w and w in up[z] for z in ubs)) != 1:
                return False
            lbs = down[u] & down[v]
            if sum(1 for w in lbs if not any(z != w and w in down[z] for z in lbs)) != 1:
                return False
    return True


# -- export --------------------------------------------------------------------


def poset_to_json(poset):
    return {
        "elements": [list(u) for u in poset.elements],
        "covers": [[list(u), list(v)] for u, v in poset.covers],
        "bottom": list(poset.bottom),
        "top": list(poset.top),
        "ranks": [poset.ranks[u] for u in poset.elements],
    }


def _node_label(u):
    if max(u) <= 9:
        return "".join(str(v) for v in u)
    return ",".join(str(v) for v in u)


def poset_to_dot(poset):
    lines = ["digraph atoms {", "  rankdir=BT;"]
    for u in poset.elements:
        lines.append('  "%s";' % _node_label(u))
    for u, v in poset.covers:
        lines.append('  "%s" -> "%s";' % (_node_label(u), _node_label(v)))
    lines.append("}")
    return "\n".join(lines)
