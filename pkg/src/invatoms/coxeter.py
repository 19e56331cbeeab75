"""Finite Coxeter systems realized by their action on root systems.

A system is built from a Coxeter matrix. Group elements are stored as
permutations of the root index set: roots 0..P-1 are the positive roots
in simple-root coordinates and root i+P is the negative of root i. This
makes length, descents, and products cheap integer operations, with the
floating point geometry confined to construction time.

Generators are numbered 1..rank everywhere in the public interface.
"""

import itertools
from functools import lru_cache

import numpy as np

DEFAULT_ROOT_CAP = 10000
_DEDUP_DECIMALS = 9


def _validate_matrix(matrix):
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        raise ValueError("invalid matrix: empty")
    for row in m:
        if len(row) != n:
            raise ValueError("invalid matrix: not square")
    for i in range(n):
        for j in range(n):
            v = m[i][j]
            if not isinstance(v, (int, np.integer)):
                raise ValueError("invalid matrix: entries must be integers")
            if i == j and v != 1:
                raise ValueError("invalid matrix: diagonal entries must be 1")
            if i != j and v != 0 and v < 2:
                raise ValueError(
                    "invalid matrix: off-diagonal entries must be >= 2 (or 0 for an infinite bond)"
                )
            if m[i][j] != m[j][i]:
                raise ValueError("invalid matrix: not symmetric")
    return tuple(tuple(int(v) for v in row) for row in m)


class CoxeterSystem:
    """A finite Coxeter group together with its root permutation tables."""

    def __init__(self, matrix, root_cap=DEFAULT_ROOT_CAP, name=None):
        self.matrix = _validate_matrix(matrix)
        self.rank = len(self.matrix)
        self.name = name
        self._build_roots(root_cap)
        self._elements = None
        self._element_index = None
        self._bruhat_cache = {}
        self._twist_perm_cache = {}
        self._pair_root_cache = None

    def _build_roots(self, root_cap):
        n = self.rank
        bform = np.zeros((n, n))
        for i in range(n):
            for j in range(n):
                m = self.matrix[i][j]
                # an entry of 0 encodes an infinite bond
                bform[i][j] = -1.0 if m == 0 else -np.cos(np.pi / m)
        self.bilinear_form = bform

        def key(v):
            return tuple(np.round(v, _DEDUP_DECIMALS) + 0.0)

        roots = []
        index = {}
        for i in range(n):
            v = np.zeros(n)
            v[i] = 1.0
            index[key(v)] = len(roots)
            roots.append(v)
        frontier = list(range(n))
        while frontier:
            nxt = []
            for ri in frontier:
                v = roots[ri]
                coeffs = 2.0 * (bform @ v)
                for s in range(n):
                    w = v.copy()
                    w[s] -= coeffs[s]
                    if w[s] < -1e-9:
                        continue  # crossed to a negative root (only happens for v = alpha_s)
                    k = key(w)
                    if k not in index:
                        index[k] = len(roots)
                        roots.append(w)
                        nxt.append(index[k])
                        if len(roots) > root_cap:
                            raise ValueError(
                                "infinite group: root count exceeded cap %d" % root_cap
                            )
            frontier = nxt

        p = len(roots)
        self.num_positive = p
        self.roots = roots
        self._root_index = index
        gens = []
        for s in range(n):
            perm = [0] * (2 * p)
            coeffs_col = 2.0 * bform[s]
            for i in range(p):
                v = roots[i]
                if i == s:
                    perm[i] = s + p
                else:
                    w = v.copy()
                    w[s] -= float(coeffs_col @ v)
                    perm[i] = index[key(w)]
                perm[i + p] = (perm[i] + p) % (2 * p)
            gens.append(tuple(perm))
        self._gen_perms = gens
        self.identity = tuple(range(2 * p))

    def generator(self, s):
        """The element s_i for i in 1..rank."""
        if not 1 <= s <= self.rank:
            raise ValueError("generator index out of range: %r" % (s,))
        return self._gen_perms[s - 1]

    def bond(self, s, t):
        return self.matrix[s - 1][t - 1]

    # -- elementary operations ------------------------------------------

    def multiply(self, u, v):
        if len(u) != len(v) or len(u) != 2 * self.num_positive:
            raise ValueError("element belongs to a different system")
        return tuple(u[i] for i in v)

    def product(self, word):
        w = self.identity
        for s in word:
            w = self.multiply(w, self.generator(s))
        return w

    def inverse(self, w):
        inv = [0] * len(w)
        for i, j in enumerate(w):
            inv[j] = i
        return tuple(inv)

    def length(self, w):
        p = self.num_positive
        return sum(1 for i in range(p) if w[i] >= p)

    def descents_right(self, w):
        p = self.num_positive
        return tuple(s + 1 for s in range(self.rank) if w[s] >= p)

    def descents_left(self, w):
        return self.descents_right(self.inverse(w))

    def right_mult(self, w, s):
        return tuple(w[i] for i in self._gen_perms[s - 1])

    def left_mult(self, s, w):
        g = self._gen_perms[s - 1]
        return tuple(g[i] for i in w)

    def reduced_word(self, w):
        """The lexicographically smallest reduced word for w."""
        out = []
        p = self.num_positive
        winv = self.inverse(w)
        while w != self.identity:
            for s in range(self.rank):
                if winv[s] >= p:  # s is a left descent of w
                    out.append(s + 1)
                    w = self.left_mult(s + 1, w)
                    winv = self.inverse(w)
                    break
        return tuple(out)

    def reduced_words(self, w):
        """All reduced words for w, as a sorted tuple of tuples (DFS over right descents)."""
        p = self.num_positive
        memo = {}

        def rec(u):
            if u == self.identity:
                return ((),)
            got = memo.get(u)
            if got is not None:
                return got
            acc = []
            for s in range(self.rank):
                if u[s] >= p:
                    for word in rec(self.right_mult(u, s + 1)):
                        acc.append(word + (s + 1,))
            memo[u] = tuple(acc)
            return memo[u]

        return tuple(sorted(rec(w)))

    def demazure_product(self, u, v):
        """The 0-Hecke product of two elements (monotone one-sided fold)."""
        for s in self.reduced_word(v):
            us = self.right_mult(u, s)
            if self.length(us) > self.length(u):
                u = us
        return u

    # -- orders ----------------------------------------------------------

    def bruhat_leq(self, u, w):
        """Bruhat order comparison by the lifting recursion."""
        if u == w:
            return True
        key = (u, w)
        got = self._bruhat_cache.get(key)
        if got is not None:
            return got
        lu, lw = self.length(u), self.length(w)
        if lu >= lw:
            self._bruhat_cache[key] = False
            return False
        p = self.num_positive
        s = next(i + 1 for i in range(self.rank) if w[i] >= p)
        ws = self.right_mult(w, s)
        if u[s - 1] >= p:
            res = self.bruhat_leq(self.right_mult(u, s), ws)
        else:
            res = self.bruhat_leq(u, ws)
        self._bruhat_cache[key] = res
        return res

    def weak_leq_right(self, u, w):
        """Right weak order: u <= w iff l(u) + l(inverse(u) w) = l(w)."""
        rest = self.multiply(self.inverse(u), w)
        return self.length(u) + self.length(rest) == self.length(w)

    # -- enumeration ------------------------------------------------------

    def elements(self):
        """All group elements in BFS order from the identity (cached)."""
        if self._elements is None:
            seen = {self.identity: 0}
            order = [self.identity]
            head = 0
            while head < len(order):
                w = order[head]
                head += 1
                for s in range(1, self.rank + 1):
                    ws = self.right_mult(w, s)
                    if ws not in seen:
                        seen[ws] = len(order)
                        order.append(ws)
            self._elements = tuple(order)
            self._element_index = seen
        return self._elements

    def order(self):
        return len(self.elements())

    def longest_element(self, J=None):
        """The longest element of the standard parabolic subgroup on J (default: all of S)."""
        gens = range(1, self.rank + 1) if J is None else sorted(set(J))
        for s in gens:
            if not 1 <= s <= self.rank:
                raise ValueError("generator index out of range: %r" % (s,))
        p = self.num_positive
        w = self.identity
        while True:
            for s in gens:
                if w[s - 1] < p:
                    w = self.right_mult(w, s)
                    break
            else:
                return w

    def restrict_to_component(self, w, J):
        """Project w onto the parabolic factor on J.

        Valid only when every generator appearing in w outside J commutes
        with every generator of J, so that the projection is independent of
        the reduced word.
        """
        J = set(J)
        word = self.reduced_word(w)
        outside = {a for a in word if a not in J}
        for a in outside:
            for b in J:
                if self.bond(a, b) != 2:
                    raise ValueError(
                        "non-commuting split: generator %d does not commute with %d" % (a, b)
                    )
        return self.product(tuple(a for a in word if a in J))

    # -- diagram automorphisms -------------------------------------------

    def diagram_automorphisms(self):
        """All permutations p of the generators with m(p(s),p(t)) = m(s,t).

        Returned as tuples mapping generator i (1-based) to p[i-1].
        """
        n = self.rank
        out = []
        for perm in itertools.permutations(range(n)):
            if all(
                self.matrix[perm[i]][perm[j]] == self.matrix[i][j]
                for i in range(n)
                for j in range(i + 1, n)
            ):
                out.append(tuple(q + 1 for q in perm))
        return tuple(out)

    def twist_root_perm(self, twist):
        """The root index relabeling induced by a generator permutation."""
        twist = normalize_twist(self, twist)
        got = self._twist_perm_cache.get(twist)
        if got is not None:
            return got
        n = self.rank
        p = self.num_positive
        inv = [0] * n
        for i, im in enumerate(twist):
            inv[im - 1] = i
        rho = [0] * (2 * p)
        for i in range(p):
            v = self.roots[i]
            w = np.array([v[inv[j]] for j in range(n)])
            j = self._root_index[tuple(np.round(w, _DEDUP_DECIMALS) + 0.0)]
            rho[i] = j
            rho[i + p] = j + p
        rho = tuple(rho)
        self._twist_perm_cache[twist] = rho
        return rho

    def apply_twist(self, w, twist):
        """The image of w under the diagram automorphism given by twist."""
        rho = self.twist_root_perm(twist)
        rho_inv = [0] * len(rho)
        for i, j in enumerate(rho):
            rho_inv[j] = i
        return tuple(rho[w[rho_inv[i]]] for i in range(len(rho)))

    def pair_positive_roots(self, s, t):
        """Indices of the positive roots of the rank two subsystem on {s, t}."""
        if self._pair_root_cache is None:
            self._pair_root_cache = {}
        key = (min(s, t), max(s, t))
        got = self._pair_root_cache.get(key)
        if got is not None:
            return got
        n = self.rank
        idxs = []
        for i in range(self.num_positive):
            v = self.roots[i]
            if all(abs(v[j]) < 1e-9 for j in range(n) if j + 1 not in (s, t)):
                idxs.append(i)
        res = tuple(idxs)
        self._pair_root_cache[key] = res
        return res

    def __repr__(self):
        return "CoxeterSystem(%s, rank=%d)" % (self.name or "custom", self.rank)


def normalize_twist(system, twist):
    """Validate a generator permutation and return it as a canonical tuple."""
    if twist is None:
        return tuple(range(1, system.rank + 1))
    twist = tuple(int(v) for v in twist)
    if sorted(twist) != list(range(1, system.rank + 1)):
        raise ValueError("invalid twist: not a permutation of 1..rank")
    for i in range(system.rank):
        for j in range(system.rank):
            if system.matrix[twist[i] - 1][twist[j] - 1] != system.matrix[i][j]:
                raise ValueError("invalid twist: does not preserve the Coxeter matrix")
    return twist


def is_involutive_twist(system, twist):
    twist = normalize_twist(system, twist)
    return all(twist[twist[i] - 1] == i + 1 for i in range(system.rank))


# -- construction ---------------------------------------------------------


def _chain_matrix(n, bonds):
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
    for (i, j), v in bonds.items():
        m[i][j] = v
        m[j][i] = v
    return m


def coxeter_matrix_from_name(name):
    """Coxeter matrix for a standard shorthand like A5, B3, D4, H3, I2(7).

    Products are written with x, e.g. A1xA2.
    """
    name = name.strip()
    if "x" in name:
        parts = [coxeter_matrix_from_name(p) for p in name.split("x")]
        total = sum(len(p) for p in parts)
        m = [[2] * total for _ in range(total)]
        off = 0
        for p in parts:
            k = len(p)
            for i in range(k):
                for j in range(k):
                    m[off + i][off + j] = p[i][j]
            off += k
        return m
    if name.startswith("I2(") and name.endswith(")"):
        v = int(name[3:-1])
        return _chain_matrix(2, {(0, 1): v})
    family, num = name[0].upper(), name[1:]
    if not num.isdigit():
        raise ValueError("invalid matrix: unknown system name %r" % name)
    n = int(num)
    if n < 1:
        raise ValueError("invalid matrix: unknown system name %r" % name)
    bonds = {(i, i + 1): 3 for i in range(n - 1)}
    if family == "A":
        pass
    elif family in ("B", "C"):
        if n < 2:
            raise ValueError("invalid matrix: unknown system name %r" % name)
        bonds[(n - 2, n - 1)] = 4
    elif family == "D":
        if n < 3:
            raise ValueError("invalid matrix: unknown system name %r" % name)
        del bonds[(n - 2, n - 1)]
        bonds[(n - 3, n - 1)] = 3
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError("invalid matrix: unknown system name %r" % name)
        # node 1 hangs off node 3 of the chain 2-4-5-...-n (Bourbaki numbering)
        bonds = {(i, i + 1): 3 for i in range(1, n - 1)}
        bonds[(0, 2)] = 3
    elif family == "F":
        if n != 4:
            raise ValueError("invalid matrix: unknown system name %r" % name)
        bonds[(1, 2)] = 4
    elif family == "G":
        if n != 2:
            raise ValueError("invalid matrix: unknown system name %r" % name)
        bonds[(0, 1)] = 6
    elif family == "H":
        if n not in (2, 3, 4):
            raise ValueError("invalid matrix: unknown system name %r" % name)
        bonds[(0, 1)] = 5
    else:
        raise ValueError("invalid matrix: unknown system name %r" % name)
    return _chain_matrix(n, bonds)


def parse_matrix_text(text):
    """Parse the matrix file format: a 'rank n' line followed by n rows."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].lower().startswith("rank"):
        raise ValueError("invalid matrix: expected a 'rank n' header line")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError("invalid matrix: expected a 'rank n' header line")
    if len(lines) != n + 1:
        raise ValueError("invalid matrix: expected %d rows after the header" % n)
    rows = []
    for ln in lines[1:]:
        try:
            rows.append([int(v) for v in ln.replace(",", " ").split()])
        except ValueError:
            raise ValueError("invalid matrix: rows must contain integers")
    return rows


@lru_cache(maxsize=None)
def _cached_system(key, root_cap):
    matrix, name = key
    return CoxeterSystem(matrix, root_cap=root_cap, name=name)


def build_system(spec, root_cap=DEFAULT_ROOT_CAP):
    """Build a CoxeterSystem from a shorthand name, matrix text, or matrix.

    Raises ValueError("infinite group ...") when the root system does not
    close up within root_cap positive roots, and ValueError("invalid matrix
    ...") for malformed input.
    """
    name = None
    if isinstance(spec, str):
        if "\n" in spec or spec.lower().startswith("rank"):
            matrix = parse_matrix_text(spec)
        else:
            matrix = coxeter_matrix_from_name(spec)
            name = spec.strip()
    else:
        matrix = spec
    matrix = _validate_matrix(matrix)
    return _cached_system((matrix, name), root_cap)


# -- type A one-line conversions -------------------------------------------


def is_type_a_chain(system):
    n = system.rank
    for i in range(n):
        for j in range(i + 1, n):
            want = 3 if j == i + 1 else 2
            if system.matrix[i][j] != want:
                return False
    return True


def permutation_to_element(system, oneline):
    """Element of a type A system from one-line notation (a tuple on 1..rank+1)."""
    if not is_type_a_chain(system):
        raise ValueError("one-line notation needs a type A chain system")
    n = system.rank + 1
    seq = [int(v) for v in oneline]
    if sorted(seq) != list(range(1, n + 1)):
        raise ValueError("invalid one-line notation: %r" % (oneline,))
    w = system.identity
    # peel right descents of the target permutation, then reverse the word
    word = []
    while True:
        for i in range(n - 1):
            if seq[i] > seq[i + 1]:
                word.append(i + 1)
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                break
        else:
            break
    for s in reversed(word):
        w = system.right_mult(w, s)
    return w


def element_to_permutation(system, w):
    """One-line notation for an element of a type A chain system."""
    if not is_type_a_chain(system):
        raise ValueError("one-line notation needs a type A chain system")
    n = system.rank + 1
    seq = list(range(1, n + 1))
    for s in system.reduced_word(w):
        seq[s - 1], seq[s] = seq[s], seq[s - 1]
    return tuple(seq)


# -- module-level views of the element operations ----------------------------
# Every operation lives on CoxeterSystem; these let callers thread the system
# explicitly, which reads better in sweeps that mix several systems.


def multiply(system, u, v):
    return system.multiply(u, v)


def inverse(system, w):
    return system.inverse(w)


def length(system, w):
    return system.length(w)


def descents_right(system, w):
    return system.descents_right(w)


def descents_left(system, w):
    return system.descents_left(w)


def demazure_product(system, u, v):
    return system.demazure_product(u, v)


def bruhat_leq(system, u, w):
    return system.bruhat_leq(u, w)


def weak_leq_right(system, u, w):
    return system.weak_leq_right(u, w)


def reduced_word(system, w):
    return system.reduced_word(w)


def reduced_words(system, w):
    return system.reduced_words(w)


def diagram_automorphisms(system):
    return system.diagram_automorphisms()


def apply_twist(system, t, w):
    return system.apply_twist(w, t)


def longest_element(system, J=None):
    return system.longest_element(J)


def restrict_to_component(system, w, J):
    return system.restrict_to_component(w, J)
