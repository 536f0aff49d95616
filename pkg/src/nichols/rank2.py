"""
Rank-2 classification: c-sequences, the set A+, the insertion move,
F-sequence roots, triangulations, and matching against Weyl groupoids.

Sequence positions are 1-based.  Inserting at position i (1 <= i <= n, cyclic,
i = n meaning between c_n and c_1) turns (.., c_i, c_{i+1}, ..) into
(.., c_i + 1, 1, c_{i+1} + 1, ..).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalMismatch, NoConstructionPath, NoMatch, NotInAPlus, SpecError
from .roots import CartanGraph, real_roots, reflection_matrix


def eta(x):
    return ((x, -1), (1, 0))


def _mul2(A, B):
    return ((A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
            (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]))


MINUS_ID = ((-1, 0), (0, -1))


@dataclass
class EtaReport:
    product: tuple
    in_a: bool
    in_a_plus: bool
    first_columns: list

    def to_json(self):
        return {"product": [list(r) for r in self.product], "in_A": self.in_a,
                "in_A_plus": self.in_a_plus,
                "first_columns": [list(c) for c in self.first_columns]}


def eta_product_check(seq) -> EtaReport:
    """eta(c_1)...eta(c_n) = -id, all c_i >= 1 and nonnegative first columns of the partial products."""
    entries = list(seq.entries if isinstance(seq, CSequence) else seq)
    if not entries:
        raise SpecError("empty sequence")
    M = ((1, 0), (0, 1))
    cols = []
    for c in entries:
        M = _mul2(M, eta(c))
        cols.append((M[0][0], M[1][0]))
    in_a = M == MINUS_ID
    positive = all(c >= 1 for c in entries) and all(
        a >= 0 and b >= 0 for a, b in cols[:-1])
    return EtaReport(M, in_a, in_a and positive, cols)


def in_a_plus(entries) -> bool:
    return eta_product_check(entries).in_a_plus


def _insert(entries, i):
    c = list(entries)
    n = len(c)
    if not 1 <= i <= n:
        raise SpecError(f"position {i} outside 1..{n}")
    if i < n:
        return c[:i - 1] + [c[i - 1] + 1, 1, c[i] + 1] + c[i + 1:]
    return [c[0] + 1] + c[1:n - 1] + [c[n - 1] + 1, 1]


def construction_path(entries):
    """Non-cyclic insertion positions building ``entries`` from (1,1,1), or None.

    Peels ears off: the leftmost interior entry equal to 1 is removed
    together with a unit from each neighbour.
    """
    c = list(entries)
    path = []
    while len(c) > 3:
        pos = next((i for i in range(1, len(c) - 1) if c[i] == 1), None)
        if pos is None or c[pos - 1] < 2 or c[pos + 1] < 2:
            return None
        c = c[:pos - 1] + [c[pos - 1] - 1, c[pos + 1] - 1] + c[pos + 2:]
        path.append(pos)
    if c != [1, 1, 1]:
        return None
    return path[::-1]


class CSequence:
    """An integer sequence (c_1..c_n), optionally with a construction path from (1,1,1)."""

    def __init__(self, entries, path=None):
        self.entries = tuple(int(x) for x in entries)
        self.path = list(path) if path is not None else None

    @classmethod
    def construct(cls, entries):
        path = construction_path(entries)
        if path is None:
            raise NotInAPlus(f"{tuple(entries)} is not reachable from (1,1,1)")
        return cls(entries, path)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if isinstance(other, CSequence):
            return self.entries == other.entries
        return tuple(other) == self.entries

    def __hash__(self):
        return hash(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"CSequence{self.entries}"

    def to_json(self):
        return {"entries": list(self.entries), "path": self.path}


def insertion_move(seq, i) -> CSequence:
    entries = seq.entries if isinstance(seq, CSequence) else tuple(seq)
    if not in_a_plus(entries):
        raise NotInAPlus(f"{entries} is not in A+")
    return CSequence.construct(_insert(entries, i))


def dihedral_variants(entries):
    c = tuple(entries)
    n = len(c)
    out = []
    for base in (c, c[::-1]):
        for r in range(n):
            out.append(base[r:] + base[:r])
    return out


def canonical(entries):
    """Lexicographically least rotation or reversal."""
    return min(dihedral_variants(entries))


def enumerate_a_plus(max_length) -> dict:
    """Classes of A+ up to rotation and reversal, by length 3..max_length."""
    if max_length < 3:
        raise SpecError("max_length must be at least 3")
    out = {3: [CSequence.construct((1, 1, 1))]}
    for n in range(4, max_length + 1):
        found = set()
        for seq in out[n - 1]:
            for i in range(1, n):
                found.add(canonical(_insert(seq.entries, i)))
        out[n] = [CSequence.construct(c) for c in sorted(found)]
    return out


# --- F-sequence roots ---------------------------------------------------------

def _roots_by_recursion(entries):
    """v_0 = (-1,0), v_1 = (0,1), v_{i+1} = c_i v_i - v_{i-1}."""
    prev, cur = (-1, 0), (0, 1)
    out = [cur]
    for c in entries[:-1]:
        prev, cur = cur, (c * cur[0] - prev[0], c * cur[1] - prev[1])
        out.append(cur)
    return out


@dataclass
class FSequenceRoots:
    roots: list

    def as_set(self):
        return set(self.roots)

    def sorted_by_quotient(self):
        """Increasing b/a for (a, b); (0, b) counts as infinite and goes last."""
        return sorted(self.roots, key=lambda v: (v[0] == 0, v[1] / v[0] if v[0] else 0))

    def to_json(self):
        return [list(v) for v in self.roots]


def f_sequence_roots(seq: CSequence) -> FSequenceRoots:
    """Replay the construction path from (0,1),(1,1),(1,0), inserting mediants."""
    if not isinstance(seq, CSequence) or seq.path is None:
        raise NoConstructionPath("sequence has no recorded construction path")
    roots = [(0, 1), (1, 1), (1, 0)]
    entries = [1, 1, 1]
    for i in seq.path:
        a, b = roots[i - 1], roots[i]
        roots = roots[:i] + [(a[0] + b[0], a[1] + b[1])] + roots[i:]
        entries = _insert(entries, i)
    if tuple(entries) != seq.entries:
        raise NoConstructionPath("recorded path does not produce the sequence")
    if roots != _roots_by_recursion(seq.entries):
        raise InternalMismatch("mediant replay disagrees with the eta recursion")
    return FSequenceRoots(roots)


# --- triangulations -------------------------------------------------------------

@dataclass
class Triangulation:
    n: int
    diagonals: list = field(default_factory=list)
    triangles: list = field(default_factory=list)

    def vertex_degrees(self):
        deg = [0] * self.n
        for t in self.triangles:
            for v in t:
                deg[v - 1] += 1
        return deg

    def is_noncrossing(self):
        def cross(d, e):
            a, b = d
            c, x = e
            if len({a, b, c, x}) < 4:
                return False
            return (a < c < b) != (a < x < b)
        return not any(cross(d, e) for i, d in enumerate(self.diagonals) for e in self.diagonals[i + 1:])

    def to_json(self):
        return {"n": self.n, "diagonals": [list(d) for d in self.diagonals],
                "triangles": [list(t) for t in self.triangles]}


def triangulation_from_sequence(seq: CSequence) -> Triangulation:
    """Glue one triangle on edge (i, i+1) per recorded insertion, starting from a triangle."""
    if not isinstance(seq, CSequence) or seq.path is None:
        raise NoConstructionPath("sequence has no recorded construction path")
    n = 3
    triangles = [(1, 2, 3)]
    diagonals = []

    def shift(v, i):
        return v + 1 if v > i else v

    for i in seq.path:
        triangles = [tuple(shift(v, i) for v in t) for t in triangles]
        diagonals = [tuple(shift(v, i) for v in d) for d in diagonals]
        triangles.append((i, i + 1, i + 2))
        diagonals.append((i, i + 2))
        n += 1
    tri = Triangulation(n, sorted(diagonals), sorted(tuple(sorted(t)) for t in triangles))
    if tuple(tri.vertex_degrees()) != seq.entries:
        raise InternalMismatch("triangle counts do not match the sequence")
    return tri


# --- chamber walks and matching -----------------------------------------------

def cartan_from_roots(roots):
    """c_ij = -max{m : alpha_j + m alpha_i is a positive root} for a rank-2 root set."""
    rs = set(map(tuple, roots))
    C = [[2, 0], [0, 2]]
    for i, j in ((0, 1), (1, 0)):
        m = 0
        while True:
            v = [0, 0]
            v[j] = 1
            v[i] = m + 1
            if tuple(v) in rs:
                m += 1
            else:
                break
        C[i][j] = -m
    return (tuple(C[0]), tuple(C[1]))


def reflect_roots(roots, i):
    """Positive roots after the reflection s_i, in the new chamber's coordinates."""
    C = cartan_from_roots(roots)
    S = reflection_matrix(C, i)
    out = set()
    for v in roots:
        w = (S[0][0] * v[0] + S[0][1] * v[1], S[1][0] * v[0] + S[1][1] * v[1])
        if w[0] < 0 or w[1] < 0:
            w = (-w[0], -w[1])
        out.add(w)
    return out


def chamber_walk(roots, steps):
    """[(Cartan matrix, root set)] starting at ``roots`` and applying s_i for i in steps."""
    cur = set(map(tuple, roots))
    out = [(cartan_from_roots(cur), cur)]
    for i in steps:
        cur = reflect_roots(cur, i)
        out.append((cartan_from_roots(cur), cur))
    return out


def cartan_graph_from_sequence(seq) -> CartanGraph:
    """A Cartan graph with objects a_1..a_2n built from a c-sequence.

    a_{2k-1} has c_12 = -c_{2k-1}, c_21 = -c_{2k-2}; a_{2k} has
    c_12 = -c_{2k-1}, c_21 = -c_{2k}; rho_1 joins a_{2k-1} and a_{2k},
    rho_2 joins a_{2k} and a_{2k+1} (indices cyclic).
    """
    c = list(seq.entries if isinstance(seq, CSequence) else seq)
    n = len(c)
    m = 2 * n
    cf = lambda t: c[(t - 1) % n]
    g = CartanGraph(2)
    for idx in range(m):
        a = idx + 1
        if a % 2:
            k = (a + 1) // 2
            C = ((2, -cf(2 * k - 1)), (-cf(2 * k - 2), 2))
        else:
            k = a // 2
            C = ((2, -cf(2 * k - 1)), (-cf(2 * k), 2))
        g.objects.append(f"a{a}")
        g.labels.append(f"a{a}")
        g.cartan.append(C)
    for idx in range(m):
        a = idx + 1
        if a % 2:
            g.edges[(idx, 0)] = idx + 1
            g.edges[(idx, 1)] = (idx - 1) % m
        else:
            g.edges[(idx, 0)] = idx - 1
            g.edges[(idx, 1)] = (idx + 1) % m
    return g


def match_weyl_groupoid(b, classes=None):
    """The A+ class whose F-sequence roots equal the braiding's positive roots."""
    if b.rank != 2:
        raise SpecError("matching needs a rank-2 braiding")
    rs = real_roots(b)
    if rs.status != "finite":
        raise NoMatch(f"root system is not finite: {rs.detail}")
    target = set(rs.positive)
    n = len(target)
    if n < 3:
        raise NoMatch(f"{n} positive roots: reducible or degenerate")
    if classes is None:
        classes = enumerate_a_plus(n)
    for rep in classes.get(n, []):
        for variant in dihedral_variants(rep.entries):
            if set(_roots_by_recursion(variant)) == target:
                rep.matched_variant = variant
                return rep
    raise NoMatch(f"no A+ class of length {n} has root set {sorted(target)}")
