"""
Cartan matrices of diagonal braidings, reflections, Cartan graphs / Weyl
groupoids, real roots and axiom checks.

Indices are 0-based in the Python API.  Root vectors are integer tuples in
the simple-root coordinates of a chamber.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .braiding import DiagonalBraiding
from .cyclotomic import zeta_order
from .errors import NotIFinite

DEFAULT_MAX_OBJECTS = 1024
DEFAULT_MAX_CARTAN = 8
DEFAULT_DEPTH = 64


# --- Cartan matrix --------------------------------------------------------------

def cartan_entry(b: DiagonalBraiding, i, j):
    """c_ij = -m for the least m with (m+1)_{q_ii} = 0 or q_ii^m q_ij q_ji = 1."""
    if i == j:
        return 2
    a = b.exponents
    if b.generic:
        mii, mix = a[i][i], a[i][j] + a[j][i]
        if mii == 0:
            if mix == 0:
                return 0
            raise NotIFinite(i, j)
        m, rem = divmod(-mix, mii)
        if rem or m < 0:
            raise NotIFinite(i, j)
        return -m
    N = b.order
    o = zeta_order(N, a[i][i])
    for m in range(N):
        if o != 1 and (m + 1) % o == 0:
            return -m
        if (m * a[i][i] + a[i][j] + a[j][i]) % N == 0:
            return -m
    raise NotIFinite(i, j)


def cartan_matrix(b: DiagonalBraiding):
    n = b.rank
    return tuple(tuple(cartan_entry(b, i, j) for j in range(n)) for i in range(n))


def cartan_case(b, i, j):
    """'cartan' or 'truncation' according to which condition fixes c_ij first."""
    c = -cartan_entry(b, i, j)
    a = b.exponents
    if b.generic:
        return "cartan"
    if (c * a[i][i] + a[i][j] + a[j][i]) % b.order == 0:
        return "cartan"
    return "truncation"


def reflection_matrix(C, i):
    """s_i on Z^n: alpha_k -> alpha_k - c_ik alpha_i; columns are images."""
    n = len(C)
    S = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for k in range(n):
        S[i][k] -= C[i][k]
    return tuple(tuple(row) for row in S)


def reflect(b: DiagonalBraiding, i) -> DiagonalBraiding:
    """R_i(b): exponents chi(s_i alpha_k, s_i alpha_l), expanded bilinearly."""
    n = b.rank
    row = [cartan_entry(b, i, j) for j in range(n)]
    v = []
    for k in range(n):
        vec = [0] * n
        if k == i:
            vec[i] = -1
        else:
            vec[k] = 1
            vec[i] = -row[k]
        v.append(vec)
    a = b.exponents
    new = [[sum(v[k][p] * v[l][q] * a[p][q] for p in range(n) for q in range(n))
            for l in range(n)] for k in range(n)]
    if b.generic:
        return DiagonalBraiding(new, mode="generic")
    return DiagonalBraiding(new, order=b.order)


def chi(b, x, y):
    """Exponent of chi(x, y) for integer root vectors x, y (mod N in root-of-unity mode)."""
    a = b.exponents
    n = b.rank
    val = sum(x[p] * y[q] * a[p][q] for p in range(n) for q in range(n))
    return val % b.order if b.order else val


# --- q-diagrams ---------------------------------------------------------------------

@dataclass(frozen=True)
class QDiagram:
    nodes: tuple
    edges: tuple
    order: int = None

    def text(self):
        def lab(e):
            if self.order is None:
                return f"q^{e}"
            return f"z{self.order}^{e}"
        nodes = ", ".join(lab(x) for x in self.nodes)
        edges = ", ".join(f"{i + 1}-{j + 1}:{lab(e)}" for i, j, e in self.edges)
        return f"nodes({nodes}) edges({edges})"


def q_diagram(b: DiagonalBraiding) -> QDiagram:
    """Node labels q_ii and edge labels q_ij q_ji (as exponents), edges where the label is not 1."""
    a = b.exponents
    n = b.rank
    nodes = tuple(a[i][i] for i in range(n))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            e = a[i][j] + a[j][i]
            if b.order:
                e %= b.order
            if e != 0:
                edges.append((i, j, e))
    return QDiagram(nodes, tuple(edges), b.order)


def _diagram_under(d: QDiagram, perm):
    """Relabel node i as perm[i]."""
    n = len(d.nodes)
    nodes = [0] * n
    for i, x in enumerate(d.nodes):
        nodes[perm[i]] = x
    edges = sorted((min(perm[i], perm[j]), max(perm[i], perm[j]), e) for i, j, e in d.edges)
    return (tuple(nodes), tuple(edges))


def canonical_diagram(d: QDiagram):
    return min(_diagram_under(d, p) for p in permutations(range(len(d.nodes))))


def canonical_cartan(C):
    n = len(C)
    best = None
    for p in permutations(range(n)):
        M = tuple(tuple(C[p[r]][p[c]] for c in range(n)) for r in range(n))
        if best is None or M < best:
            best = M
    return best


# --- Cartan graph -------------------------------------------------------------------

@dataclass
class CartanGraph:
    rank: int
    objects: list = field(default_factory=list)
    cartan: list = field(default_factory=list)
    edges: dict = field(default_factory=dict)
    status: str = "finite"
    detail: str = None
    labels: list = field(default_factory=list)

    @property
    def n_objects(self):
        return len(self.objects)

    @property
    def is_finite(self):
        return self.status == "finite"

    def braidings(self):
        return [o for o in self.objects if isinstance(o, DiagonalBraiding)]

    def q_diagram_types(self, up_to_relabeling=True):
        keys = set()
        for o in self.objects:
            d = q_diagram(o)
            keys.add(canonical_diagram(d) if up_to_relabeling else (d.nodes, d.edges))
        return sorted(keys)

    def cartan_types(self, up_to_relabeling=True):
        keys = {canonical_cartan(C) if up_to_relabeling else C for C in self.cartan if C is not None}
        return sorted(keys)

    def to_json(self):
        objs = []
        for idx, o in enumerate(self.objects):
            C = self.cartan[idx] if idx < len(self.cartan) else None
            entry = {"id": idx, "cartan": [list(r) for r in C] if C is not None else None}
            if isinstance(o, DiagonalBraiding):
                entry["exponents"] = [list(r) for r in o.exponents]
                entry["q_diagram"] = q_diagram(o).text()
            else:
                entry["label"] = str(self.labels[idx] if self.labels else o)
            objs.append(entry)
        edges = [{"from": a, "reflection": i + 1, "to": t}
                 for (a, i), t in sorted(self.edges.items())]
        return {"rank": self.rank, "status": self.status, "detail": self.detail,
                "objects": objs, "edges": edges,
                "q_diagram_types": len(self.q_diagram_types()) if self.braidings() else None,
                "cartan_types": len(self.cartan_types())}

    def to_dot(self):
        lines = ["digraph cartan_graph {"]
        for idx, o in enumerate(self.objects):
            known = idx < len(self.cartan) and self.cartan[idx] is not None
            C = " ".join(str(list(r)) for r in self.cartan[idx]) if known else "?"
            desc = q_diagram(o).text() if isinstance(o, DiagonalBraiding) else str(o)
            lines.append(f'  a{idx} [label="a{idx}\\n{desc}\\nC={C}"];')
        for (a, i), t in sorted(self.edges.items()):
            if a <= t:
                lines.append(f'  a{a} -> a{t} [label="R{i + 1}", dir=both];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def weyl_groupoid(b: DiagonalBraiding, max_objects=DEFAULT_MAX_OBJECTS,
                  max_cartan_entry=DEFAULT_MAX_CARTAN) -> CartanGraph:
    """Breadth-first search over reflections; objects keyed by the exponent matrix."""
    g = CartanGraph(b.rank)
    index = {b: 0}
    g.objects.append(b)
    queue = deque([0])
    while queue:
        a = queue.popleft()
        obj = g.objects[a]
        try:
            C = cartan_matrix(obj)
        except NotIFinite as exc:
            g.status = "not_i_finite"
            g.detail = f"object {a}: {exc}"
            g.cartan.append(None)
            return _trim_graph(g)
        if any(-x > max_cartan_entry for row in C for x in row):
            g.status = "infinite"
            g.detail = f"object {a}: Cartan entry beyond {max_cartan_entry}"
            g.cartan.append(C)
            return _trim_graph(g)
        g.cartan.append(C)
        for i in range(b.rank):
            t = reflect(obj, i)
            if t not in index:
                if len(g.objects) >= max_objects:
                    g.status = "infinite"
                    g.detail = f"more than {max_objects} objects"
                    return _trim_graph(g)
                index[t] = len(g.objects)
                g.objects.append(t)
                queue.append(index[t])
            g.edges[(a, i)] = index[t]
    return g


def _trim_graph(g):
    # keep the discovered part consistent: drop objects without a Cartan matrix record
    while len(g.cartan) < len(g.objects):
        g.cartan.append(None)
    return g


# --- real roots ---------------------------------------------------------------------

def _matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return tuple(tuple(sum(A[r][t] * B[t][c] for t in range(m)) for c in range(p)) for r in range(n))


def _matvec(A, v):
    return tuple(sum(A[r][c] * v[c] for c in range(len(v))) for r in range(len(A)))


def _inverse(A):
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(r == c)) for c in range(n)] for r, row in enumerate(A)]
    for col in range(n):
        p = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[p] = M[p], M[col]
        piv = M[col][col]
        M[col] = [x / piv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return tuple(tuple(row[n:]) for row in M)


def _sign(v):
    if all(x >= 0 for x in v):
        return 1
    if all(x <= 0 for x in v):
        return -1
    return 0


@dataclass
class RootSet:
    rank: int
    positive: set = field(default_factory=set)
    per_object: dict = field(default_factory=dict)
    chambers: list = field(default_factory=list)
    status: str = "finite"
    detail: str = None

    def sorted_positive(self):
        return sorted(self.positive, key=lambda v: (sum(v), tuple(-x for x in v)))

    @property
    def all_roots(self):
        return self.positive | {tuple(-x for x in v) for v in self.positive}

    def chamber_independent(self):
        sizes = {len(s) for s in self.per_object.values()}
        return len(sizes) <= 1

    def to_json(self):
        return {"status": self.status, "detail": self.detail,
                "positive": [list(v) for v in self.sorted_positive()],
                "count": len(self.positive),
                "chambers": len(self.chambers),
                "objects": len(self.per_object)}


def real_roots(source, max_objects=DEFAULT_MAX_OBJECTS, max_cartan_entry=DEFAULT_MAX_CARTAN,
               depth=DEFAULT_DEPTH) -> RootSet:
    """Images W alpha_j of the simple roots over all composites W of reflections.

    ``source`` is a DiagonalBraiding or a CartanGraph.  Each state is a pair
    (object, W) with W mapping that object's coordinates to the base chamber.
    Exceeding a bound gives status "infinite", never an exception.
    """
    g = source if isinstance(source, CartanGraph) else weyl_groupoid(source, max_objects, max_cartan_entry)
    n = g.rank
    rs = RootSet(n)
    if not g.is_finite:
        rs.status, rs.detail = g.status, g.detail
        return rs
    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    seen = {(0, ident)}
    states = [(0, ident)]
    frontier = [(0, ident)]
    refl = {}
    for level in range(depth):
        nxt = []
        for a, W in frontier:
            for i in range(n):
                key = (a, i)
                if key not in refl:
                    refl[key] = reflection_matrix(g.cartan[a], i)
                t = g.edges[key]
                W2 = _matmul(W, refl[key])
                if (t, W2) not in seen:
                    seen.add((t, W2))
                    states.append((t, W2))
                    nxt.append((t, W2))
        frontier = nxt
        if not frontier:
            break
        if len(states) > max_objects * 64:
            frontier = []
            rs.status, rs.detail = "infinite", "too many chambers"
            break
    if frontier:
        rs.status, rs.detail = "infinite", f"root search exceeded depth {depth}"
    roots = set()
    for _, W in states:
        for j in range(n):
            roots.add(tuple(W[r][j] for r in range(n)))
    rs.positive = {v for v in roots if _sign(v) > 0}
    rs.chambers = states
    all_roots = rs.positive | {tuple(-x for x in v) for v in rs.positive}
    rs.per_object[0] = rs.positive
    for a, W in states:
        if a in rs.per_object:
            continue
        Winv = _inverse(W)
        local = set()
        for v in all_roots:
            u = _matvec(Winv, v)
            if all(x.denominator == 1 for x in u) and _sign(u) > 0:
                local.add(tuple(int(x) for x in u))
        rs.per_object[a] = local
    bad = [v for v in roots if _sign(v) == 0]
    if bad:
        rs.status, rs.detail = "not_sign_coherent", f"mixed-sign root {bad[0]}"
    return rs


def crystallographic_check(r: RootSet, g: CartanGraph = None) -> bool:
    """Every root has integer, sign-coherent coordinates in every chamber basis."""
    if not r.positive:
        return True
    roots = r.all_roots
    for _, W in r.chambers:
        Winv = _inverse(W)
        for v in roots:
            u = _matvec(Winv, v)
            if any(x.denominator != 1 for x in u) or _sign(u) == 0:
                return False
    return True


def validate_axioms(g: CartanGraph, r: RootSet) -> list:
    """Violations of (C1) (C2) (M1) (M2) (R1)-(R4) and the max formula; empty if all hold."""
    out = []
    n = g.rank
    for a in range(g.n_objects):
        C = g.cartan[a]
        if C is None:
            out.append(f"object {a}: no Cartan matrix")
            continue
        for i in range(n):
            if C[i][i] != 2:
                out.append(f"M1: c_{i + 1}{i + 1} != 2 at object {a}")
            for j in range(n):
                if i != j and C[i][j] > 0:
                    out.append(f"M1: c_{i + 1}{j + 1} > 0 at object {a}")
                if i != j and (C[i][j] == 0) != (C[j][i] == 0):
                    out.append(f"M2: zero pattern of c_{i + 1}{j + 1} at object {a}")
            t = g.edges.get((a, i))
            if t is None:
                out.append(f"C1: missing reflection {i + 1} at object {a}")
                continue
            if g.edges.get((t, i)) != a:
                out.append(f"C1: rho_{i + 1}^2 != id at object {a}")
            if g.cartan[t] is not None and tuple(C[i]) != tuple(g.cartan[t][i]):
                out.append(f"C2: row {i + 1} differs between objects {a} and {t}")
    for a in range(g.n_objects):
        pos = r.per_object.get(a)
        if pos is None:
            out.append(f"R: no roots recorded at object {a}")
            continue
        if any(_sign(v) <= 0 for v in pos):
            out.append(f"R1: non-positive root in R+ at object {a}")
        for i in range(n):
            e = tuple(int(k == i) for k in range(n))
            if e not in pos:
                out.append(f"R2: alpha_{i + 1} missing at object {a}")
            for m in range(2, 2 * DEFAULT_MAX_CARTAN + 2):
                if tuple(m * x for x in e) in pos:
                    out.append(f"R2: {m} alpha_{i + 1} is a root at object {a}")
        C = g.cartan[a]
        if C is None:
            continue
        for i in range(n):
            t = g.edges.get((a, i))
            if t is None or t not in r.per_object:
                continue
            S = reflection_matrix(C, i)
            full = pos | {tuple(-x for x in v) for v in pos}
            img = {_matvec(S, v) for v in full}
            tgt = r.per_object[t]
            tgt_full = tgt | {tuple(-x for x in v) for v in tgt}
            if img != tgt_full:
                out.append(f"R3: s_{i + 1} does not map R at object {a} onto R at object {t}")
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                e_i = tuple(int(k == i) for k in range(n))
                e_j = tuple(int(k == j) for k in range(n))
                m = 0
                while tuple(e_j[k] + (m + 1) * e_i[k] for k in range(n)) in pos:
                    m += 1
                if -m != C[i][j]:
                    out.append(f"max formula: c_{i + 1}{j + 1} = {C[i][j]} but string length {m} at object {a}")
                if i < j:
                    mij = sum(1 for v in pos if all(v[k] == 0 for k in range(n) if k not in (i, j)))
                    x = a
                    for _ in range(mij):
                        x = g.edges[(g.edges[(x, j)], i)]
                    if x != a:
                        out.append(f"R4: (rho_{i + 1} rho_{j + 1})^{mij} moves object {a}")
    return out


# --- PBW numerics ------------------------------------------------------------------

def pbw_heights(b: DiagonalBraiding, r: RootSet):
    """(height, order of chi(beta, beta)) per positive root; order None when infinite."""
    out = []
    for v in r.sorted_positive():
        e = chi(b, v, v)
        if b.generic:
            out.append((sum(v), None))
        else:
            o = zeta_order(b.order, e)
            out.append((sum(v), None if o == 1 else o))
    return out


def pbw_dimension(b: DiagonalBraiding, r: RootSet):
    """prod over positive roots of ord chi(beta, beta); None if some factor is infinite."""
    total = 1
    for _, o in pbw_heights(b, r):
        if o is None:
            return None
        total *= o
    return total


def pbw_series(b: DiagonalBraiding, r: RootSet):
    """Coefficients of prod (1 - t^{N h}) / (1 - t^h) over positive roots."""
    poly = [1]
    for h, o in pbw_heights(b, r):
        if o is None:
            return None
        factor = [0] * ((o - 1) * h + 1)
        for t in range(o):
            factor[t * h] = 1
        new = [0] * (len(poly) + len(factor) - 1)
        for i, x in enumerate(poly):
            if x:
                for j, y in enumerate(factor):
                    if y:
                        new[i + j] += x * y
        poly = new
    return poly
