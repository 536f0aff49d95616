"""
Nichols algebra computations: quantum symmetrizers, graded dimensions,
relations, shuffle coproduct, primitivity and skew derivations.

The engine never forms Sym_k as a k!-term sum.  It uses the factorization
Sym_k = (Sym_{k-1} (x) id) T_k, where T_k = sum over m of rho(tau_{k-1}...tau_m)
moves the letter in position m to the end.  If R is a row basis of Sym_{k-1},
then (R (x) id) T_k has the same row space as Sym_k, so only a small matrix
per degree block is ever eliminated.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .braiding import DiagonalBraiding, apply_word, degree_blocks
from .braiding import _c_on_positions as c_on_positions
from .combinatorics import (enumerate_shuffles, enumerate_sym, inverse,
                            matsumoto_lift, q_binomial, reduced_word)
from .cyclotomic import Cyclotomic
from .errors import DegreeTooLarge, NotDiagonal, SpecError
from .laurent import LaurentPoly, RationalFunction
from .linalg import bareiss_echelon, kernel_from_rref, rref

DEFAULT_BLOCK_CAP = 20000
DEFAULT_KMAX = 12


# --- elements of the tensor algebra -------------------------------------------

class FreeElement:
    """A homogeneous element of T(X): index word (0-based) -> scalar."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs, degree=None):
        coeffs = {tuple(w): c for w, c in coeffs.items() if c}
        if degree is None:
            degree = len(next(iter(coeffs))) if coeffs else 0
        for w in coeffs:
            if len(w) != degree:
                raise SpecError("FreeElement must be homogeneous")
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def monomial(cls, word, coeff=1):
        return cls({tuple(word): coeff}, len(word))

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FreeElement):
            return self.degree == other.degree and self.coeffs == other.coeffs
        return NotImplemented

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return FreeElement(out, self.degree)

    def __neg__(self):
        return FreeElement({w: -c for w, c in self.coeffs.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return FreeElement({w: s * c for w, c in self.coeffs.items()}, self.degree)

    def tensor(self, other):
        return FreeElement({a + b: x * y for a, x in self.coeffs.items()
                            for b, y in other.coeffs.items()}, self.degree + other.degree)

    def terms(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        body = " + ".join(f"({c})*x{''.join(str(i + 1) for i in w) or '1'}" for w, c in self.terms())
        return f"FreeElement({body or '0'})"

    def to_json(self):
        return {",".join(str(i + 1) for i in w): scalar_json(c) for w, c in self.terms()}


def scalar_json(c):
    if isinstance(c, Cyclotomic):
        return c.to_json()
    if isinstance(c, LaurentPoly):
        return c.to_json()
    if isinstance(c, RationalFunction):
        return {"num": [str(x) for x in c.num], "den": [str(x) for x in c.den]}
    return str(c)


# --- results --------------------------------------------------------------------

@dataclass
class BlockResult:
    degree: object
    dim: int
    rank: int
    kernel: list = None
    matrix: list = None

    def __post_init__(self):
        if self.kernel is not None:
            assert self.rank + len(self.kernel) == self.dim


@dataclass
class SymmetrizerResult:
    k: int
    blocks: list = field(default_factory=list)
    probabilistic: bool = False

    @property
    def rank(self):
        return sum(b.rank for b in self.blocks)

    @property
    def kernel(self):
        out = []
        for b in self.blocks:
            out.extend(b.kernel or [])
        return out


@dataclass
class HilbertSeries:
    dims: list
    terminated: bool
    total: int = None
    blocks: list = field(default_factory=list)
    probabilistic: bool = False

    @property
    def poly(self):
        d = list(self.dims)
        while d and d[-1] == 0:
            d.pop()
        return d

    def is_palindromic(self):
        p = self.poly
        return p == p[::-1]


# --- the T_k image ------------------------------------------------------------------

def t_image(b, w):
    """T_k e_w as a dict, k = len(w)."""
    k = len(w)
    if isinstance(b, DiagonalBraiding):
        out = {}
        one = b.one()
        for m in range(k):
            a = w[m]
            s = one
            for t in range(m + 1, k):
                s = s * b.q(a, w[t])
            u = w[:m] + w[m + 1:] + (a,)
            out[u] = out[u] + s if u in out else s
        return {u: s for u, s in out.items() if s}
    base = {w: b.one()}
    v = dict(base)
    for j in range(1, k):
        v = c_on_positions(b, v, j - 1)
        for u, s in base.items():
            v[u] = v[u] + s if u in v else s
        v = {u: s for u, s in v.items() if s}
    return v


def _step_matrix(b, words, prev_rows):
    """Rows of (R_{k-1} (x) id) T_k restricted to one block, densely over ``words``."""
    zero = b.zero()
    n = len(words)
    rows = {}
    for ci, w in enumerate(words):
        for u, s in t_image(b, w).items():
            prefix, j = u[:-1], u[-1]
            pkey = b.block_key(prefix)
            for r, row in enumerate(prev_rows.get(pkey, ())):
                c = row.get(prefix)
                if c:
                    key = (j, pkey, r)
                    target = rows.get(key)
                    if target is None:
                        target = rows[key] = [zero] * n
                    target[ci] = target[ci] + s * c
    return [r for r in rows.values() if any(r)]


def _to_field(x):
    if isinstance(x, LaurentPoly):
        return RationalFunction.from_laurent(x)
    return x


def _block_task(b, key, words, prev_rows, want_kernel):
    mat = _step_matrix(b, words, prev_rows)
    n = len(words)
    kernel = None
    if b.generic:
        ech, pivots = bareiss_echelon(mat, n, normalize=True)
        basis = [{words[c]: x for c, x in enumerate(row) if x} for row in ech]
        if want_kernel:
            fmat = [[_to_field(x) for x in row] for row in ech]
            frows, fpiv = rref(fmat, n)
            zero, one = RationalFunction([]), RationalFunction([1])
            kernel = [FreeElement({words[c]: x for c, x in enumerate(v) if x}, len(words[0]))
                      for v in kernel_from_rref(frows, fpiv, n, zero, one)]
    else:
        red, pivots = rref(mat, n)
        basis = [{words[c]: x for c, x in enumerate(row) if x} for row in red]
        if want_kernel:
            kernel = [FreeElement({words[c]: x for c, x in enumerate(v) if x}, len(words[0]))
                      for v in kernel_from_rref(red, pivots, n, b.zero(), b.one())]
    return key, len(pivots), basis, kernel


def specialize_braiding(b, prime=31, power=None, seed=0):
    """Generic-q braiding evaluated at q = zeta_p^r (the probabilistic path)."""
    if power is None:
        power = random.Random(seed).randrange(1, prime)
    return DiagonalBraiding([[m * power for m in row] for row in b.exponents], order=prime)


class NicholsEngine:
    """Degree-by-degree symmetrizer ranks with cached row bases."""

    def __init__(self, braiding, block_cap=DEFAULT_BLOCK_CAP, workers=1,
                 probabilistic=False, prime=31, seed=0):
        self.original = braiding
        self.probabilistic = bool(probabilistic and braiding.generic)
        self.braiding = specialize_braiding(braiding, prime, seed=seed) if self.probabilistic else braiding
        self.block_cap = block_cap
        self.workers = max(1, int(workers))
        b = self.braiding
        self._rows = {0: {b.block_key(()): [{(): b.one()}]}}
        self._results = {0: SymmetrizerResult(0, [BlockResult(b.block_key(()), 1, 1, [])],
                                              self.probabilistic)}
        self._kernels_done = {0}

    def _compute(self, k, want_kernel):
        b = self.braiding
        blocks = degree_blocks(b, k)
        big = max((blk.dim for blk in blocks), default=0)
        if big > self.block_cap:
            raise DegreeTooLarge(k, big, self.block_cap)
        prev = self._rows[k - 1]
        tasks = []
        for blk in blocks:
            needed = {}
            for x in range(b.dim):
                pkey = b.key_div_letter(blk.degree, x)
                if pkey in prev:
                    needed[pkey] = prev[pkey]
            tasks.append((b, blk.degree, blk.basis, needed, want_kernel))
        if self.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                outs = list(pool.map(_block_task, *zip(*tasks)))
        else:
            outs = [_block_task(*t) for t in tasks]
        rows = {}
        res = SymmetrizerResult(k, [], self.probabilistic)
        for blk, (key, rank, basis, kernel) in zip(blocks, outs):
            if basis:
                rows[key] = basis
            res.blocks.append(BlockResult(key, blk.dim, rank, kernel))
        self._rows[k] = rows
        self._results[k] = res
        if want_kernel:
            self._kernels_done.add(k)

    def degree(self, k, want_kernel=False) -> SymmetrizerResult:
        if k < 0:
            raise ValueError("degree must be non-negative")
        for d in range(1, k + 1):
            if d not in self._results or (d == k and want_kernel and d not in self._kernels_done):
                self._compute(d, want_kernel and d == k)
        return self._results[k]

    def row_basis(self, k):
        self.degree(k)
        return self._rows[k]

    def graded_dimension(self, k) -> int:
        return self.degree(k).rank

    def hilbert_series(self, k_max=DEFAULT_KMAX) -> HilbertSeries:
        dims, blocks = [], []
        terminated = False
        for k in range(k_max + 1):
            res = self.degree(k)
            dims.append(res.rank)
            blocks.append(res.blocks)
            if k >= 1 and dims[-1] == 0 and dims[-2] == 0:
                terminated = True
                break
        total = sum(dims) if terminated else None
        return HilbertSeries(dims, terminated, total, blocks, self.probabilistic)


def _engine(b, engine=None, **kw):
    return engine if engine is not None else NicholsEngine(b, **kw)


def symmetrizer(b, k, with_matrices=False, **kw) -> SymmetrizerResult:
    """Ranks and kernel bases of Sym_k per degree block."""
    eng = NicholsEngine(b, **kw)
    res = eng.degree(k, want_kernel=True)
    if with_matrices:
        for blk_res, blk in zip(res.blocks, degree_blocks(eng.braiding, k)):
            blk_res.matrix = symmetrizer_matrix(eng.braiding, blk)
    return res


def graded_dimension(b, k, **kw) -> int:
    return NicholsEngine(b, **kw).graded_dimension(k)


def hilbert_series(b, k_max=DEFAULT_KMAX, **kw) -> HilbertSeries:
    return NicholsEngine(b, **kw).hilbert_series(k_max)


def relations(b, k, engine=None, **kw) -> list:
    """Kernel basis of Sym_k (all blocks, block order) as FreeElements."""
    if k < 2:
        raise ValueError("relations start in degree 2")
    return _engine(b, engine, **kw).degree(k, want_kernel=True).kernel


# --- explicit symmetrizer operators -------------------------------------------

class _SymCache:
    def __init__(self, b):
        self.b = b
        self.cache = {(): {(): b.one()}}

    def image(self, w):
        """Sym_k e_w via the factorization, memoized over words."""
        w = tuple(w)
        got = self.cache.get(w)
        if got is not None:
            return got
        out = {}
        for u, s in t_image(self.b, w).items():
            prefix, j = u[:-1], u[-1]
            for v, c in self.image(prefix).items():
                key = v + (j,)
                t = s * c
                out[key] = out[key] + t if key in out else t
        out = {u: s for u, s in out.items() if s}
        self.cache[w] = out
        return out


def apply_symmetrizer(b, e: FreeElement, cache=None) -> FreeElement:
    cache = cache or _SymCache(b)
    out = {}
    for w, c in e.coeffs.items():
        for u, s in cache.image(w).items():
            t = s * c
            out[u] = out[u] + t if u in out else t
    return FreeElement(out, e.degree)


def _vectors_to_matrix(b, block, images):
    idx = block.index()
    n = block.dim
    mat = [[b.zero()] * n for _ in range(n)]
    for col, img in enumerate(images):
        for u, s in img.items():
            mat[idx[u]][col] = s
    return mat


def symmetrizer_matrix(b, block):
    """Sym_k on a block as a matrix, built through the factorization."""
    cache = _SymCache(b)
    return _vectors_to_matrix(b, block, [cache.image(w) for w in block.basis])


def symmetrizer_matrix_naive(b, block):
    """Sym_k on a block as the sum over all k! Matsumoto lifts (oracle, small k).

    rho of each permutation is memoized through the left factor recursion
    sigma = tau_i * sigma' with |sigma| = 1 + |sigma'|.
    """
    k = len(block.basis[0]) if block.basis else 0
    memo = {}

    def rho_images(p):
        got = memo.get(p)
        if got is not None:
            return got
        word = reduced_word(p)
        if not word:
            imgs = [{w: b.one()} for w in block.basis]
        else:
            i = word[0]
            rest = list(p)
            # tau_i * sigma' = p  =>  sigma' = tau_i * p, i.e. swap values i and i+1
            rest = tuple(i + 1 if x == i else i if x == i + 1 else x for x in rest)
            imgs = [c_on_positions(b, v, i - 1) for v in rho_images(rest)]
        memo[p] = imgs
        return imgs

    total = [dict() for _ in block.basis]
    for p in enumerate_sym(k):
        for col, img in enumerate(rho_images(p)):
            acc = total[col]
            for u, s in img.items():
                acc[u] = acc[u] + s if u in acc else s
    total = [{u: s for u, s in acc.items() if s} for acc in total]
    return _vectors_to_matrix(b, block, total)


def shuffle_operator(b, i, j, vec):
    """Sym_{i,j} = sum over (i,j)-shuffles tau of rho(lift(tau^-1))."""
    out = {}
    for tau in enumerate_shuffles(i, j):
        img = apply_word(b, vec, matsumoto_lift(inverse(tau)))
        for u, s in img.items():
            out[u] = out[u] + s if u in out else s
    return {u: s for u, s in out.items() if s}


@dataclass
class CoproductComponent:
    """The (i, j) component of the coproduct, written in X^{(x)i} (x) X^{(x)j}."""
    i: int
    j: int
    element: FreeElement

    def is_zero(self):
        return self.element.is_zero()

    def pairs(self):
        """List of (left, right) FreeElements, one per basis tensor."""
        out = []
        for w, c in self.element.terms():
            out.append((FreeElement({w[:self.i]: c}, self.i),
                        FreeElement({w[self.i:]: 1}, self.j)))
        return out


def shuffle_coproduct(b, e: FreeElement) -> list:
    k = e.degree
    return [CoproductComponent(i, k - i, FreeElement(shuffle_operator(b, i, k - i, e.coeffs), k))
            for i in range(k + 1)]


def is_primitive(b, e: FreeElement) -> bool:
    k = e.degree
    if k < 1:
        raise ValueError("primitivity is tested in positive degree")
    return all(not shuffle_operator(b, i, k - i, e.coeffs) for i in range(1, k))


# --- skew derivations -------------------------------------------------------------

def skew_derivation(b, i, e: FreeElement) -> FreeElement:
    """d_i of e: strike one letter x_i, weighted by q_{w_s, i} for every letter to its left."""
    if not isinstance(b, DiagonalBraiding):
        raise NotDiagonal("skew derivations are implemented for diagonal braidings")
    if e.degree < 1:
        return FreeElement({}, 0)
    out = {}
    for w, c in e.coeffs.items():
        s = c
        for p, x in enumerate(w):
            if x == i:
                u = w[:p] + w[p + 1:]
                out[u] = out[u] + s if u in out else s
            s = s * b.q(x, i)
    return FreeElement(out, e.degree - 1)


def _span_basis(b, elements):
    """A basis (as FreeElements) of the span of ``elements``."""
    elements = [e for e in elements if e]
    if not elements:
        return []
    words = sorted({w for e in elements for w in e.coeffs})
    zero = _to_field(b.zero())
    mat = [[_to_field(e.coeffs.get(w, zero)) if w in e.coeffs else zero for w in words]
           for e in elements]
    red, _ = rref(mat, len(words))
    return [FreeElement({words[c]: x for c, x in enumerate(row) if x}, elements[0].degree)
            for row in red]


def is_zero_in_nichols(b, e: FreeElement, depth=None) -> bool:
    """True iff every k-fold composite of skew derivations kills e (k = degree).

    The composites are propagated level by level, keeping only a basis of
    their span.  With ``depth`` smaller than the degree the answer only says
    that no nonzero derivative survives ``depth`` steps.
    """
    if not isinstance(b, DiagonalBraiding):
        raise NotDiagonal("skew derivations are implemented for diagonal braidings")
    level = [e] if e else []
    steps = e.degree if depth is None else min(depth, e.degree)
    for _ in range(steps):
        if not level:
            return True
        nxt = [skew_derivation(b, i, v) for v in level for i in range(b.rank)]
        level = _span_basis(b, nxt)
    return not level


# --- q-commutators ------------------------------------------------------------------

def braided_commutator(b, i, j) -> FreeElement:
    """[x_i, x_j]_c = x_i x_j - q_ij x_j x_i."""
    return rosso_element(b, i, j, 1)


def rosso_element(b, i, j, n) -> FreeElement:
    """ad_c(x_i)^n (x_j) via the explicit sum over k of
    (-1)^k q_ij^k q_ii^(k(k-1)/2) binom(n,k)_{q_ii} x_i^(n-k) x_j x_i^k."""
    qii, qij = b.q(i, i), b.q(i, j)
    out = {}
    for k in range(n + 1):
        coef = (qij ** k) * (qii ** (k * (k - 1) // 2)) * q_binomial(n, k, qii)
        if k % 2:
            coef = -coef
        w = (i,) * (n - k) + (j,) + (i,) * k
        out[w] = out[w] + coef if w in out else coef
    return FreeElement(out, n + 1)


# --- Hilbert series factorization ---------------------------------------------------

def _int_divmod(num, den):
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = Fraction(num[shift + len(den) - 1], den[-1])
        if c.denominator != 1:
            return None, None
        q[shift] = int(c)
        for t, d in enumerate(den):
            num[shift + t] -= q[shift] * d
    rem = [x for x in num if x]
    return q, rem


def factor_hilbert(h):
    """Greedy split of sum d_k t^k into factors 1 + t^h + ... + t^((l-1)h).

    Returns a list of (height, order) pairs, or None if the greedy pass
    gets stuck.
    """
    if isinstance(h, HilbertSeries):
        if not h.terminated:
            return None
        poly = h.poly
    else:
        poly = list(h)
        while poly and poly[-1] == 0:
            poly.pop()
    if not poly or poly[0] != 1:
        return None
    factors = []
    while len(poly) > 1:
        height = next(i for i in range(1, len(poly)) if poly[i])
        found = False
        for order in range(2, (len(poly) - 1) // height + 2):
            den = [0] * ((order - 1) * height + 1)
            for t in range(order):
                den[t * height] = 1
            if len(den) > len(poly):
                break
            q, rem = _int_divmod(poly, den)
            if q is not None and not rem:
                factors.append((height, order))
                poly = q
                while poly and poly[-1] == 0:
                    poly.pop()
                found = True
                break
        if not found:
            return None
    if poly != [1]:
        return None
    return factors


def factors_text(factors):
    if factors is None:
        return "none"
    parts = {}
    for h, l in factors:
        terms = ["1"] + [("t" if t * h == 1 else f"t^{t * h}") for t in range(1, l)]
        s = "(" + "+".join(terms) + ")"
        parts[s] = parts.get(s, 0) + 1
    return "".join(s if c == 1 else f"{s}^{c}" for s, c in parts.items())
