"""
Braided vector spaces and the braid group action on tensor powers.

Basis vectors of X are 0..d-1; a basis vector of X^{(x)k} is an index word
(tuple of length k).  Vectors are dicts word -> scalar with zeros dropped.
The letter i (1-based) acts by c on tensor positions i, i+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd

from .cyclotomic import Cyclotomic, embed_order
from .errors import (InternalMismatch, LetterOutOfRange, NotInvertible,
                     YangBaxterViolation, SpecError)
from .laurent import LaurentPoly
from .linalg import rref


def _lcm(a, b):
    return a * b // gcd(a, b)


class DiagonalBraiding:
    """c(x_i (x) x_j) = q_ij x_j (x) x_i with q_ij = zeta_N^a_ij or q^m_ij."""

    is_diagonal = True

    def __init__(self, exponents, order=None, mode=None):
        if mode is None:
            mode = "generic" if order is None else "root_of_unity"
        if mode not in ("root_of_unity", "generic"):
            raise SpecError(f"unknown mode {mode!r}")
        n = len(exponents)
        if any(len(row) != n for row in exponents):
            raise SpecError("exponent matrix must be square")
        self.mode = mode
        if mode == "root_of_unity":
            if order is None or order < 1:
                raise SpecError("root_of_unity mode needs a positive order")
            self.order = int(order)
            self.exponents = tuple(tuple(int(a) % self.order for a in row) for row in exponents)
        else:
            self.order = None
            self.exponents = tuple(tuple(int(a) for a in row) for row in exponents)
        self.rank = n
        self.dim = n
        self._q = [[self._scalar(a) for a in row] for row in self.exponents]

    def _scalar(self, a):
        if self.mode == "root_of_unity":
            return Cyclotomic.zeta(self.order, a)
        return LaurentPoly.monomial(a)

    @property
    def generic(self):
        return self.mode == "generic"

    def q(self, i, j):
        return self._q[i][j]

    def zero(self):
        return Cyclotomic.zero(self.order) if self.order else LaurentPoly()

    def one(self):
        return Cyclotomic.one(self.order) if self.order else LaurentPoly.constant(1)

    def scalar_from_exponent(self, a):
        return self._scalar(a % self.order if self.order else a)

    def pair_image(self, a, b):
        return (((b, a), self._q[a][b]),)

    def block_key(self, word):
        deg = [0] * self.rank
        for x in word:
            deg[x] += 1
        return tuple(deg)

    def key_of_letter(self, x):
        deg = [0] * self.rank
        deg[x] = 1
        return tuple(deg)

    def key_mul(self, k1, k2):
        return tuple(a + b for a, b in zip(k1, k2))

    def key_div_letter(self, key, x):
        """Degree of the prefix u when u.x has degree key."""
        out = list(key)
        out[x] -= 1
        return tuple(out)

    def key_json(self, key):
        return list(key)

    def __eq__(self, other):
        return (isinstance(other, DiagonalBraiding) and self.mode == other.mode
                and self.order == other.order and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.mode, self.order, self.exponents))

    def __repr__(self):
        if self.generic:
            return f"DiagonalBraiding({[list(r) for r in self.exponents]}, generic)"
        return f"DiagonalBraiding({[list(r) for r in self.exponents]}, order={self.order})"

    def to_matrix(self) -> MatrixBraiding:
        if self.generic:
            raise SpecError("generic braidings have no cyclotomic matrix form")
        d = self.rank
        zero = self.zero()
        mat = [[zero] * (d * d) for _ in range(d * d)]
        for a in range(d):
            for b in range(d):
                mat[b * d + a][a * d + b] = self._q[a][b]
        labels = [tuple(1 if t == i else 0 for t in range(d)) for i in range(d)]
        return MatrixBraiding(mat, order=self.order, labels=labels, grading="abelian")

    def to_json(self):
        if self.generic:
            return {"kind": "diagonal", "mode": "generic",
                    "exponents": [list(r) for r in self.exponents]}
        return {"kind": "diagonal", "mode": "root_of_unity", "order": self.order,
                "exponents": [list(r) for r in self.exponents]}


class MatrixBraiding:
    """c: X(x)X -> X(x)X as a d^2 x d^2 matrix; column a*d+b is c(e_a (x) e_b).

    Optional degree labels enable block decomposition: ``grading`` is
    "abelian" (labels are integer vectors, added) or "group" (labels are
    permutation tuples, multiplied left to right as p*q = p(q(x))).
    """

    is_diagonal = False
    generic = False
    mode = "root_of_unity"

    def __init__(self, matrix, order, labels=None, grading=None, validate=True):
        size = len(matrix)
        d = int(round(size ** 0.5))
        if d * d != size or any(len(r) != size for r in matrix):
            raise SpecError("braiding matrix must be d^2 x d^2")
        self.dim = d
        self.rank = d
        self.order = order
        self.matrix = [[embed_order(x, order) if isinstance(x, Cyclotomic) and x.order != order
                        else (x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(order, x))
                        for x in row] for row in matrix]
        images = {}
        for a in range(d):
            for b in range(d):
                col = a * d + b
                images[(a, b)] = tuple(((r // d, r % d), self.matrix[r][col])
                                       for r in range(size) if self.matrix[r][col])
        self._images = images
        self.labels = [tuple(l) for l in labels] if labels is not None else None
        self.grading = grading if labels is not None else None
        if self.labels is not None and len(self.labels) != d:
            raise SpecError("need one degree label per basis vector")
        if validate:
            res = validate_yang_baxter(self)
            if not res.ok:
                raise YangBaxterViolation(res.witness)
            if self.labels is not None:
                self._check_labels()

    def _check_labels(self):
        for (a, b), img in self._images.items():
            k = self.key_mul(self.labels[a], self.labels[b])
            for (x, y), _ in img:
                if self.key_mul(self.labels[x], self.labels[y]) != k:
                    raise SpecError("braiding does not preserve the degree labels")

    def zero(self):
        return Cyclotomic.zero(self.order)

    def one(self):
        return Cyclotomic.one(self.order)

    def pair_image(self, a, b):
        return self._images[(a, b)]

    def key_of_letter(self, x):
        if self.labels is None:
            return "all"
        return self.labels[x]

    def key_mul(self, k1, k2):
        if self.labels is None:
            return "all"
        if self.grading == "group":
            return tuple(k1[i] for i in k2)
        return tuple(a + b for a, b in zip(k1, k2))

    def _key_identity(self):
        if self.labels is None:
            return "all"
        n = len(self.labels[0])
        if self.grading == "group":
            return tuple(range(n))
        return (0,) * n

    def block_key(self, word):
        key = self._key_identity()
        for x in word:
            key = self.key_mul(key, self.key_of_letter(x))
        return key

    def key_div_letter(self, key, x):
        if self.labels is None:
            return "all"
        lab = self.labels[x]
        if self.grading == "group":
            inv = [0] * len(lab)
            for i, v in enumerate(lab):
                inv[v] = i
            return tuple(key[i] for i in inv)
        return tuple(a - b for a, b in zip(key, lab))

    def key_json(self, key):
        if key == "all":
            return "all"
        if self.grading == "group":
            return [v + 1 for v in key]
        return list(key)

    def to_json(self):
        out = {"kind": "matrix", "dim": self.dim, "order": self.order,
               "entries": [[x.to_json() for x in row] for row in self.matrix]}
        if self.labels is not None:
            out["grading"] = self.grading
            out["labels"] = [self.key_json(l) for l in self.labels]
        return out


@dataclass
class YangBaxterCheck:
    ok: bool
    witness: tuple = None


def _c_on_positions(b, vec, pos):
    """Apply c on tensor positions pos, pos+1 (0-based)."""
    out = {}
    for w, coef in vec.items():
        for (x, y), s in b.pair_image(w[pos], w[pos + 1]):
            nw = w[:pos] + (x, y) + w[pos + 2:]
            val = out.get(nw)
            t = s * coef
            out[nw] = t if val is None else val + t
    return {w: c for w, c in out.items() if c}


def validate_yang_baxter(b) -> YangBaxterCheck:
    """Compare (c(x)id)(id(x)c)(c(x)id) with (id(x)c)(c(x)id)(id(x)c) on X^{(x)3}."""
    if isinstance(b, MatrixBraiding):
        rank, pivots = len(rref(b.matrix)[1]), None
        if rank != b.dim * b.dim:
            raise NotInvertible("braiding matrix is singular")
    for w in product(range(b.dim), repeat=3):
        v = {w: b.one()}
        left = _c_on_positions(b, _c_on_positions(b, _c_on_positions(b, v, 0), 1), 0)
        right = _c_on_positions(b, _c_on_positions(b, _c_on_positions(b, v, 1), 0), 1)
        if left != right:
            return YangBaxterCheck(False, w)
    return YangBaxterCheck(True, None)


@dataclass
class TensorBlock:
    degree: object
    basis: list = field(default_factory=list)

    @property
    def dim(self):
        return len(self.basis)

    def index(self):
        return {w: i for i, w in enumerate(self.basis)}


def degree_blocks(b, k: int) -> list:
    """Partition the index words of length k by degree, in order of first appearance."""
    blocks = {}
    for w in product(range(b.dim), repeat=k):
        key = b.block_key(w)
        blk = blocks.get(key)
        if blk is None:
            blk = blocks[key] = TensorBlock(key, [])
        blk.basis.append(w)
    return list(blocks.values())


def apply_letter(b, vec, i):
    return _c_on_positions(b, vec, i - 1)


def apply_word(b, vec, word):
    """rho(c_i1 ... c_il) on vec: the rightmost letter acts first."""
    for i in reversed(word):
        vec = _c_on_positions(b, vec, i - 1)
    return vec


def braid_action(b, word, k: int, block: TensorBlock):
    """Matrix of rho(word) on a degree block (rows and columns in block order)."""
    for i in word:
        if i < 1 or i > k - 1:
            raise LetterOutOfRange(f"letter {i} outside 1..{k - 1}")
    idx = block.index()
    n = block.dim
    zero = b.zero()
    mat = [[zero] * n for _ in range(n)]
    for col, w in enumerate(block.basis):
        img = apply_word(b, {w: b.one()}, word)
        for u, c in img.items():
            row = idx.get(u)
            if row is None:
                raise InternalMismatch(f"braid action left block {block.degree}")
            mat[row][col] = c
    return mat


def flip_braiding(d: int, order: int = 1) -> MatrixBraiding:
    zero, one = Cyclotomic.zero(order), Cyclotomic.one(order)
    mat = [[zero] * (d * d) for _ in range(d * d)]
    for a in range(d):
        for bb in range(d):
            mat[bb * d + a][a * d + bb] = one
    return MatrixBraiding(mat, order)


def common_order(values) -> int:
    n = 1
    for v in values:
        if isinstance(v, Cyclotomic):
            n = _lcm(n, v.order)
    return n
