"""
Finite permutation groups and the Yetter-Drinfeld braiding of a conjugacy
class with a one-dimensional character of the centralizer.

Group elements are 0-based permutation tuples; p*q means p(q(x)).
"""

from __future__ import annotations

from collections import deque
from math import gcd

from .braiding import MatrixBraiding
from .cyclotomic import Cyclotomic, embed_order
from .errors import NotACharacter, NotInClass, SpecError

MAX_POINTS = 12


def pmul(p, q):
    return tuple(p[i] for i in q)


def pinv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


class PermutationGroup:
    """The group generated by ``generators``; elements listed by BFS from the identity."""

    def __init__(self, generators, degree=None):
        gens = [tuple(g) for g in generators]
        if degree is None:
            degree = len(gens[0]) if gens else 1
        if degree > MAX_POINTS:
            raise SpecError(f"permutation groups on more than {MAX_POINTS} points are not supported")
        for g in gens:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise SpecError(f"{g} is not a permutation of 0..{degree - 1}")
        self.degree = degree
        self.generators = gens
        self.identity = tuple(range(degree))
        self.elements = self._closure(gens)
        self._set = set(self.elements)

    def _closure(self, gens):
        seen = {self.identity}
        order = [self.identity]
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = pmul(s, x)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        return order

    def __contains__(self, g):
        return tuple(g) in self._set

    def __len__(self):
        return len(self.elements)

    def conjugacy_class(self, h):
        """(class elements, coset representatives t_i with t_i h t_i^-1 = h_i)."""
        h = tuple(h)
        if h not in self:
            raise NotInClass(f"{h} is not an element of the group")
        reps = {}
        cls = []
        for t in self.elements:
            c = pmul(pmul(t, h), pinv(t))
            if c not in reps:
                reps[c] = t
                cls.append(c)
        return cls, [reps[c] for c in cls]

    def centralizer(self, h):
        h = tuple(h)
        return [g for g in self.elements if pmul(g, h) == pmul(h, g)]


def extend_character(group, h, values):
    """Extend a character given on some centralizer elements to the whole centralizer.

    ``values`` maps permutation tuples to Cyclotomic scalars.  Raises
    NotACharacter if the data is inconsistent or does not determine chi.
    """
    cent = group.centralizer(h)
    cent_set = set(cent)
    gens = [tuple(g) for g in values]
    for g in gens:
        if g not in cent_set:
            raise NotACharacter(f"{g} does not commute with the class representative")
    order = 1
    for v in values.values():
        order = order * v.order // gcd(order, v.order)
    vals = {g: embed_order(v, order) for g, v in values.items()}
    chi = {group.identity: Cyclotomic.one(order)}
    queue = deque([group.identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = pmul(g, x)
            val = vals[g] * chi[x]
            if y in chi:
                if chi[y] != val:
                    raise NotACharacter(f"inconsistent values at {y}")
            else:
                chi[y] = val
                queue.append(y)
    if len(chi) != len(cent):
        raise NotACharacter("given elements do not generate the centralizer")
    for a in cent:
        for b in cent:
            if chi[pmul(a, b)] != chi[a] * chi[b]:
                raise NotACharacter(f"chi fails multiplicativity at {a}, {b}")
    return chi, order


class YDModule:
    """A Yetter-Drinfeld module with a monomial basis: g.v_i = scalar * v_j."""

    def __init__(self, group, degrees, action, order):
        self.group = group
        self.degrees = degrees
        self._action = action
        self.order = order

    @property
    def dim(self):
        return len(self.degrees)

    def act(self, g, i):
        j, s = self._action(tuple(g), i)
        return j, embed_order(s, self.order) if s.order != self.order else s

    def braiding(self) -> MatrixBraiding:
        d = self.dim
        zero = Cyclotomic.zero(self.order)
        mat = [[zero] * (d * d) for _ in range(d * d)]
        for a in range(d):
            for b in range(d):
                j, s = self.act(self.degrees[a], b)
                mat[j * d + a][a * d + b] = s
        return MatrixBraiding(mat, self.order, labels=self.degrees, grading="group")


def yd_module(group, class_rep, centralizer_character) -> YDModule:
    h = tuple(class_rep)
    cls, reps = group.conjugacy_class(h)
    chi, order = extend_character(group, h, centralizer_character)
    index = {c: i for i, c in enumerate(cls)}

    def action(g, i):
        j = index[pmul(pmul(g, cls[i]), pinv(g))]
        return j, chi[pmul(pmul(pinv(reps[j]), g), reps[i])]

    mod = YDModule(group, cls, action, order)
    mod.class_elements = cls
    mod.coset_reps = reps
    mod.character = chi
    return mod


def build_yd_braiding(group, class_rep, centralizer_character) -> MatrixBraiding:
    """Braiding v_g (x) w_h -> g.w_h (x) v_g on O_[h]^chi."""
    return yd_module(group, class_rep, centralizer_character).braiding()


def direct_sum(modules) -> YDModule:
    group = modules[0].group
    for m in modules[1:]:
        if m.group.elements != group.elements:
            raise SpecError("summands must be defined over the same group")
    order = 1
    for m in modules:
        order = order * m.order // gcd(order, m.order)
    offsets = []
    degrees = []
    for m in modules:
        offsets.append(len(degrees))
        degrees.extend(m.degrees)

    def action(g, i):
        for k in range(len(modules) - 1, -1, -1):
            if i >= offsets[k]:
                j, s = modules[k].act(g, i - offsets[k])
                return j + offsets[k], embed_order(s, order)

    return YDModule(group, degrees, action, order)


def build_yd_sum(group, summands) -> MatrixBraiding:
    """Braiding of a direct sum of O_[h]^chi; summands are (class_rep, character) pairs."""
    mods = [yd_module(group, h, chi) for h, chi in summands]
    return direct_sum(mods).braiding()
