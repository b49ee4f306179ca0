"""The basic 2-cell structure on monoids: cells are pairs (t, f) with t + f a homomorphism.

``f`` is a homomorphism A -> B (the domain), ``t`` is a map with ``t(0) = 0``
and the codomain is the pointwise sum ``t + f``.  Vertical sum is
``(s, t + f) + (t, f) = (s + t, f)`` and whiskering composes both parts.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import finmon
from .cellcore import Cell, CellStructure, MonoidCategory
from .errors import InvariantBroken, NotAGroup, NotChained
from .finmon import ElementMap, FinMonoid, add_pointwise, compose


def is_member(t: ElementMap, f: ElementMap) -> bool:
    """t(0) = 0 and t(x+y) + f(x) + f(y) == t(x) + f(x) + t(y) + f(y) for all x, y."""
    A, B = f.source, f.target
    tb = B.table
    ti, fi = t.images, f.images
    if ti[A.identity] != B.identity:
        return False
    for x in range(A.size):
        row = A.table[x]
        tx, fx = ti[x], fi[x]
        left_x = tb[tx][fx]
        for y in range(A.size):
            if tb[tb[ti[row[y]]][fx]][fi[y]] != tb[tb[left_x][ti[y]]][fi[y]]:
                return False
    return True


def make_cell(t: ElementMap, f: ElementMap) -> Cell:
    return Cell(f.source, f.target, f, t, add_pointwise(t, f))


def mon_cells(A: FinMonoid, B: FinMonoid) -> list[Cell]:
    """Every cell A => B, ordered by (f, t) lexicographically."""
    out = []
    for f in finmon.enumerate_homs(A, B):
        for t in finmon.all_maps(A, B, pointed=True):
            if is_member(t, f):
                out.append(make_cell(t, f))
    return out


def mon_vcompose(x2: Cell, x1: Cell) -> Cell:
    if x2.dom != x1.cod:
        raise NotChained(f"dom of {x2!r} is not cod of {x1!r}")
    return make_cell(add_pointwise(x2.t, x1.t), x1.dom)


def mon_whisker(u: ElementMap, x: Cell, v: ElementMap) -> Cell:
    if u.source != x.tgt or v.target != x.src:
        raise NotChained(f"cannot whisker {x!r} by {u!r} and {v!r}")
    t = compose(u, compose(x.t, v))
    f = compose(u, compose(x.dom, v))
    cell = make_cell(t, f)
    if not finmon.is_hom(f.source, f.target, cell.cod) or t.images[f.source.identity] != f.target.identity:
        raise InvariantBroken(f"whiskering {x!r} left the structure")
    return cell


class MonCellStructure(CellStructure):
    name = "mon-basic"

    def __init__(self, category: MonoidCategory | None = None):
        self.category = category
        self._cells: dict[tuple, list[Cell]] = {}

    def cells(self, A, B):
        key = (A, B)
        if key not in self._cells:
            self._cells[key] = mon_cells(A, B)
        return self._cells[key]

    def zero(self, f):
        return Cell(f.source, f.target, f, finmon.zero_map(f.source, f.target), f)

    def vcompose(self, x2, x1):
        return mon_vcompose(x2, x1)

    def whisker(self, u, x, v):
        return mon_whisker(u, x, v)


def is_crossed_hom(t: ElementMap, f: ElementMap) -> bool:
    """t(x+y) == t(x) + f(x) + t(y) - f(x) for all x, y (target must be a group)."""
    A, B = f.source, f.target
    if not B.is_group:
        raise NotAGroup(f"{B.name} is not a group")
    tb, inv = B.table, B.inverse
    ti, fi = t.images, f.images
    for x, y in itertools.product(range(A.size), repeat=2):
        rhs = tb[tb[tb[ti[x]][fi[x]]][ti[y]]][inv[fi[x]]]
        if ti[A.table[x][y]] != rhs:
            return False
    return True


def crossed_hom_equiv(B: FinMonoid, t: ElementMap, f: ElementMap) -> bool:
    """Whether cell membership and the crossed-homomorphism identity agree on (t, f)."""
    if not B.is_group:
        raise NotAGroup(f"{B.name} is not a group")
    if t.target != B or f.target != B:
        raise ValueError("t and f must land in B")
    return is_member(t, f) == is_crossed_hom(t, f)


def crossed_hom_table(A: FinMonoid, B: FinMonoid) -> dict:
    """Evaluate both predicates for every (t, f), t ranging over all maps A -> B.

    Vectorized over t; returns counts of pairs, members, and disagreements.
    """
    if not B.is_group:
        raise NotAGroup(f"{B.name} is not a group")
    tab = np.array(B.table)
    inv = np.array(B.inverse)
    T = np.array(list(itertools.product(range(B.size), repeat=A.size)), dtype=np.int64).reshape(-1, A.size)
    pairs = members = disagree = 0
    for f in finmon.enumerate_homs(A, B):
        fi = f.images
        member = T[:, A.identity] == B.identity
        crossed = np.ones(len(T), dtype=bool)
        for x, y in itertools.product(range(A.size), repeat=2):
            xy = A.table[x][y]
            lhs1 = tab[tab[T[:, xy], fi[x]], fi[y]]
            rhs1 = tab[tab[tab[T[:, x], fi[x]], T[:, y]], fi[y]]
            member &= lhs1 == rhs1
            rhs2 = tab[tab[tab[T[:, x], fi[x]], T[:, y]], inv[fi[x]]]
            crossed &= T[:, xy] == rhs2
        pairs += len(T)
        members += int(member.sum())
        disagree += int((member != crossed).sum())
    return {"source": A.name, "target": B.name, "pairs": pairs, "members": members, "disagree": disagree}
