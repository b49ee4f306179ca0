"""Parameterized 2-cell structures from ternary-relation data (B, R, m, e).

A :class:`BlaStructure` on a monoid B is a relation ``R`` on B^3, a partial
ternary operation ``m`` defined on ``R`` and an endomap ``e``.  Cells A => B are
column vectors ``[f; t; g]`` of two homomorphisms and a set map such that
``<t, f, e f>`` and ``<e g, g, t>`` land in ``R`` pointwise.  A family of such
vectors becomes a 2-cell structure with

    dom = f,  cod = g,  zero(f) = [f; e f; f],
    [g; t'; h] + [f; t; g] = [f; m<t', g, t>; h],
    u [f; t; g] v = [u f v; u t v; u g v].

"Factors through R" is read pointwise on elements throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from . import finmon
from .cellcore import Cell, CellStructure, MonoidCategory, ViolationReport
from .errors import BlaError, Cond1Violated, Cond2Violated, UnknownCase
from .finmon import ElementMap, FinMonoid, compose

Triple = tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class BlaStructure:
    B: FinMonoid
    R: frozenset
    m: Mapping[Triple, int]
    e: tuple[int, ...]
    name: str = "custom"

    def apply(self, a: int, b: int, c: int) -> int:
        return self.m[(a, b, c)]

    def m_array(self) -> np.ndarray:
        """m as an n x n x n array with -1 outside R."""
        n = self.B.size
        arr = np.full((n, n, n), -1, dtype=np.int64)
        for k, v in self.m.items():
            arr[k] = v
        return arr

    def to_json(self) -> dict:
        R = sorted(self.R)
        return {"monoid": self.B.name, "R": [list(r) for r in R],
                "m": [[*r, self.m[r]] for r in R], "e": list(self.e)}


def validate_bla(B: FinMonoid, R, m, e, name: str = "custom") -> BlaStructure:
    """Check (B, R, m, e) and return it; raises on the first violated condition."""
    n = B.size
    R = frozenset(tuple(r) for r in R)
    for r in R:
        if len(r) != 3 or not all(isinstance(b, int) and 0 <= b < n for b in r):
            raise BlaError(f"triple {r} is not in B^3", r)
    e = tuple(e)
    if len(e) != n or not all(0 <= b < n for b in e):
        raise BlaError("e must be a total map B -> B", ())
    m = dict(m)
    for r in R:
        if r not in m:
            raise BlaError(f"m is undefined at {r}", r)
        if not 0 <= m[r] < n:
            raise BlaError(f"m{r} = {m[r]} is not in B", r)
    extra = set(m) - R
    if extra:
        raise BlaError(f"m is defined outside R at {min(extra)}", min(extra))
    for b in range(n):
        if (e[b], b, e[b]) not in R:
            raise Cond2Violated(f"(e{b}, {b}, e{b}) is not in R", (b,))
    for b1, b2, b3 in itertools.product(range(n), repeat=3):
        if (b1, b2, e[b2]) in R and (e[b2], b2, b3) in R and (b1, b2, b3) not in R:
            raise Cond1Violated(f"({b1}, {b2}, {b3}) should be in R", (b1, b2, b3))
    return BlaStructure(B, R, m, e, name)


def bla_from_formula(B: FinMonoid, R, m: Callable[[int, int, int], int], e: Callable[[int], int],
                     name: str = "custom") -> BlaStructure:
    R = list(R)
    return validate_bla(B, R, {r: m(*r) for r in R}, [e(b) for b in range(B.size)], name)


def full_relation(B: FinMonoid):
    return itertools.product(range(B.size), repeat=3)


def mon_default_bla(B: FinMonoid) -> BlaStructure:
    """R = B^3, m(b1, b2, b3) = b1 + b3, e constantly the unit."""
    return bla_from_formula(B, full_relation(B), lambda a, b, c: B.op(a, c), lambda b: B.identity, "mon-default")


def maltsev_bla(B: FinMonoid) -> BlaStructure:
    """Groups only: e = id, m(b1, b2, b3) = b1 - b2 + b3."""
    _need_group(B)
    return bla_from_formula(B, full_relation(B), lambda a, b, c: B.sum(a, B.neg(b), c), lambda b: b, "maltsev")


def inverse_bla(B: FinMonoid) -> BlaStructure:
    """Groups only: e = negation, m(b1, b2, b3) = b1 + b2 + b3."""
    _need_group(B)
    return bla_from_formula(B, full_relation(B), lambda a, b, c: B.sum(a, b, c), B.neg, "inverse")


def diagonal_bla(B: FinMonoid) -> BlaStructure:
    """R the diagonal, m the common value, e = id; yields the discrete structure."""
    return bla_from_formula(B, [(b, b, b) for b in range(B.size)], lambda a, b, c: b, lambda b: b, "diagonal")


def projection_bla(B: FinMonoid) -> BlaStructure:
    """R = B^3, m the middle projection, e = id."""
    return bla_from_formula(B, full_relation(B), lambda a, b, c: b, lambda b: b, "pi2")


def _need_group(B):
    if not B.is_group:
        raise BlaError(f"{B.name} is not a group", ())


BlaAssignment = Callable[[FinMonoid], BlaStructure]


def assignment(factory: Callable[[FinMonoid], BlaStructure]) -> BlaAssignment:
    """Memoize a per-object bla factory so each object keeps one structure."""
    cache: dict[FinMonoid, BlaStructure] = {}

    def assign(B: FinMonoid) -> BlaStructure:
        if B not in cache:
            cache[B] = factory(B)
        return cache[B]

    assign.__name__ = getattr(factory, "__name__", "assign")
    return assign


def fixed_assignment(blas: Mapping[str, BlaStructure]) -> BlaAssignment:
    """Use explicitly given structures, keyed by monoid name."""

    def assign(B: FinMonoid) -> BlaStructure:
        try:
            return blas[B.name]
        except KeyError:
            raise BlaError(f"no bla structure given for {B.name}", ()) from None

    return assign


# --------------------------------------------------------------------------
# morphisms compatible with the bla data


def preserves(u: ElementMap, src: BlaStructure, tgt: BlaStructure) -> bool:
    """e' u == u e and u carries R into R' commuting with m."""
    ui = u.images
    if any(tgt.e[ui[b]] != ui[src.e[b]] for b in range(src.B.size)):
        return False
    for r in src.R:
        ur = (ui[r[0]], ui[r[1]], ui[r[2]])
        if ur not in tgt.R or tgt.m[ur] != ui[src.m[r]]:
            return False
    return True


# --------------------------------------------------------------------------
# column-vector cells


def in_hr(bla: BlaStructure, f: ElementMap, t: ElementMap, g: ElementMap) -> bool:
    e, R = bla.e, bla.R
    fi, ti, gi = f.images, t.images, g.images
    for a in range(len(fi)):
        if (ti[a], fi[a], e[fi[a]]) not in R:
            return False
        if (e[gi[a]], gi[a], ti[a]) not in R:
            return False
    return True


def hr_cells(assign: BlaAssignment, A: FinMonoid, B: FinMonoid) -> list[Cell]:
    """Every [f; t; g] in H_R(A, B): f, g homs, t any map, both triples pointwise in R."""
    bla = assign(B)
    homs = finmon.enumerate_homs(A, B)
    maps = list(finmon.all_maps(A, B))
    out = []
    for f in homs:
        for t in maps:
            for g in homs:
                if in_hr(bla, f, t, g):
                    out.append(Cell(A, B, f, t, g))
    return out


@dataclass(frozen=True)
class CellFamily:
    """A sub-family H(A, B) of H_R(A, B) given by a membership predicate."""

    name: str
    contains: Callable[[Cell], bool]
    assignment: BlaAssignment | None = None
    description: str = ""


class BlaCellStructure(CellStructure):
    def __init__(self, assign: BlaAssignment, family: CellFamily, category: MonoidCategory | None = None):
        self.assign = assign
        self.family = family
        self.category = category
        self.name = family.name
        self._cells: dict[tuple, list[Cell]] = {}

    def cells(self, A, B):
        key = (A, B)
        if key not in self._cells:
            self._cells[key] = [c for c in hr_cells(self.assign, A, B) if self.family.contains(c)]
        return self._cells[key]

    def zero(self, f):
        e = self.assign(f.target).e
        ef = finmon._trusted(f.source, f.target, tuple(e[b] for b in f.images))
        return Cell(f.source, f.target, f, ef, f)

    def vcompose(self, x2, x1):
        if x2.dom != x1.cod:
            raise BlaError("cells do not chain", ())
        m = self.assign(x1.tgt).m
        g = x1.cod.images
        t = tuple(m[(a, b, c)] for a, b, c in zip(x2.t.images, g, x1.t.images))
        return Cell(x1.src, x1.tgt, x1.dom, finmon._trusted(x1.src, x1.tgt, t), x2.cod)

    def whisker(self, u, x, v):
        return Cell(v.source, u.target,
                    compose(u, compose(x.dom, v)), compose(u, compose(x.t, v)), compose(u, compose(x.cod, v)))


def build_structure(assign: BlaAssignment, family: CellFamily, ctx: MonoidCategory | None = None) -> BlaCellStructure:
    return BlaCellStructure(assign, family, ctx)


# --------------------------------------------------------------------------
# catalog


def _t_zero(c: Cell) -> bool:
    return all(b == c.tgt.identity for b in c.t.images)


def _g_is_t_plus_f(c: Cell) -> bool:
    return c.cod == finmon.add_pointwise(c.t, c.dom)


def _g_t_is_t_f(c: Cell) -> bool:
    return finmon.add_pointwise(c.cod, c.t) == finmon.add_pointwise(c.t, c.dom)


def _everything(c: Cell) -> bool:
    return True


_MON_DEFAULT = assignment(mon_default_bla)
_MALTSEV = assignment(maltsev_bla)
_INVERSE = assignment(inverse_bla)
_DIAGONAL = assignment(diagonal_bla)
_PROJECTION = assignment(projection_bla)

CATALOG: dict[str, CellFamily] = {
    "case1": CellFamily("case1", _everything, _MON_DEFAULT, "all [f; t; g]"),
    "case2": CellFamily("case2", lambda c: finmon.is_constant(c.t), _MON_DEFAULT, "t constant"),
    "case3": CellFamily("case3", _g_is_t_plus_f, _MON_DEFAULT, "g = t + f"),
    "case4": CellFamily("case4", _t_zero, _MON_DEFAULT, "t = 0 (co-discrete)"),
    "case5": CellFamily("case5", lambda c: _t_zero(c) and c.cod == c.dom, _MON_DEFAULT, "t = 0 and g = f (discrete)"),
    "case6": CellFamily("case6", _g_t_is_t_f, _MON_DEFAULT, "g + t = t + f"),
    "case7": CellFamily("case7", lambda c: _g_t_is_t_f(c) and finmon.is_constant(c.t), _MON_DEFAULT,
                        "g + t = t + f and t constant"),
    "maltsev": CellFamily("maltsev", _everything, _MALTSEV, "groups: e = id, m = b1 - b2 + b3"),
    "inverse": CellFamily("inverse", _everything, _INVERSE, "groups: e = -b, m = b1 + b2 + b3"),
    "discrete": CellFamily("discrete", _everything, _DIAGONAL, "diagonal R, m = projection"),
    "codiscrete-pi2": CellFamily("codiscrete-pi2", _everything, _PROJECTION, "R = B^3, m = middle projection, e = id"),
}
CATALOG["mon-default"] = CellFamily("mon-default", _everything, _MON_DEFAULT, "alias of case1")


def catalog(case_id: str) -> CellFamily:
    try:
        return CATALOG[case_id]
    except KeyError:
        raise UnknownCase(f"unknown catalog case {case_id!r}; known: {', '.join(CATALOG)}") from None


def catalog_structure(case_id: str, ctx: MonoidCategory | None = None) -> BlaCellStructure:
    fam = catalog(case_id)
    return build_structure(fam.assignment, fam, ctx)


# --------------------------------------------------------------------------
# the six conditions


SIX_CONDITIONS = ("cond1", "cond2", "cond3", "cond4", "cond5", "cond6")


def check_six_conditions(assign: BlaAssignment, family: CellFamily, ctx: MonoidCategory,
                         cap: int | None = None) -> ViolationReport:
    """Check whether a family of column vectors yields a 2-cell structure.

    cond1  closure under whiskering by context homs
    cond2  dom and cod are homs compatible with the bla data
    cond3  every zero [f; e f; f] is present
    cond4  closure under vertical sum
    cond5  m<t, f, e f> == t == m<e g, g, t>
    cond6  m<t'', h, m<t', g, t>> == m<m<t'', h, t'>, g, t>
    """
    rep = ViolationReport(cap=cap)
    S = build_structure(assign, family, ctx)
    members: dict[tuple, set] = {}
    for A, B in ctx.pairs():
        members[(A, B)] = set(S.cells(A, B))

    for A, B in ctx.pairs():
        bla = assign(B)
        homs = finmon.enumerate_homs(A, B)
        cells = S.cells(A, B)
        hom_set = set(homs)

        # cond2
        for x in cells:
            for side, h in (("dom", x.dom), ("cod", x.cod)):
                if h not in hom_set:
                    rep.add("cond2", {"x": x, "side": side}, h, "not a hom")
        # the assignment itself must send homs to bla morphisms
        for B2 in ctx.objects:
            for u in finmon.enumerate_homs(B, B2):
                if not preserves(u, bla, assign(B2)):
                    rep.add("bla_morphism", {"u": u}, u, "does not preserve (R, m, e)")

        # cond3
        for f in homs:
            z = S.zero(f)
            if z not in members[(A, B)]:
                rep.add("cond3", {"f": f}, z, None)

        # cond1
        for B2 in ctx.objects:
            us = finmon.enumerate_homs(B, B2)
            for A2 in ctx.sources:
                vs = finmon.enumerate_homs(A2, A)
                target = members[(A2, B2)]
                for x in cells:
                    for u in us:
                        for v in vs:
                            w = S.whisker(u, x, v)
                            if w not in target:
                                rep.add("cond1", {"u": u, "x": x, "v": v}, w, None)

        # cond4: chained pairs must sum inside H (m defined and result in the family)
        by_dom: dict = {}
        for x in cells:
            by_dom.setdefault(x.dom, []).append(x)
        for x1 in cells:
            for x2 in by_dom.get(x1.cod, ()):
                try:
                    s = S.vcompose(x2, x1)
                except KeyError as exc:
                    rep.add("cond4", {"x2": x2, "x1": x1}, f"m undefined at {exc}", None)
                    continue
                if s not in members[(A, B)]:
                    rep.add("cond4", {"x2": x2, "x1": x1}, s, None)

        _check_m_laws(rep, bla, cells, A, B)
    return rep


def _check_m_laws(rep: ViolationReport, bla: BlaStructure, cells: list[Cell], A, B):
    """cond5 and cond6, vectorized over the middle components."""
    if not cells:
        return
    M = bla.m_array()
    e = np.array(bla.e)
    F = np.array([x.dom.images for x in cells], dtype=np.int64)
    T = np.array([x.t.images for x in cells], dtype=np.int64)
    G = np.array([x.cod.images for x in cells], dtype=np.int64)

    left = M[T, F, e[F]]
    right = M[e[G], G, T]
    for k in np.nonzero((left != T).any(axis=1))[0]:
        rep.add("cond5", {"x": cells[k], "side": "m<t, f, e f>"}, _vec(left[k]), cells[k].t)
    for k in np.nonzero((right != T).any(axis=1))[0]:
        rep.add("cond5", {"x": cells[k], "side": "m<e g, g, t>"}, _vec(right[k]), cells[k].t)

    # group by (dom, cod) to enumerate composable triples
    hom_ids: dict = {}
    dom_id = np.array([hom_ids.setdefault(x.dom, len(hom_ids)) for x in cells])
    cod_id = np.array([hom_ids.setdefault(x.cod, len(hom_ids)) for x in cells])
    buckets: dict[tuple[int, int], np.ndarray] = {}
    for key in set(zip(dom_id.tolist(), cod_id.tolist())):
        buckets[key] = np.nonzero((dom_id == key[0]) & (cod_id == key[1]))[0]
    keys = sorted(buckets)
    by_start: dict[int, list] = {}
    for d, c in keys:
        by_start.setdefault(d, []).append(c)
    for f_id, g_id in keys:
        I1 = buckets[(f_id, g_id)]
        for h_id in by_start.get(g_id, ()):
            I2 = buckets[(g_id, h_id)]
            for k_id in by_start.get(h_id, ()):
                I3 = buckets[(h_id, k_id)]
                g = G[I1[0]]
                h = G[I2[0]]
                t1 = T[I1][None, None, :, :]
                t2 = T[I2][None, :, None, :]
                t3 = T[I3][:, None, None, :]
                inner = M[t2, g, t1]                       # m<t', g, t>
                lhs = M[t3, h, np.where(inner < 0, 0, inner)]
                outer = M[t3, h, t2]                       # m<t'', h, t'>
                rhs = M[np.where(outer < 0, 0, outer), g, t1]
                lhs = np.where(inner < 0, -1, lhs)
                rhs = np.where(outer < 0, -1, rhs)
                bad = (lhs != rhs).any(axis=-1)
                hits = np.argwhere(bad)
                for n_, (a, b, c) in enumerate(hits):
                    if not rep.room():
                        rep.skip("cond6", len(hits) - n_)
                        break
                    rep.add("cond6", {"x3": cells[I3[a]], "x2": cells[I2[b]], "x1": cells[I1[c]]},
                            _vec(lhs[a, b, c]), _vec(rhs[a, b, c]))


def _vec(a) -> list[int]:
    return [int(v) for v in a]


def failed_conditions(rep: ViolationReport) -> set[str]:
    return rep.axioms() & set(SIX_CONDITIONS)


# --------------------------------------------------------------------------
# case 3 versus the basic monoid structure


def case3_to_moncell(c: Cell) -> Cell:
    """[f; t; t + f] -> (t, f), recomputing the codomain from t and f."""
    return Cell(c.src, c.tgt, c.dom, c.t, finmon.add_pointwise(c.t, c.dom))


def moncell_to_case3(c: Cell) -> Cell:
    """(t, f) -> [f; t; t + f]."""
    return Cell(c.src, c.tgt, c.dom, c.t, finmon.add_pointwise(c.t, c.dom))


def equiv_case3_moncell(ctx: MonoidCategory, cap: int | None = None) -> ViolationReport:
    """The map (t, f) -> [f; t; t + f] is a bijection commuting with every structure operation."""
    from .moncell import MonCellStructure

    mon = MonCellStructure(ctx)
    c3 = catalog_structure("case3", ctx)
    rep = ViolationReport(cap=cap)
    for A, B in ctx.pairs():
        mcells = mon.cells(A, B)
        ccells = c3.cells(A, B)
        image = [moncell_to_case3(x) for x in mcells]
        if len(set(image)) != len(mcells):
            rep.add("bijection_injective", {"objects": [A, B]}, len(set(image)), len(mcells))
        if set(image) != set(ccells):
            missing = set(ccells) - set(image)
            extra = set(image) - set(ccells)
            rep.add("bijection_onto", {"objects": [A, B]},
                    sorted(map(repr, extra))[:3], sorted(map(repr, missing))[:3])
        back = [case3_to_moncell(y) for y in ccells]
        if set(back) != set(mcells):
            rep.add("bijection_inverse", {"objects": [A, B]}, len(set(back) & set(mcells)), len(mcells))
        for x in mcells:
            y = moncell_to_case3(x)
            if c3.dom(y) != mon.dom(x):
                rep.add("commute_dom", {"x": x}, c3.dom(y), mon.dom(x))
            if c3.cod(y) != mon.cod(x):
                rep.add("commute_cod", {"x": x}, c3.cod(y), mon.cod(x))
        for f in finmon.enumerate_homs(A, B):
            if moncell_to_case3(mon.zero(f)) != c3.zero(f):
                rep.add("commute_zero", {"f": f}, moncell_to_case3(mon.zero(f)), c3.zero(f))
        for x2 in mcells:
            for x1 in mcells:
                if mon.dom(x2) != mon.cod(x1):
                    continue
                lhs = moncell_to_case3(mon.vcompose(x2, x1))
                rhs = c3.vcompose(moncell_to_case3(x2), moncell_to_case3(x1))
                if lhs != rhs:
                    rep.add("commute_plus", {"x2": x2, "x1": x1}, lhs, rhs)
        for B2 in ctx.objects:
            for A2 in ctx.sources:
                for u in finmon.enumerate_homs(B, B2):
                    for v in finmon.enumerate_homs(A2, A):
                        for x in mcells:
                            lhs = moncell_to_case3(mon.whisker(u, x, v))
                            rhs = c3.whisker(u, moncell_to_case3(x), v)
                            if lhs != rhs:
                                rep.add("commute_whisker", {"u": u, "x": x, "v": v}, lhs, rhs)
    return rep
