"""2-cell structures over a finite base category and their exhaustive verifier.

A structure supplies, for every pair of objects, a finite set of cells with
``dom``/``cod`` morphisms, identity cells ``zero(f)``, a vertical sum
``vcompose(x2, x1)`` (defined when ``dom(x2) == cod(x1)``) and two-sided
whiskering ``whisker(u, x, v)`` standing for ``u x v``.  None of the laws are
assumed; :func:`verify_structure_axioms` checks them all.

The verifier first tabulates every operation as integer index arrays and then
compares the equations with numpy, so each law is quantified over the whole
context without sampling.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from . import finmon
from .errors import NotChained, NotComposable, TcellError
from .finmon import ElementMap, FinMonoid

# --------------------------------------------------------------------------
# base categories


class MonoidCategory:
    """A finite full subcategory of monoids and homomorphisms.

    ``sources`` optionally restricts the objects allowed as domains of cells,
    giving the bifunctor restricted to ``sources^op x objects``.  Whiskering on
    the right then ranges over homs between sources only.
    """

    def __init__(self, objects: Sequence[FinMonoid], sources: Sequence[FinMonoid] | None = None):
        self.objects = tuple(objects)
        self.sources = tuple(sources) if sources is not None else self.objects
        names = [o.name for o in self.objects]
        if len(set(names)) != len(names) or len({o.name for o in self.sources}) != len(self.sources):
            raise ValueError(f"object names must be unique: {names}")

    def homs(self, A: FinMonoid, B: FinMonoid) -> list[ElementMap]:
        return finmon.enumerate_homs(A, B)

    def compose(self, g: ElementMap, f: ElementMap) -> ElementMap:
        return finmon.compose(g, f)

    def identity(self, A: FinMonoid) -> ElementMap:
        return finmon.identity_map(A)

    def pairs(self) -> list[tuple[FinMonoid, FinMonoid]]:
        return [(A, B) for A in self.sources for B in self.objects]

    def describe(self) -> str:
        if self.sources == self.objects:
            return ",".join(o.name for o in self.objects)
        return ",".join(o.name for o in self.sources) + " -> " + ",".join(o.name for o in self.objects)

    def __repr__(self):
        return f"MonoidCategory({self.describe()})"


Context = MonoidCategory


class OneObjectCategory:
    """A monoid M seen as a category with one object; morphisms are elements of M."""

    def __init__(self, M: FinMonoid):
        self.M = M
        self.objects = (M,)
        self.sources = (M,)

    def homs(self, A, B) -> list[int]:
        return list(range(self.M.size))

    def compose(self, g: int, f: int) -> int:
        return self.M.table[g][f]

    def identity(self, A) -> int:
        return self.M.identity

    def pairs(self):
        return [(self.M, self.M)]

    def describe(self) -> str:
        return f"one-object {self.M.name}"

    def __repr__(self):
        return f"OneObjectCategory({self.M.name})"


# --------------------------------------------------------------------------
# cells and structures


@dataclass(frozen=True)
class Cell:
    """A 2-cell from ``src`` to ``tgt``: dom => cod with a structure-specific middle datum ``t``."""

    src: FinMonoid
    tgt: FinMonoid
    dom: Any
    t: Any
    cod: Any

    def __repr__(self):
        return f"Cell({encode(self.dom)}; {encode(self.t)}; {encode(self.cod)})"


def cell_key(c: Cell):
    """Sort key giving the (dom, payload, cod) lexicographic order."""
    return (_value_key(c.dom), _value_key(c.t), _value_key(c.cod))


def _value_key(v):
    return v.images if isinstance(v, ElementMap) else v


def encode(v):
    """JSON-ready rendering of homs, maps, cells and plain values."""
    if isinstance(v, ElementMap):
        return list(v.images)
    if isinstance(v, Cell):
        return {"src": v.src.name, "tgt": v.tgt.name, "dom": encode(v.dom),
                "t": encode(v.t), "cod": encode(v.cod)}
    if isinstance(v, FinMonoid):
        return v.name
    if isinstance(v, (list, tuple)):
        return [encode(w) for w in v]
    if isinstance(v, dict):
        return {str(k): encode(w) for k, w in v.items()}
    if isinstance(v, np.integer):
        return int(v)
    return v


class CellStructure(ABC):
    """Interface every concrete 2-cell structure realizes."""

    name: str = "structure"
    category: Any = None

    @abstractmethod
    def cells(self, A, B) -> list[Cell]:
        ...

    def dom(self, x: Cell):
        return x.dom

    def cod(self, x: Cell):
        return x.cod

    @abstractmethod
    def zero(self, f) -> Cell:
        ...

    @abstractmethod
    def vcompose(self, x2: Cell, x1: Cell) -> Cell:
        """x2 + x1, defined when dom(x2) == cod(x1)."""

    @abstractmethod
    def whisker(self, u, x: Cell, v) -> Cell:
        """u x v for u: B -> B', x in H(A, B), v: A' -> A."""


class DiscreteStructure(CellStructure):
    """Only identity cells: one cell per morphism."""

    def __init__(self, category):
        self.category = category
        self.name = "discrete"

    def cells(self, A, B):
        return [self.zero_between(A, B, f) for f in self.category.homs(A, B)]

    def zero_between(self, A, B, f):
        return Cell(A, B, f, f, f)

    def zero(self, f):
        A, B = _endpoints(f, self.category)
        return self.zero_between(A, B, f)

    def vcompose(self, x2, x1):
        if x2.dom != x1.cod:
            raise NotChained("discrete cells do not chain")
        return Cell(x1.src, x1.tgt, x1.dom, x1.t, x2.cod)

    def whisker(self, u, x, v):
        c = self.category
        g = c.compose(u, c.compose(x.dom, v))
        return Cell(_endpoints(v, c)[0], _endpoints(u, c)[1], g, g, g)


def _endpoints(f, category):
    if isinstance(f, ElementMap):
        return f.source, f.target
    return category.objects[0], category.objects[0]


# --------------------------------------------------------------------------
# reports


@dataclass
class Violation:
    axiom: str
    witness: dict
    lhs: Any
    rhs: Any

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "witness": encode(self.witness),
                "lhs": encode(self.lhs), "rhs": encode(self.rhs)}


@dataclass
class ViolationReport:
    """Every law failure found; ``total`` keeps counting after ``cap`` stops recording."""

    violations: list[Violation] = field(default_factory=list)
    cap: int | None = None
    total: int = 0
    counts: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return self.total == 0

    def add(self, axiom, witness, lhs, rhs):
        self.total += 1
        self.counts[axiom] += 1
        if self.cap is None or len(self.violations) < self.cap:
            self.violations.append(Violation(axiom, witness, lhs, rhs))

    def room(self) -> bool:
        return self.cap is None or len(self.violations) < self.cap

    def skip(self, axiom, n):
        """Count ``n`` violations that are not recorded because the cap is reached."""
        self.total += n
        self.counts[axiom] += n

    def axioms(self) -> set[str]:
        return {a for a, n in self.counts.items() if n}

    def merge(self, other: "ViolationReport") -> "ViolationReport":
        for v in other.violations:
            self.add(v.axiom, v.witness, v.lhs, v.rhs)
        for a, n in (other.counts - Counter(v.axiom for v in other.violations)).items():
            self.skip(a, n)
        return self

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


# names of every law the structure verifier can report
STRUCTURE_AXIOMS = (
    "cell_dom", "cell_cod",
    "dom_whisker", "cod_whisker", "whisker_zero", "whisker_plus",
    "whisker_functorial", "whisker_unit",
    "zero_dom", "zero_cod", "plus_dom", "plus_cod",
    "plus_unit_left", "plus_unit_right", "plus_assoc",
    "whisker_closed", "zero_closed", "plus_closed",
)


# --------------------------------------------------------------------------
# tabulation


class _Fiber:
    """All tabulated data for one hom-set pair (A, B)."""

    def __init__(self, A, B, homs, cells):
        self.A, self.B = A, B
        self.homs = homs
        self.hidx = {h: i for i, h in enumerate(homs)}
        self.cells = cells
        self.cidx = {c: i for i, c in enumerate(cells)}
        n = len(cells)
        self.dom = np.full(n, -1, dtype=np.int64)
        self.cod = np.full(n, -1, dtype=np.int64)
        self.zero = np.full(len(homs), -1, dtype=np.int64)
        # plus[i, j] = index of cells[i] + cells[j]; -2 when not chained, -1 when outside H
        self.plus = np.full((n, n), -2, dtype=np.int64)


class _Tables:
    def __init__(self, S: CellStructure, ctx, rep: ViolationReport):
        self.S, self.ctx, self.rep = S, ctx, rep
        self.fibers: dict[tuple, _Fiber] = {}
        self._homs: dict[tuple, tuple[list, dict]] = {}
        self._comp: dict[tuple, np.ndarray] = {}
        for A, B in ctx.pairs():
            self.fibers[(A, B)] = self._fiber(A, B)

    def homs(self, A, B):
        key = (A, B)
        if key not in self._homs:
            hs = list(self.ctx.homs(A, B))
            self._homs[key] = (hs, {h: i for i, h in enumerate(hs)})
        return self._homs[key]

    def comp(self, X, Y, Z) -> np.ndarray:
        """comp[g, f] = index of g . f in homs(X, Z) for f: X -> Y, g: Y -> Z."""
        key = (X, Y, Z)
        if key not in self._comp:
            fs, _ = self.homs(X, Y)
            gs, _ = self.homs(Y, Z)
            _, hz = self.homs(X, Z)
            table = np.empty((len(gs), len(fs)), dtype=np.int64)
            for i, g in enumerate(gs):
                for j, f in enumerate(fs):
                    table[i, j] = hz[self.ctx.compose(g, f)]
            self._comp[key] = table
        return self._comp[key]

    def _fiber(self, A, B) -> _Fiber:
        S, rep = self.S, self.rep
        homs, _ = self.homs(A, B)
        fb = _Fiber(A, B, homs, list(S.cells(A, B)))
        for i, x in enumerate(fb.cells):
            d, c = S.dom(x), S.cod(x)
            fb.dom[i] = fb.hidx.get(d, -1)
            fb.cod[i] = fb.hidx.get(c, -1)
            if fb.dom[i] < 0:
                rep.add("cell_dom", {"objects": [A, B], "x": x}, d, None)
            if fb.cod[i] < 0:
                rep.add("cell_cod", {"objects": [A, B], "x": x}, c, None)
        for k, f in enumerate(homs):
            z = S.zero(f)
            fb.zero[k] = fb.cidx.get(z, -1)
            if fb.zero[k] < 0:
                rep.add("zero_closed", {"objects": [A, B], "f": f}, z, None)
            if S.dom(z) != f:
                rep.add("zero_dom", {"objects": [A, B], "f": f}, S.dom(z), f)
            if S.cod(z) != f:
                rep.add("zero_cod", {"objects": [A, B], "f": f}, S.cod(z), f)
        by_dom: dict[int, list[int]] = {}
        for i in range(len(fb.cells)):
            by_dom.setdefault(int(fb.dom[i]), []).append(i)
        for j, x in enumerate(fb.cells):
            g = int(fb.cod[j])
            if g < 0:
                continue
            for i in by_dom.get(g, ()):
                x2 = fb.cells[i]
                try:
                    r = S.vcompose(x2, x)
                except (TcellError, KeyError, ValueError) as exc:
                    fb.plus[i, j] = -1
                    rep.add("plus_closed", {"objects": [A, B], "x2": x2, "x1": x}, str(exc), None)
                    continue
                ri = fb.cidx.get(r, -1)
                fb.plus[i, j] = ri
                if ri < 0:
                    rep.add("plus_closed", {"objects": [A, B], "x2": x2, "x1": x}, r, None)
                if S.dom(r) != S.dom(x):
                    rep.add("plus_dom", {"objects": [A, B], "x2": x2, "x1": x}, S.dom(r), S.dom(x))
                if S.cod(r) != S.cod(x2):
                    rep.add("plus_cod", {"objects": [A, B], "x2": x2, "x1": x}, S.cod(r), S.cod(x2))
        return fb


# --------------------------------------------------------------------------
# law checks on the tables


def _report_mask(rep, axiom, mask, decode):
    hits = np.argwhere(mask)
    for k, row in enumerate(hits):
        if not rep.room():
            rep.skip(axiom, len(hits) - k)
            break
        witness, lhs, rhs = decode(*(int(i) for i in row))
        rep.add(axiom, witness, lhs, rhs)


def _check_vertical(tb: _Tables, fb: _Fiber):
    rep = tb.rep
    cells = fb.cells
    n = len(cells)
    if n == 0:
        return
    P = fb.plus
    idx = np.arange(n)
    ok_c = fb.cod >= 0
    zc = np.where(ok_c, fb.zero[np.clip(fb.cod, 0, None)], -1) if len(fb.zero) else np.full(n, -1)
    left = np.where(zc >= 0, P[np.clip(zc, 0, None), idx], -3)
    mask = (left >= -1) & (left != idx) & (zc >= 0)

    def dec_left(j):
        r = cells[left[j]] if left[j] >= 0 else None
        return {"objects": [fb.A, fb.B], "x": cells[j]}, r, cells[j]

    _report_mask(rep, "plus_unit_left", mask, dec_left)

    ok_d = fb.dom >= 0
    zd = np.where(ok_d, fb.zero[np.clip(fb.dom, 0, None)], -1) if len(fb.zero) else np.full(n, -1)
    right = np.where(zd >= 0, P[idx, np.clip(zd, 0, None)], -3)
    mask = (right >= -1) & (right != idx) & (zd >= 0)

    def dec_right(j):
        r = cells[right[j]] if right[j] >= 0 else None
        return {"objects": [fb.A, fb.B], "x": cells[j]}, r, cells[j]

    _report_mask(rep, "plus_unit_right", mask, dec_right)

    # x'' + (x' + x) == (x'' + x') + x
    for j in range(n):
        lefts = np.nonzero(P[:, j] >= 0)[0]
        rights = np.nonzero(P[j, :] >= 0)[0]
        if len(lefts) == 0 or len(rights) == 0:
            continue
        ij = P[lefts, j]
        jk = P[j, rights]
        lhs = P[lefts[:, None], np.broadcast_to(jk[None, :], (len(lefts), len(rights)))]
        rhs = P[np.broadcast_to(ij[:, None], (len(lefts), len(rights))), rights[None, :]]
        mask = (lhs >= 0) & (rhs >= 0) & (lhs != rhs)
        if not mask.any():
            continue

        def dec_assoc(a, b, j=j, lefts=lefts, rights=rights, lhs=lhs, rhs=rhs):
            return ({"objects": [fb.A, fb.B], "x3": cells[lefts[a]], "x2": cells[j], "x1": cells[rights[b]]},
                    cells[lhs[a, b]], cells[rhs[a, b]])

        _report_mask(rep, "plus_assoc", mask, dec_assoc)


def _whisker_tables(tb: _Tables):
    """W[(A', A, B, B')][u, x, v] = index of u x v in H(A', B') (-1 if outside)."""
    S, ctx, rep = tb.S, tb.ctx, tb.rep
    out = {}
    for (A, B), fb in tb.fibers.items():
        for B2 in ctx.objects:
            us, _ = tb.homs(B, B2)
            for A2 in ctx.sources:
                vs, _ = tb.homs(A2, A)
                target = tb.fibers[(A2, B2)]
                W = np.full((len(us), len(fb.cells), len(vs)), -1, dtype=np.int64)
                expected = {}
                for ui, u in enumerate(us):
                    for xi, x in enumerate(fb.cells):
                        for vi, v in enumerate(vs):
                            try:
                                r = S.whisker(u, x, v)
                            except (TcellError, KeyError, ValueError) as exc:
                                rep.add("whisker_closed", {"u": u, "x": x, "v": v}, str(exc), None)
                                continue
                            ri = target.cidx.get(r, -1)
                            W[ui, xi, vi] = ri
                            if ri < 0:
                                rep.add("whisker_closed", {"u": u, "x": x, "v": v}, r, None)
                            for side, getter in (("dom", S.dom), ("cod", S.cod)):
                                h = getter(x)
                                key = (side, ui, h, vi)
                                if key not in expected:
                                    expected[key] = ctx.compose(u, ctx.compose(h, v))
                                got = getter(r)
                                if got != expected[key]:
                                    rep.add(f"{side}_whisker", {"u": u, "x": x, "v": v}, got, expected[key])
                out[(A2, A, B, B2)] = W
    return out


def _check_whiskers(tb: _Tables, W: dict):
    ctx, rep = tb.ctx, tb.rep
    for (A2, A, B, B2), Wq in W.items():
        src, tgt = tb.fibers[(A, B)], tb.fibers[(A2, B2)]
        us, _ = tb.homs(B, B2)
        vs, _ = tb.homs(A2, A)
        if Wq.size == 0 and len(src.homs) == 0:
            continue
        # unit
        if A2 == A and B2 == B:
            ui = us.index(ctx.identity(B))
            vi = vs.index(ctx.identity(A))
            got = Wq[ui, :, vi]
            mask = got != np.arange(len(src.cells))

            def dec_unit(xi, got=got, src=src, ui=ui, vi=vi):
                r = tgt.cells[got[xi]] if got[xi] >= 0 else None
                return {"u": us[ui], "x": src.cells[xi], "v": vs[vi]}, r, src.cells[xi]

            _report_mask(rep, "whisker_unit", mask, dec_unit)

        # u 0(f) v == 0(u f v)
        if len(src.homs) and len(us) and len(vs):
            T = _triple_comp(tb, A2, A, B, B2)
            zf = src.zero
            valid = np.broadcast_to((zf >= 0)[None, :, None], T.shape)
            lhs = np.where(valid, Wq[:, np.clip(zf, 0, None), :], -1)
            rhs = tgt.zero[T]
            mask = valid & (lhs >= 0) & (lhs != rhs)

            def dec_zero(ui, fi, vi, lhs=lhs, rhs=rhs, us=us, vs=vs, src=src, tgt=tgt):
                return ({"u": us[ui], "f": src.homs[fi], "v": vs[vi]},
                        tgt.cells[lhs[ui, fi, vi]], tgt.cells[rhs[ui, fi, vi]] if rhs[ui, fi, vi] >= 0 else None)

            _report_mask(rep, "whisker_zero", mask, dec_zero)

        # u x' v + u x v == u (x' + x) v
        P, P2 = src.plus, tgt.plus
        xp, xq = np.nonzero(P >= 0)
        if len(xp):
            sums = P[xp, xq]
            for ui in range(len(us)):
                a1 = Wq[ui][xp, :]
                a2 = Wq[ui][xq, :]
                lhs = np.where((a1 >= 0) & (a2 >= 0), P2[np.clip(a1, 0, None), np.clip(a2, 0, None)], -3)
                rhs = Wq[ui][sums, :]
                mask = (lhs >= 0) & (rhs >= 0) & (lhs != rhs)

                def dec_plus(k, vi, ui=ui, lhs=lhs, rhs=rhs, us=us, vs=vs, src=src, tgt=tgt):
                    return ({"u": us[ui], "x2": src.cells[xp[k]], "x1": src.cells[xq[k]], "v": vs[vi]},
                            tgt.cells[lhs[k, vi]], tgt.cells[rhs[k, vi]])

                _report_mask(rep, "whisker_plus", mask, dec_plus)

        # u' (u x v) v' == (u' u) x (v v')
        for B3 in ctx.objects:
            for A3 in ctx.sources:
                W2 = W[(A3, A2, B2, B3)]
                W3 = W[(A3, A, B, B3)]
                u2s, _ = tb.homs(B2, B3)
                v2s, _ = tb.homs(A3, A2)
                if not (len(u2s) and len(v2s) and len(us) and len(vs) and len(src.cells)):
                    continue
                HC = tb.comp(B, B2, B3)      # [u', u]
                VC = tb.comp(A3, A2, A)      # [v, v']
                nx = len(src.cells)
                xs = np.arange(nx)[None, :, None, None]
                for u2i in range(len(u2s)):
                    inner = Wq                                  # (nu, nx, nv)
                    ok = inner >= 0
                    lhs = W2[u2i][np.clip(inner, 0, None), :]    # (nu, nx, nv, nv')
                    lhs = np.where(ok[..., None], lhs, -3)
                    rhs = W3[HC[u2i][:, None, None, None], xs, VC[None, None, :, :]]
                    mask = (lhs >= 0) & (rhs >= 0) & (lhs != rhs)
                    if not mask.any():
                        continue

                    def dec_fun(ui, xi, vi, v2i, u2i=u2i, lhs=lhs, rhs=rhs, us=us, vs=vs,
                                u2s=u2s, v2s=v2s, src=src, B3=B3, A3=A3):
                        out = tb.fibers[(A3, B3)]
                        return ({"u2": u2s[u2i], "u": us[ui], "x": src.cells[xi], "v": vs[vi], "v2": v2s[v2i]},
                                out.cells[lhs[ui, xi, vi, v2i]], out.cells[rhs[ui, xi, vi, v2i]])

                    _report_mask(rep, "whisker_functorial", mask, dec_fun)


def _triple_comp(tb: _Tables, A2, A, B, B2) -> np.ndarray:
    """T[u, f, v] = index of u f v in homs(A2, B2)."""
    inner = tb.comp(A2, A, B)    # [f, v] -> f v in homs(A2, B)
    outer = tb.comp(A2, B, B2)   # [u, g] -> u g in homs(A2, B2)
    return outer[:, inner]  # (nu, nf, nv)


def verify_structure_axioms(S: CellStructure, ctx=None, cap: int | None = None) -> ViolationReport:
    """Exhaustively check every law of a 2-cell structure over ``ctx``.

    ``cap`` limits how many violations are recorded; the search always runs to
    completion and ``report.total`` counts everything found.
    """
    ctx = ctx if ctx is not None else S.category
    rep = ViolationReport(cap=cap)
    tb = _Tables(S, ctx, rep)
    for fb in tb.fibers.values():
        _check_vertical(tb, fb)
    W = _whisker_tables(tb)
    _check_whiskers(tb, W)
    return rep


# --------------------------------------------------------------------------
# naturality and horizontal composition


def _ctx(S, ctx):
    return ctx if ctx is not None else S.category


def interchange_candidates(S: CellStructure, x: Cell, y: Cell, ctx=None) -> tuple[Cell, Cell]:
    """The two candidate horizontal composites of x after y.

    Returns ``(x cod(y) + dom(x) y, cod(x) y + x dom(y))``.
    """
    if y.tgt != x.src:
        raise NotChained(f"{y!r} does not end where {x!r} starts")
    c = _ctx(S, ctx)
    one_X, one_B = c.identity(y.src), c.identity(x.tgt)
    first = S.vcompose(S.whisker(one_B, x, S.cod(y)), S.whisker(S.dom(x), y, one_X))
    second = S.vcompose(S.whisker(S.cod(x), y, one_X), S.whisker(one_B, x, S.dom(y)))
    return first, second


def is_natural_wrt(S: CellStructure, x: Cell, y: Cell, ctx=None) -> bool:
    first, second = interchange_candidates(S, x, y, ctx)
    return first == second


def is_natural(S: CellStructure, x: Cell, ctx=None) -> bool:
    c = _ctx(S, ctx)
    for X in c.sources:
        for y in S.cells(X, x.src):
            if not is_natural_wrt(S, x, y, c):
                return False
    return True


def hcompose(S: CellStructure, x: Cell, y: Cell, ctx=None) -> Cell:
    first, second = interchange_candidates(S, x, y, ctx)
    if first != second:
        raise NotComposable("x is not natural with respect to y", (first, second))
    return first


def chained_pairs(S: CellStructure, ctx=None):
    """Every (x, y) with y: X -> A and x: A -> B, in deterministic order."""
    c = _ctx(S, ctx)
    for A in c.objects:
        if A not in c.sources:
            continue
        for B in c.objects:
            xs = S.cells(A, B)
            for X in c.sources:
                ys = S.cells(X, A)
                for x in xs:
                    for y in ys:
                        yield x, y


@dataclass
class InterchangeCounterexample:
    x: Cell
    y: Cell
    lhs: Cell
    rhs: Cell

    def to_json(self) -> dict:
        return {"x": encode(self.x), "y": encode(self.y), "lhs": encode(self.lhs), "rhs": encode(self.rhs)}


def find_interchange_counterexample(S: CellStructure, ctx=None) -> InterchangeCounterexample | None:
    for x, y in chained_pairs(S, ctx):
        first, second = interchange_candidates(S, x, y, ctx)
        if first != second:
            return InterchangeCounterexample(x, y, first, second)
    return None


# --------------------------------------------------------------------------
# structure morphisms


@dataclass
class CellMorphism:
    """Component maps between two structures over the same context."""

    source: CellStructure
    target: CellStructure
    component: Callable[[Cell], Cell]
    name: str = "tau"

    def __call__(self, x: Cell) -> Cell:
        return self.component(x)


def identity_morphism(S: CellStructure) -> CellMorphism:
    return CellMorphism(S, S, lambda x: x, "identity")


def verify_cell_morphism(m: CellMorphism, ctx=None, cap: int | None = None) -> ViolationReport:
    S, T = m.source, m.target
    c = _ctx(S, ctx)
    rep = ViolationReport(cap=cap)
    images: dict[tuple, dict] = {}
    targets: dict[tuple, set] = {}
    for A, B in c.pairs():
        targets[(A, B)] = set(T.cells(A, B))
        img = images[(A, B)] = {}
        for x in S.cells(A, B):
            y = m(x)
            img[x] = y
            if y not in targets[(A, B)]:
                rep.add("tau_closed", {"x": x}, y, None)
            if T.dom(y) != S.dom(x):
                rep.add("tau_dom", {"x": x}, T.dom(y), S.dom(x))
            if T.cod(y) != S.cod(x):
                rep.add("tau_cod", {"x": x}, T.cod(y), S.cod(x))
        for f in c.homs(A, B):
            lhs, rhs = m(S.zero(f)), T.zero(f)
            if lhs != rhs:
                rep.add("tau_zero", {"f": f}, lhs, rhs)
        cells = S.cells(A, B)
        for x2, x1 in itertools.product(cells, repeat=2):
            if S.dom(x2) != S.cod(x1):
                continue
            lhs = m(S.vcompose(x2, x1))
            try:
                rhs = T.vcompose(img[x2], img[x1])
            except (TcellError, KeyError, ValueError) as exc:
                rep.add("tau_plus", {"x2": x2, "x1": x1}, lhs, str(exc))
                continue
            if lhs != rhs:
                rep.add("tau_plus", {"x2": x2, "x1": x1}, lhs, rhs)
    for A, B in c.pairs():
        for B2 in c.objects:
            for A2 in c.sources:
                for u in c.homs(B, B2):
                    for v in c.homs(A2, A):
                        for x in S.cells(A, B):
                            lhs = m(S.whisker(u, x, v))
                            rhs = T.whisker(u, images[(A, B)][x], v)
                            if lhs != rhs:
                                rep.add("tau_whisker", {"u": u, "x": x, "v": v}, lhs, rhs)
    return rep
